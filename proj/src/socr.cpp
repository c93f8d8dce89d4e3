#include "socdc/socr.hpp"

#include <Eigen/QR>

namespace socdc {

std::string to_string(Region r) {
  switch (r) {
    case Region::InteriorPlus: return "interior_plus";
    case Region::BoundaryPlus: return "boundary_plus";
    case Region::Apex: return "apex";
    case Region::InteriorMinus: return "interior_minus";
    case Region::BoundaryMinus: return "boundary_minus";
    case Region::Outside: return "outside";
  }
  return "unknown";
}

SocrCone SocrCone::from_Bb(Matrix B, Vector b, double tol) {
  const Index n = b.size();
  if (B.rows() != n)
    throw std::invalid_argument("SocrCone: B and b dimensions disagree");
  if (!B.allFinite() || !b.allFinite())
    throw std::invalid_argument("SocrCone: entries must be finite");

  const double col_scale = std::max(
      {1.0, B.size() ? B.cwiseAbs().maxCoeff() : 0.0, b.cwiseAbs().maxCoeff()});
  const double band = tol * col_scale;

  Matrix nonzero(n, 0);
  for (Index j = 0; j < B.cols(); ++j) {
    if (B.col(j).norm() > band) {
      nonzero.conservativeResize(n, nonzero.cols() + 1);
      nonzero.col(nonzero.cols() - 1) = B.col(j);
    }
  }
  if (nonzero.cols() == 0)
    throw std::invalid_argument("SocrCone: B has no nonzero column");
  if (b.norm() <= band) throw std::invalid_argument("SocrCone: b is zero");

  Eigen::ColPivHouseholderQR<Matrix> qr(nonzero);
  qr.setThreshold(band);
  if (qr.rank() != nonzero.cols())
    throw std::invalid_argument(
        "SocrCone: nonzero columns of B are linearly dependent");

  Matrix augmented(n, nonzero.cols() + 1);
  augmented.leftCols(nonzero.cols()) = nonzero;
  augmented.col(nonzero.cols()) = b;
  Eigen::ColPivHouseholderQR<Matrix> qr_aug(augmented);
  qr_aug.setThreshold(band);
  if (qr_aug.rank() != nonzero.cols() + 1)
    throw std::invalid_argument("SocrCone: b lies in Range(B)");

  SocrCone cone;
  cone.B_ = std::move(B);
  cone.b_ = std::move(b);
  cone.A_ = SymMatrix(cone.B_ * cone.B_.transpose() -
                      cone.b_ * cone.b_.transpose());
  cone.scale_ = sym_eigen(cone.A_).scale();
  return cone;
}

SocrCone SocrCone::from_matrix(const SymMatrix& A, std::optional<Vector> orient,
                               double tol) {
  const Spectrum sp = sym_eigen(A);
  const Inertia in = inertia(sp, tol);
  if (in.n_neg != 1 || in.n_pos < 1)
    throw std::invalid_argument(
        "SocrCone: matrix needs exactly one negative eigenvalue and at least "
        "one positive");

  const Index n = A.dim();
  const double band = tol * sp.scale();

  // Ascending order puts the single negative eigenvalue first.
  Vector b = std::sqrt(-sp.eigvals[0]) * sp.eigvecs.col(0);
  Matrix B = Matrix::Zero(n, n - 1);
  for (Index j = 1; j < n; ++j) {
    const double lam = sp.eigvals[j];
    if (lam > band) B.col(j - 1) = std::sqrt(lam) * sp.eigvecs.col(j);
  }

  if (orient) {
    if (orient->size() != n)
      throw std::invalid_argument("SocrCone: orientation dimension mismatch");
    if (b.dot(*orient) < 0) b = -b;
  } else {
    Index imax = 0;
    b.cwiseAbs().maxCoeff(&imax);
    if (b[imax] < 0) b = -b;
  }

  SocrCone cone;
  cone.B_ = std::move(B);
  cone.b_ = std::move(b);
  cone.A_ = A;
  cone.scale_ = sp.scale();
  cone.orientation_ = std::move(orient);
  return cone;
}

double SocrCone::plus_slack(const Vector& x) const {
  if (x.size() != dim())
    throw std::invalid_argument("SocrCone: point dimension mismatch");
  return b_.dot(x) - (B_.transpose() * x).norm();
}

ConeMembership SocrCone::membership(const Vector& x, double tol) const {
  if (x.size() != dim())
    throw std::invalid_argument("SocrCone: point dimension mismatch");
  const double bx = b_.dot(x);
  const double norm_Bx = (B_.transpose() * x).norm();
  const double band = tol * scale_ * std::max(1.0, x.norm());

  ConeMembership m;
  m.slack = bx - norm_Bx;
  if (norm_Bx <= band && std::abs(bx) <= band) {
    m.region = Region::Apex;
  } else if (bx >= 0) {
    if (bx - norm_Bx > band)
      m.region = Region::InteriorPlus;
    else if (bx - norm_Bx >= -band)
      m.region = Region::BoundaryPlus;
    else
      m.region = Region::Outside;
  } else {
    if (-bx - norm_Bx > band)
      m.region = Region::InteriorMinus;
    else if (-bx - norm_Bx >= -band)
      m.region = Region::BoundaryMinus;
    else
      m.region = Region::Outside;
  }
  return m;
}

}  // namespace socdc
