#include "socdc/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>

namespace socdc {

Spectrum sym_eigen(const SymMatrix& S) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(S.mat());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("sym_eigen: eigensolver failed to converge");
  // Eigen already returns ascending eigenvalues with orthonormal columns.
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

Inertia inertia(const Spectrum& sp, double tol) {
  if (tol <= 0) throw std::invalid_argument("inertia: tol must be positive");
  const double band = tol * sp.scale();
  Inertia in;
  for (Index i = 0; i < sp.eigvals.size(); ++i) {
    const double lam = sp.eigvals[i];
    if (lam < -band)
      ++in.n_neg;
    else if (lam > band)
      ++in.n_pos;
    else
      ++in.n_zero;
  }
  return in;
}

Inertia inertia(const SymMatrix& S, double tol) {
  return inertia(sym_eigen(S), tol);
}

Matrix nullspace_basis(const SymMatrix& S, double tol) {
  if (tol <= 0)
    throw std::invalid_argument("nullspace_basis: tol must be positive");
  const Spectrum sp = sym_eigen(S);
  const double band = tol * sp.scale();
  std::vector<Index> idx;
  for (Index i = 0; i < sp.eigvals.size(); ++i)
    if (std::abs(sp.eigvals[i]) <= band) idx.push_back(i);
  Matrix Z(S.dim(), static_cast<Index>(idx.size()));
  for (Index j = 0; j < Z.cols(); ++j) Z.col(j) = sp.eigvecs.col(idx[j]);
  return Z;
}

std::vector<double> pencil_real_eigs(const SymMatrix& A0, const SymMatrix& A1,
                                     double tol, double imag_tol) {
  if (A0.dim() != A1.dim())
    throw std::invalid_argument("pencil_real_eigs: dimension mismatch");
  const Spectrum sp0 = sym_eigen(A0);
  const double band = tol * sp0.scale();
  if (sp0.eigvals.cwiseAbs().minCoeff() <= band)
    throw std::invalid_argument("pencil_real_eigs: A0 numerically singular");

  // A0^{-1} A1 through the spectral factors of A0; no explicit inverse.
  const Matrix inv_a0 = sp0.eigvecs *
                        sp0.eigvals.cwiseInverse().asDiagonal() *
                        sp0.eigvecs.transpose();
  Eigen::EigenSolver<Matrix> solver(inv_a0 * A1.mat(), false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("pencil_real_eigs: eigensolver failed");

  std::vector<double> real_eigs;
  const auto& vals = solver.eigenvalues();
  for (Index i = 0; i < vals.size(); ++i) {
    const std::complex<double> lam = vals[i];
    if (std::abs(lam.imag()) <= imag_tol * (1.0 + std::abs(lam.real())))
      real_eigs.push_back(lam.real());
  }
  std::sort(real_eigs.begin(), real_eigs.end());
  return real_eigs;
}

SymMatrix restricted_form(const SymMatrix& S, const Matrix& Z) {
  if (Z.rows() != S.dim())
    throw std::invalid_argument("restricted_form: dimension mismatch");
  return SymMatrix(Z.transpose() * S.mat() * Z);
}

}  // namespace socdc
