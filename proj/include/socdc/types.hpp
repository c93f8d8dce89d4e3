#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace socdc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Default relative zero tolerance. Every classification threshold in the
// library is tol * scale, where scale = max(1, spectral radius estimate).
inline constexpr double kDefaultTol = 1e-9;

// Imaginary-part filter for real eigenvalues of nonsymmetric matrices.
inline constexpr double kImagTol = 1e-8;

// Dense real symmetric matrix. Symmetrized on construction, S <- (S+S^T)/2,
// so that I/O asymmetry noise never reaches the eigensolvers.
class SymMatrix {
 public:
  SymMatrix() = default;

  explicit SymMatrix(Matrix raw) {
    if (raw.rows() != raw.cols())
      throw std::invalid_argument("SymMatrix: matrix must be square");
    if (!raw.allFinite())
      throw std::invalid_argument("SymMatrix: entries must be finite");
    m_ = 0.5 * (raw + raw.transpose());
  }

  static SymMatrix Zero(Index n) { return SymMatrix(Matrix::Zero(n, n)); }

  static SymMatrix Identity(Index n) {
    return SymMatrix(Matrix::Identity(n, n));
  }

  static SymMatrix Diagonal(const Vector& d) {
    return SymMatrix(Matrix(d.asDiagonal()));
  }

  Index dim() const { return m_.rows(); }
  const Matrix& mat() const { return m_; }
  double operator()(Index i, Index j) const { return m_(i, j); }

  double max_abs() const {
    return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff();
  }

 private:
  Matrix m_;
};

// A_t := (1-t) A0 + t A1, the pencil underlying the whole construction.
inline SymMatrix pencil_at(const SymMatrix& A0, const SymMatrix& A1,
                           double t) {
  if (A0.dim() != A1.dim())
    throw std::invalid_argument("pencil_at: dimension mismatch");
  return SymMatrix((1.0 - t) * A0.mat() + t * A1.mat());
}

// x^T A x, accumulated in double precision.
inline double quad_value(const SymMatrix& A, const Vector& x) {
  if (x.size() != A.dim())
    throw std::invalid_argument("quad_value: dimension mismatch");
  return x.dot(A.mat() * x);
}

}  // namespace socdc
