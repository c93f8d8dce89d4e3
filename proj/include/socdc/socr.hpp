#pragma once

#include "socdc/spectral.hpp"
#include "socdc/types.hpp"

#include <optional>
#include <string>

namespace socdc {

enum class Region {
  InteriorPlus,
  BoundaryPlus,
  Apex,
  InteriorMinus,
  BoundaryMinus,
  Outside,
};

std::string to_string(Region r);

struct ConeMembership {
  Region region;
  double slack;  // b'x - ||B'x||
};

// The cone F+ = { x : ||B^T x|| <= b^T x } together with its negative branch
// F- = -F+. Defining matrix A = B B^T - b b^T has exactly one negative
// eigenvalue and at least one positive one.
class SocrCone {
 public:
  // From explicit (B, b) data. Zero columns of B are allowed; nonzero columns
  // must be linearly independent and b must lie outside Range(B).
  static SocrCone from_Bb(Matrix B, Vector b, double tol = kDefaultTol);

  // From a symmetric matrix with inertia (1 negative, any zero, >=1 positive):
  // column j of B is lambda_j^{1/2} q_j over the nonnegative eigenvalues (zero
  // eigenvalues give zero columns) and b = (-lambda_1)^{1/2} q_1. When orient
  // is supplied and b^T orient < 0, b is negated; without orient, b is flipped
  // so that its largest-magnitude entry is positive.
  static SocrCone from_matrix(const SymMatrix& A,
                              std::optional<Vector> orient = std::nullopt,
                              double tol = kDefaultTol);

  Index dim() const { return b_.size(); }
  const Matrix& B() const { return B_; }
  const Vector& b() const { return b_; }
  const SymMatrix& A() const { return A_; }
  double scale() const { return scale_; }
  const std::optional<Vector>& orientation() const { return orientation_; }

  // b'x - ||B'x||; nonnegative exactly on F+.
  double plus_slack(const Vector& x) const;

  ConeMembership membership(const Vector& x, double tol = kDefaultTol) const;

  bool contains_plus(const Vector& x, double tol = kDefaultTol) const {
    const Region r = membership(x, tol).region;
    return r == Region::InteriorPlus || r == Region::BoundaryPlus ||
           r == Region::Apex;
  }

 private:
  SocrCone() = default;

  Matrix B_;
  Vector b_;
  SymMatrix A_;
  double scale_ = 1.0;
  std::optional<Vector> orientation_;
};

}  // namespace socdc
