#pragma once

#include "socdc/types.hpp"

#include <optional>

namespace socdc {

// Helpers for the canonical second-order cone K = { x : ||x_tilde|| <= x_n }
// with x_tilde = (x_1, ..., x_{n-1}).

inline double soc_slack(const Vector& x) {
  const Index n = x.size();
  return x[n - 1] - x.head(n - 1).norm();
}

inline bool soc_contains(const Vector& x, double tol = kDefaultTol) {
  return soc_slack(x) >= -tol * std::max(1.0, x.norm());
}

inline bool soc_contains_interior(const Vector& x, double tol = kDefaultTol) {
  return soc_slack(x) > tol * std::max(1.0, x.norm());
}

// J = Diag(1, ..., 1, -1), so that K u int(-K) ... = { x'Jx <= 0 }.
inline SymMatrix soc_J(Index n) {
  Vector d = Vector::Ones(n);
  d[n - 1] = -1.0;
  return SymMatrix::Diagonal(d);
}

// Reflection -Jh = (-h_tilde; h_n); spans K ∩ h-perp when h ∈ bd(K).
inline Vector soc_reflect(const Vector& h) {
  Vector r = -h;
  r[h.size() - 1] = h[h.size() - 1];
  return r;
}

enum class SectionKind { Ellipsoid, Paraboloid, Hyperboloid };

std::string to_string(SectionKind k);

// Conic-section type of K ∩ { h'x = 1 }: ellipsoids have h interior to K (up
// to sign), paraboloids have h on the boundary, hyperboloids have h outside
// both cones. Classified with a tolerance band, Paraboloid on the band.
SectionKind classify_section(const Vector& h, double tol = kDefaultTol);

// Existence of beta1, beta2 >= 0 with beta1 c1 + c2 in -K and
// beta2 c1 + c2 in K. Both memberships reduce to one quadratic inequality in
// beta plus a linear sign condition, solved in closed form.
struct BetaResult {
  bool holds = false;
  double beta1 = 0.0;
  double beta2 = 0.0;
};

BetaResult beta_sufficiency(const Vector& c1, const Vector& c2,
                            double tol = kDefaultTol);

}  // namespace socdc
