#pragma once

#include "socdc/cutgen.hpp"
#include "socdc/socp.hpp"
#include "socdc/types.hpp"

#include <optional>
#include <string>

namespace socdc {

// Block matrix [[Q, g], [g', f]] homogenizing x'Qx + 2g'x + f.
SymMatrix quad_homogenize(const SymMatrix& Q, const Vector& g, double f);

// Outcome of a deletion-hull pipeline. Trivial configurations are named
// instead of producing a cut.
struct HullPipelineResult {
  enum class Kind { Cut, TrivialHull, EmptySet, DegenerateBoundary };

  Kind kind = Kind::Cut;
  std::optional<CutResult> cut;
  std::optional<ConeInstance> instance;
  std::string description;
  double closed_form_s = 0.0;  // the analytic s the pipeline cross-checks
};

// Convex hull of the unit ball minus the open ball B(c, r); n >= 3.
HullPipelineResult ball_deletion_hull(const Vector& c, double r,
                                      double tol = kDefaultTol);

// Convex hull of the unit ball minus { x : x'Ex < r^2 }, E positive definite
// sharing the center; s = 1/(1 + lambda_max[E]).
HullPipelineResult concentric_ellipsoid_hull(const SymMatrix& E, double r,
                                             double tol = kDefaultTol);

// Paraboloid section minus a quadratic with no y_n'-quadratic term;
// requires lambda = lambda_min[Qt] < 0 and 2 g_n <= -lambda; s = 1/(1-lambda).
HullPipelineResult paraboloid_hull(const SymMatrix& Qt, const Vector& g,
                                   double f, double tol = kDefaultTol);

// Trust-region subproblem min { y'Qt y + 2 gt'y : ||y|| <= 1 } with
// lambda_min[Qt] < 0.
struct TrsProblem {
  SymMatrix Qt;  // dimension n-1
  Vector gt;
};

// Lift making lambda_min multiplicity >= 2: Qt is diagonalized (descending,
// so the last entry is the minimum) and the minimum eigenvalue is appended.
struct TrsLift {
  SymMatrix Q;     // diagonal, n x n
  Vector g;        // (V' gt; 0)
  Matrix V;        // Qt = V diag(eigs) V', columns ordered with Q
  Vector qt_eigs;  // descending
};

TrsLift trs_lift(const TrsProblem& p, double tol = kDefaultTol);

struct TrsSolution {
  double value = 0.0;
  Vector y;       // feasible minimizer in the original variables
  double l = 0.0; // staged bounds: min / max of the auxiliary coordinate
  double u = 0.0;
  CutResult cut;
  bool recovery_ok = true;
  std::string note;
};

TrsSolution trs_solve(const TrsProblem& p, double tol = kDefaultTol);

// Closed-form route for convex inputs (lambda_min[Qt] >= 0); used by the CLI
// so convex problems are still answered.
TrsSolution trs_solve_convex(const TrsProblem& p, double tol = kDefaultTol);

}  // namespace socdc
