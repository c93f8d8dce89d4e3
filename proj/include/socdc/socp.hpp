#pragma once

#include "socdc/socr.hpp"
#include "socdc/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace socdc {

// minimize c'x over the intersection of one or two SOCr plus-branches,
// optional linear inequalities a'x >= beta, and the hyperplane h'x = 1.
// Exactly the problems the staged TRS solves and hull relaxations need.
struct SocpProblem {
  Vector c;
  std::vector<SocrCone> cones;  // 1..2 entries
  std::vector<std::pair<Vector, double>> linears;  // a'x >= beta
  Vector h;
};

struct SocpSolution {
  enum class Status { Optimal, Infeasible, Unbounded, MaxIter };

  Status status = Status::MaxIter;
  Vector x;
  double value = 0.0;
  double kkt_residual = 0.0;
  int newton_steps = 0;
  std::vector<double> outer_objectives;  // diagnostics: one per outer iter
};

std::string to_string(SocpSolution::Status s);

// Log-barrier path following on the affine slice of the hyperplane. The
// equality is eliminated by x = x_p + N z with N spanning h-perp, so Newton
// systems stay positive definite. Fixed parameters: mu0 = 1, reduction 0.2,
// Armijo 1e-4 with halving, at most 200 Newton steps, stop at duality
// measure <= 1e-8. x0, when given, must be strictly feasible; otherwise a
// phase-1 max-slack ascent runs first.
SocpSolution solve(const SocpProblem& problem,
                   std::optional<Vector> x0 = std::nullopt);

}  // namespace socdc
