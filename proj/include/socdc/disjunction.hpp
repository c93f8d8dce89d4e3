#pragma once

#include "socdc/cutgen.hpp"
#include "socdc/soc_geometry.hpp"
#include "socdc/types.hpp"

#include <optional>
#include <string>

namespace socdc {

// Two-term linear disjunction c1'x >= d1 ∨ c2'x >= d2 on the canonical SOC,
// normalized so d1, d2 ∈ {0, ±1} with d1 >= d2.
struct Disjunction {
  enum class Case { A, B, C };  // (0,0) / (σ,σ) nonzero / d1 > d2

  Index n = 0;
  Vector c1, c2;
  double d1 = 0.0, d2 = 0.0;
  Case which = Case::A;
  bool weakened = false;  // produced by weaken_case_c; relaxation only

  static Disjunction normalized(Vector c1, double d1, Vector c2, double d2,
                                double tol = kDefaultTol);
};

std::string to_string(Disjunction::Case c);

// Replaces d1 by d2 in a case-(c) disjunction (valid relaxation).
Disjunction weaken_case_c(const Disjunction& disj);

// Result of turning a disjunction into a ConeInstance. Trivial hulls are
// detected up front and reported instead of an instance.
struct DisjunctionBuild {
  enum class Kind { Instance, TrivialHull };

  Kind kind = Kind::Instance;
  std::optional<ConeInstance> instance;
  std::string hull_description;  // for TrivialHull
  std::string warning;
};

// Case (a): A0 = J, A1 = c1 c2' + c2 c1', no hyperplane.
DisjunctionBuild build_homogeneous(const Vector& c1, const Vector& c2,
                                   double tol = kDefaultTol);

// Cases (b)/(c): homogenized (n+1)-dimensional instance with h = e_{n+1}.
DisjunctionBuild build_nonhomogeneous(const Disjunction& disj,
                                      double tol = kDefaultTol);

// The convex fallback set G_s+ used when Condition 6 fails: all x with
// sqrt([(c1-c2)'x - (d1-d2)]^2 - 2((1-s)/s) x'Jx) >= (d1+d2) - (c1+c2)'x.
struct GPlusSet {
  Vector c1, c2;
  double d1 = 0.0, d2 = 0.0;
  double s = 1.0;
  Vector b_s;               // recorded orientation (redundant for G_s+)
  bool strict_mode = false; // include b_s'x >= 0 in membership
};

struct GPlusEval {
  bool member = false;
  double slack = 0.0;
  bool domain_warning = false;  // radicand negative beyond tolerance, x not in K
};

GPlusEval gplus_membership(const GPlusSet& g, const Vector& x,
                           double tol = kDefaultTol);

// Section disjunction rho1'x >= d1 ∨ rho2'x >= d2 on K ∩ {h'x = 1}:
// substitute c_i = rho_i - d_i h and work homogeneously with h attached.
DisjunctionBuild build_section_disjunction(const Vector& h, const Vector& rho1,
                                           double d1, const Vector& rho2,
                                           double d2,
                                           double tol = kDefaultTol);

}  // namespace socdc
