#pragma once

#include "socdc/socr.hpp"
#include "socdc/spectral.hpp"
#include "socdc/types.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace socdc {

// A0 has at least one positive eigenvalue and exactly one negative.
bool check_cond1(const SymMatrix& A0, double tol = kDefaultTol);

// Outcome of the interior-point search for int(F0+ ∩ F1). Instead of the
// two-constraint SDP route, feasibility is decided by the concave dual sweep
// t -> lambda_min((1-t) A0 + t A1) over [0,1]: a nonnegative maximum is a
// certificate that no common strictly negative direction exists (the joint
// range of two quadratic forms is convex), and otherwise a primal point is
// extracted by multi-start projected subgradient descent on
// g(x) = max(x'A0 x, x'A1 x) over the unit sphere.
struct InteriorPointResult {
  enum class Status { Found, InfeasibleCertified, Indeterminate };

  Status status = Status::Indeterminate;
  Vector xbar;             // unit norm, both quadratics < -margin (Found)
  double t_star = 0.0;     // argmax of the dual sweep
  double dual_value = 0.0; // lambda_min(A_{t*})

  bool found() const { return status == Status::Found; }
};

InteriorPointResult find_interior_point(const SymMatrix& A0,
                                        const SymMatrix& A1, int budget,
                                        std::uint64_t seed,
                                        double tol = kDefaultTol);

// Condition 3 case analysis on Null(A0).
struct Cond3Variant {
  enum class Kind { Nonsingular, PosDefOnNull, NegDefOnNull, Fails };

  Kind kind = Kind::Fails;
  Matrix null_basis;                    // Z0, n x k
  std::optional<SymMatrix> restricted;  // Z0' A1 Z0 when A0 singular

  bool admits_cut() const { return kind != Kind::Fails; }
};

std::string to_string(Cond3Variant::Kind k);

Cond3Variant check_cond3(const SymMatrix& A0, const SymMatrix& A1,
                         double tol = kDefaultTol);

// Condition 4: apex(Fs+) ∩ int(F1) ≠ ∅, decided through M = Zs' A1 Zs.
struct Cond4Result {
  enum class Verdict { NotApplicable, Verified, Violated, Indeterminate };

  Verdict verdict = Verdict::NotApplicable;
  Vector witness;                       // d with As d = 0 and d'A1 d < 0
  std::optional<SymMatrix> restricted;  // M, attached for reporting
};

std::string to_string(Cond4Result::Verdict v);

Cond4Result check_cond4(const SymMatrix& As, const SymMatrix& A1, double s,
                        double tol = kDefaultTol);

// Structure hints that unlock the recognized containment branches of
// Condition 5. The c vectors live in the original disjunction space.
struct Cond5Hint {
  enum class Tag { None, EllipsoidFrame, ParaboloidSection, BetaPair };

  Tag tag = Tag::None;
  Vector c1, c2;
};

struct Cond5Result {
  enum class Verdict {
    NotApplicable,
    VerifiedApex,
    VerifiedContainment,
    FalsifiedBySample,
    Unknown,
  };

  Verdict verdict = Verdict::Unknown;
  Vector witness;      // apex witness d, or falsifying sample
  std::string reason;  // which branch decided

  bool verified() const {
    return verdict == Verdict::VerifiedApex ||
           verdict == Verdict::VerifiedContainment ||
           verdict == Verdict::NotApplicable;
  }
};

std::string to_string(Cond5Result::Verdict v);

Cond5Result check_cond5(const SymMatrix& As, const SymMatrix& A1,
                        const SymMatrix& A0, const SocrCone& cone0,
                        const SocrCone* cone_s, const Vector& h, double s,
                        const Cond5Hint& hint = {}, int budget = 400,
                        std::uint64_t seed = 20240801ULL,
                        double tol = kDefaultTol);

// Condition 6: the two disjunctive pieces of the canonical SOC meet at most
// on their boundaries. Exact for split disjunctions (c2 antiparallel to c1);
// otherwise multi-start ascent of the concave min(c1'x - d1, c2'x - d2) over
// int(K), which can certify Fails but never Holds.
struct Cond6Result {
  enum class Verdict { Holds, Fails, Unknown };

  Verdict verdict = Verdict::Unknown;
  Vector witness;  // interior point satisfying both terms strictly (Fails)
};

std::string to_string(Cond6Result::Verdict v);

Cond6Result check_cond6(Index n, Vector c1, double d1, Vector c2, double d2,
                        int budget = 400, std::uint64_t seed = 20240801ULL,
                        double tol = kDefaultTol);

// Aggregate report for one instance.
struct ConditionReport {
  bool cond1 = false;
  InteriorPointResult cond2;
  Cond3Variant cond3;
  Cond4Result cond4;
  std::optional<Cond5Result> cond5;
  std::optional<Cond6Result> cond6;
};

}  // namespace socdc
