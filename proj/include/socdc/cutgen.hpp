#pragma once

#include "socdc/conditions.hpp"
#include "socdc/socr.hpp"
#include "socdc/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace socdc {

// The problem F0+ ∩ F1 [∩ H1]. F0+ comes either from explicit (B0, b0) data
// or from A0 alone, in which case the plus branch is fixed by the default
// orientation rule (largest-magnitude entry of b0 positive).
struct ConeInstance {
  SymMatrix A0;
  SymMatrix A1;
  std::optional<SocrCone> cone0;  // present when built from (B0, b0)
  std::optional<Vector> h;        // hyperplane H1 = { h'x = 1 }
  double tol = kDefaultTol;
  std::uint64_t seed = 20240801ULL;
  int budget = 400;
  Cond5Hint cond5_hint;

  static ConeInstance from_matrices(SymMatrix A0, SymMatrix A1,
                                    std::optional<Vector> h = std::nullopt);
  static ConeInstance from_Bb(Matrix B0, Vector b0, SymMatrix A1,
                              std::optional<Vector> h = std::nullopt,
                              double tol = kDefaultTol);
};

// Output of Algorithm "Calculate Cut". On success the cut is the plus branch
// of A_s: a full SOCr cone when A_s has a positive eigenvalue, otherwise the
// degenerate halfspace { b_s'x >= 0 } (trivial flag; Fs = R^n) and, when A_s
// has no negative eigenvalue either, no restriction at all.
struct CutResult {
  enum class Status {
    Ok,
    Cond1Failed,
    Cond2Infeasible,
    Cond2Indeterminate,
    Cond3Failed,
    DegenerateNumerics,
  };

  Status status = Status::DegenerateNumerics;
  double s = 0.0;
  std::vector<double> T;  // singularity parameters, ascending, deduplicated
  SymMatrix As;
  std::optional<SocrCone> cone_s;       // full SOC cut
  std::optional<Vector> halfspace_bs;   // degenerate cut: only b_s'x >= 0
  bool trivial = false;                 // A_s has no positive eigenvalue
  std::optional<SocrCone> cone0;        // oriented F0+
  Vector xbar;
  ConditionReport report;
  std::optional<double> epsilon_used;   // Condition 3(ii) shift
  std::string note;

  bool ok() const { return status == Status::Ok; }

  // Signed slack of the emitted cut at x: >= 0 on membership. +inf when the
  // cut imposes nothing.
  double cut_slack(const Vector& x) const;
  bool cut_contains(const Vector& x, double tol = kDefaultTol) const;
};

std::string to_string(CutResult::Status s);

// First epsilon in {2^-4, ..., 2^-40} making A_eps invertible with exactly
// one negative eigenvalue. Requires Condition 3(ii).
double epsilon_probe(const SymMatrix& A0, const SymMatrix& A1,
                     double tol = kDefaultTol);

// All t with A_t singular, through the real eigenvalues of the pencil;
// variant (ii) goes through the epsilon shift. Near-duplicates are merged.
std::vector<double> compute_T(const SymMatrix& A0, const SymMatrix& A1,
                              const Cond3Variant& variant,
                              double tol = kDefaultTol,
                              std::optional<double>* epsilon_used = nullptr);

// min(T ∩ (0,1]) under variants (i)/(ii), 0 under (iii), 1 when the
// intersection is empty.
double compute_s(const std::vector<double>& T, const Cond3Variant& variant,
                 double tol = kDefaultTol);

// s snapped to k/d (d <= 8) when within tol; used in reports only.
std::string pretty_s(double s, double tol = kDefaultTol);

CutResult build_cut(const ConeInstance& instance);

}  // namespace socdc
