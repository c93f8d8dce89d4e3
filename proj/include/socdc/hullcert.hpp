#pragma once

#include "socdc/cutgen.hpp"
#include "socdc/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace socdc {

// Expression of a relaxation point as a convex combination of two points of
// the original nonconvex set, through the root pair eps- < 0 < eps+ of
// eps -> (x + eps d)' A1 (x + eps d).
struct Decomposition {
  Vector x_l, x_u;
  double eps_l = 0.0, eps_u = 0.0;
  double weight = 1.0;  // x = weight * x_l + (1 - weight) * x_u
  bool trivial = false; // x already in F1
};

// Throws when the witness is invalid (d'A1 d >= -tol) or when an endpoint
// lands in F0-, which signals a genuine hull-exactness failure.
Decomposition decompose_point(const Vector& x, const ConeInstance& instance,
                              const CutResult& cut, const Vector& d);

struct CertifyReport {
  int n_certified = 0;
  int n_failed = 0;
  struct Failure {
    Vector x;
    std::string why;
  };
  std::vector<Failure> failures;
  bool heuristic_h1 = false;  // H1 handled by renormalized cone endpoints
};

// Samples F0+ ∩ Fs+ (on H1 when the instance has one) and decomposes every
// sample onto F0+ ∩ F1. Requires the Condition 4 witness.
CertifyReport certify_hull(const ConeInstance& instance, const CutResult& cut,
                           int n_samples, std::uint64_t seed);

enum class SampleSet { F0F1, F0Fs, F0FsH1, F0F1H1, FsH1 };

std::string to_string(SampleSet s);
SampleSet sample_set_from_string(const std::string& name);

// Deterministic rejection sampler; every returned point classifies inside
// the requested set. Throws when the budget is exhausted with no points.
std::vector<Vector> sample_set(const ConeInstance& instance,
                               const CutResult* cut, SampleSet which, int n,
                               std::uint64_t seed);

}  // namespace socdc
