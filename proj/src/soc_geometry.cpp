#include "socdc/soc_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace socdc {

std::string to_string(SectionKind k) {
  switch (k) {
    case SectionKind::Ellipsoid: return "ellipsoid";
    case SectionKind::Paraboloid: return "paraboloid";
    case SectionKind::Hyperboloid: return "hyperboloid";
  }
  return "unknown";
}

SectionKind classify_section(const Vector& h, double tol) {
  const Index n = h.size();
  const double band = tol * std::max(1.0, h.norm());
  if (h.norm() <= band)
    throw std::invalid_argument("classify_section: h must be nonzero");
  const double tn = h.head(n - 1).norm();
  const double an = std::abs(h[n - 1]);
  if (std::abs(tn - an) <= band) return SectionKind::Paraboloid;
  return tn < an ? SectionKind::Ellipsoid : SectionKind::Hyperboloid;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Interval {
  double lo, hi;
  bool empty() const { return lo > hi; }
};

// Solution set of a b^2 + 2 b beta + ... : the quadratic
// q(beta) = a beta^2 + 2 b beta + c <= band, as up to two closed intervals.
std::vector<Interval> quadratic_leq(double a, double b, double c,
                                    double band) {
  const double coeff_scale = std::max({1.0, std::abs(a), std::abs(b),
                                       std::abs(c)});
  const double eps = band * coeff_scale;
  if (std::abs(a) <= eps) {
    if (std::abs(b) <= eps)
      return c <= eps ? std::vector<Interval>{{-kInf, kInf}}
                      : std::vector<Interval>{};
    // 2 b beta + c <= 0
    const double r = -c / (2.0 * b);
    return b > 0 ? std::vector<Interval>{{-kInf, r}}
                 : std::vector<Interval>{{r, kInf}};
  }
  const double disc = b * b - a * c;
  if (a > 0) {
    if (disc < 0) {
      // Minimum value (ac - b^2)/a; admit the vertex when within band.
      if (c - b * b / a <= eps) {
        const double v = -b / a;
        return {{v, v}};
      }
      return {};
    }
    const double sq = std::sqrt(disc);
    return {{(-b - sq) / a, (-b + sq) / a}};
  }
  // a < 0: complement of the root interval (or everything).
  if (disc < 0) return {{-kInf, kInf}};
  const double sq = std::sqrt(disc);
  const double r1 = (-b + sq) / a;  // smaller (a < 0)
  const double r2 = (-b - sq) / a;
  return {{-kInf, r1}, {r2, kInf}};
}

Interval intersect(const Interval& p, const Interval& q) {
  return {std::max(p.lo, q.lo), std::min(p.hi, q.hi)};
}

// Smallest beta in (quadratic set) ∩ lin ∩ [0, inf), or nullopt.
std::optional<double> smallest_feasible(const std::vector<Interval>& quad,
                                        const Interval& lin) {
  std::optional<double> best;
  for (const Interval& q : quad) {
    Interval r = intersect(intersect(q, lin), {0.0, kInf});
    if (r.empty()) continue;
    const double cand = std::isfinite(r.lo) ? r.lo : 0.0;
    if (!best || cand < *best) best = cand;
  }
  return best;
}

}  // namespace

BetaResult beta_sufficiency(const Vector& c1, const Vector& c2, double tol) {
  const Index n = c1.size();
  if (c2.size() != n)
    throw std::invalid_argument("beta_sufficiency: dimension mismatch");

  const auto tilde = [n](const Vector& v) { return v.head(n - 1); };
  const double a = tilde(c1).squaredNorm() - c1[n - 1] * c1[n - 1];
  const double b = tilde(c1).dot(tilde(c2)) - c1[n - 1] * c2[n - 1];
  const double c = tilde(c2).squaredNorm() - c2[n - 1] * c2[n - 1];
  const double band =
      tol * std::max({1.0, c1.squaredNorm(), c2.squaredNorm()});

  const auto quad = quadratic_leq(a, b, c, band);

  // Linear condition beta c1_n + c2_n >= 0 (K) or <= 0 (-K).
  const auto lin_set = [&](bool plus_cone) -> Interval {
    double p = c1[n - 1];
    double q = c2[n - 1];
    if (!plus_cone) {
      p = -p;
      q = -q;
    }
    if (std::abs(p) <= band)
      return q >= -band ? Interval{-kInf, kInf} : Interval{1.0, 0.0};
    const double r = -q / p;
    return p > 0 ? Interval{r, kInf} : Interval{-kInf, r};
  };

  const auto beta_minus = smallest_feasible(quad, lin_set(false));
  const auto beta_plus = smallest_feasible(quad, lin_set(true));

  BetaResult res;
  if (beta_minus && beta_plus) {
    res.holds = true;
    res.beta1 = *beta_minus;
    res.beta2 = *beta_plus;
  }
  return res;
}

}  // namespace socdc
