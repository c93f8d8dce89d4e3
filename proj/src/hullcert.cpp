#include "socdc/hullcert.hpp"

#include "socdc/rng.hpp"

#include <algorithm>
#include <cmath>

namespace socdc {

Decomposition decompose_point(const Vector& x, const ConeInstance& instance,
                              const CutResult& cut, const Vector& d) {
  const double tol = instance.tol;
  const double scale = std::max(1.0, instance.A1.max_abs());
  const double band = tol * scale;
  const double xsq = std::max(1.0, x.squaredNorm());

  const double q = quad_value(instance.A1, x);
  Decomposition dec;
  if (q <= band * xsq) {
    dec.x_l = x;
    dec.x_u = x;
    dec.trivial = true;
    return dec;
  }

  const double r = quad_value(instance.A1, d);
  if (r >= -band * d.squaredNorm())
    throw std::invalid_argument(
        "decompose_point: witness invalid (d'A1 d >= -tol)");
  const double p = d.dot(instance.A1.mat() * x);

  double disc = p * p - q * r;
  if (disc < 0) {
    if (disc < -band * xsq * d.squaredNorm())
      throw std::runtime_error("decompose_point: negative discriminant");
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  dec.eps_l = (-p + root) / r;  // r < 0 makes this the negative root
  dec.eps_u = (-p - root) / r;
  dec.x_l = x + dec.eps_l * d;
  dec.x_u = x + dec.eps_u * d;
  dec.weight = dec.eps_u / (dec.eps_u - dec.eps_l);

  // Both endpoints must land in F0+ ∩ F1. A b0-side violation is the genuine
  // hull-exactness failure from the last step of the two-point construction.
  const SocrCone& cone0 = cut.cone0 ? *cut.cone0 : *instance.cone0;
  const double check_tol = std::max(tol, 1e-8);
  for (const Vector* e : {&dec.x_l, &dec.x_u}) {
    const double esq = std::max(1.0, e->squaredNorm());
    if (quad_value(instance.A0, *e) > check_tol * scale * esq ||
        std::abs(quad_value(instance.A1, *e)) > check_tol * scale * esq)
      throw std::runtime_error("decompose_point: endpoint misses F0 ∩ bd(F1)");
    if (cone0.b().dot(*e) < -check_tol * scale * std::sqrt(esq))
      throw std::runtime_error(
          "decompose_point: endpoint lands in F0- (hull-exactness failure)");
  }
  return dec;
}

std::string to_string(SampleSet s) {
  switch (s) {
    case SampleSet::F0F1: return "F0F1";
    case SampleSet::F0Fs: return "F0Fs";
    case SampleSet::F0FsH1: return "F0FsH1";
    case SampleSet::F0F1H1: return "F0F1H1";
    case SampleSet::FsH1: return "FsH1";
  }
  return "unknown";
}

SampleSet sample_set_from_string(const std::string& name) {
  if (name == "F0F1") return SampleSet::F0F1;
  if (name == "F0Fs") return SampleSet::F0Fs;
  if (name == "F0FsH1") return SampleSet::F0FsH1;
  if (name == "F0F1H1") return SampleSet::F0F1H1;
  if (name == "FsH1") return SampleSet::FsH1;
  throw std::invalid_argument("unknown sample set: " + name);
}

namespace {

bool set_on_hyperplane(SampleSet which) {
  return which == SampleSet::F0FsH1 || which == SampleSet::F0F1H1 ||
         which == SampleSet::FsH1;
}

}  // namespace

std::vector<Vector> sample_set(const ConeInstance& instance,
                               const CutResult* cut, SampleSet which, int n,
                               std::uint64_t seed) {
  std::vector<Vector> out;
  if (n <= 0) return out;

  const double tol = instance.tol;
  const Index dim = instance.A0.dim();
  const bool needs_cut = which != SampleSet::F0F1 && which != SampleSet::F0F1H1;
  if (needs_cut && (cut == nullptr || !cut->ok()))
    throw std::invalid_argument("sample_set: requested set needs a valid cut");
  const bool on_h1 = set_on_hyperplane(which);
  if (on_h1 && !instance.h)
    throw std::invalid_argument("sample_set: instance has no hyperplane");

  SocrCone cone0 = (cut && cut->cone0)
                       ? *cut->cone0
                       : (instance.cone0
                              ? *instance.cone0
                              : SocrCone::from_matrix(instance.A0, std::nullopt,
                                                      tol));

  // Anchor in int(F0+ ∩ F1); reuse the cut's interior point when available.
  Vector anchor;
  if (cut && cut->xbar.size() == dim) {
    anchor = cut->xbar;
  } else {
    const auto ip =
        find_interior_point(instance.A0, instance.A1, instance.budget, seed,
                            tol);
    if (!ip.found())
      throw std::runtime_error("sample_set: no interior anchor found");
    anchor = cone0.b().dot(ip.xbar) < 0 ? Vector(-ip.xbar) : ip.xbar;
  }

  const double quad_band = tol * std::max(1.0, instance.A1.max_abs());
  const auto member = [&](const Vector& x) {
    const double xsq = x.squaredNorm();
    switch (which) {
      case SampleSet::F0F1:
      case SampleSet::F0F1H1:
        return cone0.contains_plus(x, tol) &&
               quad_value(instance.A1, x) <= quad_band * xsq;
      case SampleSet::F0Fs:
      case SampleSet::F0FsH1:
        return cone0.contains_plus(x, tol) && cut->cut_contains(x, tol);
      case SampleSet::FsH1:
        return cut->cut_contains(x, tol);
    }
    return false;
  };

  Rng rng(seed);
  const long max_tries = 4000L * n + 100000L;
  long tries = 0;
  const double sigmas[3] = {0.25, 1.0, 4.0};
  while (static_cast<int>(out.size()) < n && tries < max_tries) {
    ++tries;
    Vector x;
    const int mode = static_cast<int>(tries % 4);
    if (mode == 0) {
      x = rng.gaussian_vector(dim);
    } else if (mode == 3 && !out.empty()) {
      // March an accepted point toward the boundary along a random ray.
      const Vector& base = out[static_cast<std::size_t>(
          rng.uniform() * static_cast<double>(out.size()))];
      const Vector dir = rng.gaussian_vector(dim).normalized();
      double lo = 0.0, hi = 1.0;
      while (member(base + hi * dir) && hi < 1e6) hi *= 2.0;
      for (int it = 0; it < 50; ++it) {
        const double mid = 0.5 * (lo + hi);
        (member(base + mid * dir) ? lo : hi) = mid;
      }
      x = base + lo * dir;
    } else {
      const double sigma = sigmas[tries % 3];
      x = anchor * (0.25 + 2.0 * rng.uniform()) +
          sigma * rng.gaussian_vector(dim);
    }
    if (x.norm() < 1e-12) continue;

    if (on_h1) {
      const double hx = instance.h->dot(x);
      if (hx <= 1e-9 * x.norm()) continue;
      x /= hx;
    } else {
      x.normalize();
    }
    if (member(x)) out.push_back(x);
  }
  if (static_cast<int>(out.size()) < n)
    throw std::runtime_error("sample_set: budget exhausted (set may be empty)");
  return out;
}

CertifyReport certify_hull(const ConeInstance& instance, const CutResult& cut,
                           int n_samples, std::uint64_t seed) {
  if (cut.report.cond4.verdict != Cond4Result::Verdict::Verified)
    throw std::invalid_argument(
        "certify_hull: Condition 4 witness is required");
  Vector d = cut.report.cond4.witness;

  CertifyReport report;
  const double tol = instance.tol;
  const bool on_h1 = instance.h.has_value();
  bool apex_on_h1 = false;
  if (on_h1) {
    // Prefer an apex witness orthogonal to h so decompositions stay on H1.
    if (cut.report.cond5 &&
        cut.report.cond5->verdict == Cond5Result::Verdict::VerifiedApex)
      d = cut.report.cond5->witness;
    apex_on_h1 =
        std::abs(instance.h->dot(d)) <= tol * instance.h->norm() * d.norm();
    report.heuristic_h1 = !apex_on_h1;
  }

  const auto samples =
      sample_set(instance, &cut,
                 on_h1 ? SampleSet::F0FsH1 : SampleSet::F0Fs, n_samples, seed);

  for (const Vector& x : samples) {
    try {
      const Decomposition dec = decompose_point(x, instance, cut, d);
      const Vector recon =
          dec.weight * dec.x_l + (1.0 - dec.weight) * dec.x_u;
      if ((recon - x).norm() > 1e-7 * std::max(1.0, x.norm()))
        throw std::runtime_error("reconstruction error too large");
      if (on_h1 && !apex_on_h1 && !dec.trivial) {
        // Lemma-6 style fallback: renormalize the cone endpoints onto H1;
        // a nonpositive height cannot be crossed back.
        const double hl = instance.h->dot(dec.x_l);
        const double hu = instance.h->dot(dec.x_u);
        if (hl <= tol || hu <= tol)
          throw std::runtime_error(
              "endpoint leaves the positive side of H0; H1 certificate fails");
      }
      ++report.n_certified;
    } catch (const std::exception& e) {
      ++report.n_failed;
      report.failures.push_back({x, e.what()});
    }
  }
  return report;
}

}  // namespace socdc
