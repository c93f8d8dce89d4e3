#include "socdc/conditions.hpp"

#include "socdc/rng.hpp"
#include "socdc/soc_geometry.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace socdc {

namespace {

double lambda_min(const SymMatrix& S) {
  return sym_eigen(S).eigvals[0];
}

double pair_scale(const SymMatrix& A0, const SymMatrix& A1) {
  return std::max({1.0, A0.max_abs(), A1.max_abs()});
}

// Orthonormal basis of span(Z) ∩ w-perp, for Z with orthonormal columns.
Matrix intersect_with_perp(const Matrix& Z, const Vector& w, double band) {
  if (Z.cols() == 0) return Z;
  Vector proj = Z.transpose() * w;  // k-vector
  if (proj.norm() <= band) return Z;
  // Complete proj/|proj| to an orthonormal basis of R^k; drop it.
  const Index k = Z.cols();
  Matrix basis(k, k);
  basis.col(0) = proj.normalized();
  Index filled = 1;
  for (Index i = 0; i < k && filled < k; ++i) {
    Vector cand = Vector::Unit(k, i);
    cand -= basis.leftCols(filled) * (basis.leftCols(filled).transpose() * cand);
    if (cand.norm() > 1e-8) {
      basis.col(filled++) = cand.normalized();
    }
  }
  return Z * basis.rightCols(k - 1);
}

}  // namespace

std::string to_string(Cond3Variant::Kind k) {
  switch (k) {
    case Cond3Variant::Kind::Nonsingular: return "nonsingular";
    case Cond3Variant::Kind::PosDefOnNull: return "posdef_on_null";
    case Cond3Variant::Kind::NegDefOnNull: return "negdef_on_null";
    case Cond3Variant::Kind::Fails: return "fails";
  }
  return "unknown";
}

std::string to_string(Cond4Result::Verdict v) {
  switch (v) {
    case Cond4Result::Verdict::NotApplicable: return "not_applicable";
    case Cond4Result::Verdict::Verified: return "verified";
    case Cond4Result::Verdict::Violated: return "violated";
    case Cond4Result::Verdict::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

std::string to_string(Cond5Result::Verdict v) {
  switch (v) {
    case Cond5Result::Verdict::NotApplicable: return "not_applicable";
    case Cond5Result::Verdict::VerifiedApex: return "verified_apex";
    case Cond5Result::Verdict::VerifiedContainment:
      return "verified_containment";
    case Cond5Result::Verdict::FalsifiedBySample: return "falsified_by_sample";
    case Cond5Result::Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Cond6Result::Verdict v) {
  switch (v) {
    case Cond6Result::Verdict::Holds: return "holds";
    case Cond6Result::Verdict::Fails: return "fails";
    case Cond6Result::Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

bool check_cond1(const SymMatrix& A0, double tol) {
  const Inertia in = inertia(A0, tol);
  return in.n_neg == 1 && in.n_pos >= 1;
}

InteriorPointResult find_interior_point(const SymMatrix& A0,
                                        const SymMatrix& A1, int budget,
                                        std::uint64_t seed, double tol) {
  const Index n = A0.dim();
  const double scale = pair_scale(A0, A1);
  const double band = tol * scale;
  const Matrix D = A1.mat() - A0.mat();

  // Dual sweep: maximize the concave t -> lambda_min(A_t) by golden section.
  const auto f = [&](double t) { return lambda_min(pencil_at(A0, A1, t)); };
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = 1.0;
  double m1 = hi - invphi * (hi - lo), m2 = lo + invphi * (hi - lo);
  double f1 = f(m1), f2 = f(m2);
  for (int it = 0; it < 90; ++it) {
    if (f1 < f2) {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + invphi * (hi - lo);
      f2 = f(m2);
    } else {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - invphi * (hi - lo);
      f1 = f(m1);
    }
  }
  double t_star = 0.5 * (lo + hi);
  double f_star = f(t_star);
  for (double t : {0.0, 1.0}) {
    const double ft = f(t);
    if (ft > f_star) {
      f_star = ft;
      t_star = t;
    }
  }

  InteriorPointResult res;
  res.t_star = t_star;
  res.dual_value = f_star;
  if (f_star >= -band) {
    res.status = InteriorPointResult::Status::InfeasibleCertified;
    return res;
  }

  // Primal extraction seeds: min-eigenvectors of A0, A1 and of A_t on a
  // coarse grid, plus the direction inside the lambda_min(A_{t*}) eigenspace
  // where both quadratic forms coincide.
  std::vector<Vector> seeds;
  const auto add_min_eigvecs = [&](double t) {
    const Spectrum sp = sym_eigen(pencil_at(A0, A1, t));
    const double eig_band =
        std::max(band, 1e-7 * sp.scale()) + std::abs(sp.eigvals[0]) * 1e-7;
    for (Index i = 0; i < n; ++i)
      if (sp.eigvals[i] <= sp.eigvals[0] + eig_band)
        seeds.push_back(sp.eigvecs.col(i));
  };
  for (double t : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0})
    add_min_eigvecs(t);

  {
    const Spectrum sp = sym_eigen(pencil_at(A0, A1, t_star));
    const double eig_band = std::max(band, 1e-7 * sp.scale());
    std::vector<Index> active;
    for (Index i = 0; i < n; ++i)
      if (sp.eigvals[i] <= sp.eigvals[0] + eig_band) active.push_back(i);
    Matrix V(n, static_cast<Index>(active.size()));
    for (Index j = 0; j < V.cols(); ++j) V.col(j) = sp.eigvecs.col(active[j]);
    seeds.push_back(V.col(0));
    if (V.cols() >= 2) {
      // Within the eigenspace, u'(A_t*)u is constant, so zeroing u'Du makes
      // both quadratics equal to lambda_min(A_{t*}) < 0.
      const SymMatrix P = restricted_form(SymMatrix(D), V);
      const Spectrum psp = sym_eigen(P);
      const Vector v1 = V * psp.eigvecs.col(0);
      const Vector v2 = V * psp.eigvecs.col(P.dim() - 1);
      const double d1 = psp.eigvals[0];
      const double d2 = psp.eigvals[P.dim() - 1];
      if (d1 <= 0 && d2 >= 0) {
        Vector u;
        if (d2 > std::abs(d1) * 1e-14 + 1e-300)
          u = (v1 + std::sqrt(-d1 / d2) * v2).normalized();
        else
          u = v1;
        seeds.push_back(u);
      }
      seeds.push_back(V.col(V.cols() - 1));
    }
  }

  Rng rng(seed);
  const int random_starts = std::max(4, budget / 50);
  for (int i = 0; i < random_starts; ++i)
    seeds.push_back(rng.gaussian_vector(n).normalized());

  // Projected subgradient descent on g(x) = max(x'A0x, x'A1x) over the unit
  // sphere; deterministic selection of the lowest final objective, ties by
  // lowest start index.
  const auto objective = [&](const Vector& x) {
    return std::max(quad_value(A0, x), quad_value(A1, x));
  };
  Vector best_x;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t si = 0; si < seeds.size(); ++si) {
    Vector x = seeds[si].normalized();
    double val = objective(x);
    for (int it = 0; it < 60 && val >= -band; ++it) {
      const double q0 = quad_value(A0, x);
      const double q1 = quad_value(A1, x);
      Vector grad;
      if (std::abs(q0 - q1) <= band)
        grad = (A0.mat() + A1.mat()) * x;
      else if (q0 > q1)
        grad = 2.0 * A0.mat() * x;
      else
        grad = 2.0 * A1.mat() * x;
      const double gnorm = grad.norm();
      if (gnorm <= 1e-15) break;
      const double step = 0.5 / (1.0 + it);
      Vector cand = (x - step * grad / gnorm).normalized();
      const double cval = objective(cand);
      if (cval < val) {
        x = cand;
        val = cval;
      } else
        break;
    }
    if (val < best_val) {
      best_val = val;
      best_x = x;
    }
  }

  if (best_val <= -band) {
    res.status = InteriorPointResult::Status::Found;
    res.xbar = best_x;
  } else {
    res.status = InteriorPointResult::Status::Indeterminate;
  }
  return res;
}

Cond3Variant check_cond3(const SymMatrix& A0, const SymMatrix& A1,
                         double tol) {
  Cond3Variant out;
  out.null_basis = nullspace_basis(A0, tol);
  if (out.null_basis.cols() == 0) {
    out.kind = Cond3Variant::Kind::Nonsingular;
    return out;
  }
  const SymMatrix M = restricted_form(A1, out.null_basis);
  out.restricted = M;
  const Inertia in = inertia(M, tol);
  if (in.n_pos == M.dim())
    out.kind = Cond3Variant::Kind::PosDefOnNull;
  else if (in.n_neg == M.dim())
    out.kind = Cond3Variant::Kind::NegDefOnNull;
  else
    out.kind = Cond3Variant::Kind::Fails;
  return out;
}

Cond4Result check_cond4(const SymMatrix& As, const SymMatrix& A1, double s,
                        double tol) {
  Cond4Result out;
  const double band = tol * pair_scale(As, A1);
  if (std::abs(s - 1.0) <= band) {
    out.verdict = Cond4Result::Verdict::NotApplicable;
    return out;
  }
  const Matrix Zs = nullspace_basis(As, tol);
  if (Zs.cols() == 0)
    throw std::runtime_error(
        "check_cond4: As nonsingular while s < 1 (inconsistent s)");
  const SymMatrix M = restricted_form(A1, Zs);
  out.restricted = M;
  const Spectrum msp = sym_eigen(M);
  if (msp.eigvals[0] < -band) {
    out.verdict = Cond4Result::Verdict::Verified;
    out.witness = Zs * msp.eigvecs.col(0);
  } else if (M.max_abs() <= band) {
    out.verdict = Cond4Result::Verdict::Violated;
  } else {
    out.verdict = Cond4Result::Verdict::Indeterminate;
  }
  return out;
}

Cond5Result check_cond5(const SymMatrix& As, const SymMatrix& A1,
                        const SymMatrix& A0, const SocrCone& cone0,
                        const SocrCone* cone_s, const Vector& h, double s,
                        const Cond5Hint& hint, int budget, std::uint64_t seed,
                        double tol) {
  Cond5Result out;
  const Index n = As.dim();
  const double scale = std::max(pair_scale(As, A1), A0.max_abs());
  const double band = tol * scale;
  if (std::abs(s - 1.0) <= band) {
    out.verdict = Cond5Result::Verdict::NotApplicable;
    out.reason = "s = 1";
    return out;
  }
  if (h.norm() <= band)
    throw std::invalid_argument("check_cond5: h must be nonzero");

  Matrix Nperp(n, n - 1);
  {
    Eigen::HouseholderQR<Matrix> qr(h);
    Matrix Q = qr.householderQ();
    Nperp = Q.rightCols(n - 1);
  }

  // Ellipsoid-frame containment is checked first only when hinted (the
  // applications prefer the structural certificate over the apex witness).
  const auto ellipsoid_containment = [&]() -> bool {
    const Spectrum rsp = sym_eigen(restricted_form(A0, Nperp));
    return rsp.eigvals[0] > band;
  };
  if (hint.tag == Cond5Hint::Tag::EllipsoidFrame && ellipsoid_containment()) {
    out.verdict = Cond5Result::Verdict::VerifiedContainment;
    out.reason = "F0 ∩ H0 = {0} (ellipsoid frame)";
    return out;
  }

  // Apex branch: d in Null(As) ∩ h-perp with d'A1 d < 0.
  const Matrix Zs = nullspace_basis(As, tol);
  const Matrix W = intersect_with_perp(Zs, h, band);
  if (W.cols() > 0) {
    const Spectrum wsp = sym_eigen(restricted_form(A1, W));
    if (wsp.eigvals[0] < -band) {
      out.verdict = Cond5Result::Verdict::VerifiedApex;
      out.witness = W * wsp.eigvecs.col(0);
      out.reason = "apex witness";
      return out;
    }
  }

  if (hint.tag == Cond5Hint::Tag::ParaboloidSection) {
    // K ∩ H0 = cone{ -Jh }; containment only needs that single ray.
    const Vector hhat = soc_reflect(h);
    const bool in_fs =
        cone_s == nullptr ||
        (quad_value(As, hhat) <= band * hhat.squaredNorm() &&
         cone_s->b().dot(hhat) >= -band * hhat.norm());
    if (!in_fs) {
      out.verdict = Cond5Result::Verdict::VerifiedContainment;
      out.reason = "K ∩ H0 ray leaves Fs+";
      return out;
    }
    if (quad_value(A1, hhat) <= band * hhat.squaredNorm()) {
      out.verdict = Cond5Result::Verdict::VerifiedContainment;
      out.reason = "paraboloid ray test";
      return out;
    }
    out.verdict = Cond5Result::Verdict::FalsifiedBySample;
    out.witness = hhat;
    out.reason = "paraboloid ray violates F1";
    return out;
  }

  if (hint.tag == Cond5Hint::Tag::BetaPair && hint.c1.size() > 0) {
    const BetaResult beta = beta_sufficiency(hint.c1, hint.c2, tol);
    if (beta.holds) {
      out.verdict = Cond5Result::Verdict::VerifiedContainment;
      out.reason = "beta sufficiency";
      return out;
    }
  }

  if (hint.tag == Cond5Hint::Tag::None && ellipsoid_containment()) {
    out.verdict = Cond5Result::Verdict::VerifiedContainment;
    out.reason = "F0 ∩ H0 = {0}";
    return out;
  }

  // Sampling falsification over F0+ ∩ Fs+ ∩ H0.
  Rng rng(seed);
  const int tries = std::max(200, budget * 25);
  for (int i = 0; i < tries; ++i) {
    Vector x = (Nperp * rng.gaussian_vector(n - 1)).normalized();
    if (!cone0.contains_plus(x, tol)) {
      x = -x;
      if (!cone0.contains_plus(x, tol)) continue;
    }
    if (cone_s != nullptr && !cone_s->contains_plus(x, tol)) continue;
    if (quad_value(A1, x) > band) {
      out.verdict = Cond5Result::Verdict::FalsifiedBySample;
      out.witness = x;
      out.reason = "sampled point of F0+ ∩ Fs+ ∩ H0 outside F1";
      return out;
    }
  }
  out.verdict = Cond5Result::Verdict::Unknown;
  out.reason = "no containment certificate; sampling found no violation";
  return out;
}

namespace {

// Attained range of c'x over the canonical SOC: [0, inf) when c in K,
// (-inf, 0] when -c in K, all of R otherwise.
struct ValueRange {
  double lo, hi;
};

ValueRange soc_value_range(const Vector& c, double tol) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (soc_contains(c, tol)) return {0.0, inf};
  if (soc_contains(Vector(-c), tol)) return {-inf, 0.0};
  return {-inf, inf};
}

}  // namespace

Cond6Result check_cond6(Index n, Vector c1, double d1, Vector c2, double d2,
                        int budget, std::uint64_t seed, double tol) {
  Cond6Result out;
  // Defensive normalization to d in {0, +-1}, d1 >= d2.
  if (std::abs(d1) > tol) {
    c1 /= std::abs(d1);
    d1 = d1 > 0 ? 1.0 : -1.0;
  } else {
    d1 = 0.0;
  }
  if (std::abs(d2) > tol) {
    c2 /= std::abs(d2);
    d2 = d2 > 0 ? 1.0 : -1.0;
  } else {
    d2 = 0.0;
  }
  if (d1 < d2) {
    std::swap(c1, c2);
    std::swap(d1, d2);
  }

  // Split disjunctions (c2 antiparallel to c1) admit an exact interval test:
  // a strict common point needs c1'x in the open interval (d1, -d2/alpha).
  const double c1sq = c1.squaredNorm();
  if (c1sq > tol) {
    const double alpha = -c1.dot(c2) / c1sq;
    if (alpha > tol &&
        (c2 + alpha * c1).norm() <= tol * (c1.norm() + c2.norm() + 1.0)) {
      const double upper = -d2 / alpha;
      const ValueRange range = soc_value_range(c1, tol);
      const double lo = std::max(d1, range.lo);
      const double hi = std::min(upper, range.hi);
      if (lo >= hi - tol) {
        out.verdict = Cond6Result::Verdict::Holds;
        return out;
      }
      // fall through to the ascent to produce a witness
    }
  }

  // Multi-start subgradient ascent of the concave piecewise-linear
  // f(x) = min(c1'x - d1, c2'x - d2) over int(K), parametrized as
  // x = rho (z, 1) with ||z|| < 1.
  const double margin = 1e-7 * (1.0 + std::abs(d1) + std::abs(d2));
  const double rho_max = 100.0;
  const auto point = [&](const Vector& z, double rho) {
    Vector x(n);
    x.head(n - 1) = rho * z;
    x[n - 1] = rho;
    return x;
  };
  const auto value = [&](const Vector& x) {
    return std::min(c1.dot(x) - d1, c2.dot(x) - d2);
  };

  std::vector<std::pair<Vector, double>> starts;
  const auto push_dir = [&](Vector z) {
    if (z.norm() > 1.0) z = z.normalized() * 0.9;
    for (double rho : {1.0, 10.0}) starts.emplace_back(z, rho);
  };
  push_dir(Vector::Zero(n - 1));
  if (c1.head(n - 1).norm() > tol) push_dir(0.9 * c1.head(n - 1).normalized());
  if (c2.head(n - 1).norm() > tol) push_dir(0.9 * c2.head(n - 1).normalized());
  {
    Vector mid = c1.head(n - 1) + c2.head(n - 1);
    if (mid.norm() > tol) push_dir(0.9 * mid.normalized());
  }
  Rng rng(seed);
  for (int i = 0; i < std::max(8, budget / 40); ++i) {
    Vector z = rng.gaussian_vector(n - 1);
    push_dir(0.9 * z.normalized() * rng.uniform());
  }

  Vector best_x;
  double best_val = -std::numeric_limits<double>::infinity();
  for (auto& [z0, rho0] : starts) {
    Vector z = z0;
    double rho = rho0;
    Vector x = point(z, rho);
    double val = value(x);
    for (int it = 0; it < 200; ++it) {
      const Vector& c_active =
          (c1.dot(x) - d1 <= c2.dot(x) - d2) ? c1 : c2;
      // Gradient in (z, rho) coordinates.
      Vector gz = rho * c_active.head(n - 1);
      double grho = c_active.head(n - 1).dot(z) + c_active[n - 1];
      const double gnorm = std::sqrt(gz.squaredNorm() + grho * grho);
      if (gnorm <= 1e-15) break;
      const double step = 0.5 / (1.0 + 0.1 * it);
      Vector zc = z + step * gz / gnorm;
      double rc = rho + step * grho / gnorm;
      if (zc.norm() > 1.0 - 1e-9) zc *= (1.0 - 1e-9) / zc.norm();
      rc = std::clamp(rc, 1e-9, rho_max);
      const Vector xc = point(zc, rc);
      const double vc = value(xc);
      if (vc > val) {
        z = zc;
        rho = rc;
        x = xc;
        val = vc;
      } else if (it > 20) {
        break;
      }
    }
    if (val > best_val) {
      best_val = val;
      best_x = x;
    }
  }

  if (best_val > margin) {
    out.verdict = Cond6Result::Verdict::Fails;
    out.witness = best_x;
  } else {
    out.verdict = Cond6Result::Verdict::Unknown;
  }
  return out;
}

}  // namespace socdc
