#include "socdc/cutgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace socdc {

ConeInstance ConeInstance::from_matrices(SymMatrix A0, SymMatrix A1,
                                         std::optional<Vector> h) {
  ConeInstance inst;
  inst.A0 = std::move(A0);
  inst.A1 = std::move(A1);
  inst.h = std::move(h);
  if (inst.A0.dim() != inst.A1.dim())
    throw std::invalid_argument("ConeInstance: A0/A1 dimension mismatch");
  if (inst.h && inst.h->size() != inst.A0.dim())
    throw std::invalid_argument("ConeInstance: h dimension mismatch");
  return inst;
}

ConeInstance ConeInstance::from_Bb(Matrix B0, Vector b0, SymMatrix A1,
                                   std::optional<Vector> h, double tol) {
  SocrCone cone = SocrCone::from_Bb(std::move(B0), std::move(b0), tol);
  ConeInstance inst = from_matrices(cone.A(), std::move(A1), std::move(h));
  inst.cone0 = std::move(cone);
  inst.tol = tol;
  return inst;
}

std::string to_string(CutResult::Status s) {
  switch (s) {
    case CutResult::Status::Ok: return "ok";
    case CutResult::Status::Cond1Failed: return "cond1_failed";
    case CutResult::Status::Cond2Infeasible: return "cond2_infeasible";
    case CutResult::Status::Cond2Indeterminate: return "cond2_indeterminate";
    case CutResult::Status::Cond3Failed: return "cond3_failed";
    case CutResult::Status::DegenerateNumerics: return "degenerate_numerics";
  }
  return "unknown";
}

double CutResult::cut_slack(const Vector& x) const {
  if (cone_s) return cone_s->plus_slack(x);
  if (halfspace_bs && halfspace_bs->norm() > 0)
    return halfspace_bs->dot(x);
  return std::numeric_limits<double>::infinity();
}

bool CutResult::cut_contains(const Vector& x, double tol) const {
  const double band =
      tol * std::max(1.0, As.max_abs()) * std::max(1.0, x.norm());
  return cut_slack(x) >= -band;
}

double epsilon_probe(const SymMatrix& A0, const SymMatrix& A1, double tol) {
  const Cond3Variant variant = check_cond3(A0, A1, tol);
  if (variant.kind != Cond3Variant::Kind::PosDefOnNull)
    throw std::invalid_argument(
        "epsilon_probe: requires Condition 3(ii) (A0 singular, A1 positive "
        "definite on Null(A0))");
  for (int k = 4; k <= 40; ++k) {
    const double eps = std::ldexp(1.0, -k);
    const Inertia in = inertia(pencil_at(A0, A1, eps), tol);
    if (in.n_zero == 0 && in.n_neg == 1) return eps;
  }
  throw std::runtime_error("epsilon_probe: ladder exhausted (degenerate input)");
}

namespace {

std::vector<double> merge_close(std::vector<double> values, double band) {
  std::sort(values.begin(), values.end());
  std::vector<double> merged;
  for (double v : values) {
    if (merged.empty() || v - merged.back() > band)
      merged.push_back(v);
  }
  return merged;
}

// T from the real pencil eigenvalues of a nonsingular base matrix:
// T = { (1-e)^{-1} }, with e near 1 mapping to infinity (dropped).
std::vector<double> pencil_to_T(const SymMatrix& base, const SymMatrix& A1,
                                double tol) {
  std::vector<double> T;
  for (double e : pencil_real_eigs(base, A1, tol)) {
    if (std::abs(1.0 - e) <= tol * (1.0 + std::abs(e))) continue;
    T.push_back(1.0 / (1.0 - e));
  }
  return T;
}

}  // namespace

std::vector<double> compute_T(const SymMatrix& A0, const SymMatrix& A1,
                              const Cond3Variant& variant, double tol,
                              std::optional<double>* epsilon_used) {
  std::vector<double> T;
  if (variant.kind == Cond3Variant::Kind::Nonsingular) {
    T = pencil_to_T(A0, A1, tol);
  } else if (variant.kind == Cond3Variant::Kind::PosDefOnNull) {
    const double eps = epsilon_probe(A0, A1, tol);
    if (epsilon_used) *epsilon_used = eps;
    T = pencil_to_T(pencil_at(A0, A1, eps), A1, tol);
    for (double& t : T) t = (1.0 - eps) * t + eps;
  } else {
    throw std::invalid_argument(
        "compute_T: only Condition 3 variants (i)/(ii) admit a T computation");
  }
  return merge_close(std::move(T), 10.0 * tol);
}

double compute_s(const std::vector<double>& T, const Cond3Variant& variant,
                 double tol) {
  if (variant.kind == Cond3Variant::Kind::NegDefOnNull) return 0.0;
  if (variant.kind == Cond3Variant::Kind::Fails)
    throw std::invalid_argument("compute_s: Condition 3 fails");
  for (double t : T) {
    if (t > tol && t <= 1.0 + tol) return std::min(t, 1.0);
  }
  return 1.0;  // T ∩ (0,1] empty: Theorem 1's trivial s = 1 case
}

std::string pretty_s(double s, double tol) {
  for (int den = 1; den <= 8; ++den) {
    const double num = s * den;
    const double rounded = std::round(num);
    if (std::abs(num - rounded) <= tol * den && rounded >= 0) {
      std::ostringstream os;
      if (den == 1)
        os << static_cast<long long>(rounded);
      else
        os << static_cast<long long>(rounded) << "/" << den;
      return os.str();
    }
  }
  std::ostringstream os;
  os.precision(17);
  os << s;
  return os.str();
}

CutResult build_cut(const ConeInstance& instance) {
  CutResult res;
  const double tol = instance.tol;
  const SymMatrix& A0 = instance.A0;
  const SymMatrix& A1 = instance.A1;

  res.report.cond1 = check_cond1(A0, tol);
  if (!res.report.cond1) {
    res.status = CutResult::Status::Cond1Failed;
    return res;
  }

  res.report.cond2 =
      find_interior_point(A0, A1, instance.budget, instance.seed, tol);
  if (res.report.cond2.status ==
      InteriorPointResult::Status::InfeasibleCertified) {
    res.status = CutResult::Status::Cond2Infeasible;
    return res;
  }
  if (res.report.cond2.status == InteriorPointResult::Status::Indeterminate) {
    res.status = CutResult::Status::Cond2Indeterminate;
    return res;
  }
  Vector xbar = res.report.cond2.xbar;

  // Orient F0+. With explicit (B0, b0), b0 fixes the branch and xbar must be
  // flipped into it; with A0 alone the default orientation applies and xbar
  // follows it.
  SocrCone cone0 = instance.cone0
                       ? *instance.cone0
                       : SocrCone::from_matrix(A0, std::nullopt, tol);
  if (cone0.b().dot(xbar) < 0) xbar = -xbar;
  res.xbar = xbar;
  res.cone0 = cone0;

  res.report.cond3 = check_cond3(A0, A1, tol);
  if (!res.report.cond3.admits_cut()) {
    res.status = CutResult::Status::Cond3Failed;
    return res;
  }

  std::optional<double> eps;
  try {
    if (res.report.cond3.kind != Cond3Variant::Kind::NegDefOnNull)
      res.T = compute_T(A0, A1, res.report.cond3, tol, &eps);
    res.s = compute_s(res.T, res.report.cond3, tol);
  } catch (const std::runtime_error&) {
    res.status = CutResult::Status::DegenerateNumerics;
    return res;
  }
  res.epsilon_used = eps;
  res.As = pencil_at(A0, A1, res.s);

  const Spectrum ssp = sym_eigen(res.As);
  const Inertia sin = inertia(ssp, tol);
  if (sin.n_pos >= 1 && sin.n_neg == 1) {
    res.cone_s = SocrCone::from_matrix(res.As, xbar, tol);
  } else if (sin.n_neg == 1) {
    // Fs = R^n but the plus branch still carries the halfspace b_s'x >= 0.
    Vector bs = std::sqrt(-ssp.eigvals[0]) * ssp.eigvecs.col(0);
    if (bs.dot(xbar) < 0) bs = -bs;
    res.halfspace_bs = bs;
    res.trivial = true;
    res.note = "A_s has no positive eigenvalue; cut degenerates to a halfspace";
  } else if (sin.n_neg == 0 && sin.n_pos == 0) {
    res.halfspace_bs = Vector::Zero(A0.dim());
    res.trivial = true;
    res.note = "A_s vanishes; the aggregated inequality is vacuous";
  } else {
    res.status = CutResult::Status::DegenerateNumerics;
    res.note = "unexpected inertia for A_s";
    return res;
  }

  res.report.cond4 = check_cond4(res.As, A1, res.s, tol);
  if (instance.h) {
    const SocrCone* cs = res.cone_s ? &*res.cone_s : nullptr;
    res.report.cond5 =
        check_cond5(res.As, A1, A0, cone0, cs, *instance.h, res.s,
                    instance.cond5_hint, instance.budget, instance.seed, tol);
  }

  res.status = CutResult::Status::Ok;
  return res;
}

}  // namespace socdc
