#include "socdc/disjunction.hpp"

#include <cmath>

namespace socdc {

std::string to_string(Disjunction::Case c) {
  switch (c) {
    case Disjunction::Case::A: return "a";
    case Disjunction::Case::B: return "b";
    case Disjunction::Case::C: return "c";
  }
  return "unknown";
}

Disjunction Disjunction::normalized(Vector c1, double d1, Vector c2, double d2,
                                    double tol) {
  if (c1.size() != c2.size())
    throw std::invalid_argument("Disjunction: dimension mismatch");
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
  Disjunction disj;
  disj.n = c1.size();
  disj.c1 = std::move(c1);
  disj.c2 = std::move(c2);
  disj.d1 = d1;
  disj.d2 = d2;
  if (d1 == 0.0 && d2 == 0.0)
    disj.which = Case::A;
  else if (d1 == d2)
    disj.which = Case::B;
  else
    disj.which = Case::C;
  return disj;
}

Disjunction weaken_case_c(const Disjunction& disj) {
  if (disj.which != Disjunction::Case::C)
    throw std::invalid_argument("weaken_case_c: disjunction is not case (c)");
  Disjunction weak = Disjunction::normalized(disj.c1, disj.d2, disj.c2,
                                             disj.d2);
  weak.weakened = true;
  return weak;
}

namespace {

// c in K, c in int(-K), and the boundary norms used for triviality checks.
struct SideClass {
  bool in_K = false;
  bool in_int_minus_K = false;
  bool on_band = false;  // ||c_tilde|| == |c_n| within tolerance
};

SideClass classify_side(const Vector& c, double tol) {
  const Index n = c.size();
  const double tn = c.head(n - 1).norm();
  const double cn = c[n - 1];
  const double band = tol * std::max(1.0, c.norm());
  SideClass s;
  s.in_K = tn <= cn + band;
  s.in_int_minus_K = tn < -cn - band;
  s.on_band = std::abs(tn - std::abs(cn)) <= band;
  return s;
}

SymMatrix rank_two_sym(const Vector& u, const Vector& v) {
  return SymMatrix(u * v.transpose() + v * u.transpose());
}

}  // namespace

DisjunctionBuild build_homogeneous(const Vector& c1, const Vector& c2,
                                   double tol) {
  DisjunctionBuild out;
  const SideClass s1 = classify_side(c1, tol);
  const SideClass s2 = classify_side(c2, tol);
  if (s1.in_K || s2.in_K) {
    out.kind = DisjunctionBuild::Kind::TrivialHull;
    out.hull_description =
        std::string("c") + (s1.in_K ? "1" : "2") +
        " ∈ K: that side of the disjunction equals K; conic hull = K";
    return out;
  }
  if (s1.in_int_minus_K || s2.in_int_minus_K) {
    const char* dead = s1.in_int_minus_K ? "1" : "2";
    const char* live = s1.in_int_minus_K ? "2" : "1";
    out.kind = DisjunctionBuild::Kind::TrivialHull;
    out.hull_description = std::string("c") + dead +
                           " ∈ int(-K): that side is {0}; conic hull = K ∩ "
                           "{ c" + live + "'x >= 0 }";
    return out;
  }
  if (s1.on_band || s2.on_band)
    out.warning =
        "a side satisfies ||c_tilde|| = |c_n|: Condition 4 is expected to fail";

  const Index n = c1.size();
  ConeInstance inst = ConeInstance::from_matrices(
      soc_J(n), rank_two_sym(c1, c2), std::nullopt);
  inst.tol = tol;
  out.instance = std::move(inst);
  return out;
}

DisjunctionBuild build_nonhomogeneous(const Disjunction& disj, double tol) {
  if (disj.which == Disjunction::Case::A)
    throw std::invalid_argument(
        "build_nonhomogeneous: homogeneous disjunction; use "
        "build_homogeneous");
  DisjunctionBuild out;
  const Index n = disj.n;

  if (disj.which == Disjunction::Case::B) {
    const Vector diff = disj.c1 - disj.c2;
    const SideClass sd = classify_side(diff, tol);
    const bool minus = classify_side(Vector(-diff), tol).in_K;
    if (sd.in_K || minus) {
      out.kind = DisjunctionBuild::Kind::TrivialHull;
      out.hull_description =
          std::string("c1 - c2 ∈ ") + (sd.in_K ? "K" : "-K") +
          ": one side contains the other; convex hull = K ∩ H1 ∩ { c" +
          (sd.in_K ? "2" : "1") + "'x >= d }";
      return out;
    }
  } else {
    if (disj.d1 * disj.d2 == 0.0) {
      out.kind = DisjunctionBuild::Kind::TrivialHull;
      out.hull_description =
          "case (c) with d1 d2 = 0: Condition 3 fails; use the weakened "
          "disjunction (weaken_case_c) for a valid relaxation";
      return out;
    }
    out.warning =
        "case (c): hull exactness is not guaranteed (two conic inequalities "
        "cannot capture the hull in general)";
  }

  Matrix A0 = Matrix::Zero(n + 1, n + 1);
  A0.topLeftCorner(n, n) = soc_J(n).mat();

  Matrix A1 = Matrix::Zero(n + 1, n + 1);
  A1.topLeftCorner(n, n) = rank_two_sym(disj.c1, disj.c2).mat();
  const Vector cross = -disj.d2 * disj.c1 - disj.d1 * disj.c2;
  A1.topRightCorner(n, 1) = cross;
  A1.bottomLeftCorner(1, n) = cross.transpose();
  A1(n, n) = 2.0 * disj.d1 * disj.d2;

  ConeInstance inst = ConeInstance::from_matrices(
      SymMatrix(A0), SymMatrix(A1), Vector(Vector::Unit(n + 1, n)));
  inst.tol = tol;
  inst.cond5_hint = Cond5Hint{Cond5Hint::Tag::BetaPair, disj.c1, disj.c2};
  out.instance = std::move(inst);
  return out;
}

GPlusEval gplus_membership(const GPlusSet& g, const Vector& x, double tol) {
  const Index n = g.c1.size();
  if (x.size() != n)
    throw std::invalid_argument("gplus_membership: dimension mismatch");
  if (g.s <= tol || g.s > 1.0 + tol)
    throw std::invalid_argument("gplus_membership: s must lie in (0,1]");

  const double xJx = quad_value(soc_J(n), x);
  const double diff_term = (g.c1 - g.c2).dot(x) - (g.d1 - g.d2);
  double radicand = diff_term * diff_term - 2.0 * ((1.0 - g.s) / g.s) * xJx;

  GPlusEval eval;
  const double band = tol * std::max(1.0, x.squaredNorm());
  if (radicand < 0) {
    // Guaranteed nonnegative on K; flag the domain and clamp elsewhere.
    if (radicand < -band && xJx > band) eval.domain_warning = true;
    radicand = 0.0;
  }
  const double lhs = std::sqrt(radicand);
  const double rhs = (g.d1 + g.d2) - (g.c1 + g.c2).dot(x);
  eval.slack = lhs - rhs;
  eval.member = eval.slack >= -band;
  if (g.strict_mode && g.b_s.size() > 0) {
    Vector xh = x;
    if (g.b_s.size() == n + 1) {
      xh.conservativeResize(n + 1);
      xh[n] = 1.0;
    }
    if (g.b_s.dot(xh) < -band) eval.member = false;
  }
  return eval;
}

DisjunctionBuild build_section_disjunction(const Vector& h, const Vector& rho1,
                                           double d1, const Vector& rho2,
                                           double d2, double tol) {
  const Index n = h.size();
  if (rho1.size() != n || rho2.size() != n)
    throw std::invalid_argument("build_section_disjunction: dimension mismatch");

  const Vector c1 = rho1 - d1 * h;
  const Vector c2 = rho2 - d2 * h;

  DisjunctionBuild out = build_homogeneous(c1, c2, tol);
  if (out.kind == DisjunctionBuild::Kind::TrivialHull) return out;

  ConeInstance& inst = *out.instance;
  inst.h = h;
  switch (classify_section(h, tol)) {
    case SectionKind::Ellipsoid:
      inst.cond5_hint = Cond5Hint{Cond5Hint::Tag::EllipsoidFrame, {}, {}};
      break;
    case SectionKind::Paraboloid:
      inst.cond5_hint = Cond5Hint{Cond5Hint::Tag::ParaboloidSection, {}, {}};
      break;
    case SectionKind::Hyperboloid:
      inst.cond5_hint = Cond5Hint{Cond5Hint::Tag::BetaPair, rho1, rho2};
      break;
  }
  return out;
}

}  // namespace socdc
