#include "socdc/applications.hpp"

#include "socdc/hullcert.hpp"

#include <algorithm>
#include <cmath>

namespace socdc {

SymMatrix quad_homogenize(const SymMatrix& Q, const Vector& g, double f) {
  const Index n = Q.dim();
  if (g.size() != n)
    throw std::invalid_argument("quad_homogenize: dimension mismatch");
  Matrix M(n + 1, n + 1);
  M.topLeftCorner(n, n) = Q.mat();
  M.topRightCorner(n, 1) = g;
  M.bottomLeftCorner(1, n) = g.transpose();
  M(n, n) = f;
  return SymMatrix(M);
}

namespace {

SymMatrix ball_frame_A0(Index n) {
  Vector d = Vector::Ones(n + 1);
  d[n] = -1.0;
  return SymMatrix::Diagonal(d);
}

HullPipelineResult run_pipeline(ConeInstance instance, double closed_form_s,
                                const std::string& label) {
  HullPipelineResult out;
  out.closed_form_s = closed_form_s;
  CutResult cut = build_cut(instance);
  if (!cut.ok())
    throw std::runtime_error(label + ": cut generation failed (" +
                             to_string(cut.status) + ")");
  if (cut.trivial && cut.halfspace_bs && cut.halfspace_bs->norm() == 0.0) {
    out.kind = HullPipelineResult::Kind::DegenerateBoundary;
    out.description =
        label + ": aggregated matrix vanishes; feasible set is boundary-only "
                "and the convex hull equals the full section";
  }
  if (std::abs(cut.s - closed_form_s) > 1e-6)
    cut.note += (cut.note.empty() ? "" : "; ") +
                std::string("computed s deviates from the closed form");
  out.cut = std::move(cut);
  out.instance = std::move(instance);
  return out;
}

}  // namespace

HullPipelineResult ball_deletion_hull(const Vector& c, double r, double tol) {
  const Index n = c.size();
  if (n < 3)
    throw std::invalid_argument("ball_deletion_hull: requires n >= 3");
  if (r <= 0) throw std::invalid_argument("ball_deletion_hull: r must be > 0");

  if (c.norm() <= tol)
    return concentric_ellipsoid_hull(SymMatrix::Identity(n), r, tol);

  HullPipelineResult out;
  const double dist = c.norm();
  if (dist >= 1.0 + r) {
    out.kind = HullPipelineResult::Kind::TrivialHull;
    out.description = "deleted ball is disjoint from the unit ball; hull = "
                      "unit ball";
    return out;
  }
  if (r >= dist + 1.0) {
    out.kind = HullPipelineResult::Kind::EmptySet;
    out.description = "deleted ball covers the unit ball; feasible set empty";
    return out;
  }
  if (dist + r <= 1.0) {
    out.kind = HullPipelineResult::Kind::TrivialHull;
    out.description = "deleted ball lies inside the unit ball without "
                      "reaching its boundary; hull = unit ball";
    return out;
  }

  const SymMatrix A1 =
      quad_homogenize(SymMatrix(Matrix(-Matrix::Identity(n, n))), c,
                      r * r - c.squaredNorm());
  ConeInstance instance = ConeInstance::from_matrices(
      ball_frame_A0(n), A1, Vector(Vector::Unit(n + 1, n)));
  instance.tol = tol;
  instance.cond5_hint = Cond5Hint{Cond5Hint::Tag::EllipsoidFrame, {}, {}};
  // Q = -I, so lambda_min[Q] = -1 with multiplicity n and s = 1/2.
  return run_pipeline(std::move(instance), 0.5, "ball_deletion_hull");
}

HullPipelineResult concentric_ellipsoid_hull(const SymMatrix& E, double r,
                                             double tol) {
  const Index n = E.dim();
  const Spectrum esp = sym_eigen(E);
  if (esp.eigvals[0] <= tol * esp.scale())
    throw std::invalid_argument(
        "concentric_ellipsoid_hull: E must be positive definite");
  if (r <= 0)
    throw std::invalid_argument("concentric_ellipsoid_hull: r must be > 0");

  const double lambda_max = esp.eigvals[n - 1];
  HullPipelineResult out;
  if (lambda_max < r * r) {
    out.kind = HullPipelineResult::Kind::TrivialHull;
    out.description =
        "deleted ellipsoid stays strictly inside the unit ball; hull = unit "
        "ball";
    return out;
  }

  const SymMatrix A1 =
      quad_homogenize(SymMatrix(Matrix(-E.mat())), Vector(Vector::Zero(n)),
                      r * r);
  ConeInstance instance = ConeInstance::from_matrices(
      ball_frame_A0(n), A1, Vector(Vector::Unit(n + 1, n)));
  instance.tol = tol;
  instance.cond5_hint = Cond5Hint{Cond5Hint::Tag::EllipsoidFrame, {}, {}};
  return run_pipeline(std::move(instance), 1.0 / (1.0 + lambda_max),
                      "concentric_ellipsoid_hull");
}

HullPipelineResult paraboloid_hull(const SymMatrix& Qt, const Vector& g,
                                   double f, double tol) {
  const Index m = Qt.dim();   // dimension of y_tilde
  const Index n = m + 1;      // dimension of y
  if (g.size() != n)
    throw std::invalid_argument("paraboloid_hull: g must have dimension "
                                "dim(Qt) + 1");
  const Spectrum qsp = sym_eigen(Qt);
  const double lambda = qsp.eigvals[0];
  if (lambda >= -tol * qsp.scale())
    throw std::runtime_error(
        "paraboloid_hull: precondition unmet (lambda_min[Qt] must be < 0)");
  if (2.0 * g[n - 1] > -lambda + tol * qsp.scale())
    throw std::runtime_error(
        "paraboloid_hull: precondition unmet (2 g_n <= -lambda required)");

  Matrix A0 = Matrix::Zero(n + 1, n + 1);
  A0.topLeftCorner(m, m) = Matrix::Identity(m, m);
  A0(m, n) = A0(n, m) = -0.5;

  Matrix A1 = Matrix::Zero(n + 1, n + 1);
  A1.topLeftCorner(m, m) = Qt.mat();
  A1.topRightCorner(m, 1) = g.head(m);
  A1.bottomLeftCorner(1, m) = g.head(m).transpose();
  A1(m, n) = A1(n, m) = g[n - 1];
  A1(n, n) = f;

  ConeInstance instance = ConeInstance::from_matrices(
      SymMatrix(A0), SymMatrix(A1), Vector(Vector::Unit(n + 1, n)));
  instance.tol = tol;
  return run_pipeline(std::move(instance), 1.0 / (1.0 - lambda),
                      "paraboloid_hull");
}

TrsLift trs_lift(const TrsProblem& p, double tol) {
  const Index m = p.Qt.dim();
  if (p.gt.size() != m)
    throw std::invalid_argument("trs_lift: dimension mismatch");
  const Spectrum sp = sym_eigen(p.Qt);
  if (sp.eigvals[0] >= -tol * sp.scale())
    throw std::invalid_argument(
        "trs_lift: convex input (lambda_min >= 0); route to the direct solve");

  TrsLift lift;
  // Descending order puts lambda_min last, as the lifted frame expects.
  lift.qt_eigs = sp.eigvals.reverse();
  lift.V = sp.eigvecs.rowwise().reverse();

  Vector diag(m + 1);
  diag.head(m) = lift.qt_eigs;
  diag[m] = sp.eigvals[0];
  lift.Q = SymMatrix::Diagonal(diag);
  lift.g = Vector::Zero(m + 1);
  lift.g.head(m) = lift.V.transpose() * p.gt;
  return lift;
}

namespace {

double lifted_objective(const TrsLift& lift, const Vector& y) {
  return y.dot(lift.Q.mat() * y) + 2.0 * lift.g.dot(y);
}

}  // namespace

TrsSolution trs_solve(const TrsProblem& p, double tol) {
  const TrsLift lift = trs_lift(p, tol);
  const Index n = lift.Q.dim();     // lifted y dimension
  const Index dim = n + 2;          // (y; x_{n+1}; x_{n+2})

  Matrix A0 = Matrix::Zero(dim, dim);
  A0.topLeftCorner(n, n) = Matrix::Identity(n, n);
  A0(n, n) = -1.0;

  Matrix A1 = Matrix::Zero(dim, dim);
  A1.topLeftCorner(n, n) = lift.Q.mat();
  A1.block(0, n, n, 1) = lift.g;
  A1.block(n, 0, 1, n) = lift.g.transpose();
  A1(n + 1, n + 1) = 1.0;

  ConeInstance instance = ConeInstance::from_matrices(
      SymMatrix(A0), SymMatrix(A1), Vector(Vector::Unit(dim, n)));
  instance.tol = tol;
  CutResult cut = build_cut(instance);
  if (!cut.ok() || !cut.cone_s)
    throw std::runtime_error("trs_solve: cut generation failed (" +
                             to_string(cut.status) + ")");

  // Stage solves: extremize the auxiliary coordinate over F0+ ∩ Fs+ ∩ H1,
  // seeded with the interior point rescaled onto the hyperplane.
  SocpProblem stage;
  stage.cones = {*cut.cone0, *cut.cone_s};
  stage.h = Vector::Unit(dim, n);
  std::optional<Vector> seed;
  if (cut.xbar.size() == dim && cut.xbar[n] > tol)
    seed = Vector(cut.xbar / cut.xbar[n]);

  stage.c = Vector::Unit(dim, n + 1);
  const SocpSolution lo = solve(stage, seed);
  stage.c = -Vector::Unit(dim, n + 1);
  const SocpSolution hi = solve(stage, seed);
  if (lo.status != SocpSolution::Status::Optimal ||
      hi.status != SocpSolution::Status::Optimal)
    throw std::runtime_error("trs_solve: stage solve did not converge");

  TrsSolution sol;
  sol.cut = cut;
  sol.l = lo.value;
  sol.u = -hi.value;
  sol.value = std::min(-sol.l * sol.l, -sol.u * sol.u);

  // Recover a feasible minimizer from the stage attaining the value.
  const Vector& xstar =
      (sol.l * sol.l >= sol.u * sol.u) ? lo.x : hi.x;
  Vector y_lift;
  const double band = tol * std::max(1.0, instance.A1.max_abs());
  if (quad_value(instance.A1, xstar) <= band * xstar.squaredNorm()) {
    y_lift = xstar.head(n);
  } else {
    Vector d = cut.report.cond4.witness;
    if (cut.report.cond5 &&
        cut.report.cond5->verdict == Cond5Result::Verdict::VerifiedApex)
      d = cut.report.cond5->witness;
    try {
      const Decomposition dec = decompose_point(xstar, instance, cut, d);
      const Vector& endpoint =
          (lifted_objective(lift, dec.x_l.head(n)) <=
           lifted_objective(lift, dec.x_u.head(n)))
              ? dec.x_l
              : dec.x_u;
      y_lift = endpoint.head(n);
    } catch (const std::exception& e) {
      sol.recovery_ok = false;
      sol.note = std::string("minimizer recovery failed: ") + e.what();
      y_lift = xstar.head(n);
    }
  }

  // Un-lift: fold the (lambda_min plane) pair back to a single coordinate
  // with the sign that does not increase the objective, then undo the
  // diagonalizing rotation.
  const Index m = n - 1;
  Vector y_diag = y_lift.head(m);
  const double radius = std::hypot(y_lift[m - 1], y_lift[m]);
  const double g_last = lift.g[m - 1];
  double folded = radius;
  if (g_last > 0)
    folded = -radius;
  else if (g_last == 0 && y_lift[m - 1] < 0)
    folded = -radius;
  y_diag[m - 1] = folded;
  sol.y = lift.V * y_diag;
  if (sol.y.norm() > 1.0)
    sol.y *= std::min(1.0, 1.0 / sol.y.norm());
  return sol;
}

TrsSolution trs_solve_convex(const TrsProblem& p, double tol) {
  const Index m = p.Qt.dim();
  const Spectrum sp = sym_eigen(p.Qt);
  if (sp.eigvals[0] < -tol * sp.scale())
    throw std::invalid_argument("trs_solve_convex: input is nonconvex");

  const Vector gbar = sp.eigvecs.transpose() * p.gt;
  TrsSolution sol;

  // Unconstrained minimizer when it exists and fits in the ball.
  bool interior_ok = true;
  Vector y_int = Vector::Zero(m);
  for (Index i = 0; i < m; ++i) {
    if (sp.eigvals[i] > tol * sp.scale())
      y_int[i] = -gbar[i] / sp.eigvals[i];
    else if (std::abs(gbar[i]) > tol)
      interior_ok = false;
  }
  if (interior_ok && y_int.norm() <= 1.0) {
    sol.y = sp.eigvecs * y_int;
    sol.value = quad_value(p.Qt, sol.y) + 2.0 * p.gt.dot(sol.y);
    return sol;
  }

  // Boundary: solve sum gbar_i^2 / (eig_i + mu)^2 = 1 for mu > 0.
  const auto norm_sq = [&](double mu) {
    double s = 0.0;
    for (Index i = 0; i < m; ++i) {
      const double den = sp.eigvals[i] + mu;
      s += (gbar[i] * gbar[i]) / (den * den);
    }
    return s;
  };
  double lo_mu = 1e-12 * sp.scale();
  double hi_mu = std::max(1.0, p.gt.norm()) + sp.scale();
  while (norm_sq(hi_mu) > 1.0) hi_mu *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo_mu + hi_mu);
    (norm_sq(mid) > 1.0 ? lo_mu : hi_mu) = mid;
  }
  const double mu = 0.5 * (lo_mu + hi_mu);
  Vector y_bar(m);
  for (Index i = 0; i < m; ++i) y_bar[i] = -gbar[i] / (sp.eigvals[i] + mu);
  sol.y = sp.eigvecs * y_bar;
  sol.value = quad_value(p.Qt, sol.y) + 2.0 * p.gt.dot(sol.y);
  return sol;
}

}  // namespace socdc
