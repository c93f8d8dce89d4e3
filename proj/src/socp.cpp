#include "socdc/socp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>

namespace socdc {

std::string to_string(SocpSolution::Status s) {
  switch (s) {
    case SocpSolution::Status::Optimal: return "optimal";
    case SocpSolution::Status::Infeasible: return "infeasible";
    case SocpSolution::Status::Unbounded: return "unbounded";
    case SocpSolution::Status::MaxIter: return "max_iter";
  }
  return "unknown";
}

namespace {

constexpr double kMuTarget = 1e-8;
constexpr double kSigma = 0.2;
constexpr double kArmijo = 1e-4;
constexpr int kMaxNewton = 200;
constexpr double kBlowup = 1e8;

struct Slice {
  Vector x_p;  // h'x_p = 1
  Matrix N;    // orthonormal basis of h-perp

  Vector point(const Vector& z) const { return x_p + N * z; }
};

Slice make_slice(const Vector& h) {
  const Index n = h.size();
  if (h.norm() <= 0)
    throw std::invalid_argument("socp: hyperplane vector must be nonzero");
  Slice s;
  s.x_p = h / h.squaredNorm();
  Eigen::HouseholderQR<Matrix> qr(h);
  Matrix Q = qr.householderQ();
  s.N = Q.rightCols(n - 1);
  return s;
}

struct Barrier {
  const SocpProblem* p;

  double min_slack(const Vector& x) const {
    double m = std::numeric_limits<double>::infinity();
    for (const SocrCone& cone : p->cones)
      m = std::min(m, cone.plus_slack(x) / std::max(1.0, cone.b().norm()));
    for (const auto& [a, beta] : p->linears)
      m = std::min(m, (a.dot(x) - beta) / std::max(1.0, a.norm()));
    return m;
  }

  bool strictly_feasible(const Vector& x, double margin = 0.0) const {
    return min_slack(x) > margin;
  }

  // phi = -sum log((b'x)^2 - ||B'x||^2) - sum log(a'x - beta)
  double value(const Vector& x) const {
    double phi = 0.0;
    for (const SocrCone& cone : p->cones) {
      const double r = -quad_value(cone.A(), x);
      if (r <= 0 || cone.b().dot(x) <= 0)
        return std::numeric_limits<double>::infinity();
      phi -= std::log(r);
    }
    for (const auto& [a, beta] : p->linears) {
      const double s = a.dot(x) - beta;
      if (s <= 0) return std::numeric_limits<double>::infinity();
      phi -= std::log(s);
    }
    return phi;
  }

  Vector gradient(const Vector& x) const {
    Vector g = Vector::Zero(x.size());
    for (const SocrCone& cone : p->cones) {
      const double r = -quad_value(cone.A(), x);
      g += 2.0 * (cone.A().mat() * x) / r;
    }
    for (const auto& [a, beta] : p->linears) g -= a / (a.dot(x) - beta);
    return g;
  }

  Matrix hessian(const Vector& x) const {
    const Index n = x.size();
    Matrix H = Matrix::Zero(n, n);
    for (const SocrCone& cone : p->cones) {
      const double r = -quad_value(cone.A(), x);
      const Vector ax = cone.A().mat() * x;
      H += 2.0 * cone.A().mat() / r + 4.0 * (ax * ax.transpose()) / (r * r);
    }
    for (const auto& [a, beta] : p->linears) {
      const double s = a.dot(x) - beta;
      H += (a * a.transpose()) / (s * s);
    }
    return H;
  }

  int degree() const {
    return 2 * static_cast<int>(p->cones.size()) +
           static_cast<int>(p->linears.size());
  }
};

// Phase 1: maximize the normalized minimum slack over the slice by
// subgradient ascent; deterministic starts.
std::optional<Vector> phase1(const SocpProblem& p, const Slice& slice,
                             const Barrier& barrier) {
  const Index m = slice.N.cols();
  const auto subgradient = [&](const Vector& x) {
    // Subgradient of the active (minimal) normalized slack.
    double best = std::numeric_limits<double>::infinity();
    Vector g = Vector::Zero(x.size());
    for (const SocrCone& cone : p.cones) {
      const double scale = std::max(1.0, cone.b().norm());
      const double s = cone.plus_slack(x) / scale;
      if (s < best) {
        best = s;
        Vector Bx = cone.B().transpose() * x;
        const double nb = Bx.norm();
        g = (cone.b() - (nb > 1e-14 ? Vector(cone.B() * (Bx / nb))
                                    : Vector(Vector::Zero(x.size())))) /
            scale;
      }
    }
    for (const auto& [a, beta] : p.linears) {
      const double scale = std::max(1.0, a.norm());
      const double s = (a.dot(x) - beta) / scale;
      if (s < best) {
        best = s;
        g = a / scale;
      }
    }
    return g;
  };

  Vector best_z;
  double best_val = -std::numeric_limits<double>::infinity();
  std::vector<Vector> starts = {Vector::Zero(m)};
  for (Index i = 0; i < std::min<Index>(m, 4); ++i) {
    starts.push_back(Vector::Unit(m, i));
    starts.push_back(-Vector::Unit(m, i));
  }
  for (Vector z : starts) {
    double val = barrier.min_slack(slice.point(z));
    for (int it = 0; it < 400 && val <= 1e-4; ++it) {
      const Vector g = slice.N.transpose() * subgradient(slice.point(z));
      const double gn = g.norm();
      if (gn <= 1e-15) break;
      const double step = 1.0 / std::sqrt(1.0 + it);
      Vector zc = z + step * g / gn;
      const double vc = barrier.min_slack(slice.point(zc));
      if (vc > val) {
        z = zc;
        val = vc;
      } else if (it > 50) {
        break;
      }
    }
    if (val > best_val) {
      best_val = val;
      best_z = z;
    }
  }
  if (best_val <= 1e-10) return std::nullopt;
  return slice.point(best_z);
}

}  // namespace

SocpSolution solve(const SocpProblem& problem, std::optional<Vector> x0) {
  const Index n = problem.c.size();
  if (problem.cones.empty())
    throw std::invalid_argument("socp: at least one cone is required");
  for (const SocrCone& cone : problem.cones)
    if (cone.dim() != n)
      throw std::invalid_argument("socp: cone dimension mismatch");
  if (problem.h.size() != n)
    throw std::invalid_argument("socp: hyperplane dimension mismatch");

  const Slice slice = make_slice(problem.h);
  const Barrier barrier{&problem};

  SocpSolution sol;
  Vector x;
  if (x0 && barrier.strictly_feasible(*x0) &&
      std::abs(problem.h.dot(*x0) - 1.0) <= 1e-9) {
    x = *x0;
  } else {
    const auto feasible = phase1(problem, slice, barrier);
    if (!feasible) {
      sol.status = SocpSolution::Status::Infeasible;
      return sol;
    }
    x = *feasible;
  }
  // Express x through the slice so the equality holds to machine precision.
  Vector z = slice.N.transpose() * (x - slice.x_p);
  x = slice.point(z);

  const double nu = barrier.degree();
  double mu = 1.0;
  int newton = 0;
  const double cnorm = std::max(1.0, problem.c.norm());

  while (mu * nu > kMuTarget && newton < kMaxNewton) {
    // Newton steps on f(z) = c'x + mu * phi(x).
    for (int inner = 0; inner < 40 && newton < kMaxNewton; ++inner) {
      ++newton;
      const Vector grad_x = problem.c + mu * barrier.gradient(x);
      const Vector g = slice.N.transpose() * grad_x;
      Matrix H = slice.N.transpose() *
                 (mu * barrier.hessian(x)) * slice.N;

      Eigen::LDLT<Matrix> ldlt(H);
      Vector dz;
      if (ldlt.info() == Eigen::Success) {
        dz = -ldlt.solve(g);
      }
      if (ldlt.info() != Eigen::Success || !dz.allFinite() ||
          g.dot(dz) > 0) {
        H += 1e-10 * std::max(1.0, H.cwiseAbs().maxCoeff()) *
             Matrix::Identity(H.rows(), H.cols());
        dz = -H.ldlt().solve(g);
      }
      const double decrement = -g.dot(dz);
      if (!(decrement > 1e-18 * cnorm)) break;

      const double f0 = problem.c.dot(x) + mu * barrier.value(x);
      double alpha = 1.0;
      Vector xc;
      bool accepted = false;
      for (int bt = 0; bt < 60; ++bt) {
        xc = slice.point(z + alpha * dz);
        if (barrier.strictly_feasible(xc)) {
          const double fc = problem.c.dot(xc) + mu * barrier.value(xc);
          if (fc <= f0 - kArmijo * alpha * decrement) {
            accepted = true;
            break;
          }
        }
        alpha *= 0.5;
      }
      if (!accepted) break;
      z += alpha * dz;
      x = xc;
      if (x.norm() > kBlowup) {
        sol.status = SocpSolution::Status::Unbounded;
        sol.x = x;
        sol.value = problem.c.dot(x);
        sol.newton_steps = newton;
        return sol;
      }
      if (decrement < 1e-12 * (1.0 + std::abs(problem.c.dot(x)))) break;
    }
    sol.outer_objectives.push_back(problem.c.dot(x));
    mu *= kSigma;
  }

  sol.x = x;
  sol.value = problem.c.dot(x);
  sol.newton_steps = newton;
  sol.kkt_residual =
      (slice.N.transpose() * (problem.c + mu / kSigma * barrier.gradient(x)))
          .norm() /
      cnorm;
  sol.status = (mu * nu <= kMuTarget) ? SocpSolution::Status::Optimal
                                      : SocpSolution::Status::MaxIter;
  return sol;
}

}  // namespace socdc
