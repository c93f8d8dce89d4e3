#include "socdc/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace socdc {

using nlohmann::json;

nlohmann::json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix: expected a nonempty array of rows");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<Index>(row.size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (Index k = 0; k < cols; ++k)
      m(i, k) = row.at(static_cast<std::size_t>(k)).get<double>();
  }
  return m;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array())
    throw std::invalid_argument("vector: expected an array");
  Vector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i)
    v[i] = j.at(static_cast<std::size_t>(i)).get<double>();
  return v;
}

LoadedInstance parse_instance(const json& j) {
  if (!j.contains("version") || j.at("version").get<std::string>() != "1")
    throw std::invalid_argument("instance file: unsupported or missing version");
  if (!j.contains("A1"))
    throw std::invalid_argument("instance file: A1 is required");

  InstanceOptions opt;
  if (j.contains("options")) {
    const auto& o = j.at("options");
    if (o.contains("tol")) opt.tol = o.at("tol").get<double>();
    if (o.contains("seed")) opt.seed = o.at("seed").get<std::uint64_t>();
    if (o.contains("budget")) opt.budget = o.at("budget").get<int>();
    if (o.contains("samples")) opt.samples = o.at("samples").get<int>();
  }

  const SymMatrix A1(matrix_from_json(j.at("A1")));
  std::optional<Vector> h;
  if (j.contains("h")) h = vector_from_json(j.at("h"));

  ConeInstance inst;
  if (j.contains("A0")) {
    inst = ConeInstance::from_matrices(SymMatrix(matrix_from_json(j.at("A0"))),
                                       A1, h);
  } else if (j.contains("B0") && j.contains("b0")) {
    inst = ConeInstance::from_Bb(matrix_from_json(j.at("B0")),
                                 vector_from_json(j.at("b0")), A1, h, opt.tol);
  } else {
    throw std::invalid_argument("instance file: need A0 or B0+b0");
  }
  inst.tol = opt.tol;
  inst.seed = opt.seed;
  inst.budget = opt.budget;
  return LoadedInstance{std::move(inst), opt};
}

LoadedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  json j;
  in >> j;
  return parse_instance(j);
}

namespace {

json interior_to_json(const InteriorPointResult& r) {
  json j;
  switch (r.status) {
    case InteriorPointResult::Status::Found:
      j["status"] = "found";
      j["xbar"] = vector_to_json(r.xbar);
      break;
    case InteriorPointResult::Status::InfeasibleCertified:
      j["status"] = "infeasible_certified";
      j["t_star"] = r.t_star;
      j["dual_value"] = r.dual_value;
      break;
    case InteriorPointResult::Status::Indeterminate:
      j["status"] = "indeterminate";
      break;
  }
  return j;
}

}  // namespace

nlohmann::json report_to_json(const ConditionReport& report) {
  json j;
  j["cond1"] = report.cond1;
  j["cond2"] = interior_to_json(report.cond2);
  json c3;
  c3["variant"] = to_string(report.cond3.kind);
  if (report.cond3.restricted)
    c3["restricted"] = matrix_to_json(report.cond3.restricted->mat());
  j["cond3"] = std::move(c3);
  json c4;
  c4["verdict"] = to_string(report.cond4.verdict);
  if (report.cond4.witness.size() > 0)
    c4["witness"] = vector_to_json(report.cond4.witness);
  if (report.cond4.restricted)
    c4["restricted"] = matrix_to_json(report.cond4.restricted->mat());
  j["cond4"] = std::move(c4);
  if (report.cond5) {
    json c5;
    c5["verdict"] = to_string(report.cond5->verdict);
    c5["reason"] = report.cond5->reason;
    if (report.cond5->witness.size() > 0)
      c5["witness"] = vector_to_json(report.cond5->witness);
    j["cond5"] = std::move(c5);
  }
  if (report.cond6) {
    json c6;
    c6["verdict"] = to_string(report.cond6->verdict);
    if (report.cond6->witness.size() > 0)
      c6["witness"] = vector_to_json(report.cond6->witness);
    j["cond6"] = std::move(c6);
  }
  return j;
}

nlohmann::json cut_to_json(const CutResult& cut) {
  json j;
  j["status"] = to_string(cut.status);
  if (!cut.ok()) {
    j["report"] = report_to_json(cut.report);
    if (!cut.note.empty()) j["note"] = cut.note;
    return j;
  }
  j["s"] = cut.s;
  j["s_pretty"] = pretty_s(cut.s);
  j["T"] = vector_to_json(
      Eigen::Map<const Vector>(cut.T.data(), static_cast<Index>(cut.T.size())));
  j["As"] = matrix_to_json(cut.As.mat());
  j["trivial"] = cut.trivial;
  if (cut.cone_s) {
    j["Bs"] = matrix_to_json(cut.cone_s->B());
    j["bs"] = vector_to_json(cut.cone_s->b());
    j["inequality"] = render_cut_inequality(cut);
  } else if (cut.halfspace_bs) {
    j["bs"] = vector_to_json(*cut.halfspace_bs);
    j["inequality"] = render_cut_inequality(cut);
  }
  if (cut.xbar.size() > 0) j["xbar"] = vector_to_json(cut.xbar);
  if (cut.epsilon_used) j["epsilon_used"] = *cut.epsilon_used;
  if (!cut.note.empty()) j["note"] = cut.note;
  j["report"] = report_to_json(cut.report);
  return j;
}

nlohmann::json certify_to_json(const CertifyReport& report) {
  json j;
  j["n_certified"] = report.n_certified;
  j["n_failed"] = report.n_failed;
  j["heuristic_h1"] = report.heuristic_h1;
  json fails = json::array();
  for (const auto& f : report.failures) {
    json e;
    e["x"] = vector_to_json(f.x);
    e["why"] = f.why;
    fails.push_back(std::move(e));
  }
  j["failures"] = std::move(fails);
  return j;
}

nlohmann::json trs_to_json(const TrsSolution& sol) {
  json j;
  j["value"] = sol.value;
  j["y"] = vector_to_json(sol.y);
  j["l"] = sol.l;
  j["u"] = sol.u;
  j["recovery_ok"] = sol.recovery_ok;
  if (!sol.note.empty()) j["note"] = sol.note;
  return j;
}

namespace {

std::string format_coeff(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string linear_term(const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) < 1e-12) continue;
    const double a = v[i];
    if (first) {
      if (std::abs(a - 1.0) < 1e-9)
        os << "x" << (i + 1);
      else if (std::abs(a + 1.0) < 1e-9)
        os << "-x" << (i + 1);
      else
        os << format_coeff(a) << "*x" << (i + 1);
      first = false;
    } else {
      os << (a > 0 ? " + " : " - ");
      if (std::abs(std::abs(a) - 1.0) < 1e-9)
        os << "x" << (i + 1);
      else
        os << format_coeff(std::abs(a)) << "*x" << (i + 1);
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string render_cut_inequality(const CutResult& cut) {
  if (cut.cone_s) {
    const Matrix& B = cut.cone_s->B();
    const Vector& b = cut.cone_s->b();
    const double scale = b.cwiseAbs().maxCoeff();
    std::ostringstream os;
    os << "||(";
    bool first = true;
    for (Index jcol = 0; jcol < B.cols(); ++jcol) {
      if (B.col(jcol).norm() < 1e-12) continue;
      if (!first) os << "; ";
      os << linear_term(Vector(B.col(jcol) / scale));
      first = false;
    }
    os << ")|| <= " << linear_term(Vector(b / scale));
    return os.str();
  }
  if (cut.halfspace_bs && cut.halfspace_bs->norm() > 0) {
    const double scale = cut.halfspace_bs->cwiseAbs().maxCoeff();
    return linear_term(Vector(*cut.halfspace_bs / scale)) + " >= 0";
  }
  return "0 <= 0";
}

}  // namespace socdc
