#pragma once

#include "socdc/applications.hpp"
#include "socdc/cutgen.hpp"
#include "socdc/hullcert.hpp"

#include <json.hpp>

#include <string>

namespace socdc {

// Options carried by an instance file beyond the matrices.
struct InstanceOptions {
  double tol = kDefaultTol;
  std::uint64_t seed = 20240801ULL;
  int budget = 400;
  int samples = 10000;
};

struct LoadedInstance {
  ConeInstance instance;
  InstanceOptions options;
};

// Instance file schema (version "1"): either A0 or B0+b0, always A1,
// optional h, optional options {tol, seed, budget, samples}.
LoadedInstance load_instance(const std::string& path);
LoadedInstance parse_instance(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json vector_to_json(const Vector& v);
Matrix matrix_from_json(const nlohmann::json& j);
Vector vector_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ConditionReport& report);
nlohmann::json cut_to_json(const CutResult& cut);
nlohmann::json certify_to_json(const CertifyReport& report);
nlohmann::json trs_to_json(const TrsSolution& sol);

// Human-readable norm-form rendering of the emitted cut (common positive
// factor removed, zero columns dropped), e.g. "||(x2; x4)|| <= x3".
std::string render_cut_inequality(const CutResult& cut);

}  // namespace socdc
