#ifndef CONGLAB_JSON_IO_HPP
#define CONGLAB_JSON_IO_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "conglab/surfaces.hpp"
#include "conglab/trisecant.hpp"

namespace conglab {

inline constexpr const char* kSchemaVersion = "v1";

inline nlohmann::json poly_to_json(const MultiPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (auto e : m) exps.push_back(static_cast<int>(e));
    terms.push_back(nlohmann::json::array({exps, c}));
  }
  return {{"vars", f.nvars()}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const PrimeField& fq,
                                const nlohmann::json& j) {
  MultiPoly f(fq, j.at("vars").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (const auto& e : t.at(0)) m.push_back(e.get<std::uint8_t>());
    f.add_term(m, t.at(1).get<Fe>());
  }
  return f;
}

inline nlohmann::json surface_to_json(const SurfaceModel& model) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : model.generators) gens.push_back(poly_to_json(g));
  nlohmann::json param = nlohmann::json::array();
  for (const auto& p : model.parametrization) param.push_back(poly_to_json(p));
  return {{"schema", kSchemaVersion},
          {"type", "surface-model"},
          {"n", model.n},
          {"q", model.q},
          {"seed", model.seed},
          {"provenance", model.provenance},
          {"degree", model.degree},
          {"source_vars", model.source_vars},
          {"generators", gens},
          {"parametrization", param}};
}

inline SurfaceModel surface_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<std::string>() != kSchemaVersion)
    throw std::runtime_error("surface_from_json: unsupported schema version");
  SurfaceModel model;
  model.n = j.at("n").get<int>();
  model.q = j.at("q").get<std::uint32_t>();
  model.seed = j.at("seed").get<std::uint64_t>();
  model.provenance = j.at("provenance").get<std::string>();
  model.degree = j.at("degree").get<int>();
  model.source_vars = j.at("source_vars").get<std::size_t>();
  PrimeField fq(model.q);
  for (const auto& g : j.at("generators"))
    model.generators.push_back(poly_from_json(fq, g));
  for (const auto& p : j.at("parametrization"))
    model.parametrization.push_back(poly_from_json(fq, p));
  return model;
}

// Wall time is intentionally not serialized: identical (q, seed, trials)
// must produce byte-identical reports.
inline nlohmann::json report_to_json(const TrisecantReport& rep) {
  return {{"schema", kSchemaVersion},
          {"type", "trisecant-report"},
          {"family", rep.family},
          {"q", rep.q},
          {"seed", rep.seed},
          {"trials", rep.trials},
          {"points", rep.points},
          {"counts", rep.counts},
          {"contained", rep.contained},
          {"mode", rep.mode},
          {"anomalies", rep.anomalies}};
}

inline TrisecantReport report_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<std::string>() != kSchemaVersion)
    throw std::runtime_error("report_from_json: unsupported schema version");
  if (j.at("type").get<std::string>() != "trisecant-report")
    throw std::runtime_error("report_from_json: not a trisecant report");
  TrisecantReport rep;
  rep.family = j.at("family").get<std::string>();
  rep.q = j.at("q").get<std::uint32_t>();
  rep.seed = j.at("seed").get<std::uint64_t>();
  rep.trials = j.at("trials").get<int>();
  rep.points = j.at("points").get<std::vector<std::vector<Fe>>>();
  rep.counts = j.at("counts").get<std::vector<long>>();
  rep.contained = j.at("contained").get<std::vector<long>>();
  rep.mode = j.at("mode").get<long>();
  rep.anomalies = j.at("anomalies").get<std::vector<int>>();
  return rep;
}

inline nlohmann::json plane_section_to_json(const PlaneSectionReport& rep) {
  return {{"schema", kSchemaVersion},
          {"type", "plane-section-report"},
          {"plane", rep.plane},
          {"gcd_degree", rep.gcd_degree},
          {"residuals", rep.residuals}};
}

}  // namespace conglab

#endif
