#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "flexrig/motion_io.hpp"
#include "flexrig/movability/classify.hpp"

namespace flexrig {

inline nlohmann::json track_to_json(const TrackResult& r) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : r.samples) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.points) pts.push_back({p.x, p.y});
    samples.push_back({{"step", s.step}, {"arc", s.arc}, {"points", pts}});
  }
  return {{"kernel_dimension", r.kernel_dimension}, {"samples", samples}};
}

inline TrackResult track_from_json(const nlohmann::json& j) {
  try {
    TrackResult r;
    r.kernel_dimension = j.value("kernel_dimension", 0);
    for (const auto& s : j.at("samples")) {
      TrackSample t;
      t.step = s.at("step").get<int>();
      t.arc = s.value("arc", 0.0);
      for (const auto& p : s.at("points")) t.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      t.min_pair_distance = detail::min_pair_distance(t.points);
      r.samples.push_back(std::move(t));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("path JSON: ") + e.what());
  }
}

// {"construction", "labeling", "details", and one of "motion", "dixon", "path"}
inline nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json j = {{"construction", c.construction}, {"labeling", labeling_to_json(c.labeling)}, {"details", c.details}};
  if (c.motion) j["motion"] = motion_to_json(*c.motion);
  if (c.dixon) {
    nlohmann::json param = nlohmann::json::array();
    for (const Rational& p : c.dixon->param) param.push_back(to_fraction_string(p));
    j["dixon"] = {{"side", c.dixon->side}, {"param", param}};
  }
  if (c.path) j["path"] = track_to_json(*c.path);
  return j;
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    c.construction = j.value("construction", "");
    c.labeling = labeling_from_json(j.at("labeling"));
    if (j.contains("details")) c.details = j.at("details");
    if (j.contains("motion")) c.motion = motion_from_json(j.at("motion"));
    if (j.contains("dixon")) {
      std::vector<Rational> param;
      for (const auto& p : j.at("dixon").at("param")) param.push_back(parse_fraction(p.get<std::string>()));
      c.dixon = dixon_one(c.labeling.graph, param);
      if (c.dixon->side != j.at("dixon").at("side").get<std::vector<int>>()) {
        throw ParseError("certificate JSON: Dixon sides do not match the graph");
      }
    }
    if (j.contains("path")) c.path = track_from_json(j.at("path"));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace flexrig
