// SPDX-License-Identifier: Apache-2.0
//
// JSON form of a step graphon:
//
//   {"measures": ["1/2", "1/2"], "values": [0, 0.5, 0.5, 0]}
//
// "measures" are exact rationals written "p/q"; "values" is the k x k matrix in
// row-major order. A nested array of rows is also accepted on input.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphlab/errors.hpp"
#include "graphlab/graphon.hpp"

namespace glab {

inline nlohmann::json graphon_to_json(const StepGraphon& w) {
  nlohmann::json out;
  auto& measures = out["measures"] = nlohmann::json::array();
  for (const auto& m : w.measures()) measures.push_back(m.to_string());
  out["values"] = w.values();
  return out;
}

inline StepGraphon graphon_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("measures") || !doc.contains("values")) {
    throw ValidationError("graphon JSON: expected an object with \"measures\" and \"values\"");
  }
  std::vector<Rational> measures;
  for (const auto& m : doc.at("measures")) {
    if (m.is_string()) measures.push_back(Rational::parse(m.get<std::string>()));
    else if (m.is_number_integer()) measures.emplace_back(m.get<std::int64_t>());
    else throw ValidationError("graphon JSON: measures must be \"p/q\" strings");
  }
  std::vector<double> values;
  try {
    for (const auto& v : doc.at("values")) {
      if (v.is_array()) {
        for (const auto& x : v) values.push_back(x.get<double>());
      } else {
        values.push_back(v.get<double>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("graphon JSON: bad values: ") + e.what());
  }
  return StepGraphon(std::move(measures), std::move(values));
}

inline StepGraphon read_graphon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graphon file " + path);
  try {
    return graphon_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("graphon file " + path + ": " + e.what());
  }
}

}  // namespace glab
