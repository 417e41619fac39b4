// Copyright 2026 The typeb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "typeb/problem_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace typeb {

namespace {

using nlohmann::json;

Rational read_rational(const json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument(where + ": expected a rational string or an integer");
}

VectorQ read_vector(const json& j, int d, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != d) {
    throw std::invalid_argument(where + ": expected an array of length " + std::to_string(d));
  }
  VectorQ v;
  for (const auto& e : j) v.push_back(read_rational(e, where));
  return v;
}

MatrixQ read_matrix(const json& obj, const char* key, int d, const std::string& where) {
  if (!obj.contains(key)) return zero_matrix(d);
  const json& j = obj.at(key);
  if (!j.is_array() || static_cast<int>(j.size()) != d) {
    throw std::invalid_argument(where + "." + key + ": expected a " + std::to_string(d) + "x" + std::to_string(d) +
                                " matrix");
  }
  MatrixQ m;
  for (const auto& row : j) m.push_back(read_vector(row, d, where + "." + key));
  return m;
}

json write_vector(const VectorQ& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json write_matrix(const MatrixQ& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(write_vector(row));
  return a;
}

}  // namespace

MomentProblem parse_problem(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("factors")) {
    throw std::invalid_argument("problem file needs 'dimension' and 'factors'");
  }
  if (!doc.at("dimension").is_number_integer()) throw std::invalid_argument("'dimension' must be an integer");
  MomentProblem p;
  p.dimension = doc.at("dimension").get<int>();
  if (p.dimension < 1) throw std::invalid_argument("'dimension' must be positive");
  const json& fs = doc.at("factors");
  if (!fs.is_array() || fs.empty()) throw std::invalid_argument("'factors' must be a nonempty array");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string where = "factors[" + std::to_string(i) + "]";
    const json& f = fs[i];
    if (!f.is_object() || !f.contains("x_left") || !f.contains("x_right")) {
      throw std::invalid_argument(where + ": needs x_left and x_right");
    }
    FactorSpec spec;
    spec.x_left = read_vector(f.at("x_left"), p.dimension, where + ".x_left");
    spec.x_right = read_vector(f.at("x_right"), p.dimension, where + ".x_right");
    spec.T_left = read_matrix(f, "T_left", p.dimension, where);
    spec.T_right = read_matrix(f, "T_right", p.dimension, where);
    if (f.contains("lam_left")) spec.lam_left = read_rational(f.at("lam_left"), where + ".lam_left");
    if (f.contains("lam_right")) spec.lam_right = read_rational(f.at("lam_right"), where + ".lam_right");
    p.factors.push_back(std::move(spec));
  }
  return p;
}

MomentProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open problem file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string problem_to_json(const MomentProblem& problem) {
  json doc;
  doc["dimension"] = problem.dimension;
  doc["factors"] = json::array();
  for (const auto& f : problem.factors) {
    json j;
    j["x_left"] = write_vector(f.x_left);
    j["x_right"] = write_vector(f.x_right);
    j["T_left"] = write_matrix(f.T_left);
    j["T_right"] = write_matrix(f.T_right);
    j["lam_left"] = to_string(f.lam_left);
    j["lam_right"] = to_string(f.lam_right);
    doc["factors"].push_back(std::move(j));
  }
  return doc.dump(2);
}

}  // namespace typeb
