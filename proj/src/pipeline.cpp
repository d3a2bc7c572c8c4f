// Copyright 2026 The sl2pol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sl2pol/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sl2pol/errors.hpp"

namespace sl2pol {

namespace {

struct KindInfo {
  ElementKind kind;
  const char* name;
  std::size_t arity;
};

constexpr KindInfo kKinds[] = {
    {ElementKind::Phase, "phase", 1},
    {ElementKind::Rotate, "rotate", 1},
    {ElementKind::Attenuate, "attenuate", 2},
    {ElementKind::Squeeze45, "squeeze45", 1},
    {ElementKind::Raw, "raw", 8},
};

const KindInfo* find_kind(const std::string& name) {
  for (const auto& k : kKinds) {
    if (name == k.name) return &k;
  }
  return nullptr;
}

const KindInfo& info_of(ElementKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw std::invalid_argument("bad element kind");
}

double parse_number(const std::string& token, int line) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(value)) {
    throw ParseError(line, token, "expected a finite number");
  }
  return value;
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

PipelineSpec parse_pipeline(const std::string& text, double polarizer_eta) {
  PipelineSpec spec;
  std::istringstream in(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    const auto hash = raw_line.find('#');
    if (hash != std::string::npos) raw_line.resize(hash);
    std::istringstream line(raw_line);
    std::string head;
    if (!(line >> head)) continue;  // blank or comment-only
    const KindInfo* kind = find_kind(head);
    if (kind == nullptr) {
      throw UnknownKind(line_no, head);
    }
    Element e{kind->kind, {}};
    std::string token;
    while (line >> token) {
      if (kind->kind == ElementKind::Attenuate && token == "inf") {
        e.params.push_back(polarizer_eta);
      } else {
        e.params.push_back(parse_number(token, line_no));
      }
    }
    if (e.params.size() != kind->arity) {
      throw BadArity(line_no, head,
                     "expected " + std::to_string(kind->arity) +
                         " parameter(s), got " + std::to_string(e.params.size()));
    }
    spec.elements.push_back(std::move(e));
  }
  if (spec.elements.empty()) {
    throw ParseError(line_no, "", "pipeline has no elements");
  }
  return spec;
}

std::string print_pipeline(const PipelineSpec& spec) {
  std::string out;
  for (const auto& e : spec.elements) {
    out += info_of(e.kind).name;
    for (double p : e.params) {
      out += ' ';
      out += fmt17(p);
    }
    out += '\n';
  }
  return out;
}

Mat2C element_matrix(const Element& e) {
  switch (e.kind) {
    case ElementKind::Phase:
      return element_phase(e.params[0]);
    case ElementKind::Rotate:
      return element_rotation(e.params[0]);
    case ElementKind::Attenuate:
      return element_attenuator(e.params[0], e.params[1]);
    case ElementKind::Squeeze45:
      return element_squeeze45(e.params[0]);
    case ElementKind::Raw: {
      std::array<double, 8> v;
      std::copy(e.params.begin(), e.params.end(), v.begin());
      return Mat2C::from_array(v);
    }
  }
  throw std::invalid_argument("bad element kind");
}

CoherencyMatrix parse_state_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, "", std::string("state JSON: ") + e.what());
  }
  if (j.is_array()) {
    if (j.size() != 8) {
      throw ParseError(0, "", "coherency array must hold 8 numbers");
    }
    std::array<double, 8> v;
    for (std::size_t i = 0; i < 8; ++i) {
      if (!j[i].is_number()) {
        throw ParseError(0, "", "coherency array must hold 8 numbers");
      }
      v[i] = j[i].get<double>();
    }
    return CoherencyMatrix(Mat2C::from_array(v));
  }
  if (j.is_object()) {
    for (const char* key : {"a", "b", "phi1", "phi2"}) {
      if (!j.contains(key) || !j[key].is_number()) {
        throw ParseError(0, key, "state object needs numeric field");
      }
    }
    const double a = j["a"].get<double>();
    const double b = j["b"].get<double>();
    const double phi1 = j["phi1"].get<double>();
    const double phi2 = j["phi2"].get<double>();
    const double sigma = j.value("sigma", 0.0);
    return coherency_from_params(a, b, CoherencePars(sigma, phi1 - phi2));
  }
  throw ParseError(0, "", "state must be a JSON object or 8-number array");
}

namespace {

StepRecord record_state(const CoherencyMatrix& c) {
  const SphereGeometry g = sphere_geometry(c);
  return {g.stokes, g.spherical.radius, g.spherical.xi, g.spherical.delta,
          g.s0, g.degree};
}

}  // namespace

RunReport run(const PipelineSpec& spec, const CoherencyMatrix& initial,
              std::optional<double> classify_tol) {
  RunReport report;
  CoherencyMatrix c = initial;
  report.steps.push_back(record_state(c));
  for (const auto& e : spec.elements) {
    c = transform_coherency(element_matrix(e), c);
    report.steps.push_back(record_state(c));
  }
  const CoherencyEigen eig = diagonalize_coherency(c);
  const Mat2C diag =
      Mat2C::diag(eig.eigenvalues.first, eig.eigenvalues.second);
  report.final_class =
      classify_tol ? classify(diag, *classify_tol) : classify(diag);
  return report;
}

std::string emit_csv(const RunReport& report) {
  std::string out = "step,S0,S3,S1,S2,R,xi,delta,f\n";
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const StepRecord& s = report.steps[i];
    out += std::to_string(i);
    for (double v : {s.s0, s.stokes.s3, s.stokes.s1, s.stokes.s2, s.radius,
                     s.xi, s.delta, s.degree}) {
      out += ',';
      out += fmt17(v);
    }
    out += '\n';
  }
  return out;
}

std::string emit_json(const RunReport& report) {
  std::string out = "{\n  \"steps\": [\n";
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const StepRecord& s = report.steps[i];
    out += "    {\"step\": " + std::to_string(i);
    const char* names[] = {"S0", "S3", "S1", "S2", "R", "xi", "delta", "f"};
    const double values[] = {s.s0,     s.stokes.s3, s.stokes.s1,
                             s.stokes.s2, s.radius, s.xi,
                             s.delta,  s.degree};
    for (int k = 0; k < 8; ++k) {
      out += std::string(", \"") + names[k] + "\": " + fmt17(values[k]);
    }
    out += i + 1 < report.steps.size() ? "},\n" : "}\n";
  }
  out += "  ],\n";
  out += "  \"classification\": {\"tag\": \"" +
         std::string(to_string(report.final_class.tag)) +
         "\", \"detP\": " + fmt17(report.final_class.det_p) +
         ", \"tol\": " + fmt17(report.final_class.tol) + "}\n";
  out += "}\n";
  return out;
}

}  // namespace sl2pol
