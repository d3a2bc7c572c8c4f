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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "sl2pol/errors.hpp"
#include "sl2pol/pipeline.hpp"

using namespace sl2pol;

TEST_CASE("parse_pipeline grammar") {
  const PipelineSpec spec = parse_pipeline("phase 0.5\nrotate 0.3\n");
  REQUIRE(spec.elements.size() == 2);
  CHECK(spec.elements[0].kind == ElementKind::Phase);
  CHECK(spec.elements[0].params[0] == 0.5);
  CHECK(spec.elements[1].kind == ElementKind::Rotate);

  // Comments and blank lines are ignored.
  const PipelineSpec with_noise =
      parse_pipeline("# header\n\nphase 0.1  # trailing\n");
  CHECK(with_noise.elements.size() == 1);

  CHECK_THROWS_AS(parse_pipeline("polarizer\n"), UnknownKind);
  CHECK_THROWS_AS(parse_pipeline("attenuate 0\n"), BadArity);
  CHECK_THROWS_AS(parse_pipeline("phase zero\n"), ParseError);
  CHECK_THROWS_AS(parse_pipeline("# only comments\n"), ParseError);

  // 'inf' in attenuate becomes the polarizer eta.
  const PipelineSpec pol = parse_pipeline("attenuate 0 inf\n", 40.0);
  CHECK(pol.elements[0].params[1] == 40.0);
}

TEST_CASE("parse after print is identity on canonical text") {
  const PipelineSpec spec =
      parse_pipeline("phase 0.5\nrotate 0.3\nattenuate 0.25 inf\nraw "
                     "1 0 0 0 0 0 1 0\n");
  const std::string canonical = print_pipeline(spec);
  CHECK(print_pipeline(parse_pipeline(canonical)) == canonical);
}

TEST_CASE("parse_state_json") {
  const CoherencyMatrix jones =
      parse_state_json(R"({"a": 1.0, "b": 0.5, "phi1": 0.0, "phi2": 0.2})");
  CHECK(jones.s11() == doctest::Approx(1.0));
  CHECK(jones.s22() == doctest::Approx(0.25));
  CHECK(std::abs(jones.s12()) == doctest::Approx(0.5).epsilon(1e-13));

  const CoherencyMatrix raw =
      parse_state_json("[1.0, 0.0, 0.5, 0.0, 0.5, 0.0, 1.0, 0.0]");
  CHECK(raw.s12().real() == 0.5);

  CHECK_THROWS_AS(parse_state_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_state_json("[1, 2, 3]"), ParseError);
  CHECK_THROWS_AS(parse_state_json(R"({"a": 1.0})"), ParseError);
  // Hermitian but indefinite matrix is rejected as a state.
  CHECK_THROWS_AS(parse_state_json("[1, 0, 2, 0, 2, 0, 1, 0]"), Unphysical);
}

TEST_CASE("run: no-op pipeline returns the input state") {
  const CoherencyMatrix c = coherency_from_params(1.0, 0.6, {0.3, 0.1});
  const RunReport report = run(parse_pipeline("phase 0\n"), c);
  REQUIRE(report.steps.size() == 2);
  CHECK(report.steps[0].s0 == doctest::Approx(report.steps[1].s0).epsilon(1e-14));
  CHECK(report.steps[0].stokes.s1 ==
        doctest::Approx(report.steps[1].stokes.s1).epsilon(1e-13));
}

TEST_CASE("run: pure state stays pure under attenuation") {
  const CoherencyMatrix pure = coherency_from_params(1.0, 1.0, {0.0, 0.0});
  const RunReport report = run(parse_pipeline("attenuate 0 10\n"), pure);
  for (const auto& step : report.steps) {
    CHECK(step.degree == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("run: S0^2 - R^2 constant under unimodular elements") {
  const CoherencyMatrix c = coherency_from_params(1.0, 1.0,
                                                  {std::log(2.0), 0.0});
  const RunReport report =
      run(parse_pipeline("rotate 0.7\nphase 1.1\nsqueeze45 0.4\n"), c);
  const double inv0 = report.steps[0].s0 * report.steps[0].s0 -
                      report.steps[0].radius * report.steps[0].radius;
  for (const auto& step : report.steps) {
    const double inv = step.s0 * step.s0 - step.radius * step.radius;
    CHECK(inv == doctest::Approx(inv0).epsilon(1e-10));
  }
}

TEST_CASE("run: final classification") {
  const CoherencyMatrix partial = coherency_from_params(1.0, 1.0, {0.5, 0.0});
  CHECK(run(parse_pipeline("phase 0\n"), partial).final_class.tag ==
        MassTag::Massive);
  const CoherencyMatrix coherent = coherency_from_params(1.0, 1.0, {0.0, 0.0});
  CHECK(run(parse_pipeline("phase 0\n"), coherent).final_class.tag ==
        MassTag::Massless);
}

TEST_CASE("emit: shapes and determinism") {
  const CoherencyMatrix c = coherency_from_params(1.0, 0.7, {0.2, -0.4});
  const PipelineSpec spec = parse_pipeline("rotate 0.5\n");
  const RunReport report = run(spec, c);

  const std::string csv = emit_csv(report);
  // Header plus one row per state (input + one element).
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.rfind("step,S0,S3,S1,S2,R,xi,delta,f\n", 0) == 0);

  // Byte-identical on repeated runs.
  CHECK(emit_csv(run(spec, c)) == csv);
  CHECK(emit_json(run(spec, c)) == emit_json(report));

  // The JSON parses and round-trips every value losslessly.
  const nlohmann::json j = nlohmann::json::parse(emit_json(report));
  REQUIRE(j["steps"].size() == report.steps.size());
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    CHECK(j["steps"][i]["S0"].get<double>() == report.steps[i].s0);
    CHECK(j["steps"][i]["R"].get<double>() == report.steps[i].radius);
    CHECK(j["steps"][i]["f"].get<double>() == report.steps[i].degree);
  }
  CHECK(j["classification"]["tag"].get<std::string>() ==
        to_string(report.final_class.tag));
}
