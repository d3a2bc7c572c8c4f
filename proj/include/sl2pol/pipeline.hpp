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

#ifndef SL2POL_PIPELINE_HPP
#define SL2POL_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sl2pol/little_group.hpp"
#include "sl2pol/mat2.hpp"
#include "sl2pol/polarization.hpp"

namespace sl2pol {

/// Element grammar, one per line, '#' comments, angles in radians:
///   phase <delta>
///   rotate <theta>
///   attenuate <eta1> <eta2>        ('inf' stands in for the polarizer limit)
///   squeeze45 <lambda>
///   raw <8 numbers>                (re11 im11 re12 im12 re21 im21 re22 im22)
/// There is no 'polarizer' kind: it is the documented limit
/// 'attenuate 0 inf', with 'inf' replaced by polarizer_eta.
enum class ElementKind { Phase, Rotate, Attenuate, Squeeze45, Raw };

struct Element {
  ElementKind kind;
  std::vector<double> params;
};

struct PipelineSpec {
  std::vector<Element> elements;
};

PipelineSpec parse_pipeline(const std::string& text,
                            double polarizer_eta = 40.0);

/// Canonical form: one element per line, parameters at 17 significant
/// digits.  parse_pipeline(print_pipeline(s)) reproduces s.
std::string print_pipeline(const PipelineSpec& spec);

/// The 2x2 Jones-space matrix of one element.
Mat2C element_matrix(const Element& e);

struct StepRecord {
  StokesVector stokes;
  double radius, xi, delta, s0, degree;
};

/// One row per state, input state included, plus the classification of the
/// diagonalized final coherency matrix.
struct RunReport {
  std::vector<StepRecord> steps;
  LittleGroupClass final_class;
};

/// Parse an initial state: either a Jones-parameter object
/// {"a":..,"b":..,"phi1":..,"phi2":..} with optional "sigma", or an
/// 8-number coherency-matrix array.
CoherencyMatrix parse_state_json(const std::string& text);

RunReport run(const PipelineSpec& spec, const CoherencyMatrix& initial,
              std::optional<double> classify_tol = std::nullopt);

/// Deterministic emissions: fixed field order, 17-significant-digit floats.
/// CSV columns: step, S0, S3, S1, S2, R, xi, delta, f.
std::string emit_csv(const RunReport& report);
std::string emit_json(const RunReport& report);

}  // namespace sl2pol

#endif  // SL2POL_PIPELINE_HPP
