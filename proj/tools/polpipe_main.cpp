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

// polpipe: run an optical-element pipeline on a polarization state and emit
// the per-step Stokes trajectory.
//
//   polpipe --pipeline elements.txt --state state.json --format csv
//
// Exit codes: 0 success, 2 parse error, 3 physics-domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sl2pol/errors.hpp"
#include "sl2pol/pipeline.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jones/Mueller polarization pipeline runner"};

  std::string pipeline_path;
  std::string state_arg;
  std::string format = "csv";
  std::string out_path = "stdout";
  std::optional<double> tol;
  double polarizer_eta = 40.0;

  app.add_option("--pipeline", pipeline_path,
                 "Pipeline file: one element per line "
                 "(phase/rotate/attenuate/squeeze45/raw)")
      ->required();
  app.add_option("--state", state_arg,
                 "Initial state: JSON file path or inline JSON")
      ->required();
  app.add_option("--format", format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "Output file, or 'stdout'");
  app.add_option("--tol", tol, "Classification tolerance band override");
  app.add_option("--polarizer-eta", polarizer_eta,
                 "Attenuation substituted for 'inf' in attenuate elements");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string pipeline_text = read_file(pipeline_path);
    const std::string state_text =
        (!state_arg.empty() && (state_arg[0] == '{' || state_arg[0] == '['))
            ? state_arg
            : read_file(state_arg);

    const sl2pol::PipelineSpec spec =
        sl2pol::parse_pipeline(pipeline_text, polarizer_eta);
    for (std::size_t i = 0; i < spec.elements.size(); ++i) {
      const auto& e = spec.elements[i];
      if (e.kind == sl2pol::ElementKind::Raw &&
          !sl2pol::is_unimodular(sl2pol::element_matrix(e), 1e-6)) {
        std::cerr << "warning: raw element " << i + 1
                  << " is not unimodular; determinants will rescale\n";
      }
    }
    const sl2pol::CoherencyMatrix initial =
        sl2pol::parse_state_json(state_text);
    const sl2pol::RunReport report = sl2pol::run(spec, initial, tol);
    const std::string payload =
        format == "json" ? sl2pol::emit_json(report) : sl2pol::emit_csv(report);

    if (out_path == "stdout") {
      std::cout << payload;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        throw std::runtime_error("cannot open output file: " + out_path);
      }
      out << payload;
    }
  } catch (const sl2pol::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const sl2pol::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
