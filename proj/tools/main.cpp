// Copyright 2026 The spiniso developers
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

// spiniso: proton spin-isomer toolbox for water-like two-spin systems.
//
//   spiniso sweep    --config cfg.json [--output out.csv] [--format csv|json]
//                    [--seed N] [--samples N] [--method exact|mc]
//   spiniso validate --config cfg.json
//   spiniso show     --state gas|liquid --p 0.25
//
// Exit codes: 0 success, 1 configuration or I/O error, 2 numerical
// validation failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spiniso/isomer.hpp"
#include "spiniso/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitValidation = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw spiniso::ConfigError("cannot open config file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path == "-") {
    std::cout << bytes;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw spiniso::ConfigError("cannot open output file for writing: " + path);
  }
  out << bytes;
  out.flush();
  if (!out) {
    throw spiniso::ConfigError("failed writing output file: " + path);
  }
}

void print_matrix(const spiniso::ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%9.6f%+9.6fi", m(r, c).real(), m(r, c).imag());
      std::cout << (c > 0 ? "  " : "") << buf;
    }
    std::cout << '\n';
  }
}

struct SweepFlags {
  std::string config_path;
  std::optional<std::string> output;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<std::string> method;
};

int run_sweep_cmd(const SweepFlags& flags) {
  spiniso::ScenarioConfig cfg = spiniso::parse_config(read_file(flags.config_path));
  if (flags.output) {
    cfg.output_path = *flags.output;
  }
  if (flags.format) {
    if (*flags.format == "csv") {
      cfg.output_format = spiniso::OutputFormat::Csv;
    } else if (*flags.format == "json") {
      cfg.output_format = spiniso::OutputFormat::Json;
    } else {
      throw spiniso::ConfigError("--format must be csv or json");
    }
  }
  if (flags.seed) {
    cfg.seed = *flags.seed;
  }
  if (flags.samples) {
    cfg.mc_samples = *flags.samples;
  }
  if (flags.method) {
    if (*flags.method == "exact") {
      cfg.method = spiniso::TwirlMethod::Exact;
    } else if (*flags.method == "mc") {
      cfg.method = spiniso::TwirlMethod::Mc;
    } else {
      throw spiniso::ConfigError("--method must be exact or mc");
    }
  }
  spiniso::validate_config(cfg);
  const std::vector<spiniso::SweepRow> rows = spiniso::run_sweep(cfg);
  write_output(cfg.output_path, spiniso::emit(rows, cfg));
  return kExitOk;
}

int run_validate_cmd(const std::string& config_path) {
  spiniso::parse_config(read_file(config_path));
  std::cout << "config ok\n";
  return kExitOk;
}

int run_show_cmd(const std::string& state, double p) {
  if (state == "gas") {
    print_matrix(spiniso::rho_gas(spiniso::GasMixParams(p)).matrix());
  } else if (state == "liquid") {
    print_matrix(spiniso::rho_liq(spiniso::WernerParams(p)).matrix());
  } else {
    throw spiniso::ConfigError("--state must be gas or liquid");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proton spin-isomer states, channels and sweeps"};
  app.require_subcommand(1);

  SweepFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep and emit a report");
  sweep->add_option("--config", sweep_flags.config_path, "scenario config JSON")
      ->required();
  sweep->add_option("--output", sweep_flags.output, "output path ('-' for stdout)");
  sweep->add_option("--format", sweep_flags.format, "csv or json");
  sweep->add_option("--seed", sweep_flags.seed, "override the RNG seed");
  sweep->add_option("--samples", sweep_flags.samples, "override mc_samples");
  sweep->add_option("--method", sweep_flags.method, "exact or mc");

  std::string validate_config_path;
  CLI::App* validate = app.add_subcommand("validate", "parse and check a config");
  validate->add_option("--config", validate_config_path, "scenario config JSON")
      ->required();

  std::string show_state;
  double show_p = 0.0;
  CLI::App* show = app.add_subcommand("show", "print a state matrix");
  show->add_option("--state", show_state, "gas or liquid")->required();
  show->add_option("--p", show_p, "singlet weight (gas: p, liquid: p')")->required();

  try {
    app.parse(argc, argv);
    if (sweep->parsed()) {
      return run_sweep_cmd(sweep_flags);
    }
    if (validate->parsed()) {
      return run_validate_cmd(validate_config_path);
    }
    return run_show_cmd(show_state, show_p);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  } catch (const spiniso::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const spiniso::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}
