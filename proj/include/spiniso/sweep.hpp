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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spiniso/isomer.hpp"

// Scenario configuration, sweep execution and report serialization for the
// command-line front end. Everything here is deterministic: identical
// configs (including the seed) produce byte-identical output.

namespace spiniso {

enum class OutputFormat { Csv, Json };
enum class GasVariant { Coherent, Mixed };

struct SweepGrid {
  double p_start = 0.0;
  double p_end = 0.0;
  std::uint64_t p_steps = 1;
};

struct ScenarioConfig {
  SweepGrid sweep;
  TwirlMethod method = TwirlMethod::Exact;
  std::uint64_t mc_samples = 100000;
  std::uint64_t seed = 0;
  double damping = 1.0;
  GasVariant gas_variant = GasVariant::Coherent;
  OutputFormat output_format = OutputFormat::Csv;
  std::string output_path = "-";  // "-" means standard output
};

struct SweepRow {
  double p = 0.0;
  double p_prime = 0.0;
  double para_gas = 0.0;
  double ortho_gas = 0.0;
  double ratio_gas = 0.0;
  double para_liq = 0.0;
  double ortho_liq = 0.0;
  double ratio_liq = 0.0;
  double negativity_liq = 0.0;
  int entangled = 0;
  double purity_gas = 0.0;
  double purity_liq = 0.0;
  double entropy_gas_bits = 0.0;
  double sx_gas = 0.0;
  double sy_gas = 0.0;
  double sz_gas = 0.0;
  double sx_liq = 0.0;
  double sy_liq = 0.0;
  double sz_liq = 0.0;
  /// Trace distance of the Monte-Carlo liquid state to the closed-form one;
  /// absent for the exact method.
  std::optional<double> mc_trace_dist;
};

/// Column order shared by the CSV header and the JSON object keys.
const std::array<const char*, 20>& sweep_columns();

/// Parse a JSON scenario document, applying defaults for absent optional
/// fields. Unknown keys are rejected. Throws ConfigError with a line/column
/// position for malformed JSON and with the field name for invariant
/// violations.
ScenarioConfig parse_config(const std::string& text);

/// Check config invariants; throws ConfigError naming the offending field.
void validate_config(const ScenarioConfig& cfg);

/// Evaluate the p grid p_start + k (p_end - p_start)/(p_steps - 1)
/// (a single point when p_steps = 1): build the gas state per gas_variant,
/// run the gas -> liquid transition, and collect the report scalars.
std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg);

/// Serialize rows as CSV or JSON per cfg.output_format. Reals carry 12
/// significant digits, '.' decimal separator, '\n' line endings. Infinite
/// ratios become the token `inf` (the string "inf" in JSON); an absent
/// mc_trace_dist becomes an empty CSV field / JSON null.
std::string emit(const std::vector<SweepRow>& rows, const ScenarioConfig& cfg);

/// 12-significant-digit, locale-independent number formatting.
std::string format_number(double v);

}  // namespace spiniso
