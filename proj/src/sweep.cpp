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

#include "spiniso/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace spiniso {

namespace {

using nlohmann::json;

// nlohmann reports a byte offset; translate to 1-based line/column.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const char* scope) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : known) {
      if (item.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw ConfigError(std::string("unknown config key \"") + item.key() + "\" in " +
                        scope);
    }
  }
}

double require_real(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw ConfigError(std::string("config field ") + key + " must be a number");
  }
  return v.get<double>();
}

std::uint64_t require_uint(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number_unsigned()) {
    throw ConfigError(std::string("config field ") + key +
                      " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::string require_string(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_string()) {
    throw ConfigError(std::string("config field ") + key + " must be a string");
  }
  return v.get<std::string>();
}

}  // namespace

const std::array<const char*, 20>& sweep_columns() {
  static const std::array<const char*, 20> cols = {
      "p",           "p_prime",     "para_gas",       "ortho_gas", "ratio_gas",
      "para_liq",    "ortho_liq",   "ratio_liq",      "negativity_liq",
      "entangled",   "purity_gas",  "purity_liq",     "entropy_gas_bits",
      "sx_gas",      "sy_gas",      "sz_gas",         "sx_liq",
      "sy_liq",      "sz_liq",      "mc_trace_dist"};
  return cols;
}

ScenarioConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ConfigError("config is not valid JSON at line " + std::to_string(line) +
                      ", column " + std::to_string(col));
  }
  if (!doc.is_object()) {
    throw ConfigError("config root must be a JSON object");
  }
  reject_unknown_keys(doc,
                      {"sweep", "method", "mc_samples", "seed", "damping", "gas_variant",
                       "output_format", "output_path"},
                      "the top-level object");
  if (!doc.contains("sweep")) {
    throw ConfigError("config field sweep is required");
  }
  const json& sweep = doc["sweep"];
  if (!sweep.is_object()) {
    throw ConfigError("config field sweep must be an object");
  }
  reject_unknown_keys(sweep, {"p_start", "p_end", "p_steps"}, "sweep");
  for (const char* k : {"p_start", "p_end", "p_steps"}) {
    if (!sweep.contains(k)) {
      throw ConfigError(std::string("config field sweep.") + k + " is required");
    }
  }

  ScenarioConfig cfg;
  cfg.sweep.p_start = require_real(sweep, "p_start");
  cfg.sweep.p_end = require_real(sweep, "p_end");
  cfg.sweep.p_steps = require_uint(sweep, "p_steps");

  if (doc.contains("method")) {
    const std::string m = require_string(doc, "method");
    if (m == "exact") {
      cfg.method = TwirlMethod::Exact;
    } else if (m == "mc") {
      cfg.method = TwirlMethod::Mc;
    } else {
      throw ConfigError("config field method must be \"exact\" or \"mc\"");
    }
  }
  if (doc.contains("mc_samples")) {
    cfg.mc_samples = require_uint(doc, "mc_samples");
  }
  if (doc.contains("seed")) {
    cfg.seed = require_uint(doc, "seed");
  }
  if (doc.contains("damping")) {
    cfg.damping = require_real(doc, "damping");
  }
  if (doc.contains("gas_variant")) {
    const std::string g = require_string(doc, "gas_variant");
    if (g == "coherent") {
      cfg.gas_variant = GasVariant::Coherent;
    } else if (g == "mixed") {
      cfg.gas_variant = GasVariant::Mixed;
    } else {
      throw ConfigError("config field gas_variant must be \"coherent\" or \"mixed\"");
    }
  }
  if (doc.contains("output_format")) {
    const std::string f = require_string(doc, "output_format");
    if (f == "csv") {
      cfg.output_format = OutputFormat::Csv;
    } else if (f == "json") {
      cfg.output_format = OutputFormat::Json;
    } else {
      throw ConfigError("config field output_format must be \"csv\" or \"json\"");
    }
  }
  if (doc.contains("output_path")) {
    cfg.output_path = require_string(doc, "output_path");
  }

  validate_config(cfg);
  return cfg;
}

void validate_config(const ScenarioConfig& cfg) {
  if (!(cfg.sweep.p_start >= 0.0)) {
    throw ConfigError("config invariant violated: sweep.p_start must be >= 0");
  }
  if (!(cfg.sweep.p_start <= cfg.sweep.p_end)) {
    throw ConfigError("config invariant violated: sweep.p_start <= sweep.p_end");
  }
  if (!(cfg.sweep.p_end <= 1.0)) {
    throw ConfigError("config invariant violated: sweep.p_end must be <= 1");
  }
  if (cfg.sweep.p_steps < 1) {
    throw ConfigError("config invariant violated: sweep.p_steps must be >= 1");
  }
  if (cfg.mc_samples < 1) {
    throw ConfigError("config invariant violated: mc_samples must be >= 1");
  }
  if (!(cfg.damping >= 0.0 && cfg.damping <= 1.0)) {
    throw ConfigError("config invariant violated: damping must lie in [0, 1]");
  }
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg) {
  validate_config(cfg);
  std::vector<SweepRow> rows;
  rows.reserve(cfg.sweep.p_steps);
  for (std::uint64_t k = 0; k < cfg.sweep.p_steps; ++k) {
    double p = cfg.sweep.p_start;
    if (cfg.sweep.p_steps > 1) {
      p += static_cast<double>(k) * (cfg.sweep.p_end - cfg.sweep.p_start) /
           static_cast<double>(cfg.sweep.p_steps - 1);
    }
    p = std::min(1.0, std::max(0.0, p));

    const GasMixParams params(p);
    const DensityMatrix gas = (cfg.gas_variant == GasVariant::Coherent)
                                  ? rho_gas(params)
                                  : rho_gas_mixed_variant(params);
    // Each grid point gets its own derived seed so Monte-Carlo rows draw
    // independent unitaries while staying reproducible.
    const std::uint64_t row_seed = cfg.seed + k;
    const TwirlResult liq =
        gas_to_liquid(gas, cfg.method, cfg.mc_samples, row_seed, cfg.damping);

    const IsomerReport gr = report(gas);
    const IsomerReport lr = report(liq.state, liq.params);

    SweepRow row;
    row.p = p;
    row.p_prime = liq.params.p_prime();
    row.para_gas = gr.para_fraction;
    row.ortho_gas = gr.ortho_fraction;
    row.ratio_gas = gr.ortho_para_ratio;
    row.para_liq = lr.para_fraction;
    row.ortho_liq = lr.ortho_fraction;
    row.ratio_liq = lr.ortho_para_ratio;
    row.negativity_liq = lr.negativity;
    row.entangled = lr.entangled ? 1 : 0;
    row.purity_gas = gr.purity;
    row.purity_liq = lr.purity;
    row.entropy_gas_bits = gr.entropy_bits;
    row.sx_gas = gr.magnetization_xyz[0];
    row.sy_gas = gr.magnetization_xyz[1];
    row.sz_gas = gr.magnetization_xyz[2];
    row.sx_liq = lr.magnetization_xyz[0];
    row.sy_liq = lr.magnetization_xyz[1];
    row.sz_liq = lr.magnetization_xyz[2];
    if (cfg.method == TwirlMethod::Mc) {
      const TwirlResult exact =
          gas_to_liquid(gas, TwirlMethod::Exact, cfg.mc_samples, row_seed, cfg.damping);
      row.mc_trace_dist = trace_distance(liq.state, exact.state);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_number(double v) {
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  if (v == 0.0) {
    return "0";  // normalizes -0
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

namespace {

void emit_csv_field(std::string& out, const SweepRow& row, std::size_t col) {
  switch (col) {
    case 0: out += format_number(row.p); break;
    case 1: out += format_number(row.p_prime); break;
    case 2: out += format_number(row.para_gas); break;
    case 3: out += format_number(row.ortho_gas); break;
    case 4: out += format_number(row.ratio_gas); break;
    case 5: out += format_number(row.para_liq); break;
    case 6: out += format_number(row.ortho_liq); break;
    case 7: out += format_number(row.ratio_liq); break;
    case 8: out += format_number(row.negativity_liq); break;
    case 9: out += (row.entangled ? "1" : "0"); break;
    case 10: out += format_number(row.purity_gas); break;
    case 11: out += format_number(row.purity_liq); break;
    case 12: out += format_number(row.entropy_gas_bits); break;
    case 13: out += format_number(row.sx_gas); break;
    case 14: out += format_number(row.sy_gas); break;
    case 15: out += format_number(row.sz_gas); break;
    case 16: out += format_number(row.sx_liq); break;
    case 17: out += format_number(row.sy_liq); break;
    case 18: out += format_number(row.sz_liq); break;
    case 19:
      if (row.mc_trace_dist.has_value()) {
        out += format_number(*row.mc_trace_dist);
      }
      break;
    default: break;
  }
}

// JSON value for a column; infinities become the string "inf" and an absent
// mc_trace_dist becomes null, keeping every row rectangular.
void emit_json_field(std::string& out, const SweepRow& row, std::size_t col) {
  if (col == 9) {
    out += (row.entangled ? "1" : "0");
    return;
  }
  if (col == 19) {
    if (row.mc_trace_dist.has_value()) {
      out += format_number(*row.mc_trace_dist);
    } else {
      out += "null";
    }
    return;
  }
  std::string scratch;
  emit_csv_field(scratch, row, col);
  if (scratch == "inf" || scratch == "-inf") {
    out += '"';
    out += scratch;
    out += '"';
  } else {
    out += scratch;
  }
}

}  // namespace

std::string emit(const std::vector<SweepRow>& rows, const ScenarioConfig& cfg) {
  const auto& cols = sweep_columns();
  std::string out;
  if (cfg.output_format == OutputFormat::Csv) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c > 0) {
        out += ',';
      }
      out += cols[c];
    }
    out += '\n';
    for (const SweepRow& row : rows) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c > 0) {
          out += ',';
        }
        emit_csv_field(out, row, c);
      }
      out += '\n';
    }
    return out;
  }
  out += "[\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += "  {";
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c > 0) {
        out += ", ";
      }
      out += '"';
      out += cols[c];
      out += "\": ";
      emit_json_field(out, rows[r], c);
    }
    out += (r + 1 < rows.size()) ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

}  // namespace spiniso
