// Copyright 2026 The bosdsl Authors
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
#include "bosdsl/dsl_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bosdsl {
namespace {

using json = nlohmann::json;
using Kind = DslError::Kind;

[[noreturn]] void fail(Kind kind, const std::string& message) { throw DslError(kind, message); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column pair.
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(Kind::Syntax, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": " + e.what());
  }
}

const json& require_key(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(Kind::Key, where + ": missing key \"" + key + "\"");
  return *it;
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) fail(Kind::Key, where + ": unknown key \"" + key + "\"");
  }
}

const json& require_object(const json& value, const std::string& where) {
  if (!value.is_object()) fail(Kind::Type, where + " must be an object");
  return value;
}

const json& require_array(const json& value, const std::string& where) {
  if (!value.is_array()) fail(Kind::Type, where + " must be an array");
  return value;
}

int natural(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(Kind::Type, where + " must be a non-negative integer");
  if (value.is_number_unsigned()) {
    const auto v = value.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      fail(Kind::Type, where + " is too large");
    }
    return static_cast<int>(v);
  }
  const auto v = value.get<std::int64_t>();
  if (v < 0) fail(Kind::Type, where + " must be a non-negative integer, got " + std::to_string(v));
  if (v > std::numeric_limits<int>::max()) fail(Kind::Type, where + " is too large");
  return static_cast<int>(v);
}

double real(const json& value, const std::string& where) {
  if (!value.is_number()) fail(Kind::Type, where + " must be a number");
  return value.get<double>();
}

std::string string_value(const json& value, const std::string& where) {
  if (!value.is_string()) fail(Kind::Type, where + " must be a string");
  return value.get<std::string>();
}

GateType gate_type(const std::string& name, const std::string& where) {
  auto type = gate_type_from_name(name);
  if (!type) fail(Kind::Key, where + ": unknown gate type \"" + name + "\"");
  return *type;
}

FockState state_value(const json& value, const std::string& where) {
  require_array(value, where);
  if (value.empty()) fail(Kind::Type, where + " must list at least one mode");
  std::vector<int> occ;
  for (std::size_t i = 0; i < value.size(); ++i) {
    occ.push_back(natural(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return FockState(std::move(occ));
}

Pmf pmf_value(const json& value, const std::string& where, bool allow_footer) {
  require_array(value, where);
  std::optional<Pmf> pmf;
  std::vector<std::pair<FockState, double>> entries;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const json& item = require_object(value[i], at);
    if (allow_footer && item.contains("retained_mass")) {
      reject_unknown_keys(item, {"retained_mass"}, at);
      real(item["retained_mass"], at + ".retained_mass");
      continue;
    }
    reject_unknown_keys(item, {"state", "prob"}, at);
    FockState state = state_value(require_key(item, "state", at), at + ".state");
    const double p = real(require_key(item, "prob", at), at + ".prob");
    if (!(p >= 0.0 && p <= 1.0)) fail(Kind::Type, at + ".prob must lie in [0, 1]");
    if (!pmf) pmf.emplace(state.size());
    if (state.size() != pmf->n_modes()) {
      fail(Kind::Type, at + ".state has " + std::to_string(state.size()) + " modes, expected " +
                           std::to_string(pmf->n_modes()));
    }
    if (pmf->contains(state)) fail(Kind::Key, at + ": duplicate state " + state.str());
    pmf->insert(state, p);
  }
  if (!pmf) fail(Kind::Type, where + " lists no states");
  return *pmf;
}

}  // namespace

DslError::DslError(Kind kind, const std::string& message)
    : Error(std::string(dsl_error_kind_name(kind)) + " error: " + message), kind_(kind) {}

std::string_view dsl_error_kind_name(DslError::Kind kind) {
  switch (kind) {
    case Kind::Syntax: return "syntax";
    case Kind::Key: return "key";
    case Kind::Type: return "type";
    case Kind::Alignment: return "alignment";
  }
  return "?";
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

CircuitDocument parse_circuit_document(std::string_view text) {
  const json root = parse_json(text);
  require_object(root, "circuit document");
  reject_unknown_keys(root, {"modes", "posn", "config"}, "circuit");

  CircuitDocument doc;
  doc.modes = natural(require_key(root, "modes", "circuit"), "modes");
  if (doc.modes < 1) fail(Kind::Type, "modes must be a positive integer");

  const json& posn = require_array(require_key(root, "posn", "circuit"), "posn");
  for (std::size_t i = 0; i < posn.size(); ++i) {
    const std::string at = "posn[" + std::to_string(i) + "]";
    const json& entry = require_object(posn[i], at);
    reject_unknown_keys(entry, {"name", "modes"}, at);
    CircuitDocument::Position p;
    p.name = string_value(require_key(entry, "name", at), at + ".name");
    gate_type(p.name, at);
    const json& modes = require_array(require_key(entry, "modes", at), at + ".modes");
    for (std::size_t k = 0; k < modes.size(); ++k) {
      p.modes.push_back(natural(modes[k], at + ".modes[" + std::to_string(k) + "]"));
    }
    doc.posn.push_back(std::move(p));
  }

  const json& config = require_array(require_key(root, "config", "circuit"), "config");
  for (std::size_t i = 0; i < config.size(); ++i) {
    const std::string at = "config[" + std::to_string(i) + "]";
    const json& entry = require_object(config[i], at);
    CircuitDocument::Config c;
    c.name = string_value(require_key(entry, "name", at), at + ".name");
    const GateType type = gate_type(c.name, at);
    std::set<std::string> allowed{"name"};
    for (auto key : gate_param_names(type)) {
      const std::string k(key);
      allowed.insert(k);
      c.params.emplace_back(k, real(require_key(entry, k.c_str(), at), at + "." + k));
    }
    reject_unknown_keys(entry, allowed, at);
    doc.config.push_back(std::move(c));
  }
  return doc;
}

Circuit fuse_circuit_document(const CircuitDocument& doc) {
  if (doc.posn.size() != doc.config.size()) {
    fail(Kind::Alignment, "posn lists " + std::to_string(doc.posn.size()) +
                              " gates but config lists " + std::to_string(doc.config.size()));
  }
  std::vector<GateSpec> gates;
  for (std::size_t i = 0; i < doc.posn.size(); ++i) {
    if (doc.posn[i].name != doc.config[i].name) {
      fail(Kind::Alignment, "gate " + std::to_string(i) + ": posn says " + doc.posn[i].name +
                                " but config says " + doc.config[i].name);
    }
    GateSpec g;
    g.type = gate_type(doc.posn[i].name, "posn[" + std::to_string(i) + "]");
    g.modes = doc.posn[i].modes;
    const auto names = gate_param_names(g.type);
    for (auto name : names) {
      auto it = std::find_if(doc.config[i].params.begin(), doc.config[i].params.end(),
                             [&](const auto& kv) { return kv.first == name; });
      if (it == doc.config[i].params.end()) {
        fail(Kind::Key, "config[" + std::to_string(i) + "]: missing key \"" + std::string(name) +
                            "\"");
      }
      g.params.push_back(it->second);
    }
    gates.push_back(std::move(g));
  }
  return Circuit(doc.modes, std::move(gates));
}

Circuit parse_circuit(std::string_view text) {
  Circuit circuit = fuse_circuit_document(parse_circuit_document(text));
  if (auto diag = check_structure(circuit); !diag.ok()) throw StaticError(std::move(diag));
  return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "{\n  \"modes\": " << circuit.n_modes() << ",\n";
  const auto& gates = circuit.gates();

  out << "  \"posn\": [";
  for (std::size_t i = 0; i < gates.size(); ++i) {
    out << (i ? ",\n" : "\n") << "    {\"name\": \"" << gate_type_name(gates[i].type)
        << "\", \"modes\": [";
    for (std::size_t k = 0; k < gates[i].modes.size(); ++k) {
      out << (k ? ", " : "") << gates[i].modes[k];
    }
    out << "]}";
  }
  out << (gates.empty() ? "],\n" : "\n  ],\n");

  out << "  \"config\": [";
  for (std::size_t i = 0; i < gates.size(); ++i) {
    out << (i ? ",\n" : "\n") << "    {\"name\": \"" << gate_type_name(gates[i].type) << "\"";
    const auto names = gate_param_names(gates[i].type);
    for (std::size_t k = 0; k < gates[i].params.size() && k < names.size(); ++k) {
      out << ", \"" << names[k] << "\": " << format_real(gates[i].params[k]);
    }
    out << "}";
  }
  out << (gates.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

FockState parse_input(std::string_view text) { return state_value(parse_json(text), "input"); }

std::string serialize_input(const FockState& state) { return state.str() + "\n"; }

std::string serialize_pmf(const Pmf& pmf) {
  std::vector<std::pair<FockState, double>> rows(pmf.begin(), pmf.end());
  // Map order is already the canonical state order; a stable sort keeps it for ties.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::ostringstream out;
  out << "[\n";
  for (const auto& [state, p] : rows) {
    out << "  {\"state\": " << state.str() << ", \"prob\": " << format_real(p) << "},\n";
  }
  out << "  {\"retained_mass\": " << format_real(pmf.total()) << "}\n]\n";
  return out.str();
}

Pmf parse_pmf(std::string_view text) { return pmf_value(parse_json(text), "pmf", true); }

std::string serialize_shots(const ShotRecord& record) {
  std::string out;
  for (const auto& shot : record.shots) {
    for (std::size_t i = 0; i < shot.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(shot[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<FockState> parse_shots(std::string_view text) {
  std::vector<FockState> shots;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    std::vector<int> occ;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view field = line.substr(start, comma - start);
      if (field.empty() || !std::all_of(field.begin(), field.end(), [](char ch) {
            return ch >= '0' && ch <= '9';
          })) {
        fail(Kind::Syntax, "shots line " + std::to_string(line_no) + ": bad occupation \"" +
                               std::string(field) + "\"");
      }
      occ.push_back(std::stoi(std::string(field)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!shots.empty() && occ.size() != shots.front().size()) {
      fail(Kind::Type, "shots line " + std::to_string(line_no) + " has a different mode count");
    }
    shots.emplace_back(std::move(occ));
  }
  return shots;
}

std::vector<TrainingPair> parse_pairs(std::string_view text) {
  const json root = parse_json(text);
  require_array(root, "pairs");
  if (root.empty()) fail(Kind::Type, "pairs must list at least one pair");
  std::vector<TrainingPair> pairs;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const std::string at = "pairs[" + std::to_string(i) + "]";
    const json& item = require_object(root[i], at);
    reject_unknown_keys(item, {"input", "target"}, at);
    FockState input = state_value(require_key(item, "input", at), at + ".input");
    Pmf target = pmf_value(require_key(item, "target", at), at + ".target", false);
    if (target.n_modes() != input.size()) {
      fail(Kind::Type, at + ": target and input mode counts differ");
    }
    pairs.push_back({std::move(input), std::move(target)});
  }
  return pairs;
}

std::string serialize_trace(const std::vector<double>& loss_history) {
  std::string out = "iteration,loss\n";
  for (std::size_t i = 0; i < loss_history.size(); ++i) {
    out += std::to_string(i) + "," + format_real(loss_history[i]) + "\n";
  }
  return out;
}

}  // namespace bosdsl
