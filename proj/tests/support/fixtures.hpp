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
#pragma once

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bosdsl/dsl_io.hpp"

namespace bosdsl::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(BOSDSL_FIXTURES) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
  return std::string(BOSDSL_GOLDEN) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct MalformedFixture {
  std::string file;
  /// "syntax", "key", "type", "alignment", or a static rule id such as "R2".
  std::string expected_class;
};

/// Every malformed document shipped under tests/fixtures.
inline const std::vector<MalformedFixture>& malformed_fixtures() {
  static const std::vector<MalformedFixture> fixtures{
      {"bad_syntax.bosc", "syntax"},
      {"bad_missing_key.bosc", "key"},
      {"bad_unknown_key.bosc", "key"},
      {"bad_unknown_gate.bosc", "key"},
      {"bad_mode_type.bosc", "type"},
      {"bad_param_type.bosc", "type"},
      {"bad_negative_mode.bosc", "type"},
      {"bad_modes_zero.bosc", "type"},
      {"bad_alignment_type.bosc", "alignment"},
      {"bad_alignment_length.bosc", "alignment"},
      {"bad_r2_duplicate_modes.bosc", "R2"},
      {"bad_r3_mode_range.bosc", "R3"},
      {"bad_r3_mode_count.bosc", "R3"},
      {"bad_r4_eta_range.bosc", "R4"},
      {"bad_negative.bosin", "type"},
      {"bad_syntax.bosin", "syntax"},
      {"bad_r1_length.bosin", "R1"},
  };
  return fixtures;
}

/// Parses the fixture with the matching reader and names the rejection it
/// produced: a DslError kind, the first static rule, "accepted", or
/// "crash:<what>" for any other exception. Inputs are checked against hom.bosc.
inline std::string rejection_class(const std::string& file) {
  const std::string text = read_text(fixture_path(file));
  try {
    if (file.ends_with(".bosin")) {
      const FockState input = parse_input(text);
      const auto diag = check_static(parse_circuit(read_text(fixture_path("hom.bosc"))), input);
      if (!diag.ok()) return diag.violations.front().rule;
    } else {
      parse_circuit(text);
    }
    return "accepted";
  } catch (const DslError& e) {
    return std::string(dsl_error_kind_name(e.kind()));
  } catch (const StaticError& e) {
    return e.diagnostics().violations.front().rule;
  } catch (const std::exception& e) {
    return std::string("crash:") + e.what();
  }
}

}  // namespace bosdsl::testing
