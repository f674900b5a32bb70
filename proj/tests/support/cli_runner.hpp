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

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support/fixtures.hpp"

namespace bosdsl::testing {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

inline CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto dir = std::filesystem::temp_directory_path() /
             ("bosdsl_" + tag + "_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

/// One golden comparison: produced bytes vs the checked-in file.
struct GoldenCheck {
  std::string golden;
  std::string produced;
  bool matches() const { return read_text(golden_path(golden)) == produced; }
};

/// Runs check / eval / sample / optimize on the HOM fixture and pairs every
/// output (files and standard output) with its golden file. `ok` is false if
/// any command exited non-zero.
struct HomGoldenRun {
  bool ok = true;
  std::vector<GoldenCheck> checks;
};

inline HomGoldenRun run_hom_golden(const std::filesystem::path& dir) {
  HomGoldenRun result;
  const std::string circuit = fixture_path("hom.bosc");
  const std::string input = fixture_path("hom.bosin");
  const std::string pairs = fixture_path("hom_pairs.json");
  const auto path = [&](const char* name) { return (dir / name).string(); };

  auto check = run_cli({"check", circuit, input});
  result.ok &= check.code == 0;
  result.checks.push_back({"hom_check.txt", check.out});

  auto eval = run_cli({"eval", circuit, input, "--out", path("hom.bospmf")});
  result.ok &= eval.code == 0;
  result.checks.push_back({"hom_eval.txt", eval.out});
  result.checks.push_back({"hom.bospmf", read_text(path("hom.bospmf"))});

  auto sample = run_cli(
      {"sample", circuit, input, "--shots", "20", "--seed", "42", "--out", path("hom.boshots")});
  result.ok &= sample.code == 0;
  result.checks.push_back({"hom_sample.txt", sample.out});
  result.checks.push_back({"hom_seed42.boshots", read_text(path("hom.boshots"))});

  auto optimize = run_cli({"optimize", circuit, pairs, "--iters", "200", "--seed", "42", "--out",
                           path("learned.bosc"), "--trace", path("trace.csv")});
  result.ok &= optimize.code == 0;
  result.checks.push_back({"hom_optimize.txt", optimize.out});
  result.checks.push_back({"hom_learned.bosc", read_text(path("learned.bosc"))});
  result.checks.push_back({"hom_trace.csv", read_text(path("trace.csv"))});
  return result;
}

}  // namespace bosdsl::testing
