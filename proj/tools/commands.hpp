// Copyright 2026 The SlotSum Authors.
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

// Pipeline commands behind the slotsum executable. Each returns an exit
// status (see ExitCode) and never throws; diagnostics go to `err`.
//
// Every run writes one manifest: next to the primary output as
// "<output>.manifest.json", or for stats to --manifest (one JSON line on
// `err` when unset).

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "slotsum/types.hpp"

namespace slotsum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitBackend = 3,
};

inline constexpr const char* kBackendUrlEnv = "SLOTSUM_BACKEND_URL";

struct BuildDatasetArgs {
  std::filesystem::path left_path;   // summaries JSONL
  std::filesystem::path right_path;  // fact tables JSONL
  std::filesystem::path out_path;
  double threshold = 0.8;
  std::uint64_t seed = 0;
};

struct MakeTemplatesArgs {
  std::filesystem::path corpus_path;
  std::filesystem::path out_path;
  Config config;
};

enum class TemplateSource { kBackend, kGolden };

struct FillArgs {
  std::filesystem::path corpus_path;
  std::filesystem::path out_path;
  Config config;
  std::string backend_spec = "builtin";
  // Overrides the remote address; the CLI fills it from SLOTSUM_BACKEND_URL.
  std::string backend_address;
  TemplateSource template_source = TemplateSource::kBackend;
  bool concurrent = false;
};

struct EvaluateArgs {
  std::filesystem::path corpus_path;
  std::filesystem::path outputs_path;
  std::filesystem::path report_path;
  double delta = 0.8;
};

struct StatsArgs {
  std::filesystem::path corpus_path;
  std::optional<std::filesystem::path> manifest_path;
  std::size_t top_slots = 10;
};

int cmd_build_dataset(const BuildDatasetArgs& args, std::ostream& out,
                      std::ostream& err);
int cmd_make_templates(const MakeTemplatesArgs& args, std::ostream& out,
                       std::ostream& err);
int cmd_fill(const FillArgs& args, std::ostream& out, std::ostream& err);
int cmd_evaluate(const EvaluateArgs& args, std::ostream& out,
                 std::ostream& err);
int cmd_stats(const StatsArgs& args, std::ostream& out, std::ostream& err);

}  // namespace slotsum::cli
