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

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using slotsum::Strategy;
using slotsum::cli::TemplateSource;

void add_config_flags(CLI::App& cmd, slotsum::Config& config) {
  cmd.add_option("--delta", config.delta, "Similarity threshold in (0, 1]")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--slack", config.span_window_slack,
                 "Span window slack in tokens")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fact-corrected entity summarization pipeline", "slotsum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "slotsum 0.1.0");

  slotsum::cli::BuildDatasetArgs build;
  auto* build_cmd = app.add_subcommand(
      "build-dataset", "Align summaries with fact tables, join and split");
  build_cmd->add_option("--left", build.left_path, "Summaries JSONL")
      ->required();
  build_cmd->add_option("--right", build.right_path, "Fact tables JSONL")
      ->required();
  build_cmd->add_option("-o,--out", build.out_path, "Corpus JSONL to write")
      ->required();
  build_cmd->add_option("--threshold", build.threshold,
                        "Abstract match threshold")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  build_cmd->add_option("--seed", build.seed, "Split shuffle seed")
      ->capture_default_str();

  slotsum::cli::MakeTemplatesArgs templates;
  auto* templates_cmd = app.add_subcommand(
      "make-templates", "Replace fact values in summaries with slots");
  templates_cmd->add_option("corpus", templates.corpus_path, "Corpus JSONL")
      ->required();
  templates_cmd->add_option("-o,--out", templates.out_path, "Output JSONL")
      ->required();
  add_config_flags(*templates_cmd, templates.config);

  slotsum::cli::FillArgs fill;
  std::string strategy = "discard";
  auto* fill_cmd =
      app.add_subcommand("fill", "Generate summaries by filling templates");
  fill_cmd->add_option("corpus", fill.corpus_path, "Corpus JSONL")->required();
  fill_cmd->add_option("-o,--out", fill.out_path, "Output JSONL")->required();
  add_config_flags(*fill_cmd, fill.config);
  fill_cmd->add_option("--strategy", strategy, "discard|predict|all_predict")
      ->capture_default_str();
  fill_cmd->add_option("--backend", fill.backend_spec,
                       "builtin or remote:ADDRESS")
      ->capture_default_str();
  const std::map<std::string, TemplateSource> sources{
      {"backend", TemplateSource::kBackend},
      {"golden", TemplateSource::kGolden}};
  fill_cmd->add_option("--templates", fill.template_source,
                       "Template source: backend or golden")
      ->transform(CLI::CheckedTransformer(sources, CLI::ignore_case));
  fill_cmd->add_flag("--concurrent", fill.concurrent,
                     "Query slots in parallel");

  slotsum::cli::EvaluateArgs evaluate;
  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "Score fill outputs against the corpus");
  evaluate_cmd->add_option("corpus", evaluate.corpus_path, "Corpus JSONL")
      ->required();
  evaluate_cmd->add_option("outputs", evaluate.outputs_path, "Fill outputs")
      ->required();
  evaluate_cmd->add_option("-o,--report", evaluate.report_path,
                           "JSON report to write")
      ->required();
  evaluate_cmd->add_option("--delta", evaluate.delta, "Fuzzy match threshold")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));

  slotsum::cli::StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Print corpus statistics");
  stats_cmd->add_option("corpus", stats.corpus_path, "Corpus JSONL")
      ->required();
  stats_cmd->add_option("--manifest", stats.manifest_path,
                        "Manifest path (default: stderr)");
  stats_cmd->add_option("--top", stats.top_slots, "Slot rows to show")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return slotsum::cli::kExitUsage;
  }

  if (*build_cmd) {
    return slotsum::cli::cmd_build_dataset(build, std::cout, std::cerr);
  }
  if (*templates_cmd) {
    return slotsum::cli::cmd_make_templates(templates, std::cout, std::cerr);
  }
  if (*fill_cmd) {
    try {
      fill.config.strategy = slotsum::parse_strategy(strategy);
    } catch (const std::exception& e) {
      std::cerr << "slotsum fill: " << e.what() << '\n';
      return slotsum::cli::kExitUsage;
    }
    if (const char* url = std::getenv(slotsum::cli::kBackendUrlEnv)) {
      fill.backend_address = url;
    }
    return slotsum::cli::cmd_fill(fill, std::cout, std::cerr);
  }
  if (*evaluate_cmd) {
    return slotsum::cli::cmd_evaluate(evaluate, std::cout, std::cerr);
  }
  return slotsum::cli::cmd_stats(stats, std::cout, std::cerr);
}
