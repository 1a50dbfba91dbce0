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

#include "commands.hpp"

#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "slotsum/backend.hpp"
#include "slotsum/corpus_io.hpp"
#include "slotsum/dataset.hpp"
#include "slotsum/errors.hpp"
#include "slotsum/evalkit.hpp"
#include "slotsum/slotfill.hpp"
#include "slotsum/templater.hpp"

namespace slotsum::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  std::ostringstream out;
  out << std::put_time(&parts, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

class Manifest {
 public:
  explicit Manifest(std::string command)
      : started_(std::chrono::steady_clock::now()) {
    body_["command"] = std::move(command);
    body_["version"] = kVersion;
    body_["started_at"] = utc_timestamp();
    body_["config"] = ordered_json::object();
    body_["inputs"] = ordered_json::array();
    body_["outputs"] = ordered_json::array();
    body_["counts"] = ordered_json::object();
  }

  ordered_json& config() { return body_["config"]; }
  ordered_json& counts() { return body_["counts"]; }
  void input(const fs::path& path) { body_["inputs"].push_back(path.string()); }
  void output(const fs::path& path) {
    body_["outputs"].push_back(path.string());
  }

  std::string finish(int status, const std::string& message) {
    const auto elapsed = std::chrono::steady_clock::now() - started_;
    body_["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
    body_["exit_status"] = status;
    if (!message.empty()) body_["error"] = message;
    return body_.dump();
  }

 private:
  std::chrono::steady_clock::time_point started_;
  ordered_json body_;
};

// Maps the error hierarchy onto exit codes.
int guarded(std::string_view command, std::ostream& err, std::string& message,
            const std::function<void()>& body) {
  int status = kExitOk;
  try {
    body();
  } catch (const InvalidArgument& e) {
    message = e.what();
    status = kExitUsage;
  } catch (const BackendError& e) {
    message = std::string("backend ") + e.what();
    status = kExitBackend;
  } catch (const DataError& e) {
    message = e.what();
    status = kExitData;
  } catch (const fs::filesystem_error& e) {
    message = e.what();
    status = kExitData;
  } catch (const std::exception& e) {
    message = std::string("unexpected failure: ") + e.what();
    status = kExitData;
  }
  if (status != kExitOk) err << "slotsum " << command << ": " << message << '\n';
  return status;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
  if (!out) throw DataError("write failed for " + path.string());
}

int write_manifest(Manifest& manifest, const fs::path& path, int status,
                   const std::string& message, std::ostream& err) {
  try {
    write_text(path, manifest.finish(status, message) + "\n");
  } catch (const DataError& e) {
    err << "slotsum: " << e.what() << '\n';
    if (status == kExitOk) return kExitData;
  }
  return status;
}

fs::path manifest_path_for(const fs::path& output) {
  return fs::path(output.string() + ".manifest.json");
}

void require_input(const fs::path& path) {
  if (!fs::is_regular_file(path)) {
    throw DataError("input not found: " + path.string());
  }
}

ordered_json config_json(const Config& config) {
  return {{"delta", config.delta},
          {"slack", config.span_window_slack},
          {"strategy", std::string(to_string(config.strategy))}};
}

ordered_json span_json(const SpanMatch& span) {
  return {{"key", span.fact_key},
          {"text", span.matched_text},
          {"start", span.start},
          {"end", span.end},
          {"score", span.score.value()}};
}

Provenance parse_provenance(std::string_view name) {
  for (const auto p :
       {Provenance::kCorrected, Provenance::kPredicted, Provenance::kEmpty}) {
    if (to_string(p) == name) return p;
  }
  throw DataError("unknown provenance '" + std::string(name) + "'");
}

FillOutput fill_output_from_json(const json& value) {
  if (!value.is_object()) throw DataError("line is not a JSON object");
  try {
    FillOutput output;
    output.id = value.at("id").get<std::string>();
    output.summary = value.at("summary").get<std::string>();
    for (const auto& fill : value.at("fills")) {
      FillEntry entry{fill.at("value").get<std::string>(),
                      parse_provenance(fill.at("provenance").get<std::string>())};
      output.plan.emplace(fill.at("key").get<std::string>(), std::move(entry));
    }
    return output;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed output line: ") + e.what());
  }
}

}  // namespace

int cmd_build_dataset(const BuildDatasetArgs& args, std::ostream& out,
                      std::ostream& err) {
  Manifest manifest("build-dataset");
  manifest.config() = {{"threshold", args.threshold}, {"seed", args.seed}};
  manifest.input(args.left_path);
  manifest.input(args.right_path);
  manifest.output(args.out_path);
  std::string message;
  const int status = guarded("build-dataset", err, message, [&] {
    require_input(args.left_path);
    require_input(args.right_path);
    const auto summaries = read_summaries(args.left_path);
    const auto tables = read_fact_tables(args.right_path);

    std::vector<AbstractEntry> left;
    left.reserve(summaries.size());
    for (const auto& s : summaries) left.push_back({s.id, s.summary});
    std::vector<AbstractEntry> right;
    right.reserve(tables.size());
    for (const auto& t : tables) right.push_back({t.id, t.abstract});

    const auto matches = match_entries(left, right, args.threshold);
    JoinResult joined = join_corpora(summaries, tables, matches);
    for (const auto& w : joined.warnings) err << "warning: " << w << '\n';
    for (const auto& d : joined.dropped) err << "dropped: " << d << '\n';
    auto records = split_corpus(std::move(joined.records), SplitRatios{},
                                args.seed);
    write_corpus(args.out_path, records);

    std::array<std::size_t, 3> per_split{};
    for (const auto& r : records) ++per_split[static_cast<int>(r.split)];
    auto& counts = manifest.counts();
    counts["left"] = summaries.size();
    counts["right"] = tables.size();
    counts["matched"] = matches.size();
    counts["dropped"] = joined.dropped.size();
    counts["warnings"] = joined.warnings.size();
    counts["records"] = records.size();
    counts["train"] = per_split[0];
    counts["valid"] = per_split[1];
    counts["test"] = per_split[2];
    out << "wrote " << records.size() << " records (" << per_split[0]
        << " train, " << per_split[1] << " valid, " << per_split[2]
        << " test) to " << args.out_path.string() << '\n';
  });
  return write_manifest(manifest, manifest_path_for(args.out_path), status,
                        message, err);
}

int cmd_make_templates(const MakeTemplatesArgs& args, std::ostream& out,
                       std::ostream& err) {
  Manifest manifest("make-templates");
  manifest.config() = config_json(args.config);
  manifest.input(args.corpus_path);
  manifest.output(args.out_path);
  std::string message;
  const int status = guarded("make-templates", err, message, [&] {
    args.config.validate();
    require_input(args.corpus_path);
    auto records = read_corpus(args.corpus_path);
    std::vector<ordered_json> lines;
    lines.reserve(records.size());
    std::size_t slots = 0;
    std::size_t skipped = 0;
    std::size_t dropped = 0;
    for (auto& record : records) {
      GoldenTemplate golden;
      try {
        golden = build_golden_template(record.summary, record.facts,
                                       args.config);
      } catch (const InvalidArgument& e) {
        throw DataError("record " + record.id + ": " + e.what());
      }
      record.golden_template = golden.tmpl;
      record.unmatched_slots.clear();
      slots += golden.report.replaced.size();
      skipped += golden.report.skipped_facts.size();
      dropped += golden.report.overlap_dropped.size();

      ordered_json line = record_to_json(record);
      ordered_json replaced = ordered_json::array();
      for (const auto& span : golden.report.replaced) {
        replaced.push_back(span_json(span));
      }
      line["template_report"] = {
          {"replaced", std::move(replaced)},
          {"skipped_facts", golden.report.skipped_facts},
          {"overlap_dropped", golden.report.overlap_dropped}};
      lines.push_back(std::move(line));
    }
    write_jsonl(args.out_path, lines);
    auto& counts = manifest.counts();
    counts["records"] = records.size();
    counts["slots"] = slots;
    counts["skipped_facts"] = skipped;
    counts["overlap_dropped"] = dropped;
    out << "templated " << records.size() << " records, " << slots
        << " slots, " << skipped << " facts below threshold\n";
  });
  return write_manifest(manifest, manifest_path_for(args.out_path), status,
                        message, err);
}

int cmd_fill(const FillArgs& args, std::ostream& out, std::ostream& err) {
  Manifest manifest("fill");
  manifest.config() = config_json(args.config);
  manifest.config()["backend"] = args.backend_spec;
  manifest.config()["template_source"] =
      args.template_source == TemplateSource::kGolden ? "golden" : "backend";
  manifest.input(args.corpus_path);
  manifest.output(args.out_path);
  std::string message;
  const int status = guarded("fill", err, message, [&] {
    args.config.validate();
    const auto backend =
        make_backend(args.backend_spec,
                     BaselineOptions{args.config.delta,
                                     args.config.span_window_slack},
                     args.backend_address);
    manifest.config()["backend_id"] = backend->id();
    require_input(args.corpus_path);
    const auto records = read_corpus(args.corpus_path);

    std::vector<ordered_json> lines;
    lines.reserve(records.size());
    std::array<std::size_t, 3> by_provenance{};
    std::size_t failures = 0;
    for (const auto& record : records) {
      SummarizeOptions options;
      options.concurrent = args.concurrent;
      if (args.template_source == TemplateSource::kGolden) {
        if (!record.golden_template) {
          throw DataError("record " + record.id + " has no golden template");
        }
        options.precomputed_template = *record.golden_template;
      }
      SummaryResult result;
      try {
        result = summarize(record.entity, record.documents, record.facts,
                           *backend, args.config, options);
      } catch (const BackendError& e) {
        throw BackendError(e.kind(), "record " + record.id + ": " + e.detail(),
                           e.status());
      }

      ordered_json fills = ordered_json::array();
      for (const auto& [key, entry] : result.plan) {
        ordered_json fill = {{"key", key},
                             {"value", entry.value},
                             {"provenance", std::string(to_string(entry.provenance))}};
        const auto correction = result.corrections.entries.find(key);
        if (entry.provenance == Provenance::kCorrected &&
            correction != result.corrections.entries.end()) {
          fill["external_key"] = correction->second.external_key;
        }
        fills.push_back(std::move(fill));
        ++by_provenance[static_cast<int>(entry.provenance)];
      }
      ordered_json failed = ordered_json::array();
      for (const auto& f : result.predictions.failures) {
        failed.push_back({{"key", f.key}, {"message", f.message}});
      }
      failures += result.predictions.failures.size();

      ordered_json line;
      line["id"] = record.id;
      line["summary"] = result.summary;
      line["template"] = result.template_markup;
      line["strategy"] = std::string(to_string(args.config.strategy));
      line["backend"] = backend->id();
      line["fills"] = std::move(fills);
      line["prediction_failures"] = std::move(failed);
      line["warnings"] = result.warnings;
      lines.push_back(std::move(line));
    }
    write_jsonl(args.out_path, lines);
    auto& counts = manifest.counts();
    counts["records"] = records.size();
    counts["corrected"] = by_provenance[0];
    counts["predicted"] = by_provenance[1];
    counts["empty"] = by_provenance[2];
    counts["prediction_failures"] = failures;
    out << "filled " << records.size() << " records with "
        << to_string(args.config.strategy) << ": " << by_provenance[0]
        << " corrected, " << by_provenance[1] << " predicted, "
        << by_provenance[2] << " empty\n";
  });
  return write_manifest(manifest, manifest_path_for(args.out_path), status,
                        message, err);
}

int cmd_evaluate(const EvaluateArgs& args, std::ostream& out,
                 std::ostream& err) {
  Manifest manifest("evaluate");
  manifest.config() = {{"delta", args.delta}};
  manifest.input(args.corpus_path);
  manifest.input(args.outputs_path);
  manifest.output(args.report_path);
  std::string message;
  const int status = guarded("evaluate", err, message, [&] {
    Config config;
    config.delta = args.delta;
    config.validate();
    require_input(args.corpus_path);
    require_input(args.outputs_path);
    const auto records = read_corpus(args.corpus_path);
    std::vector<FillOutput> outputs;
    for_each_jsonl(args.outputs_path, [&](const json& value) {
      outputs.push_back(fill_output_from_json(value));
    });
    const auto report = evaluate_corpus(records, outputs, args.delta);
    write_text(args.report_path, report_to_json(report));
    manifest.counts()["records"] = report.record_count;
    manifest.counts()["slots"] = report.fact_totals.total_slots;
    out << report_to_table(report);
  });
  return write_manifest(manifest, manifest_path_for(args.report_path), status,
                        message, err);
}

int cmd_stats(const StatsArgs& args, std::ostream& out, std::ostream& err) {
  Manifest manifest("stats");
  manifest.config() = {{"top_slots", args.top_slots}};
  manifest.input(args.corpus_path);
  std::string message;
  const int status = guarded("stats", err, message, [&] {
    require_input(args.corpus_path);
    const auto records = read_corpus(args.corpus_path);
    const auto report = corpus_stats(records);
    manifest.counts()["records"] = report.example_count;
    manifest.counts()["distinct_slot_keys"] = report.slot_frequency.size();
    out << format_stats_table(report, args.top_slots);
  });
  if (args.manifest_path) {
    return write_manifest(manifest, *args.manifest_path, status, message, err);
  }
  err << manifest.finish(status, message) << '\n';
  return status;
}

}  // namespace slotsum::cli
