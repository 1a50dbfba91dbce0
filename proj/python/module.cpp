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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slotsum/backend.hpp"
#include "slotsum/corpus_io.hpp"
#include "slotsum/dataset.hpp"
#include "slotsum/errors.hpp"
#include "slotsum/evalkit.hpp"
#include "slotsum/simtext.hpp"
#include "slotsum/slotfill.hpp"
#include "slotsum/templater.hpp"

namespace py = pybind11;
using namespace slotsum;

namespace {

using Facts = std::vector<std::pair<std::string, std::string>>;

FactSet to_facts(const Facts& facts) {
  std::vector<FactPair> pairs;
  pairs.reserve(facts.size());
  for (const auto& [key, value] : facts) pairs.push_back({key, value});
  return FactSet(std::move(pairs));
}

Facts from_facts(const FactSet& facts) {
  Facts out;
  for (const auto& fact : facts) out.emplace_back(fact.key, fact.value);
  return out;
}

Config make_config(double delta, std::size_t slack,
                   const std::string& strategy = "discard") {
  Config config;
  config.delta = delta;
  config.span_window_slack = slack;
  config.strategy = parse_strategy(strategy);
  config.validate();
  return config;
}

py::dict span_dict(const SpanMatch& span) {
  py::dict out;
  out["key"] = span.fact_key;
  out["text"] = span.matched_text;
  out["start"] = span.start;
  out["end"] = span.end;
  out["score"] = span.score.value();
  return out;
}

py::dict plan_dict(const FillPlan& plan) {
  py::dict out;
  for (const auto& [key, entry] : plan) {
    out[py::str(key)] = py::make_tuple(entry.value,
                                       std::string(to_string(entry.provenance)));
  }
  return out;
}

py::tuple rouge_tuple(const RougeScore& score) {
  return py::make_tuple(score.precision, score.recall, score.f1);
}

py::dict stats_dict(const StatsReport& report) {
  py::dict out;
  out["example_count"] = report.example_count;
  out["split_counts"] = py::make_tuple(report.split_counts[0],
                                       report.split_counts[1],
                                       report.split_counts[2]);
  out["slot_count"] = report.slot_count;
  out["avg_slots"] = report.avg_slots;
  out["key_count"] = report.key_count;
  out["avg_keys"] = report.avg_keys;
  out["value_tokens"] = report.value_tokens;
  out["avg_value_len"] = report.avg_value_len;
  out["src_tokens"] = report.src_tokens;
  out["avg_src_len"] = report.avg_src_len;
  out["tgt_tokens"] = report.tgt_tokens;
  out["avg_tgt_len"] = report.avg_tgt_len;
  py::list rows;
  for (const auto& row : report.slot_frequency) {
    rows.append(py::make_tuple(row.key, row.count,
                               format_popularity(row.count,
                                                 report.example_count)));
  }
  out["slot_frequency"] = rows;
  return out;
}

}  // namespace

PYBIND11_MODULE(_slotsum, m) {
  m.doc() = "Template-based entity summarization with slot correction.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument",
                                          PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", base.ptr());
  py::register_exception<BackendError>(m, "BackendError", base.ptr());

  m.def(
      "indel_distance",
      [](std::string_view a, std::string_view b) { return indel_distance(a, b); },
      py::arg("a"), py::arg("b"));
  m.def(
      "sorted_indel_sim",
      [](std::string_view a, std::string_view b) {
        return sorted_indel_sim(a, b).value();
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "jaccard_bow",
      [](std::string_view a, std::string_view b) {
        return jaccard_bow(a, b).value();
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "best_matching_span",
      [](std::string_view summary, std::string_view value,
         std::size_t slack) -> py::object {
        const auto span = best_matching_span(summary, value, slack);
        if (!span) return py::none();
        return span_dict(*span);
      },
      py::arg("summary"), py::arg("value"), py::arg("slack") = 2);
  m.def(
      "build_golden_template",
      [](std::string_view summary, const Facts& facts, double delta,
         std::size_t slack) {
        const auto built =
            build_golden_template(summary, to_facts(facts),
                                  make_config(delta, slack));
        py::list replaced;
        for (const auto& span : built.report.replaced) {
          replaced.append(span_dict(span));
        }
        py::dict out;
        out["markup"] = built.markup;
        out["replaced"] = replaced;
        out["skipped_facts"] = built.report.skipped_facts;
        out["overlap_dropped"] = built.report.overlap_dropped;
        return out;
      },
      py::arg("summary"), py::arg("facts"), py::arg("delta") = 0.8,
      py::arg("slack") = 2);
  m.def(
      "slot_keys",
      [](std::string_view markup) { return parse_template(markup).slot_keys(); },
      py::arg("markup"));
  m.def(
      "render",
      [](std::string_view markup, const FillValues& fills) {
        return render(parse_template(markup), fills);
      },
      py::arg("markup"), py::arg("fills"));

  m.def(
      "correct_slots",
      [](std::string_view markup, const Facts& external, double delta) {
        const auto corrections = correct_slots(
            parse_template(markup), to_facts(external), make_config(delta, 2));
        py::dict out;
        for (const auto& [key, c] : corrections.entries) {
          out[py::str(key)] =
              py::make_tuple(c.value, c.external_key, c.score.value());
        }
        return out;
      },
      py::arg("markup"), py::arg("external"), py::arg("delta") = 0.8);
  m.def(
      "apply_strategy",
      [](const std::string& strategy, std::string_view markup,
         const PredictionMap& predictions,
         const std::map<std::string, std::string>& corrections) {
        CorrectionMap map;
        for (const auto& [key, value] : corrections) {
          map.entries.emplace(key, Correction{value, key, SimScore(1.0)});
        }
        return plan_dict(
            apply_strategy(strategy, parse_template(markup), predictions, map));
      },
      py::arg("strategy"), py::arg("markup"), py::arg("predictions"),
      py::arg("corrections"));
  m.def(
      "summarize",
      [](const std::string& entity_name, const DocumentSet& documents,
         const Facts& external, const std::string& strategy, double delta,
         std::size_t slack, const std::string& backend,
         std::optional<std::string> template_markup) {
        const Config config = make_config(delta, slack, strategy);
        auto generator = make_backend(backend, BaselineOptions{delta, slack});
        SummarizeOptions options;
        if (template_markup) {
          options.precomputed_template = parse_template(*template_markup);
        }
        SummaryResult result;
        {
          py::gil_scoped_release release;
          result = summarize(Entity(entity_name), documents,
                             to_facts(external), *generator, config, options);
        }
        py::dict out;
        out["summary"] = result.summary;
        out["template"] = result.template_markup;
        out["fills"] = plan_dict(result.plan);
        out["warnings"] = result.warnings;
        return out;
      },
      py::arg("entity_name"), py::arg("documents"), py::arg("external"),
      py::arg("strategy") = "discard", py::arg("delta") = 0.8,
      py::arg("slack") = 2, py::arg("backend") = "builtin",
      py::arg("template") = py::none());

  m.def(
      "serialize_kv",
      [](const Facts& facts) { return serialize_kv(to_facts(facts)); },
      py::arg("facts"));
  m.def(
      "serialize_keys",
      [](const Facts& facts) { return serialize_keys(to_facts(facts)); },
      py::arg("facts"));
  m.def(
      "parse_kv",
      [](std::string_view text) { return from_facts(parse_kv(text)); },
      py::arg("text"));
  m.def("augment_input", &augment_input, py::arg("serialized"),
        py::arg("document"));
  m.def(
      "match_entries",
      [](const std::vector<std::pair<std::string, std::string>>& left,
         const std::vector<std::pair<std::string, std::string>>& right,
         double threshold) {
        auto entries = [](const auto& pairs) {
          std::vector<AbstractEntry> out;
          for (const auto& [id, abstract] : pairs) out.push_back({id, abstract});
          return out;
        };
        std::vector<std::tuple<std::string, std::string, double>> out;
        for (const auto& c :
             match_entries(entries(left), entries(right), threshold)) {
          out.emplace_back(c.left_id, c.right_id, c.score.value());
        }
        return out;
      },
      py::arg("left"), py::arg("right"), py::arg("threshold") = 0.8);

  m.def(
      "rouge_n",
      [](std::string_view candidate, std::string_view reference,
         std::size_t n) { return rouge_tuple(rouge_n(candidate, reference, n)); },
      py::arg("candidate"), py::arg("reference"), py::arg("n") = 1);
  m.def(
      "rouge_l",
      [](std::string_view candidate, std::string_view reference) {
        return rouge_tuple(rouge_l(candidate, reference));
      },
      py::arg("candidate"), py::arg("reference"));
  m.def(
      "slot_fact_accuracy",
      [](const std::map<std::string, std::string>& fills, const Facts& golden,
         double delta) {
        FillPlan plan;
        for (const auto& [key, value] : fills) {
          plan.emplace(key, FillEntry{value, value.empty()
                                                 ? Provenance::kEmpty
                                                 : Provenance::kPredicted});
        }
        const auto score = slot_fact_accuracy(plan, to_facts(golden), delta);
        py::dict out;
        out["exact_correct"] = score.exact_correct;
        out["fuzzy_correct"] = score.fuzzy_correct;
        out["filled"] = score.filled;
        out["total_slots"] = score.total_slots;
        out["precision"] = score.precision();
        out["recall"] = score.recall();
        return out;
      },
      py::arg("fills"), py::arg("golden"), py::arg("delta") = 0.8);

  m.def(
      "corpus_stats",
      [](const std::string& path) {
        return stats_dict(corpus_stats(read_corpus(path)));
      },
      py::arg("path"));
  m.def(
      "stats_table",
      [](const std::string& path, std::size_t top_slots) {
        return format_stats_table(corpus_stats(read_corpus(path)), top_slots);
      },
      py::arg("path"), py::arg("top_slots") = 10);
  m.def("format_popularity", &format_popularity, py::arg("count"),
        py::arg("total"));
}
