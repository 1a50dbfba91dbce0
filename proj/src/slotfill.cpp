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

#include "slotsum/slotfill.hpp"

#include <future>

#include "slotsum/errors.hpp"
#include "slotsum/simtext.hpp"

namespace slotsum {

std::string format_slot_query(const Entity& entity, std::string_view key,
                              const DocumentSet& documents) {
  std::string out = "[CLS] ";
  out += entity.name();
  out += ' ';
  out += key;
  out += " [SEP] ";
  for (std::size_t i = 0; i < documents.size(); ++i) {
    if (i > 0) out.push_back('\n');
    out += documents[i];
  }
  out += " [SEP]";
  return out;
}

namespace {

struct KeyOutcome {
  std::string output;
  std::optional<std::string> failure;
};

KeyOutcome query_key(const Entity& entity, const std::string& key,
                     const DocumentSet& documents, Backend& backend) {
  try {
    return {backend.generate(make_slot_request(entity, key, documents)).output,
            std::nullopt};
  } catch (const BackendError& e) {
    return {{}, std::string(e.what())};
  }
}

}  // namespace

PredictionResult predict_slots(const Entity& entity, const Template& tmpl,
                               const DocumentSet& documents, Backend& backend,
                               bool concurrent) {
  const std::vector<std::string> keys = tmpl.slot_keys();
  std::vector<KeyOutcome> outcomes;
  outcomes.reserve(keys.size());
  if (concurrent) {
    std::vector<std::future<KeyOutcome>> pending;
    pending.reserve(keys.size());
    for (const auto& key : keys) {
      pending.push_back(std::async(std::launch::async, query_key,
                                   std::cref(entity), std::cref(key),
                                   std::cref(documents), std::ref(backend)));
    }
    for (auto& future : pending) outcomes.push_back(future.get());
  } else {
    for (const auto& key : keys) {
      outcomes.push_back(query_key(entity, key, documents, backend));
    }
  }

  PredictionResult result;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (outcomes[i].failure) {
      result.failures.push_back({keys[i], *outcomes[i].failure});
    } else if (!outcomes[i].output.empty()) {
      result.values.emplace(keys[i], std::move(outcomes[i].output));
    }
  }
  if (!keys.empty() && result.failures.size() == keys.size()) {
    throw BackendError(BackendErrorKind::kUnavailable,
                       "0 of " + std::to_string(keys.size()) +
                           " slot queries succeeded; first failure: " +
                           result.failures.front().message);
  }
  return result;
}

std::set<std::string> CorrectionMap::corrected_keys() const {
  std::set<std::string> keys;
  for (const auto& [key, correction] : entries) keys.insert(key);
  return keys;
}

CorrectionMap correct_slots(const Template& tmpl, const FactSet& external,
                            const Config& config) {
  config.validate();
  CorrectionMap corrections;
  for (const auto& key : tmpl.slot_keys()) {
    const FactPair* best = nullptr;
    SimScore best_score;
    for (const auto& fact : external) {
      const SimScore score = sorted_indel_sim(key, fact.key);
      if (best == nullptr || score > best_score ||
          (score == best_score && fact.key < best->key)) {
        best = &fact;
        best_score = score;
      }
    }
    if (best != nullptr && best_score.value() >= config.delta) {
      corrections.entries.emplace(key,
                                  Correction{best->value, best->key, best_score});
    }
  }
  return corrections;
}

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kCorrected:
      return "corrected";
    case Provenance::kPredicted:
      return "predicted";
    case Provenance::kEmpty:
      return "empty";
  }
  return "empty";
}

FillPlan apply_strategy(Strategy strategy, const Template& tmpl,
                        const PredictionMap& predictions,
                        const CorrectionMap& corrections) {
  auto predicted = [&](const std::string& key) {
    const auto it = predictions.find(key);
    if (it == predictions.end() || it->second.empty()) return FillEntry{};
    return FillEntry{it->second, Provenance::kPredicted};
  };

  FillPlan plan;
  for (const auto& key : tmpl.slot_keys()) {
    const auto corrected = corrections.entries.find(key);
    const bool in_kc = corrected != corrections.entries.end();
    FillEntry entry;
    switch (strategy) {
      case Strategy::kDiscard:
        if (in_kc) entry = {corrected->second.value, Provenance::kCorrected};
        break;
      case Strategy::kPredict:
        entry = in_kc ? FillEntry{corrected->second.value,
                                  Provenance::kCorrected}
                      : predicted(key);
        break;
      case Strategy::kAllPredict:
        entry = predicted(key);
        break;
    }
    plan.emplace(key, std::move(entry));
  }
  return plan;
}

FillPlan apply_strategy(std::string_view strategy, const Template& tmpl,
                        const PredictionMap& predictions,
                        const CorrectionMap& corrections) {
  return apply_strategy(parse_strategy(strategy), tmpl, predictions,
                        corrections);
}

FillValues fill_values(const FillPlan& plan) {
  FillValues values;
  for (const auto& [key, entry] : plan) values.emplace(key, entry.value);
  return values;
}

SummaryResult summarize(const Entity& entity, const DocumentSet& documents,
                        const FactSet& external, Backend& backend,
                        const Config& config,
                        const SummarizeOptions& options) {
  config.validate();
  SummaryResult result;
  if (options.precomputed_template) {
    result.tmpl = *options.precomputed_template;
    result.template_markup = to_markup(result.tmpl);
  } else {
    result.template_markup =
        backend.generate(make_template_request(entity, documents)).output;
    if (options.strict) {
      try {
        result.tmpl = parse_template(result.template_markup);
      } catch (const TemplateParseError& e) {
        throw BackendError(BackendErrorKind::kMalformedResponse,
                           std::string("template markup: ") + e.what());
      }
    } else {
      result.tmpl = parse_template_lenient(result.template_markup,
                                           result.warnings);
    }
  }

  if (config.strategy != Strategy::kAllPredict) {
    result.corrections = correct_slots(result.tmpl, external, config);
  }

  if (config.strategy == Strategy::kDiscard) {
    result.predictions_skipped = true;
  } else {
    result.predictions = predict_slots(entity, result.tmpl, documents, backend,
                                       options.concurrent);
    for (const auto& failure : result.predictions.failures) {
      result.warnings.push_back("slot '" + failure.key +
                                "' prediction failed: " + failure.message);
    }
  }

  result.plan = apply_strategy(config.strategy, result.tmpl,
                               result.predictions.values, result.corrections);
  result.summary = render(result.tmpl, fill_values(result.plan));
  return result;
}

}  // namespace slotsum
