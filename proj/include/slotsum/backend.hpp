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

// Generation backends. A backend answers two kinds of requests: produce a
// slot template from documents, or produce the value of one slot.
//
// Wire protocol spoken by RemoteBackend (and any model server):
//
//   POST /v1/generate
//   {"task": "template"|"slot", "entity_name": str, "documents": [str],
//    "slot_key": str|null, "input": str}
//   -> 200 {"output": str, "backend_id": str}
//      400 malformed request, 503 model unavailable

#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "slotsum/types.hpp"

namespace slotsum {

enum class BackendTask { kTemplate, kSlot };
std::string_view to_string(BackendTask task);

struct BackendRequest {
  BackendTask task = BackendTask::kTemplate;
  std::string entity_name;
  DocumentSet documents;
  std::optional<std::string> slot_key;  // set iff task == kSlot
  std::string serialized_input;

  // Throws InvalidArgument when slot_key presence disagrees with task.
  void validate() const;
  bool operator==(const BackendRequest&) const = default;
};

// Slot request whose serialized_input is format_slot_query(...).
BackendRequest make_slot_request(const Entity& entity, std::string_view key,
                                 const DocumentSet& documents);
// Template request whose serialized_input is the newline-joined documents.
BackendRequest make_template_request(const Entity& entity,
                                     const DocumentSet& documents);

struct BackendResponse {
  std::string output;
  double latency_ms = 0.0;
  std::string backend_id;
};

// Implementations must be safe to call from several threads at once.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual BackendResponse generate(const BackendRequest& request) = 0;
  virtual std::string id() const = 0;
};

// --- wire encoding -------------------------------------------------------

std::string encode_request(const BackendRequest& request);
// Throws DataError on malformed JSON or schema violations.
BackendRequest decode_request(std::string_view body);
std::string encode_response(const BackendResponse& response);
// Throws BackendError(kMalformedResponse).
BackendResponse decode_response(std::string_view body);

// --- extractive baseline -------------------------------------------------

struct BaselineOptions {
  double delta = 0.8;
  std::size_t slack = 2;
};

// Deterministic slot extractor. Picks the sentence with the highest token
// Jaccard overlap against the entity name plus the key's underscore-split
// words, then extracts at most five tokens from it:
//   date keys (*date*, *year*)   longest run of date-like tokens that starts
//                                and ends on a digit or month token
//   name keys (name, fullname)   window closest to the entity name under
//                                sorted_indel_sim
//   other keys                   content tokens following the first cue
//                                phrase of the nearest lexicon entry (or the
//                                key's own words when no entry is close)
// Returns an empty output when no sentence overlaps the query.
inline constexpr const char* kBaselineId = "builtin-extractive";

BackendResponse extractive_baseline_slot(const BackendRequest& request,
                                         const BaselineOptions& options = {});

// First sentence of the document that best overlaps the entity name, with
// the entity-name span replaced by "[SLT] name [/SLT]" when it matches at
// delta. Throws BackendError(kBadRequest) when there are no documents.
BackendResponse extractive_baseline_template(
    const BackendRequest& request, const BaselineOptions& options = {});

class ExtractiveBaseline final : public Backend {
 public:
  explicit ExtractiveBaseline(BaselineOptions options = {})
      : options_(options) {}
  BackendResponse generate(const BackendRequest& request) override;
  std::string id() const override { return kBaselineId; }

 private:
  BaselineOptions options_;
};

// --- remote client -------------------------------------------------------

struct RemoteOptions {
  std::string address;  // "host:port" or "http://host:port"
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{250};
  std::chrono::milliseconds connect_timeout{2000};
  std::chrono::milliseconds read_timeout{60000};
};

// One POST per attempt. Transport failures and 5xx answers are retried with
// exponential backoff; after the last attempt they surface as kTimeout and
// kBadStatus respectively. 4xx and malformed bodies fail immediately.
BackendResponse remote_call(const BackendRequest& request,
                            const RemoteOptions& options);

class RemoteBackend final : public Backend {
 public:
  explicit RemoteBackend(RemoteOptions options);
  BackendResponse generate(const BackendRequest& request) override;
  std::string id() const override { return "remote:" + options_.address; }

 private:
  RemoteOptions options_;
};

// "builtin" or "remote:ADDRESS". A non-empty `address_override` replaces
// ADDRESS for remote specs. Throws InvalidArgument on anything else.
std::unique_ptr<Backend> make_backend(std::string_view spec,
                                      const BaselineOptions& baseline,
                                      std::string_view address_override = {});

}  // namespace slotsum
