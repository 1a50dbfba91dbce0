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

#include "slotsum/backend.hpp"

#include <httplib.h>

#include <json.hpp>
#include <thread>

#include "slotsum/errors.hpp"
#include "slotsum/slotfill.hpp"

namespace slotsum {

using json = nlohmann::json;

std::string_view to_string(BackendTask task) {
  return task == BackendTask::kSlot ? "slot" : "template";
}

void BackendRequest::validate() const {
  if (task == BackendTask::kSlot && !slot_key) {
    throw InvalidArgument("slot request without slot_key");
  }
  if (task == BackendTask::kTemplate && slot_key) {
    throw InvalidArgument("template request with a slot_key");
  }
}

namespace {

std::string join_documents(const DocumentSet& documents) {
  std::string out;
  for (std::size_t i = 0; i < documents.size(); ++i) {
    if (i > 0) out.push_back('\n');
    out += documents[i];
  }
  return out;
}

}  // namespace

BackendRequest make_slot_request(const Entity& entity, std::string_view key,
                                 const DocumentSet& documents) {
  return BackendRequest{BackendTask::kSlot, entity.name(), documents,
                        std::string(key),
                        format_slot_query(entity, key, documents)};
}

BackendRequest make_template_request(const Entity& entity,
                                     const DocumentSet& documents) {
  return BackendRequest{BackendTask::kTemplate, entity.name(), documents,
                        std::nullopt, join_documents(documents)};
}

std::string encode_request(const BackendRequest& request) {
  json body = {
      {"task", to_string(request.task)},
      {"entity_name", request.entity_name},
      {"documents", request.documents},
      {"slot_key", nullptr},
      {"input", request.serialized_input},
  };
  if (request.slot_key) body["slot_key"] = *request.slot_key;
  return body.dump();
}

BackendRequest decode_request(std::string_view body) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw DataError("request body is not a JSON object");
  }
  try {
    BackendRequest request;
    const auto task = doc.at("task").get<std::string>();
    if (task == "slot") {
      request.task = BackendTask::kSlot;
    } else if (task == "template") {
      request.task = BackendTask::kTemplate;
    } else {
      throw DataError("unknown task '" + task + "'");
    }
    request.entity_name = doc.at("entity_name").get<std::string>();
    request.documents = doc.at("documents").get<DocumentSet>();
    const auto& key = doc.at("slot_key");
    if (!key.is_null()) request.slot_key = key.get<std::string>();
    request.serialized_input = doc.at("input").get<std::string>();
    request.validate();
    return request;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed request: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw DataError(e.what());
  }
}

std::string encode_response(const BackendResponse& response) {
  return json{{"output", response.output}, {"backend_id", response.backend_id}}
      .dump();
}

BackendResponse decode_response(std::string_view body) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw BackendError(BackendErrorKind::kMalformedResponse,
                       "response body is not a JSON object");
  }
  const auto output = doc.find("output");
  const auto backend_id = doc.find("backend_id");
  if (output == doc.end() || !output->is_string() || backend_id == doc.end() ||
      !backend_id->is_string()) {
    throw BackendError(BackendErrorKind::kMalformedResponse,
                       "response lacks string fields output/backend_id");
  }
  BackendResponse response;
  response.output = output->get<std::string>();
  response.backend_id = backend_id->get<std::string>();
  return response;
}

BackendResponse ExtractiveBaseline::generate(const BackendRequest& request) {
  request.validate();
  BackendResponse response = request.task == BackendTask::kSlot
                                 ? extractive_baseline_slot(request, options_)
                                 : extractive_baseline_template(request, options_);
  response.backend_id = id();
  return response;
}

namespace {

std::string with_scheme(std::string_view address) {
  if (address.find("://") != std::string_view::npos) {
    return std::string(address);
  }
  return "http://" + std::string(address);
}

}  // namespace

BackendResponse remote_call(const BackendRequest& request,
                            const RemoteOptions& options) {
  request.validate();
  if (options.address.empty()) {
    throw InvalidArgument("remote backend address is not configured");
  }
  const std::string body = encode_request(request);
  const auto started = std::chrono::steady_clock::now();
  auto backoff = options.initial_backoff;
  const int attempts = std::max(1, options.attempts);

  std::string last_failure;
  int last_status = 0;
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    httplib::Client client(with_scheme(options.address));
    client.set_connection_timeout(options.connect_timeout);
    client.set_read_timeout(options.read_timeout);
    client.set_write_timeout(options.read_timeout);
    auto result = client.Post("/v1/generate", body, "application/json");
    if (!result) {
      last_status = 0;
      last_failure = httplib::to_string(result.error());
      continue;
    }
    if (result->status == 200) {
      BackendResponse response = decode_response(result->body);
      response.latency_ms =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - started)
              .count();
      return response;
    }
    last_status = result->status;
    last_failure = "HTTP " + std::to_string(result->status) + ": " +
                   result->body.substr(0, 200);
    if (result->status < 500) break;
  }
  if (last_status == 0) {
    throw BackendError(BackendErrorKind::kTimeout,
                       options.address + " unreachable after " +
                           std::to_string(attempts) +
                           " attempts: " + last_failure);
  }
  throw BackendError(BackendErrorKind::kBadStatus, last_failure, last_status);
}

RemoteBackend::RemoteBackend(RemoteOptions options)
    : options_(std::move(options)) {
  if (options_.address.empty()) {
    throw InvalidArgument("remote backend address is not configured");
  }
}

BackendResponse RemoteBackend::generate(const BackendRequest& request) {
  return remote_call(request, options_);
}

std::unique_ptr<Backend> make_backend(std::string_view spec,
                                      const BaselineOptions& baseline,
                                      std::string_view address_override) {
  if (spec == "builtin") return std::make_unique<ExtractiveBaseline>(baseline);
  constexpr std::string_view kRemote = "remote:";
  if (spec.starts_with(kRemote)) {
    RemoteOptions options;
    options.address = address_override.empty()
                          ? std::string(spec.substr(kRemote.size()))
                          : std::string(address_override);
    return std::make_unique<RemoteBackend>(std::move(options));
  }
  throw InvalidArgument("unknown backend '" + std::string(spec) +
                        "' (expected builtin or remote:ADDRESS)");
}

}  // namespace slotsum
