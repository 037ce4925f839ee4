// Copyright 2026 The Figstory Authors.
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

#include "figstory/knowledge/knowledge_model.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace figstory::knowledge {
namespace {

using nlohmann::json;

std::string FixtureKey(std::string_view subject, Relation relation) {
  return std::string(subject) + "|" + std::string(RelationName(relation));
}

}  // namespace

KnowledgeBackendError::KnowledgeBackendError(std::string subject,
                                             Relation relation,
                                             const std::string &reason)
    : Error("knowledge backend failed for (" + subject + ", " +
            std::string(RelationName(relation)) + "): " + reason),
      subject_(std::move(subject)),
      relation_(relation) {}

FixtureKnowledgeModel FixtureKnowledgeModel::FromJsonString(
    std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    throw FormatError(std::string("knowledge fixture: ") + e.what());
  }
  if (!root.is_object()) {
    throw FormatError("knowledge fixture must be a JSON object");
  }
  FixtureKnowledgeModel model;
  for (const auto &[key, value] : root.items()) {
    const size_t bar = key.rfind('|');
    if (bar == std::string::npos) {
      throw FormatError("knowledge fixture key '" + key +
                        "' is not subject|relation");
    }
    Relation relation;
    try {
      relation = ParseRelation(key.substr(bar + 1));
    } catch (const InvalidArgument &e) {
      throw FormatError("knowledge fixture key '" + key + "': " + e.what());
    }
    if (!value.is_array()) {
      throw FormatError("knowledge fixture value for '" + key +
                        "' must be an array");
    }
    std::vector<std::string> tails;
    for (const auto &tail : value) {
      if (!tail.is_string()) {
        throw FormatError("knowledge fixture tails for '" + key +
                          "' must be strings");
      }
      tails.push_back(tail.get<std::string>());
    }
    model.Set(key.substr(0, bar), relation, std::move(tails));
  }
  return model;
}

FixtureKnowledgeModel FixtureKnowledgeModel::FromJsonFile(
    const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open knowledge fixture " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJsonString(buffer.str());
}

void FixtureKnowledgeModel::Set(const std::string &subject, Relation relation,
                                std::vector<std::string> tails) {
  table_[FixtureKey(subject, relation)] = std::move(tails);
}

std::vector<std::string> FixtureKnowledgeModel::Generate(
    const std::string &subject, Relation relation, int k) const {
  auto it = table_.find(FixtureKey(subject, relation));
  if (it == table_.end()) it = table_.find(FixtureKey("*", relation));
  if (it == table_.end()) {
    throw KnowledgeBackendError(subject, relation, "no fixture entry");
  }
  const auto &tails = it->second;
  const auto count = std::min(tails.size(), static_cast<size_t>(std::max(k, 0)));
  return {tails.begin(), tails.begin() + static_cast<std::ptrdiff_t>(count)};
}

HttpKnowledgeModel::HttpKnowledgeModel(std::string endpoint,
                                       HttpOptions options)
    : options_(options) {
  // Split "scheme://host:port/prefix" into the client base and path prefix.
  const size_t scheme = endpoint.find("://");
  const size_t path_start =
      endpoint.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  if (path_start == std::string::npos) {
    host_ = endpoint;
  } else {
    host_ = endpoint.substr(0, path_start);
    path_ = endpoint.substr(path_start);
    while (!path_.empty() && path_.back() == '/') path_.pop_back();
  }
  if (host_.empty()) throw InvalidArgument("empty knowledge endpoint");
}

std::vector<std::string> HttpKnowledgeModel::Generate(
    const std::string &subject, Relation relation, int k) const {
  const json request = {{"subject", subject},
                        {"relation", RelationName(relation)},
                        {"k", k}};
  const std::string body = request.dump();
  std::string last_error;
  for (int attempt = 0; attempt <= options_.retries; ++attempt) {
    httplib::Client client(host_);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    client.set_write_timeout(options_.timeout);
    auto response =
        client.Post(path_ + "/generate", body, "application/json");
    if (!response) {
      last_error = "transport error: " + httplib::to_string(response.error());
      continue;
    }
    if (response->status != 200) {
      last_error = "HTTP status " + std::to_string(response->status);
      continue;
    }
    try {
      const json reply = json::parse(response->body);
      std::vector<std::string> tails;
      for (const auto &tail : reply.at("tails")) {
        tails.push_back(tail.get<std::string>());
      }
      if (static_cast<int>(tails.size()) > k) tails.resize(std::max(k, 0));
      return tails;
    } catch (const json::exception &e) {
      last_error = std::string("malformed reply: ") + e.what();
    }
  }
  throw KnowledgeBackendError(subject, relation,
                              last_error + " after " +
                                  std::to_string(options_.retries + 1) +
                                  " attempt(s)");
}

}  // namespace figstory::knowledge
