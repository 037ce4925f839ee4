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

#include "harness/config.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cstdlib>

#include "figstory/common/error.h"
#include "figstory/common/text.h"

namespace figstory::harness {

Config Config::Defaults() {
  Config c;
  c.values_ = {
      {"run.seed", ""},
      {"paths.corpus", ""},
      {"paths.lexicon", ""},
      {"paths.exclusions", ""},
      {"paths.continuations", ""},
      {"paths.output_dir", "out"},
      {"paths.knowledge_fixture", ""},
      {"paths.toy_lm", ""},
      {"paths.judgments", ""},
      {"paths.dataset", ""},
      {"paths.bundles", ""},
      {"paths.predictions", ""},
      {"paths.generations", ""},
      {"corpus.format", "file"},
      {"corpus.parallel", "false"},
      {"pipeline.window", "4"},
      {"pipeline.split_ratios", "3204,355,1542"},
      {"pipeline.require_all_splits", "true"},
      {"task.kind", "idiom"},
      {"run.mode", "supervised"},
      {"models.lm_backend", "toy"},
      {"knowledge.backend", "fixture"},
      {"knowledge.endpoint", "http://127.0.0.1:8080"},
      {"knowledge.timeout_ms", "30000"},
      {"knowledge.retries", "2"},
      {"knowledge.bundle_size", "12"},
      {"knowledge.sources", "literal,context"},
      {"knowledge.parallel", "false"},
      {"scoring.normalization", "mean"},
      {"scoring.alpha", "1.0"},
      {"scoring.eval_split", "test"},
      {"scoring.fewshot_examples", "6"},
      {"scoring.token_budget", "2048"},
      {"scoring.encoder_dim", "32"},
      {"scoring.encoder_buckets", "4096"},
      {"scoring.parallel", "false"},
      {"train.epochs", "10"},
      {"train.lr", "1e-5"},
      {"train.batch", "8"},
      {"train.dropout", "0.1"},
      {"train.knowledge_batch_idiom", "16"},
      {"train.knowledge_batch_simile", "64"},
      {"decoding.strategy", "top_k"},
      {"decoding.k", "5"},
      {"decoding.temperature", "0.7"},
      {"decoding.p", "0.9"},
      {"decoding.max_tokens", "20"},
      {"decoding.fewshot_examples", "4"},
      {"decoding.parallel", "false"},
      // Reference fine-tuning schedules for full-scale generators; the toy
      // language model is not trained.
      {"generation.gpt2_epochs", "3"},
      {"generation.gpt2_batch", "2"},
      {"generation.seq2seq_epochs_idiom", "5"},
      {"generation.seq2seq_epochs_simile", "20"},
      {"generation.seq2seq_batch", "64"},
      {"generation.knowledge_model_epochs", "1"},
      {"evaluation.tie_label", "implausible"},
      {"evaluation.embed_dim", "64"},
      {"evaluation.parallel", "false"},
      {"prompts.pet_pattern_idiom", "N. C1. You are _"},
      {"prompts.pet_pattern_simile", "N. C1. That was _"},
      {"prompts.pet_verbalizer_idiom", "right,wrong"},
      {"prompts.pet_verbalizer_simile", "expected,unexpected"},
      {"prompts.unifiedqa_question",
       "Which is more plausible between the two based on the context?"},
  };
  return c;
}

void Config::Set(std::string_view key, std::string_view value) {
  auto it = values_.find(key);
  if (it == values_.end()) {
    throw InvalidArgument("unknown config key '" + std::string(key) + "'");
  }
  it->second = std::string(value);
}

void Config::LoadIni(const std::filesystem::path &path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(path.string(), tree);
  } catch (const boost::property_tree::ini_parser_error &e) {
    throw InvalidArgument("cannot read config " + path.string() + ": " +
                          e.what());
  }
  const auto base = path.parent_path();
  for (const auto &[section, body] : tree) {
    if (body.empty()) {
      throw InvalidArgument("config " + path.string() + ": key '" + section +
                            "' outside a section");
    }
    for (const auto &[key, node] : body) {
      const std::string full = section + "." + key;
      std::string value = Trim(node.data());
      // Relative paths in a config file resolve against its directory.
      if (section == "paths" && key != "output_dir" && !value.empty() &&
          std::filesystem::path(value).is_relative()) {
        value = (base / value).lexically_normal().string();
      }
      Set(full, value);
    }
  }
}

void Config::Override(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw InvalidArgument("override '" + std::string(assignment) +
                          "' is not of the form key=value");
  }
  Set(Trim(assignment.substr(0, eq)), Trim(assignment.substr(eq + 1)));
}

bool Config::Has(std::string_view key) const {
  auto it = values_.find(key);
  return it != values_.end() && !it->second.empty();
}

const std::string &Config::Get(std::string_view key) const {
  auto it = values_.find(key);
  if (it == values_.end()) {
    throw InvalidArgument("unknown config key '" + std::string(key) + "'");
  }
  return it->second;
}

long long Config::GetInt(std::string_view key) const {
  const std::string &s = Get(key);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("config key " + std::string(key) +
                          " expects an integer, got '" + s + "'");
  }
  return v;
}

double Config::GetDouble(std::string_view key) const {
  const std::string &s = Get(key);
  char *end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw InvalidArgument("config key " + std::string(key) +
                          " expects a number, got '" + s + "'");
  }
  return v;
}

bool Config::GetBool(std::string_view key) const {
  const std::string v = ToLower(Get(key));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw InvalidArgument("config key " + std::string(key) +
                        " expects a boolean, got '" + v + "'");
}

std::vector<std::string> Config::GetList(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto &part : Split(Get(key), ',')) {
    std::string item = Trim(part);
    if (!item.empty()) out.push_back(std::move(item));
  }
  return out;
}

std::optional<std::filesystem::path> Config::GetPath(
    std::string_view key) const {
  const std::string &s = Get(key);
  if (s.empty()) return std::nullopt;
  return std::filesystem::path(s);
}

}  // namespace figstory::harness
