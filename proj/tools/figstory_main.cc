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

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "harness/commands.h"
#include "harness/config.h"

namespace {

using figstory::harness::Config;

struct Flags {
  std::string config_path;
  std::optional<unsigned long long> seed;
  std::vector<std::string> overrides;
  bool quiet = false;

  // Per-command flags; empty means "leave the config value alone".
  std::string task, backend, mode, out, corpus, lexicon, exclusions,
      continuations, dataset, bundles, fixture, endpoint, toy_lm, source,
      judgments;
  std::vector<std::string> predictions, generations;
};

void Apply(Config &config, const char *key, const std::string &value) {
  if (!value.empty()) config.Set(key, value);
}

Config Resolve(const Flags &flags, const std::string &command) {
  Config config = Config::Defaults();
  if (!flags.config_path.empty()) config.LoadIni(flags.config_path);
  for (const auto &o : flags.overrides) config.Override(o);
  if (flags.seed) config.Set("run.seed", std::to_string(*flags.seed));
  Apply(config, "task.kind", flags.task);
  Apply(config, "run.mode", flags.mode);
  Apply(config, "paths.output_dir", flags.out);
  Apply(config, "paths.corpus", flags.corpus);
  Apply(config, "paths.lexicon", flags.lexicon);
  Apply(config, "paths.exclusions", flags.exclusions);
  Apply(config, "paths.continuations", flags.continuations);
  Apply(config, "paths.dataset", flags.dataset);
  Apply(config, "paths.bundles", flags.bundles);
  Apply(config, "paths.knowledge_fixture", flags.fixture);
  Apply(config, "knowledge.endpoint", flags.endpoint);
  Apply(config, "paths.toy_lm", flags.toy_lm);
  Apply(config, "paths.judgments", flags.judgments);
  if (!flags.source.empty()) {
    config.Set("knowledge.sources",
               flags.source == "both" ? "literal,context" : flags.source);
  }
  auto join = [](const std::vector<std::string> &v) {
    std::string s;
    for (const auto &x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  Apply(config, "paths.predictions", join(flags.predictions));
  Apply(config, "paths.generations", join(flags.generations));
  if (!flags.backend.empty()) {
    config.Set(command == "gen-knowledge" ? "knowledge.backend"
                                          : "models.lm_backend",
               flags.backend);
  }
  return config;
}

}  // namespace

int main(int argc, char **argv) {
  spdlog::set_default_logger(spdlog::stderr_color_st("figstory"));
  spdlog::set_pattern("[%l] %v");

  CLI::App app{"figstory: figurative-language narrative benchmark toolkit"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("-c,--config", flags.config_path, "INI config file")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", flags.seed, "Root seed for stochastic stages");
  app.add_option("--set", flags.overrides,
                 "Override a config value (section.key=value)");
  app.add_flag("-q,--quiet", flags.quiet, "Only log warnings and errors");
  app.fallthrough();

  const std::vector<std::string> tasks = {"idiom", "simile"};
  const std::vector<std::string> modes = {
      "zero-shot",         "few-shot",          "supervised",
      "knowledge-literal", "knowledge-context", "continuation-only"};

  auto *build = app.add_subcommand("build-dataset",
                                   "Mine narratives and write dataset.jsonl");
  build->add_option("--corpus", flags.corpus, "Corpus file or directory");
  build->add_option("--lexicon", flags.lexicon, "Idiom lexicon TSV");
  build->add_option("--exclusions", flags.exclusions,
                    "Instance ids to drop, one per line");
  build->add_option("--continuations", flags.continuations,
                    "Continuations TSV (instance_id, label, text)");

  auto *know = app.add_subcommand("gen-knowledge",
                                  "Build inference bundles for a dataset");
  know->add_option("--fixture", flags.fixture, "Fixture knowledge JSON");
  know->add_option("--endpoint", flags.endpoint, "HTTP knowledge service");
  know->add_option("--source", flags.source, "literal, context or both")
      ->check(CLI::IsMember({"literal", "context", "both"}));

  auto *score = app.add_subcommand("score", "Discriminative task predictions");
  auto *gen = app.add_subcommand("generate", "Generative task continuations");
  auto *eval = app.add_subcommand("evaluate", "Metrics report");
  eval->add_option("--predictions", flags.predictions, "Predictions JSONL");
  eval->add_option("--generations", flags.generations, "Generations JSONL");
  eval->add_option("--judgments", flags.judgments,
                   "Judgments CSV (item_id, rater_id, label)");

  for (auto *sub : {build, know, score, gen, eval}) {
    sub->add_option("-o,--out", flags.out, "Output directory");
    sub->add_option("--task", flags.task, "idiom or simile")
        ->check(CLI::IsMember(tasks));
  }
  for (auto *sub : {know, score, gen, eval}) {
    sub->add_option("--dataset", flags.dataset, "Dataset JSONL");
  }
  for (auto *sub : {score, gen}) {
    sub->add_option("--bundles", flags.bundles, "Inference bundles JSONL");
    sub->add_option("--mode", flags.mode, "Model variant")
        ->check(CLI::IsMember(modes));
    sub->add_option("--toy-lm", flags.toy_lm, "Toy language model JSON");
  }
  know->add_option("--backend", flags.backend, "fixture or http")
      ->check(CLI::IsMember({"fixture", "http"}));
  for (auto *sub : {score, gen}) {
    sub->add_option("--backend", flags.backend, "Language model backend")
        ->check(CLI::IsMember({"toy"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : figstory::harness::kExitUsage;
  }
  if (flags.quiet) spdlog::set_level(spdlog::level::warn);

  const std::map<std::string,
                 std::function<int(const Config &)>>
      commands = {{"build-dataset", figstory::harness::BuildDataset},
                  {"gen-knowledge", figstory::harness::GenKnowledge},
                  {"score", figstory::harness::Score},
                  {"generate", figstory::harness::GenerateContinuations},
                  {"evaluate", figstory::harness::Evaluate}};
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const Config config = Resolve(flags, name);
    return commands.at(name)(config);
  } catch (const std::exception &e) {
    spdlog::error("{}: {}", name, e.what());
    return figstory::harness::ExitCodeFor(e);
  }
}
