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

#include "harness/commands.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "figstory/common/error.h"
#include "figstory/common/random.h"
#include "figstory/common/text.h"
#include "figstory/corpus/dataset_split.h"
#include "figstory/corpus/lexicon.h"
#include "figstory/corpus/narrative_miner.h"
#include "figstory/corpus/tagger.h"
#include "figstory/decoding/generator.h"
#include "figstory/decoding/toy_language_model.h"
#include "figstory/evaluation/agreement.h"
#include "figstory/evaluation/runner.h"
#include "figstory/knowledge/inference_builder.h"
#include "figstory/knowledge/knowledge_model.h"
#include "figstory/knowledge/relation.h"
#include "figstory/scoring/fewshot_prompt.h"
#include "figstory/scoring/lm_scorer.h"
#include "figstory/scoring/toy_model.h"
#include "harness/records.h"

namespace figstory::harness {

namespace fs = std::filesystem;
using corpus::DatasetInstance;
using scoring::MultipleChoiceInstance;

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kZeroShot:
      return "zero-shot";
    case Mode::kFewShot:
      return "few-shot";
    case Mode::kSupervised:
      return "supervised";
    case Mode::kKnowledgeLiteral:
      return "knowledge-literal";
    case Mode::kKnowledgeContext:
      return "knowledge-context";
    case Mode::kContinuationOnly:
      return "continuation-only";
  }
  return "";
}

Mode ParseMode(std::string_view name) {
  for (Mode m : {Mode::kZeroShot, Mode::kFewShot, Mode::kSupervised,
                 Mode::kKnowledgeLiteral, Mode::kKnowledgeContext,
                 Mode::kContinuationOnly}) {
    if (ModeName(m) == name) return m;
  }
  throw InvalidArgument("unknown mode '" + std::string(name) + "'");
}

uint64_t RequireSeed(const Config &config, std::string_view command) {
  const std::string &s = config.Get("run.seed");
  if (s.empty()) {
    throw InvalidArgument(std::string(command) +
                          " is stochastic and requires --seed");
  }
  uint64_t seed = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("seed must be a non-negative integer, got '" + s +
                          "'");
  }
  return seed;
}

int ExitCodeFor(const std::exception &error) {
  if (dynamic_cast<const SchemaError *>(&error) != nullptr) return kExitSchema;
  if (dynamic_cast<const InvalidArgument *>(&error) != nullptr) {
    return kExitUsage;
  }
  return kExitError;
}

namespace {

fs::path OutputDir(const Config &config) {
  fs::path dir = config.Get("paths.output_dir");
  fs::create_directories(dir);
  return dir;
}

fs::path RequireExisting(const Config &config, std::string_view key) {
  auto path = config.GetPath(key);
  if (!path) {
    throw InvalidArgument("config key " + std::string(key) + " is not set");
  }
  if (!fs::exists(*path)) {
    throw InvalidArgument(std::string(key) + ": " + path->string() +
                          " does not exist");
  }
  return *path;
}

// Explicit path, or a default file name inside the output directory.
fs::path InputOrDefault(const Config &config, std::string_view key,
                        std::string_view default_name) {
  if (config.Has(key)) return RequireExisting(config, key);
  fs::path path = fs::path(config.Get("paths.output_dir")) / default_name;
  if (!fs::exists(path)) {
    throw InvalidArgument(std::string(key) + " is not set and " +
                          path.string() + " does not exist");
  }
  return path;
}

corpus::ExpressionKind TaskKind(const Config &config) {
  return corpus::ParseExpressionKind(config.Get("task.kind"));
}

size_t PositiveSize(const Config &config, std::string_view key) {
  const long long v = config.GetInt(key);
  if (v <= 0) {
    throw InvalidArgument("config key " + std::string(key) +
                          " must be positive");
  }
  return static_cast<size_t>(v);
}

// ---------------------------------------------------------------------------
// build-dataset

struct Document {
  std::string name;
  std::string text;
};

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Document> LoadCorpus(const fs::path &root, bool one_per_line) {
  std::vector<fs::path> files;
  if (fs::is_directory(root)) {
    for (const auto &entry : fs::directory_iterator(root)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(root);
  }
  if (files.empty()) {
    throw InvalidArgument("corpus " + root.string() + " has no .txt files");
  }
  std::vector<Document> docs;
  for (const auto &file : files) {
    const std::string stem = file.stem().string();
    std::string text = ReadFile(file);
    if (!one_per_line) {
      docs.push_back({stem, std::move(text)});
      continue;
    }
    std::istringstream lines(text);
    std::string line;
    size_t n = 0;
    while (std::getline(lines, line)) {
      ++n;
      if (Trim(line).empty()) continue;
      docs.push_back({stem + "-l" + std::to_string(n), line});
    }
  }
  return docs;
}

std::set<std::string> LoadExclusions(const fs::path &path) {
  std::set<std::string> ids;
  std::istringstream in(ReadFile(path));
  std::string line;
  while (std::getline(in, line)) {
    std::string id = Trim(line);
    if (!id.empty() && id[0] != '#') ids.insert(std::move(id));
  }
  return ids;
}

// instance_id<TAB>label<TAB>text rows; an optional header line is skipped.
size_t AttachContinuations(const fs::path &path,
                           std::vector<DatasetInstance> &instances) {
  std::map<std::string, DatasetInstance *> by_id;
  for (auto &inst : instances) by_id[inst.id] = &inst;
  std::istringstream in(ReadFile(path));
  std::string line;
  size_t line_no = 0;
  size_t attached = 0;
  std::vector<LineProblem> problems;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    const auto fields = Split(line, '\t');
    if (line_no == 1 && !fields.empty() && fields[0] == "instance_id") continue;
    if (fields.size() != 3) {
      problems.push_back({line_no, "expected 3 tab-separated fields"});
      continue;
    }
    corpus::Label label;
    try {
      label = corpus::ParseLabel(Trim(fields[1]));
    } catch (const Error &) {
      problems.push_back({line_no, "unknown label '" + fields[1] + "'"});
      continue;
    }
    auto it = by_id.find(Trim(fields[0]));
    if (it == by_id.end()) {
      spdlog::warn("continuations line {}: no instance '{}'", line_no,
                   fields[0]);
      continue;
    }
    it->second->continuations.push_back({Trim(fields[2]), label});
    ++attached;
  }
  if (!problems.empty()) throw SchemaError(path, std::move(problems));
  return attached;
}

corpus::SplitRatios ParseRatios(const Config &config) {
  const auto parts = config.GetList("pipeline.split_ratios");
  if (parts.size() != 3) {
    throw InvalidArgument("pipeline.split_ratios needs three values");
  }
  double v[3];
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    char *end = nullptr;
    v[i] = std::strtod(parts[i].c_str(), &end);
    if (end != parts[i].c_str() + parts[i].size() || v[i] < 0.0) {
      throw InvalidArgument("bad split ratio '" + parts[i] + "'");
    }
    sum += v[i];
  }
  if (sum <= 0.0) throw InvalidArgument("split ratios sum to zero");
  return {v[0] / sum, v[1] / sum, v[2] / sum};
}

}  // namespace

int BuildDataset(const Config &config) {
  const uint64_t seed = RequireSeed(config, "build-dataset");
  const uint64_t split_seed = DeriveSeed(seed, "build-dataset.split");
  const auto kind = TaskKind(config);
  const fs::path corpus_path = RequireExisting(config, "paths.corpus");
  const std::string format = config.Get("corpus.format");
  if (format != "file" && format != "line") {
    throw InvalidArgument("corpus.format must be 'file' or 'line'");
  }

  corpus::IdiomLexicon lexicon;
  if (kind == corpus::ExpressionKind::kIdiom) {
    lexicon = corpus::IdiomLexicon::FromTsvFile(
        RequireExisting(config, "paths.lexicon"));
    if (lexicon.empty()) throw InvalidArgument("idiom lexicon is empty");
  }
  corpus::LexiconTagger tagger;
  corpus::MinerOptions options;
  options.kind = kind;
  options.window = PositiveSize(config, "pipeline.window");
  const corpus::NarrativeMiner miner(
      kind == corpus::ExpressionKind::kIdiom ? &lexicon : nullptr, tagger,
      options);

  const auto docs = LoadCorpus(corpus_path, format == "line");
  std::vector<std::vector<DatasetInstance>> mined(docs.size());
  if (config.GetBool("corpus.parallel")) {
    std::vector<std::future<void>> jobs;
    for (size_t i = 0; i < docs.size(); ++i) {
      jobs.push_back(std::async(std::launch::async, [&, i] {
        mined[i] = miner.MineDocument(docs[i].name, docs[i].text);
      }));
    }
    for (auto &job : jobs) job.get();
  } else {
    for (size_t i = 0; i < docs.size(); ++i) {
      mined[i] = miner.MineDocument(docs[i].name, docs[i].text);
    }
  }

  std::set<std::string> exclusions;
  if (config.Has("paths.exclusions")) {
    exclusions = LoadExclusions(RequireExisting(config, "paths.exclusions"));
  }
  std::vector<DatasetInstance> instances;
  size_t excluded = 0;
  for (auto &doc : mined) {
    for (auto &inst : doc) {
      if (exclusions.count(inst.id) != 0) {
        ++excluded;
        continue;
      }
      instances.push_back(std::move(inst));
    }
  }
  if (instances.empty()) {
    throw Error("no narratives found in " + corpus_path.string());
  }
  size_t attached = 0;
  if (config.Has("paths.continuations")) {
    attached = AttachContinuations(
        RequireExisting(config, "paths.continuations"), instances);
  }

  corpus::SplitOptions split_options;
  split_options.require_all_splits =
      config.GetBool("pipeline.require_all_splits");
  corpus::SplitDataset(instances, ParseRatios(config), split_seed,
                       split_options);

  const fs::path out = OutputDir(config);
  std::vector<Json> rows;
  double words = 0.0;
  std::set<std::string> expressions;
  std::map<std::string, std::pair<size_t, std::set<std::string>>> per_split;
  for (const auto &inst : instances) {
    rows.push_back(ToJson(inst));
    words += static_cast<double>(inst.narrative.WordCount());
    const std::string expr = ToLower(inst.narrative.expression);
    expressions.insert(expr);
    auto &bucket = per_split[std::string(corpus::SplitName(inst.split))];
    ++bucket.first;
    bucket.second.insert(expr);
  }
  WriteJsonl(out / "dataset.jsonl", rows);

  Json stats;
  stats["task"] = corpus::ExpressionKindName(kind);
  stats["root_seed"] = seed;
  stats["stage_seeds"] = {{"split", split_seed}};
  stats["documents"] = docs.size();
  stats["instances"] = instances.size();
  stats["excluded"] = excluded;
  stats["continuations_attached"] = attached;
  stats["distinct_expressions"] = expressions.size();
  stats["mean_narrative_words"] =
      std::round(words / static_cast<double>(instances.size()) * 100.0) / 100.0;
  Json splits = Json::object();
  for (auto split : {corpus::Split::kTrain, corpus::Split::kValidation,
                     corpus::Split::kTest}) {
    const std::string name(corpus::SplitName(split));
    const auto it = per_split.find(name);
    splits[name] = {
        {"instances", it == per_split.end() ? 0 : it->second.first},
        {"expressions", it == per_split.end() ? 0 : it->second.second.size()}};
  }
  stats["splits"] = splits;
  WriteJson(out / "stats.json", stats);
  spdlog::info("build-dataset: {} instances, {} distinct expressions -> {}",
               instances.size(), expressions.size(),
               (out / "dataset.jsonl").string());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gen-knowledge

int GenKnowledge(const Config &config) {
  const auto instances =
      ReadDataset(InputOrDefault(config, "paths.dataset", "dataset.jsonl"));
  const std::string backend = config.Get("knowledge.backend");
  std::unique_ptr<knowledge::KnowledgeModel> model;
  if (backend == "fixture") {
    model = std::make_unique<knowledge::FixtureKnowledgeModel>(
        knowledge::FixtureKnowledgeModel::FromJsonFile(
            RequireExisting(config, "paths.knowledge_fixture")));
  } else if (backend == "http") {
    knowledge::HttpOptions http;
    http.timeout = std::chrono::milliseconds(config.GetInt("knowledge.timeout_ms"));
    http.retries = static_cast<int>(config.GetInt("knowledge.retries"));
    model = std::make_unique<knowledge::HttpKnowledgeModel>(
        config.Get("knowledge.endpoint"), http);
  } else {
    throw InvalidArgument("knowledge backend must be 'fixture' or 'http', got '" +
                          backend + "'");
  }

  std::vector<knowledge::InferenceSource> sources;
  for (const auto &name : config.GetList("knowledge.sources")) {
    sources.push_back(knowledge::ParseInferenceSource(name));
  }
  if (sources.empty()) throw InvalidArgument("knowledge.sources is empty");
  knowledge::BundleOptions options;
  options.size = PositiveSize(config, "knowledge.bundle_size");
  options.parallel = config.GetBool("knowledge.parallel");

  std::vector<Json> bundles;
  std::vector<Json> errors;
  for (const auto &inst : instances) {
    for (auto source : sources) {
      try {
        const auto bundle =
            source == knowledge::InferenceSource::kLiteral
                ? knowledge::LiteralInferences(inst.id, inst.narrative.expression,
                                               inst.narrative.kind, *model, options)
                : knowledge::ContextInferences(inst.id, inst.narrative, *model,
                                               options);
        bundles.push_back(ToJson(bundle));
      } catch (const knowledge::KnowledgeBackendError &e) {
        errors.push_back(ToJson(KnowledgeErrorRecord{
            inst.id, std::string(knowledge::InferenceSourceName(source)),
            e.subject(), std::string(knowledge::RelationName(e.relation())),
            e.what()}));
      } catch (const Error &e) {
        errors.push_back(ToJson(KnowledgeErrorRecord{
            inst.id, std::string(knowledge::InferenceSourceName(source)), "",
            "", e.what()}));
      }
    }
  }
  const fs::path out = OutputDir(config);
  WriteJsonl(out / "bundles.jsonl", bundles);
  WriteJsonl(out / "knowledge_errors.jsonl", errors);
  spdlog::info("gen-knowledge: {} bundles, {} failed requests", bundles.size(),
               errors.size());
  if (!errors.empty()) {
    for (const auto &e : errors) {
      spdlog::warn("  {} [{}]: {}", e["instance_id"].get<std::string>(),
                   e["source"].get<std::string>(),
                   e["error"].get<std::string>());
    }
    return kExitPartial;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Shared by score and generate

namespace {

struct BundleIndex {
  std::map<std::pair<std::string, knowledge::InferenceSource>,
           knowledge::InferenceBundle>
      bundles;

  const knowledge::InferenceBundle &Get(const std::string &id,
                                        knowledge::InferenceSource src) const {
    auto it = bundles.find({id, src});
    if (it == bundles.end()) {
      throw Error("no " + std::string(knowledge::InferenceSourceName(src)) +
                  " bundle for instance " + id);
    }
    return it->second;
  }
};

std::optional<knowledge::InferenceSource> ModeSource(Mode mode) {
  if (mode == Mode::kKnowledgeLiteral) return knowledge::InferenceSource::kLiteral;
  if (mode == Mode::kKnowledgeContext) return knowledge::InferenceSource::kContext;
  return std::nullopt;
}

BundleIndex LoadBundles(const Config &config) {
  BundleIndex index;
  for (auto &b :
       ReadBundles(InputOrDefault(config, "paths.bundles", "bundles.jsonl"))) {
    auto key = std::make_pair(b.instance_id, b.source);
    index.bundles.emplace(std::move(key), std::move(b));
  }
  return index;
}

decoding::ToyLanguageModel LoadLm(const Config &config) {
  const std::string backend = config.Get("models.lm_backend");
  if (backend != "toy") {
    throw InvalidArgument("language model backend '" + backend +
                          "' is not available; use 'toy'");
  }
  return decoding::ToyLanguageModel::FromJsonFile(
      RequireExisting(config, "paths.toy_lm"));
}

corpus::Split EvalSplit(const Config &config) {
  return corpus::ParseSplit(config.Get("scoring.eval_split"));
}

// Distinct indices drawn without replacement, in draw order.
std::vector<size_t> SampleIndices(size_t population, size_t count, Rng &rng) {
  std::vector<size_t> idx(population);
  for (size_t i = 0; i < population; ++i) idx[i] = i;
  count = std::min(count, population);
  for (size_t i = 0; i < count; ++i) {
    const auto span = static_cast<double>(population - i);
    const size_t j = i + std::min(population - i - 1,
                                  static_cast<size_t>(UniformUnit(rng) * span));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  return idx;
}

struct PairedSets {
  std::vector<MultipleChoiceInstance> train, validation, eval;
  // Parent instance id of each pair, parallel to the vectors above.
  std::vector<std::string> train_parent, validation_parent, eval_parent;
};

PairedSets PairAll(const std::vector<DatasetInstance> &instances,
                   uint64_t pair_seed, corpus::Split eval_split) {
  PairedSets sets;
  for (const auto &inst : instances) {
    for (auto &pair : scoring::PairContinuations(inst, pair_seed)) {
      if (inst.split == eval_split) {
        sets.eval.push_back(std::move(pair));
        sets.eval_parent.push_back(inst.id);
      } else if (inst.split == corpus::Split::kTrain) {
        sets.train.push_back(std::move(pair));
        sets.train_parent.push_back(inst.id);
      } else if (inst.split == corpus::Split::kValidation) {
        sets.validation.push_back(std::move(pair));
        sets.validation_parent.push_back(inst.id);
      }
    }
  }
  return sets;
}

scoring::ChoiceExample MakeExample(Mode mode, const MultipleChoiceInstance &mc,
                                   const std::string &parent,
                                   const BundleIndex &bundles) {
  if (auto src = ModeSource(mode)) {
    return scoring::MakeKnowledgeExample(mc, bundles.Get(parent, *src));
  }
  if (mode == Mode::kContinuationOnly) {
    return scoring::MakeContinuationOnlyExample(mc);
  }
  return scoring::MakeSupervisedExample(mc);
}

Json StageSeeds(std::initializer_list<std::pair<const char *, uint64_t>> seeds) {
  Json j = Json::object();
  for (const auto &[name, value] : seeds) j[name] = value;
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------
// score

int Score(const Config &config) {
  const uint64_t seed = RequireSeed(config, "score");
  const Mode mode = ParseMode(config.Get("run.mode"));
  const uint64_t pair_seed = DeriveSeed(seed, "score.pairing");
  const uint64_t model_seed = DeriveSeed(seed, "score.model");
  const auto instances =
      ReadDataset(InputOrDefault(config, "paths.dataset", "dataset.jsonl"));
  const PairedSets sets = PairAll(instances, pair_seed, EvalSplit(config));
  if (sets.eval.empty()) {
    throw Error("no paired continuations in the " +
                config.Get("scoring.eval_split") + " split");
  }

  std::vector<Prediction> predictions(sets.eval.size());
  Json meta;
  meta["mode"] = ModeName(mode);
  meta["root_seed"] = seed;
  meta["stage_seeds"] =
      StageSeeds({{"pairing", pair_seed}, {"model", model_seed}});

  if (mode == Mode::kZeroShot || mode == Mode::kFewShot) {
    const auto lm = LoadLm(config);
    scoring::LmScoreOptions lm_options;
    lm_options.normalization =
        scoring::ParseLengthNormalization(config.Get("scoring.normalization"));
    lm_options.alpha = config.GetDouble("scoring.alpha");
    std::vector<MultipleChoiceInstance> shots;
    if (mode == Mode::kFewShot) {
      const size_t wanted = std::min<size_t>(
          static_cast<size_t>(config.GetInt("scoring.fewshot_examples")),
          scoring::kMaxDiscriminativeExamples);
      Rng rng(model_seed);
      for (size_t i : SampleIndices(sets.train.size(), wanted, rng)) {
        shots.push_back(sets.train[i]);
      }
      Json ids = Json::array();
      for (const auto &s : shots) ids.push_back(s.id);
      meta["prompt_examples"] = ids;
    }
    scoring::PromptOptions prompt_options;
    prompt_options.token_budget = PositiveSize(config, "scoring.token_budget");
    for (size_t i = 0; i < sets.eval.size(); ++i) {
      const auto &mc = sets.eval[i];
      std::vector<double> scores;
      if (mode == Mode::kZeroShot) {
        const std::string text = mc.narrative.Text();
        for (const auto &cand : mc.candidates) {
          scores.push_back(scoring::LmChoiceScore(lm, text, cand, lm_options));
        }
      } else {
        const std::string prompt =
            scoring::BuildDiscriminativePrompt(shots, mc, prompt_options);
        for (const char *answer : {"(1)", "(2)"}) {
          scores.push_back(
              scoring::LmChoiceScore(lm, prompt, answer, lm_options));
        }
      }
      predictions[i] = {mc.id, scores, scoring::ChooseIndex(scores), mc.gold};
    }
  } else {
    const std::optional<BundleIndex> bundles =
        ModeSource(mode) ? std::optional<BundleIndex>(LoadBundles(config))
                         : std::nullopt;
    const BundleIndex empty;
    const BundleIndex &index = bundles ? *bundles : empty;
    auto build = [&](const std::vector<MultipleChoiceInstance> &mcs,
                     const std::vector<std::string> &parents) {
      std::vector<scoring::ChoiceExample> out;
      for (size_t i = 0; i < mcs.size(); ++i) {
        out.push_back(MakeExample(mode, mcs[i], parents[i], index));
      }
      return out;
    };
    const auto train = build(sets.train, sets.train_parent);
    const auto validation = build(sets.validation, sets.validation_parent);
    const auto eval = build(sets.eval, sets.eval_parent);
    if (train.empty()) throw Error("no paired continuations in the train split");

    scoring::TrainConfig train_config;
    if (ModeSource(mode)) {
      train_config = scoring::TrainConfig::KnowledgeDefaults(TaskKind(config));
      train_config.batch_size = PositiveSize(
          config, TaskKind(config) == corpus::ExpressionKind::kIdiom
                      ? "train.knowledge_batch_idiom"
                      : "train.knowledge_batch_simile");
    } else {
      train_config.batch_size = PositiveSize(config, "train.batch");
    }
    train_config.epochs = static_cast<int>(config.GetInt("train.epochs"));
    train_config.learning_rate = config.GetDouble("train.lr");
    train_config.seed = DeriveSeed(model_seed, "train");

    const size_t dim = PositiveSize(config, "scoring.encoder_dim");
    scoring::ToyEncoder encoder(dim, PositiveSize(config, "scoring.encoder_buckets"),
                                DeriveSeed(model_seed, "encoder"));
    Rng head_rng(DeriveSeed(model_seed, "head"));
    scoring::ScoreHead head = scoring::ScoreHead::Random(
        dim, head_rng, 0.1, config.GetDouble("train.dropout"));
    const auto report =
        scoring::TrainToyModel(encoder, head, train, validation, train_config);
    meta["train"] = {{"epochs", train_config.epochs},
                     {"lr", train_config.learning_rate},
                     {"batch", train_config.batch_size},
                     {"train_loss", report.train_loss},
                     {"validation_accuracy", report.validation_accuracy},
                     {"best_epoch", report.best_epoch}};

    auto score_one = [&](size_t i) {
      std::vector<double> scores;
      for (const auto &inputs : eval[i].candidates) {
        scores.push_back(scoring::CandidateScore(encoder, head, inputs));
      }
      predictions[i] = {sets.eval[i].id, scores, scoring::ChooseIndex(scores),
                        sets.eval[i].gold};
    };
    if (config.GetBool("scoring.parallel")) {
      std::vector<std::future<void>> jobs;
      for (size_t i = 0; i < eval.size(); ++i) {
        jobs.push_back(std::async(std::launch::async, score_one, i));
      }
      for (auto &job : jobs) job.get();
    } else {
      for (size_t i = 0; i < eval.size(); ++i) score_one(i);
    }
  }

  size_t correct = 0;
  std::vector<Json> rows;
  for (const auto &p : predictions) {
    rows.push_back(ToJson(p));
    if (p.chosen == p.gold) ++correct;
  }
  const fs::path out = OutputDir(config);
  const std::string name(ModeName(mode));
  WriteJsonl(out / ("predictions-" + name + ".jsonl"), rows);
  meta["instances"] = predictions.size();
  WriteJson(out / ("score-" + name + ".json"), meta);
  spdlog::info("score [{}]: {} / {} correct", name, correct, predictions.size());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// generate

int GenerateContinuations(const Config &config) {
  const uint64_t seed = RequireSeed(config, "generate");
  const Mode mode = ParseMode(config.Get("run.mode"));
  if (mode == Mode::kContinuationOnly) {
    throw InvalidArgument("continuation-only is a scoring baseline only");
  }
  const uint64_t sample_seed = DeriveSeed(seed, "generate.sampling");
  const uint64_t prompt_seed = DeriveSeed(seed, "generate.prompts");
  const auto instances =
      ReadDataset(InputOrDefault(config, "paths.dataset", "dataset.jsonl"));
  const auto lm = LoadLm(config);

  decoding::DecodingConfig dc;
  const std::string strategy = config.Get("decoding.strategy");
  if (strategy == "top_k") {
    dc.strategy = decoding::Strategy::kTopK;
  } else if (strategy == "nucleus") {
    dc.strategy = decoding::Strategy::kNucleus;
  } else {
    throw InvalidArgument("decoding.strategy must be 'top_k' or 'nucleus'");
  }
  dc.k = PositiveSize(config, "decoding.k");
  dc.temperature = config.GetDouble("decoding.temperature");
  dc.p = config.GetDouble("decoding.p");
  dc.max_tokens = PositiveSize(config, "decoding.max_tokens");
  dc.parallel_prompts = config.GetBool("decoding.parallel");
  dc.Validate();

  const auto source = ModeSource(mode);
  const std::optional<BundleIndex> bundles =
      source ? std::optional<BundleIndex>(LoadBundles(config)) : std::nullopt;

  std::vector<scoring::GenerativeExample> shots;
  if (mode == Mode::kFewShot) {
    std::vector<scoring::GenerativeExample> pool;
    for (const auto &inst : instances) {
      if (inst.split != corpus::Split::kTrain) continue;
      for (const auto &c : inst.continuations) {
        if (c.label == corpus::Label::kPlausible) {
          pool.push_back({inst.narrative.Text(), c.text});
          break;
        }
      }
    }
    Rng rng(prompt_seed);
    for (size_t i : SampleIndices(
             pool.size(), PositiveSize(config, "decoding.fewshot_examples"), rng)) {
      shots.push_back(pool[i]);
    }
  }
  scoring::PromptOptions prompt_options;
  prompt_options.token_budget = PositiveSize(config, "scoring.token_budget");

  const corpus::Split split = EvalSplit(config);
  const std::string name(ModeName(mode));
  std::vector<Json> rows;
  for (const auto &inst : instances) {
    if (inst.split != split) continue;
    const std::string narrative = inst.narrative.Text();
    const uint64_t instance_seed = DeriveSeed(sample_seed, inst.id);
    Rng rng(instance_seed);
    decoding::TokenSequence tokens;
    if (source) {
      const auto &bundle = bundles->Get(inst.id, *source);
      std::vector<decoding::TokenSequence> prompts;
      for (const auto &inf : bundle.inferences) {
        prompts.push_back(
            decoding::BuildGenerationPrompt(lm, inf.verbalized, narrative));
      }
      tokens = decoding::EnsembleGenerate(lm, prompts, dc, rng);
    } else {
      decoding::TokenSequence prompt;
      if (mode == Mode::kFewShot) {
        prompt = lm.Tokenize(
            scoring::BuildGenerativePrompt(shots, narrative, prompt_options));
      } else {
        prompt = lm.Tokenize(narrative);
        if (mode == Mode::kSupervised) {
          if (auto sep = lm.SpecialToken(decoding::kSep2)) prompt.push_back(*sep);
        }
      }
      tokens = decoding::Generate(lm, prompt, dc, rng);
    }
    rows.push_back(ToJson(Generation{inst.id, name, lm.Detokenize(tokens),
                                     std::vector<int32_t>(tokens.begin(),
                                                          tokens.end()),
                                     instance_seed}));
  }
  if (rows.empty()) {
    throw Error("no instances in the " + config.Get("scoring.eval_split") +
                " split");
  }
  const fs::path out = OutputDir(config);
  WriteJsonl(out / ("generations-" + name + ".jsonl"), rows);
  Json meta;
  meta["mode"] = name;
  meta["root_seed"] = seed;
  meta["stage_seeds"] =
      StageSeeds({{"sampling", sample_seed}, {"prompts", prompt_seed}});
  meta["instances"] = rows.size();
  WriteJson(out / ("generate-" + name + ".json"), meta);
  spdlog::info("generate [{}]: {} continuations", name, rows.size());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate

namespace {

class PredictionModel : public evaluation::ChoiceModel {
 public:
  PredictionModel(std::string name, const std::vector<Prediction> &predictions)
      : name_(std::move(name)) {
    for (const auto &p : predictions) scores_[p.instance_id] = p.scores;
  }
  std::string name() const override { return name_; }
  std::vector<double> Scores(const MultipleChoiceInstance &mc) const override {
    return scores_.at(mc.id);
  }

 private:
  std::string name_;
  std::map<std::string, std::vector<double>> scores_;
};

// Explicit comma list, or <output_dir>/<prefix>*.jsonl in name order.
std::vector<fs::path> CollectInputs(const Config &config, std::string_view key,
                                    std::string_view prefix) {
  std::vector<fs::path> paths;
  if (config.Has(key)) {
    for (const auto &p : config.GetList(key)) {
      if (!fs::exists(p)) throw InvalidArgument(p + " does not exist");
      paths.emplace_back(p);
    }
    return paths;
  }
  const fs::path dir = config.Get("paths.output_dir");
  if (!fs::is_directory(dir)) return paths;
  for (const auto &entry : fs::directory_iterator(dir)) {
    const std::string file = entry.path().filename().string();
    if (file.rfind(prefix, 0) == 0 && entry.path().extension() == ".jsonl") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::string ModelName(const fs::path &path, std::string_view prefix) {
  std::string stem = path.stem().string();
  if (stem.rfind(prefix, 0) == 0) stem = stem.substr(prefix.size());
  return stem;
}

}  // namespace

int Evaluate(const Config &config) {
  evaluation::EvalOptions options;
  options.parallel = config.GetBool("evaluation.parallel");
  evaluation::EvaluationReport report;

  for (const auto &path : CollectInputs(config, "paths.predictions", "predictions-")) {
    const auto predictions = ReadPredictions(path);
    if (predictions.empty()) continue;
    std::vector<MultipleChoiceInstance> instances;
    for (const auto &p : predictions) {
      if (p.scores.size() != 2) {
        throw FormatError(path.string() + ": " + p.instance_id +
                          " needs exactly two scores");
      }
      MultipleChoiceInstance mc;
      mc.id = p.instance_id;
      mc.gold = p.gold;
      instances.push_back(std::move(mc));
    }
    const PredictionModel model(
        "discriminative/" + ModelName(path, "predictions-"), predictions);
    report.Append(evaluation::RunDiscriminativeEval(model, instances, options));
  }

  const auto generation_files =
      CollectInputs(config, "paths.generations", "generations-");
  if (!generation_files.empty()) {
    const auto instances =
        ReadDataset(InputOrDefault(config, "paths.dataset", "dataset.jsonl"));
    const corpus::Split split = EvalSplit(config);
    std::vector<evaluation::TextPair> references;
    for (const auto &inst : instances) {
      if (inst.split != split) continue;
      for (const auto &c : inst.continuations) {
        if (c.label == corpus::Label::kPlausible) {
          references.push_back({inst.id, c.text});
          break;
        }
      }
    }
    if (references.empty()) {
      throw Error("no reference continuations in the " +
                  config.Get("scoring.eval_split") + " split");
    }
    const evaluation::HashEmbedder embedder(
        PositiveSize(config, "evaluation.embed_dim"));
    for (const auto &path : generation_files) {
      std::vector<evaluation::TextPair> generations;
      for (const auto &g : ReadGenerations(path)) {
        generations.push_back({g.instance_id, g.continuation_text});
      }
      report.Append(evaluation::RunGenerativeEval(
          "generative/" + ModelName(path, "generations-"), generations,
          references, embedder,
          options));
    }
  }

  if (config.Has("paths.judgments")) {
    const auto matrix = evaluation::JudgmentMatrix::FromCsvFile(
        RequireExisting(config, "paths.judgments").string());
    const std::string tie = config.Get("evaluation.tie_label");
    evaluation::EvaluationReport human;
    size_t plausible = 0;
    for (size_t i = 0; i < matrix.items().size(); ++i) {
      const auto labels = matrix.ItemLabels(i);
      if (labels.empty()) continue;
      const bool is_plausible = evaluation::MajorityVote(labels, tie) == "plausible";
      plausible += is_plausible ? 1 : 0;
      human.records.push_back({"human_judgments", matrix.items()[i],
                               {{"plausible", is_plausible ? 1.0 : 0.0}},
                               std::nullopt, std::nullopt, ""});
    }
    human.rows.push_back(
        {"human_judgments",
         {{"plausible_rate", static_cast<double>(plausible) /
                                 static_cast<double>(matrix.items().size())},
          {"krippendorff_alpha", evaluation::KrippendorffAlpha(matrix)}}});
    report.Append(human);
  }

  if (report.rows.empty()) {
    throw InvalidArgument("nothing to evaluate: no predictions, generations "
                          "or judgments found");
  }
  const fs::path out = OutputDir(config);
  {
    std::ofstream tsv(out / "report.tsv", std::ios::binary);
    report.WriteTsv(tsv);
    std::ofstream jsonl(out / "report.jsonl", std::ios::binary);
    report.WriteJsonl(jsonl);
  }
  for (const auto &w : report.warnings) spdlog::warn("evaluate: {}", w);
  std::ostringstream table;
  report.WriteTsv(table);
  spdlog::info("evaluate:\n{}", table.str());
  return kExitOk;
}

}  // namespace figstory::harness
