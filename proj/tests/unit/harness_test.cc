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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "figstory/common/error.h"
#include "harness/commands.h"
#include "harness/config.h"
#include "harness/records.h"

namespace figstory::harness {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("figstory-harness-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path &path() const { return path_; }
  fs::path Write(const std::string &name, const std::string &text) const {
    const fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

TEST(ConfigTest, Defaults) {
  const auto c = Config::Defaults();
  EXPECT_EQ(c.Get("run.mode"), "supervised");
  EXPECT_FALSE(c.Has("run.seed"));
  EXPECT_EQ(c.GetInt("pipeline.window"), 4);
  EXPECT_EQ(c.GetList("pipeline.split_ratios"),
            (std::vector<std::string>{"3204", "355", "1542"}));
  EXPECT_DOUBLE_EQ(c.GetDouble("decoding.temperature"), 0.7);
  EXPECT_EQ(c.GetInt("decoding.k"), 5);
  EXPECT_DOUBLE_EQ(c.GetDouble("train.lr"), 1e-5);
  EXPECT_TRUE(c.GetBool("pipeline.require_all_splits"));
  EXPECT_EQ(c.Get("evaluation.tie_label"), "implausible");
}

TEST(ConfigTest, IniResolvesPathsRelativeToFile) {
  TempDir dir;
  const auto ini = dir.Write("run.ini",
                             "[run]\nseed = 9\n[paths]\ncorpus = books\n"
                             "output_dir = out\n[decoding]\nk = 3\n");
  auto c = Config::Defaults();
  c.LoadIni(ini);
  EXPECT_EQ(c.GetInt("run.seed"), 9);
  EXPECT_EQ(*c.GetPath("paths.corpus"), dir.path() / "books");
  EXPECT_EQ(*c.GetPath("paths.output_dir"), fs::path("out"));
  EXPECT_EQ(c.GetInt("decoding.k"), 3);
  EXPECT_FALSE(c.GetPath("paths.lexicon").has_value());
}

TEST(ConfigTest, ReferenceIniMatchesDefaults) {
  auto c = Config::Defaults();
  c.LoadIni(FIGSTORY_SOURCE_DIR "/configs/figstory.ini");
  EXPECT_EQ(c.values(), Config::Defaults().values());
}

TEST(ConfigTest, UnknownKeysAndBadValuesThrow) {
  TempDir dir;
  auto c = Config::Defaults();
  EXPECT_THROW(c.LoadIni(dir.Write("bad.ini", "[decoding]\ntop = 3\n")),
               InvalidArgument);
  EXPECT_THROW(c.Override("decoding.top=3"), InvalidArgument);
  EXPECT_THROW(c.Override("no-equals"), InvalidArgument);
  c.Override("decoding.k=seven");
  EXPECT_THROW(c.GetInt("decoding.k"), InvalidArgument);
  c.Override("scoring.parallel=maybe");
  EXPECT_THROW(c.GetBool("scoring.parallel"), InvalidArgument);
  EXPECT_THROW(c.LoadIni(dir.path() / "missing.ini"), Error);
}

TEST(CommandsTest, ModesAndSeed) {
  for (auto m : {Mode::kZeroShot, Mode::kFewShot, Mode::kSupervised,
                 Mode::kKnowledgeLiteral, Mode::kKnowledgeContext,
                 Mode::kContinuationOnly}) {
    EXPECT_EQ(ParseMode(ModeName(m)), m);
  }
  EXPECT_THROW(ParseMode("greedy"), InvalidArgument);
  auto c = Config::Defaults();
  try {
    RequireSeed(c, "score");
    FAIL();
  } catch (const InvalidArgument &e) {
    EXPECT_NE(std::string(e.what()).find("requires --seed"), std::string::npos);
  }
  c.Set("run.seed", "12");
  EXPECT_EQ(RequireSeed(c, "score"), 12u);
}

TEST(CommandsTest, ExitCodes) {
  EXPECT_EQ(ExitCodeFor(SchemaError("x", {{1, "bad"}})), kExitSchema);
  EXPECT_EQ(ExitCodeFor(InvalidArgument("x")), kExitUsage);
  EXPECT_EQ(ExitCodeFor(Error("x")), kExitError);
}

Config E2eConfig(const fs::path &out) {
  auto c = Config::Defaults();
  c.LoadIni(FIGSTORY_TEST_DATA_DIR "/e2e/config.ini");
  c.Set("run.seed", "5");
  c.Set("paths.output_dir", out.string());
  return c;
}

size_t CountLines(const fs::path &path) {
  std::ifstream in(path);
  size_t n = 0;
  for (std::string line; std::getline(in, line);) n += !line.empty();
  return n;
}

TEST(CommandsTest, BuildDatasetRejectsEmptyLexicon) {
  TempDir dir;
  auto c = E2eConfig(dir.path() / "out");
  c.Set("paths.lexicon", dir.Write("empty.tsv", "# nothing here\n").string());
  EXPECT_THROW(BuildDataset(c), Error);
}

TEST(CommandsTest, GenKnowledgeBundlesMatchInstances) {
  TempDir dir;
  const auto c = E2eConfig(dir.path());
  ASSERT_EQ(BuildDataset(c), kExitOk);
  ASSERT_EQ(GenKnowledge(c), kExitOk);
  const size_t instances = CountLines(dir.path() / "dataset.jsonl");
  EXPECT_GT(instances, 0u);
  EXPECT_EQ(CountLines(dir.path() / "bundles.jsonl"), 2 * instances);
  EXPECT_EQ(CountLines(dir.path() / "knowledge_errors.jsonl"), 0u);
  for (const auto &b : ReadBundles(dir.path() / "bundles.jsonl")) {
    EXPECT_EQ(b.size(), 12u);
  }
}

TEST(CommandsTest, GenKnowledgeRecordsMissingFixtureKeys) {
  TempDir dir;
  auto c = E2eConfig(dir.path());
  ASSERT_EQ(BuildDataset(c), kExitOk);
  // Only the context relations are answerable.
  c.Set("paths.knowledge_fixture",
        dir.Write("partial.json", R"({
          "*|xIntent": ["a", "b"], "*|xNeed": ["a", "b"], "*|xAttr": ["a", "b"],
          "*|xWant": ["a", "b"], "*|xEffect": ["a", "b"], "*|xReact": ["a", "b"]})")
            .string());
  EXPECT_EQ(GenKnowledge(c), kExitPartial);
  const size_t instances = CountLines(dir.path() / "dataset.jsonl");
  EXPECT_EQ(CountLines(dir.path() / "bundles.jsonl"), instances);
  EXPECT_EQ(CountLines(dir.path() / "knowledge_errors.jsonl"), instances);
  std::ifstream in(dir.path() / "knowledge_errors.jsonl");
  std::string line;
  std::getline(in, line);
  const auto j = Json::parse(line);
  EXPECT_EQ(j["source"], "literal");
  EXPECT_FALSE(j["subject"].get<std::string>().empty());
}

corpus::DatasetInstance SampleInstance() {
  corpus::DatasetInstance inst;
  inst.id = "idiom-doc-0003-0";
  inst.narrative.context_sentences = {"Ann was new.", "Nobody spoke."};
  inst.narrative.final_sentence = "She told a joke to break the ice.";
  inst.narrative.kind = corpus::ExpressionKind::kIdiom;
  inst.narrative.expression = "break the ice";
  inst.narrative.expression_span = {19, 32};
  inst.narrative.gloss = "ease tension";
  inst.continuations = {{"Everyone laughed.", corpus::Label::kPlausible},
                        {"The ice melted.", corpus::Label::kImplausible}};
  inst.split = corpus::Split::kTest;
  return inst;
}

TEST(RecordsTest, DatasetRoundTrip) {
  const auto inst = SampleInstance();
  const Json j = ToJson(inst);
  EXPECT_TRUE(ValidateDatasetInstance(j).empty());
  const auto back = DatasetInstanceFromJson(j);
  EXPECT_EQ(ToJson(back).dump(), j.dump());
  EXPECT_EQ(back.narrative.final_sentence.substr(19, 13), "break the ice");
}

TEST(RecordsTest, DatasetValidationProblems) {
  Json j = ToJson(SampleInstance());
  j["expression_char_span"] = Json::array({19, 99});
  EXPECT_FALSE(ValidateDatasetInstance(j).empty());
  j = ToJson(SampleInstance());
  j["split"] = "dev";
  EXPECT_FALSE(ValidateDatasetInstance(j).empty());
  j = ToJson(SampleInstance());
  j.erase("id");
  EXPECT_FALSE(ValidateDatasetInstance(j).empty());
}

TEST(RecordsTest, PredictionAndGenerationRoundTrip) {
  const Prediction p{"i", {0.25, -1.5}, 0, 1};
  const auto pj = ToJson(p);
  EXPECT_TRUE(ValidatePrediction(pj).empty());
  const auto p2 = PredictionFromJson(pj);
  EXPECT_EQ(p2.scores, p.scores);
  EXPECT_EQ(p2.gold, 1u);
  const Generation g{"i", "knowledge-literal", "she smiled .", {5, 8, 4}, 77};
  const auto gj = ToJson(g);
  EXPECT_TRUE(ValidateGeneration(gj).empty());
  EXPECT_EQ(GenerationFromJson(gj).tokens, g.tokens);
  EXPECT_EQ(GenerationFromJson(gj).seed, 77u);
}

TEST(RecordsTest, ReadJsonlReportsEveryBadLine) {
  TempDir dir;
  const std::string good = ToJson(Prediction{"a", {1.0, 0.0}, 0, 0}).dump();
  const auto path = dir.Write(
      "p.jsonl", good + "\n{\"instance_id\": 3}\n" + good + "\nnot json\n");
  try {
    ReadPredictions(path);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError &e) {
    ASSERT_GE(e.problems().size(), 2u);
    EXPECT_EQ(e.problems().front().line, 2u);
    EXPECT_EQ(e.problems().back().line, 4u);
    EXPECT_EQ(ExitCodeFor(e), kExitSchema);
  }
  const auto ok = dir.Write("ok.jsonl", good + "\n\n" + good + "\n");
  EXPECT_EQ(ReadPredictions(ok).size(), 2u);
}

TEST(RecordsTest, WriteThenReadDataset) {
  TempDir dir;
  const auto path = dir.path() / "d.jsonl";
  WriteJsonl(path, {ToJson(SampleInstance()), ToJson(SampleInstance())});
  const auto back = ReadDataset(path);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].continuations.size(), 2u);
}

}  // namespace
}  // namespace figstory::harness
