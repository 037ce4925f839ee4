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

#include <algorithm>
#include <cmath>
#include <mutex>

#include "figstory/common/error.h"
#include "figstory/common/random.h"
#include "figstory/decoding/toy_language_model.h"
#include "figstory/scoring/encoder.h"
#include "figstory/scoring/fewshot_prompt.h"
#include "figstory/scoring/lm_scorer.h"
#include "figstory/scoring/multiple_choice.h"
#include "figstory/scoring/score_head.h"
#include "figstory/scoring/toy_model.h"

namespace figstory::scoring {
namespace {

using decoding::ToyLanguageModel;

corpus::Narrative MakeNarrative(std::string context, std::string final) {
  corpus::Narrative n;
  if (!context.empty()) n.context_sentences = {std::move(context)};
  n.final_sentence = std::move(final);
  return n;
}

TEST(LmScorerTest, UniformModelGivesLogQuarter) {
  ToyLanguageModel lm({"a", "b", "c", "d"}, std::nullopt);
  for (auto norm : {LengthNormalization::kMean, LengthNormalization::kTotal}) {
    LmScoreOptions options;
    options.normalization = norm;
    const double s = LmChoiceScore(lm, std::string_view("a b"), "c", options);
    EXPECT_NEAR(s, std::log(0.25), 1e-12);
  }
}

TEST(LmScorerTest, FixtureMeanTotalAndPower) {
  ToyLanguageModel lm({"a", "b", "c", "d"}, std::nullopt);
  lm.SetRow("", {std::log(0.5), std::log(0.25), std::log(0.125),
                 std::log(0.125)});
  lm.SetRow("a", {0.0, 0.0, 0.0, 0.0});
  const double total = std::log(0.5) + std::log(0.25);
  EXPECT_NEAR(LmChoiceScore(lm, std::string_view(""), "a b"), total / 2,
              1e-12);
  LmScoreOptions options;
  options.normalization = LengthNormalization::kTotal;
  EXPECT_NEAR(LmChoiceScore(lm, std::string_view(""), "a b", options), total,
              1e-12);
  options.normalization = LengthNormalization::kLengthPower;
  options.alpha = 0.5;
  EXPECT_NEAR(LmChoiceScore(lm, std::string_view(""), "a b", options),
              total / std::sqrt(2.0), 1e-12);
}

TEST(LmScorerTest, EqualLengthMeanAndTotalAgree) {
  const auto lm =
      ToyLanguageModel::FromJsonFile(FIGSTORY_TEST_DATA_DIR "/e2e/toy_lm.json");
  LmScoreOptions total;
  total.normalization = LengthNormalization::kTotal;
  const char *pairs[][2] = {{"she smiled .", "he slept ."},
                            {"kept the secret", "kept the money"},
                            {"they laughed", "she rested"}};
  for (const auto &pair : pairs) {
    MultipleChoiceInstance mc;
    mc.narrative = MakeNarrative("she was calm .", "he kept the");
    mc.candidates = {pair[0], pair[1]};
    EXPECT_EQ(ZeroShotChoose(lm, mc), ZeroShotChoose(lm, mc, total));
  }
}

// Probability of each continuation from the product of its per-token
// softmax probabilities, compared with the scorer's choice.
TEST(LmScorerTest, AgreesWithProbabilityProductOnFixtureData) {
  const auto lm =
      ToyLanguageModel::FromJsonFile(FIGSTORY_TEST_DATA_DIR "/e2e/toy_lm.json");
  const char *conts[] = {"she smiled .", "he slept", "they laughed and she rested .",
                         "the money was small .", "kept the secret .", "the"};
  const char *narratives[] = {"he kept the", "she was calm .", "they", "the"};
  int checked = 0;
  for (const char *n : narratives) {
    for (const char *a : conts) {
      for (const char *b : conts) {
        double mean[2];
        const char *cs[2] = {a, b};
        for (int i = 0; i < 2; ++i) {
          auto ctx = lm.Tokenize(n);
          const auto toks = lm.Tokenize(cs[i]);
          double prob = 1.0;
          for (auto t : toks) {
            const auto z = lm.NextLogits(ctx);
            double norm = 0.0;
            for (double v : z) norm += std::exp(v);
            prob *= std::exp(z[static_cast<size_t>(t)]) / norm;
            ctx.push_back(t);
          }
          mean[i] = std::log(prob) / static_cast<double>(toks.size());
        }
        MultipleChoiceInstance mc;
        mc.narrative = MakeNarrative("", n);
        mc.candidates = {a, b};
        if (std::abs(mean[0] - mean[1]) < 1e-9) continue;  // numerical ties
        EXPECT_EQ(ZeroShotChoose(lm, mc), mean[1] > mean[0] ? 1u : 0u)
            << n << " | " << a << " | " << b;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(LmScorerTest, Errors) {
  ToyLanguageModel lm({"a"}, std::nullopt);
  EXPECT_THROW(LmChoiceScore(lm, std::string_view("a"), ""), InvalidArgument);
  EXPECT_THROW(ParseLengthNormalization("median"), InvalidArgument);
  EXPECT_EQ(ParseLengthNormalization("length_power"),
            LengthNormalization::kLengthPower);
}

TEST(LmScorerTest, ZeroShotPicksLikelierContinuation) {
  ToyLanguageModel lm({"x", "good", "bad"}, std::nullopt);
  lm.SetRow("x", {0.0, 2.0, -1.0});
  MultipleChoiceInstance mc;
  mc.narrative = MakeNarrative("", "x");
  mc.candidates = {"bad", "good"};
  EXPECT_EQ(ZeroShotChoose(lm, mc), 1u);
  std::swap(mc.candidates[0], mc.candidates[1]);
  EXPECT_EQ(ZeroShotChoose(lm, mc), 0u);
}

TEST(ChooseIndexTest, TiesGoToFirst) {
  const double tie[] = {0.3, 0.3};
  EXPECT_EQ(ChooseIndex(tie), 0u);
  const double b[] = {-2.0, -1.0};
  EXPECT_EQ(ChooseIndex(b), 1u);
  EXPECT_THROW(ChooseIndex(std::span<const double>{}), InvalidArgument);
}

TEST(ChooseIndexTest, InvariantUnderMonotoneTransform) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> s = {UniformUnit(rng) - 0.5, UniformUnit(rng) - 0.5};
    std::vector<double> shifted;
    for (double v : s) shifted.push_back(3.0 * v + 7.0);
    EXPECT_EQ(ChooseIndex(s), ChooseIndex(shifted));
  }
}

TEST(McInputTest, SegmentOrder) {
  const auto n = MakeNarrative("She ran.", "She won.");
  EXPECT_EQ(BuildMcInput(n, "She cheered."),
            (SegmentList{"She ran. She won.", "She cheered."}));
  EXPECT_EQ(BuildMcInput(n, "She cheered.", "PersonX is brave"),
            (SegmentList{"PersonX is brave", "She ran. She won.",
                         "She cheered."}));
  const SegmentList segs = {"a", "b", "c"};
  EXPECT_EQ(JoinSegments(segs, kDefaultSeparator), "a </s> b </s> c");
}

TEST(ScoreHeadTest, DotProductPlusBias) {
  ScoreHead head(3);
  head.weights() = {1.0, -2.0, 0.5};
  head.bias() = 0.25;
  const double v[] = {2.0, 1.0, 4.0};
  EXPECT_DOUBLE_EQ(head.Score(v), 2.0 - 2.0 + 2.0 + 0.25);
  const double bad[] = {1.0};
  EXPECT_THROW(head.Score(bad), InvalidArgument);
}

TEST(ScoreHeadTest, DropoutMaskIsInverted) {
  ScoreHead head(1000, 0.25);
  std::fill(head.weights().begin(), head.weights().end(), 1.0);
  std::vector<double> ones(1000, 1.0), mask;
  Rng rng(3);
  head.ScoreTraining(ones, rng, mask);
  ASSERT_EQ(mask.size(), 1000u);
  size_t kept = 0;
  for (double m : mask) {
    if (m != 0.0) {
      EXPECT_DOUBLE_EQ(m, 1.0 / 0.75);
      ++kept;
    }
  }
  EXPECT_NEAR(static_cast<double>(kept) / 1000.0, 0.75, 0.05);
}

// Encoder that records every segment list it is asked to encode. The
// encoding depends only on the last segment, so scores are easy to predict.
class RecordingEncoder : public Encoder {
 public:
  size_t dim() const override { return 1; }
  std::vector<double> Encode(
      std::span<const std::string> segments) const override {
    std::lock_guard<std::mutex> lock(mu_);
    seen_.emplace_back(segments.begin(), segments.end());
    const std::string &first = segments.front();
    return {static_cast<double>(first.size())};
  }
  std::vector<SegmentList> seen() const {
    std::lock_guard<std::mutex> lock(mu_);
    return seen_;
  }

 private:
  mutable std::mutex mu_;
  mutable std::vector<SegmentList> seen_;
};

knowledge::InferenceBundle BundleOfSizes(std::span<const int> sizes) {
  knowledge::InferenceBundle b;
  for (int s : sizes) {
    knowledge::Inference inf;
    inf.verbalized = std::string(static_cast<size_t>(s), 'x');
    b.inferences.push_back(inf);
  }
  return b;
}

TEST(KnowledgeScoreTest, SumOfPerInferenceScores) {
  RecordingEncoder encoder;
  ScoreHead head(1);
  head.weights() = {0.5};
  head.bias() = 1.0;
  const int sizes[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  const auto bundle = BundleOfSizes(sizes);
  const auto n = MakeNarrative("A.", "B.");
  // Each term is 0.5 * len + 1; lengths 1..12 sum to 78.
  EXPECT_DOUBLE_EQ(KnowledgeChoiceScore(encoder, head, n, "C.", bundle),
                   0.5 * 78 + 12.0);
  for (const auto &segs : encoder.seen()) {
    ASSERT_EQ(segs.size(), 3u);
    EXPECT_EQ(segs[1], "A. B.");
    EXPECT_EQ(segs[2], "C.");
  }
  EXPECT_THROW(KnowledgeChoiceScore(encoder, head, n, "C.",
                                    knowledge::InferenceBundle{}),
               InvalidArgument);
}

TEST(KnowledgeScoreTest, SingleInferenceIsPrependedSupervisedScore) {
  ToyEncoder encoder(8, 64, 3);
  Rng rng(4);
  const auto head = ScoreHead::Random(8, rng, 1.0);
  const auto n = MakeNarrative("Ann ran home.", "She was late.");
  knowledge::InferenceBundle bundle;
  bundle.inferences.push_back({"s", knowledge::Relation::kXAttr, "tired",
                               "PersonX is tired", 1});
  EXPECT_DOUBLE_EQ(
      KnowledgeChoiceScore(encoder, head, n, "She slept.", bundle),
      head.Score(encoder.Encode(BuildMcInput(n, "She slept.", "PersonX is tired"))));
  // Repeated evaluation is bit-identical.
  EXPECT_EQ(SupervisedScore(encoder, head, n, "She slept."),
            SupervisedScore(encoder, head, n, "She slept."));
}

TEST(KnowledgeScoreTest, PermutationInvariantWithToyEncoder) {
  ToyEncoder encoder(8, 64, 17);
  Rng rng(21);
  auto head = ScoreHead::Random(8, rng, 1.0);
  knowledge::InferenceBundle bundle;
  for (int i = 0; i < 12; ++i) {
    knowledge::Inference inf;
    inf.verbalized = "PersonX wants thing" + std::to_string(i);
    bundle.inferences.push_back(inf);
  }
  const auto n = MakeNarrative("Ann ran home.", "Ann was out of breath.");
  const double base = KnowledgeChoiceScore(encoder, head, n, "She sat.", bundle);
  double manual = 0.0;
  for (const auto &inf : bundle.inferences) {
    manual += head.Score(encoder.Encode(BuildMcInput(n, "She sat.", inf.verbalized)));
  }
  EXPECT_NEAR(base, manual, 1e-9);
  for (int t = 0; t < 20; ++t) {
    std::shuffle(bundle.inferences.begin(), bundle.inferences.end(), rng);
    EXPECT_NEAR(KnowledgeChoiceScore(encoder, head, n, "She sat.", bundle),
                base, 1e-9);
  }
}

TEST(ContinuationOnlyTest, NeverSeesNarrative) {
  RecordingEncoder encoder;
  ScoreHead head(1);
  MultipleChoiceInstance mc;
  mc.narrative = MakeNarrative("ZZCONTEXT here.", "ZZFINAL there.");
  mc.candidates = {"first option", "second option"};
  ContinuationOnlyScore(encoder, head, mc.candidates[0]);
  const auto ex = MakeContinuationOnlyExample(mc);
  PredictChoice(encoder, head, ex);
  for (const auto &segs : encoder.seen()) {
    for (const auto &s : segs) {
      EXPECT_EQ(s.find("ZZ"), std::string::npos) << s;
    }
  }
  EXPECT_FALSE(encoder.seen().empty());
}

TEST(PairContinuationsTest, GoldPointsAtPlausibleAndIsDeterministic) {
  corpus::DatasetInstance inst;
  inst.id = "idiom-doc-0001-0";
  inst.narrative = MakeNarrative("", "x");
  inst.continuations = {{"p0", corpus::Label::kPlausible},
                        {"i0", corpus::Label::kImplausible},
                        {"p1", corpus::Label::kPlausible},
                        {"i1", corpus::Label::kImplausible},
                        {"p2", corpus::Label::kPlausible}};
  const auto a = PairContinuations(inst, 99);
  const auto b = PairContinuations(inst, 99);
  ASSERT_EQ(a.size(), 2u);
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, inst.id + "#" + std::to_string(i));
    EXPECT_EQ(a[i].candidates[a[i].gold], "p" + std::to_string(i));
    EXPECT_EQ(a[i].candidates[1 - a[i].gold], "i" + std::to_string(i));
    EXPECT_EQ(a[i].gold, b[i].gold);
  }
}

TEST(PairContinuationsTest, GoldPositionIsBalanced) {
  size_t ones = 0;
  for (int i = 0; i < 2000; ++i) {
    corpus::DatasetInstance inst;
    inst.id = "id" + std::to_string(i);
    inst.continuations = {{"p", corpus::Label::kPlausible},
                          {"q", corpus::Label::kImplausible}};
    ones += PairContinuations(inst, 7).front().gold;
  }
  EXPECT_NEAR(static_cast<double>(ones) / 2000.0, 0.5, 0.05);
}

MultipleChoiceInstance Mc(std::string n, std::string a, std::string b) {
  MultipleChoiceInstance mc;
  mc.narrative = MakeNarrative("", std::move(n));
  mc.candidates = {std::move(a), std::move(b)};
  return mc;
}

TEST(FewShotPromptTest, DiscriminativeGolden) {
  const auto ex = Mc("n1", "a", "b");
  auto test = Mc("n2", "c", "d");
  EXPECT_EQ(BuildDiscriminativePrompt(std::span(&ex, 1), test),
            "Q: n1 (1) a (2) b A: (1)\nQ: n2 (1) c (2) d A: ");
}

TEST(FewShotPromptTest, DiscriminativeUsesGoldIndex) {
  auto ex = Mc("n1", "a", "b");
  ex.gold = 1;
  EXPECT_EQ(BuildDiscriminativePrompt(std::span(&ex, 1), Mc("n2", "c", "d")),
            "Q: n1 (1) a (2) b A: (2)\nQ: n2 (1) c (2) d A: ");
}

TEST(FewShotPromptTest, TooManyExamplesOrTokensFail) {
  std::vector<MultipleChoiceInstance> seven(7, Mc("n", "a", "b"));
  EXPECT_THROW(BuildDiscriminativePrompt(seven, Mc("t", "c", "d")),
               InvalidArgument);
  std::vector<MultipleChoiceInstance> six(6, Mc("n", "a", "b"));
  EXPECT_NO_THROW(BuildDiscriminativePrompt(six, Mc("t", "c", "d")));
  PromptOptions tight;
  tight.token_budget = 10;
  EXPECT_THROW(BuildDiscriminativePrompt(six, Mc("t", "c", "d"), tight),
               InvalidArgument);
}

TEST(FewShotPromptTest, GenerativeGolden) {
  const GenerativeExample ex[] = {{"n1", "c1"}, {"n2", "c2"}};
  EXPECT_EQ(BuildGenerativePrompt(ex, "n3"),
            "Q: n1 A: c1\nQ: n2 A: c2\nQ: n3 A: ");
  EXPECT_EQ(BuildGenerativePrompt({}, "n"), "Q: n A: ");
  EXPECT_EQ(CountPromptTokens("Q: n1 A: c1\n"), 4u);
}

TEST(ToyEncoderTest, DeterministicAndSkipsSeparatorAndPunctuation) {
  ToyEncoder a(8, 32, 4), b(8, 32, 4);
  EXPECT_EQ(a.embeddings(), b.embeddings());
  const SegmentList x = {"Hello , World", "</s>"};
  const SegmentList y = {"hello world"};
  EXPECT_EQ(a.Features(x), a.Features(y));
  EXPECT_EQ(a.Encode(x), a.Encode(y));
  const SegmentList empty = {"..."};
  EXPECT_EQ(a.Encode(empty), std::vector<double>(8, 0.0));
}

TEST(TrainConfigTest, Defaults) {
  TrainConfig c;
  EXPECT_EQ(c.epochs, 10);
  EXPECT_DOUBLE_EQ(c.learning_rate, 1e-5);
  EXPECT_EQ(c.batch_size, 8u);
  EXPECT_EQ(TrainConfig::KnowledgeDefaults(corpus::ExpressionKind::kIdiom)
                .batch_size,
            16u);
  EXPECT_EQ(TrainConfig::KnowledgeDefaults(corpus::ExpressionKind::kSimile)
                .batch_size,
            64u);
  c.epochs = 0;
  EXPECT_THROW(c.Validate(), InvalidArgument);
}

// Plausible answers use one vocabulary, implausible another.
std::vector<ChoiceExample> SeparableSet(size_t n, Rng &rng) {
  static const char *good[] = {"calm", "glad", "warm", "kind"};
  static const char *bad[] = {"purple", "seven", "table", "engine"};
  std::vector<ChoiceExample> out;
  for (size_t i = 0; i < n; ++i) {
    MultipleChoiceInstance mc;
    mc.narrative = MakeNarrative("", "story " + std::to_string(i));
    mc.gold = UniformUnit(rng) < 0.5 ? 0 : 1;
    mc.candidates[mc.gold] =
        std::string("she felt ") + good[i % 4] + " " + good[(i + 1) % 4];
    mc.candidates[1 - mc.gold] =
        std::string("she felt ") + bad[i % 4] + " " + bad[(i + 2) % 4];
    out.push_back(MakeSupervisedExample(mc));
  }
  return out;
}

TEST(TrainToyModelTest, LearnsSeparableSet) {
  Rng rng(12);
  const auto train = SeparableSet(80, rng);
  const auto validation = SeparableSet(20, rng);
  ToyEncoder encoder(16, 256, 1);
  Rng head_rng(2);
  auto head = ScoreHead::Random(16, head_rng);
  TrainConfig config;
  config.epochs = 15;
  config.learning_rate = 0.1;
  config.seed = 3;
  const auto report = TrainToyModel(encoder, head, train, validation, config);
  EXPECT_EQ(report.train_loss.size(), 15u);
  EXPECT_LT(report.train_loss.back(), report.train_loss.front());
  EXPECT_GT(ChoiceAccuracy(encoder, head, validation), 0.9);
  EXPECT_DOUBLE_EQ(report.best_validation_accuracy,
                   ChoiceAccuracy(encoder, head, validation));
}

// Continuation-only model on a label-balanced set: held-out accuracy must
// pass a two-sided binomial test against 0.5 at the 5% level.
TEST(TrainToyModelTest, ContinuationOnlyNeutralSetIsAtChance) {
  static const char *words[] = {"door", "river", "coat", "lamp", "bread", "train",
                                "chair", "letter", "field", "window"};
  Rng rng(31);
  auto make = [&](size_t n) {
    std::vector<ChoiceExample> out;
    for (size_t i = 0; i < n; ++i) {
      MultipleChoiceInstance mc;
      mc.gold = rng() % 2;
      for (auto &c : mc.candidates) {
        c = "she";
        for (int w = 0; w < 4; ++w) c += std::string(" ") + words[rng() % 10];
      }
      out.push_back(MakeContinuationOnlyExample(mc));
    }
    return out;
  };
  const auto train = make(400), test = make(2000);
  ToyEncoder encoder(16, 256, 2);
  ScoreHead head(16);
  TrainConfig config;
  config.learning_rate = 0.05;
  config.seed = 8;
  TrainToyModel(encoder, head, train, {}, config);
  const double acc = ChoiceAccuracy(encoder, head, test);
  EXPECT_LT(std::abs(acc - 0.5), 1.96 * std::sqrt(0.25 / 2000.0)) << acc;
}

TEST(TrainToyModelTest, SameSeedSameParameters) {
  Rng rng(12);
  const auto train = SeparableSet(30, rng);
  auto run = [&] {
    ToyEncoder encoder(8, 64, 1);
    ScoreHead head(8);
    TrainConfig config;
    config.epochs = 3;
    config.learning_rate = 0.05;
    config.seed = 9;
    TrainToyModel(encoder, head, train, {}, config);
    return std::make_pair(encoder.embeddings(), head.weights());
  };
  EXPECT_EQ(run(), run());
}

}  // namespace
}  // namespace figstory::scoring
