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

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "figstory/common/error.h"
#include "figstory/common/random.h"
#include "figstory/common/text.h"
#include "figstory/corpus/dataset_split.h"
#include "figstory/corpus/expression_matcher.h"
#include "figstory/corpus/lexicon.h"
#include "figstory/corpus/narrative.h"
#include "figstory/corpus/narrative_miner.h"
#include "figstory/corpus/sentence_splitter.h"
#include "figstory/corpus/simile.h"
#include "figstory/corpus/tagger.h"

namespace figstory::corpus {
namespace {

using Strings = std::vector<std::string>;

TEST(SentenceSplitterTest, DelimiterOnly) {
  EXPECT_EQ(SegmentSentences("A. B? C!"), (Strings{"A.", "B?", "C!"}));
}

TEST(SentenceSplitterTest, EmptyInput) {
  EXPECT_TRUE(SegmentSentences("").empty());
  EXPECT_TRUE(SegmentSentences("   \n\t ").empty());
}

TEST(SentenceSplitterTest, AbbreviationDoesNotSplit) {
  EXPECT_EQ(SegmentSentences("Dr. Smith left. He ran."),
            (Strings{"Dr. Smith left.", "He ran."}));
}

TEST(SentenceSplitterTest, HandSegmentedFixture) {
  std::ifstream in(FIGSTORY_TEST_DATA_DIR "/segmentation.txt");
  ASSERT_TRUE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string all = ss.str();
  const auto sep = all.find("===\n");
  ASSERT_NE(sep, std::string::npos);
  Strings expected;
  std::istringstream lines(all.substr(sep + 4));
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty()) expected.push_back(line);
  }
  EXPECT_EQ(SegmentSentences(all.substr(0, sep)), expected);
}

TEST(SentenceSplitterTest, ConcatenationPreservesText) {
  const std::string text =
      "First one.  Second   one!\nThird one?\n\nFourth without end";
  std::string joined;
  for (const auto &s : SegmentSentences(text)) joined += s + " ";
  EXPECT_EQ(NormalizeSpace(joined), NormalizeSpace(text));
}

TEST(TaggerTest, ClosedClassAndSuffixRules) {
  LexiconTagger tagger;
  EXPECT_EQ(tagger.TagWord("the"), PosTag::kDet);
  EXPECT_EQ(tagger.TagWord("him"), PosTag::kPron);
  EXPECT_EQ(tagger.TagWord("calm"), PosTag::kAdj);
  EXPECT_EQ(tagger.TagWord("quickly"), PosTag::kAdv);
  EXPECT_EQ(tagger.TagWord("dangerous"), PosTag::kAdj);
  EXPECT_EQ(tagger.TagWord("lake"), PosTag::kNoun);
  EXPECT_EQ(tagger.TagWord("forest"), PosTag::kNoun);
  EXPECT_EQ(tagger.TagWord("goldfish"), PosTag::kNoun);
  EXPECT_EQ(tagger.TagWord("running"), PosTag::kOther);
}

TEST(TaggerTest, OneTagPerToken) {
  const auto s = TagSentence("He feels, oddly, as calm as a lake.", LexiconTagger());
  EXPECT_EQ(s.tokens.size(), s.tags.size());
  EXPECT_EQ(s.lowered.size(), s.tokens.size());
}

IdiomLexicon SmallLexicon() {
  std::istringstream tsv(
      "# comment\n"
      "chicken feed\ta very small amount of money\n"
      "run the gauntlet\tto endure criticism\n"
      "the gauntlet\tan armored glove\n"
      "\n"
      "spill the beans\tto reveal a secret\n");
  return IdiomLexicon::FromTsv(tsv);
}

TEST(LexiconTest, ParsesTsv) {
  const auto lex = SmallLexicon();
  ASSERT_EQ(lex.size(), 4u);
  EXPECT_EQ(lex.entry(0).expression, (Strings{"chicken", "feed"}));
  EXPECT_EQ(lex.entry(0).definition, "a very small amount of money");
}

TEST(LexiconTest, RejectsBadEntries) {
  IdiomLexicon lex;
  EXPECT_THROW(lex.Add("single", "x"), InvalidArgument);
  lex.Add("Break the Ice", "x");
  EXPECT_THROW(lex.Add("break the ice", "y"), InvalidArgument);
  std::istringstream bad("no tab here\n");
  EXPECT_THROW(IdiomLexicon::FromTsv(bad), FormatError);
}

TEST(ExpressionMatcherTest, ChickenFeed) {
  const auto lex = SmallLexicon();
  const auto s = TagSentence("The money they offered was chicken feed.",
                             LexiconTagger());
  const auto matches = MatchExpressions(s, lex);
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0].entry_index, 0u);
  EXPECT_EQ(s.tokens[matches[0].span.begin].text, "chicken");
  EXPECT_EQ(matches[0].span.size(), 2u);
}

TEST(ExpressionMatcherTest, NoMatchAndEmptyLexicon) {
  const auto lex = SmallLexicon();
  const auto s = TagSentence("Nothing figurative here.", LexiconTagger());
  EXPECT_TRUE(MatchExpressions(s, lex).empty());
  IdiomLexicon empty;
  EXPECT_THROW(ExpressionMatcher m(empty), InvalidArgument);
}

TEST(ExpressionMatcherTest, TwoIdiomsInOrderAndOverlaps) {
  const auto lex = SmallLexicon();
  const auto s = TagSentence(
      "She would Spill the beans before she had to run the gauntlet.",
      LexiconTagger());
  const auto matches = MatchExpressions(s, lex);
  ASSERT_EQ(matches.size(), 3u);
  EXPECT_EQ(matches[0].entry_index, 3u);  // spill the beans
  EXPECT_EQ(matches[1].entry_index, 1u);  // run the gauntlet
  EXPECT_EQ(matches[2].entry_index, 2u);  // the gauntlet, overlapping
  EXPECT_LT(matches[0].span.begin, matches[1].span.begin);
}

// Brute-force scan over every (offset, entry) pair.
std::vector<ExpressionMatch> BruteForceMatches(const TaggedSentence &s,
                                               const IdiomLexicon &lex) {
  std::vector<ExpressionMatch> out;
  for (size_t start = 0; start < s.size(); ++start) {
    for (size_t e = 0; e < lex.size(); ++e) {
      const auto &expr = lex.entry(e).expression;
      if (start + expr.size() > s.size()) continue;
      bool ok = true;
      for (size_t k = 0; k < expr.size() && ok; ++k) {
        ok = ToLower(s.tokens[start + k].text) == expr[k];
      }
      if (ok) out.push_back({e, {start, start + expr.size()}});
    }
  }
  return out;
}

TEST(ExpressionMatcherTest, AgreesWithBruteForceOnRandomFixtures) {
  const Strings words = {"a", "b", "c", "d", "the", "of"};
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 200; ++round) {
    IdiomLexicon lex;
    std::set<std::string> seen;
    while (lex.size() < 6) {
      const size_t len = 2 + rng() % 3;
      Strings phrase;
      for (size_t i = 0; i < len; ++i) phrase.push_back(words[rng() % words.size()]);
      const std::string joined = Join(phrase, " ");
      if (seen.insert(joined).second) lex.Add(joined, "def");
    }
    Strings sentence;
    const size_t n = 1 + rng() % 15;
    for (size_t i = 0; i < n; ++i) {
      std::string w = words[rng() % words.size()];
      if (rng() % 4 == 0) w[0] = static_cast<char>(std::toupper(w[0]));
      sentence.push_back(w);
    }
    const auto tagged = TagSentence(Join(sentence, " "), LexiconTagger());
    ASSERT_EQ(MatchExpressions(tagged, lex), BruteForceMatches(tagged, lex))
        << Join(sentence, " ");
  }
}

std::string SpanText(const TaggedSentence &s, TokenSpan span) {
  Strings parts;
  for (size_t i = span.begin; i < span.end; ++i) parts.push_back(s.tokens[i].text);
  return Join(parts, " ");
}

TEST(SimileTest, AsAsWorkedExample) {
  const auto s = TagSentence(
      "He feels as calm as a high mountain lake without a wind stirring it.",
      LexiconTagger());
  const auto simile = DetectExplicitSimile(s);
  ASSERT_TRUE(simile.has_value());
  EXPECT_EQ(SpanText(s, simile->property), "calm");
  EXPECT_EQ(simile->comparator, Comparator::kAsAs);
  EXPECT_EQ(SpanText(s, simile->vehicle),
            "a high mountain lake without a wind stirring it");
  EXPECT_EQ(SpanText(s, simile->topic), "He");
  const auto implicit = ToImplicit(*simile, s);
  EXPECT_EQ(implicit.sentence,
            "He feels like a high mountain lake without a wind stirring it.");
  EXPECT_EQ(implicit.property, "calm");
  EXPECT_EQ(implicit.sentence.substr(implicit.expression.begin,
                                     implicit.expression.size()),
            "like a high mountain lake without a wind stirring it");
}

TEST(SimileTest, CommaLikeWorkedExample) {
  const auto s = TagSentence(
      "He feels calm, like a high mountain lake without a wind stirring it.",
      LexiconTagger());
  const auto simile = DetectExplicitSimile(s);
  ASSERT_TRUE(simile.has_value());
  EXPECT_EQ(simile->comparator, Comparator::kLike);
  EXPECT_EQ(ToImplicit(*simile, s).sentence,
            "He feels like a high mountain lake without a wind stirring it.");
}

TEST(SimileTest, RejectsPronounVehicleAndPlainSentences) {
  LexiconTagger tagger;
  EXPECT_FALSE(DetectExplicitSimile(TagSentence("I worked as hard as him.", tagger)));
  EXPECT_FALSE(DetectExplicitSimile(TagSentence("He ran home.", tagger)));
  EXPECT_FALSE(DetectExplicitSimile(TagSentence("He ran like the wind.", tagger)));
  EXPECT_FALSE(DetectExplicitSimile(TagSentence("I would like a coffee.", tagger)));
}

TEST(SimileTest, AlreadyImplicitIsAnError) {
  const auto s = TagSentence("He feels like a high mountain lake.", LexiconTagger());
  EXPECT_FALSE(DetectExplicitSimile(s));
  ExplicitSimile fake;
  fake.property = {2, 3};
  fake.comparator = Comparator::kLike;
  fake.comparator_index = 2;
  fake.vehicle = {3, 7};
  EXPECT_THROW(ToImplicit(fake, s), InvalidArgument);
}

TEST(SimileTest, DanglingComparatorIsRejected) {
  const auto s = TagSentence("Calm, like a mountain lake.", LexiconTagger());
  const auto simile = DetectExplicitSimile(s);
  ASSERT_TRUE(simile.has_value());
  EXPECT_THROW(ToImplicit(*simile, s), InvalidArgument);
}

TEST(SimileTest, RoundTripInvariants) {
  const Strings sentences = {
      "The old house was quiet like a sleeping cathedral.",
      "His voice was rough, like a rusty gate on a windy night.",
      "The child was as brave as a young lion, and nobody doubted it.",
      "Her hands were cold like a winter morning.",
      "The crowd was loud like a train crossing an iron bridge.",
  };
  LexiconTagger tagger;
  for (const auto &text : sentences) {
    const auto s = TagSentence(text, tagger);
    const auto simile = DetectExplicitSimile(s);
    ASSERT_TRUE(simile.has_value()) << text;
    const auto implicit = ToImplicit(*simile, s);
    const auto out_tokens = TokenStrings(implicit.sentence);
    EXPECT_NE(std::find(out_tokens.begin(), out_tokens.end(), "like"),
              out_tokens.end());
    const std::string property = SpanText(s, simile->property);
    EXPECT_EQ(std::find(out_tokens.begin(), out_tokens.end(), property),
              out_tokens.end())
        << text;
    EXPECT_NE(implicit.sentence.find(SpanText(s, simile->vehicle)),
              std::string::npos)
        << text;
  }
}

TEST(NarrativeTest, WindowBoundaries) {
  const Strings doc = {"s0.", "s1.", "s2.", "s3.", "s4.", "s5."};
  const auto n = BuildNarrative(doc, 4, 4);
  ASSERT_TRUE(n.has_value());
  EXPECT_EQ(n->context_sentences, (Strings{"s0.", "s1.", "s2.", "s3."}));
  EXPECT_EQ(n->final_sentence, "s4.");
  EXPECT_FALSE(BuildNarrative(doc, 2, 4).has_value());
  EXPECT_THROW(BuildNarrative(doc, 6, 4), InvalidArgument);
  EXPECT_EQ(n->Text(), "s0. s1. s2. s3. s4.");
  EXPECT_EQ(n->ContextText(), "s0. s1. s2. s3.");
}

TEST(DatasetSplitTest, DefaultRatiosMatchPublishedSizes) {
  const auto r = SplitRatios::Default();
  EXPECT_NEAR(r.train, 0.628, 5e-4);
  EXPECT_NEAR(r.validation, 0.070, 5e-4);
  EXPECT_NEAR(r.test, 0.302, 5e-4);
  EXPECT_DOUBLE_EQ(r.train + r.validation + r.test, 1.0);
}

TEST(DatasetSplitTest, SingleExpressionGoesToTrain) {
  const Strings exprs(5, "chicken feed");
  SplitOptions lenient;
  lenient.require_all_splits = false;
  const auto a = AssignSplits(exprs, {0.6, 0.1, 0.3}, 1, lenient);
  for (auto s : a) EXPECT_EQ(s, Split::kTrain);
  EXPECT_THROW(AssignSplits(exprs, {0.6, 0.1, 0.3}, 1), InvalidArgument);
}

TEST(DatasetSplitTest, RejectsBadRatios) {
  const Strings exprs = {"a b", "c d", "e f"};
  EXPECT_THROW(AssignSplits(exprs, {0.5, 0.1, 0.3}, 1), InvalidArgument);
  EXPECT_THROW(AssignSplits(exprs, {1.2, -0.1, -0.1}, 1), InvalidArgument);
}

TEST(DatasetSplitTest, HundredExpressionsTimesTen) {
  Strings exprs;
  for (int e = 0; e < 100; ++e) {
    for (int i = 0; i < 10; ++i) exprs.push_back("expr " + std::to_string(e));
  }
  const SplitRatios ratios{0.6, 0.1, 0.3};
  const auto a = AssignSplits(exprs, ratios, 3);
  std::array<size_t, 3> sizes{};
  std::array<std::set<std::string>, 3> sets;
  for (size_t i = 0; i < a.size(); ++i) {
    sizes[static_cast<size_t>(a[i])]++;
    sets[static_cast<size_t>(a[i])].insert(exprs[i]);
  }
  const auto targets = ratios.as_array();
  for (size_t s = 0; s < 3; ++s) {
    EXPECT_LE(std::abs(static_cast<double>(sizes[s]) - targets[s] * 1000), 10.0);
    for (size_t t = s + 1; t < 3; ++t) {
      for (const auto &e : sets[s]) EXPECT_EQ(sets[t].count(e), 0u);
    }
  }
}

TEST(DatasetSplitTest, DeterministicAndCaseInsensitiveGrouping) {
  Strings exprs = {"Break the ice", "break the ice", "hit the sack",
                   "piece of cake", "on thin ice", "piece of cake"};
  const auto a = AssignSplits(exprs, SplitRatios::Default(), 9);
  EXPECT_EQ(a, AssignSplits(exprs, SplitRatios::Default(), 9));
  EXPECT_EQ(a[0], a[1]);
  EXPECT_EQ(a[3], a[5]);
}

TEST(NarrativeMinerTest, MinesIdiomsWithContext) {
  const auto lex = SmallLexicon();
  LexiconTagger tagger;
  NarrativeMiner miner(&lex, tagger, {});
  const std::string text =
      "One. Two. Three. Four. The crew said the offer was chicken feed. "
      "Six. Seven.";
  const auto instances = miner.MineDocument("doc", text);
  ASSERT_EQ(instances.size(), 1u);
  const auto &n = instances[0].narrative;
  EXPECT_EQ(n.context_sentences.size(), 4u);
  EXPECT_EQ(n.expression, "chicken feed");
  EXPECT_EQ(n.gloss, "a very small amount of money");
  EXPECT_EQ(n.final_sentence.substr(n.expression_span.begin,
                                    n.expression_span.size()),
            "chicken feed");
  EXPECT_TRUE(instances[0].continuations.empty());
  // Too little context: dropped rather than padded.
  EXPECT_TRUE(miner.MineDocument("doc", "One. It was chicken feed.").empty());
}

TEST(NarrativeMinerTest, MinesSimilesAsImplicit) {
  LexiconTagger tagger;
  MinerOptions options;
  options.kind = ExpressionKind::kSimile;
  NarrativeMiner miner(nullptr, tagger, options);
  const auto instances = miner.MineDocument(
      "doc",
      "One. Two. Three. Four. He feels as calm as a high mountain lake "
      "without a wind stirring it.");
  ASSERT_EQ(instances.size(), 1u);
  const auto &n = instances[0].narrative;
  EXPECT_EQ(n.final_sentence,
            "He feels like a high mountain lake without a wind stirring it.");
  EXPECT_EQ(n.gloss, "calm");
  EXPECT_EQ(n.expression, "like a high mountain lake without a wind stirring it");
}

}  // namespace
}  // namespace figstory::corpus
