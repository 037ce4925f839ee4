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

#include "figstory/knowledge/inference_builder.h"

#include <algorithm>
#include <future>
#include <unordered_set>

#include "figstory/common/error.h"
#include "figstory/common/text.h"
#include "figstory/corpus/simile.h"
#include "figstory/knowledge/verbalizer.h"

namespace figstory::knowledge {
namespace {

// Top tails requested per (content word, relation) for idioms.
constexpr int kTopPerIdiomQuery = 2;

// English stopword list (the widely used NLTK inventory).
const std::unordered_set<std::string_view> &Stopwords() {
  static const std::unordered_set<std::string_view> words = {
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
      "you're", "you've", "you'll", "you'd", "your", "yours", "yourself",
      "yourselves", "he", "him", "his", "himself", "she", "she's", "her",
      "hers", "herself", "it", "it's", "its", "itself", "they", "them",
      "their", "theirs", "themselves", "what", "which", "who", "whom", "this",
      "that", "that'll", "these", "those", "am", "is", "are", "was", "were",
      "be", "been", "being", "have", "has", "had", "having", "do", "does",
      "did", "doing", "a", "an", "the", "and", "but", "if", "or", "because",
      "as", "until", "while", "of", "at", "by", "for", "with", "about",
      "against", "between", "into", "through", "during", "before", "after",
      "above", "below", "to", "from", "up", "down", "in", "out", "on", "off",
      "over", "under", "again", "further", "then", "once", "here", "there",
      "when", "where", "why", "how", "all", "any", "both", "each", "few",
      "more", "most", "other", "some", "such", "no", "nor", "not", "only",
      "own", "same", "so", "than", "too", "very", "s", "t", "can", "will",
      "just", "don", "don't", "should", "should've", "now", "d", "ll", "m",
      "o", "re", "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't",
      "didn", "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn",
      "hasn't", "haven", "haven't", "isn", "isn't", "ma", "mightn",
      "mightn't", "mustn", "mustn't", "needn", "needn't", "shan", "shan't",
      "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't", "won",
      "won't", "wouldn", "wouldn't"};
  return words;
}

const std::unordered_set<std::string_view> &LeadingDeterminers() {
  static const std::unordered_set<std::string_view> words = {
      "a",   "an",  "the", "this", "that",  "these", "those", "my",
      "your", "his", "her", "its", "our",  "their", "some",  "any"};
  return words;
}

struct Query {
  std::string subject;
  Relation relation;
  int k;
};

// Runs every query, padding short answers by repeating the last tail.
std::vector<std::vector<std::string>> RunQueries(
    const std::vector<Query> &queries, const KnowledgeModel &model,
    bool parallel, bool &padded) {
  std::vector<std::vector<std::string>> answers(queries.size());
  if (parallel) {
    std::vector<std::future<std::vector<std::string>>> pending;
    pending.reserve(queries.size());
    for (const Query &q : queries) {
      pending.push_back(std::async(std::launch::async, [&model, &q] {
        return model.Generate(q.subject, q.relation, q.k);
      }));
    }
    // Collect in schedule order; the first failure in that order wins.
    for (size_t i = 0; i < pending.size(); ++i) answers[i] = pending[i].get();
  } else {
    for (size_t i = 0; i < queries.size(); ++i) {
      answers[i] = model.Generate(queries[i].subject, queries[i].relation,
                                  queries[i].k);
    }
  }
  for (size_t i = 0; i < queries.size(); ++i) {
    auto &tails = answers[i];
    if (tails.empty()) {
      throw KnowledgeBackendError(queries[i].subject, queries[i].relation,
                                  "backend returned no tails");
    }
    if (static_cast<int>(tails.size()) < queries[i].k) {
      padded = true;
      const std::string last = tails.back();
      tails.resize(static_cast<size_t>(queries[i].k), last);
    }
  }
  return answers;
}

Inference MakeInference(const std::string &subject, Relation relation,
                        const std::string &tail, int rank) {
  return {subject, relation, tail, Verbalize(subject, relation, tail), rank};
}

}  // namespace

bool IsStopword(std::string_view lowercase_word) {
  return Stopwords().contains(lowercase_word);
}

std::vector<std::string> ContentWords(std::string_view idiom) {
  if (Trim(idiom).empty()) throw InvalidArgument("empty idiom");
  std::vector<std::string> words;
  for (const auto &token : TokenStrings(idiom)) {
    if (IsPunctuation(token)) continue;
    std::string lower = ToLower(token);
    if (IsStopword(lower)) continue;
    words.push_back(std::move(lower));
  }
  if (words.empty()) {
    throw InvalidArgument("idiom has no content words: '" +
                          std::string(idiom) + "'");
  }
  return words;
}

std::string VehiclePhrase(std::string_view implicit_simile_sentence) {
  const std::string text(implicit_simile_sentence);
  const auto tokens = TokenizeWords(text);
  size_t i = 0;
  while (i < tokens.size() && !EqualsIgnoreCase(tokens[i].text, "like")) ++i;
  if (i == tokens.size()) {
    throw InvalidArgument("no 'like' comparator in '" + text + "'");
  }
  size_t begin = i + 1;
  size_t end = begin;
  while (end < tokens.size() && !corpus::IsClauseBoundary(tokens[end].text)) {
    ++end;
  }
  while (begin < end && LeadingDeterminers().contains(ToLower(tokens[begin].text))) {
    ++begin;
  }
  if (begin == end) throw InvalidArgument("empty vehicle in '" + text + "'");
  const size_t from = tokens[begin].span.begin;
  return text.substr(from, tokens[end - 1].span.end - from);
}

InferenceBundle LiteralInferences(const std::string &instance_id,
                                  std::string_view expression,
                                  corpus::ExpressionKind kind,
                                  const KnowledgeModel &model,
                                  const BundleOptions &options) {
  if (options.size == 0) throw InvalidArgument("bundle size must be positive");
  InferenceBundle bundle;
  bundle.instance_id = instance_id;
  bundle.source = InferenceSource::kLiteral;

  if (kind == corpus::ExpressionKind::kSimile) {
    const std::string vehicle = VehiclePhrase(expression);
    const std::vector<Query> queries = {
        {vehicle, Relation::kHasProperty, static_cast<int>(options.size)}};
    const auto answers =
        RunQueries(queries, model, /*parallel=*/false, bundle.padded);
    for (size_t r = 0; r < options.size; ++r) {
      bundle.inferences.push_back(MakeInference(
          vehicle, Relation::kHasProperty, answers[0][r], static_cast<int>(r + 1)));
    }
    return bundle;
  }

  const std::vector<std::string> words = ContentWords(expression);
  const size_t word_count = words.size();
  std::vector<Query> queries;
  for (const auto &word : words) {
    for (Relation relation : kConceptRelations) {
      queries.push_back({word, relation, kTopPerIdiomQuery});
    }
  }
  const auto answers =
      RunQueries(queries, model, options.parallel, bundle.padded);

  const size_t relation_count = kConceptRelations.size();
  for (int rank = 1; rank <= kTopPerIdiomQuery; ++rank) {
    for (size_t round = 0; round < word_count; ++round) {
      for (size_t r = 0; r < relation_count; ++r) {
        if (bundle.inferences.size() == options.size) return bundle;
        const size_t w = (r + round) % word_count;
        const std::string &tail = answers[w * relation_count + r][rank - 1];
        bundle.inferences.push_back(
            MakeInference(words[w], kConceptRelations[r], tail, rank));
      }
    }
  }
  // Fewer candidates than K: repeat the last one.
  while (bundle.inferences.size() < options.size) {
    bundle.padded = true;
    bundle.inferences.push_back(bundle.inferences.back());
  }
  return bundle;
}

InferenceBundle ContextInferences(const std::string &instance_id,
                                  const corpus::Narrative &narrative,
                                  const KnowledgeModel &model,
                                  const BundleOptions &options) {
  if (options.size == 0) throw InvalidArgument("bundle size must be positive");
  if (narrative.context_sentences.empty()) {
    throw InvalidArgument("narrative has no context sentences");
  }
  InferenceBundle bundle;
  bundle.instance_id = instance_id;
  bundle.source = InferenceSource::kContext;

  const std::string subject = narrative.ContextText();
  const size_t relation_count = kEventRelations.size();
  const int per_relation =
      static_cast<int>((options.size + relation_count - 1) / relation_count);
  std::vector<Query> queries;
  for (Relation relation : kEventRelations) {
    queries.push_back({subject, relation, per_relation});
  }
  const auto answers =
      RunQueries(queries, model, options.parallel, bundle.padded);
  for (size_t r = 0; r < relation_count; ++r) {
    for (int rank = 1; rank <= per_relation; ++rank) {
      if (bundle.inferences.size() == options.size) return bundle;
      bundle.inferences.push_back(MakeInference(
          subject, kEventRelations[r], answers[r][rank - 1], rank));
    }
  }
  return bundle;
}

std::string_view InferenceSourceName(InferenceSource source) {
  return source == InferenceSource::kLiteral ? "literal" : "context";
}

InferenceSource ParseInferenceSource(std::string_view name) {
  if (name == "literal") return InferenceSource::kLiteral;
  if (name == "context") return InferenceSource::kContext;
  throw InvalidArgument("unknown inference source '" + std::string(name) + "'");
}

}  // namespace figstory::knowledge
