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

#include "figstory/corpus/tagger.h"

#include <string_view>
#include <unordered_set>

#include "figstory/common/error.h"
#include "figstory/common/text.h"

namespace figstory::corpus {
namespace {

using WordSet = std::unordered_set<std::string_view>;

const WordSet &Pronouns() {
  static const WordSet words = {
      "i",        "me",       "you",       "he",         "him",
      "she",      "her",      "it",        "we",         "us",
      "they",     "them",     "myself",    "yourself",   "himself",
      "herself",  "itself",   "ourselves", "themselves", "yourselves",
      "mine",     "yours",    "hers",      "ours",       "theirs",
      "someone",  "somebody", "anyone",    "anybody",    "everyone",
      "everybody", "nobody",  "something", "anything",   "everything",
      "nothing",  "who",      "whom",      "one"};
  return words;
}

const WordSet &Determiners() {
  static const WordSet words = {
      "a",    "an",    "the",     "this",  "that",    "these", "those",
      "my",   "your",  "his",     "its",   "our",     "their", "some",
      "any",  "every", "each",    "no",    "another", "all",   "both",
      "either", "neither", "several", "whose"};
  return words;
}

const WordSet &Prepositions() {
  static const WordSet words = {
      "about",   "above",   "across",  "after",  "against",    "along",
      "among",   "around",  "at",      "before", "behind",     "below",
      "beneath", "beside",  "besides", "between", "beyond",    "by",
      "down",    "during",  "for",     "from",   "in",         "inside",
      "into",    "near",    "of",      "off",    "on",         "onto",
      "out",     "outside", "over",    "past",   "since",      "through",
      "throughout", "to",   "toward",  "towards", "under",     "underneath",
      "until",   "up",      "upon",    "with",   "within",     "without",
      "as",      "like",    "than",    "via",    "amid",       "despite"};
  return words;
}

// Conjunctions, auxiliaries, frequent verbs and other function words.
const WordSet &OtherWords() {
  static const WordSet words = {
      "and",    "or",      "but",    "nor",     "yet",     "if",
      "because", "when",   "while",  "which",   "where",   "whether",
      "then",   "not",     "than",   "though",  "although", "unless",
      "am",     "is",      "are",    "was",     "were",    "be",
      "been",   "being",   "have",   "has",     "had",     "having",
      "do",     "does",    "did",    "done",    "will",    "would",
      "shall",  "should",  "can",    "could",   "may",     "might",
      "must",   "feel",    "feels",  "felt",    "look",    "looks",
      "seem",   "seems",   "run",    "runs",    "ran",     "work",
      "works",  "go",      "goes",   "went",    "gone",    "come",
      "comes",  "came",    "get",    "gets",    "got",     "make",
      "makes",  "made",    "say",    "says",    "said",    "see",
      "sees",   "saw",     "seen",   "know",    "knows",   "knew",
      "think",  "thinks",  "thought", "take",   "takes",   "took",
      "sat",    "stood",   "fell",   "become",  "becomes", "became",
      "grew",   "kept",    "let",    "left",    "sound",   "sounds",
      "smell",  "smells",  "taste",  "tastes",  "act",     "acts",
      "move",   "moves",   "sing",   "sang",    "fight",   "fought",
      "fly",    "flew",    "swim",   "swam",    "eat",     "ate",
      "drink",  "drank",   "sleep",  "slept",   "shine",   "shone",
      "hold",   "held",    "stand",  "sit",     "lie",     "lay",
      "want",   "wants",   "need",   "needs",   "there",   "here",
      "just",   "much",    "more",   "most",    "less",    "least",
      "exactly", "almost", "nearly", "really",  "such",    "same",
      "so",     "too",     "also",   "ever",    "how",     "what",
      "why",    "once",    "twice",  "again"};
  return words;
}

const WordSet &Adjectives() {
  static const WordSet words = {
      "calm",    "cold",    "hot",     "warm",    "cool",    "hard",
      "soft",    "white",   "black",   "red",     "green",   "blue",
      "pale",    "dark",    "bright",  "light",   "heavy",   "quiet",
      "loud",    "fast",    "quick",   "slow",    "strong",  "weak",
      "smooth",  "rough",   "sharp",   "dull",    "big",     "small",
      "large",   "tiny",    "tall",    "short",   "thin",    "fat",
      "old",     "young",   "new",     "happy",   "sad",     "busy",
      "free",    "gentle",  "sweet",   "bitter",  "sour",    "dry",
      "wet",     "flat",    "stiff",   "still",   "tight",   "loose",
      "brave",   "proud",   "sly",     "wise",    "blind",   "deaf",
      "dead",    "mad",     "fit",     "clean",   "clear",   "fresh",
      "steady",  "solid",   "sick",    "rich",    "poor",    "pretty",
      "ugly",    "smart",   "dumb",    "silly",   "lonely",  "lovely",
      "friendly", "early",  "deep",    "wide",    "narrow",  "high",
      "low",     "long",    "round",   "straight", "thick",  "cheap",
      "fake",    "plain",   "simple",  "tough",   "firm",    "mean",
      "kind",    "nice",    "good",    "bad",     "great",   "cute",
      "pure",    "true",    "fine",    "grey",    "gray",    "golden",
      "silent",  "empty",   "full",    "hungry",  "angry",   "crazy",
      "lazy",    "busy",    "easy",    "heavy",   "ready",   "sleepy",
      "shiny",   "cozy",    "dizzy",   "giddy",   "greedy",  "nervous",
      "tired",   "scared",  "frightened", "excited", "bored", "spoiled",
      "stubborn", "sturdy", "sober",   "bold",    "fierce",  "wild",
      "tame",    "eager",   "keen",    "numb",    "raw",     "ripe",
      "brittle", "fragile", "hollow",  "naked",   "neat",    "odd",
      "rare",    "safe",    "snug",    "stale",   "thirsty", "weary",
      "white-hot", "ice-cold", "dead-still"};
  return words;
}

const WordSet &Adverbs() {
  static const WordSet words = {"very",   "quite",  "rather", "well",
                                "soon",   "often",  "always", "never",
                                "fast",   "hard",   "far",    "away",
                                "indeed", "somehow", "anyway"};
  return words;
}

// Words whose suffix would otherwise mislead the rules.
const WordSet &NounExceptions() {
  static const WordSet words = {
      "family",  "belly",    "bully",    "ally",   "reply",     "supply",
      "lily",    "jelly",    "rally",    "butterfly", "dragonfly", "firefly",
      "table",   "cable",    "fable",    "vegetable", "constable", "timetable",
      "bible",   "handful",  "mouthful", "spoonful",  "olive",     "motive",
      "detective", "relative", "beehive", "archive", "knife",  "thing",  "king",      "ring",
      "spring",  "string",   "wing",     "morning", "evening",  "ceiling",
      "building", "feeling", "wedding",  "pudding", "darling",  "sibling",
      "bed",     "shed",     "sled",     "seed",   "weed",      "reed",
      "steed",   "creed",    "breed",    "hundred", "sacred",   "wicked"};
  return words;
}

bool EndsWith(std::string_view word, std::string_view suffix) {
  return word.size() > suffix.size() + 1 &&
         word.substr(word.size() - suffix.size()) == suffix;
}

bool HasDigit(std::string_view word) {
  for (char c : word) {
    if (c >= '0' && c <= '9') return true;
  }
  return false;
}

}  // namespace

std::string_view PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun:
      return "NOUN";
    case PosTag::kAdj:
      return "ADJ";
    case PosTag::kAdv:
      return "ADV";
    case PosTag::kPron:
      return "PRON";
    case PosTag::kDet:
      return "DET";
    case PosTag::kOther:
      return "OTHER";
  }
  return "OTHER";
}

bool IsPreposition(std::string_view lowercase_word) {
  return Prepositions().contains(lowercase_word);
}

PosTag LexiconTagger::TagWord(std::string_view word) const {
  if (word.empty() || IsPunctuation(word) || HasDigit(word)) {
    return PosTag::kOther;
  }
  const std::string lower = ToLower(word);
  const std::string_view w = lower;
  if (Pronouns().contains(w)) return PosTag::kPron;
  if (Determiners().contains(w)) return PosTag::kDet;
  if (Prepositions().contains(w)) return PosTag::kOther;
  if (Adjectives().contains(w)) return PosTag::kAdj;
  if (Adverbs().contains(w)) return PosTag::kAdv;
  if (OtherWords().contains(w)) return PosTag::kOther;
  if (NounExceptions().contains(w)) return PosTag::kNoun;

  if (EndsWith(w, "ly")) return PosTag::kAdv;
  if (EndsWith(w, "ous") || EndsWith(w, "ful") || EndsWith(w, "less") ||
      EndsWith(w, "ive") || EndsWith(w, "ish") || EndsWith(w, "able") ||
      EndsWith(w, "ible")) {
    return EndsWith(w, "fish") ? PosTag::kNoun : PosTag::kAdj;
  }
  if (EndsWith(w, "ed") || EndsWith(w, "ing")) return PosTag::kOther;
  return PosTag::kNoun;
}

std::vector<PosTag> LexiconTagger::Tag(
    std::span<const std::string> tokens) const {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (const auto &token : tokens) tags.push_back(TagWord(token));
  return tags;
}

TaggedSentence TagSentence(std::string_view text, const Tagger &tagger) {
  TaggedSentence sentence;
  sentence.text = std::string(text);
  sentence.tokens = TokenizeWords(sentence.text);
  std::vector<std::string> surface;
  surface.reserve(sentence.tokens.size());
  for (const auto &token : sentence.tokens) {
    surface.push_back(token.text);
    sentence.lowered.push_back(ToLower(token.text));
  }
  sentence.tags = tagger.Tag(surface);
  if (sentence.tags.size() != sentence.tokens.size()) {
    throw InvalidArgument("tagger returned " +
                          std::to_string(sentence.tags.size()) +
                          " tags for " +
                          std::to_string(sentence.tokens.size()) + " tokens");
  }
  return sentence;
}

}  // namespace figstory::corpus
