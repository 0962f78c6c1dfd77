// Copyright 2026 The kpeval Authors
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

#include "kpeval/keyphrase.hpp"

#include <random>
#include <string>

#include "doctest.h"

using kpeval::canonical_phrase;
using kpeval::join_keyphrases;
using kpeval::KeyphraseList;
using kpeval::normalize_keyphrases;
using kpeval::parse_keyphrases;

TEST_CASE("parsing survives separator noise and junk segments") {
  CHECK(parse_keyphrases(
            "health care,,,,immune system; human -; metabolism, immunity,,,,") ==
        KeyphraseList{"health care", "immune system", "human", "metabolism",
                      "immunity"});
  CHECK(parse_keyphrases("") == KeyphraseList{});
  CHECK(parse_keyphrases(",,;;,") == KeyphraseList{});
  CHECK(parse_keyphrases(" - ; ?? , ") == KeyphraseList{});
  CHECK(parse_keyphrases("one") == KeyphraseList{"one"});
  CHECK(parse_keyphrases("a; b,c") == KeyphraseList{"a", "b", "c"});
  CHECK(parse_keyphrases("  padded   phrase  ,x") ==
        KeyphraseList{"padded phrase", "x"});
}

TEST_CASE("joining uses comma-space and round-trips") {
  KeyphraseList phrases = {"health care", "immune system", "human"};
  CHECK(join_keyphrases(phrases) == "health care, immune system, human");
  CHECK(join_keyphrases({}) == "");
  CHECK(parse_keyphrases(join_keyphrases(phrases)) == phrases);
}

TEST_CASE("canonical form lowercases and stems per token") {
  CHECK(canonical_phrase("Deep Learning") == "deep learn");
  CHECK(canonical_phrase("Image Segmentation") == "imag segment");
  CHECK(canonical_phrase("neural networks") == "neural network");
  CHECK(canonical_phrase("NETWORKS") == "network");
  CHECK(canonical_phrase("  spaced   out ") == "space out");
  CHECK(canonical_phrase("??") == "");
  CHECK(canonical_phrase("") == "");
}

TEST_CASE("normalization dedups by canonical form, keeping first") {
  CHECK(normalize_keyphrases({"Neural Networks", "neural network", "graphs"}) ==
        KeyphraseList{"neural network", "graph"});
  CHECK(normalize_keyphrases({"-", ",", ""}) == KeyphraseList{});
  CHECK(normalize_keyphrases({}) == KeyphraseList{});

  KeyphraseList once = normalize_keyphrases({"Running Fast", "runs fast", "other"});
  CHECK(once == KeyphraseList{"run fast", "other"});
  CHECK(normalize_keyphrases(once) == once);
}

TEST_CASE("parse of join of parse is stable under random noise") {
  std::mt19937 rng(99);
  const std::vector<std::string> words = {"deep",  "graph", "model", "data",
                                          "fast",  "nets",  "x1",    "co-oc"};
  const std::vector<std::string> noise = {",", ";", ",,", " - ", "  ", " ?? "};
  for (int iter = 0; iter < 300; ++iter) {
    std::string raw;
    for (unsigned p = 0; p < rng() % 12; ++p) {
      if (rng() % 3 == 0) {
        raw += noise[rng() % noise.size()];
      } else {
        raw += words[rng() % words.size()];
        raw += rng() % 2 == 0 ? " " : "";
      }
    }
    KeyphraseList parsed = parse_keyphrases(raw);
    CHECK(parse_keyphrases(join_keyphrases(parsed)) == parsed);
    for (const std::string& phrase : parsed) {
      CHECK_FALSE(phrase.empty());
      CHECK(phrase.find(',') == std::string::npos);
      CHECK(phrase.find(';') == std::string::npos);
      CHECK(phrase.front() != ' ');
      CHECK(phrase.back() != ' ');
    }
    KeyphraseList normalized = normalize_keyphrases(parsed);
    CHECK(normalize_keyphrases(normalized) == normalized);
    CHECK(normalized.size() <= parsed.size());
  }
}
