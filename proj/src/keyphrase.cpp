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

#include <unordered_set>

#include "kpeval/porter.hpp"
#include "kpeval/tokenizer.hpp"

namespace kpeval {

KeyphraseList parse_keyphrases(std::string_view s) {
  KeyphraseList out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] != ',' && s[i] != ';') continue;
    std::string_view segment = s.substr(start, i - start);
    start = i + 1;
    std::string phrase;
    for (const std::string& token : tokenize(segment)) {
      if (is_punctuation_token(token)) continue;
      if (!phrase.empty()) phrase += ' ';
      phrase += token;
    }
    if (!phrase.empty()) out.push_back(std::move(phrase));
  }
  return out;
}

std::string join_keyphrases(const KeyphraseList& phrases) {
  std::string out;
  for (const std::string& phrase : phrases) {
    if (!out.empty()) out += ", ";
    out += phrase;
  }
  return out;
}

std::string canonical_phrase(std::string_view phrase) {
  std::string out;
  for (const std::string& token : tokenize(phrase)) {
    if (is_punctuation_token(token)) continue;
    std::string stem = porter_stem(token);
    if (stem.empty()) continue;
    if (!out.empty()) out += ' ';
    out += stem;
  }
  return out;
}

KeyphraseList normalize_keyphrases(const KeyphraseList& phrases) {
  KeyphraseList out;
  std::unordered_set<std::string> seen;
  for (const std::string& phrase : phrases) {
    std::string canonical = canonical_phrase(phrase);
    if (canonical.empty()) continue;
    if (seen.insert(canonical).second) out.push_back(std::move(canonical));
  }
  return out;
}

}  // namespace kpeval
