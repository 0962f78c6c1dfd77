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

#ifndef KPEVAL_KEYPHRASE_HPP_
#define KPEVAL_KEYPHRASE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace kpeval {

// Ordered surface phrases; never empty or punctuation-only after parse.
using KeyphraseList = std::vector<std::string>;

// Splits a keyphrase string on ',' and ';'. Each segment is tokenized,
// punctuation-only tokens are dropped, and segments left empty disappear,
// so "health care,,,,immune system; human -" yields three clean phrases.
KeyphraseList parse_keyphrases(std::string_view s);

// Inverse of parse for separator-free phrases: joins with ", ".
std::string join_keyphrases(const KeyphraseList& phrases);

// Canonical comparison form of one phrase: tokens lowercased, Porter
// stemmed, joined with single spaces.
std::string canonical_phrase(std::string_view phrase);

// Canonicalizes every phrase and deduplicates, keeping first occurrences in
// order. Idempotent; phrases that canonicalize to nothing are dropped.
KeyphraseList normalize_keyphrases(const KeyphraseList& phrases);

}  // namespace kpeval

#endif  // KPEVAL_KEYPHRASE_HPP_
