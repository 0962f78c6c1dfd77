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

#ifndef KPEVAL_TOKENIZER_HPP_
#define KPEVAL_TOKENIZER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kpeval {

// Rule-based tokenizer: splits on Unicode whitespace, detaches punctuation
// into single-character tokens, and keeps hyphens and periods that sit
// between alphanumerics inside the token, so "state-of-the-art" and "e.g."
// each stay whole. Case is preserved. Deterministic, and stable under
// concatenation: tokenize(a + " " + b) == tokenize(a) + tokenize(b).
std::vector<std::string> tokenize(std::string_view text);

// True if every codepoint of the token is punctuation.
bool is_punctuation_token(std::string_view token);

// ASCII-lowercases a copy; bytes outside A-Z pass through.
std::string ascii_lower(std::string_view text);

// Splits a token list into sentence ranges [begin, end). A sentence ends
// after ".", "!", "?" or an ellipsis token; the terminator belongs to the
// sentence it closes. Ranges cover the whole list and are never empty.
std::vector<std::pair<std::size_t, std::size_t>> sentence_ranges(
    const std::vector<std::string>& tokens);

}  // namespace kpeval

#endif  // KPEVAL_TOKENIZER_HPP_
