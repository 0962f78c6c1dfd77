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

#ifndef KPEVAL_WORDLISTS_HPP_
#define KPEVAL_WORDLISTS_HPP_

#include <string>
#include <unordered_set>

namespace kpeval {

// Version tag of the bundled English list; bump on any edit so runs are
// attributable to an exact list.
inline constexpr const char* kEnglishWordlistVersion = "en-179-v1";

// Bundled English stopword inventory (the standard 179-entry list).
// Doubles as the function-word list for language detection.
const std::unordered_set<std::string>& english_stopwords();
const std::unordered_set<std::string>& english_function_words();

// Loads a replacement list: plain text, one lowercase token per line.
// Blank lines and lines starting with '#' are skipped.
std::unordered_set<std::string> load_wordlist_file(const std::string& path);

}  // namespace kpeval

#endif  // KPEVAL_WORDLISTS_HPP_
