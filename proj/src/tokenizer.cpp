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

#include "kpeval/tokenizer.hpp"

#include <cstdint>

namespace kpeval {
namespace {

enum class CharClass { kSpace, kPunct, kWord };

bool is_space_cp(uint32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_punct_cp(uint32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  // Common non-ASCII punctuation: inverted marks, guillemets, middle dot,
  // general punctuation block (dashes, quotes, ellipsis), minus sign,
  // CJK comma and full stop.
  switch (cp) {
    case 0xA1: case 0xA6: case 0xA7: case 0xAB: case 0xB6: case 0xB7:
    case 0xBB: case 0xBF: case 0x2212: case 0x3001: case 0x3002:
      return true;
    default:
      return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E);
  }
}

CharClass classify(uint32_t cp) {
  if (is_space_cp(cp)) return CharClass::kSpace;
  if (is_punct_cp(cp)) return CharClass::kPunct;
  return CharClass::kWord;
}

struct Codepoint {
  uint32_t value;
  std::size_t offset;
  std::size_t length;
  CharClass cls;
};

// Decodes UTF-8 permissively: malformed bytes are taken one at a time and
// classified as word characters, so garbage never crashes tokenization.
std::vector<Codepoint> decode(std::string_view text) {
  std::vector<Codepoint> out;
  out.reserve(text.size());
  std::size_t i = 0;
  auto is_continuation = [&text](std::size_t idx) {
    return idx < text.size() &&
           (static_cast<uint8_t>(text[idx]) & 0xC0u) == 0x80u;
  };
  while (i < text.size()) {
    uint8_t b0 = static_cast<uint8_t>(text[i]);
    uint32_t cp = b0;
    std::size_t len = 1;
    if (b0 >= 0xF0 && b0 < 0xF8 && is_continuation(i + 1) &&
        is_continuation(i + 2) && is_continuation(i + 3)) {
      cp = (b0 & 0x07u) << 18 | (static_cast<uint8_t>(text[i + 1]) & 0x3Fu) << 12 |
           (static_cast<uint8_t>(text[i + 2]) & 0x3Fu) << 6 |
           (static_cast<uint8_t>(text[i + 3]) & 0x3Fu);
      len = 4;
    } else if (b0 >= 0xE0 && b0 < 0xF0 && is_continuation(i + 1) &&
               is_continuation(i + 2)) {
      cp = (b0 & 0x0Fu) << 12 | (static_cast<uint8_t>(text[i + 1]) & 0x3Fu) << 6 |
           (static_cast<uint8_t>(text[i + 2]) & 0x3Fu);
      len = 3;
    } else if (b0 >= 0xC0 && b0 < 0xE0 && is_continuation(i + 1)) {
      cp = (b0 & 0x1Fu) << 6 | (static_cast<uint8_t>(text[i + 1]) & 0x3Fu);
      len = 2;
    }
    out.push_back({cp, i, len, classify(cp)});
    i += len;
  }
  return out;
}

bool has_interior_period(const std::string& token) {
  for (std::size_t i = 1; i + 1 < token.size(); ++i) {
    if (token[i] == '.') return true;
  }
  return false;
}

// Emits the tokens of one whitespace-delimited chunk. Abbreviation fixup:
// a word that already carries an interior period absorbs the period token
// that immediately follows it, which keeps "e.g." in one piece while a
// sentence-final "NLP." still splits.
void flush_chunk(std::vector<std::string>& chunk, std::vector<std::string>& out) {
  for (std::size_t i = 0; i < chunk.size(); ++i) {
    if (i + 1 < chunk.size() && chunk[i + 1] == "." &&
        has_interior_period(chunk[i]) && !is_punctuation_token(chunk[i])) {
      out.push_back(chunk[i] + ".");
      ++i;
    } else {
      out.push_back(std::move(chunk[i]));
    }
  }
  chunk.clear();
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<Codepoint> cps = decode(text);
  std::vector<std::string> out;
  std::vector<std::string> chunk;
  std::string current;

  auto flush_current = [&] {
    if (!current.empty()) {
      chunk.push_back(std::move(current));
      current.clear();
    }
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    const Codepoint& cp = cps[i];
    switch (cp.cls) {
      case CharClass::kSpace:
        flush_current();
        flush_chunk(chunk, out);
        break;
      case CharClass::kWord:
        current.append(text.substr(cp.offset, cp.length));
        break;
      case CharClass::kPunct: {
        bool interior = (cp.value == '-' || cp.value == '.') && !current.empty() &&
                        i > 0 && cps[i - 1].cls == CharClass::kWord &&
                        i + 1 < cps.size() && cps[i + 1].cls == CharClass::kWord;
        if (interior) {
          current.append(text.substr(cp.offset, cp.length));
        } else {
          flush_current();
          chunk.emplace_back(text.substr(cp.offset, cp.length));
        }
        break;
      }
    }
  }
  flush_current();
  flush_chunk(chunk, out);
  return out;
}

bool is_punctuation_token(std::string_view token) {
  if (token.empty()) return false;
  for (const Codepoint& cp : decode(token)) {
    if (cp.cls != CharClass::kPunct) return false;
  }
  return true;
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> sentence_ranges(
    const std::vector<std::string>& tokens) {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    bool terminator = t == "." || t == "!" || t == "?" || t == "…";
    if (terminator) {
      ranges.emplace_back(begin, i + 1);
      begin = i + 1;
    }
  }
  if (begin < tokens.size()) ranges.emplace_back(begin, tokens.size());
  return ranges;
}

}  // namespace kpeval
