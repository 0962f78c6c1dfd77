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

#include "kpeval/porter.hpp"

#include <cctype>

namespace kpeval {
namespace {

// One stemming pass over a single lowercase word. The buffer is b_[0..k_],
// j_ marks the end of the stem once a suffix has been matched.
class Stemmer {
 public:
  explicit Stemmer(std::string word) : b_(std::move(word)), k_(static_cast<int>(b_.size()) - 1), j_(0) {}

  std::string run() {
    step1ab();
    step1c();
    step2();
    step3();
    step4();
    step5();
    b_.resize(static_cast<std::size_t>(k_ + 1));
    return std::move(b_);
  }

 private:
  bool cons(int i) const {
    switch (b_[static_cast<std::size_t>(i)]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of consonant-vowel sequences in b_[0..j_].
  int measure() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_cons(int j) const {
    if (j < 1) return false;
    if (b_[static_cast<std::size_t>(j)] != b_[static_cast<std::size_t>(j - 1)]) return false;
    return cons(j);
  }

  // consonant - vowel - consonant, where the final consonant is not w, x or y.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = b_[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (b_.compare(static_cast<std::size_t>(k_ + 1 - len), s.size(), s) != 0) return false;
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    b_.replace(static_cast<std::size_t>(j_ + 1), b_.size(), s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void replace_if_stem(std::string_view s) {
    if (measure() > 0) set_to(s);
  }

  char at(int i) const { return b_[static_cast<std::size_t>(i)]; }

  // Plurals and -ed / -ing.
  void step1ab() {
    if (at(k_) == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (at(k_ - 1) != 's') {
        --k_;
      }
    }
    if (ends("eed")) {
      if (measure() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_cons(k_)) {
        --k_;
        const char ch = at(k_);
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (measure() == 1 && cvc(k_)) {
        set_to("e");
      }
    }
  }

  // Terminal y to i when there is another vowel in the stem.
  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[static_cast<std::size_t>(k_)] = 'i';
  }

  // Double suffixes mapped to single ones, when measure > 0.
  void step2() {
    if (k_ < 1) return;
    switch (at(k_ - 1)) {
      case 'a':
        if (ends("ational")) { replace_if_stem("ate"); break; }
        if (ends("tional")) { replace_if_stem("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { replace_if_stem("ence"); break; }
        if (ends("anci")) { replace_if_stem("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { replace_if_stem("ize"); break; }
        break;
      case 'l':
        if (ends("bli")) { replace_if_stem("ble"); break; }
        if (ends("alli")) { replace_if_stem("al"); break; }
        if (ends("entli")) { replace_if_stem("ent"); break; }
        if (ends("eli")) { replace_if_stem("e"); break; }
        if (ends("ousli")) { replace_if_stem("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { replace_if_stem("ize"); break; }
        if (ends("ation")) { replace_if_stem("ate"); break; }
        if (ends("ator")) { replace_if_stem("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { replace_if_stem("al"); break; }
        if (ends("iveness")) { replace_if_stem("ive"); break; }
        if (ends("fulness")) { replace_if_stem("ful"); break; }
        if (ends("ousness")) { replace_if_stem("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { replace_if_stem("al"); break; }
        if (ends("iviti")) { replace_if_stem("ive"); break; }
        if (ends("biliti")) { replace_if_stem("ble"); break; }
        break;
      case 'g':
        if (ends("logi")) { replace_if_stem("log"); break; }
        break;
      default:
        break;
    }
  }

  // -ic-, -full, -ness etc.
  void step3() {
    switch (at(k_)) {
      case 'e':
        if (ends("icate")) { replace_if_stem("ic"); break; }
        if (ends("ative")) { replace_if_stem(""); break; }
        if (ends("alize")) { replace_if_stem("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { replace_if_stem("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { replace_if_stem("ic"); break; }
        if (ends("ful")) { replace_if_stem(""); break; }
        break;
      case 's':
        if (ends("ness")) { replace_if_stem(""); break; }
        break;
      default:
        break;
    }
  }

  // Remaining suffixes stripped when measure > 1.
  void step4() {
    if (k_ < 1) return;
    switch (at(k_ - 1)) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j_ >= 0 && (at(j_) == 's' || at(j_) == 't')) break;
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (measure() > 1) k_ = j_;
  }

  // Final -e and -ll cleanup.
  void step5() {
    j_ = k_;
    if (at(k_) == 'e') {
      const int a = measure();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (at(k_) == 'l' && double_cons(k_) && measure() > 1) --k_;
  }

  std::string b_;
  int k_;
  int j_;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  std::string lower;
  lower.reserve(word.size());
  for (const char c : word) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (lower.size() <= 2) return lower;
  return Stemmer(std::move(lower)).run();
}

}  // namespace kpeval
