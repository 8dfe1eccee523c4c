/* Copyright 2026 The primwords Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "primwords/word.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace primwords {

namespace {

void require_same_alphabet(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet()) {
    throw std::invalid_argument("alphabet mismatch: {" +
                                std::string(u.alphabet().letters()) + "} vs {" +
                                std::string(v.alphabet().letters()) + "}");
  }
}

void require_nonempty(const Word& w, const char* what) {
  if (w.empty()) throw std::invalid_argument(std::string(what) + ": empty word");
}

}  // namespace

Alphabet::Alphabet(std::string_view letters) {
  if (letters.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (letters.size() > kMaxLetters) {
    throw std::invalid_argument("alphabet has more than 26 letters");
  }
  for (char c : letters) {
    if (!std::isalnum(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string("invalid letter '") + c + "'");
    }
    if (letters_.begin() + size_ != std::find(letters_.begin(), letters_.begin() + size_, c)) {
      throw std::invalid_argument(std::string("duplicate letter '") + c + "'");
    }
    letters_[size_++] = c;
  }
}

Alphabet Alphabet::infer(std::string_view text) {
  std::string letters(text);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return Alphabet(letters);
}

Alphabet Alphabet::first_letters(std::size_t size) {
  static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";
  if (size == 0 || size > kMaxLetters) throw std::invalid_argument("alphabet size out of range");
  return Alphabet(kLetters.substr(0, size));
}

std::optional<Symbol> Alphabet::index_of(char c) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (letters_[i] == c) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

Word::Word(Alphabet alphabet, std::vector<Symbol> symbols)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  for (Symbol s : symbols_) {
    if (s >= alphabet_.size()) throw std::invalid_argument("symbol index outside alphabet");
  }
}

Word Word::parse(const Alphabet& alphabet, std::string_view text) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    auto index = alphabet.index_of(c);
    if (!index) {
      throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet {" +
                                  std::string(alphabet.letters()) + "}");
    }
    symbols.push_back(*index);
  }
  Word w(alphabet);
  w.symbols_ = std::move(symbols);
  return w;
}

Word Word::from_string(std::string_view text) { return parse(Alphabet::infer(text), text); }

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) throw std::out_of_range("slice outside word");
  Word w(alphabet_);
  w.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                    symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

std::string Word::str() const {
  std::string out;
  out.reserve(size());
  for (Symbol s : symbols_) out.push_back(alphabet_.letter(s));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '"' << w.str() << '"'; }

bool ShortlexLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.symbols().begin(), a.symbols().end(),
                                      b.symbols().begin(), b.symbols().end());
}

Word concat(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  std::vector<Symbol> out(u.symbols().begin(), u.symbols().end());
  out.insert(out.end(), v.symbols().begin(), v.symbols().end());
  return Word(u.alphabet(), std::move(out));
}

Word power(const Word& u, std::size_t n) {
  std::vector<Symbol> out;
  out.reserve(u.size() * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), u.symbols().begin(), u.symbols().end());
  return Word(u.alphabet(), std::move(out));
}

Word mirror(const Word& u) {
  std::vector<Symbol> out(u.symbols().rbegin(), u.symbols().rend());
  return Word(u.alphabet(), std::move(out));
}

Word factor(const Word& w, std::size_t i, std::size_t j) {
  if (i < 1 || i - 1 > j || j > w.size()) {
    throw std::invalid_argument("factor: need 0 <= i-1 <= j <= |w|, got i=" + std::to_string(i) +
                                " j=" + std::to_string(j) + " |w|=" + std::to_string(w.size()));
  }
  return w.slice(i - 1, j - i + 1);
}

bool occurs_at(const Word& needle, const Word& haystack, std::size_t pos) {
  if (pos > haystack.size() || needle.size() > haystack.size() - pos) return false;
  return std::equal(needle.symbols().begin(), needle.symbols().end(),
                    haystack.symbols().begin() + static_cast<std::ptrdiff_t>(pos));
}

bool is_prefix(const Word& p, const Word& w) { return occurs_at(p, w, 0); }

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && occurs_at(s, w, w.size() - s.size());
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Symbol> out(w.symbols().begin() + static_cast<std::ptrdiff_t>(k), w.symbols().end());
  out.insert(out.end(), w.symbols().begin(), w.symbols().begin() + static_cast<std::ptrdiff_t>(k));
  return Word(w.alphabet(), std::move(out));
}

std::vector<std::size_t> border_array(std::span<const Symbol> w) {
  std::vector<std::size_t> border(w.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k];
    if (w[i] == w[k]) ++k;
    border[i + 1] = k;
  }
  return border;
}

std::size_t first_internal_occurrence(const Word& w) {
  require_nonempty(w, "first_internal_occurrence");
  const auto pattern = w.symbols();
  const std::size_t n = pattern.size();
  const auto border = border_array(pattern);
  // KMP scan of ww starting at offset 1; the occurrence at offset n always exists.
  std::size_t matched = 0;
  for (std::size_t t = 1; t < 2 * n; ++t) {
    const Symbol c = pattern[t % n];
    while (matched > 0 && c != pattern[matched]) matched = border[matched];
    if (c == pattern[matched]) ++matched;
    if (matched == n) return t + 1 - n;
  }
  return n;
}

bool is_primitive(const Word& w) {
  if (w.empty()) return false;
  return first_internal_occurrence(w) == w.size();
}

PowerDecomposition primitive_root(const Word& w) {
  require_nonempty(w, "primitive_root");
  const std::size_t period = first_internal_occurrence(w);
  return {w.prefix(period), w.size() / period};
}

std::vector<Word> borders(const Word& w) {
  std::vector<Word> out;
  if (w.size() <= 1) return out;
  const auto border = border_array(w.symbols());
  for (std::size_t len = border[w.size()]; len > 0; len = border[len]) out.push_back(w.prefix(len));
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Word> conjugates(const Word& w) {
  require_nonempty(w, "conjugates");
  std::vector<Word> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word r = rotate(w, k);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

bool are_conjugate(const Word& u, const Word& v) {
  if (u.size() != v.size() || u.alphabet() != v.alphabet()) return false;
  if (u.empty()) return true;
  const Word uu = concat(u, u);
  for (std::size_t pos = 0; pos < u.size(); ++pos) {
    if (occurs_at(v, uu, pos)) return true;
  }
  return false;
}

bool has_unbordered_conjugate(const Word& w) {
  require_nonempty(w, "has_unbordered_conjugate");
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Word r = rotate(w, k);
    if (border_array(r.symbols()).back() == 0) return true;
  }
  return false;
}

MaxPower max_power(const Word& w) {
  require_nonempty(w, "max_power");
  const auto s = w.symbols();
  const std::size_t n = s.size();
  std::size_t best_exponent = 1;
  std::size_t best_start = 0;
  std::size_t best_period = 1;
  // A run of r consecutive matches s[t] == s[t+p] spans a factor of length
  // r + p, which holds the power (root of length p)^(r/p + 1).
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    std::size_t run = 0;
    for (std::size_t t = 0; t + p < n; ++t) {
      if (s[t] != s[t + p]) {
        run = 0;
        continue;
      }
      ++run;
      const std::size_t exponent = run / p + 1;
      if (exponent > best_exponent) {
        best_exponent = exponent;
        best_start = t + 1 - run;
        best_period = p;
      }
    }
  }
  return {best_exponent, w.slice(best_start, best_period)};
}

bool is_k_power_free(std::span<const Symbol> s, std::size_t k) {
  if (k < 2) throw std::invalid_argument("is_k_power_free: k must be >= 2");
  const std::size_t n = s.size();
  for (std::size_t p = 1; k * p <= n; ++p) {
    const std::size_t needed = (k - 1) * p;
    std::size_t run = 0;
    for (std::size_t t = 0; t + p < n; ++t) {
      run = s[t] == s[t + p] ? run + 1 : 0;
      if (run >= needed) return false;
    }
  }
  return true;
}

bool is_k_power_free(const Word& w, std::size_t k) { return is_k_power_free(w.symbols(), k); }

bool has_k_power_suffix(std::span<const Symbol> s, std::size_t k) {
  const std::size_t n = s.size();
  for (std::size_t p = 1; k * p <= n; ++p) {
    const std::size_t needed = (k - 1) * p;
    std::size_t t = 0;
    while (t < needed && s[n - 1 - t] == s[n - 1 - t - p]) ++t;
    if (t == needed) return true;
  }
  return false;
}

std::size_t max_power_in_power(const Word& w, std::size_t j) {
  if (!is_primitive(w)) throw std::invalid_argument("max_power_in_power: word must be primitive");
  if (j == 0) throw std::invalid_argument("max_power_in_power: j must be positive");
  return max_power(power(w, j)).exponent;
}

}  // namespace primwords
