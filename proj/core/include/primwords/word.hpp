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
// Finite words over small alphabets, with periodicity, border, conjugacy and
// repetition primitives.

#ifndef PRIMWORDS_WORD_HPP
#define PRIMWORDS_WORD_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace primwords {

using Symbol = std::uint8_t;

/// Ordered set of 1 to 26 distinct single-character letters.
///
/// Letters are ASCII alphanumerics so that words and morphism files have an
/// unambiguous text form. The order given at construction is the letter order
/// used by every lexicographic comparison.
class Alphabet {
 public:
  static constexpr std::size_t kMaxLetters = 26;

  /// Throws std::invalid_argument on an empty, oversized, duplicated or
  /// non-alphanumeric letter list.
  explicit Alphabet(std::string_view letters);

  /// The distinct letters of `text`, sorted.
  static Alphabet infer(std::string_view text);

  /// {a, b, ...} with `size` letters.
  static Alphabet first_letters(std::size_t size);

  std::size_t size() const { return size_; }
  char letter(std::size_t index) const { return letters_[index]; }
  std::string_view letters() const { return {letters_.data(), size_}; }
  std::optional<Symbol> index_of(char c) const;
  bool contains(char c) const { return index_of(c).has_value(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  std::array<char, kMaxLetters> letters_{};
  std::size_t size_ = 0;
};

/// Immutable finite word: a sequence of letter indices into an alphabet.
class Word {
 public:
  /// The empty word over `alphabet`.
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Symbol> symbols);

  /// Throws std::invalid_argument if `text` holds a letter outside `alphabet`.
  static Word parse(const Alphabet& alphabet, std::string_view text);
  /// Alphabet inferred from the distinct letters of `text`, sorted.
  static Word from_string(std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  /// 0-based slice [pos, pos + len).
  Word slice(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return slice(0, len); }
  Word suffix(std::size_t len) const { return slice(size() - len, len); }

  std::string str() const;

  // Symbols compare first so that ordering is lexicographic on letters.
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
  Alphabet alphabet_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Length-then-lexicographic order; the canonical order for witnesses.
struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const;
};

struct PowerDecomposition {
  Word root;
  std::size_t exponent = 0;
};

struct MaxPower {
  std::size_t exponent = 0;
  Word root;
};

Word concat(const Word& u, const Word& v);
Word power(const Word& u, std::size_t n);
Word mirror(const Word& u);

/// w[i..j] with 1-based inclusive bounds; requires 0 <= i-1 <= j <= |w|.
/// j == i-1 yields the empty word.
Word factor(const Word& w, std::size_t i, std::size_t j);

bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);
/// True iff `needle` occurs in `haystack` starting at `pos`.
bool occurs_at(const Word& needle, const Word& haystack, std::size_t pos);

/// Rotation moving the first `k` letters to the end (k taken mod |w|).
Word rotate(const Word& w, std::size_t k);

/// border_array(w)[i] is the length of the longest border of w[0..i).
std::vector<std::size_t> border_array(std::span<const Symbol> w);

/// Smallest offset p in [1, |w|] at which w occurs in ww. Requires w != ε.
std::size_t first_internal_occurrence(const Word& w);

/// Doubling test: w is primitive iff its first internal occurrence in ww is
/// at offset |w|. The empty word is not primitive.
bool is_primitive(const Word& w);

PowerDecomposition primitive_root(const Word& w);

/// All borders, shortest first.
std::vector<Word> borders(const Word& w);

/// Distinct rotations in rotation order, starting from w itself.
std::vector<Word> conjugates(const Word& w);
bool are_conjugate(const Word& u, const Word& v);
bool has_unbordered_conjugate(const Word& w);

/// Largest integer exponent of a nonempty-root power occurring in w. The
/// witness is the first one met scanning periods ascending, then start
/// positions ascending.
MaxPower max_power(const Word& w);

/// ε is k-power-free for every k.
bool is_k_power_free(const Word& w, std::size_t k);
bool is_k_power_free(std::span<const Symbol> w, std::size_t k);

/// True iff some suffix of `w` is a k-power.
bool has_k_power_suffix(std::span<const Symbol> w, std::size_t k);

/// Largest power occurring in w^j, for primitive w.
std::size_t max_power_in_power(const Word& w, std::size_t j);

}  // namespace primwords

#endif  // PRIMWORDS_WORD_HPP
