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
// Lazy, ordered generators of words.

#ifndef PRIMWORDS_ENUMERATE_HPP
#define PRIMWORDS_ENUMERATE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "primwords/word.hpp"

namespace primwords {

/// Single-consumer stream of words in length-then-lexicographic order.
///
/// With a power bound k >= 2 only k-power-free words are produced; the
/// search extends prefixes letter by letter and prunes any prefix that ends
/// in a k-power, so pruned subtrees are never generated.
class WordStream {
 public:
  /// k == 0 disables the power filter.
  WordStream(Alphabet alphabet, std::size_t min_len, std::size_t max_len, std::size_t k = 0);

  std::optional<Word> next();

 private:
  bool prefix_ok(std::size_t pos) const;
  bool advance_from(std::ptrdiff_t pos);

  Alphabet alphabet_;
  std::size_t max_len_;
  std::size_t k_;
  std::size_t len_;
  bool in_length_ = false;
  bool found_at_length_ = false;
  bool done_ = false;
  std::vector<int> digits_;
  std::vector<Symbol> buffer_;
};

/// All words with min_len <= |w| <= max_len.
WordStream enumerate_words(const Alphabet& alphabet, std::size_t min_len, std::size_t max_len);

/// All k-power-free words with |w| <= max_len, ε included.
WordStream enumerate_k_power_free_words(const Alphabet& alphabet, std::size_t k, std::size_t max_len);

/// Drains a stream.
std::vector<Word> collect(WordStream stream);

}  // namespace primwords

#endif  // PRIMWORDS_ENUMERATE_HPP
