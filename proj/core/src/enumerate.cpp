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

#include "primwords/enumerate.hpp"

#include <stdexcept>

namespace primwords {

WordStream::WordStream(Alphabet alphabet, std::size_t min_len, std::size_t max_len, std::size_t k)
    : alphabet_(alphabet), max_len_(max_len), k_(k), len_(min_len) {
  if (min_len > max_len) throw std::invalid_argument("enumerate: min_len > max_len");
  if (k == 1) throw std::invalid_argument("enumerate: power bound must be >= 2");
}

bool WordStream::prefix_ok(std::size_t pos) const {
  if (k_ == 0) return true;
  return !has_k_power_suffix(std::span<const Symbol>(buffer_.data(), pos + 1), k_);
}

// Odometer step with pruning: find the next admissible full-length word after
// the current digits, incrementing position `pos` first.
bool WordStream::advance_from(std::ptrdiff_t pos) {
  const int q = static_cast<int>(alphabet_.size());
  while (pos >= 0) {
    const auto i = static_cast<std::size_t>(pos);
    if (++digits_[i] == q) {
      digits_[i] = -1;
      --pos;
      continue;
    }
    buffer_[i] = static_cast<Symbol>(digits_[i]);
    if (!prefix_ok(i)) continue;
    if (i + 1 == len_) return true;
    ++pos;
  }
  return false;
}

std::optional<Word> WordStream::next() {
  while (!done_) {
    if (len_ > max_len_) {
      done_ = true;
      break;
    }
    bool found;
    if (!in_length_) {
      in_length_ = true;
      found_at_length_ = false;
      if (len_ == 0) {
        found = true;
      } else {
        digits_.assign(len_, -1);
        buffer_.assign(len_, 0);
        found = advance_from(0);
      }
    } else {
      found = len_ > 0 && advance_from(static_cast<std::ptrdiff_t>(len_) - 1);
    }
    if (found) {
      found_at_length_ = true;
      return Word(alphabet_, buffer_);
    }
    // Power-free languages are factorial: nothing longer once a length is empty.
    if (k_ != 0 && !found_at_length_) {
      done_ = true;
      break;
    }
    in_length_ = false;
    ++len_;
  }
  return std::nullopt;
}

WordStream enumerate_words(const Alphabet& alphabet, std::size_t min_len, std::size_t max_len) {
  return WordStream(alphabet, min_len, max_len);
}

WordStream enumerate_k_power_free_words(const Alphabet& alphabet, std::size_t k, std::size_t max_len) {
  if (k < 2) throw std::invalid_argument("enumerate_k_power_free_words: k must be >= 2");
  return WordStream(alphabet, 0, max_len, k);
}

std::vector<Word> collect(WordStream stream) {
  std::vector<Word> out;
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace primwords
