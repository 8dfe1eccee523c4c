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

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "primwords/enumerate.hpp"

namespace primwords {
namespace {

std::vector<std::string> strs(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

TEST(Enumerate, WordExamples) {
  const Alphabet ab("ab");
  EXPECT_EQ(strs(collect(enumerate_words(ab, 1, 1))), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(strs(collect(enumerate_words(ab, 0, 1))), (std::vector<std::string>{"", "a", "b"}));
  EXPECT_EQ(strs(collect(enumerate_words(ab, 2, 2))), (std::vector<std::string>{"aa", "ab", "ba", "bb"}));
  EXPECT_THROW(enumerate_words(ab, 3, 2), std::invalid_argument);
}

TEST(Enumerate, PowerFreeExamples) {
  const std::vector<std::string> expected{"", "a", "b", "ab", "ba", "aba", "bab"};
  EXPECT_EQ(strs(collect(enumerate_k_power_free_words(Alphabet("ab"), 2, 3))), expected);
  EXPECT_EQ(strs(collect(enumerate_k_power_free_words(Alphabet("ab"), 2, 4))), expected);
  const auto ternary = collect(enumerate_k_power_free_words(Alphabet("abc"), 2, 2));
  EXPECT_EQ(ternary.size(), 1u + 3u + 6u);
  EXPECT_THROW(enumerate_k_power_free_words(Alphabet("ab"), 1, 3), std::invalid_argument);
}

TEST(Enumerate, MatchesFilteredOracleInShortlexOrder) {
  for (const std::string letters : {"ab", "abc"}) {
    for (std::size_t k = 2; k <= 3; ++k) {
      const std::size_t max_len = letters.size() == 2 ? 12 : 7;
      std::vector<std::string> expected;
      for (const auto& w : oracle::all_words(letters, 0, max_len)) {
        if (oracle::k_power_free(w, k)) expected.push_back(w);
      }
      EXPECT_EQ(strs(collect(enumerate_k_power_free_words(Alphabet(letters), k, max_len))), expected)
          << letters << " k=" << k;
    }
    EXPECT_EQ(strs(collect(enumerate_words(Alphabet(letters), 0, 5))), oracle::all_words(letters, 0, 5));
  }
}

TEST(Enumerate, StreamIsLazyAndOrdered) {
  auto stream = enumerate_words(Alphabet("ab"), 0, 60);
  ShortlexLess less;
  std::optional<Word> previous;
  for (int i = 0; i < 1000; ++i) {
    auto w = stream.next();
    ASSERT_TRUE(w);
    if (previous) ASSERT_TRUE(less(*previous, *w));
    previous = w;
  }
}

}  // namespace
}  // namespace primwords
