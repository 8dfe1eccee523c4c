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

#include <set>
#include <stdexcept>

#include "../support/oracles.hpp"
#include "primwords/registry.hpp"

namespace primwords::registry {
namespace {

TEST(Oracle, Examples) {
  const Alphabet ab("ab");
  EXPECT_FALSE(oracle_is_primitive(Word::parse(ab, "abab")));
  EXPECT_TRUE(oracle_is_primitive(Word::parse(ab, "aab")));
  EXPECT_FALSE(oracle_is_primitive(Word(ab)));
}

TEST(Mobius, SmallValues) {
  const std::vector<int> expected{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (std::uint64_t n = 1; n <= expected.size(); ++n) EXPECT_EQ(mobius(n), expected[n - 1]) << n;
  EXPECT_THROW(mobius(0), std::invalid_argument);
}

TEST(Counting, Examples) {
  EXPECT_EQ(count_primitive_words(2, 1), 2u);
  EXPECT_EQ(count_primitive_words(2, 4), 12u);
  EXPECT_EQ(count_primitive_words(2, 6), 54u);
  EXPECT_EQ(count_primitive_words(2, 12), 4020u);
  EXPECT_THROW(count_primitive_words(0, 3), std::invalid_argument);
  EXPECT_THROW(count_primitive_words(2, 0), std::invalid_argument);
  EXPECT_THROW(count_primitive_words(2, 64), std::overflow_error);
}

TEST(Counting, MatchesScan) {
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(count_primitive_words(2, n), oracle::primitive_count_by_scan("ab", n)) << n;
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(count_primitive_words(3, n), oracle::primitive_count_by_scan("abc", n)) << n;
  }
}

std::size_t drain(MorphismStream stream) {
  std::size_t count = 0;
  while (stream.next()) ++count;
  return count;
}

TEST(MorphismStream, Counts) {
  const Alphabet ab("ab");
  EXPECT_EQ(drain(enumerate_morphisms(2, ab, LengthRange{1, 1})), 4u);
  EXPECT_EQ(drain(enumerate_morphisms(2, ab, LengthRange{2, 2})), 16u);
  EXPECT_EQ(drain(enumerate_morphisms(2, ab, LengthRange{1, 2})), 36u);
  EXPECT_EQ(drain(enumerate_morphisms(3, ab, std::vector<LengthRange>{LengthRange{0, 0}, LengthRange{1, 1}, LengthRange{2, 2}})), 8u);
  EXPECT_THROW(enumerate_morphisms(2, ab, std::vector<LengthRange>{LengthRange{1, 1}}), std::invalid_argument);
  EXPECT_THROW(enumerate_morphisms(2, ab, LengthRange{2, 1}), std::invalid_argument);
}

TEST(MorphismStream, DistinctAndFirstLetterSlowest) {
  auto stream = enumerate_morphisms(2, Alphabet("ab"), LengthRange{1, 1});
  std::vector<std::string> seen;
  while (auto f = stream.next()) seen.push_back(f->describe());
  EXPECT_EQ(seen, (std::vector<std::string>{"a->a, b->a", "a->a, b->b", "a->b, b->a", "a->b, b->b"}));
}

TEST(Catalog, IdsRoundTripAndDefaultsAreValid) {
  const auto entries = catalog();
  EXPECT_EQ(entries.size(), 28u);
  std::set<std::string_view> names;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const StatementInfo& entry = entries[i];
    EXPECT_EQ(static_cast<std::size_t>(entry.id), i);
    names.insert(to_string(entry.id));
    EXPECT_EQ(parse_statement_id(to_string(entry.id)), entry.id);
    EXPECT_FALSE(entry.claim.empty());
    EXPECT_NO_THROW(resolve_bounds(entry.id, default_bounds(entry.id)));
  }
  EXPECT_EQ(names.size(), entries.size());
  EXPECT_FALSE(parse_statement_id("BOGUS_ID"));
  EXPECT_EQ(info(StatementId::THEOREM12_FAMILY).polarity, Polarity::existential);
  EXPECT_EQ(info(StatementId::CONJ_COUNT).polarity, Polarity::universal);
}

TEST(Catalog, ResolveBoundsRejectsBadInput) {
  auto b = default_bounds(StatementId::CONJ_COUNT);
  b.max_word_len = 0;
  EXPECT_THROW(resolve_bounds(StatementId::CONJ_COUNT, b), std::invalid_argument);
  b = default_bounds(StatementId::CONJ_COUNT);
  b.alphabet_size = 4;
  EXPECT_THROW(resolve_bounds(StatementId::CONJ_COUNT, b), std::invalid_argument);
  b = default_bounds(StatementId::CONJ_COUNT);
  b.extra["nonsense"] = 1;
  EXPECT_THROW(resolve_bounds(StatementId::CONJ_COUNT, b), std::invalid_argument);
  VerificationBounds partial{3, 1, 2, {{"n", 3}}};
  const auto resolved = resolve_bounds(StatementId::THEOREM12_FAMILY, partial);
  EXPECT_EQ(resolved.knob("n"), 3);
  EXPECT_EQ(resolved.knob("n_min"), 2);
}

TEST(Verify, ConjCountCountsEveryNonemptyBinaryWord) {
  VerificationBounds b = default_bounds(StatementId::CONJ_COUNT);
  b.max_word_len = 8;
  const auto v = verify(StatementId::CONJ_COUNT, b);
  EXPECT_EQ(v.status, VerdictStatus::pass);
  EXPECT_EQ(v.cases_checked, (1u << 9) - 2);
  EXPECT_FALSE(v.witness);
}

TEST(Verify, Theorem12FamilyRange) {
  VerificationBounds b = default_bounds(StatementId::THEOREM12_FAMILY);
  b.extra["n_min"] = 2;
  b.extra["n_max"] = 4;
  const auto v = verify(StatementId::THEOREM12_FAMILY, b);
  EXPECT_EQ(v.status, VerdictStatus::pass);
  EXPECT_EQ(v.cases_checked, 3u);
  b.extra["n"] = 3;
  EXPECT_EQ(verify(StatementId::THEOREM12_FAMILY, b).cases_checked, 1u);
  b.extra["n"] = 1;
  EXPECT_THROW(verify(StatementId::THEOREM12_FAMILY, b), std::invalid_argument);
}

TEST(Verify, XmynZq) {
  VerificationBounds b = default_bounds(StatementId::XMYN_ZQ);
  b.max_word_len = 4;
  b.extra["min_exponent"] = 2;
  b.extra["max_exponent"] = 3;
  const auto v = verify(StatementId::XMYN_ZQ, b);
  EXPECT_EQ(v.status, VerdictStatus::pass);
  EXPECT_GT(v.cases_checked, 0u);
}

TEST(Verify, KnobGuards) {
  VerificationBounds b = default_bounds(StatementId::KPF_IMPLIES_PRIM_K5);
  b.extra["k"] = 4;
  EXPECT_THROW(verify(StatementId::KPF_IMPLIES_PRIM_K5, b), std::invalid_argument);
}

TEST(Verify, FineWilfWithoutLengthPairs) {
  // With max_word_len 2 there is no pair 2 <= p < q to search for optimality.
  VerificationBounds b = default_bounds(StatementId::FINE_WILF);
  b.max_word_len = 2;
  EXPECT_EQ(verify(StatementId::FINE_WILF, b).status, VerdictStatus::pass);
}

TEST(Verify, TkOptimalitySearchOnlyAddsNotes) {
  VerificationBounds b = default_bounds(StatementId::TK_SUFFICIENT);
  b.max_image_len = 2;
  b.extra["search_optimality"] = 1;
  const auto v = verify(StatementId::TK_SUFFICIENT, b);
  EXPECT_EQ(v.status, VerdictStatus::pass);
  EXPECT_FALSE(v.theorem_violation);
}

class DefaultSweep : public ::testing::TestWithParam<StatementId> {};

TEST_P(DefaultSweep, PassesAtDefaults) {
  const auto v = verify(GetParam());
  EXPECT_EQ(v.status, VerdictStatus::pass) << to_string(GetParam());
  EXPECT_GT(v.cases_checked, 0u);
  EXPECT_FALSE(v.theorem_violation);
}

std::vector<StatementId> all_ids() {
  std::vector<StatementId> out;
  for (const auto& entry : catalog()) out.push_back(entry.id);
  return out;
}

INSTANTIATE_TEST_SUITE_P(Catalog, DefaultSweep, ::testing::ValuesIn(all_ids()),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(Reference, MentionsEveryStatement) {
  const std::string page = catalog_reference();
  for (const auto& entry : catalog()) {
    EXPECT_NE(page.find("## " + std::string(to_string(entry.id))), std::string::npos);
  }
}

}  // namespace
}  // namespace primwords::registry
