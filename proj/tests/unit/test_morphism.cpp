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

#include <stdexcept>

#include "../support/oracles.hpp"
#include "primwords/enumerate.hpp"
#include "primwords/morphism.hpp"
#include "primwords/registry.hpp"

namespace primwords::morphism {
namespace {

Morphism M(std::string_view source, std::string_view target, const std::vector<std::string_view>& images) {
  return Morphism::parse(Alphabet(source), Alphabet(target), images);
}

Word W(std::string_view text, std::string_view letters = "ab") { return Word::parse(Alphabet(letters), text); }

std::vector<Word> set_of(std::string_view letters, const std::vector<std::string_view>& words) {
  std::vector<Word> out;
  for (auto w : words) out.push_back(W(w, letters));
  return out;
}

oracle::Images images_of(const Morphism& f) {
  oracle::Images out;
  for (std::size_t i = 0; i < f.source().size(); ++i) out[f.source().letter(i)] = f.image(static_cast<Symbol>(i)).str();
  return out;
}

const Morphism kF2 = M("ab", "ab", {"aba", "baab"});

TEST(Morphism, ConstructionValidates) {
  EXPECT_THROW(M("ab", "ab", {"a"}), std::invalid_argument);
  EXPECT_THROW(M("ab", "ab", {"a", "c"}), std::invalid_argument);
  EXPECT_EQ(kF2.describe(), "a->aba, b->baab");
  EXPECT_EQ(kF2.image('b'), W("baab"));
  EXPECT_THROW(kF2.image('c'), std::invalid_argument);
  EXPECT_FALSE(kF2.uniform_length());
  EXPECT_EQ(M("ab", "ab", {"ab", "ba"}).uniform_length(), 2u);
  EXPECT_TRUE(M("ab", "ab", {"", ""}).is_all_erasing());
}

TEST(Morphism, ApplyExamples) {
  const Morphism f = M("ab", "xyz", {"xy", "yzx"});
  EXPECT_EQ(apply(f, W("abb")), W("xyyzxyzx", "xyz"));
  EXPECT_EQ(apply(f, W("")), W("", "xyz"));
  EXPECT_EQ(apply(kF2, W("aab")), W("abaababaab"));
  EXPECT_THROW(apply(f, W("a", "abc")), std::invalid_argument);
}

TEST(Morphism, MirrorExamples) {
  const Morphism f = M("ab", "xyz", {"xy", "yzx"});
  const Morphism g = mirror_morphism(f);
  EXPECT_EQ(g, M("ab", "xyz", {"yx", "xzy"}));
  EXPECT_EQ(apply(g, W("bba")), W("xzyxzyyx", "xyz"));
  const Morphism id = M("ab", "ab", {"a", "b"});
  EXPECT_EQ(mirror_morphism(id), id);
  for (const Word& w : collect(enumerate_words(Alphabet("ab"), 0, 6))) {
    ASSERT_EQ(apply(g, w), mirror(apply(f, mirror(w))));
  }
}

TEST(Profile, Examples) {
  auto p = profile(kF2);
  EXPECT_FALSE(p.uniform_length);
  EXPECT_TRUE(p.prefix_code);
  EXPECT_TRUE(p.suffix_code);
  EXPECT_TRUE(p.bifixe);
  EXPECT_TRUE(p.injective);
  p = profile(M("ab", "ab", {"a", "ab"}));
  EXPECT_FALSE(p.prefix_code);
  EXPECT_TRUE(p.injective);
  EXPECT_TRUE(profile(M("ab", "ab", {"ab", "ba"})).ps_morphism);
  EXPECT_FALSE(profile(M("ab", "ab", {"ab", "ab"})).injective);
  EXPECT_TRUE(profile(M("ab", "ab", {"", "ab"})).erasing);
  EXPECT_THROW(profile(M("ab", "ab", {"", ""})), std::invalid_argument);
}

TEST(Code, Examples) {
  auto t = is_code(set_of("ab", {"a", "ab", "ba"}));
  EXPECT_FALSE(t.is_code);
  ASSERT_TRUE(t.witness);
  EXPECT_EQ(*t.witness, W("aba"));
  EXPECT_NE(t.first_factorization, t.second_factorization);
  EXPECT_TRUE(is_code(set_of("ab", {"ab", "ba"})).is_code);
  EXPECT_TRUE(is_code(set_of("abc", {"acc", "bcc", "abcc"})).is_code);
  EXPECT_THROW(is_code(std::vector<Word>{}), std::invalid_argument);
  EXPECT_THROW(is_code(set_of("ab", {"a", ""})), std::invalid_argument);
}

TEST(Code, AgreesWithBoundedAmbiguityOracle) {
  const auto words = collect(enumerate_words(Alphabet("ab"), 1, 3));
  for (const Word& x : words) {
    for (const Word& y : words) {
      if (!(x < y)) continue;
      for (const Word& z : words) {
        if (!(y < z)) continue;
        const std::vector<Word> set{x, y, z};
        const std::vector<std::string> plain{x.str(), y.str(), z.str()};
        const auto t = is_code(set);
        ASSERT_EQ(t.is_code, !oracle::ambiguous_up_to(plain, "ab", 12)) << x << y << z;
        if (!t.is_code) ASSERT_GE(oracle::parses(t.witness->str(), plain), 2u);
      }
    }
  }
}

TEST(CommaFree, Examples) {
  EXPECT_TRUE(is_comma_free(set_of("ab", {"ab"})));
  EXPECT_FALSE(is_comma_free(set_of("ab", {"aa"})));
  EXPECT_FALSE(is_comma_free(set_of("ab", {"ab", "ba"})));
  EXPECT_THROW(is_comma_free(set_of("ab", {"a", "ab"})), std::invalid_argument);
}

TEST(PureCode, Examples) {
  auto v = is_pure_code_bounded(set_of("ab", {"aba", "baab"}), 10);
  EXPECT_EQ(v.status, BoundedStatus::counterexample);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, W("abaababaab"));
  const std::vector<Word> x = set_of("ab", {"aba", "baab"});
  EXPECT_FALSE(in_star(primitive_root(*v.witness).root, x));
  EXPECT_TRUE(is_pure_code_bounded(set_of("ab", {"a"}), 10).holds());
  EXPECT_TRUE(is_pure_code_bounded(set_of("ab", {"ab", "ba"}), 8).holds());
  EXPECT_THROW(is_pure_code_bounded(set_of("ab", {"a", "ab", "ba"}), 8), std::invalid_argument);
}

TEST(NPrimitive, Examples) {
  EXPECT_TRUE(is_n_primitive(kF2, 2).holds());
  auto v = is_n_primitive(kF2, 3);
  EXPECT_EQ(v.status, BoundedStatus::counterexample);
  EXPECT_EQ(*v.witness, W("aab"));
  EXPECT_EQ(v.bound, 3u);
  v = is_n_primitive(M("ab", "ab", {"ab", "ab"}), 2);
  EXPECT_EQ(*v.witness, W("ab"));
}

TEST(PowerFreeUpTo, Examples) {
  auto v = is_k_power_free_up_to(M("abc", "abc", {"acc", "bcc", "abcc"}), 2, 1);
  EXPECT_EQ(v.status, BoundedStatus::counterexample);
  EXPECT_EQ(*v.witness, W("a", "abc"));
  // The morphism generating Thue's square-free ternary word is not itself
  // square-free: aba maps to abc.ac.abc, which holds (ca)^2.
  v = is_k_power_free_up_to(M("abc", "abc", {"abc", "ac", "b"}), 2, 5);
  EXPECT_EQ(v.status, BoundedStatus::counterexample);
  EXPECT_EQ(*v.witness, W("aba", "abc"));
  EXPECT_FALSE(oracle::k_power_free_up_to({{'a', "abc"}, {'b', "ac"}, {'c', "b"}}, 2, 5));
  EXPECT_TRUE(is_k_power_free_up_to(M("abc", "abc", {"abc", "ac", "b"}), 2, 2).holds());
  EXPECT_TRUE(is_k_power_free_up_to(M("ab", "ab", {"a", "b"}), 2, 6).holds());
  EXPECT_THROW(is_k_power_free_up_to(kF2, 1, 3), std::invalid_argument);
}

TEST(BoundedChecks, AgreeWithOracleOverSmallBinaryMorphisms) {
  const Alphabet ab("ab");
  auto stream = registry::enumerate_morphisms(2, ab, registry::LengthRange{0, 3});
  while (auto f = stream.next()) {
    if (f->is_all_erasing()) continue;
    const auto plain = images_of(*f);
    ASSERT_EQ(is_n_primitive(*f, 6).holds(), oracle::n_primitive(plain, 6)) << f->describe();
    for (std::size_t k = 2; k <= 3; ++k) {
      ASSERT_EQ(is_k_power_free_up_to(*f, k, 6).holds(), oracle::k_power_free_up_to(plain, k, 6)) << f->describe();
    }
  }
}

TEST(UniformBinary, Examples) {
  EXPECT_TRUE(decide_primitive_uniform_binary(M("ab", "ab", {"ab", "ba"})));
  EXPECT_FALSE(decide_primitive_uniform_binary(M("ab", "ab", {"ab", "ab"})));
  EXPECT_FALSE(decide_primitive_uniform_binary(M("ab", "ab", {"aa", "ab"})));
  EXPECT_THROW(decide_primitive_uniform_binary(kF2), std::invalid_argument);
  EXPECT_THROW(decide_primitive_uniform_binary(M("abc", "ab", {"a", "b", "a"})), std::invalid_argument);
}

TEST(Tk, Table) {
  const std::vector<std::size_t> expected{3, 4, 8, 12, 18, 23, 32, 38, 50};
  for (std::size_t k = 2; k <= 10; ++k) EXPECT_EQ(t_k(k), expected[k - 2]) << k;
  EXPECT_THROW(t_k(1), std::invalid_argument);
}

TEST(Tk, CertificateExamples) {
  EXPECT_EQ(certify_primitive_binary_via_tk(M("ab", "ab", {"ab", "ba"}), 3), Certificate::certified_primitive);
  EXPECT_TRUE(oracle::k_power_free_up_to({{'a', "ab"}, {'b', "ba"}}, 3, 4));
  EXPECT_EQ(certify_primitive_binary_via_tk(kF2, 2), Certificate::inconclusive);
  EXPECT_FALSE(oracle::k_power_free_up_to({{'a', "aba"}, {'b', "baab"}}, 2, 3));
  EXPECT_EQ(certify_primitive_binary_via_tk(M("ab", "ab", {"aa", "b"}), 2), Certificate::inconclusive);
}

TEST(LentinSchutzenberger, Examples) {
  auto v = lentin_schutzenberger_scan(kF2, 3);
  EXPECT_EQ(v.status, BoundedStatus::counterexample);
  EXPECT_EQ(*v.witness, W("aab"));
  EXPECT_TRUE(lentin_schutzenberger_scan(M("ab", "ab", {"ab", "ba"}), 5).holds());
  v = lentin_schutzenberger_scan(M("ab", "ab", {"a", "a"}), 1);
  EXPECT_EQ(*v.witness, W("ab"));
}

TEST(Families, CounterexampleFamily) {
  EXPECT_EQ(make_counterexample_family(2), M("ab", "ab", {"aba", "baab"}));
  EXPECT_EQ(make_counterexample_family(3), M("ab", "ab", {"aba", "baabaab"}));
  EXPECT_THROW(make_counterexample_family(1), std::invalid_argument);
  for (std::size_t n = 2; n <= 6; ++n) {
    const Morphism f = make_counterexample_family(n);
    const Word image = apply(f, concat(power(W("a"), n), W("b")));
    EXPECT_EQ(image, power(concat(power(W("aba"), n - 1), W("ab")), 2)) << n;
  }
}

TEST(Families, PrimitiveNotPowerFree) {
  EXPECT_EQ(make_primitive_not_kpf(2), M("abc", "abc", {"acc", "bcc", "abcc"}));
  EXPECT_EQ(make_primitive_not_kpf(3), M("abc", "abc", {"accc", "bccc", "abccc"}));
  EXPECT_FALSE(is_k_power_free(apply(make_primitive_not_kpf(2), W("a", "abc")), 2));
  EXPECT_THROW(make_primitive_not_kpf(1), std::invalid_argument);
}

void expect_valid_overlap(const Morphism& f, const OverlapViolation& v) {
  const Word fa = f.image(v.a);
  EXPECT_EQ(concat(concat(v.x, f.image(v.b)), v.y), fa);
  EXPECT_TRUE((!v.x.empty() && is_suffix(v.x, fa)) || (!v.y.empty() && is_prefix(v.y, fa)));
}

TEST(Overlap, Examples) {
  const Morphism f1 = M("ab", "a", {"aa", "a"});
  auto v = detect_overlap_violation(f1);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->a, 'a');
  EXPECT_EQ(v->b, 'b');
  expect_valid_overlap(f1, *v);
  EXPECT_FALSE(detect_overlap_violation(M("abc", "abc", {"abc", "ac", "b"})));
  const Morphism f3 = M("ab", "ab", {"aba", "b"});
  v = detect_overlap_violation(f3);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->a, 'a');
  EXPECT_EQ(v->b, 'b');
  EXPECT_EQ(v->x, W("a"));
  EXPECT_EQ(v->y, W("a"));
}

}  // namespace
}  // namespace primwords::morphism
