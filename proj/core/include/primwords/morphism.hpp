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
// Morphisms of free monoids and the predicates and bounded (semi-)decision
// procedures used to study which of them preserve primitive words or
// k-power-free words.
//
// Unbounded properties are only ever reported as BoundedVerdicts carrying the
// bound that was searched. The exceptions are decide_primitive_uniform_binary
// and certify_primitive_binary_via_tk, which are exact (resp. one-sided but
// sound) by theorem.

#ifndef PRIMWORDS_MORPHISM_HPP
#define PRIMWORDS_MORPHISM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primwords/word.hpp"

namespace primwords::morphism {

/// A monoid morphism source* -> target*, fixed by the image of each letter.
class Morphism {
 public:
  /// images[i] is the image of source letter i; every image must be a word
  /// over `target`.
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  /// Convenience: images given as text over `target`, in source-letter order.
  static Morphism parse(const Alphabet& source, const Alphabet& target,
                        const std::vector<std::string_view>& images);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const Word& image(Symbol letter) const { return images_.at(letter); }
  /// Throws std::invalid_argument for a letter outside the source alphabet.
  const Word& image(char letter) const;
  std::span<const Word> images() const { return images_; }

  /// Every image is ε. Representable, but rejected by the analyses.
  bool is_all_erasing() const;
  /// Common image length, if all images share one (and it is positive).
  std::optional<std::size_t> uniform_length() const;
  /// "a->aba, b->baab"
  std::string describe() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

Word apply(const Morphism& f, const Word& w);

/// a -> mirror(f(a)); satisfies apply(result, w) == mirror(apply(f, mirror(w))).
Morphism mirror_morphism(const Morphism& f);

struct MorphismProfile {
  std::optional<std::size_t> uniform_length;
  bool erasing = false;
  bool prefix_code = false;
  bool suffix_code = false;
  bool bifixe = false;
  bool ps_morphism = false;
  bool injective = false;
};

/// Throws std::invalid_argument for the all-erasing morphism.
MorphismProfile profile(const Morphism& f);

/// True iff f(a) = p s, f(b) = p s', f(c) = p' s has a solution with b != a
/// and c != a (c == b allowed).
bool has_ps_violation(const Morphism& f);

struct CodeTest {
  bool is_code = false;
  /// On failure: a word with two distinct factorizations over X.
  std::optional<Word> witness;
  std::vector<Word> first_factorization;
  std::vector<Word> second_factorization;
};

/// Unique decodability of a finite set (Sardinas-Patterson). Duplicates in
/// `set` are ignored. Throws std::invalid_argument if the set is empty or
/// contains ε.
CodeTest is_code(std::span<const Word> set);

/// Uniform set with no word occurring strictly inside the concatenation of
/// two of its words. Throws std::invalid_argument for a non-uniform set.
bool is_comma_free(std::span<const Word> set);

/// True iff w factors over `set`.
bool in_star(const Word& w, std::span<const Word> set);

enum class BoundedStatus { holds_up_to_bound, counterexample, not_applicable };

std::string_view to_string(BoundedStatus status);

/// Result of a search bounded by `bound`. The witness is the offending input
/// word, the least one in length-then-lexicographic order.
struct BoundedVerdict {
  BoundedStatus status = BoundedStatus::not_applicable;
  std::size_t bound = 0;
  std::optional<Word> witness;

  bool holds() const { return status == BoundedStatus::holds_up_to_bound; }
};

/// Checks that the primitive root of every w in X+ with |w| <= max_len lies
/// in X*. Throws std::invalid_argument if X is not a code.
BoundedVerdict is_pure_code_bounded(std::span<const Word> set, std::size_t max_len);

/// Images of all primitive words of length <= n are primitive.
BoundedVerdict is_n_primitive(const Morphism& f, std::size_t n);

/// Images of all k-power-free words of length <= n are k-power-free.
BoundedVerdict is_k_power_free_up_to(const Morphism& f, std::size_t k, std::size_t n);

/// Exact primitivity test for uniform morphisms on a two-letter alphabet:
/// primitive iff the images of a, b, ab and ba are primitive.
bool decide_primitive_uniform_binary(const Morphism& f);

/// t_2 = 3, t_3 = 4 and k * floor(k/2) + 2 * (k mod 2) for k >= 4.
std::size_t t_k(std::size_t k);

enum class Certificate { certified_primitive, inconclusive };

std::string_view to_string(Certificate certificate);

/// A binary morphism that is k-power-free up to t_k(k) is primitive. Never
/// certifies a non-primitive morphism; inconclusive proves nothing.
Certificate certify_primitive_binary_via_tk(const Morphism& f, std::size_t k);

/// Primitivity of f(a^i b) and f(a b^i) for 0 <= i <= max_exp. A
/// holds_up_to_bound verdict does not certify primitivity; the full test set
/// is infinite.
BoundedVerdict lentin_schutzenberger_scan(const Morphism& f, std::size_t max_exp);

/// a -> aba, b -> (baa)^(n-1) b: n-primitive but not (n+1)-primitive.
Morphism make_counterexample_family(std::size_t n);

/// a -> a c^k, b -> b c^k, c -> a b c^k: primitive, but f(a) holds c^k.
Morphism make_primitive_not_kpf(std::size_t k);

/// f(a) = X f(b) Y with X, Y not both empty, where X is a nonempty suffix of
/// f(a) or Y is a nonempty prefix of f(a).
struct OverlapViolation {
  char a = 0;
  char b = 0;
  Word x;
  Word y;
};

/// First violation scanning a, then b, then the offset of f(b) in f(a). A
/// violation means the image of some square-free word of length <= 3 holds a
/// square.
std::optional<OverlapViolation> detect_overlap_violation(const Morphism& f);

}  // namespace primwords::morphism

#endif  // PRIMWORDS_MORPHISM_HPP
