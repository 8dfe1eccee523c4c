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
// Independent brute-force oracles and a closed catalog of bounded empirical
// verifiers, one per statement about primitive words and morphisms.

#ifndef PRIMWORDS_REGISTRY_HPP
#define PRIMWORDS_REGISTRY_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primwords/morphism.hpp"
#include "primwords/word.hpp"

namespace primwords::registry {

/// Divisor enumeration: w is primitive iff no proper divisor d of |w| has
/// w == (w[0..d))^(|w|/d). Deliberately independent of primwords::is_primitive.
bool oracle_is_primitive(const Word& w);

/// Möbius function.
int mobius(std::uint64_t n);

/// Number of primitive words of length n over q letters:
/// sum over d | n of mobius(d) * q^(n/d).
std::uint64_t count_primitive_words(std::uint64_t alphabet_size, std::size_t n);

struct LengthRange {
  std::size_t min_len = 0;
  std::size_t max_len = 0;
};

/// Morphisms from the first `source_size` letters into `target`, image
/// lengths within the per-letter ranges. Order: the image of the first source
/// letter varies slowest; each image runs in length-then-lex order.
class MorphismStream {
 public:
  MorphismStream(std::size_t source_size, const Alphabet& target, std::vector<LengthRange> image_lens);
  std::optional<morphism::Morphism> next();

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<std::vector<Word>> choices_;
  std::vector<std::size_t> odometer_;
  bool started_ = false;
  bool done_ = false;
};

MorphismStream enumerate_morphisms(std::size_t source_size, const Alphabet& target,
                                   std::vector<LengthRange> image_lens);
/// Same range for every letter.
MorphismStream enumerate_morphisms(std::size_t source_size, const Alphabet& target, LengthRange image_len);

#define PRIMWORDS_STATEMENTS(X) \
  X(FINE_WILF)                  \
  X(LOTHAIRE_1)                 \
  X(LOTHAIRE_2)                 \
  X(LOTHAIRE_3)                 \
  X(INTERNAL_FACTOR)            \
  X(CONJ_COUNT)                 \
  X(UNBORDERED_CONJ)            \
  X(CONJ_ROOTS)                 \
  X(EQ_ZY)                      \
  X(EQ_YZ_MIRROR)               \
  X(SANDWICH)                   \
  X(CONJ_POWER_PRIM)            \
  X(RS_SR_POWER)                \
  X(XMYN_ZQ)                    \
  X(XMYN_PRIM)                  \
  X(PRIM_IMPLIES_INJ)           \
  X(PURE_CODE_CHAR)             \
  X(UNIFORM_BINARY_2PRIM)       \
  X(THEOREM12_FAMILY)           \
  X(BIFIXE)                     \
  X(PRIM_NOT_KPF_FAMILY)        \
  X(TK_SUFFICIENT)              \
  X(MAXPOWER_LEMMA)             \
  X(KPF_IMPLIES_PRIM_K5)        \
  X(UNIFORM_KPF_IMPLIES_PRIM)   \
  X(SQUAREFREE_IMPLIES_PRIM)    \
  X(KPF_STEP_K5)                \
  X(KPF_STEP_UNIFORM)

enum class StatementId {
#define PRIMWORDS_ENUM_ENTRY(name) name,
  PRIMWORDS_STATEMENTS(PRIMWORDS_ENUM_ENTRY)
#undef PRIMWORDS_ENUM_ENTRY
};

std::string_view to_string(StatementId id);
std::optional<StatementId> parse_statement_id(std::string_view name);

/// universal: the statement quantifies over all instances, so any witness is
/// a theorem violation and therefore an implementation bug.
/// existential: the statement asserts that certain objects exist; the
/// verifier exhibits them, and failing to find one within bounds is reported
/// as bound_exhausted_no_witness rather than as a refutation.
enum class Polarity { universal, existential };

std::string_view to_string(Polarity polarity);

struct VerificationBounds {
  std::size_t max_word_len = 1;
  std::size_t max_image_len = 1;
  std::size_t alphabet_size = 2;
  /// Statement-specific knobs; see StatementInfo::knobs.
  std::map<std::string, long long> extra;

  long long knob(const std::string& name) const;
};

struct Knob {
  std::string_view name;
  long long default_value;
  std::string_view meaning;
};

struct StatementInfo {
  StatementId id;
  std::string_view claim;
  Polarity polarity;
  std::size_t max_word_len;
  std::size_t max_image_len;
  std::size_t alphabet_size;
  /// What max_word_len / max_image_len / alphabet_size mean for this entry.
  std::string_view bounds_meaning;
  std::vector<Knob> knobs;
};

/// Version of the default-bounds table shipped with the catalog.
inline constexpr int kDefaultBoundsVersion = 1;

/// The closed catalog, in StatementId order.
std::span<const StatementInfo> catalog();
const StatementInfo& info(StatementId id);

/// Defaults from the catalog, knobs included.
VerificationBounds default_bounds(StatementId id);

/// Validates bounds for `id` (all >= 1, alphabet size 2 or 3, known knobs)
/// and fills in missing knob defaults. Throws std::invalid_argument.
VerificationBounds resolve_bounds(StatementId id, VerificationBounds bounds);

enum class VerdictStatus { pass, counterexample, bound_exhausted_no_witness };

std::string_view to_string(VerdictStatus status);

struct StatementVerdict {
  StatementId statement{};
  VerdictStatus status = VerdictStatus::pass;
  std::uint64_t cases_checked = 0;
  /// Structured counterexample, present iff status == counterexample.
  std::optional<std::vector<std::pair<std::string, std::string>>> witness;
  /// For universal statements a counterexample is a theorem violation.
  bool theorem_violation = false;
  std::vector<std::string> notes;
  VerificationBounds bounds;
  std::chrono::nanoseconds elapsed{0};
};

/// Runs the bounded checker for `id`. Throws std::invalid_argument on bad
/// bounds.
StatementVerdict verify(StatementId id, const VerificationBounds& bounds);
StatementVerdict verify(StatementId id);

/// Markdown reference page of the catalog: ids, claims, polarity, defaults.
std::string catalog_reference();

}  // namespace primwords::registry

#endif  // PRIMWORDS_REGISTRY_HPP
