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

#include "primwords/registry.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "primwords/enumerate.hpp"
#include "primwords/equations.hpp"

namespace primwords::registry {

using morphism::Morphism;

bool oracle_is_primitive(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return false;
  }
  return true;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t count_primitive_words(std::uint64_t alphabet_size, std::size_t n) {
  if (alphabet_size == 0 || n == 0) throw std::invalid_argument("count_primitive_words: arguments must be positive");
  auto checked_pow = [](std::uint64_t base, std::size_t e) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < e; ++i) {
      if (out > std::numeric_limits<std::int64_t>::max() / base) {
        throw std::overflow_error("count_primitive_words: result does not fit in 63 bits");
      }
      out *= base;
    }
    return out;
  };
  std::int64_t total = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) total += mobius(d) * static_cast<std::int64_t>(checked_pow(alphabet_size, n / d));
  }
  return static_cast<std::uint64_t>(total);
}

MorphismStream::MorphismStream(std::size_t source_size, const Alphabet& target,
                               std::vector<LengthRange> image_lens)
    : source_(Alphabet::first_letters(source_size)), target_(target) {
  if (image_lens.size() != source_size) throw std::invalid_argument("enumerate_morphisms: one range per letter");
  for (const LengthRange& range : image_lens) {
    if (range.min_len > range.max_len) throw std::invalid_argument("enumerate_morphisms: empty length range");
    choices_.push_back(collect(enumerate_words(target_, range.min_len, range.max_len)));
  }
  odometer_.assign(source_size, 0);
}

std::optional<Morphism> MorphismStream::next() {
  if (done_) return std::nullopt;
  if (started_) {
    std::size_t i = odometer_.size();
    while (i > 0) {
      --i;
      if (++odometer_[i] < choices_[i].size()) break;
      odometer_[i] = 0;
      if (i == 0) {
        done_ = true;
        return std::nullopt;
      }
    }
  }
  started_ = true;
  std::vector<Word> images;
  for (std::size_t i = 0; i < odometer_.size(); ++i) images.push_back(choices_[i][odometer_[i]]);
  return Morphism(source_, target_, std::move(images));
}

MorphismStream enumerate_morphisms(std::size_t source_size, const Alphabet& target,
                                   std::vector<LengthRange> image_lens) {
  return MorphismStream(source_size, target, std::move(image_lens));
}

MorphismStream enumerate_morphisms(std::size_t source_size, const Alphabet& target, LengthRange image_len) {
  return MorphismStream(source_size, target, std::vector<LengthRange>(source_size, image_len));
}

std::string_view to_string(StatementId id) {
  switch (id) {
#define PRIMWORDS_NAME_ENTRY(name) \
  case StatementId::name:          \
    return #name;
    PRIMWORDS_STATEMENTS(PRIMWORDS_NAME_ENTRY)
#undef PRIMWORDS_NAME_ENTRY
  }
  return "UNKNOWN";
}

std::optional<StatementId> parse_statement_id(std::string_view name) {
#define PRIMWORDS_PARSE_ENTRY(entry) \
  if (name == #entry) return StatementId::entry;
  PRIMWORDS_STATEMENTS(PRIMWORDS_PARSE_ENTRY)
#undef PRIMWORDS_PARSE_ENTRY
  return std::nullopt;
}

std::string_view to_string(Polarity polarity) {
  return polarity == Polarity::universal ? "universal" : "existential";
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::counterexample: return "counterexample";
    case VerdictStatus::bound_exhausted_no_witness: return "bound_exhausted_no_witness";
  }
  return "unknown";
}

long long VerificationBounds::knob(const std::string& name) const {
  auto it = extra.find(name);
  if (it == extra.end()) throw std::invalid_argument("unknown knob '" + name + "'");
  return it->second;
}

namespace {

constexpr std::string_view kWordBounds =
    "max_word_len: longest word enumerated; alphabet_size: letters in the alphabet";
constexpr std::string_view kMorphismBounds =
    "max_word_len: depth of the bounded primitivity check; max_image_len: longest letter image; "
    "alphabet_size: letters in source and target";

std::vector<StatementInfo> build_catalog() {
  using enum StatementId;
  using P = Polarity;
  return {
      {FINE_WILF,
       "If powers of nonempty u and v share a prefix (or a suffix) of length |u|+|v|-gcd(|u|,|v|), u and v "
       "have the same primitive root; the bound is optimal.",
       P::universal, 7, 1, 2,
       "max_word_len: longest u and v; optimality is searched for every 2 <= p < q <= max_word_len", {}},
      {LOTHAIRE_1,
       "If vu = uw with v nonempty, then u = r(sr)^n, v = rs and w = sr for some words r, s and n >= 0.",
       P::universal, 8, 1, 2, kWordBounds,
       {{"trials", 1000, "randomized round-trips"},
        {"seed", 1, "round-trip RNG seed"},
        {"max_root_len", 6, "round-trips: largest |r|+|s|"},
        {"max_exponent", 4, "round-trips: largest n"}}},
      {LOTHAIRE_2, "If uv = vu, then u and v are powers of one primitive word.", P::universal, 8, 1, 2,
       kWordBounds,
       {{"trials", 1000, "randomized round-trips"},
        {"seed", 1, "round-trip RNG seed"},
        {"max_root_len", 3, "round-trips: longest root"},
        {"max_exponent", 4, "round-trips: largest exponent"}}},
      {LOTHAIRE_3,
       "If uvw = wvu with (u,v) != (e,e) and (v,w) != (e,e), then u = (t1t2)^n t1, v = (t2t1)^p t2 and w = (t1t2)^q t1.",
       P::universal, 4, 1, 2, kWordBounds,
       {{"trials", 1000, "randomized round-trips"},
        {"seed", 1, "round-trip RNG seed"},
        {"max_root_len", 4, "round-trips: largest |t1|+|t2|"},
        {"max_exponent", 3, "round-trips: largest n, p, q"}}},
      {INTERNAL_FACTOR,
       "If vv = xvy with x, y nonempty, then x = t^i, y = t^j and v = t^(i+j); such a v is not primitive.",
       P::universal, 14, 1, 2, kWordBounds, {}},
      {CONJ_COUNT, "A nonempty word is primitive iff it has |w| distinct conjugates.", P::universal, 12, 1, 2,
       kWordBounds, {}},
      {UNBORDERED_CONJ, "A word is primitive iff one of its conjugates is unbordered.", P::universal, 12, 1, 2,
       kWordBounds, {}},
      {CONJ_ROOTS, "Conjugate words have conjugate primitive roots.", P::universal, 10, 1, 2, kWordBounds, {}},
      {EQ_ZY, "If zy = y'z and yz = z'y', then y = y'.", P::universal, 6, 1, 2,
       "max_word_len: longest y and z (y' and z' are determined)", {}},
      {EQ_YZ_MIRROR, "If yz = zy' and zy = y'z', then y = y'.", P::universal, 6, 1, 2,
       "max_word_len: longest y and z (y' and z' are determined)", {}},
      {SANDWICH,
       "If x = x1x2 with x1, x2 nonempty and x2 y x = y x x1, then x = t^a with a >= 2 and y = t^b.",
       P::universal, 5, 1, 2, "max_word_len: longest x1, x2 and y", {}},
      {CONJ_POWER_PRIM,
       "For primitive w, any proper conjugate w' of w and i, j >= 1, the word w^i w'^j is primitive.",
       P::universal, 6, 1, 2, "max_word_len: longest w",
       {{"max_exponent", 3, "largest i and j"}}},
      {RS_SR_POWER,
       "If (rs)^i (sr)^j = z^n with r, s, z nonempty, i, j >= 1 and n >= 2, then r, s and z have the same "
       "primitive root.",
       P::universal, 4, 1, 2, "max_word_len: longest r and s (z is determined)",
       {{"max_exponent", 2, "largest i and j"}, {"max_power", 3, "largest n"}}},
      {XMYN_ZQ, "If x^m y^n = z^q with x, y, z nonempty and m, n, q >= 2, then x, y and z have the same "
                "primitive root.",
       P::universal, 5, 1, 2, "max_word_len: longest x and y (z is determined)",
       {{"min_exponent", 2, "smallest m, n, q"}, {"max_exponent", 3, "largest m, n, q"}}},
      {XMYN_PRIM, "For distinct primitive x and y and m, n >= 2, the word x^m y^n is primitive.", P::universal, 5,
       1, 2, "max_word_len: longest x and y",
       {{"min_exponent", 2, "smallest m, n"}, {"max_exponent", 3, "largest m, n"}}},
      {PRIM_IMPLIES_INJ,
       "A primitive morphism is injective: every non-injective morphism fails bounded primitivity.",
       P::universal, 8, 3, 2, kMorphismBounds, {}},
      {PURE_CODE_CHAR,
       "A morphism is primitive iff its letter images form a pure code: for injective morphisms the bounded "
       "purity check and the bounded primitivity check agree.",
       P::universal, 9, 3, 2,
       "max_word_len: bound for both the purity check (image length) and the primitivity check (source "
       "length); max_image_len: longest letter image; alphabet_size: letters in the target (source is binary)",
       {}},
      {UNIFORM_BINARY_2PRIM, "A uniform binary morphism is primitive iff it is 2-primitive.", P::universal, 10, 3,
       2,
       "max_word_len: depth of the exhaustive primitivity check; max_image_len: largest uniform length; "
       "alphabet_size: letters in the target (source is binary)",
       {}},
      {THEOREM12_FAMILY,
       "For every n >= 2 the binary morphism a -> aba, b -> (baa)^(n-1) b is n-primitive, not (n+1)-primitive, "
       "and maps a^n b to ((aba)^(n-1) ab)^2.",
       P::existential, 1, 1, 2, "bounds unused; the family members are checked exhaustively",
       {{"n_min", 2, "first family member"}, {"n_max", 4, "last family member"}, {"n", 0, "single member (0: use range)"}}},
      {BIFIXE, "A k-power-free morphism is bifix: every morphism k-power-free up to 2k-1 is bifix.", P::universal,
       1, 3, 2,
       "max_image_len: longest letter image; alphabet_size: letters in source and target",
       {{"k_min", 2, "smallest k"}, {"k_max", 3, "largest k"}}},
      {PRIM_NOT_KPF_FAMILY,
       "For every k >= 2 the morphism a -> ac^k, b -> bc^k, c -> abc^k is primitive but not k-power-free.",
       P::existential, 8, 1, 3, "max_word_len: depth of the primitivity check",
       {{"k_min", 2, "smallest k"}, {"k_max", 3, "largest k"}}},
      {TK_SUFFICIENT,
       "A binary morphism k-power-free up to t_k is primitive: the certificate never contradicts an exhaustive "
       "primitivity check.",
       P::universal, 10, 3, 2,
       "max_word_len: depth of the refuting primitivity check; max_image_len: longest letter image; "
       "alphabet_size: letters in the target (source is binary)",
       {{"k_min", 2, "smallest k"},
        {"k_max", 3, "largest k"},
        {"search_optimality", 0, "1: also report morphisms k-power-free up to t_k - 1 yet not primitive"}}},
      {MAXPOWER_LEMMA,
       "For primitive w and j >= 1 the largest power k_j occurring in w^j satisfies k_j <= max{j, k_1, k_2, "
       "k_3}.",
       P::universal, 8, 1, 3, "max_word_len: longest w; alphabet_size: letters", {{"max_j", 6, "largest j"}}},
      {KPF_IMPLIES_PRIM_K5,
       "A k-power-free morphism with k >= 5 is primitive: morphisms k-power-free up to kpf_depth pass bounded "
       "primitivity.",
       P::universal, 8, 3, 2, kMorphismBounds,
       {{"k", 5, "power bound (>= 5)"}, {"kpf_depth", 12, "depth of the k-power-freeness filter"}}},
      {UNIFORM_KPF_IMPLIES_PRIM,
       "A uniform k-power-free morphism (k >= 2) is primitive: uniform morphisms k-power-free up to kpf_depth "
       "pass bounded primitivity.",
       P::universal, 8, 3, 2, kMorphismBounds,
       {{"k_min", 2, "smallest k"}, {"k_max", 3, "largest k"}, {"kpf_depth", 6, "depth of the power-freeness filter"}}},
      {SQUAREFREE_IMPLIES_PRIM,
       "A square-free morphism is primitive: morphisms square-free up to sqf_depth pass bounded primitivity.",
       P::universal, 6, 3, 3, kMorphismBounds, {{"sqf_depth", 5, "depth of the square-freeness filter"}}},
      {KPF_STEP_K5,
       "A k-power-free morphism is (k+1)-power-free for k >= 5: morphisms k-power-free up to max_word_len are "
       "(k+1)-power-free up to max_word_len.",
       P::universal, 14, 3, 2,
       "max_word_len: depth of both power-freeness checks; max_image_len: longest letter image; alphabet_size: "
       "letters in source and target",
       {{"k", 5, "power bound (>= 5)"}}},
      {KPF_STEP_UNIFORM,
       "A uniform k-power-free morphism is (k+1)-power-free for k >= 3: uniform morphisms k-power-free up to "
       "max_word_len are (k+1)-power-free up to max_word_len.",
       P::universal, 10, 3, 2,
       "max_word_len: depth of both power-freeness checks; max_image_len: largest uniform length; "
       "alphabet_size: letters in source and target",
       {{"k_min", 3, "smallest k"}, {"k_max", 4, "largest k"}}},
  };
}

}  // namespace

std::span<const StatementInfo> catalog() {
  static const std::vector<StatementInfo> entries = build_catalog();
  return entries;
}

const StatementInfo& info(StatementId id) { return catalog()[static_cast<std::size_t>(id)]; }

VerificationBounds default_bounds(StatementId id) {
  const StatementInfo& entry = info(id);
  VerificationBounds out{entry.max_word_len, entry.max_image_len, entry.alphabet_size, {}};
  for (const Knob& knob : entry.knobs) out.extra[std::string(knob.name)] = knob.default_value;
  return out;
}

VerificationBounds resolve_bounds(StatementId id, VerificationBounds bounds) {
  if (bounds.max_word_len < 1 || bounds.max_image_len < 1) {
    throw std::invalid_argument("bounds must be >= 1");
  }
  if (bounds.alphabet_size != 2 && bounds.alphabet_size != 3) {
    throw std::invalid_argument("alphabet_size must be 2 or 3");
  }
  const StatementInfo& entry = info(id);
  for (const auto& [name, value] : bounds.extra) {
    const bool known = std::any_of(entry.knobs.begin(), entry.knobs.end(),
                                   [&](const Knob& k) { return k.name == name; });
    if (!known) throw std::invalid_argument("unknown knob '" + name + "' for " + std::string(to_string(id)));
    if (value < 0) throw std::invalid_argument("knob '" + name + "' must be non-negative");
  }
  for (const Knob& knob : entry.knobs) bounds.extra.try_emplace(std::string(knob.name), knob.default_value);
  return bounds;
}

namespace {

using Payload = std::vector<std::pair<std::string, std::string>>;

struct Run {
  std::uint64_t cases = 0;
  std::optional<Payload> witness;
  std::vector<std::string> notes;
  bool missing_witness = false;

  bool failed() const { return witness.has_value(); }
  void fail(Payload payload) {
    if (!witness) witness = std::move(payload);
  }
};

std::size_t knob(const VerificationBounds& b, const char* name) {
  return static_cast<std::size_t>(b.knob(name));
}

// Visits words in length-then-lex order until `fn` returns false.
template <typename Fn>
void for_each_word(const Alphabet& alphabet, std::size_t min_len, std::size_t max_len, Fn&& fn) {
  auto stream = enumerate_words(alphabet, min_len, max_len);
  while (auto w = stream.next()) {
    if (!fn(*w)) return;
  }
}

template <typename Fn>
void for_each_morphism(MorphismStream stream, Fn&& fn) {
  while (auto f = stream.next()) {
    if (f->is_all_erasing()) continue;
    if (!fn(*f)) return;
  }
}

Word random_word(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet.size()) - 1);
  std::vector<Symbol> symbols(len);
  for (auto& s : symbols) s = static_cast<Symbol>(letter(rng));
  return Word(alphabet, std::move(symbols));
}

std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Word cat(const Word& a, const Word& b) { return concat(a, b); }
Word cat(const Word& a, const Word& b, const Word& c) { return concat(concat(a, b), c); }
Word root_of(const Word& w) { return primitive_root(w).root; }

// ---------------------------------------------------------------- words ---

void check_fine_wilf(const VerificationBounds& b, Run& run) {
  const Alphabet alphabet = Alphabet::first_letters(b.alphabet_size);
  const auto words = collect(enumerate_words(alphabet, 1, b.max_word_len));
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (root_of(u) == root_of(v)) continue;
      ++run.cases;
      const std::size_t bound = equations::fine_wilf_bound(u.size(), v.size());
      const std::size_t prefix = equations::periodic_common_prefix(u, v, bound);
      const std::size_t suffix = equations::periodic_common_prefix(mirror(u), mirror(v), bound);
      if (prefix >= bound || suffix >= bound) {
        run.fail({{"u", u.str()}, {"v", v.str()}, {"bound", std::to_string(bound)}});
        return;
      }
    }
  }
  for (std::size_t p = 2; p <= b.max_word_len; ++p) {
    for (std::size_t q = p + 1; q <= b.max_word_len; ++q) {
      ++run.cases;
      if (!equations::find_fine_wilf_optimality_witness(p, q, alphabet)) {
        run.missing_witness = true;
        run.notes.push_back("no optimality witness for lengths (" + std::to_string(p) + ", " +
                            std::to_string(q) + ")");
      }
    }
  }
}

bool conjugacy_identities(const equations::ConjugacySolution& s, const Word& v, const Word& u, const Word& w) {
  return cat(s.r, power(cat(s.s, s.r), s.n)) == u && cat(s.r, s.s) == v && cat(s.s, s.r) == w;
}

void check_lothaire_1(const VerificationBounds& b, Run& run) {
  const Alphabet alphabet = Alphabet::first_letters(b.alphabet_size);
  const auto vs = collect(enumerate_words(alphabet, 1, b.max_word_len));
  const auto us = collect(enumerate_words(alphabet, 0, b.max_word_len));
  for (const Word& v : vs) {
    for (const Word& u : us) {
      const Word vu = cat(v, u);
      const Word w = vu.suffix(v.size());
      if (cat(u, w) != vu) continue;
      ++run.cases;
      if (!conjugacy_identities(equations::solve_vu_eq_uw(v, u, w), v, u, w)) {
        run.fail({{"v", v.str()}, {"u", u.str()}, {"w", w.str()}});
        return;
      }
    }
  }
  std::mt19937_64 rng(knob(b, "seed"));
  for (std::size_t t = 0; t < knob(b, "trials"); ++t) {
    const std::size_t total = random_size(rng, 1, std::max<std::size_t>(1, knob(b, "max_root_len")));
    const std::size_t r_len = random_size(rng, 0, total);
    const Word r = random_word(rng, alphabet, r_len);
    const Word s = random_word(rng, alphabet, total - r_len);
    const std::size_t n = random_size(rng, 0, knob(b, "max_exponent"));
    const Word v = cat(r, s);
    const Word u = cat(r, power(cat(s, r), n));
    const Word w = cat(s, r);
    ++run.cases;
    if (!conjugacy_identities(equations::solve_vu_eq_uw(v, u, w), v, u, w)) {
      run.fail({{"r", r.str()}, {"s", s.str()}, {"n", std::to_string(n)}});
      return;
    }
  }
}

bool commutation_identities(const equations::CommutationSolution& s, const Word& u, const Word& v) {
  return oracle_is_primitive(s.root) && power(s.root, s.exp_u) == u && power(s.root, s.exp_v) == v;
}

void check_lothaire_2(const VerificationBounds& b, Run& run) {
  const Alphabet alphabet = Alphabet::first_letters(b.alphabet_size);
  const auto words = collect(enumerate_words(alphabet, 0, b.max_word_len));
  for (const Word& u : words) {
    for (const Word& v : words) {
      if ((u.empty() && v.empty()) || cat(u, v) != cat(v, u)) continue;
      ++run.cases;
      if (!commutation_identities(equations::solve_commutation(u, v), u, v)) {
        run.fail({{"u", u.str()}, {"v", v.str()}});
        return;
      }
    }
  }
  std::mt19937_64 rng(knob(b, "seed"));
  for (std::size_t t = 0; t < knob(b, "trials"); ++t) {
    const Word root = random_word(rng, alphabet, random_size(rng, 1, std::max<std::size_t>(1, knob(b, "max_root_len"))));
    const std::size_t max_exp = std::max<std::size_t>(1, knob(b, "max_exponent"));
    const std::size_t eu = random_size(rng, 0, max_exp);
    const std::size_t ev = random_size(rng, eu == 0 ? 1 : 0, max_exp);
    const Word u = power(root, eu);
    const Word v = power(root, ev);
    ++run.cases;
    const auto solution = equations::solve_commutation(u, v);
    if (!commutation_identities(solution, u, v) || solution.root != root_of(root)) {
      run.fail({{"root", root.str()}, {"exp_u", std::to_string(eu)}, {"exp_v", std::to_string(ev)}});
      return;
    }
  }
}

bool palindromic_identities(const equations::PalindromicSolution& s, const Word& u, const Word& v, const Word& w) {
  const Word t12 = cat(s.t1, s.t2);
  return cat(power(t12, s.n), s.t1) == u && cat(power(cat(s.t2, s.t1), s.p), s.t2) == v &&
         cat(power(t12, s.q), s.t1) == w;
}

void check_lothaire_3(const VerificationBounds& b, Run& run) {
  const Alphabet alphabet = Alphabet::first_letters(b.alphabet_size);
  const auto words = collect(enumerate_words(alphabet, 0, b.max_word_len));
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (u.empty() && v.empty()) continue;
      const Word uv = cat(u, v);
      const Word vu = cat(v, u);
      for (const Word& w : words) {
        if (cat(uv, w) != cat(w, vu) || (v.empty() && w.empty())) continue;
        ++run.cases;
        if (!palindromic_identities(equations::solve_uvw_eq_wvu(u, v, w), u, v, w)) {
          run.fail({{"u", u.str()}, {"v", v.str()}, {"w", w.str()}});
          return;
        }
      }
    }
  }
  std::mt19937_64 rng(knob(b, "seed"));
  const std::size_t max_exp = knob(b, "max_exponent");
  for (std::size_t t = 0; t < knob(b, "trials"); ++t) {
    Word u(alphabet), v(alphabet), w(alphabet);
    do {
      const std::size_t total = random_size(rng, 1, std::max<std::size_t>(1, knob(b, "max_root_len")));
      const std::size_t l1 = random_size(rng, 0, total);
      const Word t1 = random_word(rng, alphabet, l1);
      const Word t2 = random_word(rng, alphabet, total - l1);
      const Word t12 = cat(t1, t2);
      u = cat(power(t12, random_size(rng, 0, max_exp)), t1);
      v = cat(power(cat(t2, t1), random_size(rng, 0, max_exp)), t2);
      w = cat(power(t12, random_size(rng, 0, max_exp)), t1);
    } while ((u.empty() && v.empty()) || (v.empty() && w.empty()));
    ++run.cases;
    if (!palindromic_identities(equations::solve_uvw_eq_wvu(u, v, w), u, v, w)) {
      run.fail({{"u", u.str()}, {"v", v.str()}, {"w", w.str()}});
      return;
    }
  }
}

void check_internal_factor(const VerificationBounds& b, Run& run) {
  for_each_word(Alphabet::first_letters(b.alphabet_size), 1, b.max_word_len, [&](const Word& v) {
    const Word vv = cat(v, v);
    ++run.cases;
    for (std::size_t offset = 1; offset < v.size(); ++offset) {
      if (!occurs_at(v, vv, offset)) continue;
      const Word x = vv.prefix(offset);
      const Word y = vv.suffix(v.size() - offset);
      const auto s = equations::solve_internal_factor(v, x, y);
      if (power(s.t, s.i) != x || power(s.t, s.j) != y || power(s.t, s.i + s.j) != v || s.i < 1 || s.j < 1 ||
          oracle_is_primitive(v)) {
        run.fail({{"v", v.str()}, {"x", x.str()}, {"y", y.str()}});
        return false;
      }
    }
    return true;
  });
}

void check_conj_count(const VerificationBounds& b, Run& run) {
  for_each_word(Alphabet::first_letters(b.alphabet_size), 1, b.max_word_len, [&](const Word& w) {
    ++run.cases;
    if (oracle_is_primitive(w) != (conjugates(w).size() == w.size())) {
      run.fail({{"w", w.str()}, {"conjugates", std::to_string(conjugates(w).size())}});
      return false;
    }
    return true;
  });
}

void check_unbordered_conj(const VerificationBounds& b, Run& run) {
  for_each_word(Alphabet::first_letters(b.alphabet_size), 1, b.max_word_len, [&](const Word& w) {
    ++run.cases;
    if (has_unbordered_conjugate(w) != oracle_is_primitive(w)) {
      run.fail({{"w", w.str()}});
      return false;
    }
    return true;
  });
}

void check_conj_roots(const VerificationBounds& b, Run& run) {
  for_each_word(Alphabet::first_letters(b.alphabet_size), 1, b.max_word_len, [&](const Word& u) {
    for (std::size_t k = 0; k < u.size(); ++k) {
      const Word v = rotate(u, k);
      ++run.cases;
      if (!are_conjugate(root_of(u), root_of(v))) {
        run.fail({{"u", u.str()}, {"v", v.str()}});
        return false;
      }
    }
    return true;
  });
}

void check_eq_zy(const VerificationBounds& b, Run& run, bool mirrored) {
  const auto words = collect(enumerate_words(Alphabet::first_letters(b.alphabet_size), 0, b.max_word_len));
  for (const Word& y : words) {
    for (const Word& z : words) {
      ++run.cases;
      const Word zy = cat(z, y);
      const Word yz = cat(y, z);
      Word y2(y.alphabet()), z2(y.alphabet());
      if (!mirrored) {
        // zy = y'z and yz = z'y'
        y2 = zy.prefix(y.size());
        if (cat(y2, z) != zy) continue;
        z2 = yz.prefix(z.size());
        if (cat(z2, y2) != yz) continue;
      } else {
        // yz = zy' and zy = y'z'
        y2 = yz.suffix(y.size());
        if (cat(z, y2) != yz) continue;
        z2 = zy.suffix(z.size());
        if (cat(y2, z2) != zy) continue;
      }
      if (y != y2) {
        run.fail({{"y", y.str()}, {"y'", y2.str()}, {"z", z.str()}, {"z'", z2.str()}});
        return;
      }
    }
  }
}

void check_sandwich(const VerificationBounds& b, Run& run) {
  const Alphabet alphabet = Alphabet::first_letters(b.alphabet_size);
  const auto parts = collect(enumerate_words(alphabet, 1, b.max_word_len));
  const auto ys = collect(enumerate_words(alphabet, 0, b.max_word_len));
  for (const Word& x1 : parts) {
    for (const Word& x2 : parts) {
      const Word x = cat(x1, x2);
      for (const Word& y : ys) {
        ++run.cases;
        if (cat(x2, y, x) != cat(y, x, x1)) continue;
        const auto s = equations::solve_sandwich(x1, x2, y);
        if (s.alpha < 2 || power(s.t, s.alpha) != x || power(s.t, s.beta) != y) {
          run.fail({{"x1", x1.str()}, {"x2", x2.str()}, {"y", y.str()}});
          return;
        }
      }
    }
  }
}

void check_conj_power_prim(const VerificationBounds& b, Run& run) {
  const std::size_t max_exp = knob(b, "max_exponent");
  for_each_word(Alphabet::first_letters(b.alphabet_size), 1, b.max_word_len, [&](const Word& w) {
    if (!oracle_is_primitive(w)) return true;
    for (std::size_t k = 1; k < w.size(); ++k) {
      const Word conj = rotate(w, k);
      for (std::size_t i = 1; i <= max_exp; ++i) {
        for (std::size_t j = 1; j <= max_exp; ++j) {
          ++run.cases;
          const Word candidate = cat(power(w, i), power(conj, j));
          if (!oracle_is_primitive(candidate) || !is_primitive(candidate)) {
            run.fail({{"w", w.str()}, {"conjugate", conj.str()}, {"i", std::to_string(i)}, {"j", std::to_string(j)}});
            return false;
          }
        }
      }
    }
    return true;
  });
}

// z with z^n == w, if any.
std::optional<Word> exact_root(const Word& w, std::size_t n) {
  if (w.size() % n != 0) return std::nullopt;
  Word z = w.prefix(w.size() / n);
  if (power(z, n) != w) return std::nullopt;
  return z;
}

void check_rs_sr_power(const VerificationBounds& b, Run& run) {
  const auto words = collect(enumerate_words(Alphabet::first_letters(b.alphabet_size), 1, b.max_word_len));
  const std::size_t max_exp = knob(b, "max_exponent");
  const std::size_t max_pow = knob(b, "max_power");
  for (const Word& r : words) {
    for (const Word& s : words) {
      const Word rs = cat(r, s);
      const Word sr = cat(s, r);
      for (std::size_t i = 1; i <= max_exp; ++i) {
        for (std::size_t j = 1; j <= max_exp; ++j) {
          const Word lhs = cat(power(rs, i), power(sr, j));
          for (std::size_t n = 2; n <= max_pow; ++n) {
            ++run.cases;
            auto z = exact_root(lhs, n);
            if (!z) continue;
            if (root_of(r) != root_of(s) || root_of(r) != root_of(*z)) {
              run.fail({{"r", r.str()}, {"s", s.str()}, {"z", z->str()}, {"i", std::to_string(i)},
                        {"j", std::to_string(j)}, {"n", std::to_string(n)}});
              return;
            }
          }
        }
      }
    }
  }
}

void check_xmyn_zq(const VerificationBounds& b, Run& run) {
  const auto words = collect(enumerate_words(Alphabet::first_letters(b.alphabet_size), 1, b.max_word_len));
  const std::size_t lo = knob(b, "min_exponent");
  const std::size_t hi = knob(b, "max_exponent");
  for (const Word& x : words) {
    for (const Word& y : words) {
      for (std::size_t m = lo; m <= hi; ++m) {
        for (std::size_t n = lo; n <= hi; ++n) {
          const Word lhs = cat(power(x, m), power(y, n));
          for (std::size_t q = lo; q <= hi; ++q) {
            ++run.cases;
            auto z = exact_root(lhs, q);
            if (!z) continue;
            if (root_of(x) != root_of(y) || root_of(x) != root_of(*z)) {
              run.fail({{"x", x.str()}, {"y", y.str()}, {"z", z->str()}, {"m", std::to_string(m)},
                        {"n", std::to_string(n)}, {"q", std::to_string(q)}});
              return;
            }
          }
        }
      }
    }
  }
}

void check_xmyn_prim(const VerificationBounds& b, Run& run) {
  std::vector<Word> primitive;
  for_each_word(Alphabet::first_letters(b.alphabet_size), 1, b.max_word_len, [&](const Word& w) {
    if (oracle_is_primitive(w)) primitive.push_back(w);
    return true;
  });
  const std::size_t lo = knob(b, "min_exponent");
  const std::size_t hi = knob(b, "max_exponent");
  for (const Word& x : primitive) {
    for (const Word& y : primitive) {
      if (x == y) continue;
      for (std::size_t m = lo; m <= hi; ++m) {
        for (std::size_t n = lo; n <= hi; ++n) {
          ++run.cases;
          if (!oracle_is_primitive(cat(power(x, m), power(y, n)))) {
            run.fail({{"x", x.str()}, {"y", y.str()}, {"m", std::to_string(m)}, {"n", std::to_string(n)}});
            return;
          }
        }
      }
    }
  }
}

// ------------------------------------------------------------ morphisms ---

Payload morphism_payload(const Morphism& f) { return {{"morphism", f.describe()}}; }

Payload morphism_payload(const Morphism& f, const morphism::BoundedVerdict& v, const char* what) {
  Payload p = morphism_payload(f);
  p.emplace_back(what, v.witness ? v.witness->str() : std::string("-"));
  return p;
}

MorphismStream all_morphisms(std::size_t source_size, const VerificationBounds& b, std::size_t min_len = 0) {
  return enumerate_morphisms(source_size, Alphabet::first_letters(b.alphabet_size), LengthRange{min_len, b.max_image_len});
}

// Uniform morphisms of every length 1..max_image_len.
template <typename Fn>
void for_each_uniform_morphism(std::size_t source_size, const VerificationBounds& b, Fn&& fn) {
  const Alphabet target = Alphabet::first_letters(b.alphabet_size);
  for (std::size_t len = 1; len <= b.max_image_len; ++len) {
    bool keep_going = true;
    for_each_morphism(enumerate_morphisms(source_size, target, LengthRange{len, len}), [&](const Morphism& f) {
      keep_going = fn(f);
      return keep_going;
    });
    if (!keep_going) return;
  }
}

void check_prim_implies_inj(const VerificationBounds& b, Run& run) {
  for_each_morphism(all_morphisms(b.alphabet_size, b), [&](const Morphism& f) {
    if (morphism::profile(f).injective) return true;
    ++run.cases;
    const auto verdict = morphism::is_n_primitive(f, b.max_word_len);
    if (verdict.holds()) {
      run.fail(morphism_payload(f));
      return false;
    }
    return true;
  });
}

void check_pure_code_char(const VerificationBounds& b, Run& run) {
  for_each_morphism(all_morphisms(2, b, 1), [&](const Morphism& f) {
    if (!morphism::profile(f).injective) return true;
    ++run.cases;
    const auto pure = morphism::is_pure_code_bounded(f.images(), b.max_word_len);
    const auto prim = morphism::is_n_primitive(f, b.max_word_len);
    if (pure.holds() != prim.holds()) {
      Payload p = morphism_payload(f);
      p.emplace_back("pure_code", std::string(morphism::to_string(pure.status)));
      p.emplace_back("n_primitive", std::string(morphism::to_string(prim.status)));
      run.fail(std::move(p));
      return false;
    }
    return true;
  });
}

void check_uniform_binary_2prim(const VerificationBounds& b, Run& run) {
  for_each_uniform_morphism(2, b, [&](const Morphism& f) {
    ++run.cases;
    const bool decided = morphism::decide_primitive_uniform_binary(f);
    const auto exhaustive = morphism::is_n_primitive(f, b.max_word_len);
    if (decided != exhaustive.holds()) {
      run.fail(morphism_payload(f, exhaustive, "exhaustive_witness"));
      return false;
    }
    return true;
  });
}

void check_theorem12_family(const VerificationBounds& b, Run& run) {
  std::size_t lo = knob(b, "n_min");
  std::size_t hi = knob(b, "n_max");
  if (const std::size_t single = knob(b, "n"); single != 0) lo = hi = single;
  if (lo < 2 || lo > hi) throw std::invalid_argument("THEOREM12_FAMILY: need 2 <= n_min <= n_max");
  const Alphabet ab("ab");
  for (std::size_t n = lo; n <= hi; ++n) {
    ++run.cases;
    const Morphism f = morphism::make_counterexample_family(n);
    const auto up_to_n = morphism::is_n_primitive(f, n);
    const auto up_to_next = morphism::is_n_primitive(f, n + 1);
    const Word image = morphism::apply(f, cat(power(Word::parse(ab, "a"), n), Word::parse(ab, "b")));
    const Word expected = power(cat(power(Word::parse(ab, "aba"), n - 1), Word::parse(ab, "ab")), 2);
    if (!up_to_n.holds() || up_to_next.holds() || up_to_next.witness->size() != n + 1 || image != expected) {
      Payload p = morphism_payload(f, up_to_next, "shortest_witness");
      p.emplace_back("n", std::to_string(n));
      run.fail(std::move(p));
      return;
    }
    run.notes.push_back("n=" + std::to_string(n) + ": shortest non-primitive image at " + up_to_next.witness->str());
  }
}

void check_bifixe(const VerificationBounds& b, Run& run) {
  const std::size_t k_lo = std::max<std::size_t>(2, knob(b, "k_min"));
  const std::size_t k_hi = knob(b, "k_max");
  for_each_morphism(all_morphisms(b.alphabet_size, b), [&](const Morphism& f) {
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
      ++run.cases;
      if (morphism::is_k_power_free_up_to(f, k, 2 * (k - 1) + 1).holds() && !morphism::profile(f).bifixe) {
        Payload p = morphism_payload(f);
        p.emplace_back("k", std::to_string(k));
        run.fail(std::move(p));
        return false;
      }
    }
    return true;
  });
}

void check_prim_not_kpf_family(const VerificationBounds& b, Run& run) {
  const std::size_t k_lo = std::max<std::size_t>(2, knob(b, "k_min"));
  const std::size_t k_hi = knob(b, "k_max");
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    ++run.cases;
    const Morphism f = morphism::make_primitive_not_kpf(k);
    const auto kpf = morphism::is_k_power_free_up_to(f, k, 1);
    const auto prim = morphism::is_n_primitive(f, b.max_word_len);
    if (kpf.holds() || kpf.witness->str() != "a" || !prim.holds()) {
      Payload p = morphism_payload(f, prim, "primitivity_witness");
      p.emplace_back("k", std::to_string(k));
      run.fail(std::move(p));
      return;
    }
  }
}

void check_tk_sufficient(const VerificationBounds& b, Run& run) {
  const std::size_t k_lo = std::max<std::size_t>(2, knob(b, "k_min"));
  const std::size_t k_hi = knob(b, "k_max");
  const bool search = knob(b, "search_optimality") != 0;
  for_each_morphism(all_morphisms(2, b), [&](const Morphism& f) {
    const bool primitive = morphism::is_n_primitive(f, b.max_word_len).holds();
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
      ++run.cases;
      if (morphism::certify_primitive_binary_via_tk(f, k) == morphism::Certificate::certified_primitive &&
          !primitive) {
        Payload p = morphism_payload(f);
        p.emplace_back("k", std::to_string(k));
        run.fail(std::move(p));
        return false;
      }
      if (search && !primitive && morphism::t_k(k) > 1 &&
          morphism::is_k_power_free_up_to(f, k, morphism::t_k(k) - 1).holds()) {
        run.notes.push_back("optimality witness for k=" + std::to_string(k) + ": " + f.describe());
      }
    }
    return true;
  });
}

void check_maxpower_lemma(const VerificationBounds& b, Run& run) {
  const std::size_t max_j = knob(b, "max_j");
  for_each_word(Alphabet::first_letters(b.alphabet_size), 1, b.max_word_len, [&](const Word& w) {
    if (!oracle_is_primitive(w)) return true;
    std::vector<std::size_t> k(std::max<std::size_t>(max_j, 3) + 1, 0);
    for (std::size_t j = 1; j < k.size(); ++j) k[j] = max_power_in_power(w, j);
    for (std::size_t j = 1; j <= max_j; ++j) {
      ++run.cases;
      if (k[j] > std::max({j, k[1], k[2], k[3]})) {
        run.fail({{"w", w.str()}, {"j", std::to_string(j)}, {"k_j", std::to_string(k[j])}});
        return false;
      }
    }
    return true;
  });
}

void check_kpf_implies_prim(const VerificationBounds& b, Run& run, std::size_t k_lo, std::size_t k_hi,
                            std::size_t kpf_depth, bool uniform_only) {
  auto check = [&](const Morphism& f) {
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
      ++run.cases;
      if (!morphism::is_k_power_free_up_to(f, k, kpf_depth).holds()) continue;
      const auto prim = morphism::is_n_primitive(f, b.max_word_len);
      if (!prim.holds()) {
        Payload p = morphism_payload(f, prim, "primitivity_witness");
        p.emplace_back("k", std::to_string(k));
        run.fail(std::move(p));
        return false;
      }
    }
    return true;
  };
  if (uniform_only) {
    for_each_uniform_morphism(b.alphabet_size, b, check);
  } else {
    for_each_morphism(all_morphisms(b.alphabet_size, b), check);
  }
}

void check_kpf_step(const VerificationBounds& b, Run& run, std::size_t k_lo, std::size_t k_hi, bool uniform_only) {
  auto check = [&](const Morphism& f) {
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
      ++run.cases;
      if (!morphism::is_k_power_free_up_to(f, k, b.max_word_len).holds()) continue;
      const auto next = morphism::is_k_power_free_up_to(f, k + 1, b.max_word_len);
      if (!next.holds()) {
        Payload p = morphism_payload(f, next, "witness");
        p.emplace_back("k", std::to_string(k));
        run.fail(std::move(p));
        return false;
      }
    }
    return true;
  };
  if (uniform_only) {
    for_each_uniform_morphism(b.alphabet_size, b, check);
  } else {
    for_each_morphism(all_morphisms(b.alphabet_size, b), check);
  }
}

void dispatch(StatementId id, const VerificationBounds& b, Run& run) {
  using enum StatementId;
  switch (id) {
    case FINE_WILF: return check_fine_wilf(b, run);
    case LOTHAIRE_1: return check_lothaire_1(b, run);
    case LOTHAIRE_2: return check_lothaire_2(b, run);
    case LOTHAIRE_3: return check_lothaire_3(b, run);
    case INTERNAL_FACTOR: return check_internal_factor(b, run);
    case CONJ_COUNT: return check_conj_count(b, run);
    case UNBORDERED_CONJ: return check_unbordered_conj(b, run);
    case CONJ_ROOTS: return check_conj_roots(b, run);
    case EQ_ZY: return check_eq_zy(b, run, false);
    case EQ_YZ_MIRROR: return check_eq_zy(b, run, true);
    case SANDWICH: return check_sandwich(b, run);
    case CONJ_POWER_PRIM: return check_conj_power_prim(b, run);
    case RS_SR_POWER: return check_rs_sr_power(b, run);
    case XMYN_ZQ: return check_xmyn_zq(b, run);
    case XMYN_PRIM: return check_xmyn_prim(b, run);
    case PRIM_IMPLIES_INJ: return check_prim_implies_inj(b, run);
    case PURE_CODE_CHAR: return check_pure_code_char(b, run);
    case UNIFORM_BINARY_2PRIM: return check_uniform_binary_2prim(b, run);
    case THEOREM12_FAMILY: return check_theorem12_family(b, run);
    case BIFIXE: return check_bifixe(b, run);
    case PRIM_NOT_KPF_FAMILY: return check_prim_not_kpf_family(b, run);
    case TK_SUFFICIENT: return check_tk_sufficient(b, run);
    case MAXPOWER_LEMMA: return check_maxpower_lemma(b, run);
    case KPF_IMPLIES_PRIM_K5: {
      const std::size_t k = knob(b, "k");
      if (k < 5) throw std::invalid_argument("KPF_IMPLIES_PRIM_K5: k must be >= 5");
      return check_kpf_implies_prim(b, run, k, k, knob(b, "kpf_depth"), false);
    }
    case UNIFORM_KPF_IMPLIES_PRIM:
      return check_kpf_implies_prim(b, run, std::max<std::size_t>(2, knob(b, "k_min")), knob(b, "k_max"),
                                    knob(b, "kpf_depth"), true);
    case SQUAREFREE_IMPLIES_PRIM: return check_kpf_implies_prim(b, run, 2, 2, knob(b, "sqf_depth"), false);
    case KPF_STEP_K5: {
      const std::size_t k = knob(b, "k");
      if (k < 5) throw std::invalid_argument("KPF_STEP_K5: k must be >= 5");
      return check_kpf_step(b, run, k, k, false);
    }
    case KPF_STEP_UNIFORM:
      return check_kpf_step(b, run, std::max<std::size_t>(3, knob(b, "k_min")), knob(b, "k_max"), true);
  }
}

}  // namespace

StatementVerdict verify(StatementId id, const VerificationBounds& bounds) {
  StatementVerdict verdict;
  verdict.statement = id;
  verdict.bounds = resolve_bounds(id, bounds);
  const auto start = std::chrono::steady_clock::now();
  Run run;
  dispatch(id, verdict.bounds, run);
  verdict.elapsed = std::chrono::steady_clock::now() - start;
  verdict.cases_checked = run.cases;
  verdict.notes = std::move(run.notes);
  if (run.failed()) {
    verdict.status = VerdictStatus::counterexample;
    verdict.witness = std::move(run.witness);
    verdict.theorem_violation = true;
    verdict.notes.push_back(info(id).polarity == Polarity::universal
                                ? "theorem-violating witness: the statement is proved, so this is an implementation bug"
                                : "a proved construction failed its claimed property: implementation bug");
  } else if (run.missing_witness || run.cases == 0) {
    verdict.status = VerdictStatus::bound_exhausted_no_witness;
  }
  return verdict;
}

StatementVerdict verify(StatementId id) { return verify(id, default_bounds(id)); }

std::string catalog_reference() {
  std::ostringstream out;
  out << "# Statement catalog\n\n"
      << "Generated by `primwords catalog --markdown`. Default bounds table version " << kDefaultBoundsVersion << ".\n\n"
      << "A `universal` statement quantifies over all instances: any witness found is a theorem violation and "
         "therefore a bug. An `existential` statement asserts that certain objects exist; the verifier exhibits "
         "them and reports `bound_exhausted_no_witness` if it cannot.\n\n"
      << "Every verdict is bounded. `pass` means no violation within the bounds shown, never an unbounded claim.\n";
  for (const StatementInfo& entry : catalog()) {
    out << "\n## " << to_string(entry.id) << "\n\n"
        << entry.claim << "\n\n"
        << "- polarity: " << to_string(entry.polarity) << "\n"
        << "- defaults: max_word_len=" << entry.max_word_len << ", max_image_len=" << entry.max_image_len
        << ", alphabet_size=" << entry.alphabet_size << "\n"
        << "- bounds: " << entry.bounds_meaning << "\n";
    for (const Knob& knob : entry.knobs) {
      out << "- knob `" << knob.name << "` (default " << knob.default_value << "): " << knob.meaning << "\n";
    }
  }
  return out.str();
}

}  // namespace primwords::registry
