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

#include "primwords/equations.hpp"

#include <numeric>
#include <tuple>
#include <stdexcept>

#include "primwords/enumerate.hpp"

namespace primwords::equations {

namespace {

Word cat(const Word& a, const Word& b) { return concat(a, b); }
Word cat(const Word& a, const Word& b, const Word& c) { return concat(concat(a, b), c); }

void require_same_alphabet(std::initializer_list<const Word*> words) {
  const Alphabet& first = (*words.begin())->alphabet();
  for (const Word* w : words) {
    if (w->alphabet() != first) throw std::invalid_argument("alphabet mismatch");
  }
}

// Exponent e with |whole| = offset + e * period, if any.
std::optional<std::size_t> exact_exponent(std::size_t whole, std::size_t offset, std::size_t period) {
  if (whole < offset) return std::nullopt;
  if (period == 0) return whole == offset ? std::optional<std::size_t>(0) : std::nullopt;
  if ((whole - offset) % period != 0) return std::nullopt;
  return (whole - offset) / period;
}

// Exponent e with w = t^e, for nonempty t.
std::optional<std::size_t> power_exponent(const Word& w, const Word& t) {
  auto e = exact_exponent(w.size(), 0, t.size());
  if (!e || power(t, *e) != w) return std::nullopt;
  return e;
}

}  // namespace

ConjugacySolution solve_vu_eq_uw(const Word& v, const Word& u, const Word& w) {
  require_same_alphabet({&v, &u, &w});
  if (v.empty()) throw std::invalid_argument("solve_vu_eq_uw: v must be nonempty");
  if (cat(v, u) != cat(u, w)) throw std::invalid_argument("solve_vu_eq_uw: vu != uw");

  std::optional<ConjugacySolution> best;
  for (std::size_t r_len = 0; r_len <= v.size(); ++r_len) {
    auto n = exact_exponent(u.size(), r_len, v.size());
    if (!n) continue;
    ConjugacySolution candidate{v.prefix(r_len), v.suffix(v.size() - r_len), *n};
    if (cat(candidate.r, power(cat(candidate.s, candidate.r), *n)) != u) continue;
    if (cat(candidate.s, candidate.r) != w) continue;
    if (!best || candidate.n < best->n) best = std::move(candidate);
  }
  if (!best) throw std::logic_error("solve_vu_eq_uw: no decomposition found");
  return *best;
}

CommutationSolution solve_commutation(const Word& u, const Word& v) {
  require_same_alphabet({&u, &v});
  if (u.empty() && v.empty()) throw std::invalid_argument("solve_commutation: both words empty");
  const Word uv = cat(u, v);
  if (uv != cat(v, u)) throw std::invalid_argument("solve_commutation: words do not commute");
  Word root = primitive_root(uv).root;
  auto exp_u = power_exponent(u, root);
  auto exp_v = power_exponent(v, root);
  if (!exp_u || !exp_v) throw std::logic_error("solve_commutation: root does not divide both words");
  return {std::move(root), *exp_u, *exp_v};
}

PalindromicSolution solve_uvw_eq_wvu(const Word& u, const Word& v, const Word& w) {
  require_same_alphabet({&u, &v, &w});
  if (u.empty() && v.empty()) throw std::invalid_argument("solve_uvw_eq_wvu: (u, v) = (ε, ε)");
  if (cat(u, v, w) != cat(w, v, u)) throw std::invalid_argument("solve_uvw_eq_wvu: uvw != wvu");
  // With v = w = ε the equation holds for every u, but w = (t1t2)^q t1 forces t1 = ε and then
  // v = (t2)^(p+1) forces t2 = ε, so no decomposition of a nonempty u exists.
  if (v.empty() && w.empty()) throw std::invalid_argument("solve_uvw_eq_wvu: no decomposition when v = w = ε");

  // t1 is always a prefix of u and t2 a prefix of v; lengths fix n, p, q.
  std::optional<PalindromicSolution> best;
  for (std::size_t l1 = 0; l1 <= u.size(); ++l1) {
    for (std::size_t l2 = 0; l2 <= v.size(); ++l2) {
      const std::size_t period = l1 + l2;
      if (period == 0) continue;
      auto n = exact_exponent(u.size(), l1, period);
      auto p = exact_exponent(v.size(), l2, period);
      auto q = exact_exponent(w.size(), l1, period);
      if (!n || !p || !q) continue;
      Word t1 = u.prefix(l1);
      Word t2 = v.prefix(l2);
      const Word t12 = cat(t1, t2);
      if (cat(power(t12, *n), t1) != u) continue;
      if (cat(power(cat(t2, t1), *p), t2) != v) continue;
      if (cat(power(t12, *q), t1) != w) continue;
      if (best && std::tie(best->t1, best->t2) <= std::tie(t1, t2)) continue;
      best = PalindromicSolution{std::move(t1), std::move(t2), *n, *p, *q};
    }
  }
  if (!best) throw std::logic_error("solve_uvw_eq_wvu: no decomposition found");
  return *best;
}

InternalFactorSolution solve_internal_factor(const Word& v, const Word& x, const Word& y) {
  require_same_alphabet({&v, &x, &y});
  if (x.empty() || y.empty()) throw std::invalid_argument("solve_internal_factor: x and y must be nonempty");
  if (cat(v, v) != cat(x, v, y)) {
    throw std::invalid_argument("solve_internal_factor: " + v.str() + " does not occur inside " +
                                cat(v, v).str() + " at offset " + std::to_string(x.size()));
  }
  Word t = primitive_root(x).root;
  auto i = power_exponent(x, t);
  auto j = power_exponent(y, t);
  if (!i || !j || power(t, *i + *j) != v) throw std::logic_error("solve_internal_factor: no decomposition");
  return {std::move(t), *i, *j};
}

SandwichSolution solve_sandwich(const Word& x1, const Word& x2, const Word& y) {
  require_same_alphabet({&x1, &x2, &y});
  if (x1.empty() || x2.empty()) throw std::invalid_argument("solve_sandwich: x1 and x2 must be nonempty");
  const Word x = cat(x1, x2);
  if (cat(x2, y, x) != cat(y, x, x1)) {
    throw std::invalid_argument("solve_sandwich: " + cat(x2, y, x).str() + " != " + cat(y, x, x1).str());
  }
  auto [t, alpha] = primitive_root(x);
  auto beta = power_exponent(y, t);
  if (!beta || alpha < 2) throw std::logic_error("solve_sandwich: no decomposition");
  return {std::move(t), alpha, *beta};
}

std::size_t fine_wilf_bound(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("fine_wilf_bound: lengths must be positive");
  return p + q - std::gcd(p, q);
}

std::size_t periodic_common_prefix(const Word& u, const Word& v, std::size_t cap) {
  if (u.empty() || v.empty()) throw std::invalid_argument("periodic_common_prefix: empty word");
  std::size_t i = 0;
  while (i < cap && u[i % u.size()] == v[i % v.size()]) ++i;
  return i;
}

std::optional<std::pair<Word, Word>> find_fine_wilf_optimality_witness(std::size_t p, std::size_t q,
                                                                        const Alphabet& alphabet) {
  if (p == q || p < 2 || q < 2) {
    throw std::invalid_argument("find_fine_wilf_optimality_witness: need p != q and p, q >= 2");
  }
  const std::size_t target = fine_wilf_bound(p, q) - 1;
  const auto vs = collect(enumerate_words(alphabet, q, q));
  auto us = enumerate_words(alphabet, p, p);
  while (auto u = us.next()) {
    for (const Word& v : vs) {
      if (periodic_common_prefix(*u, v, target + 1) != target) continue;
      if (primitive_root(*u).root == primitive_root(v).root) continue;
      return std::pair{*u, v};
    }
  }
  return std::nullopt;
}

}  // namespace primwords::equations
