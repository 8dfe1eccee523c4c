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
// Constructive solvers for the classical elementary word equations.
//
// Every solver checks its equation first, then searches the (small) space of
// split points for a decomposition and verifies it by substitution before
// returning. Instances are expected to be desk-sized.

#ifndef PRIMWORDS_EQUATIONS_HPP
#define PRIMWORDS_EQUATIONS_HPP

#include <cstddef>
#include <optional>
#include <utility>

#include "primwords/word.hpp"

namespace primwords::equations {

/// u = r (s r)^n, v = r s, w = s r.
struct ConjugacySolution {
  Word r;
  Word s;
  std::size_t n = 0;
};

/// u = root^exp_u, v = root^exp_v with root primitive.
struct CommutationSolution {
  Word root;
  std::size_t exp_u = 0;
  std::size_t exp_v = 0;
};

/// u = (t1 t2)^n t1, v = (t2 t1)^p t2, w = (t1 t2)^q t1.
struct PalindromicSolution {
  Word t1;
  Word t2;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t q = 0;
};

/// x = t^i, y = t^j, v = t^(i+j).
struct InternalFactorSolution {
  Word t;
  std::size_t i = 0;
  std::size_t j = 0;
};

/// x1 x2 = t^alpha (alpha >= 2), y = t^beta.
struct SandwichSolution {
  Word t;
  std::size_t alpha = 0;
  std::size_t beta = 0;
};

/// Solves vu = uw with v nonempty. Among valid decompositions returns the one
/// minimising (n, |r|). Throws std::invalid_argument if the equation fails.
ConjugacySolution solve_vu_eq_uw(const Word& v, const Word& u, const Word& w);

/// Solves uv = vu for (u, v) != (ε, ε).
CommutationSolution solve_commutation(const Word& u, const Word& v);

/// Solves uvw = wvu for (u, v) != (ε, ε). Returns the valid witness with the
/// lexicographically least (t1, t2). Throws std::invalid_argument when v = w = ε
/// and u is nonempty: the equation then holds but admits no such decomposition.
PalindromicSolution solve_uvw_eq_wvu(const Word& u, const Word& v, const Word& w);

/// Solves vv = x v y with x, y nonempty; t is the primitive root of x.
InternalFactorSolution solve_internal_factor(const Word& v, const Word& x, const Word& y);

/// Solves x2 y x = y x x1 where x = x1 x2 and x1, x2 nonempty.
SandwichSolution solve_sandwich(const Word& x1, const Word& x2, const Word& y);

/// p + q - gcd(p, q).
std::size_t fine_wilf_bound(std::size_t p, std::size_t q);

/// Length of the longest common prefix of u^ω and v^ω, capped at `cap`.
std::size_t periodic_common_prefix(const Word& u, const Word& v, std::size_t cap);

/// Exhaustive search for u, v of lengths p and q over `alphabet` with distinct
/// primitive roots whose powers share a prefix of length fine_wilf_bound - 1.
/// Returns the first pair in (u, v) lexicographic order, or nullopt.
std::optional<std::pair<Word, Word>> find_fine_wilf_optimality_witness(std::size_t p, std::size_t q,
                                                                        const Alphabet& alphabet);

}  // namespace primwords::equations

#endif  // PRIMWORDS_EQUATIONS_HPP
