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

#include "primwords/morphism.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "primwords/enumerate.hpp"

namespace primwords::morphism {

namespace {

void require_not_all_erasing(const Morphism& f, const char* what) {
  if (f.is_all_erasing()) throw std::invalid_argument(std::string(what) + ": all-erasing morphism");
}

void require_binary(const Morphism& f, const char* what) {
  if (f.source().size() != 2) throw std::invalid_argument(std::string(what) + ": source alphabet must be binary");
}

// Distinct words of `set`, in length-then-lex order.
std::vector<Word> normalized_set(std::span<const Word> set, const char* what) {
  if (set.empty()) throw std::invalid_argument(std::string(what) + ": empty set");
  std::set<Word, ShortlexLess> unique(set.begin(), set.end());
  for (const Word& w : unique) {
    if (w.empty()) throw std::invalid_argument(std::string(what) + ": set contains the empty word");
    if (w.alphabet() != set.front().alphabet()) throw std::invalid_argument(std::string(what) + ": alphabet mismatch");
  }
  return {unique.begin(), unique.end()};
}

Word concat_all(const Alphabet& alphabet, const std::vector<Word>& parts) {
  std::vector<Symbol> out;
  for (const Word& p : parts) out.insert(out.end(), p.symbols().begin(), p.symbols().end());
  return Word(alphabet, std::move(out));
}

BoundedVerdict holds(std::size_t bound) { return {BoundedStatus::holds_up_to_bound, bound, std::nullopt}; }
BoundedVerdict refuted(std::size_t bound, Word witness) {
  return {BoundedStatus::counterexample, bound, std::move(witness)};
}

}  // namespace

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(source), target_(target), images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw std::invalid_argument("morphism needs exactly one image per source letter");
  }
  for (const Word& w : images_) {
    if (w.alphabet() != target_) throw std::invalid_argument("morphism image not over the target alphabet");
  }
}

Morphism Morphism::parse(const Alphabet& source, const Alphabet& target,
                         const std::vector<std::string_view>& images) {
  std::vector<Word> words;
  words.reserve(images.size());
  for (std::string_view text : images) words.push_back(Word::parse(target, text));
  return Morphism(source, target, std::move(words));
}

const Word& Morphism::image(char letter) const {
  auto index = source_.index_of(letter);
  if (!index) throw std::invalid_argument(std::string("letter '") + letter + "' not in source alphabet");
  return images_[*index];
}

bool Morphism::is_all_erasing() const {
  return std::all_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

std::optional<std::size_t> Morphism::uniform_length() const {
  const std::size_t len = images_.front().size();
  if (len == 0) return std::nullopt;
  for (const Word& w : images_) {
    if (w.size() != len) return std::nullopt;
  }
  return len;
}

std::string Morphism::describe() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ", ";
    out += source_.letter(i);
    out += "->";
    out += images_[i].str();
  }
  return out;
}

Word apply(const Morphism& f, const Word& w) {
  if (w.alphabet() != f.source()) {
    throw std::invalid_argument("apply: word " + w.str() + " is not over the source alphabet {" +
                                std::string(f.source().letters()) + "}");
  }
  std::vector<Symbol> out;
  for (Symbol s : w.symbols()) {
    const auto img = f.image(s).symbols();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(f.target(), std::move(out));
}

Morphism mirror_morphism(const Morphism& f) {
  std::vector<Word> images;
  for (const Word& w : f.images()) images.push_back(mirror(w));
  return Morphism(f.source(), f.target(), std::move(images));
}

bool has_ps_violation(const Morphism& f) {
  const std::size_t n = f.source().size();
  for (Symbol a = 0; a < n; ++a) {
    const Word& fa = f.image(a);
    for (std::size_t cut = 0; cut <= fa.size(); ++cut) {
      const Word p = fa.prefix(cut);
      const Word s = fa.suffix(fa.size() - cut);
      bool prefix_elsewhere = false;
      bool suffix_elsewhere = false;
      for (Symbol other = 0; other < n; ++other) {
        if (other == a) continue;
        prefix_elsewhere = prefix_elsewhere || is_prefix(p, f.image(other));
        suffix_elsewhere = suffix_elsewhere || is_suffix(s, f.image(other));
      }
      if (prefix_elsewhere && suffix_elsewhere) return true;
    }
  }
  return false;
}

MorphismProfile profile(const Morphism& f) {
  require_not_all_erasing(f, "profile");
  MorphismProfile out;
  out.uniform_length = f.uniform_length();
  const auto images = f.images();
  out.erasing = std::any_of(images.begin(), images.end(), [](const Word& w) { return w.empty(); });
  out.prefix_code = true;
  out.suffix_code = true;
  bool distinct = true;
  for (std::size_t a = 0; a < images.size(); ++a) {
    for (std::size_t b = 0; b < images.size(); ++b) {
      if (a == b) continue;
      if (is_prefix(images[a], images[b])) out.prefix_code = false;
      if (is_suffix(images[a], images[b])) out.suffix_code = false;
      if (images[a] == images[b]) distinct = false;
    }
  }
  out.bifixe = out.prefix_code && out.suffix_code;
  out.ps_morphism = !has_ps_violation(f);
  out.injective = !out.erasing && distinct && is_code(images).is_code;
  return out;
}

CodeTest is_code(std::span<const Word> set) {
  const std::vector<Word> code = normalized_set(set, "is_code");
  const Alphabet& alphabet = code.front().alphabet();

  // Each node is a dangling suffix d together with two partial parses where
  // concat(ahead) == concat(behind) d. Reaching d in the set closes both.
  struct Node {
    Word dangling;
    std::vector<std::size_t> ahead;
    std::vector<std::size_t> behind;
  };
  std::deque<Node> queue;
  std::set<Word> seen;
  auto push = [&](Word d, std::vector<std::size_t> ahead, std::vector<std::size_t> behind) {
    if (seen.insert(d).second) queue.push_back({std::move(d), std::move(ahead), std::move(behind)});
  };
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = 0; j < code.size(); ++j) {
      if (i != j && is_prefix(code[i], code[j])) {
        push(code[j].suffix(code[j].size() - code[i].size()), {j}, {i});
      }
    }
  }
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    const Word& d = node.dangling;
    for (std::size_t c = 0; c < code.size(); ++c) {
      const Word& z = code[c];
      auto behind = node.behind;
      behind.push_back(c);
      if (z == d) {
        CodeTest out;
        for (std::size_t k : node.ahead) out.first_factorization.push_back(code[k]);
        for (std::size_t k : behind) out.second_factorization.push_back(code[k]);
        out.witness = concat_all(alphabet, out.first_factorization);
        return out;
      }
      if (z.size() < d.size() && is_prefix(z, d)) {
        push(d.suffix(d.size() - z.size()), node.ahead, std::move(behind));
      } else if (d.size() < z.size() && is_prefix(d, z)) {
        push(z.suffix(z.size() - d.size()), std::move(behind), node.ahead);
      }
    }
  }
  return {true, std::nullopt, {}, {}};
}

bool is_comma_free(std::span<const Word> set) {
  const std::vector<Word> code = normalized_set(set, "is_comma_free");
  const std::size_t len = code.front().size();
  for (const Word& w : code) {
    if (w.size() != len) throw std::invalid_argument("is_comma_free: set is not uniform");
  }
  const std::set<Word> members(code.begin(), code.end());
  for (const Word& x : code) {
    for (const Word& y : code) {
      const Word xy = concat(x, y);
      for (std::size_t offset = 1; offset < len; ++offset) {
        if (members.contains(xy.slice(offset, len))) return false;
      }
    }
  }
  return true;
}

bool in_star(const Word& w, std::span<const Word> set) {
  std::vector<bool> reachable(w.size() + 1, false);
  reachable[0] = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!reachable[i]) continue;
    for (const Word& x : set) {
      if (!x.empty() && occurs_at(x, w, i)) reachable[i + x.size()] = true;
    }
  }
  return reachable[w.size()];
}

std::string_view to_string(BoundedStatus status) {
  switch (status) {
    case BoundedStatus::holds_up_to_bound: return "holds_up_to_bound";
    case BoundedStatus::counterexample: return "counterexample";
    case BoundedStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

BoundedVerdict is_pure_code_bounded(std::span<const Word> set, std::size_t max_len) {
  if (!is_code(set).is_code) throw std::invalid_argument("is_pure_code_bounded: set is not a code");
  const std::vector<Word> code = normalized_set(set, "is_pure_code_bounded");
  const Alphabet& alphabet = code.front().alphabet();

  // Words of X+ up to max_len, grown codeword by codeword. Distinct codeword
  // sequences give distinct words since X is a code.
  std::set<Word, ShortlexLess> words;
  std::vector<Word> frontier{Word(alphabet)};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (const Word& x : code) {
        if (w.size() + x.size() > max_len) continue;
        Word longer = concat(w, x);
        words.insert(longer);
        next.push_back(std::move(longer));
      }
    }
    frontier = std::move(next);
  }
  for (const Word& w : words) {
    if (!in_star(primitive_root(w).root, code)) return refuted(max_len, w);
  }
  return holds(max_len);
}

BoundedVerdict is_n_primitive(const Morphism& f, std::size_t n) {
  require_not_all_erasing(f, "is_n_primitive");
  auto words = enumerate_words(f.source(), 1, n);
  while (auto w = words.next()) {
    if (is_primitive(*w) && !is_primitive(apply(f, *w))) return refuted(n, std::move(*w));
  }
  return holds(n);
}

BoundedVerdict is_k_power_free_up_to(const Morphism& f, std::size_t k, std::size_t n) {
  require_not_all_erasing(f, "is_k_power_free_up_to");
  auto words = enumerate_k_power_free_words(f.source(), k, n);
  while (auto w = words.next()) {
    if (!w->empty() && !is_k_power_free(apply(f, *w), k)) return refuted(n, std::move(*w));
  }
  return holds(n);
}

bool decide_primitive_uniform_binary(const Morphism& f) {
  require_not_all_erasing(f, "decide_primitive_uniform_binary");
  require_binary(f, "decide_primitive_uniform_binary");
  if (!f.uniform_length()) throw std::invalid_argument("decide_primitive_uniform_binary: morphism is not uniform");
  return is_n_primitive(f, 2).holds();
}

std::size_t t_k(std::size_t k) {
  if (k < 2) throw std::invalid_argument("t_k: k must be >= 2");
  if (k == 2) return 3;
  if (k == 3) return 4;
  // The closed form for odd k >= 5 is k(k-1)/2 + 2; both branches agree with
  // this unified expression.
  return k * (k / 2) + 2 * (k % 2);
}

std::string_view to_string(Certificate certificate) {
  return certificate == Certificate::certified_primitive ? "certified_primitive" : "inconclusive";
}

Certificate certify_primitive_binary_via_tk(const Morphism& f, std::size_t k) {
  require_not_all_erasing(f, "certify_primitive_binary_via_tk");
  require_binary(f, "certify_primitive_binary_via_tk");
  return is_k_power_free_up_to(f, k, t_k(k)).holds() ? Certificate::certified_primitive
                                                      : Certificate::inconclusive;
}

BoundedVerdict lentin_schutzenberger_scan(const Morphism& f, std::size_t max_exp) {
  require_not_all_erasing(f, "lentin_schutzenberger_scan");
  require_binary(f, "lentin_schutzenberger_scan");
  const Alphabet& source = f.source();
  const Word a = Word(source, {0});
  const Word b = Word(source, {1});
  std::set<Word, ShortlexLess> tests;
  for (std::size_t i = 0; i <= max_exp; ++i) {
    tests.insert(concat(power(a, i), b));
    tests.insert(concat(a, power(b, i)));
  }
  for (const Word& w : tests) {
    if (!is_primitive(apply(f, w))) return refuted(max_exp + 1, w);
  }
  return holds(max_exp + 1);
}

Morphism make_counterexample_family(std::size_t n) {
  if (n < 2) throw std::invalid_argument("make_counterexample_family: n must be >= 2");
  const Alphabet ab("ab");
  const Word fb = concat(power(Word::parse(ab, "baa"), n - 1), Word::parse(ab, "b"));
  return Morphism(ab, ab, {Word::parse(ab, "aba"), fb});
}

Morphism make_primitive_not_kpf(std::size_t k) {
  if (k < 2) throw std::invalid_argument("make_primitive_not_kpf: k must be >= 2");
  const Alphabet abc("abc");
  const Word ck = power(Word::parse(abc, "c"), k);
  return Morphism(abc, abc,
                  {concat(Word::parse(abc, "a"), ck), concat(Word::parse(abc, "b"), ck),
                   concat(Word::parse(abc, "ab"), ck)});
}

std::optional<OverlapViolation> detect_overlap_violation(const Morphism& f) {
  require_not_all_erasing(f, "detect_overlap_violation");
  const Alphabet& source = f.source();
  for (Symbol a = 0; a < source.size(); ++a) {
    const Word& fa = f.image(a);
    for (Symbol b = 0; b < source.size(); ++b) {
      const Word& fb = f.image(b);
      if (fb.size() > fa.size()) continue;
      for (std::size_t pos = 0; pos + fb.size() <= fa.size(); ++pos) {
        if (!occurs_at(fb, fa, pos)) continue;
        Word x = fa.prefix(pos);
        Word y = fa.suffix(fa.size() - pos - fb.size());
        if (x.empty() && y.empty()) continue;
        const bool x_suffix = !x.empty() && is_suffix(x, fa);
        const bool y_prefix = !y.empty() && is_prefix(y, fa);
        if (x_suffix || y_prefix) {
          return OverlapViolation{source.letter(a), source.letter(b), std::move(x), std::move(y)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace primwords::morphism
