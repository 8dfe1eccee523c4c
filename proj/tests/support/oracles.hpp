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
// Brute-force reference implementations used by the tests. They work on
// plain std::string and share no code with the library.

#ifndef PRIMWORDS_TESTS_ORACLES_HPP
#define PRIMWORDS_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string repeat(const std::string& u, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += u;
  return out;
}

// Primitive iff w is not a proper rotation of itself.
inline bool primitive(const std::string& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w.substr(k) + w.substr(0, k) == w) return false;
  }
  return true;
}

inline std::string root(const std::string& w) {
  for (std::size_t d = 1; d <= w.size(); ++d) {
    if (w.size() % d == 0 && repeat(w.substr(0, d), w.size() / d) == w) return w.substr(0, d);
  }
  return w;
}

inline std::vector<std::string> borders(const std::string& w) {
  std::vector<std::string> out;
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (w.compare(0, len, w, w.size() - len, len) == 0) out.push_back(w.substr(0, len));
  }
  return out;
}

inline std::set<std::string> conjugates(const std::string& w) {
  std::set<std::string> out;
  for (std::size_t k = 0; k < std::max<std::size_t>(1, w.size()); ++k) out.insert(w.substr(k) + w.substr(0, k));
  return out;
}

// Largest e such that some factor is x^e with x nonempty.
inline std::size_t max_integer_power(const std::string& w) {
  std::size_t best = w.empty() ? 0 : 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + 2 * len <= w.size(); ++len) {
      std::size_t e = 1;
      while (i + (e + 1) * len <= w.size() && w.compare(i + e * len, len, w, i, len) == 0) ++e;
      best = std::max(best, e);
    }
  }
  return best;
}

inline bool k_power_free(const std::string& w, std::size_t k) { return max_integer_power(w) < k; }

inline std::vector<std::string> all_words(const std::string& letters, std::size_t min_len, std::size_t max_len) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (char c : letters) next.push_back(w + c);
    }
    layer = std::move(next);
  }
  return out;
}

// Number of factorizations of w over `set`.
inline std::size_t parses(const std::string& w, const std::vector<std::string>& set) {
  std::vector<std::size_t> ways(w.size() + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (ways[i] == 0) continue;
    for (const auto& x : set) {
      if (!x.empty() && w.compare(i, x.size(), x) == 0) ways[i + x.size()] += ways[i];
    }
  }
  return ways[w.size()];
}

// Some word of length <= max_len has two factorizations.
inline bool ambiguous_up_to(const std::vector<std::string>& set, const std::string& letters, std::size_t max_len) {
  for (const auto& w : all_words(letters, 1, max_len)) {
    if (parses(w, set) > 1) return true;
  }
  return false;
}

using Images = std::map<char, std::string>;

inline std::string apply(const Images& f, const std::string& w) {
  std::string out;
  for (char c : w) out += f.at(c);
  return out;
}

inline std::string source_letters(const Images& f) {
  std::string out;
  for (const auto& [c, image] : f) out += c;
  return out;
}

inline bool n_primitive(const Images& f, std::size_t n) {
  for (const auto& w : all_words(source_letters(f), 1, n)) {
    if (primitive(w) && !primitive(apply(f, w))) return false;
  }
  return true;
}

inline bool k_power_free_up_to(const Images& f, std::size_t k, std::size_t n) {
  for (const auto& w : all_words(source_letters(f), 0, n)) {
    if (k_power_free(w, k) && !k_power_free(apply(f, w), k)) return false;
  }
  return true;
}

inline std::size_t primitive_count_by_scan(const std::string& letters, std::size_t n) {
  std::size_t count = 0;
  for (const auto& w : all_words(letters, n, n)) count += primitive(w) ? 1 : 0;
  return count;
}

}  // namespace oracle

#endif  // PRIMWORDS_TESTS_ORACLES_HPP
