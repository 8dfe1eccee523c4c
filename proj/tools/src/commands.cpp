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

#include <charconv>
#include <chrono>

#include "primwords/cli/cli.hpp"

namespace primwords::cli {

namespace {

nlohmann::ordered_json words_json(const std::vector<Word>& words) {
  auto out = nlohmann::ordered_json::array();
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

void add_verdict(Report& report, const std::string& key, const morphism::BoundedVerdict& v) {
  report.add(key, std::string(morphism::to_string(v.status)),
             v.witness ? std::optional<std::string>(v.witness->str()) : std::nullopt);
  report.add(key + "_bound", v.bound);
}

}  // namespace

Outcome cmd_word(std::string_view text) {
  if (text.empty()) throw UsageError("word must be nonempty");
  Word w(Alphabet("a"));
  try {
    w = Word::from_string(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad word: ") + e.what());
  }

  Outcome outcome;
  Report& r = outcome.report;
  r.command = "word";
  r.subject = w.str();
  const auto [root, exponent] = primitive_root(w);
  r.add("primitive", is_primitive(w));
  r.add("root", root.str());
  r.add("exponent", exponent);
  r.add("borders", words_json(borders(w)));
  const MaxPower mp = max_power(w);
  r.add("max_power", mp.exponent, mp.root.str());
  std::optional<std::string> unbordered;
  for (const Word& c : conjugates(w)) {
    if (borders(c).empty()) {
      unbordered = c.str();
      break;
    }
  }
  r.add("unbordered_conjugate", unbordered.has_value(), unbordered);
  return outcome;
}

Outcome cmd_morphism(const MorphismFile& file, const MorphismOptions& options) {
  const morphism::Morphism& f = file.parsed;
  if (f.is_all_erasing()) throw UsageError("every image is empty; nothing to analyse");
  if (options.k < 2) throw UsageError("--k must be >= 2");
  if (options.depth < 1) throw UsageError("--depth must be >= 1");

  Outcome outcome;
  Report& r = outcome.report;
  r.command = "morphism";
  r.subject = f.describe();

  const morphism::MorphismProfile p = morphism::profile(f);
  r.add("uniform_length", p.uniform_length ? nlohmann::ordered_json(*p.uniform_length) : nlohmann::ordered_json());
  r.add("erasing", p.erasing);
  r.add("prefix", p.prefix_code);
  r.add("suffix", p.suffix_code);
  r.add("bifixe", p.bifixe);
  r.add("ps_morphism", p.ps_morphism);
  r.add("injective", p.injective);

  const bool binary = f.source().size() == 2;
  if (options.check == Check::primitive) {
    if (binary && f.uniform_length()) {
      // Exact: the two-letter uniform case is settled by images of length <= 2.
      const auto two = morphism::is_n_primitive(f, 2);
      r.add("method", "uniform-binary-2prim");
      r.add("primitive", two.holds(), two.witness ? std::optional<std::string>(two.witness->str()) : std::nullopt);
      if (!two.holds()) outcome.exit_code = exit_code::counterexample;
      return outcome;
    }
    const auto bounded = morphism::is_n_primitive(f, options.depth);
    if (binary) {
      const auto certificate = morphism::certify_primitive_binary_via_tk(f, options.k);
      r.add("method", "tk-certificate");
      r.add("tk_certificate", std::string(morphism::to_string(certificate)));
      r.add("tk_bound", morphism::t_k(options.k));
    } else {
      r.add("method", "bounded");
    }
    add_verdict(r, "n_primitive", bounded);
    if (!bounded.holds()) outcome.exit_code = exit_code::counterexample;
  } else if (options.check == Check::power_free) {
    const auto verdict = morphism::is_k_power_free_up_to(f, options.k, options.depth);
    r.add("k", options.k);
    add_verdict(r, "k_power_free", verdict);
    if (!verdict.holds()) outcome.exit_code = exit_code::counterexample;
  }
  return outcome;
}

Outcome cmd_verify(registry::StatementId id, const registry::VerificationBounds& bounds, bool with_elapsed) {
  registry::StatementVerdict verdict;
  try {
    verdict = registry::verify(id, bounds);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const registry::StatementInfo& entry = registry::info(id);

  Outcome outcome;
  Report& r = outcome.report;
  r.command = "verify";
  r.subject = std::string(registry::to_string(id));
  r.add("claim", std::string(entry.claim));
  r.add("polarity", std::string(registry::to_string(entry.polarity)));
  r.add("status", std::string(registry::to_string(verdict.status)));
  r.add("cases_checked", verdict.cases_checked);
  r.add("bounds_version", registry::kDefaultBoundsVersion);
  r.add("max_word_len", verdict.bounds.max_word_len);
  r.add("max_image_len", verdict.bounds.max_image_len);
  r.add("alphabet_size", verdict.bounds.alphabet_size);
  for (const auto& [name, value] : verdict.bounds.extra) r.add("extra." + name, value);
  if (verdict.witness) {
    for (const auto& [name, value] : *verdict.witness) r.add("witness." + name, value);
  }
  r.add("theorem_violation", verdict.theorem_violation);
  auto notes = nlohmann::ordered_json::array();
  for (const auto& note : verdict.notes) notes.push_back(note);
  r.add("notes", std::move(notes));
  if (with_elapsed) {
    const double seconds = std::chrono::duration<double>(verdict.elapsed).count();
    r.add("elapsed_seconds", seconds);
  }
  outcome.elapsed = verdict.elapsed;
  if (verdict.status != registry::VerdictStatus::pass) outcome.exit_code = exit_code::counterexample;
  return outcome;
}

std::pair<std::string, long long> parse_extra(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw UsageError("--extra expects key=value, got '" + std::string(text) + "'");
  const std::string_view value = text.substr(eq + 1);
  long long parsed = 0;
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc{} || end != value.data() + value.size() || parsed < 0) {
    throw UsageError("--extra value must be a non-negative integer, got '" + std::string(value) + "'");
  }
  return {std::string(text.substr(0, eq)), parsed};
}

}  // namespace primwords::cli
