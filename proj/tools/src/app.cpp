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

#include <CLI11.hpp>

#include <chrono>
#include <map>
#include <ostream>

#include "primwords/cli/cli.hpp"

namespace primwords::cli {

namespace {

void emit(const Outcome& outcome, bool json, std::ostream& out) {
  out << (json ? outcome.report.render_json() : outcome.report.render_text());
}

void list_catalog(std::ostream& os) {
  std::size_t width = 0;
  for (const auto& entry : registry::catalog()) width = std::max(width, registry::to_string(entry.id).size());
  for (const auto& entry : registry::catalog()) {
    const auto id = registry::to_string(entry.id);
    os << "  " << id << std::string(width - id.size() + 2, ' ') << registry::to_string(entry.polarity) << "\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive words, word equations and primitivity-preserving morphisms", "primwords"};
  app.require_subcommand(1);
  bool json = false;

  std::string word_text;
  auto* word = app.add_subcommand("word", "Analyse a single word (alphabet: its sorted distinct letters)");
  word->add_option("word", word_text, "The word")->required();
  word->add_flag("--json", json, "Machine-readable output");

  std::string morphism_path;
  std::string check_name = "profile";
  MorphismOptions morphism_options;
  auto* morph = app.add_subcommand("morphism", "Analyse a morphism given in a file");
  morph->add_option("file", morphism_path, "Morphism file")->required();
  morph->add_option("--check", check_name, "profile, primitive or power-free")
      ->check(CLI::IsMember({"profile", "primitive", "power-free"}));
  morph->add_option("--k", morphism_options.k, "Power bound for power-free and t_k checks")->capture_default_str();
  morph->add_option("--depth", morphism_options.depth, "Length bound for exhaustive checks")->capture_default_str();
  morph->add_flag("--json", json, "Machine-readable output");

  std::string statement;
  std::optional<std::size_t> max_word_len, max_image_len, alphabet_size;
  std::vector<std::string> extras;
  auto* verify = app.add_subcommand("verify", "Run a bounded verifier from the statement catalog");
  verify->add_option("statement", statement, "Statement id (see `primwords catalog`)")->required();
  verify->add_option("--max-word-len", max_word_len, "Override the word length bound");
  verify->add_option("--max-image-len", max_image_len, "Override the image length bound");
  verify->add_option("--alphabet-size", alphabet_size, "Override the alphabet size (2 or 3)");
  verify->add_option("--extra", extras, "Statement-specific knob, key=value (repeatable)");
  verify->add_flag("--json", json, "Machine-readable output; elapsed time goes to stderr");

  bool markdown = false;
  auto* catalog = app.add_subcommand("catalog", "List the statement catalog");
  catalog->add_flag("--markdown", markdown, "Print the full reference page");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::pass : exit_code::usage;
  }

  try {
    if (*word) {
      const Outcome outcome = cmd_word(word_text);
      emit(outcome, json, out);
      return outcome.exit_code;
    }
    if (*morph) {
      static const std::map<std::string, Check> checks{
          {"profile", Check::profile}, {"primitive", Check::primitive}, {"power-free", Check::power_free}};
      morphism_options.check = checks.at(check_name);
      const Outcome outcome = cmd_morphism(load_morphism_file(morphism_path), morphism_options);
      emit(outcome, json, out);
      return outcome.exit_code;
    }
    if (*verify) {
      const auto id = registry::parse_statement_id(statement);
      if (!id) {
        err << "unknown statement '" << statement << "'; known statements:\n";
        list_catalog(err);
        return exit_code::usage;
      }
      registry::VerificationBounds bounds = registry::default_bounds(*id);
      if (max_word_len) bounds.max_word_len = *max_word_len;
      if (max_image_len) bounds.max_image_len = *max_image_len;
      if (alphabet_size) bounds.alphabet_size = *alphabet_size;
      for (const auto& text : extras) {
        auto [key, value] = parse_extra(text);
        bounds.extra[key] = value;
      }
      const Outcome outcome = cmd_verify(*id, bounds, !json);
      emit(outcome, json, out);
      if (json) err << "elapsed_seconds: " << std::chrono::duration<double>(outcome.elapsed).count() << "\n";
      return outcome.exit_code;
    }
    if (*catalog) {
      if (markdown) {
        out << registry::catalog_reference();
      } else {
        list_catalog(out);
      }
      return exit_code::pass;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  return exit_code::usage;
}

}  // namespace primwords::cli
