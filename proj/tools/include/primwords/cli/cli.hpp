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
// Command-line frontend: the morphism file format, report rendering and the
// word / morphism / verify / catalog commands. Everything here is callable
// without a process boundary so the tests can drive it directly.

#ifndef PRIMWORDS_CLI_CLI_HPP
#define PRIMWORDS_CLI_CLI_HPP

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "primwords/morphism.hpp"
#include "primwords/registry.hpp"

namespace primwords::cli {

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int counterexample = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

/// Thrown for malformed morphism files. line() is 0 for whole-file errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line) : std::runtime_error(message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct MorphismFile {
  std::string path;
  morphism::Morphism parsed;
  Alphabet declared_source;
  Alphabet declared_target;
};

/// Grammar, one item per line:
///   source: <letters>      optional; otherwise the sorted rule heads
///   target: <letters>      optional; otherwise the sorted image letters
///   <letter> -> <word>     empty <word> is the empty image
/// `#` starts a comment; blank lines are ignored.
MorphismFile parse_morphism_file(std::string_view text, std::string path = {});

/// Reads and parses `path`. Unreadable files raise ParseError with line 0.
MorphismFile load_morphism_file(const std::filesystem::path& path);

/// Canonical text form: both headers, then one rule per source letter.
std::string serialize_morphism_file(const MorphismFile& file);

struct Finding {
  std::string key;
  nlohmann::ordered_json value;
  std::optional<std::string> witness;
};

struct Report {
  static constexpr int kFormatVersion = 1;

  std::string command;
  std::string subject;
  std::vector<Finding> findings;
  int format_version = kFormatVersion;

  void add(std::string key, nlohmann::ordered_json value, std::optional<std::string> witness = std::nullopt);
  /// First finding with `key`, if any.
  const Finding* find(std::string_view key) const;

  /// Aligned `key: value` lines; a witness gets its own `<key>.witness` line.
  std::string render_text() const;
  /// Single JSON object, keys in insertion order, two-space indent.
  std::string render_json() const;
};

struct Outcome {
  Report report;
  int exit_code = exit_code::pass;
  /// Wall time of the verifier, for verify only.
  std::chrono::nanoseconds elapsed{0};
};

/// Thrown by the commands for bad arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Keys: primitive, root, exponent, borders, max_power, unbordered_conjugate.
Outcome cmd_word(std::string_view text);

enum class Check { profile, primitive, power_free };

struct MorphismOptions {
  Check check = Check::profile;
  std::size_t k = 2;
  std::size_t depth = 8;
};

/// Profile keys: uniform_length, erasing, prefix, suffix, bifixe,
/// ps_morphism, injective. The primitive check adds method, primitive and,
/// depending on the method, tk_certificate and n_primitive; the power-free
/// check adds k_power_free.
Outcome cmd_morphism(const MorphismFile& file, const MorphismOptions& options);

/// Elapsed time is added as a finding only when `with_elapsed` is set, so
/// machine-readable reports stay byte-identical across runs.
Outcome cmd_verify(registry::StatementId id, const registry::VerificationBounds& bounds, bool with_elapsed);

/// Parses `key=value` with a non-negative integer value.
std::pair<std::string, long long> parse_extra(std::string_view text);

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace primwords::cli

#endif  // PRIMWORDS_CLI_CLI_HPP
