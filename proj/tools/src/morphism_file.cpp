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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "primwords/cli/cli.hpp"

namespace primwords::cli {

namespace {

constexpr std::string_view kSpace = " \t\r\f\v";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

bool is_letter(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::string at_line(std::size_t line) { return " at line " + std::to_string(line); }

std::string quoted(char c) { return std::string("'") + c + "'"; }

struct Rule {
  char head;
  std::string image;
  std::size_t line;
};

struct Header {
  std::string letters;
  std::size_t line = 0;
};

Alphabet header_alphabet(const Header& h, std::string_view name) {
  try {
    return Alphabet(h.letters);
  } catch (const std::invalid_argument& e) {
    throw ParseError("bad " + std::string(name) + " header: " + e.what() + at_line(h.line), h.line);
  }
}

Alphabet inferred_alphabet(const std::set<char>& letters) {
  return Alphabet(std::string(letters.begin(), letters.end()));
}

}  // namespace

MorphismFile parse_morphism_file(std::string_view text, std::string path) {
  std::optional<Header> source_header;
  std::optional<Header> target_header;
  std::vector<Rule> rules;
  std::map<char, std::size_t> heads;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("source:") || line.starts_with("target:")) {
      const bool is_source = line.front() == 's';
      auto& slot = is_source ? source_header : target_header;
      if (slot) {
        throw ParseError(std::string("duplicate ") + (is_source ? "source" : "target") + " header" + at_line(line_no),
                         line_no);
      }
      std::string letters;
      for (char c : line.substr(7)) {
        if (kSpace.find(c) == std::string_view::npos) letters += c;
      }
      slot = Header{letters, line_no};
      continue;
    }

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError("malformed line" + at_line(line_no), line_no);
    const std::string_view head = trim(line.substr(0, arrow));
    const std::string_view image = trim(line.substr(arrow + 2));
    if (head.size() != 1 || !is_letter(head.front())) {
      throw ParseError("malformed rule head '" + std::string(head) + "'" + at_line(line_no), line_no);
    }
    if (!std::all_of(image.begin(), image.end(), is_letter)) {
      throw ParseError("malformed image '" + std::string(image) + "'" + at_line(line_no), line_no);
    }
    if (auto [it, inserted] = heads.emplace(head.front(), line_no); !inserted) {
      throw ParseError("duplicate head " + quoted(head.front()) + at_line(line_no), line_no);
    }
    rules.push_back({head.front(), std::string(image), line_no});
  }

  if (rules.empty()) throw ParseError("no rules", 0);

  std::set<char> head_letters;
  std::set<char> image_letters;
  for (const Rule& r : rules) {
    head_letters.insert(r.head);
    image_letters.insert(r.image.begin(), r.image.end());
  }
  const Alphabet source = source_header ? header_alphabet(*source_header, "source") : inferred_alphabet(head_letters);
  if (!target_header && image_letters.empty()) {
    throw ParseError("cannot infer the target alphabet: every image is empty", 0);
  }
  const Alphabet target = target_header ? header_alphabet(*target_header, "target") : inferred_alphabet(image_letters);

  std::vector<std::optional<Word>> images(source.size());
  for (const Rule& r : rules) {
    const auto index = source.index_of(r.head);
    if (!index) throw ParseError("letter " + quoted(r.head) + " not in source alphabet" + at_line(r.line), r.line);
    for (char c : r.image) {
      if (!target.contains(c)) {
        throw ParseError("letter " + quoted(c) + " not in target alphabet" + at_line(r.line), r.line);
      }
    }
    images[*index] = Word::parse(target, r.image);
  }
  std::vector<Word> ordered;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw ParseError("missing rule for source letter " + quoted(source.letter(i)), 0);
    ordered.push_back(std::move(*images[i]));
  }
  return MorphismFile{std::move(path), morphism::Morphism(source, target, std::move(ordered)), source, target};
}

MorphismFile load_morphism_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string(), 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_morphism_file(buffer.str(), path.string());
}

std::string serialize_morphism_file(const MorphismFile& file) {
  const auto& f = file.parsed;
  std::string out = "source: " + std::string(f.source().letters()) + "\ntarget: " +
                    std::string(f.target().letters()) + "\n";
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    const std::string image = f.image(static_cast<Symbol>(i)).str();
    out += f.source().letter(i);
    out += image.empty() ? " ->\n" : " -> " + image + "\n";
  }
  return out;
}

}  // namespace primwords::cli
