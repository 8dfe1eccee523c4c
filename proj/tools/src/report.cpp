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

#include "primwords/cli/cli.hpp"

namespace primwords::cli {

namespace {

std::string plain(const nlohmann::ordered_json& value) {
  if (value.is_null()) return "-";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i > 0) out += ", ";
      out += plain(value[i]);
    }
    return out + "]";
  }
  return value.dump();
}

}  // namespace

void Report::add(std::string key, nlohmann::ordered_json value, std::optional<std::string> witness) {
  findings.push_back({std::move(key), std::move(value), std::move(witness)});
}

const Finding* Report::find(std::string_view key) const {
  auto it = std::find_if(findings.begin(), findings.end(), [&](const Finding& f) { return f.key == key; });
  return it == findings.end() ? nullptr : &*it;
}

std::string Report::render_text() const {
  std::vector<std::pair<std::string, std::string>> rows{{"subject", subject}};
  for (const Finding& f : findings) {
    rows.emplace_back(f.key, plain(f.value));
    if (f.witness) rows.emplace_back(f.key + ".witness", *f.witness);
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::string out;
  for (const auto& [key, value] : rows) {
    out += key + ":" + std::string(width - key.size() + 1, ' ') + value + "\n";
  }
  return out;
}

std::string Report::render_json() const {
  nlohmann::ordered_json doc;
  doc["format_version"] = format_version;
  doc["command"] = command;
  doc["subject"] = subject;
  auto& list = doc["findings"] = nlohmann::ordered_json::array();
  for (const Finding& f : findings) {
    nlohmann::ordered_json item;
    item["key"] = f.key;
    item["value"] = f.value;
    if (f.witness) item["witness"] = *f.witness;
    list.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

}  // namespace primwords::cli
