// Copyright 2026 The Qasida Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qasida {

struct PreIslamic {
  friend bool operator==(PreIslamic, PreIslamic) = default;
};

/// Hijri year of composition, or the pre-Islamic marker.
using EraYear = std::variant<PreIslamic, int>;

/// A bait is normally two hemistiches; malformed input may carry one (or
/// more), which cleaning rejects.
using Bait = std::vector<std::string>;

struct Poem {
  std::string id;
  std::string poet;
  std::optional<std::string> title;
  std::optional<EraYear> era;
  std::optional<int> theme;  ///< theme token id 0..17
  std::optional<int> meter;  ///< meter index; out-of-range labels survive loading
  std::vector<Bait> baits;
  nlohmann::json extra = nlohmann::json::object();  ///< unknown JSONL fields

  std::vector<std::string> hemistiches() const {
    std::vector<std::string> out;
    for (const auto& b : baits) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  std::size_t hemistich_count() const {
    std::size_t n = 0;
    for (const auto& b : baits) n += b.size();
    return n;
  }

  friend bool operator==(const Poem&, const Poem&) = default;
};

/// Plain-text poem: one bait per line, hemistiches separated by '#'. Blank
/// lines are skipped.
inline Poem parse_poem_text(std::string_view text) {
  Poem p;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      Bait bait;
      std::size_t from = 0;
      while (true) {
        const std::size_t hash = line.find('#', from);
        bait.emplace_back(line.substr(from, hash == std::string_view::npos ? line.npos : hash - from));
        if (hash == std::string_view::npos) break;
        from = hash + 1;
      }
      for (auto& h : bait) {
        const auto b = h.find_first_not_of(" \t");
        const auto e = h.find_last_not_of(" \t");
        h = b == std::string::npos ? std::string{} : h.substr(b, e - b + 1);
      }
      p.baits.push_back(std::move(bait));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return p;
}

}  // namespace qasida
