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

// Pattern similarity and correction scripts.
//
// similarity() is the Ratcliff/Obershelp gestalt ratio 2*M / (|a| + |b|),
// where M counts the characters in the longest matching block, found
// recursively to its left and right. Among equally long blocks the one
// starting earliest in `a` (then in `b`) wins, which reproduces Python's
// difflib.SequenceMatcher(None, a, b).ratio() for inputs shorter than its
// 200-element autojunk threshold.
//
// edit_script() returns a minimal unit-cost Levenshtein script (substitution
// is a Flip) expressed against positions of the observed pattern.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qasida/error.hpp"
#include "qasida/meterdb.hpp"
#include "qasida/pattern.hpp"

namespace qasida {

struct Block {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t size = 0;
};

/// Longest common block of a[alo, ahi) and b[blo, bhi); earliest in a, then
/// in b, on ties.
inline Block find_longest_match(std::string_view a, std::size_t alo, std::size_t ahi,
                                std::string_view b, std::size_t blo, std::size_t bhi) {
  Block best{alo, blo, 0};
  std::vector<std::size_t> prev(bhi - blo + 1, 0), cur(bhi - blo + 1, 0);
  for (std::size_t i = alo; i < ahi; ++i) {
    for (std::size_t j = blo; j < bhi; ++j) {
      const std::size_t col = j - blo + 1;
      if (a[i] == b[j]) {
        const std::size_t k = prev[col - 1] + 1;
        cur[col] = k;
        if (k > best.size) best = Block{i + 1 - k, j + 1 - k, k};
      } else {
        cur[col] = 0;
      }
    }
    std::swap(prev, cur);
  }
  return best;
}

/// Total size of the recursively found matching blocks.
inline std::size_t matching_characters(std::string_view a, std::string_view b) {
  std::size_t total = 0;
  struct Range {
    std::size_t alo, ahi, blo, bhi;
  };
  std::vector<Range> todo{{0, a.size(), 0, b.size()}};
  while (!todo.empty()) {
    const Range r = todo.back();
    todo.pop_back();
    const Block m = find_longest_match(a, r.alo, r.ahi, b, r.blo, r.bhi);
    if (m.size == 0) continue;
    total += m.size;
    if (r.alo < m.a && r.blo < m.b) todo.push_back({r.alo, m.a, r.blo, m.b});
    if (m.a + m.size < r.ahi && m.b + m.size < r.bhi) {
      todo.push_back({m.a + m.size, r.ahi, m.b + m.size, r.bhi});
    }
  }
  return total;
}

inline double similarity(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  return 2.0 * static_cast<double>(matching_characters(a, b)) /
         static_cast<double>(a.size() + b.size());
}

inline double similarity(const BinaryPattern& a, const BinaryPattern& b) {
  return similarity(a.view(), b.view());
}

enum class EditKind { Insert, Delete, Flip };

inline constexpr std::string_view edit_kind_name(EditKind k) noexcept {
  switch (k) {
    case EditKind::Insert: return "insert";
    case EditKind::Delete: return "delete";
    case EditKind::Flip: return "flip";
  }
  return "?";
}

/// Insert places `bit` before observed[position] (position == size appends);
/// Delete removes observed[position]; Flip replaces it with `bit`.
struct EditOp {
  EditKind kind = EditKind::Flip;
  std::size_t position = 0;
  char bit = '\0';  ///< '\0' for Delete

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct EditScript {
  std::vector<EditOp> ops;

  std::size_t size() const noexcept { return ops.size(); }
  bool empty() const noexcept { return ops.empty(); }

  friend bool operator==(const EditScript&, const EditScript&) = default;
};

namespace detail {

// dist[i][j] = edit distance between a[i:] and b[j:], flattened row-major.
inline std::vector<std::size_t> suffix_distances(std::string_view a, std::string_view b) {
  const std::size_t n = a.size(), m = b.size(), w = m + 1;
  std::vector<std::size_t> d((n + 1) * w);
  for (std::size_t j = 0; j <= m; ++j) d[n * w + j] = m - j;
  for (std::size_t i = n; i-- > 0;) {
    d[i * w + m] = n - i;
    for (std::size_t j = m; j-- > 0;) {
      const std::size_t diag = d[(i + 1) * w + j + 1] + (a[i] == b[j] ? 0 : 1);
      const std::size_t del = d[(i + 1) * w + j] + 1;
      const std::size_t ins = d[i * w + j + 1] + 1;
      d[i * w + j] = std::min({diag, del, ins});
    }
  }
  return d;
}

}  // namespace detail

inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  return detail::suffix_distances(a, b)[0];
}

/// Minimal script turning `observed` into `reference`. Walks forward from the
/// start keeping matches, and on ties prefers Flip, then Insert, then Delete,
/// so corrections land as late in the pattern as possible.
inline EditScript edit_script(const BinaryPattern& observed, const BinaryPattern& reference) {
  const std::string_view a = observed.view(), b = reference.view();
  const std::size_t n = a.size(), m = b.size(), w = m + 1;
  const auto d = detail::suffix_distances(a, b);
  EditScript script;
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    const std::size_t here = d[i * w + j];
    if (i < n && j < m && a[i] == b[j] && here == d[(i + 1) * w + j + 1]) {
      ++i;
      ++j;
    } else if (i < n && j < m && here == d[(i + 1) * w + j + 1] + 1) {
      script.ops.push_back({EditKind::Flip, i, b[j]});
      ++i;
      ++j;
    } else if (j < m && here == d[i * w + j + 1] + 1) {
      script.ops.push_back({EditKind::Insert, i, b[j]});
      ++j;
    } else {
      script.ops.push_back({EditKind::Delete, i, '\0'});
      ++i;
    }
  }
  return script;
}

/// Applies a script produced against `observed`. Ops must be ordered by
/// position with inserts before the Delete/Flip at the same position.
/// Throws Error{invalid_position} otherwise.
inline BinaryPattern apply_script(const BinaryPattern& observed, const EditScript& script) {
  const std::string_view a = observed.view();
  std::string out;
  std::size_t next = 0;  // first observed index not yet copied or consumed
  for (std::size_t k = 0; k < script.ops.size(); ++k) {
    const EditOp& op = script.ops[k];
    auto bad = [&](const std::string& why) {
      throw Error(Errc::invalid_position,
                  "op " + std::to_string(k) + " at " + std::to_string(op.position) + ": " + why,
                  {op.position});
    };
    const bool consumes = op.kind != EditKind::Insert;
    if (op.position > a.size() || (consumes && op.position == a.size())) {
      bad("position out of range");
    }
    if (op.position < next) bad("ops out of order");
    if (consumes && op.kind == EditKind::Flip && op.bit == a[op.position]) {
      bad("flip does not change the bit");
    }
    if (op.kind != EditKind::Delete && op.bit != '0' && op.bit != '1') bad("op needs a bit");
    out.append(a.substr(next, op.position - next));
    next = op.position;
    if (op.kind != EditKind::Delete) out.push_back(op.bit);
    if (consumes) ++next;
  }
  out.append(a.substr(next));
  return BinaryPattern(out);
}

struct MatchResult {
  int meter = 0;
  BinaryPattern variant;
  double similarity = 0.0;
  EditScript script;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

namespace detail {

// Best variant of one meter: highest similarity, then fewest edits, then
// enumeration order.
inline MatchResult best_variant(const BinaryPattern& observed, const PatternDB& db, int meter) {
  const auto& variants = db.variants(meter);
  double best_sim = -1.0;
  std::vector<const BinaryPattern*> tied;
  for (const auto& v : variants) {
    const double s = similarity(observed, v);
    if (s > best_sim) {
      best_sim = s;
      tied.assign(1, &v);
    } else if (s == best_sim) {
      tied.push_back(&v);
    }
  }
  const BinaryPattern* pick = tied.front();
  if (tied.size() > 1) {
    std::size_t best_d = levenshtein(observed.view(), pick->view());
    for (const auto* v : tied) {
      const std::size_t dv = levenshtein(observed.view(), v->view());
      if (dv < best_d) {
        best_d = dv;
        pick = v;
      }
    }
  }
  return MatchResult{meter, *pick, best_sim, edit_script(observed, *pick)};
}

inline std::vector<int> resolve_candidates(const PatternDB& db,
                                           std::optional<std::span<const int>> candidates) {
  std::vector<int> out;
  if (!candidates) {
    for (const auto& t : db.templates()) out.push_back(t.index);
    return out;
  }
  for (int m : *candidates) {
    db.meter(m);
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// One result per searched meter (its best variant), sorted by similarity
/// descending then meter index ascending. Throws Error{empty_pattern}.
inline std::vector<MatchResult> best_match(const BinaryPattern& observed, const PatternDB& db,
                                           std::optional<std::span<const int>> candidates = {}) {
  if (observed.empty()) throw Error(Errc::empty_pattern, "observed pattern is empty");
  std::vector<MatchResult> out;
  for (int m : detail::resolve_candidates(db, candidates)) {
    out.push_back(detail::best_variant(observed, db, m));
  }
  std::stable_sort(out.begin(), out.end(), [](const MatchResult& x, const MatchResult& y) {
    if (x.similarity != y.similarity) return x.similarity > y.similarity;
    return x.meter < y.meter;
  });
  return out;
}

inline nlohmann::json to_json(const EditOp& op) {
  nlohmann::json j = {{"kind", edit_kind_name(op.kind)}, {"pos", op.position}};
  if (op.kind != EditKind::Delete) j["bit"] = std::string(1, op.bit);
  return j;
}

inline nlohmann::json to_json(const EditScript& script) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& op : script.ops) arr.push_back(to_json(op));
  return arr;
}

inline nlohmann::json to_json(const MatchResult& r) {
  return {{"meter", r.meter},
          {"variant", r.variant.str()},
          {"similarity", r.similarity},
          {"ops", to_json(r.script)}};
}

}  // namespace qasida
