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

// Rule-based meter identification and the Arudi-style analysis pipeline.
//
// A hemistich's score for a meter is the best gestalt similarity between
// its pattern and any variant of that meter. A poem's meter is decided by
// plurality vote over the hemistich top-1 predictions; ties go to the meter
// with the higher mean top-1 similarity, then to the lower index.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qasida/detail/parallel.hpp"
#include "qasida/error.hpp"
#include "qasida/matcher.hpp"
#include "qasida/meterdb.hpp"
#include "qasida/normalize.hpp"
#include "qasida/poem.hpp"
#include "qasida/scansion.hpp"

namespace qasida {

struct MeterScore {
  int meter = 0;
  double score = 0.0;

  friend bool operator==(const MeterScore&, const MeterScore&) = default;
};

/// Scores sorted non-increasing, ties by ascending meter index.
struct MeterRanking {
  std::vector<MeterScore> entries;

  const MeterScore& top() const { return entries.front(); }
  bool contains_in_top(int meter, std::size_t k) const {
    for (std::size_t i = 0; i < std::min(k, entries.size()); ++i) {
      if (entries[i].meter == meter) return true;
    }
    return false;
  }

  friend bool operator==(const MeterRanking&, const MeterRanking&) = default;
};

/// Throws Error{empty_pattern}.
inline MeterRanking classify_hemistich(const BinaryPattern& pattern, const PatternDB& db,
                                       std::optional<std::span<const int>> candidates = {}) {
  if (pattern.empty()) throw Error(Errc::empty_pattern, "cannot classify an empty pattern");
  MeterRanking r;
  for (int m : detail::resolve_candidates(db, candidates)) {
    double best = 0.0;
    for (const auto& v : db.variants(m)) best = std::max(best, similarity(pattern, v));
    r.entries.push_back({m, best});
  }
  std::stable_sort(r.entries.begin(), r.entries.end(), [](const MeterScore& a, const MeterScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.meter < b.meter;
  });
  return r;
}

struct VoteEntry {
  int meter = 0;
  std::size_t votes = 0;
  double mean_top_similarity = 0.0;  ///< over the hemistiches that voted for it
  double mean_score = 0.0;           ///< over all hemistich rankings

  friend bool operator==(const VoteEntry&, const VoteEntry&) = default;
};

/// Meters ordered by votes, then mean top-1 similarity of their voters, then
/// index. Meters without votes follow, ordered by mean score across all
/// hemistiches (so top-k lists are always k long).
inline std::vector<VoteEntry> vote_ranking(std::span<const MeterRanking> rankings) {
  std::map<int, VoteEntry> tally;
  for (const auto& r : rankings) {
    for (const auto& e : r.entries) {
      auto& v = tally[e.meter];
      v.meter = e.meter;
      v.mean_score += e.score;
    }
    if (r.entries.empty()) continue;
    auto& top = tally[r.top().meter];
    ++top.votes;
    top.mean_top_similarity += r.top().score;
  }
  std::vector<VoteEntry> out;
  for (auto& [m, v] : tally) {
    if (v.votes > 0) v.mean_top_similarity /= static_cast<double>(v.votes);
    if (!rankings.empty()) v.mean_score /= static_cast<double>(rankings.size());
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const VoteEntry& a, const VoteEntry& b) {
    if (a.votes != b.votes) return a.votes > b.votes;
    if (a.votes > 0 && a.mean_top_similarity != b.mean_top_similarity) {
      return a.mean_top_similarity > b.mean_top_similarity;
    }
    if (a.votes == 0 && a.mean_score != b.mean_score) return a.mean_score > b.mean_score;
    return a.meter < b.meter;
  });
  return out;
}

/// Winner of the hemistich vote. Throws Error{no_scannable_verse} when there
/// are no rankings.
inline int majority_vote(std::span<const MeterRanking> rankings) {
  const auto votes = vote_ranking(rankings);
  if (votes.empty() || votes.front().votes == 0) {
    throw Error(Errc::no_scannable_verse, "no hemistich could be classified");
  }
  return votes.front().meter;
}

struct ErrorInfo {
  Errc code = Errc::parse_error;
  std::string message;
  std::vector<std::size_t> positions;

  static ErrorInfo from(const Error& e) { return {e.code(), e.message(), e.positions()}; }
  friend bool operator==(const ErrorInfo&, const ErrorInfo&) = default;
};

struct AnalysisOptions {
  ScanOptions scan;
  std::optional<int> meter_hint;
  unsigned threads = 1;
};

struct HemistichRanking {
  std::size_t hemistich = 0;  ///< index in Poem::hemistiches()
  Scan scan;
  MeterRanking ranking;
};

struct PoemClassification {
  int meter = 0;
  std::vector<HemistichRanking> rankings;  ///< scannable hemistiches only
  std::vector<VoteEntry> votes;
  std::vector<std::pair<std::size_t, ErrorInfo>> skipped;
};

namespace detail {

using ScanOutcome = std::variant<Scan, ErrorInfo>;

inline std::vector<ScanOutcome> scan_all(const std::vector<std::string>& hemistiches,
                                         const ScanOptions& opts, unsigned threads) {
  return parallel_map(hemistiches.size(), threads, [&](std::size_t i) -> ScanOutcome {
    try {
      return scan_hemistich(hemistiches[i], opts);
    } catch (const Error& e) {
      return ErrorInfo::from(e);
    }
  });
}

inline PoemClassification classify_scans(const std::vector<ScanOutcome>& scans,
                                         const PatternDB& db, unsigned threads) {
  PoemClassification out;
  std::vector<std::size_t> ok;
  for (std::size_t i = 0; i < scans.size(); ++i) {
    if (const auto* err = std::get_if<ErrorInfo>(&scans[i])) {
      out.skipped.emplace_back(i, *err);
    } else {
      ok.push_back(i);
    }
  }
  auto rankings = parallel_map(ok.size(), threads, [&](std::size_t k) {
    return classify_hemistich(std::get<Scan>(scans[ok[k]]).pattern, db);
  });
  for (std::size_t k = 0; k < ok.size(); ++k) {
    out.rankings.push_back({ok[k], std::get<Scan>(scans[ok[k]]), std::move(rankings[k])});
  }
  std::vector<MeterRanking> just_rankings;
  for (const auto& h : out.rankings) just_rankings.push_back(h.ranking);
  out.votes = vote_ranking(just_rankings);
  out.meter = majority_vote(just_rankings);
  return out;
}

}  // namespace detail

/// Scans every hemistich and votes. Unscannable hemistiches are skipped and
/// reported; throws Error{no_scannable_verse} when none remain.
inline PoemClassification classify_poem(const Poem& poem, const PatternDB& db,
                                        const ScanOptions& opts = {}, unsigned threads = 1) {
  const auto scans = detail::scan_all(poem.hemistiches(), opts, threads);
  return detail::classify_scans(scans, db, threads);
}

struct Qafiyah {
  std::string rawiy;  ///< the rhyme letter, UTF-8
  std::string tail;   ///< rawiy followed by any stripped trailing letter

  friend bool operator==(const Qafiyah&, const Qafiyah&) = default;
};

/// Rhyme letter of the poem's last hemistich: diacritics are stripped, one
/// trailing alef, alef maqsura, waw, ya or ha is set aside, and the last
/// remaining letter is the rawiy. Throws Error{empty_poem}.
inline Qafiyah extract_qafiyah(const Poem& poem) {
  const auto hs = poem.hemistiches();
  if (hs.empty()) throw Error(Errc::empty_poem, "poem has no hemistich");
  const auto text = strip_diacritics(normalize_unicode(hs.back()));
  std::vector<char32_t> word;
  for (const auto& u : text.units) {
    if (u.is_letter()) {
      word.push_back(u.ch);
    } else if (!word.empty()) {
      word.clear();
    }
  }
  if (word.empty()) {
    // Trailing space or separator: take the last word that has letters.
    for (auto it = text.units.rbegin(); it != text.units.rend(); ++it) {
      if (it->is_letter()) {
        word.insert(word.begin(), it->ch);
      } else if (!word.empty()) {
        break;
      }
    }
  }
  if (word.empty()) throw Error(Errc::empty_poem, "last hemistich has no letters");

  using namespace letters;
  std::u32string tail;
  const char32_t last = word.back();
  if (word.size() > 1 && (last == kAlef || last == kAlefMaqsura || last == kWaw || last == kYa ||
                          last == kHa)) {
    tail.push_back(last);
    word.pop_back();
  }
  tail.insert(tail.begin(), word.back());
  return Qafiyah{detail::to_utf8(word.back()), detail::to_utf8(tail)};
}

struct EraBucket {
  int index = 1;            ///< 1..4
  int lo = 0;               ///< first Hijri year (bucket 1 also holds pre-Islamic)
  std::optional<int> hi;    ///< one past the last year; open for the current era

  friend bool operator==(const EraBucket&, const EraBucket&) = default;
};

/// Half-open Hijri buckets [..,132), [132,232), [232,784), [784,..).
inline EraBucket bucket_era(const EraYear& when) {
  if (std::holds_alternative<PreIslamic>(when)) return {1, 0, 132};
  const int y = std::get<int>(when);
  if (y < 132) return {1, 0, 132};
  if (y < 232) return {2, 132, 232};
  if (y < 784) return {3, 232, 784};
  return {4, 784, std::nullopt};
}

enum class ThemeLabel { Elegy, Lampoon, Praise, Romantic, Unknown };

inline constexpr std::string_view theme_label_name(ThemeLabel t) noexcept {
  switch (t) {
    case ThemeLabel::Elegy: return "elegy";
    case ThemeLabel::Lampoon: return "lampoon";
    case ThemeLabel::Praise: return "praise";
    case ThemeLabel::Romantic: return "romantic";
    case ThemeLabel::Unknown: return "unknown";
  }
  return "unknown";
}

inline std::optional<ThemeLabel> parse_theme_label(std::string_view s) noexcept {
  for (auto t : {ThemeLabel::Elegy, ThemeLabel::Lampoon, ThemeLabel::Praise, ThemeLabel::Romantic,
                 ThemeLabel::Unknown}) {
    if (theme_label_name(t) == s) return t;
  }
  return std::nullopt;
}

struct HemistichAnalysis {
  std::string text;
  std::optional<double> coverage;
  std::optional<Scan> scan;
  std::optional<MatchResult> match;
  std::optional<ErrorInfo> error;
};

struct Analysis {
  std::optional<int> meter;
  std::optional<Qafiyah> qafiyah;
  std::vector<HemistichAnalysis> hemistiches;
  std::vector<std::string> warnings;

  bool any_scanned() const {
    return std::any_of(hemistiches.begin(), hemistiches.end(),
                       [](const HemistichAnalysis& h) { return h.match.has_value(); });
  }
};

/// Full Arudi-style analysis: scan each hemistich, decide the poem meter (or
/// take the hint), then match each pattern against that meter's variants.
/// Hemistiches that fail to scan keep their error and the rest proceed.
inline Analysis predict_arudi(const Poem& poem, const PatternDB& db,
                              const AnalysisOptions& opts = {}) {
  Analysis out;
  const auto texts = poem.hemistiches();
  const auto scans = detail::scan_all(texts, opts.scan, opts.threads);

  std::optional<int> meter = opts.meter_hint;
  if (meter) {
    db.meter(*meter);
  } else {
    try {
      meter = detail::classify_scans(scans, db, opts.threads).meter;
    } catch (const Error& e) {
      if (e.code() != Errc::no_scannable_verse) throw;
    }
  }
  out.meter = meter;

  for (std::size_t i = 0; i < texts.size(); ++i) {
    HemistichAnalysis h;
    h.text = texts[i];
    try {
      h.coverage = diacritic_coverage(normalize_unicode(texts[i])).value;
    } catch (const Error&) {
    }
    if (const auto* err = std::get_if<ErrorInfo>(&scans[i])) {
      h.error = *err;
      out.warnings.push_back("hemistich " + std::to_string(i) + ": " + std::string(errc_name(err->code)) +
                             ": " + err->message);
    } else {
      h.scan = std::get<Scan>(scans[i]);
    }
    out.hemistiches.push_back(std::move(h));
  }

  if (meter) {
    const int only[] = {*meter};
    auto matches = detail::parallel_map(texts.size(), opts.threads,
                                        [&](std::size_t i) -> std::optional<MatchResult> {
                                          const auto& h = out.hemistiches[i];
                                          if (!h.scan) return std::nullopt;
                                          return best_match(h.scan->pattern, db, only).front();
                                        });
    for (std::size_t i = 0; i < texts.size(); ++i) out.hemistiches[i].match = std::move(matches[i]);
  }

  try {
    out.qafiyah = extract_qafiyah(poem);
  } catch (const Error& e) {
    out.warnings.push_back(std::string("qafiyah: ") + e.what());
  }
  return out;
}

inline nlohmann::json to_json(const ErrorInfo& e) {
  return {{"code", errc_name(e.code)}, {"message", e.message}, {"positions", e.positions}};
}

inline nlohmann::json to_json(const Scan& s) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& t : s.trace) {
    trace.push_back({{"bit", std::string(1, t.bit)},
                     {"letter", t.source_letter},
                     {"rule", rule_name(t.rule)},
                     {"offset", t.offset}});
  }
  return {{"pattern", s.pattern.str()}, {"trace", trace}};
}

inline nlohmann::json to_json(const Qafiyah& q) { return {{"rawiy", q.rawiy}, {"tail", q.tail}}; }

inline nlohmann::json to_json(const Analysis& a, const PatternDB& db) {
  nlohmann::json j;
  if (a.meter) {
    const auto& t = db.meter(*a.meter);
    j["meter"] = {{"index", t.index}, {"name", t.name_translit}, {"name_ar", t.name_ar}};
  } else {
    j["meter"] = nullptr;
  }
  j["qafiyah"] = a.qafiyah ? to_json(*a.qafiyah) : nlohmann::json(nullptr);
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : a.hemistiches) {
    nlohmann::json jh = {{"text", h.text}};
    jh["coverage"] = h.coverage ? nlohmann::json(*h.coverage) : nlohmann::json(nullptr);
    if (h.scan) {
      const auto js = to_json(*h.scan);
      jh["pattern"] = js["pattern"];
      jh["trace"] = js["trace"];
    } else {
      jh["pattern"] = nullptr;
      jh["trace"] = nlohmann::json::array();
    }
    if (h.match) {
      jh["variant"] = h.match->variant.str();
      jh["similarity"] = h.match->similarity;
      jh["ops"] = to_json(h.match->script);
    } else {
      jh["variant"] = nullptr;
      jh["similarity"] = nullptr;
      jh["ops"] = nlohmann::json::array();
    }
    if (h.error) jh["error"] = to_json(*h.error);
    hs.push_back(std::move(jh));
  }
  j["hemistiches"] = std::move(hs);
  j["warnings"] = a.warnings;
  return j;
}

}  // namespace qasida
