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

// Evaluation metrics.
//
// A letter is scored when gold marks it; it is wrong when the predicted mark
// set differs. DER is wrong / scored, WER is words with a wrong letter over
// words with a scored letter. The starred variants drop each word's last
// scored letter (its case ending) from both counts.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qasida/classify.hpp"
#include "qasida/detail/parallel.hpp"
#include "qasida/error.hpp"
#include "qasida/matcher.hpp"
#include "qasida/meterdb.hpp"
#include "qasida/normalize.hpp"
#include "qasida/pattern.hpp"
#include "qasida/poem.hpp"

namespace qasida {

struct DiacritizationScore {
  double der = 0.0;
  double wer = 0.0;
  double der_star = 0.0;
  double wer_star = 0.0;
};

/// Raw counts; sums over lines give corpus-level scores.
struct DiacritizationCounts {
  std::size_t letter_errors = 0, letters = 0;
  std::size_t word_errors = 0, words = 0;
  std::size_t letter_errors_star = 0, letters_star = 0;
  std::size_t word_errors_star = 0, words_star = 0;

  DiacritizationCounts& operator+=(const DiacritizationCounts& o) {
    letter_errors += o.letter_errors;
    letters += o.letters;
    word_errors += o.word_errors;
    words += o.words;
    letter_errors_star += o.letter_errors_star;
    letters_star += o.letters_star;
    word_errors_star += o.word_errors_star;
    words_star += o.words_star;
    return *this;
  }

  DiacritizationScore score() const {
    auto pct = [](std::size_t n, std::size_t d) {
      return d == 0 ? 0.0 : 100.0 * static_cast<double>(n) / static_cast<double>(d);
    };
    return {pct(letter_errors, letters), pct(word_errors, words),
            pct(letter_errors_star, letters_star), pct(word_errors_star, words_star)};
  }

  friend bool operator==(const DiacritizationCounts&, const DiacritizationCounts&) = default;
};

/// Throws Error{letter_mismatch} when the undiacritized texts differ.
inline DiacritizationCounts diacritization_counts(const NormalizedText& gold,
                                                  const NormalizedText& pred) {
  if (strip_diacritics(gold) != strip_diacritics(pred)) {
    throw Error(Errc::letter_mismatch, "gold and predicted letters differ");
  }
  DiacritizationCounts c;
  const auto& g = gold.units;
  const auto& p = pred.units;
  std::size_t i = 0;
  while (i < g.size()) {
    if (!g[i].is_letter()) {
      ++i;
      continue;
    }
    std::vector<bool> wrong;  // per scored letter of this word
    for (; i < g.size() && g[i].is_letter(); ++i) {
      if (g[i].marks.empty()) continue;
      wrong.push_back(!(g[i].marks == p[i].marks));
    }
    if (wrong.empty()) continue;
    const auto errs = static_cast<std::size_t>(std::count(wrong.begin(), wrong.end(), true));
    c.letters += wrong.size();
    c.letter_errors += errs;
    ++c.words;
    c.word_errors += errs > 0;
    if (wrong.size() > 1) {
      const std::size_t errs_star = errs - (wrong.back() ? 1 : 0);
      c.letters_star += wrong.size() - 1;
      c.letter_errors_star += errs_star;
      ++c.words_star;
      c.word_errors_star += errs_star > 0;
    }
  }
  return c;
}

inline DiacritizationScore der_wer(const NormalizedText& gold, const NormalizedText& pred) {
  return diacritization_counts(gold, pred).score();
}

/// Corpus-level scores over aligned line pairs.
inline DiacritizationScore der_wer(std::span<const NormalizedText> golds,
                                   std::span<const NormalizedText> preds) {
  if (golds.size() != preds.size()) {
    throw Error(Errc::length_mismatch, "gold and prediction counts differ");
  }
  DiacritizationCounts total;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    try {
      total += diacritization_counts(golds[i], preds[i]);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(i + 1) + ": " + e.message(), {i + 1});
    }
  }
  return total.score();
}

inline nlohmann::json to_json(const DiacritizationScore& s) {
  return {{"der", s.der}, {"wer", s.wer}, {"der_star", s.der_star}, {"wer_star", s.wer_star}};
}

/// Rows are gold labels, columns predicted labels.
struct ConfusionMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> counts;

  std::size_t index_of(const std::string& label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw Error(Errc::validation_error, "unknown label " + label);
    return static_cast<std::size_t>(it - labels.begin());
  }
  std::size_t at(const std::string& gold, const std::string& pred) const {
    return counts[index_of(gold)][index_of(pred)];
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& r : counts) {
      for (std::size_t v : r) t += v;
    }
    return t;
  }

  /// Header row and first column hold label names.
  std::string to_csv() const {
    auto field = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char c : s) {
        if (c == '"') q.push_back('"');
        q.push_back(c);
      }
      return q + "\"";
    };
    std::string out = "gold\\pred";
    for (const auto& l : labels) out += "," + field(l);
    out += "\n";
    for (std::size_t r = 0; r < labels.size(); ++r) {
      out += field(labels[r]);
      for (std::size_t v : counts[r]) out += "," + std::to_string(v);
      out += "\n";
    }
    return out;
  }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

/// Label order is `labels` when given (extended by unseen labels in sorted
/// order), otherwise the sorted union. Throws Error{length_mismatch}.
inline ConfusionMatrix confusion(std::span<const std::string> golds,
                                 std::span<const std::string> preds,
                                 std::vector<std::string> labels = {}) {
  if (golds.size() != preds.size()) {
    throw Error(Errc::length_mismatch, "gold and prediction counts differ");
  }
  std::vector<std::string> extra;
  for (const auto* side : {&golds, &preds}) {
    for (const auto& l : *side) {
      if (std::find(labels.begin(), labels.end(), l) == labels.end()) extra.push_back(l);
    }
  }
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  labels.insert(labels.end(), extra.begin(), extra.end());

  ConfusionMatrix m;
  m.labels = std::move(labels);
  m.counts.assign(m.labels.size(), std::vector<std::size_t>(m.labels.size(), 0));
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < m.labels.size(); ++i) idx[m.labels[i]] = i;
  for (std::size_t i = 0; i < golds.size(); ++i) ++m.counts[idx[golds[i]]][idx[preds[i]]];
  return m;
}

inline nlohmann::json to_json(const ConfusionMatrix& m) {
  return {{"labels", m.labels}, {"counts", m.counts}};
}

struct RhythmReport {
  double accuracy = 0.0;
  double top3 = 0.0;
  double top5 = 0.0;
  ConfusionMatrix confusion;  ///< over poems that could be scanned
  std::size_t poems = 0;
  std::size_t failures = 0;   ///< unscannable poems, counted as wrong
};

struct RhythmItem {
  int intended_meter = 0;
  Poem poem;
};

/// Top-k is judged against the hemistich vote ranking of each poem.
inline RhythmReport rhythm_eval(std::span<const RhythmItem> items, const PatternDB& db,
                                const ScanOptions& opts = {}, unsigned threads = 1) {
  struct Outcome {
    std::optional<std::vector<VoteEntry>> votes;
  };
  auto outcomes = detail::parallel_map(items.size(), threads, [&](std::size_t i) {
    Outcome o;
    try {
      o.votes = classify_poem(items[i].poem, db, opts).votes;
    } catch (const Error& e) {
      if (e.code() != Errc::no_scannable_verse) throw;
    }
    return o;
  });

  RhythmReport r;
  r.poems = items.size();
  std::size_t hit1 = 0, hit3 = 0, hit5 = 0;
  std::vector<std::string> golds, preds, labels;
  for (const auto& m : meters(db)) labels.push_back(m.name);
  auto name = [&](int m) { return db.meter(m).name_translit; };
  for (std::size_t i = 0; i < items.size(); ++i) {
    const int want = items[i].intended_meter;
    db.meter(want);
    if (!outcomes[i].votes) {
      ++r.failures;
      continue;
    }
    const auto& v = *outcomes[i].votes;
    auto in_top = [&](std::size_t k) {
      for (std::size_t j = 0; j < std::min(k, v.size()); ++j) {
        if (v[j].meter == want) return true;
      }
      return false;
    };
    hit1 += in_top(1);
    hit3 += in_top(3);
    hit5 += in_top(5);
    golds.push_back(name(want));
    preds.push_back(name(v.front().meter));
  }
  auto pct = [&](std::size_t n) {
    return r.poems == 0 ? 0.0 : 100.0 * static_cast<double>(n) / static_cast<double>(r.poems);
  };
  r.accuracy = pct(hit1);
  r.top3 = pct(hit3);
  r.top5 = pct(hit5);
  r.confusion = confusion(golds, preds, labels);
  return r;
}

inline nlohmann::json to_json(const RhythmReport& r) {
  return {{"accuracy", r.accuracy}, {"top3", r.top3},         {"top5", r.top5},
          {"poems", r.poems},       {"failures", r.failures}, {"confusion", to_json(r.confusion)}};
}

struct ArudiReport {
  double mean_similarity = 0.0;  ///< percent
  double exact_match = 0.0;      ///< percent
};

/// Throws Error{length_mismatch} or Error{empty_input}.
inline ArudiReport arudi_report(std::span<const BinaryPattern> golds,
                                std::span<const BinaryPattern> preds) {
  if (golds.size() != preds.size()) {
    throw Error(Errc::length_mismatch, "gold and prediction counts differ");
  }
  if (golds.empty()) throw Error(Errc::empty_input, "no patterns to compare");
  double sum = 0.0;
  std::size_t exact = 0;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const double s = similarity(golds[i], preds[i]);
    sum += s;
    exact += s == 1.0;
  }
  const auto n = static_cast<double>(golds.size());
  return {100.0 * sum / n, 100.0 * static_cast<double>(exact) / n};
}

inline nlohmann::json to_json(const ArudiReport& r) {
  return {{"mean_similarity", r.mean_similarity}, {"exact_match", r.exact_match}};
}

}  // namespace qasida
