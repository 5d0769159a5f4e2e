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

// Scansion: diacritized hemistich -> Arudi (phonetic) writing -> binary
// harakah/sukun pattern.
//
// The phonetic rewrite applies a fixed rule set. Every emitted bit records
// the rule that decided it:
//
//   R1  letter kept as written (after Unicode normalization)
//   R2  shadda: the letter is doubled, first copy quiescent, second copy
//       takes the co-occurring vowel (fatha when none is written)
//   R3  tanween: plain vowel plus an appended quiescent nun; a silent alef
//       or alef maqsura after fathatan is dropped, and fathatan written on
//       a word-final alef moves to the letter before it
//   R4  unmarked letters are quiescent. This covers madd letters (alef,
//       alef maqsura, waw/ya after their vowel) and any letter the
//       diacritization left bare. Alef madda reads as hamza-fatha + alef,
//       and the silent alef after a word-final waw is dropped.
//   R5  word-initial connective alef: kept with a vowel at the start of the
//       hemistich, dropped elsewhere. When it drops, a preceding madd
//       letter is shortened away and a preceding consonant with sukun takes
//       a kasra (two quiescent letters never meet).
//   R6  definite article lam: kept quiescent, or dropped when unmarked
//       before a letter with written shadda (sun letter)
//   R7  hemistich-final vowel is lengthened with a quiescent madd letter

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qasida/error.hpp"
#include "qasida/normalize.hpp"
#include "qasida/pattern.hpp"

namespace qasida {

enum class Rule : std::uint8_t { R1 = 1, R2, R3, R4, R5, R6, R7 };

inline constexpr std::string_view rule_name(Rule r) noexcept {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
    case Rule::R6: return "R6";
    case Rule::R7: return "R7";
  }
  return "?";
}

struct ScanOptions {
  /// Minimum diacritic coverage for a hemistich to be scanned.
  double min_coverage = 0.95;
  /// Apply R7. Disabled when scanning an isolated foot rather than a
  /// hemistich.
  bool final_lengthening = true;
};

struct Provenance {
  std::size_t source_letter = 0;  ///< index among the letters of the input
  Rule rule = Rule::R1;
};

/// Arudi writing plus per-unit provenance (`provenance[i]` belongs to
/// `text.units[i]`; entries for spaces are unused).
struct ArudiWriting {
  NormalizedText text;
  std::vector<Provenance> provenance;
};

struct TraceEntry {
  char bit = '0';
  std::size_t source_letter = 0;
  Rule rule = Rule::R1;
  std::size_t offset = 0;  ///< byte offset of the source letter in the raw input

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

using ScansionTrace = std::vector<TraceEntry>;

struct Scan {
  BinaryPattern pattern;
  ScansionTrace trace;

  friend bool operator==(const Scan&, const Scan&) = default;
};

namespace detail {

struct SourceLetter {
  char32_t ch;
  MarkSet marks;
  std::size_t index;
  std::size_t offset;
};

class ArudiBuilder {
 public:
  void emit(char32_t ch, std::optional<DiacriticMark> vowel, const SourceLetter& src, Rule rule) {
    MarkSet m;
    m.set_vowel(vowel);
    out_.text.units.push_back(Unit{ch, m, src.offset});
    out_.provenance.push_back(Provenance{src.index, rule});
  }

  void space() {
    if (!out_.text.units.empty() && !out_.text.units.back().is_space()) {
      out_.text.units.push_back(Unit{U' ', {}, 0});
      out_.provenance.push_back(Provenance{});
    }
  }

  /// Index of the most recent letter unit, if any.
  std::optional<std::size_t> last_letter() const {
    for (std::size_t i = out_.text.units.size(); i-- > 0;) {
      if (out_.text.units[i].is_letter()) return i;
    }
    return std::nullopt;
  }

  Unit& unit(std::size_t i) { return out_.text.units[i]; }
  Provenance& provenance(std::size_t i) { return out_.provenance[i]; }

  void erase(std::size_t i) {
    out_.text.units.erase(out_.text.units.begin() + static_cast<std::ptrdiff_t>(i));
    out_.provenance.erase(out_.provenance.begin() + static_cast<std::ptrdiff_t>(i));
  }

  ArudiWriting take() {
    while (!out_.text.units.empty() && out_.text.units.back().is_space()) {
      out_.text.units.pop_back();
      out_.provenance.pop_back();
    }
    return std::move(out_);
  }

 private:
  ArudiWriting out_;
};

inline bool is_madd_letter(char32_t ch) noexcept {
  using namespace letters;
  return ch == kAlef || ch == kAlefMaqsura || ch == kWaw || ch == kYa;
}

inline DiacriticMark wasl_vowel(const std::vector<SourceLetter>& word) {
  const auto v = word[0].marks.vowel();
  if (v && is_harakah(*v)) return base_vowel(*v);
  return word[1].ch == letters::kLam ? DiacriticMark::Fatha : DiacriticMark::Kasra;
}

// R5 applied to a non-initial word: the connective alef vanishes and the
// previous word's ending is adjusted.
inline void elide_into_previous(ArudiBuilder& b) {
  const auto prev = b.last_letter();
  if (!prev) return;
  auto& u = b.unit(*prev);
  if (u.marks.vowel() != DiacriticMark::Sukun) return;
  if (b.provenance(*prev).rule == Rule::R4 && is_madd_letter(u.ch)) {
    b.erase(*prev);
  } else {
    u.marks.set_vowel(DiacriticMark::Kasra);
    b.provenance(*prev).rule = Rule::R5;
  }
}

inline void rewrite_word(ArudiBuilder& b, const std::vector<SourceLetter>& w, bool first_word) {
  using namespace letters;
  std::size_t k = 0;
  const bool connective = w.size() >= 2 && (w[0].ch == kAlef || w[0].ch == kAlefWasla);
  if (connective) {
    if (first_word) {
      b.emit(kAlef, wasl_vowel(w), w[0], Rule::R5);
    } else {
      elide_into_previous(b);
    }
    k = 1;
    const auto& lam = w[k];
    if (lam.ch == kLam && !lam.marks.shadda()) {
      const bool bare = !lam.marks.is_marked();
      if (bare && k + 1 < w.size() && w[k + 1].marks.shadda()) {
        k += 1;
      } else if (bare || lam.marks.vowel() == DiacriticMark::Sukun) {
        b.emit(kLam, DiacriticMark::Sukun, lam, Rule::R6);
        k += 1;
      }
    }
  }

  for (; k < w.size(); ++k) {
    const auto& c = w[k];
    const bool word_final = k + 1 == w.size();
    const auto vowel = c.marks.vowel();

    if (c.ch == kAlefMadda) {
      b.emit(kAlefHamzaAbove, DiacriticMark::Fatha, c, Rule::R4);
      b.emit(kAlef, DiacriticMark::Sukun, c, Rule::R4);
      continue;
    }

    if (c.marks.shadda()) {
      b.emit(c.ch, DiacriticMark::Sukun, c, Rule::R2);
      const DiacriticMark v = vowel.value_or(DiacriticMark::Fatha);
      b.emit(c.ch, base_vowel(v), c, Rule::R2);
      if (is_tanween(v)) {
        b.emit(kNun, DiacriticMark::Sukun, c, Rule::R3);
        if (v == DiacriticMark::FathaTanween && k + 2 == w.size() &&
            (w[k + 1].ch == kAlef || w[k + 1].ch == kAlefMaqsura) && !w[k + 1].marks.is_marked()) {
          ++k;
        }
      }
      continue;
    }

    if (vowel && is_tanween(*vowel)) {
      if (c.ch == kAlef && word_final && *vowel == DiacriticMark::FathaTanween && k > 0) {
        // Fathatan written on the seat alef belongs to the letter before it.
        if (auto prev = b.last_letter()) {
          b.unit(*prev).marks.set_vowel(DiacriticMark::Fatha);
          b.provenance(*prev).rule = Rule::R3;
        }
        b.emit(kNun, DiacriticMark::Sukun, c, Rule::R3);
        continue;
      }
      b.emit(c.ch, base_vowel(*vowel), c, Rule::R3);
      b.emit(kNun, DiacriticMark::Sukun, c, Rule::R3);
      if (*vowel == DiacriticMark::FathaTanween && k + 2 == w.size() &&
          (w[k + 1].ch == kAlef || w[k + 1].ch == kAlefMaqsura) && !w[k + 1].marks.is_marked()) {
        ++k;
      }
      continue;
    }

    if (vowel) {
      b.emit(c.ch, *vowel, c, Rule::R1);
      continue;
    }

    // Unmarked letter.
    if (c.ch == kAlef && word_final && k > 0 && w[k - 1].ch == kWaw) continue;
    b.emit(c.ch, DiacriticMark::Sukun, c, Rule::R4);
  }
}

}  // namespace detail

/// Rewrites a diacritized hemistich into Arudi writing. Throws
/// Error{incomplete_diacritization} (positions = byte offsets of unmarked
/// letters) below `opts.min_coverage`, Error{empty_text} when there is
/// nothing to scan, and Error{unexpected_separator} on a '#'.
inline ArudiWriting to_arudi_writing(const NormalizedText& verse, const ScanOptions& opts = {}) {
  for (const auto& u : verse.units) {
    if (u.is_separator()) {
      throw Error(Errc::unexpected_separator, "hemistich contains '#'", {u.offset});
    }
  }
  const auto coverage = diacritic_coverage(verse);
  if (coverage.value < opts.min_coverage) {
    std::vector<std::size_t> unmarked;
    for (const auto& u : verse.units) {
      if (is_coverage_eligible(u) && !u.marks.is_marked()) unmarked.push_back(u.offset);
    }
    throw Error(Errc::incomplete_diacritization,
                "coverage " + std::to_string(coverage.value) + " below " +
                    std::to_string(opts.min_coverage),
                std::move(unmarked));
  }

  std::vector<std::vector<detail::SourceLetter>> words(1);
  std::size_t index = 0;
  for (const auto& u : verse.units) {
    if (u.is_letter()) {
      words.back().push_back({u.ch, u.marks, index++, u.offset});
    } else if (!words.back().empty()) {
      words.emplace_back();
    }
  }
  if (words.back().empty()) words.pop_back();

  detail::ArudiBuilder b;
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    if (wi > 0) b.space();
    detail::rewrite_word(b, words[wi], wi == 0);
  }

  if (opts.final_lengthening) {
    if (auto last = b.last_letter()) {
      const Unit u = b.unit(*last);
      const auto v = u.marks.vowel();
      if (v && is_harakah(*v)) {
        char32_t madd = letters::kAlef;
        if (*v == DiacriticMark::Damma) madd = letters::kWaw;
        if (*v == DiacriticMark::Kasra) madd = letters::kYa;
        const detail::SourceLetter src{u.ch, u.marks, b.provenance(*last).source_letter, u.offset};
        b.emit(madd, DiacriticMark::Sukun, src, Rule::R7);
      }
    }
  }
  return b.take();
}

/// One bit per letter: harakah -> '1', sukun -> '0'. Throws
/// Error{unmarked_letter} for a bare letter and Error{empty_text} when the
/// text has no letters.
inline Scan to_binary(const ArudiWriting& arudi) {
  Scan s;
  const auto& units = arudi.text.units;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto& u = units[i];
    if (!u.is_letter()) continue;
    const auto v = u.marks.vowel();
    if (!v) {
      throw Error(Errc::unmarked_letter,
                  "letter at byte " + std::to_string(u.offset) + " carries no vowel or sukun",
                  {u.offset});
    }
    const char bit = is_harakah(*v) ? '1' : '0';
    const Provenance p = i < arudi.provenance.size() ? arudi.provenance[i] : Provenance{};
    s.pattern.push_back(bit);
    s.trace.push_back(TraceEntry{bit, p.source_letter, p.rule, u.offset});
  }
  if (s.pattern.empty()) throw Error(Errc::empty_text, "no letters to scan");
  return s;
}

/// Plain text already in Arudi form: every letter is attributed to R1.
inline Scan to_binary(const NormalizedText& arudi) {
  ArudiWriting w{arudi, {}};
  std::size_t index = 0;
  for (const auto& u : arudi.units) {
    w.provenance.push_back(Provenance{u.is_letter() ? index++ : index, Rule::R1});
  }
  return to_binary(w);
}

inline Scan scan_hemistich(std::string_view text, const ScanOptions& opts = {}) {
  return to_binary(to_arudi_writing(normalize_unicode(text), opts));
}

/// Scans a single tafeelah (no hemistich-final lengthening).
inline Scan scan_foot(std::string_view text, double min_coverage = 0.95) {
  return scan_hemistich(text, ScanOptions{min_coverage, false});
}

enum class HemistichSide { sadr, ajuz };

inline std::string_view side_name(HemistichSide s) noexcept {
  return s == HemistichSide::sadr ? "sadr" : "ajuz";
}

/// Scans both halves of a bait. Errors carry the side in their message.
inline std::pair<Scan, Scan> scan_bait(std::string_view sadr, std::string_view ajuz,
                                       const ScanOptions& opts = {}) {
  auto scan_side = [&](std::string_view text, HemistichSide side) {
    try {
      return scan_hemistich(text, opts);
    } catch (const Error& e) {
      throw Error(e.code(), std::string(side_name(side)) + ": " + e.message(), e.positions());
    }
  };
  auto first = scan_side(sadr, HemistichSide::sadr);
  auto second = scan_side(ajuz, HemistichSide::ajuz);
  return {std::move(first), std::move(second)};
}

}  // namespace qasida
