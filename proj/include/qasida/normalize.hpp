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

// Canonical in-memory form of diacritized Arabic verse text.
//
// A NormalizedText is a sequence of units. A unit is either an Arabic base
// letter with its diacritic marks, a single space (runs of whitespace are
// collapsed), or the hemistich separator '#'. Everything else in the raw
// input (tatweel, digits, punctuation, Latin text, Quranic annotation marks)
// is dropped, and presentation-form glyphs are folded back to base letters.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qasida/detail/presentation_forms.hpp"
#include "qasida/detail/random.hpp"
#include "qasida/detail/utf8.hpp"
#include "qasida/error.hpp"

namespace qasida {

namespace letters {
inline constexpr char32_t kHamza = 0x0621;
inline constexpr char32_t kAlefMadda = 0x0622;
inline constexpr char32_t kAlefHamzaAbove = 0x0623;
inline constexpr char32_t kWawHamza = 0x0624;
inline constexpr char32_t kAlefHamzaBelow = 0x0625;
inline constexpr char32_t kYaHamza = 0x0626;
inline constexpr char32_t kAlef = 0x0627;
inline constexpr char32_t kTaMarbuta = 0x0629;
inline constexpr char32_t kTatweel = 0x0640;
inline constexpr char32_t kKaf = 0x0643;
inline constexpr char32_t kLam = 0x0644;
inline constexpr char32_t kNun = 0x0646;
inline constexpr char32_t kHa = 0x0647;
inline constexpr char32_t kWaw = 0x0648;
inline constexpr char32_t kAlefMaqsura = 0x0649;
inline constexpr char32_t kYa = 0x064A;
inline constexpr char32_t kAlefWasla = 0x0671;
}  // namespace letters

enum class DiacriticMark : std::uint8_t {
  Fatha,
  Damma,
  Kasra,
  FathaTanween,
  DammaTanween,
  KasraTanween,
  Sukun,
  Shadda,
};

inline constexpr std::array<DiacriticMark, 8> kAllMarks{
    DiacriticMark::Fatha,        DiacriticMark::Damma,        DiacriticMark::Kasra,
    DiacriticMark::FathaTanween, DiacriticMark::DammaTanween, DiacriticMark::KasraTanween,
    DiacriticMark::Sukun,        DiacriticMark::Shadda,
};

inline constexpr char32_t codepoint(DiacriticMark m) noexcept {
  switch (m) {
    case DiacriticMark::Fatha: return 0x064E;
    case DiacriticMark::Damma: return 0x064F;
    case DiacriticMark::Kasra: return 0x0650;
    case DiacriticMark::FathaTanween: return 0x064B;
    case DiacriticMark::DammaTanween: return 0x064C;
    case DiacriticMark::KasraTanween: return 0x064D;
    case DiacriticMark::Sukun: return 0x0652;
    case DiacriticMark::Shadda: return 0x0651;
  }
  return 0;
}

inline constexpr std::optional<DiacriticMark> mark_from_codepoint(char32_t cp) noexcept {
  switch (cp) {
    case 0x064B: return DiacriticMark::FathaTanween;
    case 0x064C: return DiacriticMark::DammaTanween;
    case 0x064D: return DiacriticMark::KasraTanween;
    case 0x064E: return DiacriticMark::Fatha;
    case 0x064F: return DiacriticMark::Damma;
    case 0x0650: return DiacriticMark::Kasra;
    case 0x0651: return DiacriticMark::Shadda;
    case 0x0652: return DiacriticMark::Sukun;
    default: return std::nullopt;
  }
}

inline constexpr bool is_tanween(DiacriticMark m) noexcept {
  return m == DiacriticMark::FathaTanween || m == DiacriticMark::DammaTanween ||
         m == DiacriticMark::KasraTanween;
}

/// Harakah marks: the three short vowels and their tanween forms.
inline constexpr bool is_harakah(DiacriticMark m) noexcept {
  return m != DiacriticMark::Sukun && m != DiacriticMark::Shadda;
}

/// Short vowel carried by a tanween mark (identity for plain vowels).
inline constexpr DiacriticMark base_vowel(DiacriticMark m) noexcept {
  switch (m) {
    case DiacriticMark::FathaTanween: return DiacriticMark::Fatha;
    case DiacriticMark::DammaTanween: return DiacriticMark::Damma;
    case DiacriticMark::KasraTanween: return DiacriticMark::Kasra;
    default: return m;
  }
}

/// Marks on one letter: an optional shadda plus at most one of the seven
/// vowel/sukun marks. Adding a second vowel mark replaces the first.
class MarkSet {
 public:
  constexpr MarkSet() = default;

  constexpr void add(DiacriticMark m) noexcept {
    if (m == DiacriticMark::Shadda) {
      shadda_ = true;
    } else {
      vowel_ = m;
    }
  }

  constexpr void set_vowel(std::optional<DiacriticMark> v) noexcept { vowel_ = v; }
  constexpr void clear() noexcept {
    shadda_ = false;
    vowel_.reset();
  }

  constexpr bool shadda() const noexcept { return shadda_; }
  /// The vowel/sukun mark, if any (never Shadda).
  constexpr std::optional<DiacriticMark> vowel() const noexcept { return vowel_; }
  constexpr bool empty() const noexcept { return !shadda_ && !vowel_; }
  /// Carries a vowel or sukun; a lone shadda does not count.
  constexpr bool is_marked() const noexcept { return vowel_.has_value(); }
  constexpr bool has(DiacriticMark m) const noexcept {
    return m == DiacriticMark::Shadda ? shadda_ : vowel_ == m;
  }

  friend constexpr bool operator==(const MarkSet&, const MarkSet&) = default;

 private:
  bool shadda_ = false;
  std::optional<DiacriticMark> vowel_;
};

inline constexpr bool is_arabic_letter(char32_t cp) noexcept {
  return (cp >= 0x0621 && cp <= 0x063A) || (cp >= 0x0641 && cp <= 0x064A) ||
         cp == letters::kAlefWasla;
}

struct Unit {
  char32_t ch = 0;
  MarkSet marks;
  std::size_t offset = 0;  ///< byte offset of the letter in the raw input

  bool is_letter() const noexcept { return is_arabic_letter(ch); }
  bool is_space() const noexcept { return ch == U' '; }
  bool is_separator() const noexcept { return ch == U'#'; }

  /// Offsets are provenance, not content; equality ignores them.
  friend bool operator==(const Unit& a, const Unit& b) noexcept {
    return a.ch == b.ch && a.marks == b.marks;
  }
};

struct NormalizedText {
  std::vector<Unit> units;

  std::size_t letter_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(units.begin(), units.end(), [](const Unit& u) { return u.is_letter(); }));
  }
  bool empty() const noexcept { return units.empty(); }

  /// UTF-8 with marks after their letter, shadda before the vowel mark.
  std::string to_string() const {
    std::string out;
    for (const auto& u : units) {
      detail::append_utf8(out, u.ch);
      if (u.marks.shadda()) detail::append_utf8(out, codepoint(DiacriticMark::Shadda));
      if (auto v = u.marks.vowel()) detail::append_utf8(out, codepoint(*v));
    }
    return out;
  }

  friend bool operator==(const NormalizedText&, const NormalizedText&) = default;
};

namespace detail {

inline bool is_whitespace(char32_t cp) noexcept {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\v' ||
         cp == U'\f' || cp == 0x00A0 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x202F ||
         cp == 0x205F || cp == 0x3000;
}

inline std::u32string_view fold_presentation_form(char32_t cp, const char32_t& self) noexcept {
  const auto it = std::lower_bound(
      kPresentationFolds.begin(), kPresentationFolds.end(), cp,
      [](const PresentationFold& f, char32_t c) { return f.from < c; });
  if (it != kPresentationFolds.end() && it->from == cp) return it->to;
  return {&self, 1};
}

// Persian keyboard variants that stand in for Arabic letters in web text.
inline constexpr char32_t fold_variant_letter(char32_t cp) noexcept {
  switch (cp) {
    case 0x06CC: return letters::kYa;
    case 0x06A9: return letters::kKaf;
    default: return cp;
  }
}

// Canonical composition of a letter with a following madda/hamza mark.
inline constexpr std::optional<char32_t> compose(char32_t base, char32_t mark) noexcept {
  using namespace letters;
  if (mark == 0x0653 && base == kAlef) return kAlefMadda;
  if (mark == 0x0654) {
    if (base == kAlef) return kAlefHamzaAbove;
    if (base == kWaw) return kWawHamza;
    if (base == kYa) return kYaHamza;
  }
  if (mark == 0x0655 && base == kAlef) return kAlefHamzaBelow;
  return std::nullopt;
}

}  // namespace detail

/// Normalizes raw UTF-8 verse text. Throws Error{orphan_diacritic} when a
/// diacritic appears before any letter of its word.
inline NormalizedText normalize_unicode(std::string_view raw) {
  NormalizedText out;
  bool pending_space = false;
  // Index of the letter the next mark attaches to; cleared at boundaries.
  std::optional<std::size_t> attach;

  auto process = [&](char32_t cp, std::size_t offset) {
    cp = detail::fold_variant_letter(cp);
    if (auto mark = mark_from_codepoint(cp)) {
      if (!attach) {
        throw Error(Errc::orphan_diacritic,
                    "diacritic at byte " + std::to_string(offset) + " has no preceding letter",
                    {offset});
      }
      out.units[*attach].marks.add(*mark);
      return;
    }
    if (cp == 0x0653 || cp == 0x0654 || cp == 0x0655) {
      if (attach) {
        auto& u = out.units[*attach];
        if (auto composed = detail::compose(u.ch, cp)) u.ch = *composed;
      }
      return;
    }
    if (is_arabic_letter(cp) || cp == U'#') {
      if (pending_space && !out.units.empty()) out.units.push_back(Unit{U' ', {}, offset});
      pending_space = false;
      out.units.push_back(Unit{cp, {}, offset});
      if (cp == U'#') {
        attach.reset();
      } else {
        attach = out.units.size() - 1;
      }
      return;
    }
    if (detail::is_whitespace(cp)) {
      pending_space = true;
      attach.reset();
    }
    // Anything else is dropped without breaking mark attachment, so a mark
    // written on a tatweel still lands on the letter before it.
  };

  for (const auto& d : detail::decode_utf8(raw)) {
    const char32_t self = d.cp;
    for (char32_t cp : detail::fold_presentation_form(d.cp, self)) process(cp, d.offset);
  }
  return out;
}

inline NormalizedText normalize_unicode(const NormalizedText& text) {
  return normalize_unicode(text.to_string());
}

inline NormalizedText strip_diacritics(NormalizedText text) {
  for (auto& u : text.units) u.marks.clear();
  return text;
}

/// Letters that are conventionally written bare (alef, alef maqsura, alef
/// madda, alef wasla, hamza on the line) only count toward coverage when they
/// do carry a mark.
inline bool is_coverage_eligible(const Unit& u) noexcept {
  using namespace letters;
  if (!u.is_letter()) return false;
  if (u.marks.is_marked()) return true;
  return u.ch != kAlef && u.ch != kAlefMaqsura && u.ch != kHamza && u.ch != kAlefMadda &&
         u.ch != kAlefWasla;
}

struct CoverageRatio {
  double value = 0.0;
  std::size_t marked = 0;
  std::size_t eligible = 0;
};

/// Fraction of eligible letters carrying a vowel or sukun. Throws
/// Error{empty_text} when the text has no eligible letter.
inline CoverageRatio diacritic_coverage(const NormalizedText& text) {
  CoverageRatio r;
  for (const auto& u : text.units) {
    if (!is_coverage_eligible(u)) continue;
    ++r.eligible;
    if (u.marks.is_marked()) ++r.marked;
  }
  if (r.eligible == 0) throw Error(Errc::empty_text, "no letter eligible for diacritics");
  r.value = static_cast<double>(r.marked) / static_cast<double>(r.eligible);
  return r;
}

/// Removes each letter's whole mark set with probability `rate`.
inline NormalizedText random_diacritic_dropout(NormalizedText text, double rate,
                                               std::uint64_t seed) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("dropout rate outside [0,1]");
  detail::Rng rng(seed);
  for (auto& u : text.units) {
    if (!u.is_letter() || u.marks.empty()) continue;
    if (rng.bernoulli(rate)) u.marks.clear();
  }
  return text;
}

}  // namespace qasida
