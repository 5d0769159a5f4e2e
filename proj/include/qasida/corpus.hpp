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

// Poem corpora: JSONL ingestion, cleaning, augmentation, and the
// special-token prompt encoding used for character-level generation.
//
// JSONL record:
//   {"id": str, "poet": str, "title": str?, "era": int | "pre-islamic" | null,
//    "theme": int?, "meter": int?, "baits": [[str, str], ...], ...}
// Unrecognized keys are carried through in Poem::extra.
//
// Encoded record:
//   <|meter_N|> Q <|theme_K|>\n<|psep|><|bsep|>V1<|vsep|>V2</|bsep|>...</|psep|>

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qasida/classify.hpp"
#include "qasida/detail/random.hpp"
#include "qasida/detail/utf8.hpp"
#include "qasida/error.hpp"
#include "qasida/meterdb.hpp"
#include "qasida/normalize.hpp"
#include "qasida/poem.hpp"

namespace qasida {

inline constexpr int kThemeCount = 18;
inline constexpr int kUnknownTheme = 17;
inline constexpr std::size_t kSpecialTokenCount = 51;
inline constexpr std::size_t kMinHemistichLetters = 5;
inline constexpr std::string_view kPreIslamicTag = "pre-islamic";

// ---------------------------------------------------------------------------
// JSONL

inline nlohmann::json to_json(const Poem& p) {
  nlohmann::json j = p.extra.is_object() ? p.extra : nlohmann::json::object();
  j["id"] = p.id;
  j["poet"] = p.poet;
  if (p.title) j["title"] = *p.title;
  if (p.era) {
    if (std::holds_alternative<PreIslamic>(*p.era)) {
      j["era"] = kPreIslamicTag;
    } else {
      j["era"] = std::get<int>(*p.era);
    }
  }
  if (p.theme) j["theme"] = *p.theme;
  if (p.meter) j["meter"] = *p.meter;
  j["baits"] = p.baits;
  return j;
}

namespace detail {

inline std::optional<int> optional_int(const nlohmann::json& j, const char* key,
                                       const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) {
    throw Error(Errc::parse_error, where + ": field '" + key + "' must be an integer");
  }
  return it->get<int>();
}

inline std::string string_field(const nlohmann::json& j, const char* key,
                                const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw Error(Errc::parse_error, where + ": field '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace detail

/// `where` prefixes error messages (for example "line 3").
inline Poem poem_from_json(const nlohmann::json& j, const std::string& where = "record") {
  if (!j.is_object()) throw Error(Errc::parse_error, where + ": expected a JSON object");
  Poem p;
  p.id = detail::string_field(j, "id", where);
  p.poet = detail::string_field(j, "poet", where);
  if (j.contains("title") && !j["title"].is_null()) p.title = detail::string_field(j, "title", where);
  if (const auto it = j.find("era"); it != j.end() && !it->is_null()) {
    if (it->is_string() && it->get<std::string>() == kPreIslamicTag) {
      p.era = PreIslamic{};
    } else if (it->is_number_integer()) {
      p.era = it->get<int>();
    } else {
      throw Error(Errc::parse_error,
                  where + ": field 'era' must be a Hijri year or \"pre-islamic\"");
    }
  }
  p.theme = detail::optional_int(j, "theme", where);
  p.meter = detail::optional_int(j, "meter", where);
  const auto baits = j.find("baits");
  if (baits == j.end() || !baits->is_array()) {
    throw Error(Errc::parse_error, where + ": field 'baits' must be an array");
  }
  for (std::size_t b = 0; b < baits->size(); ++b) {
    const auto& jb = (*baits)[b];
    if (!jb.is_array()) {
      throw Error(Errc::parse_error, where + ": baits[" + std::to_string(b) + "] must be an array");
    }
    Bait bait;
    for (const auto& h : jb) {
      if (!h.is_string()) {
        throw Error(Errc::parse_error,
                    where + ": baits[" + std::to_string(b) + "] must hold strings");
      }
      bait.push_back(h.get<std::string>());
    }
    p.baits.push_back(std::move(bait));
  }
  for (const auto& [k, v] : j.items()) {
    static const std::set<std::string> known{"id", "poet", "title", "era", "theme", "meter", "baits"};
    if (!known.count(k)) p.extra[k] = v;
  }
  return p;
}

struct LineError {
  std::size_t line = 0;  ///< 1-based
  std::string message;
};

struct LoadResult {
  std::vector<Poem> poems;
  std::vector<LineError> errors;
};

enum class LoadMode { Strict, SkipAndReport };

/// Parses JSONL text. Strict mode throws Error{parse_error} citing the first
/// bad line; SkipAndReport collects errors and keeps going. Blank lines are
/// ignored.
inline LoadResult parse_jsonl(std::string_view text, LoadMode mode = LoadMode::Strict) {
  LoadResult out;
  std::size_t line_no = 0, start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string where = "line " + std::to_string(line_no);
    try {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, where + ": " + e.what(), {line_no});
      }
      out.poems.push_back(poem_from_json(j, where));
    } catch (const Error& e) {
      if (mode == LoadMode::Strict) {
        if (e.positions().empty()) throw Error(e.code(), e.message(), {line_no});
        throw;
      }
      out.errors.push_back({line_no, e.what()});
    }
  }
  return out;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(Errc::io_error, "write failed for " + path);
}

}  // namespace detail

inline std::vector<Poem> load_jsonl(const std::string& path) {
  return parse_jsonl(detail::read_file(path), LoadMode::Strict).poems;
}

inline LoadResult load_jsonl(const std::string& path, LoadMode mode) {
  return parse_jsonl(detail::read_file(path), mode);
}

inline std::string dump_jsonl(std::span<const Poem> poems) {
  std::string out;
  for (const auto& p : poems) {
    out += to_json(p).dump();
    out += '\n';
  }
  return out;
}

inline void write_jsonl(std::span<const Poem> poems, const std::string& path) {
  detail::write_file(path, dump_jsonl(poems));
}

// ---------------------------------------------------------------------------
// Cleaning

enum class CleanRule { Normalize = 1, OddVerses = 2, ShortVerse = 3, UnknownMeter = 4 };

struct CleanReport {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::array<std::size_t, 4> removed{};  ///< indexed by rule - 1

  std::size_t removed_by(CleanRule r) const { return removed[static_cast<int>(r) - 1]; }
  std::size_t total_removed() const { return removed[0] + removed[1] + removed[2] + removed[3]; }

  friend bool operator==(const CleanReport&, const CleanReport&) = default;
};

struct CleanResult {
  std::vector<Poem> kept;
  CleanReport report;
};

inline nlohmann::json to_json(const CleanReport& r) {
  return {{"input", r.input},
          {"kept", r.kept},
          {"removed",
           {{"normalize", r.removed[0]},
            {"odd_verses", r.removed[1]},
            {"short_verse", r.removed[2]},
            {"unknown_meter", r.removed[3]}}}};
}

/// First failing rule for one poem, or nullopt if it survives; on success
/// `poem` has been normalized in place.
inline std::optional<CleanRule> clean_one(Poem& poem) {
  try {
    for (auto& bait : poem.baits) {
      for (auto& h : bait) h = normalize_unicode(h).to_string();
    }
  } catch (const Error&) {
    return CleanRule::Normalize;
  }
  const bool pairs = std::all_of(poem.baits.begin(), poem.baits.end(),
                                 [](const Bait& b) { return b.size() == 2; });
  if (poem.baits.empty() || !pairs || poem.hemistich_count() % 2 != 0) return CleanRule::OddVerses;
  for (const auto& bait : poem.baits) {
    for (const auto& h : bait) {
      if (normalize_unicode(h).letter_count() < kMinHemistichLetters) return CleanRule::ShortVerse;
    }
  }
  if (poem.meter && (*poem.meter < 0 || *poem.meter >= kMeterCount)) return CleanRule::UnknownMeter;
  return std::nullopt;
}

/// Applies the four cleaning rules in order; each removal is attributed to
/// the first rule the poem fails.
inline CleanResult clean(std::vector<Poem> poems) {
  CleanResult out;
  out.report.input = poems.size();
  for (auto& p : poems) {
    if (const auto rule = clean_one(p)) {
      ++out.report.removed[static_cast<int>(*rule) - 1];
    } else {
      out.kept.push_back(std::move(p));
    }
  }
  out.report.kept = out.kept.size();
  return out;
}

/// Coverage of one hemistich; text that fails to normalize or has no
/// eligible letter scores 0.
inline double hemistich_coverage(std::string_view text) {
  try {
    return diacritic_coverage(normalize_unicode(text)).value;
  } catch (const Error&) {
    return 0.0;
  }
}

/// Keeps poems whose every hemistich reaches `min_coverage`.
inline std::vector<Poem> filter_by_coverage(std::span<const Poem> poems, double min_coverage) {
  if (!(min_coverage >= 0.0 && min_coverage <= 1.0)) {
    throw std::invalid_argument("min_coverage must lie in [0, 1]");
  }
  std::vector<Poem> out;
  for (const auto& p : poems) {
    bool ok = true;
    for (const auto& b : p.baits) {
      for (const auto& h : b) ok = ok && hemistich_coverage(h) >= min_coverage;
    }
    if (ok) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Augmentation and splits

/// Swaps the halves around '#' with probability 0.5 per verse. Whitespace
/// hugging the separator stays in place. Throws Error{missing_separator}
/// naming the verse index.
inline std::vector<std::string> augment_swap(std::span<const std::string> verses, std::uint64_t seed) {
  std::vector<std::string> out;
  out.reserve(verses.size());
  for (std::size_t i = 0; i < verses.size(); ++i) {
    const std::string& v = verses[i];
    const auto hash = v.find('#');
    if (hash == std::string::npos || v.find('#', hash + 1) != std::string::npos) {
      throw Error(Errc::missing_separator,
                  "verse " + std::to_string(i) + " must contain exactly one '#'", {i});
    }
    if (!detail::Rng::for_item(seed, i).bernoulli(0.5)) {
      out.push_back(v);
      continue;
    }
    const std::string left = v.substr(0, hash), right = v.substr(hash + 1);
    auto split = [](const std::string& s) {
      const auto b = s.find_first_not_of(' ');
      if (b == std::string::npos) return std::array<std::string, 3>{s, "", ""};
      const auto e = s.find_last_not_of(' ') + 1;
      return std::array<std::string, 3>{s.substr(0, b), s.substr(b, e - b), s.substr(e)};
    };
    const auto l = split(left), r = split(right);
    out.push_back(l[0] + r[1] + l[2] + "#" + r[0] + l[1] + r[2]);
  }
  return out;
}

/// Normalizes each verse and clears the marks of each letter with
/// probability `rate`. Verse i draws from its own stream, so the result does
/// not depend on batching.
inline std::vector<std::string> augment_dropout(std::span<const std::string> verses, double rate,
                                                std::uint64_t seed) {
  std::vector<std::string> out;
  out.reserve(verses.size());
  const std::uint64_t base = detail::splitmix64(seed);
  for (std::size_t i = 0; i < verses.size(); ++i) {
    out.push_back(random_diacritic_dropout(normalize_unicode(verses[i]), rate,
                                           detail::Rng::item_seed(base, i))
                      .to_string());
  }
  return out;
}

/// Diacritic-free, whitespace-collapsed form used for duplicate detection.
inline std::string dedupe_key(std::string_view hemistich) {
  try {
    return strip_diacritics(normalize_unicode(hemistich)).to_string();
  } catch (const Error&) {
    std::string out;
    bool space = false;
    for (char c : hemistich) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        space = !out.empty();
      } else {
        if (space) out.push_back(' ');
        space = false;
        out.push_back(c);
      }
    }
    return out;
  }
}

/// Drops training poems sharing any hemistich with the test set.
inline std::vector<Poem> dedupe_against(std::span<const Poem> train, std::span<const Poem> test) {
  std::unordered_set<std::string> seen;
  for (const auto& p : test) {
    for (const auto& h : p.hemistiches()) seen.insert(dedupe_key(h));
  }
  std::vector<Poem> out;
  for (const auto& p : train) {
    const auto hs = p.hemistiches();
    const bool dup = std::any_of(hs.begin(), hs.end(),
                                 [&](const std::string& h) { return seen.count(dedupe_key(h)) > 0; });
    if (!dup) out.push_back(p);
  }
  return out;
}

/// Keeps at most `cap` poems per class, the first ones in input order.
/// Poems for which `key` returns nullopt are dropped.
template <class KeyFn>
std::vector<Poem> cap_per_class(std::span<const Poem> poems, std::size_t cap, KeyFn key) {
  std::map<int, std::size_t> count;
  std::vector<Poem> out;
  for (const auto& p : poems) {
    const std::optional<int> k = key(p);
    if (!k) continue;
    if (count[*k]++ < cap) out.push_back(p);
  }
  return out;
}

inline std::vector<Poem> cap_per_era(std::span<const Poem> poems, std::size_t cap = 50000) {
  return cap_per_class(poems, cap, [](const Poem& p) -> std::optional<int> {
    if (!p.era) return std::nullopt;
    return bucket_era(*p.era).index;
  });
}

// ---------------------------------------------------------------------------
// Special-token vocabulary

namespace detail {

inline std::vector<std::string> special_tokens() {
  std::vector<std::string> t{"<|psep|>", "</|psep|>", "<|bsep|>", "</|bsep|>", "<|vsep|>"};
  for (int k = 0; k < kThemeCount; ++k) t.push_back("<|theme_" + std::to_string(k) + "|>");
  for (int n = 0; n < kMeterCount; ++n) t.push_back("<|meter_" + std::to_string(n) + "|>");
  for (int r = 0; r < 10; ++r) t.push_back("<|res_" + std::to_string(r) + "|>");
  t.push_back("<|pad|>");
  t.push_back("<|endoftext|>");
  return t;
}

}  // namespace detail

inline std::string meter_token(int n) { return "<|meter_" + std::to_string(n) + "|>"; }
inline std::string theme_token(int k) { return "<|theme_" + std::to_string(k) + "|>"; }

/// Token ids: the 51 reserved tokens in table order, then characters by
/// codepoint.
class SpecialTokenVocab {
 public:
  SpecialTokenVocab() : specials_(detail::special_tokens()) { reindex(); }

  explicit SpecialTokenVocab(std::vector<char32_t> chars) : SpecialTokenVocab() {
    std::sort(chars.begin(), chars.end());
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    chars_ = std::move(chars);
    reindex();
  }

  const std::vector<std::string>& specials() const { return specials_; }
  const std::vector<char32_t>& characters() const { return chars_; }
  std::size_t size() const { return specials_.size() + chars_.size(); }

  std::vector<std::string> tokens() const {
    std::vector<std::string> out = specials_;
    for (char32_t c : chars_) out.push_back(detail::to_utf8(c));
    return out;
  }

  bool contains_char(char32_t c) const { return char_ids_.count(c) > 0; }
  std::optional<std::size_t> id(std::string_view token) const {
    if (const auto it = ids_.find(std::string(token)); it != ids_.end()) return it->second;
    return std::nullopt;
  }

  /// One token per line; newline and backslash are escaped as \n and \\.
  std::string serialize() const {
    std::string out;
    for (const auto& t : tokens()) {
      for (char c : t) {
        if (c == '\n') {
          out += "\\n";
        } else if (c == '\\') {
          out += "\\\\";
        } else {
          out.push_back(c);
        }
      }
      out.push_back('\n');
    }
    return out;
  }

  /// Throws Error{parse_error} if the reserved block is not exactly as
  /// expected or a character line holds more than one codepoint.
  static SpecialTokenVocab parse(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c == '\n') {
        lines.push_back(std::move(cur));
        cur.clear();
      } else if (c == '\\' && i + 1 < text.size()) {
        const char n = text[++i];
        if (n == 'n') {
          cur.push_back('\n');
        } else if (n == '\\') {
          cur.push_back('\\');
        } else {
          throw Error(Errc::parse_error, "vocab line " + std::to_string(lines.size() + 1) +
                                             ": unknown escape", {lines.size() + 1});
        }
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) lines.push_back(std::move(cur));
    const auto specials = detail::special_tokens();
    if (lines.size() < specials.size()) {
      throw Error(Errc::parse_error, "vocab has fewer than 51 reserved tokens");
    }
    for (std::size_t i = 0; i < specials.size(); ++i) {
      if (lines[i] != specials[i]) {
        throw Error(Errc::parse_error,
                    "vocab line " + std::to_string(i + 1) + ": expected " + specials[i], {i + 1});
      }
    }
    std::vector<char32_t> chars;
    for (std::size_t i = specials.size(); i < lines.size(); ++i) {
      const auto cps = detail::to_u32(lines[i]);
      if (cps.size() != 1) {
        throw Error(Errc::parse_error,
                    "vocab line " + std::to_string(i + 1) + ": expected one character", {i + 1});
      }
      chars.push_back(cps[0]);
    }
    return SpecialTokenVocab(std::move(chars));
  }

  friend bool operator==(const SpecialTokenVocab& a, const SpecialTokenVocab& b) {
    return a.chars_ == b.chars_;
  }

 private:
  void reindex() {
    ids_.clear();
    char_ids_.clear();
    for (std::size_t i = 0; i < specials_.size(); ++i) ids_[specials_[i]] = i;
    for (std::size_t i = 0; i < chars_.size(); ++i) {
      ids_[detail::to_utf8(chars_[i])] = specials_.size() + i;
      char_ids_[chars_[i]] = specials_.size() + i;
    }
  }

  std::vector<std::string> specials_;
  std::vector<char32_t> chars_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::unordered_map<char32_t, std::size_t> char_ids_;
};

/// Distinct characters of every hemistich, plus the space and newline the
/// prompt layout needs.
inline SpecialTokenVocab build_vocab(std::span<const Poem> corpus) {
  std::set<char32_t> chars{U' ', U'\n'};
  for (const auto& p : corpus) {
    for (const auto& b : p.baits) {
      for (const auto& h : b) {
        for (char32_t c : detail::to_u32(h)) chars.insert(c);
      }
    }
  }
  if (corpus.empty()) chars.clear();
  return SpecialTokenVocab(std::vector<char32_t>(chars.begin(), chars.end()));
}

// ---------------------------------------------------------------------------
// Encoding

struct EncodedPoem {
  int meter = 0;
  int theme = kUnknownTheme;
  std::string qafiyah;
  std::vector<Bait> baits;

  friend bool operator==(const EncodedPoem&, const EncodedPoem&) = default;
};

namespace detail {

inline void push_chars(std::vector<std::string>& out, std::string_view text,
                       const SpecialTokenVocab& vocab) {
  for (const auto& d : decode_utf8(text)) {
    if (!vocab.contains_char(d.cp)) {
      throw Error(Errc::unencodable_character,
                  "character U+" + [&] {
                    std::ostringstream ss;
                    ss << std::hex << std::uppercase << static_cast<std::uint32_t>(d.cp);
                    return ss.str();
                  }() + " is not in the vocabulary",
                  {d.offset});
    }
    out.push_back(to_utf8(d.cp));
  }
}

}  // namespace detail

/// Token sequence of the prompt template. Requires poem.meter; a missing
/// theme uses the unknown-theme token.
inline std::vector<std::string> encode_tokens(const Poem& poem, const SpecialTokenVocab& vocab) {
  if (!poem.meter || *poem.meter < 0 || *poem.meter >= kMeterCount) {
    throw Error(Errc::validation_error, "poem " + poem.id + " has no meter in 0..15");
  }
  const int theme = poem.theme.value_or(kUnknownTheme);
  if (theme < 0 || theme >= kThemeCount) {
    throw Error(Errc::validation_error, "poem " + poem.id + " has theme outside 0..17");
  }
  std::vector<std::string> t;
  t.push_back(meter_token(*poem.meter));
  detail::push_chars(t, " ", vocab);
  detail::push_chars(t, extract_qafiyah(poem).rawiy, vocab);
  detail::push_chars(t, " ", vocab);
  t.push_back(theme_token(theme));
  detail::push_chars(t, "\n", vocab);
  t.emplace_back("<|psep|>");
  for (const auto& b : poem.baits) {
    if (b.size() != 2) throw Error(Errc::validation_error, "bait must hold two hemistiches");
    t.emplace_back("<|bsep|>");
    detail::push_chars(t, b[0], vocab);
    t.emplace_back("<|vsep|>");
    detail::push_chars(t, b[1], vocab);
    t.emplace_back("</|bsep|>");
  }
  t.emplace_back("</|psep|>");
  return t;
}

inline std::string encode(const Poem& poem, const SpecialTokenVocab& vocab) {
  std::string out;
  for (const auto& tok : encode_tokens(poem, vocab)) out += tok;
  return out;
}

/// Greedy split: the longest reserved token at each position, otherwise one
/// character. Throws Error{unencodable_character}.
inline std::vector<std::string> tokenize(std::string_view text, const SpecialTokenVocab& vocab) {
  std::vector<std::string> out;
  const auto chars = detail::decode_utf8(text);
  std::size_t k = 0;
  while (k < chars.size()) {
    const std::size_t at = chars[k].offset;
    const std::string* best = nullptr;
    for (const auto& s : vocab.specials()) {
      if (text.substr(at, s.size()) == s && (!best || s.size() > best->size())) best = &s;
    }
    if (best) {
      out.push_back(*best);
      const std::size_t stop = at + best->size();
      while (k < chars.size() && chars[k].offset < stop) ++k;
      continue;
    }
    detail::push_chars(out, detail::to_utf8(chars[k].cp), vocab);
    ++k;
  }
  return out;
}

/// Inverse of encode(). Throws Error{malformed_template} naming the piece
/// that was expected.
inline EncodedPoem decode(std::string_view text, const SpecialTokenVocab& vocab) {
  EncodedPoem out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw Error(Errc::malformed_template,
                "expected " + what + " at byte " + std::to_string(pos), {pos});
  };
  auto expect = [&](std::string_view lit) {
    if (text.substr(pos, lit.size()) != lit) fail("\"" + std::string(lit) + "\"");
    pos += lit.size();
  };
  auto number = [&](int limit, const char* what) {
    std::size_t end = pos;
    while (end < text.size() && end - pos < 3 && text[end] >= '0' && text[end] <= '9') ++end;
    if (end == pos) fail(what);
    const int v = std::stoi(std::string(text.substr(pos, end - pos)));
    if (v >= limit) fail(what);
    pos = end;
    return v;
  };
  auto until = [&](std::string_view lit) {
    const auto end = text.find(lit, pos);
    if (end == std::string_view::npos) fail("\"" + std::string(lit) + "\"");
    std::string s(text.substr(pos, end - pos));
    pos = end + lit.size();
    return s;
  };

  expect("<|meter_");
  out.meter = number(kMeterCount, "meter index");
  expect("|> ");
  out.qafiyah = until(" <|theme_");
  out.theme = number(kThemeCount, "theme index");
  expect("|>\n<|psep|>");
  while (text.substr(pos, 8) == "<|bsep|>") {
    pos += 8;
    Bait b;
    b.push_back(until("<|vsep|>"));
    b.push_back(until("</|bsep|>"));
    for (const auto& h : b) {
      if (h.find("<|") != std::string::npos || h.find("</|") != std::string::npos) {
        fail("hemistich text without separators");
      }
    }
    out.baits.push_back(std::move(b));
  }
  expect("</|psep|>");
  if (pos != text.size()) fail("end of record");
  tokenize(text, vocab);
  return out;
}

inline constexpr std::string_view kEndOfText = "<|endoftext|>";

struct EncodeCorpusResult {
  std::string text;                 ///< records, each followed by <|endoftext|>
  std::vector<std::size_t> encoded; ///< input indices, in output order
  std::vector<std::pair<std::size_t, std::string>> excluded;  ///< index, reason
};

/// Encodes a cleaned corpus. Every poem is classified by hemistich vote:
/// labelled poems whose prediction disagrees are excluded, unlabelled poems
/// take the prediction, and unlabelled poems that cannot be scanned are
/// excluded. Labelled poems that cannot be scanned keep their label.
inline EncodeCorpusResult encode_corpus(std::span<const Poem> poems, const SpecialTokenVocab& vocab,
                                        const PatternDB& db, const ScanOptions& opts = {},
                                        unsigned threads = 1) {
  using Outcome = std::variant<std::string, std::pair<std::size_t, std::string>>;
  auto outcomes = detail::parallel_map(poems.size(), threads, [&](std::size_t i) -> Outcome {
    Poem p = poems[i];
    std::optional<int> predicted;
    try {
      predicted = classify_poem(p, db, opts).meter;
    } catch (const Error& e) {
      if (e.code() != Errc::no_scannable_verse) return std::pair{i, std::string(e.what())};
    }
    if (p.meter && predicted && *predicted != *p.meter) {
      return std::pair{i, "meter label " + std::to_string(*p.meter) + " disagrees with prediction " +
                              std::to_string(*predicted)};
    }
    if (!p.meter) {
      if (!predicted) return std::pair{i, std::string("no meter label and no scannable hemistich")};
      p.meter = predicted;
    }
    try {
      return encode(p, vocab);
    } catch (const Error& e) {
      return std::pair{i, std::string(e.what())};
    }
  });
  EncodeCorpusResult out;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (auto* s = std::get_if<std::string>(&outcomes[i])) {
      out.text += *s;
      out.text += kEndOfText;
      out.encoded.push_back(i);
    } else {
      out.excluded.push_back(std::get<1>(std::move(outcomes[i])));
    }
  }
  return out;
}

/// Splits an encoded corpus file back into records.
inline std::vector<std::string> split_records(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find(kEndOfText, pos);
    if (end == std::string_view::npos) {
      throw Error(Errc::malformed_template, "record without <|endoftext|>", {pos});
    }
    out.emplace_back(text.substr(pos, end - pos));
    pos = end + kEndOfText.size();
  }
  return out;
}

}  // namespace qasida
