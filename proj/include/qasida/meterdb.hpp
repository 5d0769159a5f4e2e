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

// Database of the sixteen meters. Each meter is a hemistich template: an
// ordered list of foot slots, each slot holding its canonical tafeelah and
// the set of permissible substitutes for that position. Full hemistich
// variants are the cartesian product of the slot sets.
//
// File format (UTF-8 JSON): an array of 16 records
//   {"index": 0, "name_ar": "...", "name_translit": "Taweel",
//    "feet": [{"name": "...", "name_translit": "...",
//              "canonical": "11010", "variants": ["11010", "1101"]}, ...]}

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qasida/error.hpp"
#include "qasida/pattern.hpp"

namespace qasida {

inline constexpr int kMeterCount = 16;
inline constexpr std::size_t kMaxVariantsPerMeter = 1'000'000;
inline constexpr std::size_t kMinFootLength = 3;
inline constexpr std::size_t kMaxFootLength = 8;

struct Tafeelah {
  std::string name;
  std::string name_translit;
  BinaryPattern pattern;

  friend bool operator==(const Tafeelah&, const Tafeelah&) = default;
};

struct FootSlot {
  Tafeelah canonical;
  std::vector<BinaryPattern> variants;  ///< includes the canonical pattern

  friend bool operator==(const FootSlot&, const FootSlot&) = default;
};

struct MeterTemplate {
  int index = 0;
  std::string name_ar;
  std::string name_translit;
  std::vector<FootSlot> feet;

  /// Product of the slot-set sizes, saturating at SIZE_MAX.
  std::size_t variant_product() const noexcept {
    std::size_t n = 1;
    for (const auto& f : feet) {
      const std::size_t k = f.variants.size();
      if (k != 0 && n > SIZE_MAX / k) return SIZE_MAX;
      n *= k;
    }
    return n;
  }

  friend bool operator==(const MeterTemplate&, const MeterTemplate&) = default;
};

/// Lazy cartesian product of a meter's slot variants, in odometer order
/// (last slot varies fastest). Concatenations that coincide are emitted once.
class VariantRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = BinaryPattern;
    using difference_type = std::ptrdiff_t;
    using pointer = const BinaryPattern*;
    using reference = const BinaryPattern&;

    iterator() = default;
    explicit iterator(const MeterTemplate* meter) : meter_(meter) {
      choice_.assign(meter_->feet.size(), 0);
      for (const auto& f : meter_->feet) {
        if (f.variants.empty()) {
          meter_ = nullptr;
          return;
        }
      }
      seen_ = std::make_shared<std::unordered_set<BinaryPattern>>();
      settle();
    }

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      advance();
      settle();
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.meter_ == nullptr && b.meter_ == nullptr;
    }

   private:
    void build() {
      current_ = BinaryPattern{};
      for (std::size_t s = 0; s < choice_.size(); ++s) {
        current_ += meter_->feet[s].variants[choice_[s]];
      }
    }
    void advance() {
      for (std::size_t s = choice_.size(); s-- > 0;) {
        if (++choice_[s] < meter_->feet[s].variants.size()) return;
        choice_[s] = 0;
      }
      meter_ = nullptr;
    }
    // Moves to the next not-yet-emitted pattern (or the end).
    void settle() {
      while (meter_ != nullptr) {
        build();
        if (seen_->insert(current_).second) return;
        advance();
      }
    }

    const MeterTemplate* meter_ = nullptr;
    std::vector<std::size_t> choice_;
    BinaryPattern current_;
    std::shared_ptr<std::unordered_set<BinaryPattern>> seen_;
  };

  explicit VariantRange(const MeterTemplate& meter) : meter_(&meter) {}
  iterator begin() const { return iterator(meter_); }
  iterator end() const { return iterator(); }

 private:
  const MeterTemplate* meter_;
};

/// Enumerates a template's variants; throws Error{variant_explosion} when the
/// slot product exceeds kMaxVariantsPerMeter.
inline VariantRange enumerate_variants(const MeterTemplate& meter) {
  if (meter.variant_product() > kMaxVariantsPerMeter) {
    throw Error(Errc::variant_explosion, "meter " + meter.name_translit + " has " +
                                             std::to_string(meter.variant_product()) +
                                             " variants");
  }
  return VariantRange(meter);
}

namespace detail {

inline std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out.push_back(kHex[(h >> shift) & 0xF]);
  return out;
}

inline std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace detail

class PatternDB {
 public:
  PatternDB() = default;

  /// Parses and validates a meter file's contents. Throws Error{parse_error}
  /// for malformed JSON or fields, Error{validation_error} for a broken
  /// invariant, Error{variant_explosion} from enumeration.
  static PatternDB parse(std::string_view json_text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
      const auto line = detail::line_of(json_text, e.byte);
      throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + e.what(), {line});
    }
    PatternDB db;
    db.checksum_ = detail::fnv1a64_hex(json_text);
    db.templates_ = parse_templates(doc);
    db.validate();
    db.variants_.reserve(db.templates_.size());
    for (const auto& t : db.templates_) {
      auto range = enumerate_variants(t);
      db.variants_.emplace_back(range.begin(), range.end());
    }
    return db;
  }

  /// Throws Error{io_error} when the file cannot be read.
  static PatternDB load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, "cannot open meter file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  const std::vector<MeterTemplate>& templates() const noexcept { return templates_; }
  std::size_t size() const noexcept { return templates_.size(); }
  const std::string& checksum() const noexcept { return checksum_; }

  bool contains(int meter) const noexcept {
    return meter >= 0 && static_cast<std::size_t>(meter) < templates_.size();
  }

  /// Throws Error{unknown_meter}.
  const MeterTemplate& meter(int index) const {
    if (!contains(index)) {
      throw Error(Errc::unknown_meter, "no meter with index " + std::to_string(index));
    }
    return templates_[static_cast<std::size_t>(index)];
  }

  /// All variants of a meter, materialized once at load time.
  const std::vector<BinaryPattern>& variants(int index) const {
    meter(index);
    return variants_[static_cast<std::size_t>(index)];
  }

  /// Same templates, regardless of where they were loaded from.
  friend bool operator==(const PatternDB& a, const PatternDB& b) {
    return a.templates_ == b.templates_;
  }

 private:
  static std::string field_path(std::size_t m, std::string_view rest) {
    return "meters[" + std::to_string(m) + "]" + std::string(rest);
  }

  static BinaryPattern parse_pattern(const nlohmann::json& j, const std::string& where) {
    if (!j.is_string()) throw Error(Errc::parse_error, where + ": expected a pattern string");
    try {
      return BinaryPattern(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(Errc::parse_error, where + ": " + e.what());
    }
  }

  static std::string parse_string(const nlohmann::json& obj, const char* key,
                                  const std::string& where, bool required = true) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (!required) return {};
      throw Error(Errc::parse_error, where + ": missing field '" + key + "'");
    }
    if (!it->is_string()) throw Error(Errc::parse_error, where + "." + key + ": expected string");
    return it->get<std::string>();
  }

  static std::vector<MeterTemplate> parse_templates(const nlohmann::json& doc) {
    if (!doc.is_array()) throw Error(Errc::parse_error, "top level must be an array of meters");
    std::vector<MeterTemplate> out;
    for (std::size_t m = 0; m < doc.size(); ++m) {
      const auto& rec = doc[m];
      const auto where = field_path(m, "");
      if (!rec.is_object()) throw Error(Errc::parse_error, where + ": expected object");
      MeterTemplate t;
      const auto idx = rec.find("index");
      if (idx == rec.end() || !idx->is_number_integer()) {
        throw Error(Errc::parse_error, where + ".index: expected integer");
      }
      t.index = idx->get<int>();
      t.name_ar = parse_string(rec, "name_ar", where);
      t.name_translit = parse_string(rec, "name_translit", where);
      const auto feet = rec.find("feet");
      if (feet == rec.end() || !feet->is_array()) {
        throw Error(Errc::parse_error, where + ".feet: expected array");
      }
      for (std::size_t f = 0; f < feet->size(); ++f) {
        const auto& jf = (*feet)[f];
        const auto fw = field_path(m, ".feet[" + std::to_string(f) + "]");
        if (!jf.is_object()) throw Error(Errc::parse_error, fw + ": expected object");
        FootSlot slot;
        slot.canonical.name = parse_string(jf, "name", fw);
        slot.canonical.name_translit = parse_string(jf, "name_translit", fw, false);
        const auto canon = jf.find("canonical");
        if (canon == jf.end()) throw Error(Errc::parse_error, fw + ": missing field 'canonical'");
        slot.canonical.pattern = parse_pattern(*canon, fw + ".canonical");
        const auto vars = jf.find("variants");
        if (vars == jf.end() || !vars->is_array()) {
          throw Error(Errc::parse_error, fw + ".variants: expected array");
        }
        for (std::size_t v = 0; v < vars->size(); ++v) {
          slot.variants.push_back(
              parse_pattern((*vars)[v], fw + ".variants[" + std::to_string(v) + "]"));
        }
        t.feet.push_back(std::move(slot));
      }
      out.push_back(std::move(t));
    }
    return out;
  }

  void validate() {
    auto fail = [](const std::string& msg) { throw Error(Errc::validation_error, msg); };
    if (templates_.size() != kMeterCount) {
      fail("expected " + std::to_string(kMeterCount) + " meters, found " +
           std::to_string(templates_.size()));
    }
    std::vector<bool> seen(kMeterCount, false);
    for (const auto& t : templates_) {
      if (t.index < 0 || t.index >= kMeterCount) {
        fail("meter index " + std::to_string(t.index) + " outside 0..15");
      }
      if (seen[static_cast<std::size_t>(t.index)]) {
        fail("duplicate meter index " + std::to_string(t.index));
      }
      seen[static_cast<std::size_t>(t.index)] = true;
      if (t.name_translit.empty() || t.name_ar.empty()) {
        fail("meter " + std::to_string(t.index) + " has an empty name");
      }
      if (t.feet.empty()) fail("meter " + t.name_translit + " has no feet");
      for (std::size_t f = 0; f < t.feet.size(); ++f) {
        const auto& slot = t.feet[f];
        const auto where = t.name_translit + " foot " + std::to_string(f);
        if (slot.canonical.name.empty()) fail(where + ": empty tafeelah name");
        auto check_length = [&](const BinaryPattern& p) {
          if (p.size() < kMinFootLength || p.size() > kMaxFootLength) {
            fail(where + ": pattern '" + p.str() + "' length outside [3, 8]");
          }
        };
        check_length(slot.canonical.pattern);
        std::unordered_set<BinaryPattern> distinct;
        bool has_canonical = false;
        for (const auto& v : slot.variants) {
          check_length(v);
          if (!distinct.insert(v).second) fail(where + ": duplicate variant '" + v.str() + "'");
          has_canonical = has_canonical || v == slot.canonical.pattern;
        }
        if (!has_canonical) fail(where + ": variant set lacks the canonical pattern");
      }
    }
    std::sort(templates_.begin(), templates_.end(),
              [](const MeterTemplate& a, const MeterTemplate& b) { return a.index < b.index; });
  }

  std::vector<MeterTemplate> templates_;
  std::vector<std::vector<BinaryPattern>> variants_;
  std::string checksum_;
};

inline VariantRange enumerate_variants(const PatternDB& db, int meter) {
  return enumerate_variants(db.meter(meter));
}

/// Concatenated canonical feet of one hemistich.
inline BinaryPattern canonical_pattern(const PatternDB& db, int meter) {
  BinaryPattern p;
  for (const auto& slot : db.meter(meter).feet) p += slot.canonical.pattern;
  return p;
}

struct MeterName {
  int index;
  std::string name;
  std::string name_ar;

  friend bool operator==(const MeterName&, const MeterName&) = default;
};

inline std::vector<MeterName> meters(const PatternDB& db) {
  std::vector<MeterName> out;
  for (const auto& t : db.templates()) out.push_back({t.index, t.name_translit, t.name_ar});
  return out;
}

inline nlohmann::json to_json(const PatternDB& db) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : db.templates()) {
    nlohmann::json feet = nlohmann::json::array();
    for (const auto& slot : t.feet) {
      nlohmann::json vars = nlohmann::json::array();
      for (const auto& v : slot.variants) vars.push_back(v.str());
      nlohmann::json jf = {{"name", slot.canonical.name},
                           {"canonical", slot.canonical.pattern.str()},
                           {"variants", vars}};
      if (!slot.canonical.name_translit.empty()) {
        jf["name_translit"] = slot.canonical.name_translit;
      }
      feet.push_back(std::move(jf));
    }
    arr.push_back({{"index", t.index},
                   {"name_ar", t.name_ar},
                   {"name_translit", t.name_translit},
                   {"feet", feet}});
  }
  return arr;
}

inline std::string serialize(const PatternDB& db) { return to_json(db).dump(2) + "\n"; }

}  // namespace qasida
