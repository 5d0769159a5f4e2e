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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qasida {

enum class Errc {
  orphan_diacritic,
  empty_text,
  incomplete_diacritization,
  unmarked_letter,
  unexpected_separator,
  parse_error,
  validation_error,
  unknown_meter,
  variant_explosion,
  invalid_position,
  empty_pattern,
  no_scannable_verse,
  empty_poem,
  missing_separator,
  unencodable_character,
  malformed_template,
  letter_mismatch,
  length_mismatch,
  empty_input,
  io_error,
};

/// Stable identifier used in JSON error payloads and CLI diagnostics.
inline constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::orphan_diacritic: return "OrphanDiacritic";
    case Errc::empty_text: return "EmptyText";
    case Errc::incomplete_diacritization: return "IncompleteDiacritization";
    case Errc::unmarked_letter: return "UnmarkedLetter";
    case Errc::unexpected_separator: return "UnexpectedSeparator";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
    case Errc::unknown_meter: return "UnknownMeter";
    case Errc::variant_explosion: return "VariantExplosion";
    case Errc::invalid_position: return "InvalidPosition";
    case Errc::empty_pattern: return "EmptyPattern";
    case Errc::no_scannable_verse: return "NoScannableVerse";
    case Errc::empty_poem: return "EmptyPoem";
    case Errc::missing_separator: return "MissingSeparator";
    case Errc::unencodable_character: return "UnencodableCharacter";
    case Errc::malformed_template: return "MalformedTemplate";
    case Errc::letter_mismatch: return "LetterMismatch";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::empty_input: return "EmptyInput";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `positions` carries byte offsets
/// (or line numbers for file parsers) pointing at the offending input.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<std::size_t> positions = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        message_(what),
        positions_(std::move(positions)) {}

  Errc code() const noexcept { return code_; }
  /// The description without the "Name: " prefix.
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::size_t>& positions() const noexcept { return positions_; }

 private:
  Errc code_;
  std::string message_;
  std::vector<std::size_t> positions_;
};

}  // namespace qasida
