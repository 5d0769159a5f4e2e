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

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "qasida/error.hpp"

namespace qasida {

/// Harakah/sukun sequence: '1' for a vowelled letter, '0' for a quiescent one.
class BinaryPattern {
 public:
  BinaryPattern() = default;

  /// Throws Error{parse_error} on any character other than '0' or '1'.
  explicit BinaryPattern(std::string_view bits) : bits_(bits) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] != '0' && bits_[i] != '1') {
        throw Error(Errc::parse_error,
                    "pattern '" + bits_ + "' has non-binary character at " + std::to_string(i),
                    {i});
      }
    }
  }

  const std::string& str() const noexcept { return bits_; }
  std::string_view view() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  char operator[](std::size_t i) const noexcept { return bits_[i]; }

  void push_back(char bit) {
    if (bit != '0' && bit != '1') throw Error(Errc::parse_error, "non-binary bit");
    bits_.push_back(bit);
  }

  BinaryPattern& operator+=(const BinaryPattern& other) {
    bits_ += other.bits_;
    return *this;
  }
  friend BinaryPattern operator+(BinaryPattern a, const BinaryPattern& b) { return a += b; }

  friend bool operator==(const BinaryPattern&, const BinaryPattern&) = default;
  friend auto operator<=>(const BinaryPattern&, const BinaryPattern&) = default;
  friend std::ostream& operator<<(std::ostream& os, const BinaryPattern& p) {
    return os << p.bits_;
  }

 private:
  std::string bits_;
};

}  // namespace qasida

template <>
struct std::hash<qasida::BinaryPattern> {
  std::size_t operator()(const qasida::BinaryPattern& p) const noexcept {
    return std::hash<std::string>{}(p.str());
  }
};
