// Copyright 2026 The revseq Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

#include "revseq/gate.hpp"

namespace revseq {

/// Bit vectors are packed into a word: bit i of the word is line i,
/// so the string form "110" (line 0 leftmost) is the value 0b011 = 3.
using Bits = std::uint64_t;

namespace bits {

inline constexpr unsigned max_width = 64;

inline bool get(Bits v, Line line) { return (v >> line) & 1; }

inline Bits set(Bits v, Line line, bool value) {
  const Bits mask = Bits{1} << line;
  return value ? (v | mask) : (v & ~mask);
}

/// Renders line 0 first, matching the netlist `.lines` order.
inline std::string format(Bits v, unsigned width) {
  std::string s(width, '0');
  for (unsigned i = 0; i < width; ++i)
    if (get(v, i)) s[i] = '1';
  return s;
}

/// Parses a binary string with line 0 leftmost.
inline Bits parse(const std::string& s) {
  if (s.size() > max_width) throw std::invalid_argument("bit string wider than 64 lines");
  Bits v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v |= Bits{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("bit string may contain only 0 and 1: " + s);
  }
  return v;
}

}  // namespace bits
}  // namespace revseq
