#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qgaforge {

// Bit-order convention shared by the whole project: bitstrings print
// most-significant-bit first, so "1011" denotes basis index 11 and qubit 0
// is the most significant position of a register.

inline std::string index_to_bitstring(std::uint64_t index, int width) {
  if (width < 1 || width > 63) {
    throw std::out_of_range("bitstring width must be in [1, 63], got " +
                            std::to_string(width));
  }
  if (index >> width != 0) {
    throw std::out_of_range("index " + std::to_string(index) +
                            " does not fit in " + std::to_string(width) +
                            " bits");
  }
  std::string bits(static_cast<std::size_t>(width), '0');
  for (int j = 0; j < width; ++j) {
    if ((index >> (width - 1 - j)) & 1ULL) {
      bits[static_cast<std::size_t>(j)] = '1';
    }
  }
  return bits;
}

inline std::uint64_t bitstring_to_index(std::string_view bits) {
  if (bits.empty() || bits.size() > 63) {
    throw std::out_of_range("bitstring length must be in [1, 63], got " +
                            std::to_string(bits.size()));
  }
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring may contain only '0' and '1'");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return index;
}

}  // namespace qgaforge
