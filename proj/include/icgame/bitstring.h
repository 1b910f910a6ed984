// Copyright 2026 The icgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICGAME_BITSTRING_H
#define ICGAME_BITSTRING_H

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace icgame {

/// Fixed-length bit string x_1 ... x_n.
///
/// The packed value is read row-major: x_1 is the most significant bit. This
/// makes `value()` coincide with the flat index of the variables (x1, ..., xn)
/// in a JointDistribution, and with the Alice/Bob input index of a box whose
/// alphabet is the set of all n-bit strings.
class BitString {
   public:
    constexpr BitString() = default;
    constexpr BitString(int length, std::uint32_t value) : length_(length), value_(value) {
    }

    constexpr int length() const {
        return length_;
    }
    constexpr std::uint32_t value() const {
        return value_;
    }

    /// Bit x_{i+1} (0-based position from the left).
    constexpr int bit(int i) const {
        return static_cast<int>((value_ >> (length_ - 1 - i)) & 1u);
    }

    constexpr int weight() const {
        return std::popcount(value_);
    }

    /// Inner product x.y = x_1 y_1 xor ... xor x_n y_n.
    constexpr int dot(const BitString &other) const {
        return std::popcount(value_ & other.value_) & 1;
    }

    /// The weight-one string with a single 1 at position k (1-based).
    static constexpr BitString unit(int length, int k) {
        return BitString(length, 1u << (length - k));
    }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(length_), '0');
        for (int i = 0; i < length_; ++i) {
            s[static_cast<std::size_t>(i)] = bit(i) ? '1' : '0';
        }
        return s;
    }

    friend constexpr bool operator==(const BitString &, const BitString &) = default;

   private:
    int length_ = 0;
    std::uint32_t value_ = 0;
};

inline std::vector<BitString> all_strings(int n) {
    std::vector<BitString> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
        out.emplace_back(n, v);
    }
    return out;
}

/// e_1, ..., e_n in order of the position of their single 1.
inline std::vector<BitString> unit_strings(int n) {
    std::vector<BitString> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        out.push_back(BitString::unit(n, k));
    }
    return out;
}

}  // namespace icgame

#endif
