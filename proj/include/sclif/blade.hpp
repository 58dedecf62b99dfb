#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sclif/scalar.hpp"

namespace sclif {

inline constexpr int kMaxGenerators = 16;

using BladeMask = std::uint32_t;

// Squares of the odd generators e_1..e_n, each +1, -1 or 0. Constructed from
// (p, q, r) the +1 entries come first, then the -1 entries, then the zeros.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<int> squares, Field field);

  static Signature real(int p, int q, int r);
  static Signature complex(int p, int q);

  int n() const noexcept { return static_cast<int>(squares_.size()); }
  std::size_t dim() const noexcept { return std::size_t{1} << squares_.size(); }
  int square(int i) const { return squares_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& squares() const noexcept { return squares_; }
  Field field() const noexcept { return field_; }

  int p() const;
  int q() const;
  int r() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> squares_;
  Field field_ = Field::Real;
};

inline int blade_degree(BladeMask m) { return std::popcount(m); }
inline int blade_parity(BladeMask m) { return std::popcount(m) & 1; }

// Number of pairs (i in a, j in b) with i > j: the transpositions needed to
// sort the concatenated generator word a·b.
inline int transposition_count(BladeMask a, BladeMask b) {
  int t = 0;
  for (BladeMask s = a >> 1; s != 0; s >>= 1) t += std::popcount(s & b);
  return t;
}

struct BladeProduct {
  int coeff;       // -1, 0 or +1
  BladeMask mask;  // a XOR b
};

// Unchecked kernel; squares must hold at least the generators in a & b.
inline BladeProduct blade_mul_raw(BladeMask a, BladeMask b, const int* squares) {
  int sign = (transposition_count(a, b) & 1) ? -1 : 1;
  for (BladeMask common = a & b; common != 0; common &= common - 1) {
    sign *= squares[std::countr_zero(common)];
    if (sign == 0) break;
  }
  return {sign, a ^ b};
}

BladeProduct blade_mul(BladeMask a, BladeMask b, const Signature& sig);

// "e1*e3*e4", "1" for the empty blade.
std::string blade_name(BladeMask m);

}  // namespace sclif
