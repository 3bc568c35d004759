#pragma once

#include <concepts>
#include <ostream>

#include "fglab/rat.hpp"

namespace fglab {

/// The field with two elements.
class GF2 {
 public:
  GF2() = default;
  template <std::integral T>
  GF2(T n) : bit_((n % 2) != 0) {}  // NOLINT(google-explicit-constructor)

  /// Reduction of an integer mod 2.
  static GF2 from_int(const Int& n) { return GF2(mpz_odd_p(n.get_mpz_t()) != 0 ? 1 : 0); }
  /// Reduction of a rational with odd denominator; throws NotAUnit otherwise.
  static GF2 from_rat(const Rat& r);

  bool bit() const { return bit_; }
  bool is_zero() const { return !bit_; }
  GF2 inverse() const;

  GF2& operator+=(GF2 o) { bit_ ^= o.bit_; return *this; }
  GF2& operator-=(GF2 o) { bit_ ^= o.bit_; return *this; }
  GF2& operator*=(GF2 o) { bit_ = bit_ && o.bit_; return *this; }

  friend GF2 operator+(GF2 a, GF2 b) { return a += b; }
  friend GF2 operator-(GF2 a, GF2 b) { return a -= b; }
  friend GF2 operator*(GF2 a, GF2 b) { return a *= b; }
  friend GF2 operator-(GF2 a) { return a; }
  friend bool operator==(GF2 a, GF2 b) { return a.bit_ == b.bit_; }

  friend std::ostream& operator<<(std::ostream& os, GF2 g) { return os << (g.bit_ ? 1 : 0); }

 private:
  bool bit_ = false;
};

}  // namespace fglab
