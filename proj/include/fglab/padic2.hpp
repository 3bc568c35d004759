#pragma once

#include <climits>
#include <ostream>
#include <string>

#include "fglab/rat.hpp"

namespace fglab {

/// Truncated 2-adic integer.
///
/// A value with finite precision p is a residue 0 <= value < 2^p. Precision
/// `kExact` marks an exact integer (used for ring constants such as 0 and 1);
/// exact values may be negative and are reduced as soon as they meet a finite
/// operand. Binary operations carry the minimum precision of their operands.
class Padic2 {
 public:
  static constexpr int kExact = INT_MAX;

  Padic2() = default;
  template <std::integral T>
  Padic2(T n) : value_(static_cast<long>(n)), precision_(kExact) {}  // NOLINT
  Padic2(const Int& value, int precision);

  /// Embeds p/q with q odd; throws NotAUnit if q is even.
  static Padic2 from_rat(const Rat& r, int precision);

  const Int& value() const { return value_; }
  int precision() const { return precision_; }
  bool is_exact() const { return precision_ == kExact; }
  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }

  /// 2-adic valuation; returns `precision()` for a zero residue.
  int valuation() const;

  /// Same number viewed at a lower precision.
  Padic2 truncate(int precision) const;

  /// Multiplicative inverse of a unit; throws NotAUnit for even values.
  Padic2 inverse() const;

  /// Exact quotient a / b where v(b) <= v(a). The result loses v(b) bits:
  /// precision(a / b) = min(prec a, prec b) - v(b).
  static Padic2 divide(const Padic2& a, const Padic2& b);

  /// a == b modulo 2^min(prec a, prec b).
  static bool congruent(const Padic2& a, const Padic2& b);

  std::string str() const;

  Padic2& operator+=(const Padic2& o);
  Padic2& operator-=(const Padic2& o);
  Padic2& operator*=(const Padic2& o);

  friend Padic2 operator+(Padic2 a, const Padic2& b) { return a += b; }
  friend Padic2 operator-(Padic2 a, const Padic2& b) { return a -= b; }
  friend Padic2 operator*(Padic2 a, const Padic2& b) { return a *= b; }
  friend Padic2 operator-(const Padic2& a);

  /// Structural equality: same residue and same precision.
  friend bool operator==(const Padic2& a, const Padic2& b) {
    return a.precision_ == b.precision_ && a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Padic2& p) {
    return os << p.str();
  }

 private:
  void normalize();

  Int value_ = 0;
  int precision_ = kExact;
};

/// 2-adic logarithm log(u) = sum_{n>=1} (-1)^(n+1) (u-1)^n / n.
///
/// Requires u = 1 mod 4 and precision >= 4. Terms are summed until the lower
/// bound n*v(u-1) - floor(log2 n) on the valuation of every remaining term
/// reaches the working precision. For u = 1 mod 4 the precision loss bound
/// `padic_log_loss` is zero, so the result keeps the input precision.
Padic2 padic_log(const Padic2& u);

/// Precision loss of `padic_log` for an input with 2-adic valuation
/// `v = v(u - 1)` at precision `precision`.
int padic_log_loss(int v, int precision);

/// Inverse of a 2-adic unit; u * inverse(u) = 1 mod 2^precision.
Padic2 padic_inverse(const Padic2& u);

}  // namespace fglab
