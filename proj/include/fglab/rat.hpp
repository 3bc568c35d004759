#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace fglab {

using Int = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& n) : q_(n) {}             // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);

  /// Parses "p" or "p/q" (decimal, optional sign).
  static Rat parse(std::string_view text);

  Int num() const { return Int(q_.get_num()); }
  Int den() const { return Int(q_.get_den()); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat inverse() const;
  Rat pow(long e) const;

  std::string str() const { return q_.get_str(); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { Rat r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
Int binomial(long n, long k);

/// 2-adic valuation of a nonzero integer.
int valuation2(const Int& n);

}  // namespace fglab
