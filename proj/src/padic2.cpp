#include "fglab/padic2.hpp"

#include <algorithm>

#include "fglab/error.hpp"

namespace fglab {

namespace {

Int mod_pow2(const Int& v, int bits) {
  Int r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

Int inverse_mod_pow2(const Int& odd, int bits) {
  if (bits == 0) return 0;
  Int modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  Int r;
  mpz_invert(r.get_mpz_t(), odd.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

int floor_log2(long n) {
  int e = -1;
  while (n > 0) {
    n >>= 1;
    ++e;
  }
  return e;
}

}  // namespace

Padic2::Padic2(const Int& value, int precision) : value_(value), precision_(precision) {
  if (precision < 0) throw PrecisionTooLow("negative 2-adic precision");
  normalize();
}

void Padic2::normalize() {
  if (precision_ != kExact) value_ = mod_pow2(value_, precision_);
}

Padic2 Padic2::from_rat(const Rat& r, int precision) {
  Int den = r.den();
  if (mpz_even_p(den.get_mpz_t())) {
    throw NotAUnit("denominator of " + r.str() + " is even; not a 2-adic integer");
  }
  if (precision == kExact) {
    if (den != 1) throw NotAUnit(r.str() + " is not an exact 2-adic integer; give a precision");
    return Padic2(r.num(), kExact);
  }
  return Padic2(r.num() * inverse_mod_pow2(mod_pow2(den, precision), precision), precision);
}

int Padic2::valuation() const {
  if (value_ == 0) return precision_;
  return valuation2(value_);
}

Padic2 Padic2::truncate(int precision) const {
  return Padic2(value_, std::min(precision, precision_));
}

Padic2 Padic2::inverse() const { return padic_inverse(*this); }

Padic2 Padic2::divide(const Padic2& a, const Padic2& b) {
  if (b.is_zero()) throw DivisionUndefined("2-adic division by a zero residue");
  int vb = b.valuation();
  int va = a.valuation();
  if (va < vb) throw DivisionUndefined("quotient is not a 2-adic integer");
  int p = std::min(a.precision_, b.precision_);
  Int an;
  Int bn;
  mpz_fdiv_q_2exp(an.get_mpz_t(), a.value_.get_mpz_t(), static_cast<mp_bitcnt_t>(vb));
  mpz_fdiv_q_2exp(bn.get_mpz_t(), b.value_.get_mpz_t(), static_cast<mp_bitcnt_t>(vb));
  if (p == kExact) {
    if (!mpz_divisible_p(an.get_mpz_t(), bn.get_mpz_t())) {
      throw NotAUnit("exact quotient is not an integer; give a precision");
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
    return Padic2(q, kExact);
  }
  int out = p - vb;
  return Padic2(an * inverse_mod_pow2(mod_pow2(bn, out), out), out);
}

bool Padic2::congruent(const Padic2& a, const Padic2& b) {
  int p = std::min(a.precision_, b.precision_);
  if (p == kExact) return a.value_ == b.value_;
  return mod_pow2(a.value_ - b.value_, p) == 0;
}

std::string Padic2::str() const {
  if (is_exact()) return value_.get_str();
  return value_.get_str() + " + O(2^" + std::to_string(precision_) + ")";
}

Padic2& Padic2::operator+=(const Padic2& o) {
  value_ += o.value_;
  precision_ = std::min(precision_, o.precision_);
  normalize();
  return *this;
}

Padic2& Padic2::operator-=(const Padic2& o) {
  value_ -= o.value_;
  precision_ = std::min(precision_, o.precision_);
  normalize();
  return *this;
}

Padic2& Padic2::operator*=(const Padic2& o) {
  value_ *= o.value_;
  precision_ = std::min(precision_, o.precision_);
  normalize();
  return *this;
}

Padic2 operator-(const Padic2& a) { return Padic2(-a.value_, a.precision_); }

Padic2 padic_inverse(const Padic2& u) {
  if (!u.is_unit()) throw NotAUnit(u.str() + " is even");
  if (u.is_exact()) {
    if (u.value() == 1 || u.value() == -1) return u;
    throw NotAUnit(u.str() + " has no exact inverse; give a precision");
  }
  return Padic2(inverse_mod_pow2(u.value(), u.precision()), u.precision());
}

int padic_log_loss(int v, int precision) {
  if (v < 1) throw NotInDomain("log series diverges for v(u - 1) < 1");
  // v(x^n / n) >= n v - floor(log2 n); an error of 2^p in x perturbs that term
  // by at least 2^(p + (n - 1) v - floor(log2 n)).
  int loss = 0;
  for (long n = 2; n <= static_cast<long>(precision) + 1; ++n) {
    loss = std::max(loss, floor_log2(n) - static_cast<int>((n - 1) * v));
  }
  return loss;
}

Padic2 padic_log(const Padic2& u) {
  if (u.precision() < 4) throw PrecisionTooLow("padic_log needs at least 4 bits");
  Padic2 x = u - Padic2(1);
  if (x.is_zero()) return Padic2(0, u.precision());
  if (x.valuation() < 2) throw NotInDomain(u.str() + " is not 1 mod 4");
  if (u.is_exact()) throw PrecisionTooLow("padic_log of an exact integer other than 1");

  const int p = u.precision();
  const int v = x.valuation();
  const int out = p - padic_log_loss(v, p);

  long last = 1;
  while (last * v - floor_log2(last) < out) ++last;
  // Terms 1..last-1 contribute; working modulus absorbs the 2-power of n.
  const int work = out + floor_log2(std::max(1L, last - 1)) + 1;

  Int sum = 0;
  Int xn = 1;
  for (long n = 1; n < last; ++n) {
    xn = mod_pow2(xn * x.value(), work);
    int e = valuation2(Int(n));
    Int odd = Int(n) >> e;
    Int term;
    mpz_fdiv_q_2exp(term.get_mpz_t(), xn.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    term *= inverse_mod_pow2(mod_pow2(odd, out), out);
    if (n % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return Padic2(sum, out);
}

}  // namespace fglab
