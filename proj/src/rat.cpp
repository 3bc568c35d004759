#include "fglab/rat.hpp"

#include <cctype>
#include <climits>

#include "fglab/error.hpp"

namespace fglab {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionUndefined("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  Int d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rat(parse_integer(num), d);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionUndefined("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw DivisionUndefined("inverse of zero");
  Rat r;
  r.q_ = 1 / q_;
  return r;
}

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rat r;
  mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

int valuation2(const Int& n) {
  if (n == 0) return INT_MAX;
  return static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
}

}  // namespace fglab
