#include "fglab/padic_mahler.hpp"

#include <algorithm>
#include <bit>

#include "fglab/adams.hpp"
#include "fglab/parallel.hpp"
#include "fglab/series_parse.hpp"

namespace fglab {

namespace {

void check_index(int i) {
  if (i < 0) throw IndexOutOfRange("binomial index must be non-negative, got " + std::to_string(i));
}

void check_odd(long k) {
  if (k % 2 == 0) throw NotAUnit("dilation factor " + std::to_string(k) + " is even");
}

// Forward differences of f(0), ..., f(n) at 0.
std::vector<Rat> differences_at_zero(std::vector<Rat> values) {
  std::vector<Rat> out;
  while (!values.empty()) {
    out.push_back(values.front());
    for (std::size_t r = 0; r + 1 < values.size(); ++r) values[r] = values[r + 1] - values[r];
    values.pop_back();
  }
  return out;
}

// x^0..x^n coefficients of y^j, j = 0..n, for y = sum_m y[m] x^m with y[0] = 0.
std::vector<std::vector<Int>> truncated_powers(const std::vector<Int>& y, int n) {
  std::size_t len = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<Int>> pw(len, std::vector<Int>(len, 0));
  pw[0][0] = 1;
  for (std::size_t j = 1; j < len; ++j) {
    for (std::size_t a = 0; a < len; ++a) {
      if (pw[j - 1][a] == 0) continue;
      for (std::size_t m = 1; a + m < len; ++m) pw[j][a + m] += pw[j - 1][a] * y[m];
    }
  }
  return pw;
}

int floor_log2(int i) { return i <= 1 ? 0 : std::bit_width(static_cast<unsigned>(i)) - 1; }

}  // namespace

RatPoly parse_poly(const std::string& text) {
  QSeries s = parse_series(text, {{"T", 1}}, kUnbounded);
  RatPoly p;
  for (const auto& [e, c] : s.terms()) {
    auto d = static_cast<std::size_t>(e[0]);
    if (p.size() <= d) p.resize(d + 1, Rat(0));
    p[d] = c;
  }
  return p;
}

Rat eval_poly(const RatPoly& p, const Rat& t) {
  Rat acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rat binomial_at(const Rat& x, int i) {
  check_index(i);
  Rat r(1);
  for (int s = 0; s < i; ++s) r = r * (x - Rat(s)) / Rat(s + 1);
  return r;
}

RatPoly binomial_poly(long k, int i) {
  check_index(i);
  RatPoly p{Rat(1)};
  for (int s = 0; s < i; ++s) {
    // p *= (k T - s) / (s + 1)
    RatPoly next(p.size() + 1, Rat(0));
    for (std::size_t e = 0; e < p.size(); ++e) {
      next[e + 1] += p[e] * Rat(k) / Rat(s + 1);
      next[e] -= p[e] * Rat(s) / Rat(s + 1);
    }
    p = std::move(next);
  }
  return p;
}

Rat NumPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) acc += a[i] * binomial_at(t, static_cast<int>(i));
  }
  return acc;
}

bool NumPoly::is_integral() const {
  return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c.is_integer(); });
}

std::vector<Int> NumPoly::integer_coeffs() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_integer()) throw NotNumerical("coefficient of C(T," + std::to_string(i) + ") is " + a[i].str());
    out.push_back(a[i].num());
  }
  return out;
}

std::string NumPoly::str() const {
  std::string out;
  for (std::size_t r = a.size(); r-- > 0;) {
    const Rat& c = a[r];
    if (c.is_zero()) continue;
    bool neg = c < Rat(0);
    Rat mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string basis = r == 0 ? "" : "C(T," + std::to_string(r) + ")";
    if (basis.empty()) {
      out += mag.str();
    } else {
      if (mag != Rat(1)) out += mag.str() + " ";
      out += basis;
    }
  }
  return out.empty() ? "0" : out;
}

NumPoly mahler_expand(const RatPoly& p, int n) {
  if (n < 0) throw IndexOutOfRange("expansion length must be non-negative");
  std::vector<Rat> values;
  for (int t = 0; t <= n; ++t) values.push_back(eval_poly(p, Rat(t)));
  NumPoly out{differences_at_zero(std::move(values))};
  return out;
}

NumPoly mahler_expand(const RatPoly& p) {
  int deg = 0;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (!p[e].is_zero()) deg = static_cast<int>(e);
  }
  return mahler_expand(p, deg);
}

NumPoly dilate(long k, int i) {
  check_index(i);
  check_odd(k);
  std::vector<Rat> values;
  for (int t = 0; t <= i; ++t) values.push_back(binomial_at(Rat(k) * Rat(t), i));
  return NumPoly{differences_at_zero(std::move(values))};
}

PadicNumPoly dilate(const Padic2& k, int i) {
  check_index(i);
  if (!k.is_unit()) throw NotAUnit("dilation factor " + k.str() + " is not a 2-adic unit");
  if (k.is_exact()) {
    PadicNumPoly out;
    for (const auto& c : dilate(k.value().get_si(), i).a) out.a.emplace_back(c.num(), Padic2::kExact);
    return out;
  }
  int precision = k.precision() - floor_log2(i);
  if (precision < 1) throw PrecisionTooLow("dilation index " + std::to_string(i) + " needs more than " +
                                           std::to_string(k.precision()) + " bits of k");
  std::vector<Int> y(static_cast<std::size_t>(i) + 1, 0);
  for (int m = 1; m <= i; ++m) {
    mpz_bin_ui(y[static_cast<std::size_t>(m)].get_mpz_t(), k.value().get_mpz_t(), static_cast<unsigned long>(m));
  }
  auto pw = truncated_powers(y, i);
  PadicNumPoly out;
  for (int j = 0; j <= i; ++j) {
    out.a.emplace_back(pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], precision);
  }
  return out;
}

IntMatrix dilation_matrix(long k, int n) {
  check_index(n);
  check_odd(k);
  auto size = static_cast<std::size_t>(n) + 1;
  IntMatrix m(size, size);
  parallel_for(size, [&](std::size_t i) {
    auto row = dilate(k, static_cast<int>(i)).integer_coeffs();
    for (std::size_t j = 0; j < row.size(); ++j) m.at(i, j) = row[j];
  });
  return m;
}

std::vector<std::vector<Padic2>> dilation_matrix(const Padic2& k, int n) {
  check_index(n);
  std::vector<std::vector<Padic2>> m;
  for (int i = 0; i <= n; ++i) {
    auto row = dilate(k, i).a;
    row.resize(static_cast<std::size_t>(n) + 1, Padic2(Int(0), row.front().precision()));
    m.push_back(std::move(row));
  }
  return m;
}

IntMatrix psi_matrix_l_minus_1(int k, int n) {
  check_index(n);
  QSeries ctx({{"x", 1}}, n);
  QSeries one = ctx.one_like();
  QSeries y = (one + ctx.var("x")).pow(static_cast<unsigned>(std::max(k, 0))) - one;
  auto size = static_cast<std::size_t>(n) + 1;
  IntMatrix m(size, size);
  QSeries p = one;
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t i = 0; i < size; ++i) {
      Rat c = p.coeff(Exp{static_cast<int>(i)});
      m.at(i, j) = c.num();
    }
    p = p * y;
  }
  return m;
}

DilationReport dilation_vs_adams(int n, int k) {
  DilationReport r;
  r.k = k;
  r.n = n;
  r.dilation = dilation_matrix(k, n);
  r.adams = psi_inv_matrix(k, n);
  r.adams_l_minus_1 = psi_matrix_l_minus_1(k, n);
  auto size = static_cast<std::size_t>(n) + 1;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const Int& d = r.dilation.at(i, j);
      Int conj = (i + j) % 2 == 0 ? Int(r.adams.at(i, j)) : Int(-r.adams.at(i, j));
      if (d != conj) {
        throw MismatchAt(static_cast<int>(i), static_cast<int>(j),
                         "dilation " + d.get_str() + " vs sign-conjugated Adams " + conj.get_str());
      }
      if (d != r.adams_l_minus_1.at(i, j)) {
        throw MismatchAt(static_cast<int>(i), static_cast<int>(j),
                         "dilation " + d.get_str() + " vs Adams for x = L - 1 " + r.adams_l_minus_1.at(i, j).get_str());
      }
    }
  }
  return r;
}

ArtinSchreierResult artin_schreier_check(const Padic2& u, int precision) {
  constexpr int kLog81Valuation = 4;
  if (precision < 1) throw PrecisionTooLow("Artin-Schreier check needs precision >= 1");
  int work = std::min(precision + kLog81Valuation, u.precision());
  if (work < kLog81Valuation + 1) throw PrecisionTooLow("u carries only " + std::to_string(u.precision()) + " bits");
  Padic2 uw = u.truncate(work);
  if ((uw - Padic2(1)).valuation() < 4) throw NotInDomain("u = " + uw.str() + " is not 1 mod 16");
  Padic2 log81 = padic_log(Padic2(81).truncate(work));
  ArtinSchreierResult r;
  r.b = -Padic2::divide(padic_log(uw), log81);
  r.shifted = -Padic2::divide(padic_log(uw * padic_inverse(Padic2(81).truncate(work))), log81);
  r.verified = r.shifted.precision() == r.b.precision() && Padic2::congruent(r.shifted, r.b + Padic2(1));
  return r;
}

}  // namespace fglab
