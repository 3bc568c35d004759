#include "fglab/cannibal.hpp"

#include <cstdlib>
#include <optional>

#include "fglab/fgl.hpp"

namespace fglab {

namespace {

Rat pow3_inv(int e) { return Rat(3).pow(-e); }

// b_{i-k} of the 6-periodic form.
int periodic_b(int d) {
  switch (std::abs(d)) {
    case 0:
      return 2;
    case 1:
    case 2:
      return 1;
    case 3:
      return 0;
    default:
      return -1;
  }
}

// c_0n, c_m0 and c_1n, c_m1; nullopt when both indices are >= 2.
std::optional<Rat> theta3_edge(int m, int n) {
  if (m < 0 || n < 0) return Rat(0);
  if (m > n) std::swap(m, n);
  if (m == 0) return Rat(n == 0 ? 1 : 0);
  if (m == 1) return Rat(3) * theta_gen_closed(n + 1);
  return std::nullopt;
}

QSeries xy_context(int bound) { return QSeries({{"x", 1}, {"y", 1}}, bound); }

}  // namespace

std::vector<Rat> theta_gen(int n) {
  if (n < 0) throw IndexOutOfRange("sequence length must be non-negative");
  std::vector<Rat> t{Rat(1, 3), Rat(1, 3)};
  while (static_cast<int>(t.size()) <= n) t.push_back(t[t.size() - 1] - t[t.size() - 2] * Rat(1, 3));
  t.resize(static_cast<std::size_t>(n) + 1);
  return t;
}

Rat theta_gen_closed(int k) {
  if (k < 0) return Rat(0);
  int q = k / 6, r = k % 6;
  Rat sign(q % 2 == 0 ? 1 : -1);
  switch (r) {
    case 0:
    case 1:
      return sign * pow3_inv(3 * q + 1);
    case 2:
      return sign * Rat(2) * pow3_inv(3 * q + 2);
    case 3:
      return sign * pow3_inv(3 * q + 2);
    case 4:
      return sign * pow3_inv(3 * q + 3);
    default:
      return Rat(0);
  }
}

Rat ThetaTable::at(int m, int n) const {
  if (m < 0 || n < 0) return Rat(0);
  if (m > bound || n > bound) {
    throw IndexOutOfRange("c_" + std::to_string(m) + "," + std::to_string(n) + " beyond table bound " +
                          std::to_string(bound));
  }
  return c[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

std::vector<std::vector<Padic2>> ThetaTable::to_2adic(int precision) const {
  std::vector<std::vector<Padic2>> out;
  for (const auto& row : c) {
    std::vector<Padic2> r;
    for (const auto& x : row) r.push_back(embed_2adic(x, precision));
    out.push_back(std::move(r));
  }
  return out;
}

void ThetaTable::write_csv(std::ostream& os) const {
  os << "m";
  for (int n = 0; n <= bound; ++n) os << ',' << n;
  os << '\n';
  for (int m = 0; m <= bound; ++m) {
    os << m;
    for (int n = 0; n <= bound; ++n) os << ',' << at(m, n).str();
    os << '\n';
  }
}

QSeries theta3_series(int bound) {
  QSeries ctx = xy_context(bound);
  QSeries x = ctx.var("x"), y = ctx.var("y"), one = ctx.one_like();
  QSeries q = (one - x) * (one - y);
  QSeries num = (one + q + q * q).scaled(Rat(3));
  auto denom = [&](const QSeries& t) { return one.scaled(Rat(3)) - t.scaled(Rat(3)) + t * t; };
  return num * reciprocal(denom(x)) * reciprocal(denom(y));
}

ThetaTable theta3_direct(int bound) {
  if (bound < 0) throw IndexOutOfRange("table bound must be non-negative");
  QSeries s = theta3_series(2 * bound);
  ThetaTable t;
  t.bound = bound;
  t.c.assign(static_cast<std::size_t>(bound) + 1, std::vector<Rat>(static_cast<std::size_t>(bound) + 1, Rat(0)));
  parallel_for(static_cast<std::size_t>(bound + 1) * static_cast<std::size_t>(bound + 1), [&](std::size_t cell) {
    std::size_t m = cell / static_cast<std::size_t>(bound + 1), n = cell % static_cast<std::size_t>(bound + 1);
    t.c[m][n] = s.coeff(Exp{static_cast<int>(m), static_cast<int>(n)});
  });
  return t;
}

Rat theta3_bilinear(int m, int n) {
  auto t = [](int k) { return theta_gen_closed(k); };
  return Rat(9) * t(m) * t(n) - Rat(9) * t(m - 1) * t(n) - Rat(9) * t(m) * t(n - 1) + Rat(3) * t(m - 2) * t(n) +
         Rat(15) * t(m - 1) * t(n - 1) + Rat(3) * t(m) * t(n - 2) - Rat(6) * t(m - 2) * t(n - 1) -
         Rat(6) * t(m - 1) * t(n - 2) + Rat(3) * t(m - 2) * t(n - 2);
}

Rat theta3_periodic(int m, int n) {
  if (auto e = theta3_edge(m, n)) return *e;
  int bm = m / 6, i = m % 6, bn = n / 6, k = n % 6;
  Rat sign((bm + bn) % 2 == 0 ? 1 : -1);
  return sign * pow3_inv(3 * bm + 3 * bn + (i + k) / 2) * Rat(periodic_b(i - k));
}

Rat theta3_closed(int m, int n) {
  if (auto e = theta3_edge(m, n)) return *e;
  int d = ((m - n) % 12 + 12) % 12;
  int v;
  if (d % 6 == 0) {
    v = 2;
  } else if (d % 6 == 3) {
    v = 0;
  } else if (d == 1 || d == 2 || d == 10 || d == 11) {
    v = 1;
  } else {
    v = -1;
  }
  return pow3_inv((m + n) / 2) * Rat(v);
}

QSeries theta_of_bundle(int k, const VirtualBundle& bundle, int bound) {
  if (k < 1) throw UnsupportedK("cannibalistic classes need k >= 1");
  QSeries ctx = xy_context(bound);
  QSeries one = ctx.one_like();
  // L1* = 1/(1 - x), L2* = 1/(1 - y).
  QSeries dual_x = reciprocal(one - ctx.var("x")), dual_y = reciprocal(one - ctx.var("y"));
  QSeries lx = one - ctx.var("x"), ly = one - ctx.var("y");
  auto power = [&](const QSeries& pos, const QSeries& neg, int e) {
    return e >= 0 ? pos.pow(static_cast<unsigned>(e)) : neg.pow(static_cast<unsigned>(-e));
  };
  QSeries out = one;
  for (const auto& [ab, mult] : bundle) {
    if (mult == 0) continue;
    QSeries dual = power(dual_x, lx, ab.first) * power(dual_y, ly, ab.second);
    QSeries th = ctx.zero_like(), p = one;
    for (int t = 0; t < k; ++t) {
      th += p;
      p = p * dual;
    }
    QSeries factor = mult > 0 ? th : reciprocal(th);
    out = out * factor.pow(static_cast<unsigned>(std::abs(mult)));
  }
  return out;
}

QSeries theta_k_virtual(int k, int bound) {
  if (k < 1) throw UnsupportedK("cannibalistic classes need k >= 1");
  if (k % 2 == 0) throw EvenK("the stable class needs odd k, got " + std::to_string(k));
  QSeries ctx({{"xp", 1}, {"yp", 1}}, bound);
  QSeries xp = ctx.var("xp"), yp = ctx.var("yp");
  auto q = [&](const QSeries& t) {
    QSeries out = ctx.zero_like();
    for (int s = 1; s <= k; ++s) {
      Rat c(binomial(k, s));
      out += t.pow(static_cast<unsigned>(s - 1)).scaled(s % 2 == 1 ? c : -c);
    }
    return out;
  };
  return q(xp + yp - xp * yp).scaled(Rat(k)) * reciprocal(q(xp) * q(yp));
}

QSeries orientation_to_x(const QSeries& series_in_xp) {
  QSeries ctx = xy_context(series_in_xp.bound());
  QSeries one = ctx.one_like();
  auto transport = [&](const std::string& v) { return -(ctx.var(v) * reciprocal(one - ctx.var(v))); };
  return substitute(series_in_xp, {{"xp", transport("x")}, {"yp", transport("y")}}, ctx.vars(), ctx.bound());
}

QSeries thom_psi_dk(int k, const ThetaTable& theta, DReducer& reducer) {
  if (k < 2) throw UnsupportedK("d_k needs k >= 2");
  if (theta.bound < k) throw IndexOutOfRange("theta table bound " + std::to_string(theta.bound) + " < " + std::to_string(k));
  VarList avars = apoly_vars(k);
  auto n = nki_coeffs(k, reducer.mode());
  QSeries sum(avars, kUnbounded);
  for (int i = 1; i < k; ++i) {
    const Int& ni = n[static_cast<std::size_t>(i) - 1];
    if (ni == 0) continue;
    for (int m = 0; m <= i; ++m) {
      for (int q = 0; q <= k - i; ++q) {
        Rat c = theta.at(m, q);
        if (c.is_zero()) continue;
        sum += psi_on_a(avars, 3, i - m, k - i - q).scaled(c * Rat(ni));
      }
    }
  }
  return reducer.reduce(sum);
}

PsiTable thom_psi_table(int max_k, const ThetaTable& theta, DReducer& reducer) {
  PsiTable out;
  for (int k = 2; k <= max_k; ++k) out.emplace(k, thom_psi_dk(k, theta, reducer));
  return out;
}

}  // namespace fglab
