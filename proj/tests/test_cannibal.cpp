#include <gtest/gtest.h>

#include <sstream>

#include "fglab/cannibal.hpp"
#include "fglab/series_parse.hpp"

namespace fglab {
namespace {

constexpr int kTableBound = 30;

const ThetaTable& table30() {
  static const ThetaTable t = theta3_direct(kTableBound);
  return t;
}

QSeries dpoly(const std::string& text, int max_k) { return parse_series(text, d_vars(max_k), kUnbounded); }

MultiSeries<GF2> gf2(const std::string& text, int max_k) {
  return dpoly(text, max_k).map_coeffs([](const Rat& c) { return reduce_mod2(c); });
}

struct ThomFixture {
  int max_k;
  DReducer reducer;
  PsiTable table;

  explicit ThomFixture(int n)
      : max_k(n), reducer(gen_2structure_relations(n), NkiMode::kPaper), table(thom_psi_table(n, theta3_direct(n), reducer)) {}
};

const ThomFixture& thom10() {
  static const ThomFixture f(10);
  return f;
}

TEST(ThetaGen, RecurrenceAndClosedForm) {
  auto t = theta_gen(60);
  ASSERT_EQ(t.size(), 61u);
  EXPECT_EQ(t[0], Rat(1, 3));
  EXPECT_EQ(t[5], Rat(0));
  EXPECT_EQ(t[6], Rat(-1, 81));
  for (int k = 0; k <= 60; ++k) EXPECT_EQ(t[static_cast<std::size_t>(k)], theta_gen_closed(k)) << k;
}

TEST(ThetaGen, GeneratingFunction) {
  QSeries ctx({{"x", 1}}, 40);
  QSeries x = ctx.var("x");
  QSeries f = reciprocal(ctx.one_like().scaled(Rat(3)) - x.scaled(Rat(3)) + x * x);
  auto t = theta_gen(40);
  for (int k = 0; k <= 40; ++k) EXPECT_EQ(f.coeff(Exp{k}), t[static_cast<std::size_t>(k)]);
}

TEST(Theta3, DirectTableBasics) {
  const auto& t = table30();
  EXPECT_EQ(t.at(0, 0), Rat(1));
  EXPECT_EQ(t.at(2, 2), Rat(2, 9));
  EXPECT_EQ(t.at(-1, 4), Rat(0));
  EXPECT_THROW(t.at(31, 0), IndexOutOfRange);
  auto tg = theta_gen(kTableBound + 1);
  for (int n = 0; n <= kTableBound; ++n) {
    EXPECT_EQ(t.at(0, n), Rat(n == 0 ? 1 : 0));
    if (n >= 1) EXPECT_EQ(t.at(1, n), Rat(3) * tg[static_cast<std::size_t>(n) + 1]) << n;
  }
  EXPECT_EQ(t.at(1, 0), Rat(0));
}

TEST(Theta3, SymmetricAndVanishing) {
  const auto& t = table30();
  for (int m = 0; m <= kTableBound; ++m) {
    for (int n = 0; n <= kTableBound; ++n) {
      EXPECT_EQ(t.at(m, n), t.at(n, m));
      if (m >= 2 && n >= 2 && ((m - n) % 6 + 6) % 6 == 3) EXPECT_TRUE(t.at(m, n).is_zero()) << m << "," << n;
    }
  }
}

TEST(Theta3, BilinearAndPeriodicFormsMatchDivision) {
  const auto& t = table30();
  for (int m = 0; m <= kTableBound; ++m) {
    for (int n = 0; n <= kTableBound; ++n) {
      EXPECT_EQ(theta3_bilinear(m, n), t.at(m, n)) << m << "," << n;
      EXPECT_EQ(theta3_periodic(m, n), t.at(m, n)) << m << "," << n;
    }
  }
}

// The residue-class rule agrees with the series except at m - n = 6 (mod 12),
// where it has the opposite sign.
TEST(Theta3, ResidueRuleAgreementPattern) {
  const auto& t = table30();
  EXPECT_EQ(theta3_closed(0, 3), Rat(0));
  EXPECT_EQ(theta3_closed(2, 2), Rat(2, 9));
  EXPECT_EQ(theta3_closed(2, 8), Rat(2, 243));
  EXPECT_EQ(t.at(2, 8), Rat(-2, 243));
  for (int m = 0; m <= kTableBound; ++m) {
    for (int n = 0; n <= kTableBound; ++n) {
      bool flips = m >= 2 && n >= 2 && ((m - n) % 12 + 12) % 12 == 6;
      EXPECT_EQ(theta3_closed(m, n), flips ? -t.at(m, n) : t.at(m, n)) << m << "," << n;
    }
  }
}

TEST(Theta3, DenominatorsArePowersOfThree) {
  const auto& t = table30();
  for (const auto& row : t.c) {
    for (const auto& c : row) {
      Int d = c.den();
      while (d % 3 == 0) d /= 3;
      EXPECT_EQ(d, 1);
    }
  }
  auto p = t.to_2adic(48);
  EXPECT_TRUE(Padic2::congruent(p[1][1] * Padic2(3), Padic2(2)));
}

TEST(Theta3, CsvLayout) {
  std::ostringstream os;
  theta3_direct(2).write_csv(os);
  EXPECT_EQ(os.str(), "m,0,1,2\n0,1,0,0\n1,0,2/3,1/3\n2,0,1/3,2/9\n");
}

// Line-bundle formula plus multiplicativity, independent of the closed
// rational expression.
TEST(ThetaBundle, UniversalBundleMatchesDivision) {
  VirtualBundle universal{{{0, 0}, 1}, {{1, 1}, 1}, {{1, 0}, -1}, {{0, 1}, -1}};
  EXPECT_EQ(theta_of_bundle(3, universal, 16), theta3_series(16));
}

TEST(ThetaBundle, Multiplicative) {
  const int bound = 10;
  VirtualBundle one_minus_l1{{{0, 0}, 1}, {{1, 0}, -1}};
  VirtualBundle one_minus_l2{{{0, 0}, 1}, {{0, 1}, -1}};
  VirtualBundle sum{{{0, 0}, 2}, {{1, 0}, -1}, {{0, 1}, -1}};
  for (int k : {2, 3, 5}) {
    EXPECT_EQ(theta_of_bundle(k, sum, bound),
              theta_of_bundle(k, one_minus_l1, bound) * theta_of_bundle(k, one_minus_l2, bound));
    VirtualBundle trivial{{{0, 0}, 3}};
    EXPECT_EQ(theta_of_bundle(k, trivial, bound), QSeries({{"x", 1}, {"y", 1}}, bound).constant_like(Rat(k * k * k)));
  }
  // 3 (1 - x)^2 / (3 - 3x + x^2) in each variable.
  QSeries ctx({{"x", 1}, {"y", 1}}, bound);
  QSeries x = ctx.var("x"), one = ctx.one_like();
  QSeries factor = ((one - x) * (one - x)).scaled(Rat(3)) * reciprocal(one.scaled(Rat(3)) - x.scaled(Rat(3)) + x * x);
  EXPECT_EQ(theta_of_bundle(3, one_minus_l1, bound), factor);
}

TEST(ThetaVirtual, TransportsToDirectSeries) {
  EXPECT_EQ(orientation_to_x(theta_k_virtual(3, 14)), theta3_series(14));
  QSeries one({{"xp", 1}, {"yp", 1}}, 8);
  EXPECT_EQ(theta_k_virtual(1, 8), one.one_like());
  EXPECT_THROW(theta_k_virtual(4, 8), EvenK);
}

TEST(ThetaVirtual, InvariantUnderDuality) {
  const int bound = 14;
  QSeries s = theta3_series(bound);
  QSeries ctx({{"x", 1}, {"y", 1}}, bound);
  QSeries one = ctx.one_like();
  auto dual = [&](const std::string& v) { return -(ctx.var(v) * reciprocal(one - ctx.var(v))); };
  EXPECT_EQ(substitute(s, {{"x", dual("x")}, {"y", dual("y")}}, ctx.vars(), bound), s);
}

TEST(ThomPsi, LowGenerators) {
  const auto& f = thom10();
  EXPECT_EQ(f.table.at(2), dpoly("9 d2 + 2/3", 10));
  EXPECT_EQ(f.table.at(3), dpoly("27 d3 - 9 d2 + 1/3", 10));
  EXPECT_EQ(f.table.at(4), dpoly("81 d4 + 12 d2 + 1/9", 10));
  EXPECT_EQ(f.table.at(5), dpoly("243 d5 - 486 d4 + 243 d2^2 - 198 d3", 10));
}

// With only c_00 = 1 the formula collapses to the base-level operation; the
// remaining entries account for the whole difference.
TEST(ThomPsi, UnitThetaGivesBaseLevel) {
  ThetaTable unit;
  unit.bound = 7;
  unit.c.assign(8, std::vector<Rat>(8, Rat(0)));
  unit.c[0][0] = Rat(1);
  DReducer red(gen_2structure_relations(7), NkiMode::kPaper);
  for (int k = 2; k <= 7; ++k) EXPECT_EQ(thom_psi_dk(k, unit, red), psi_on_dk(k, red)) << k;
  QSeries diff = thom_psi_dk(4, theta3_direct(7), red) - psi_on_dk(4, red);
  EXPECT_EQ(diff, dpoly("6 d2 + 1/9", 7));
}

TEST(ThomPsi, Errors) {
  DReducer red(gen_2structure_relations(6), NkiMode::kPaper);
  EXPECT_THROW(thom_psi_dk(5, theta3_direct(3), red), IndexOutOfRange);
  EXPECT_THROW(thom_psi_dk(1, theta3_direct(3), red), UnsupportedK);
  EXPECT_THROW(thom_psi_dk(8, theta3_direct(8), red), NotReducible);
}

TEST(ThomPsi, Mod2Table) {
  auto m2 = psi_table_mod2(thom10().table);
  EXPECT_EQ(m2.at(2), gf2("d2", 10));
  EXPECT_EQ(m2.at(3), gf2("d3 + d2 + 1", 10));
  EXPECT_EQ(m2.at(4), gf2("d4 + 1", 10));
  EXPECT_EQ(m2.at(5), gf2("d5 + d2^2", 10));
}

TEST(ThomSpherical, SearchToWeight20) {
  auto m2 = psi_table_mod2(thom10().table);
  auto classes = spherical_search(20, m2);
  std::map<int, int> count;
  for (const auto& c : classes) {
    ++count[c.weight];
    EXPECT_TRUE(is_spherical(c.z, m2)) << dpoly_str(c.z);
  }
  EXPECT_EQ(count[4], 1);
  EXPECT_EQ(count[6], 0);
  for (const char* z : {"d2", "d3^2 + d5 + d4 + d2^2", "d4^2 + d4", "d5^2 + d2^2 d5"}) {
    EXPECT_TRUE(is_spherical(gf2(z, 10), m2)) << z;
  }
}

// psi(d2 + c) - (d2 + c) = 8 d2 + 2/3 for every constant c, so no lift of d2
// is fixed modulo 4.
TEST(ThomSpherical, LiftOfD2IsObstructed) {
  auto table = psi_table_2adic(thom10().table, 64);
  try {
    bootstrap_lift(gf2("d2", 10), table, 10);
    FAIL() << "expected LiftObstruction";
  } catch (const LiftObstruction& e) {
    EXPECT_EQ(e.stage(), 1);
  }
}

}  // namespace
}  // namespace fglab
