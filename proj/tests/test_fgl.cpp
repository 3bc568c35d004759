#include <gtest/gtest.h>

#include "fglab/bordism.hpp"
#include "fglab/fgl.hpp"
#include "support.hpp"

using namespace fglab;
using fglab::test::kSeed;
using fglab::test::P;

namespace {

QSeries plain_ctx(int bound) { return QSeries(law_vars({}), bound); }

QSeries random_strict(std::mt19937_64& rng, const QSeries& ctx, int upto) {
  QSeries x = ctx.var("x");
  QSeries g = x;
  QSeries xp = x;
  for (int i = 2; i <= upto; ++i) {
    xp = xp * x;
    g += xp.scaled(test::random_rat(rng));
  }
  return g;
}

// Twist of x + y + v x y by the generic strict series with b1..bn.
FGL twisted_k(int n, int bound) {
  QSeries ctx(law_vars(vb_symbols(n)), bound);
  return fgl_twist(FGL(multiplicative_law(ctx.vars(), bound)), generic_strict_series(ctx, n));
}

QSeries vb_poly(const std::string& text, int n) {
  VarList sym;
  for (const auto& s : vb_symbols(n)) sym.push_back({s, 0});
  return parse_series(text, sym, kUnbounded);
}

}  // namespace

TEST(FglCheck, ValidLaws) {
  QSeries c(law_vars({"v"}), 8);
  EXPECT_NO_THROW(fgl_check(P("x + y", c)));
  EXPECT_NO_THROW(fgl_check(P("x + y + v x y", c)));
}

TEST(FglCheck, ReportsAxiomAndMonomial) {
  QSeries c = plain_ctx(6);
  try {
    fgl_check(P("x + y + x^2", c));
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "unit");
    EXPECT_EQ(e.monomial(), "x^2");
  }
  try {
    fgl_check(P("x + y + x^2 y", c));
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "commutativity");
  }
  try {
    fgl_check(P("x + y + x^2 y^2", c));
    FAIL() << "expected AxiomViolation";
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.axiom(), "associativity");
  }
}

TEST(FglTwist, IdentityTwist) {
  QSeries c(law_vars({"v"}), 8);
  FGL f(multiplicative_law(c.vars(), 8));
  EXPECT_EQ(fgl_twist(f, c.var("x")).law(), f.law());
}

TEST(FglTwist, CoefficientImages) {
  FGL t = twisted_k(4, 5);
  EXPECT_EQ(t.a(1, 1), vb_poly("v + 2b1", 4));
  EXPECT_EQ(t.a(2, 1), vb_poly("v b1 - 2b1^2 + 3b2", 4));
  EXPECT_EQ(t.a(3, 1), vb_poly("2v b2 - 2v b1^2 + 4b3 - 8b1 b2 + 4b1^3", 4));
  EXPECT_EQ(t.a(2, 2), vb_poly("v^2 b1 - 3v b1^2 + 2b1^3 - 6b1 b2 + 6v b2 + 6b3", 4));
  EXPECT_EQ(t.a(4, 1), vb_poly("5v b1^3 - 8v b1 b2 + 25b1^2 b2 + 3v b3 - 10b1^4 - 14b1 b3 - 6b2^2 + 5b4", 4));
  EXPECT_EQ(t.a(3, 2), vb_poly("-2v^2 b1^2 + 3v^2 b2 + 6v b1^3 - 16v b1 b2 + 12v b3 - 4b1^4 + 14b1^2 b2 - 16b1 b3 "
                               "- 3b2^2 + 10b4",
                               4));
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; i + j <= 5; ++j) EXPECT_EQ(t.a(i, j), t.a(j, i));
  }
  EXPECT_EQ(homogeneous_degree(t.law()), -1);
}

TEST(FglTwist, ConjugationOracle) {
  // g(F(x, y)) = F^g(g(x), g(y)) without any compositional inverse.
  const int n = 5;
  QSeries ctx(law_vars(vb_symbols(n - 1)), n);
  QSeries g = generic_strict_series(ctx, n - 1);
  FGL t = twisted_k(n - 1, n);
  QSeries gy = substitute(g, {{"x", ctx.var("y")}}, ctx.vars(), n);
  QSeries lhs = substitute(t.law(), {{"x", g}, {"y", gy}}, ctx.vars(), n);
  QSeries rhs = compose(g, "x", multiplicative_law(ctx.vars(), n));
  EXPECT_EQ(lhs, rhs);
  // Numeric spot check of the x^3 y^2 coefficient at v = 2, b1 = b2 = 1.
  std::map<std::string, QSeries> at;
  QSeries scalars(VarList{}, kUnbounded);
  at.emplace("v", scalars.constant_like(Rat(2)));
  at.emplace("b1", scalars.one_like());
  at.emplace("b2", scalars.one_like());
  at.emplace("b3", scalars.zero_like());
  at.emplace("b4", scalars.zero_like());
  EXPECT_EQ(substitute(t.a(3, 2), at, {}, kUnbounded).constant_term(), Rat(-9));
}

TEST(FglTwist, RandomTwistsAreLawsToBoundTwelve) {
  std::mt19937_64 rng(kSeed);
  QSeries ctx(law_vars({"v"}), 12);
  FGL fk(multiplicative_law(ctx.vars(), 12));
  for (int t = 0; t < 3; ++t) {
    FGL tw = fgl_twist(fk, random_strict(rng, ctx, 12));
    EXPECT_NO_THROW(fgl_check(tw.law()));
  }
}

TEST(FglTwist, GroupActionAndLogarithm) {
  std::mt19937_64 rng(kSeed + 1);
  QSeries ctx = plain_ctx(8);
  FGL f(P("x + y - x y", ctx));
  for (int t = 0; t < 5; ++t) {
    QSeries g = random_strict(rng, ctx, 8);
    QSeries ginv = comp_inverse(g, "x");
    FGL tw = fgl_twist(f, g);
    EXPECT_EQ(fgl_twist(tw, ginv).law(), f.law());
    EXPECT_EQ(fgl_log(tw), compose(fgl_log(f), "x", ginv));
  }
}

TEST(FglLog, ClassicalLogarithms) {
  QSeries ctx = plain_ctx(10);
  EXPECT_EQ(fgl_log(FGL(P("x + y", ctx))), ctx.var("x"));
  QSeries expected = ctx.zero_like();
  for (int n = 1; n <= 10; ++n) expected.add_term({n, 0}, Rat(Int(1), Int(n)));
  FGL mult(P("x + y - x y", ctx));
  QSeries l = fgl_log(mult);
  EXPECT_EQ(l, expected);
  // Rebuild the law from its logarithm: F = l^-1(l(x) + l(y)).
  QSeries ly = substitute(l, {{"x", ctx.var("y")}}, ctx.vars(), 10);
  EXPECT_EQ(compose(comp_inverse(l, "x"), "x", l + ly), mult.law());
}

TEST(FglFromGenus, AdditiveAndTodd) {
  QSeries ctx = plain_ctx(10);
  EXPECT_EQ(fgl_from_genus(ctx.one_like()).law(), P("x + y", ctx));
  // Todd: x / (1 - e^{-x}); truncated one order higher before division.
  QSeries wide = plain_ctx(11);
  QSeries one_minus_exp = wide.zero_like();
  Rat fact(1);
  for (int n = 1; n <= 11; ++n) {
    fact *= Rat(n);
    one_minus_exp.add_term({n, 0}, Rat(n % 2 == 1 ? 1 : -1) / fact);
  }
  QSeries q = coeff_in(one_minus_exp, "x", 0).zero_like();
  for (const auto& [e, c] : one_minus_exp.terms()) q.add_term({e[0] - 1, 0}, c);
  QSeries todd = reciprocal(q).with_bound(10);
  todd = retarget(todd, ctx.vars(), 10);
  EXPECT_EQ(fgl_from_genus(todd).law(), P("x + y - x y", ctx));
  EXPECT_EQ(todd_series(ctx), todd);
  EXPECT_EQ(todd.coeff({1, 0}), Rat(1, 2));
  EXPECT_EQ(todd.coeff({2, 0}), Rat(1, 12));
  EXPECT_EQ(todd.coeff({3, 0}), Rat(0));
  EXPECT_EQ(todd.coeff({4, 0}), Rat(-1, 720));
  EXPECT_THROW(todd_series(QSeries(law_vars({}), kUnbounded)), BoundMismatch);
}

TEST(FglFromGenus, RandomGenusGivesALaw) {
  std::mt19937_64 rng(kSeed + 2);
  QSeries ctx = plain_ctx(7);
  for (int t = 0; t < 5; ++t) {
    QSeries p = ctx.one_like();
    for (int k = 1; k <= 7; ++k) p.add_term({k, 0}, test::random_rat(rng));
    EXPECT_NO_THROW(fgl_check(fgl_from_genus(p).law()));
  }
}

TEST(FglBinom, PowerZero) {
  QSeries ctx = plain_ctx(6);
  auto table = fgl_binom(FGL(P("x + y - x y", ctx)), 0);
  ASSERT_EQ(table.size(), 1U);
  EXPECT_EQ(table.begin()->first, std::make_pair(0, 0));
  EXPECT_EQ(table.begin()->second.constant_term(), Rat(1));
}

TEST(FglBinom, MultiplicativeClosedForm) {
  // x + y - u x y with u standing for 1/v.
  QSeries ctx(law_vars({"u"}), 12);
  FGL f(P("x + y - u x y", ctx));
  for (int k = 1; k <= 5; ++k) {
    auto table = fgl_binom(f, k);
    for (int i = 0; i <= 12; ++i) {
      for (int j = 0; i + j <= 12; ++j) {
        QSeries expected(f.symbol_vars(), kUnbounded);
        int c = i + j - k;
        if (c >= 0 && k - i >= 0 && k - j >= 0) {
          Int coef = binomial(k, 2 * k - i - j) * binomial(2 * k - i - j, k - j);
          expected.add_term({c}, Rat(c % 2 == 0 ? coef : -coef));
        }
        auto it = table.find({i, j});
        QSeries got = it == table.end() ? QSeries(f.symbol_vars(), kUnbounded) : it->second;
        EXPECT_EQ(got, expected) << k << " " << i << " " << j;
      }
    }
  }
}

TEST(FglBinom, TableReassemblesThePower) {
  std::mt19937_64 rng(kSeed + 3);
  QSeries ctx = plain_ctx(7);
  for (int t = 0; t < 3; ++t) {
    FGL f = fgl_twist(FGL(P("x + y", ctx)), random_strict(rng, ctx, 7));
    QSeries cube = f.law() * f.law() * f.law();
    for (int k = 0; k <= 5; ++k) {
      QSeries sum = ctx.zero_like();
      for (const auto& [ij, c] : fgl_binom(f, k)) sum.add_term({ij.first, ij.second}, c.constant_term());
      EXPECT_EQ(sum, f.law().pow(static_cast<unsigned>(k)));
      if (k == 3) EXPECT_EQ(sum, cube);
    }
  }
}

TEST(CpnInA, ModesAgreeBelowFour) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(retarget(cpn_in_a(n, CpnMode::kPaperBox), a_vars(4), kUnbounded),
              retarget(cpn_in_a(n, CpnMode::kResidueExact), a_vars(4), kUnbounded));
  }
  EXPECT_EQ(cpn_in_a(1, CpnMode::kResidueExact), parse_series("-a11", a_vars(1), kUnbounded));
  EXPECT_EQ(cpn_in_a(3, CpnMode::kResidueExact), parse_series("-a13 - a11^3 + 2a11 a12", a_vars(3), kUnbounded));
}

TEST(CpnInA, FourDiffersBetweenModes) {
  QSeries exact = cpn_in_a(4, CpnMode::kResidueExact);
  EXPECT_EQ(exact, parse_series("-a14 + 2a11 a13 + a12^2 - 3a11^2 a12 + a11^4", a_vars(4), kUnbounded));
  EXPECT_EQ(cpn_in_a(4, CpnMode::kPaperBox) - exact, parse_series("3a11^2 a12", a_vars(4), kUnbounded));
  EXPECT_THROW(cpn_in_a(5, CpnMode::kPaperBox), UnsupportedDimension);
  EXPECT_NO_THROW(cpn_in_a(8, CpnMode::kResidueExact));
}

TEST(CpnInA, ResidueExactMatchesLogarithmDerivative) {
  std::mt19937_64 rng(kSeed + 4);
  QSeries ctx(law_vars({"v"}), 9);
  FGL f = fgl_twist(FGL(multiplicative_law(ctx.vars(), 9)), random_strict(rng, ctx, 9));
  QSeries dlog = derivative(fgl_log(f), "x");
  for (int n = 1; n <= 8; ++n) {
    std::map<std::string, QSeries> images;
    for (int s = 2; s <= n + 1; ++s) {
      for (int i = 1; 2 * i <= s; ++i) images.emplace(a_name(i, s - i), f.a(i, s - i));
    }
    QSeries image = substitute(cpn_in_a(n, CpnMode::kResidueExact), images, f.symbol_vars(), kUnbounded);
    EXPECT_EQ(image, retarget(coeff_in(dlog, "x", n), f.symbol_vars(), kUnbounded)) << n;
  }
}

TEST(Bordism, ParsesBuiltinsAndProducts) {
  BordismExpr n = BordismExpr::parse("8*CP4 - 25*CP1xCP3 - 12*CP2xCP2 - 23*CP1^4 + 52*CP1^2xCP2");
  EXPECT_EQ(n, BordismExpr::parse("N"));
  EXPECT_EQ(n.dimension(), 4);
  EXPECT_EQ(BordismExpr::parse("1/4*K3SQ"),
            BordismExpr::parse("64*CP2xCP2 + 81*CP1^4 - 144*CP1^2xCP2"));
  EXPECT_EQ(BordismExpr::parse("CP3xCP1"), BordismExpr::parse("CP1xCP3"));
  EXPECT_THROW(BordismExpr::parse("CP1 + CP2").dimension(), DimensionMismatch);
  EXPECT_THROW(BordismExpr::parse("3*RP2"), ParseError);
  EXPECT_EQ(BordismExpr::parse("2*CP1^2xCP2 - CP4").str(), "-CP4 + 2*CP1^2xCP2");
}

TEST(Miscenko, ProjectiveLine) {
  FGL t = twisted_k(4, 5);
  EXPECT_EQ(miscenko_image(BordismExpr::parse("CP1"), t, CpnMode::kPaperBox), vb_poly("-v - 2b1", 4));
}

TEST(Miscenko, NMatchesTabulatedPolynomial) {
  FGL t = twisted_k(4, 5);
  EXPECT_EQ(miscenko_image(BordismExpr::parse("N"), t, CpnMode::kPaperBox),
            vb_poly("-112v b1^3 + 340v b1 b2 + 256b1^2 b2 - 60v b3 - 184b1^4 + 40b1 b3 + 12b2^2 - 40b4 "
                    "+ 48v^2 b2 + 58v^2 b1^2 + 22v^3 b1",
                    4));
}

TEST(Miscenko, K3SquaredFactorsThroughK3) {
  // K3SQ = (18 CP1^2 - 16 CP2)^2, so its image is the square of the K3 image.
  FGL t = twisted_k(4, 5);
  QSeries k3 = miscenko_image(BordismExpr::parse("18*CP1^2 - 16*CP2"), t, CpnMode::kPaperBox);
  QSeries quarter = miscenko_image(BordismExpr::parse("1/4*K3SQ"), t, CpnMode::kPaperBox);
  EXPECT_EQ(quarter, (k3 * k3).scaled(Rat(Int(1), Int(4))));
  EXPECT_EQ(quarter, vb_poly("v^4 + 24v^3 b1 + 120v^2 b1^2 + 48v^2 b2 - 288v b1^3 + 576v b1 b2 + 144b1^4 "
                             "- 576b1^2 b2 + 576b2^2",
                             4));
}

TEST(Miscenko, BottClassIsV4ModSixteen) {
  FGL t = twisted_k(4, 5);
  QSeries m = miscenko_image(BordismExpr::parse("1/4*K3SQ + 12*N"), t, CpnMode::kPaperBox);
  QSeries rest = m - vb_poly("v^4", 4);
  EXPECT_EQ(rest.scaled(Rat(Int(1), Int(16))),
            vb_poly("18v^3 b1 + 51v^2 b1^2 + 39v^2 b2 - 102v b1^3 + 291v b1 b2 - 45v b3 - 129b1^4 + 30b1 b3 "
                    "+ 156b1^2 b2 + 45b2^2 - 30b4",
                    4));
  for (const auto& [e, c] : rest.terms()) {
    EXPECT_TRUE(c.is_integer());
    EXPECT_EQ(c.num() % 16, 0);
  }
}

TEST(Miscenko, ResidueExactN) {
  FGL t = twisted_k(4, 5);
  EXPECT_EQ(miscenko_image(BordismExpr::parse("N"), t, CpnMode::kResidueExact),
            vb_poly("-2v^3 b1 + 10v^2 b1^2 - 24v^2 b2 - 16v b1^3 + 52v b1 b2 - 60v b3 + 8b1^4 - 32b1^2 b2 "
                    "+ 40b1 b3 + 12b2^2 - 40b4",
                    4));
}
