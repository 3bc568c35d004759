#include <gtest/gtest.h>

#include <bit>

#include "fglab/adams.hpp"
#include "fglab/bordism.hpp"
#include "fglab/padic_mahler.hpp"
#include "support.hpp"

namespace fglab {
namespace {

using test::kSeed;

NumPoly numpoly(std::initializer_list<long> a) {
  NumPoly p;
  for (long c : a) p.a.emplace_back(c);
  return p;
}

// sum c_i C(T, i) as a polynomial in T.
RatPoly from_binomial_basis(const std::vector<Rat>& c) {
  RatPoly p;
  for (std::size_t i = 0; i < c.size(); ++i) {
    RatPoly b = binomial_poly(1, static_cast<int>(i));
    if (p.size() < b.size()) p.resize(b.size(), Rat(0));
    for (std::size_t e = 0; e < b.size(); ++e) p[e] += c[i] * b[e];
  }
  return p;
}

Padic2 at_precision(long k, int bits) { return Padic2(Int(k), bits); }

Padic2 exact(const Int& n) { return Padic2(n, Padic2::kExact); }

// Twist of x + y + v x y by the generic strict series with b1..bn.
FGL twisted_k(int n, int bound) {
  QSeries ctx(law_vars(vb_symbols(n)), bound);
  return fgl_twist(FGL(multiplicative_law(ctx.vars(), bound)), generic_strict_series(ctx, n));
}

TEST(Mahler, SmallExpansions) {
  EXPECT_EQ(mahler_expand(parse_poly("T^2")), numpoly({0, 1, 2}));
  EXPECT_EQ(mahler_expand(parse_poly("T^2")).str(), "2 C(T,2) + C(T,1)");
  EXPECT_EQ(mahler_expand(binomial_poly(3, 3)).str(), "27 C(T,3) + 18 C(T,2) + C(T,1)");
  EXPECT_EQ(mahler_expand(binomial_poly(3, 6)).str(),
            "729 C(T,6) + 1215 C(T,5) + 594 C(T,4) + 81 C(T,3) + C(T,2)");
  EXPECT_EQ(mahler_expand(parse_poly("0")).str(), "0");
  EXPECT_EQ(mahler_expand(parse_poly("-1/2 T + 1")).str(), "-1/2 C(T,1) + 1");
}

TEST(Mahler, RoundTripOnRandomPolynomials) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 30; ++trial) {
    RatPoly p(static_cast<std::size_t>(trial % 9) + 1);
    for (auto& c : p) c = test::random_rat(rng);
    int n = static_cast<int>(p.size()) + 2;
    NumPoly m = mahler_expand(p, n);
    for (int t = 0; t <= n; ++t) EXPECT_EQ(m.eval(Rat(t)), eval_poly(p, Rat(t)));
    // Once n >= deg p the identity holds off the grid as well.
    EXPECT_EQ(m.eval(Rat(-7, 3)), eval_poly(p, Rat(-7, 3)));
  }
}

TEST(Mahler, TruncatedExpansionMatchesOnGridOnly) {
  RatPoly p = parse_poly("T^3");
  NumPoly m = mahler_expand(p, 1);
  EXPECT_EQ(m.eval(Rat(0)), Rat(0));
  EXPECT_EQ(m.eval(Rat(1)), Rat(1));
  EXPECT_NE(m.eval(Rat(2)), Rat(8));
}

TEST(Mahler, IntegerValuedPolynomialsHaveIntegerCoefficients) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rat> c(static_cast<std::size_t>(trial % 8) + 1);
    for (auto& x : c) x = Rat(test::random_int(rng, 50));
    RatPoly p = from_binomial_basis(c);
    NumPoly m = mahler_expand(p, static_cast<int>(c.size()) - 1);
    ASSERT_TRUE(m.is_integral());
    auto ints = m.integer_coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(Rat(ints[i]), c[i]);
  }
}

TEST(Mahler, NonNumericalPolynomial) {
  NumPoly m = mahler_expand(parse_poly("1/2 T"));
  EXPECT_FALSE(m.is_integral());
  EXPECT_THROW(m.integer_coeffs(), NotNumerical);
  EXPECT_THROW(mahler_expand(parse_poly("T"), -1), IndexOutOfRange);
}

TEST(Dilate, TabulatedRows) {
  EXPECT_EQ(dilate(3, 1), numpoly({0, 3}));
  EXPECT_EQ(dilate(3, 2), numpoly({0, 3, 9}));
  EXPECT_EQ(dilate(3, 3), numpoly({0, 1, 18, 27}));
  EXPECT_EQ(dilate(3, 4), numpoly({0, 0, 15, 81, 81}));
  EXPECT_EQ(dilate(3, 5), numpoly({0, 0, 6, 108, 324, 243}));
  EXPECT_EQ(dilate(3, 6), numpoly({0, 0, 1, 81, 594, 1215, 729}));
  EXPECT_EQ(dilate(3, 4).str(), "81 C(T,4) + 81 C(T,3) + 15 C(T,2)");
}

TEST(Dilate, AgreesWithExpansionOfDilatedBinomial) {
  for (long k : {1L, 3L, 5L, -1L, -3L}) {
    for (int i = 0; i <= 8; ++i) EXPECT_EQ(dilate(k, i), mahler_expand(binomial_poly(k, i))) << k << " " << i;
  }
  for (int i = 0; i <= 6; ++i) {
    NumPoly id;
    id.a.assign(static_cast<std::size_t>(i) + 1, Rat(0));
    id.a.back() = Rat(1);
    EXPECT_EQ(dilate(1, i), id);
  }
}

// a_j = sum_{s+t=i-j} C(j,s) C(s,t) 3^(j-t).
TEST(Dilate, ClosedCoefficientFormula) {
  IntMatrix d = dilation_matrix(3, 12);
  for (int i = 0; i <= 12; ++i) {
    for (int j = 0; j <= 12; ++j) {
      Int expect = (i - j) % 2 == 0 ? psi3_pairing_closed(i, j) : Int(-psi3_pairing_closed(i, j));
      EXPECT_EQ(d.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), expect) << i << "," << j;
    }
  }
}

TEST(Dilate, Semigroup) {
  EXPECT_EQ(dilation_matrix(3, 8) * dilation_matrix(3, 8), dilation_matrix(9, 8));
  EXPECT_EQ(dilation_matrix(3, 8) * dilation_matrix(5, 8), dilation_matrix(15, 8));
  EXPECT_EQ(dilation_matrix(5, 8) * dilation_matrix(3, 8), dilation_matrix(15, 8));
  EXPECT_EQ(dilation_matrix(-1, 8) * dilation_matrix(-1, 8), dilation_matrix(1, 8));
}

TEST(Dilate, Errors) {
  EXPECT_THROW(dilate(2, 3), NotAUnit);
  EXPECT_THROW(dilate(3, -1), IndexOutOfRange);
  EXPECT_THROW(dilation_matrix(4, 3), NotAUnit);
  EXPECT_THROW(dilate(at_precision(6, 20), 3), NotAUnit);
  EXPECT_THROW(dilate(at_precision(3, 2), 4), PrecisionTooLow);
}

TEST(Dilate2Adic, MatchesIntegerDilation) {
  for (long k : {3L, 5L, -1L, -7L}) {
    for (int i = 0; i <= 10; ++i) {
      auto exact_row = dilate(k, i).integer_coeffs();
      auto p = dilate(at_precision(k, 40), i).a;
      ASSERT_EQ(p.size(), exact_row.size());
      for (std::size_t j = 0; j < p.size(); ++j) {
        EXPECT_EQ(p[j].precision(), 40 - (i <= 1 ? 0 : std::bit_width(static_cast<unsigned>(i)) - 1));
        EXPECT_TRUE(Padic2::congruent(p[j], exact(exact_row[j]))) << k << " " << i << " " << j;
      }
    }
  }
  auto ex = dilate(Padic2(3), 4).a;
  EXPECT_TRUE(ex[4].is_exact());
  EXPECT_EQ(ex[4].value(), 81);
}

// Integer representatives congruent mod 2^p give dilations congruent mod
// 2^(p - floor(log2 i)).
TEST(Dilate2Adic, PrecisionBoundIsSharpEnough) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<long> small(0, 200);
  for (int trial = 0; trial < 40; ++trial) {
    int p = 3 + trial % 5;
    long k = 2 * small(rng) + 1;
    long k2 = k + (1L << p) * (small(rng) + 1);
    for (int i = 1; i <= 9; ++i) {
      auto a = dilate(k, i).integer_coeffs();
      auto b = dilate(k2, i).integer_coeffs();
      int q = p - (i <= 1 ? 0 : std::bit_width(static_cast<unsigned>(i)) - 1);
      if (q < 1) continue;
      for (std::size_t j = 0; j < a.size(); ++j) {
        EXPECT_TRUE(Padic2::congruent(Padic2(a[j], q), Padic2(b[j], q))) << k << " " << k2 << " " << i;
      }
    }
  }
}

// The dilation by 3^-1 inverts the dilation by 3.
TEST(Dilate2Adic, InverseOfThree) {
  const int n = 8, bits = 48;
  auto inv = dilation_matrix(padic_inverse(at_precision(3, bits)), n);
  IntMatrix three = dilation_matrix(3, n);
  for (int i = 0; i <= n; ++i) {
    for (int m = 0; m <= n; ++m) {
      Padic2 acc(Int(0), bits);
      for (int j = 0; j <= n; ++j) {
        acc += inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               exact(three.at(static_cast<std::size_t>(j), static_cast<std::size_t>(m)));
      }
      EXPECT_TRUE(Padic2::congruent(acc, Padic2(i == m ? 1 : 0))) << i << "," << m;
    }
  }
}

TEST(DilationVsAdams, SignConjugation) {
  DilationReport r = dilation_vs_adams(10);
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.dilation, dilation_matrix(3, 10));
  EXPECT_EQ(r.adams, psi_inv_matrix(3, 10));
  EXPECT_EQ(r.adams.at(4, 2), 15);
  EXPECT_EQ(r.dilation.at(3, 2), 18);
  EXPECT_EQ(r.adams.at(3, 2), -18);
  EXPECT_NO_THROW(dilation_vs_adams(10, 5));
}

TEST(DilationVsAdams, IdentityForOne) {
  DilationReport r = dilation_vs_adams(6, 1);
  for (std::size_t i = 0; i <= 6; ++i) {
    for (std::size_t j = 0; j <= 6; ++j) {
      EXPECT_EQ(r.dilation.at(i, j), i == j ? 1 : 0);
      EXPECT_EQ(r.adams.at(i, j), i == j ? 1 : 0);
    }
  }
}

TEST(ArtinSchreier, TrivialUnit) {
  auto r = artin_schreier_check(Padic2(1), 48);
  EXPECT_TRUE(r.verified);
  EXPECT_TRUE(r.b.is_zero());
  EXPECT_EQ(r.b.precision(), 48);
  EXPECT_TRUE(Padic2::congruent(r.shifted, Padic2(1)));
}

TEST(ArtinSchreier, Seventeen) {
  auto r = artin_schreier_check(Padic2(17), 48);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.b.precision(), 48);
}

// Powers of 81 have b = -n exactly.
TEST(ArtinSchreier, PowersOfEightyOne) {
  auto r = artin_schreier_check(Padic2(6561), 40);
  EXPECT_TRUE(Padic2::congruent(r.b, Padic2(-2)));
  auto s = artin_schreier_check(padic_inverse(at_precision(81, 44)), 40);
  EXPECT_EQ(s.b.precision(), 40);
  EXPECT_TRUE(Padic2::congruent(s.b, Padic2(1)));
  EXPECT_TRUE(Padic2::congruent(s.shifted, Padic2(2)));
}

TEST(ArtinSchreier, RandomUnitsOneModSixteen) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 20; ++trial) {
    Int u = Int(static_cast<unsigned long>(rng() >> 20)) * 16 + 1;
    auto r = artin_schreier_check(exact(u), 48);
    EXPECT_TRUE(r.verified) << u.get_str();
    EXPECT_EQ(r.b.precision(), 48);
  }
}

TEST(ArtinSchreier, FinitePrecisionInputLosesFourBits) {
  auto r = artin_schreier_check(at_precision(17, 48), 48);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.b.precision(), 44);
}

TEST(ArtinSchreier, Errors) {
  EXPECT_THROW(artin_schreier_check(Padic2(9), 48), NotInDomain);
  EXPECT_THROW(artin_schreier_check(Padic2(3), 48), NotInDomain);
  EXPECT_THROW(artin_schreier_check(Padic2(17), 0), PrecisionTooLow);
}

// The Bott class with v = 1 and every b_i = 0 is the unit.
TEST(ArtinSchreier, BottClassSpecialization) {
  QSeries m = miscenko_image(BordismExpr::parse("1/4*K3SQ + 12*N"), twisted_k(4, 5), CpnMode::kPaperBox);
  QSeries point(VarList{}, kUnbounded);
  std::map<std::string, QSeries> images;
  for (const auto& v : m.vars()) images.emplace(v.name, v.name == "v" ? point.one_like() : point.zero_like());
  Rat u = substitute(m, images, point.vars(), kUnbounded).constant_term();
  EXPECT_EQ(u, Rat(1));
  auto r = artin_schreier_check(Padic2::from_rat(u, 48), 44);
  EXPECT_TRUE(r.verified);
  EXPECT_TRUE(r.b.is_zero());
}

}  // namespace
}  // namespace fglab
