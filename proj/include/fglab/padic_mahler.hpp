#pragma once

#include <string>
#include <vector>

#include "fglab/linalg.hpp"
#include "fglab/padic2.hpp"

namespace fglab {

/// Polynomial in T; entry e is the coefficient of T^e.
using RatPoly = std::vector<Rat>;

/// Parses a polynomial in the single variable T, e.g. "T^2 - 3/2 T + 1".
RatPoly parse_poly(const std::string& text);

Rat eval_poly(const RatPoly& p, const Rat& t);

/// C(x, i) = x (x - 1) ... (x - i + 1) / i! for any rational x.
Rat binomial_at(const Rat& x, int i);

/// C(kT, i) as a polynomial in T.
RatPoly binomial_poly(long k, int i);

/// sum_i a_i C(T, i) with finite support.
struct NumPoly {
  std::vector<Rat> a;

  Rat eval(const Rat& t) const;
  bool is_integral() const;
  /// The coefficients as integers; throws NotNumerical if one is not.
  std::vector<Int> integer_coeffs() const;
  /// Highest index first: "27 C(T,3) + 18 C(T,2) + C(T,1)".
  std::string str() const;

  friend bool operator==(const NumPoly&, const NumPoly&) = default;
};

/// Binomial-basis coefficients over the 2-adic integers.
struct PadicNumPoly {
  std::vector<Padic2> a;
};

/// a_i = (nabla^i p)(0) for i = 0..n, so sum a_i C(T, i) agrees with p at
/// T = 0..n (everywhere once n >= deg p).
NumPoly mahler_expand(const RatPoly& p, int n);

/// mahler_expand with n = deg p.
NumPoly mahler_expand(const RatPoly& p);

/// C(kT, i) in the C(T, j) basis by finite differences. Throws NotAUnit for
/// even k.
NumPoly dilate(long k, int i);

/// C(kT, i) for a 2-adic unit k: the C(T, j) coefficient is the x^i
/// coefficient of ((1 + x)^K - 1)^j for the integer representative K of k.
/// Changing K by a multiple of 2^p moves the result by a multiple of
/// 2^(p - floor(log2 i)), which is the output precision. Throws NotAUnit for
/// even k and PrecisionTooLow if no bits survive.
PadicNumPoly dilate(const Padic2& k, int i);

/// Rows i = 0..n, columns j = 0..n: the C(T, j) coefficient of C(kT, i).
IntMatrix dilation_matrix(long k, int n);
std::vector<std::vector<Padic2>> dilation_matrix(const Padic2& k, int n);

/// psi^{k^-1} on beta_i for the orientation x = L - 1: the x^i coefficient of
/// ((1 + x)^k - 1)^j, by series powers.
IntMatrix psi_matrix_l_minus_1(int k, int n);

struct DilationReport {
  int k = 0;
  int n = 0;
  IntMatrix dilation;
  IntMatrix adams;
  IntMatrix adams_l_minus_1;
};

/// Checks D = S A S with S = diag((-1)^i), A = psi_inv_matrix(k, n) for the
/// orientation x = 1 - L, and D = psi_matrix_l_minus_1(k, n). Throws
/// MismatchAt at the first differing entry.
DilationReport dilation_vs_adams(int n, int k = 3);

struct ArtinSchreierResult {
  /// -log(u) / log(81).
  Padic2 b;
  /// -log(u / 81) / log(81).
  Padic2 shifted;
  /// shifted = b + 1 at the precision of b.
  bool verified = false;
};

/// Works at precision + 4 bits (capped by the precision of u), since dividing
/// by log(81) costs v(log 81) = 4 bits. Throws NotInDomain unless
/// u = 1 mod 16 and PrecisionTooLow for precision < 1.
ArtinSchreierResult artin_schreier_check(const Padic2& u, int precision);

}  // namespace fglab
