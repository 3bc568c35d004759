#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fglab/series.hpp"

namespace fglab {

/// Name of the coefficient symbol a_ij (indices ordered so that i <= j):
/// "a12", or "a1_10" once an index has two digits.
std::string a_name(int i, int j);

/// Inverse of `a_name`; nullopt if `name` is not an a-symbol.
std::optional<std::pair<int, int>> parse_a_name(const std::string& name);

/// Symbols (weight 0) followed by the law variables x, y (weight 1).
VarList law_vars(const std::vector<std::string>& symbols);

/// Symbols {v, b1, ..., bn}.
std::vector<std::string> vb_symbols(int n);

/// Cohomological grading in half units: v -> 1, u (= 1/v) -> -1, b_i -> i,
/// a_ij -> i + j - 1, law variables x, y, z -> -1. Unknown names have no degree.
std::optional<int> default_degree(const std::string& name);

/// Degree of a series under `default_degree` if every term has the same
/// degree and every occurring variable is graded; nullopt otherwise.
std::optional<int> homogeneous_degree(const QSeries& s);

/// A formal group law F(x, y) = x + y + sum a_ij x^i y^j.
class FGL {
 public:
  /// Wraps a law without checking it; `fgl_check` validates.
  explicit FGL(QSeries law);

  const QSeries& law() const { return law_; }
  int bound() const { return law_.bound(); }

  /// Coefficient of x^i y^j as a polynomial in the symbols of the law.
  QSeries a(int i, int j) const;

  /// Symbol context of the coefficients: the law's variables without x, y.
  VarList symbol_vars() const;

 private:
  QSeries law_;
};

/// Checks unit, commutativity and associativity to the bound; throws
/// AxiomViolation naming the axiom and the first offending monomial.
FGL fgl_check(const QSeries& law);

/// x + y + v*x*y in the context of `vars` with the given bound.
QSeries multiplicative_law(const VarList& vars, int bound, const std::string& v = "v");

/// g(x) = x + sum_{i=1}^{n} b_i x^(i+1) with symbolic b_i from the context.
QSeries generic_strict_series(const QSeries& ctx, int n);

/// g(F(g^-1(x), g^-1(y))). `g` is a strict series in x in the law's context.
FGL fgl_twist(const FGL& f, const QSeries& g);

/// Strict logarithm l(x) with l(F(x, y)) = l(x) + l(y), computed as the
/// integral of 1 / (dF/dy)(x, 0).
QSeries fgl_log(const FGL& f);

/// The law g^-1(g(x) + g(y)) where g^-1(x) = x / P(x). `P` must have constant
/// term 1 and live in a context containing x and y.
FGL fgl_from_genus(const QSeries& p);

/// The Todd series x / (1 - e^-x) in the variable x of `ctx`, to its bound.
QSeries todd_series(const QSeries& ctx);

/// Coefficients <k; i, j> of x^i y^j in F(x, y)^k, keyed by (i, j).
std::map<std::pair<int, int>, QSeries> fgl_binom(const FGL& f, int k);

enum class CpnMode { kPaperBox, kResidueExact };

CpnMode parse_cpn_mode(const std::string& text);
std::string cpn_mode_name(CpnMode mode);

/// Polynomial context of the symbols a_ij with i + j <= max_index + 1
/// (weight 0, unbounded).
VarList a_vars(int max_index);

/// [CP^n] as a polynomial in the a_ij. The "paper-box" mode returns the four
/// tabulated expressions (n <= 4); residue-exact mode returns the degree-n
/// coefficient of (1 + sum_{i>=1} a_i1 x^i)^-1.
QSeries cpn_in_a(int n, CpnMode mode);

}  // namespace fglab
