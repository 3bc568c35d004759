#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fglab/linalg.hpp"
#include "fglab/series.hpp"

namespace fglab {

/// sum_i c_i beta_i in K_* CP^infinity; index 0 is the unit class.
struct BetaElt {
  std::map<int, Rat> coeffs;

  Rat coeff(int i) const;
  /// "b1 - 18 b2 + 27 b3".
  std::string str() const;

  friend bool operator==(const BetaElt&, const BetaElt&) = default;
};

/// sum c_ij beta_i (x) beta_j.
struct BetaTensor {
  std::map<std::pair<int, int>, Rat> coeffs;

  Rat coeff(int i, int j) const;
  friend bool operator==(const BetaTensor&, const BetaTensor&) = default;
};

/// <psi^k x^j, beta_i>: the x^i coefficient of (1 - (1 - x)^k)^j.
Int psi_pairing(int k, int i, int j);

/// The same pairing for k = 3 from the closed form
/// (-1)^(i-j) sum_{s+t=i-j} C(j,s) C(s,t) 3^(j-t).
Int psi3_pairing_closed(int i, int j);

/// psi^{k^-1} beta_i = sum_j <psi^k x^j, beta_i> beta_j.
BetaElt psi_inv_beta(int k, int i);

/// Rows i = 0..n, columns j = 0..n: the coefficient of beta_j in psi^{k^-1} beta_i.
IntMatrix psi_inv_matrix(int k, int n);

/// (psi^{k^-1} beta_i) (x) (psi^{k^-1} beta_j).
BetaTensor psi_inv_tensor(int k, int i, int j);

/// (3x - 3x^2 + x^3)^j as coefficients indexed by the power of x.
std::vector<Int> psi3_power_coeffs(int j);

enum class NkiMode { kPaper, kExtendedGcd };

NkiMode parse_nki_mode(const std::string& text);
std::string nki_mode_name(NkiMode mode);

/// (n_k^1, ..., n_k^{k-1}) with sum n_k^i C(k, i) = gcd of the C(k, i).
/// The "paper" mode is the fixed table for k <= 10; extended-gcd mode folds the
/// binomials in increasing i with Bezout coefficients.
std::vector<Int> nki_coeffs(int k, NkiMode mode);

/// gcd{C(k,1), ..., C(k,k-1)}.
Int binomial_gcd(int k);

// Polynomials in the a_ij (APoly) use the weight-0 context a_vars(n - 1),
// i.e. all a_ij with 1 <= i <= j and i + j <= n. The symmetric and unit
// conventions a_ji = a_ij, a_00 = 1, a_0j = 0 are applied when building them.

/// Context of APolys with a_ij up to i + j <= n.
VarList apoly_vars(int n);

/// Weight 2(i + j) of a_ij; 0 for the constant.
int apoly_weight(const QSeries& apoly, const Exp& e);

/// a_ij as an APoly, with a_00 = 1 and a_0j = 0.
QSeries a_elem(const VarList& avars, int i, int j);

/// d_k = sum_i n_k^i a_{i,k-i}.
QSeries d_as_apoly(const VarList& avars, int k, NkiMode mode);

/// psi^{k^-1} a_ij = sum_{m,n} <psi^k x^m, beta_i> <psi^k y^n, beta_j> a_mn.
QSeries psi_on_a(const VarList& avars, int k, int i, int j);

/// Applies psi^{k^-1} linearly to an APoly that is linear in the a_ij.
QSeries psi_on_linear_apoly(const QSeries& apoly, int k);

/// One relation of the 2-structure identity, tagged by the monomial x^a y^b z^c
/// whose coefficient it is.
struct Relation {
  std::array<int, 3> monomial;
  /// Polynomial in s and the a_ij, where s is the xy coefficient of the
  /// multiplicative law x + y + s x y (s = -1/v).
  QSeries poly;

  std::string monomial_str() const;
};

struct RelationSet {
  int bound = 0;
  std::vector<Relation> relations;

  /// Relations at monomials of total degree `degree`.
  std::vector<const Relation*> of_degree(int degree) const;
  const Relation* at(int a, int b, int c) const;
};

/// Coefficients of f(x,y) f(x +_G y, z) - f(x, y +_G z) f(y,z) for
/// f = 1 + sum a_ij x^i y^j and G = x + y + s x y, at every monomial of total
/// degree <= n; zero coefficients are dropped.
RelationSet gen_2structure_relations(int n);

/// Context {s} + apoly_vars(n) of the unspecialised relations.
VarList relation_vars(int n);

/// Sets v = 1, i.e. s = -1, and drops s from the context.
QSeries specialize_v1(const QSeries& rel);

/// The a_ij coefficients of the coboundary g(x) g(y) / g(x +_G y) for a
/// strict series g = 1 + sum g_k x^k. Keys are (i, j) with 1 <= i <= j; values
/// are polynomials in s.
std::map<std::pair<int, int>, QSeries> coboundary_coeffs(const std::vector<Rat>& g, int n);

/// Context d_2..d_max of DPolys; d_k has weight 2k, no truncation.
VarList d_vars(int max_k);

/// Terms by decreasing weight, constant last: "243 d5 + 486 d4 + 288 d3 - 243 d2^2".
template <CoeffRing R>
std::string dpoly_str(const MultiSeries<R>& p);

/// Rewrites APolys as polynomials in the d_k modulo the 2-structure
/// relations at v = 1. Normal forms of the a_ij are computed one weight at a
/// time by solving the relations of that degree together with the definition
/// of d_w for the generators a_{i,w-i}.
class DReducer {
 public:
  DReducer(RelationSet rels, NkiMode mode);

  const RelationSet& relations() const { return rels_; }
  NkiMode mode() const { return mode_; }
  int max_weight() const { return rels_.bound; }
  const VarList& dvars() const { return dvars_; }

  /// Normal form of a_ij. Throws NotReducible when i + j exceeds the bound or
  /// the relations do not determine the generators of that weight.
  const QSeries& normal_form(int i, int j);

  /// Substitutes the normal forms into an APoly (any a-context, s already set).
  QSeries reduce(const QSeries& apoly);

 private:
  void solve_weight(int w);

  RelationSet rels_;
  NkiMode mode_;
  VarList dvars_;
  std::map<std::pair<int, int>, QSeries> nf_;
  int solved_ = 1;
};

/// reduce_to_d(expr) with a fresh reducer.
QSeries reduce_to_d(const QSeries& apoly, const RelationSet& rels, NkiMode mode);

/// psi^{3^-1} d_k at the base level as a DPoly.
QSeries psi_on_dk(int k, DReducer& reducer);

/// psi on the generators d_k, k = 2..max, as DPolys.
using PsiTable = std::map<int, QSeries>;

template <CoeffRing R>
using PsiTableOver = std::map<int, MultiSeries<R>>;

PsiTableOver<GF2> psi_table_mod2(const PsiTable& table);
PsiTableOver<Padic2> psi_table_2adic(const PsiTable& table, int precision);

/// Extends psi multiplicatively to monomials and linearly to `z`.
template <CoeffRing R>
MultiSeries<R> apply_psi(const MultiSeries<R>& z, const PsiTableOver<R>& table);

/// Weight 2 sum k e_k of a d-monomial.
int d_weight(const VarList& dvars, const Exp& e);

/// Exponent vectors of d-monomials with weight <= max_weight, the constant
/// first, ordered by weight and then lexicographically.
std::vector<Exp> d_monomials(const VarList& dvars, int max_weight);

struct SphericalClass {
  int weight;
  MultiSeries<GF2> z;
};

/// For each even weight w <= max_weight: a basis, modulo the fixed elements
/// of lower weight, of the elements of weight <= w fixed by psi mod 2. Each
/// basis element has a distinct leading monomial of weight exactly w.
std::vector<SphericalClass> spherical_search(int max_weight, const PsiTableOver<GF2>& table);

/// (psi - id) z == 0.
bool is_spherical(const MultiSeries<GF2>& z, const PsiTableOver<GF2>& table);

/// Corrects `start`, fixed by psi mod 2, to an element fixed mod
/// 2^target_precision, using corrections of weight <= the weight of `start`.
MultiSeries<Padic2> bootstrap_lift(const MultiSeries<Padic2>& start, const PsiTableOver<Padic2>& table,
                                   int target_precision);

/// Lifts a mod-2 element with 0/1 coefficients first.
MultiSeries<Padic2> bootstrap_lift(const MultiSeries<GF2>& z, const PsiTableOver<Padic2>& table,
                                   int target_precision);

}  // namespace fglab
