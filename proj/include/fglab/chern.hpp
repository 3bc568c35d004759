#pragma once

#include <string>
#include <vector>

#include "fglab/linalg.hpp"
#include "fglab/rat.hpp"
#include "fglab/series.hpp"

namespace fglab {

/// CP^{n1} x ... x CP^{nr}.
struct ProjProduct {
  std::vector<int> dims;

  explicit ProjProduct(std::vector<int> d);
  int dimension() const;
  std::string str() const;
};

/// Products of complex dimension `dim`. For dim 4 the order is
/// CP4, CP1xCP3, CP2xCP2, CP1^4, CP1^2xCP2; otherwise fewest factors first,
/// then by increasing first factor.
std::vector<ProjProduct> default_basis(int dim);

/// Polynomial in x1..xr (weight 1 each) reduced modulo x_i^(n_i + 1).
class CohClass {
 public:
  CohClass(const ProjProduct& p, QSeries poly);

  const ProjProduct& space() const { return space_; }
  const QSeries& poly() const { return poly_; }

  /// Homogeneous part of degree k.
  CohClass part(int k) const;
  CohClass operator*(const CohClass& o) const;
  /// Coefficient of the top class x1^n1 ... xr^nr.
  Int evaluate() const;

  std::string str() const { return poly_.str(); }

 private:
  ProjProduct space_;
  QSeries poly_;
};

/// prod_i (1 + x_i)^(n_i + 1).
CohClass total_chern(const ProjProduct& p);

/// Chern number c_{k1} ... c_{km}[p]; `monomial` lists the indices k.
Int chern_number(const ProjProduct& p, const std::vector<int>& monomial);

/// "c1^4", "c1*c3", "c1^2*c2".
std::string chern_monomial_name(std::vector<int> monomial);

/// Chern monomials of degree dim divisible by c1: c1^dim first, then by
/// increasing number of factors.
std::vector<std::vector<int>> c1_monomials(int dim);

struct ConstraintSystem {
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  IntMatrix matrix;
};

/// One row per Chern monomial divisible by c1, one column per basis element.
ConstraintSystem su_constraint_system(const std::vector<ProjProduct>& basis, int dim);

/// Hermite normal form by unimodular row operations: positive pivots,
/// entries above a pivot reduced into [0, pivot), zero rows dropped.
IntMatrix integer_reduce(const IntMatrix& m);

using RatVector = std::vector<Rat>;

/// Basis of the rational kernel from the reduced row echelon form, one vector
/// per free column, each scaled to a primitive integer vector.
std::vector<RatVector> nullspace_rational(const IntMatrix& m);

/// m * v == 0.
bool in_kernel(const IntMatrix& m, const RatVector& v);

/// v lies in the rational span of `basis`.
bool in_span(const std::vector<RatVector>& basis, const RatVector& v);

std::size_t rational_rank(const std::vector<RatVector>& rows);
std::size_t rational_rank(const IntMatrix& m);

/// Equal rational row spaces.
bool same_row_space(const IntMatrix& a, const IntMatrix& b);

/// (-c4 + c1 c3 + 3 c2^2 + 4 c1^2 c2 - c1^4) / 720.
Rat todd_t4(const Rat& c1_4, const Rat& c1_c3, const Rat& c1sq_c2, const Rat& c2_sq, const Rat& c4);

}  // namespace fglab
