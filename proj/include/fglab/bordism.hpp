#pragma once

#include <map>
#include <string>
#include <vector>

#include "fglab/fgl.hpp"

namespace fglab {

/// Rational combination of products CP^{n1} x ... x CP^{nr}. Each product is
/// keyed by its sorted list of dimensions.
class BordismExpr {
 public:
  using Product = std::vector<int>;

  BordismExpr() = default;

  /// Grammar: sums of `[c*]P` where c is an integer or p/q and P is either
  /// a product such as `CP1^2xCP2` or one of the built-ins K3SQ, N.
  static BordismExpr parse(const std::string& text);

  /// A*CP4 + B*CP1xCP3 + C*CP2xCP2 + D*CP1^4 + E*CP1^2xCP2.
  static BordismExpr from_dim4_vector(const std::vector<Rat>& abcde);

  void add(const Product& p, const Rat& c);
  const std::map<Product, Rat>& terms() const { return terms_; }

  /// Common complex dimension; throws DimensionMismatch if inhomogeneous.
  int dimension() const;

  BordismExpr operator+(const BordismExpr& o) const;
  BordismExpr scaled(const Rat& c) const;

  std::string str() const;

  friend bool operator==(const BordismExpr&, const BordismExpr&) = default;

 private:
  std::map<Product, Rat> terms_;
};

/// Basis order (A, B, C, D, E) of dimension-4 products.
const std::vector<BordismExpr::Product>& dim4_basis();

std::vector<Rat> k3sq_vector();
std::vector<Rat> n_vector();

/// Image of a bordism class under the ring map sending [CP^n] to cpn_in_a(n)
/// with each a_ij replaced by the corresponding coefficient of the law.
QSeries miscenko_image(const BordismExpr& expr, const FGL& f, CpnMode mode);

}  // namespace fglab
