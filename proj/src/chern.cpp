#include "fglab/chern.hpp"

#include <algorithm>
#include <numeric>

namespace fglab {

namespace {

VarList proj_vars(const ProjProduct& p) {
  VarList vars;
  for (std::size_t i = 0; i < p.dims.size(); ++i) vars.push_back({"x" + std::to_string(i + 1), 1});
  return vars;
}

QSeries reduce_ideal(const ProjProduct& p, const QSeries& s) {
  QSeries out = s.zero_like();
  for (const auto& [e, c] : s.terms()) {
    bool keep = true;
    for (std::size_t i = 0; i < e.size(); ++i) keep = keep && e[i] <= p.dims[i];
    if (keep) out.add_term(e, c);
  }
  return out;
}

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

struct Echelon {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
};

Echelon rref(std::vector<RatVector> a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = row_reduce(a, cols);
  return {std::move(a), std::move(pivots)};
}

std::vector<RatVector> to_rat_rows(const IntMatrix& m) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols(), Rat(0)));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = Rat(m.at(i, j));
  }
  return rows;
}

RatVector primitive(const RatVector& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x.num() * (l / x.den()));
  if (g == 0) return v;
  RatVector out;
  for (const auto& x : v) out.emplace_back(Int(x.num() * (l / x.den()) / g));
  return out;
}

}  // namespace

ProjProduct::ProjProduct(std::vector<int> d) : dims(std::move(d)) {
  if (dims.empty()) throw DimensionMismatch("a product needs at least one factor");
  for (int n : dims) {
    if (n < 1) throw DimensionMismatch("projective factors need dimension >= 1");
  }
}

int ProjProduct::dimension() const { return std::accumulate(dims.begin(), dims.end(), 0); }

std::string ProjProduct::str() const {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += "x";
    out += "CP" + std::to_string(dims[i]);
  }
  return out;
}

std::vector<ProjProduct> default_basis(int dim) {
  if (dim < 1) throw DimensionMismatch("dimension must be positive");
  if (dim == 4) {
    return {ProjProduct({4}), ProjProduct({1, 3}), ProjProduct({2, 2}), ProjProduct({1, 1, 1, 1}),
            ProjProduct({1, 1, 2})};
  }
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(dim, dim, cur, parts);
  for (auto& p : parts) std::reverse(p.begin(), p.end());
  std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<ProjProduct> out;
  for (auto& p : parts) out.emplace_back(p);
  return out;
}

CohClass::CohClass(const ProjProduct& p, QSeries poly) : space_(p), poly_(reduce_ideal(p, poly)) {
  if (poly_.vars() != proj_vars(p)) throw VariableMismatch("class does not live on " + p.str());
}

CohClass CohClass::part(int k) const { return CohClass(space_, degree_part(poly_, k)); }

CohClass CohClass::operator*(const CohClass& o) const {
  if (space_.dims != o.space_.dims) throw VariableMismatch("classes on different spaces");
  return CohClass(space_, poly_ * o.poly_);
}

Int CohClass::evaluate() const {
  Rat c = poly_.coeff(Exp(space_.dims.begin(), space_.dims.end()));
  if (!c.is_integer()) throw DivisionUndefined("non-integral cohomology coefficient");
  return c.num();
}

CohClass total_chern(const ProjProduct& p) {
  QSeries ctx(proj_vars(p), p.dimension());
  QSeries c = ctx.one_like();
  for (std::size_t i = 0; i < p.dims.size(); ++i) {
    QSeries f = ctx.one_like() + ctx.var(static_cast<int>(i));
    c = reduce_ideal(p, c * f.pow(static_cast<unsigned>(p.dims[i] + 1)));
  }
  return CohClass(p, c);
}

Int chern_number(const ProjProduct& p, const std::vector<int>& monomial) {
  int sum = 0;
  for (int k : monomial) {
    if (k < 1) throw DimensionMismatch("Chern class indices must be positive");
    sum += k;
  }
  if (sum != p.dimension()) {
    throw DimensionMismatch("monomial of degree " + std::to_string(sum) + " on " + p.str());
  }
  CohClass c = total_chern(p);
  CohClass prod(p, QSeries(proj_vars(p), p.dimension()).one_like());
  for (int k : monomial) prod = prod * c.part(k);
  return prod.evaluate();
}

std::string chern_monomial_name(std::vector<int> monomial) {
  std::sort(monomial.begin(), monomial.end());
  std::string out;
  for (std::size_t i = 0; i < monomial.size();) {
    std::size_t j = i;
    while (j < monomial.size() && monomial[j] == monomial[i]) ++j;
    if (!out.empty()) out += "*";
    out += "c" + std::to_string(monomial[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<std::vector<int>> c1_monomials(int dim) {
  if (dim < 1) throw DimensionMismatch("dimension must be positive");
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(dim, dim, cur, parts);
  std::vector<std::vector<int>> out;
  for (auto& p : parts) {
    if (std::find(p.begin(), p.end(), 1) == p.end()) continue;
    std::sort(p.begin(), p.end());
    out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(), [dim](const auto& a, const auto& b) {
    bool pa = static_cast<int>(a.size()) == dim, pb = static_cast<int>(b.size()) == dim;
    if (pa != pb) return pa;
    return a.size() < b.size();
  });
  return out;
}

ConstraintSystem su_constraint_system(const std::vector<ProjProduct>& basis, int dim) {
  for (const auto& p : basis) {
    if (p.dimension() != dim) throw DimensionMismatch(p.str() + " is not of dimension " + std::to_string(dim));
  }
  ConstraintSystem sys;
  auto monos = c1_monomials(dim);
  for (const auto& m : monos) sys.row_names.push_back(chern_monomial_name(m));
  for (const auto& p : basis) sys.col_names.push_back(p.str());
  sys.matrix = IntMatrix(monos.size(), basis.size());
  parallel_for(monos.size() * basis.size(), [&](std::size_t k) {
    std::size_t i = k / basis.size(), j = k % basis.size();
    sys.matrix.at(i, j) = chern_number(basis[j], monos[i]);
  });
  return sys;
}

IntMatrix integer_reduce(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (a.at(i, c) != 0 && (best == a.rows() || abs(a.at(i, c)) < abs(a.at(best, c)))) best = i;
      }
      if (best == a.rows()) break;
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(best, j));
      bool done = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a.at(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, c).get_mpz_t(), a.at(r, c).get_mpz_t());
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) -= q * a.at(r, j);
        if (a.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a.at(r, c) == 0) continue;
    if (a.at(r, c) < 0) {
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, c).get_mpz_t(), a.at(r, c).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) -= q * a.at(r, j);
    }
    ++r;
  }
  IntMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  }
  return out;
}

std::vector<RatVector> nullspace_rational(const IntMatrix& m) {
  Echelon e = rref(to_rat_rows(m));
  std::vector<RatVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (std::find(e.pivots.begin(), e.pivots.end(), f) != e.pivots.end()) continue;
    RatVector v(m.cols(), Rat(0));
    v[f] = Rat(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    out.push_back(primitive(v));
  }
  return out;
}

bool in_kernel(const IntMatrix& m, const RatVector& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("vector length differs from column count");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat s(0);
    for (std::size_t j = 0; j < m.cols(); ++j) s += Rat(m.at(i, j)) * v[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

std::size_t rational_rank(const std::vector<RatVector>& rows) { return rref(rows).rows.size(); }

std::size_t rational_rank(const IntMatrix& m) { return rational_rank(to_rat_rows(m)); }

bool in_span(const std::vector<RatVector>& basis, const RatVector& v) {
  std::vector<RatVector> with = basis;
  with.push_back(v);
  return rational_rank(with) == rational_rank(basis);
}

bool same_row_space(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  auto ra = to_rat_rows(a), rb = to_rat_rows(b);
  std::size_t ka = rational_rank(ra), kb = rational_rank(rb);
  std::vector<RatVector> both = ra;
  both.insert(both.end(), rb.begin(), rb.end());
  return ka == kb && rational_rank(both) == ka;
}

Rat todd_t4(const Rat& c1_4, const Rat& c1_c3, const Rat& c1sq_c2, const Rat& c2_sq, const Rat& c4) {
  return (-c4 + c1_c3 + Rat(3) * c2_sq + Rat(4) * c1sq_c2 - c1_4) * Rat(1, 720);
}

}  // namespace fglab
