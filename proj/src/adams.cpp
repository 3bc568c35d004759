#include "fglab/adams.hpp"

#include <algorithm>
#include <type_traits>

#include "fglab/fgl.hpp"

namespace fglab {

namespace {

using IntPoly = std::vector<Int>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b, std::size_t max_deg) {
  IntPoly out(std::min(a.size() + b.size() - 1, max_deg + 1), 0);
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1 - (1 - x)^k.
IntPoly psi_line(int k) {
  IntPoly p(static_cast<std::size_t>(k) + 1, 0);
  for (int s = 1; s <= k; ++s) {
    Int c = binomial(k, s);
    p[static_cast<std::size_t>(s)] = (s % 2 == 1) ? c : Int(-c);
  }
  return p;
}

void check_k(int k) {
  if (k < 1) throw UnsupportedK("Adams operations need k >= 1");
}

std::string coeff_term(const Rat& c, const std::string& mono, bool first) {
  Rat a = c.sign() < 0 ? -c : c;
  std::string body = mono.empty() ? a.str() : (a == Rat(1) ? mono : a.str() + " " + mono);
  if (first) return c.sign() < 0 ? "-" + body : body;
  return (c.sign() < 0 ? " - " : " + ") + body;
}

std::string spaced_monomial(const VarList& vars, const Exp& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += vars[i].name;
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

int d_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'd') throw VariableMismatch(name + " is not a generator d_k");
  return std::stoi(name.substr(1));
}

std::pair<int, int> a_pair(const std::string& name) {
  auto ij = parse_a_name(name);
  if (!ij) throw VariableMismatch(name + " is not an a-symbol");
  return *ij;
}

template <CoeffRing R>
MultiSeries<R> retarget_table_entry(const MultiSeries<R>& p, const VarList& vars) {
  return retarget(p, vars, kUnbounded);
}

}  // namespace

Rat BetaElt::coeff(int i) const {
  auto it = coeffs.find(i);
  return it == coeffs.end() ? Rat(0) : it->second;
}

std::string BetaElt::str() const {
  std::string out;
  for (const auto& [i, c] : coeffs) {
    if (c.is_zero()) continue;
    out += coeff_term(c, i == 0 ? "" : "b" + std::to_string(i), out.empty());
  }
  return out.empty() ? "0" : out;
}

Rat BetaTensor::coeff(int i, int j) const {
  auto it = coeffs.find({i, j});
  return it == coeffs.end() ? Rat(0) : it->second;
}

Int psi_pairing(int k, int i, int j) {
  check_k(k);
  if (i < 0 || j < 0) throw IndexOutOfRange("beta indices are non-negative");
  if (j > i) return 0;
  IntPoly p = psi_line(k);
  IntPoly pw{1};
  for (int t = 0; t < j; ++t) pw = poly_mul(pw, p, static_cast<std::size_t>(i));
  return static_cast<std::size_t>(i) < pw.size() ? pw[static_cast<std::size_t>(i)] : Int(0);
}

Int psi3_pairing_closed(int i, int j) {
  if (i < 0 || j < 0) throw IndexOutOfRange("beta indices are non-negative");
  if (j > i) return 0;
  Int sum = 0;
  for (int s = 0; s <= i - j; ++s) {
    int t = i - j - s;
    if (j - t < 0) continue;
    Int p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(j - t));
    sum += binomial(j, s) * binomial(s, t) * p3;
  }
  return (i - j) % 2 == 0 ? sum : Int(-sum);
}

IntMatrix psi_inv_matrix(int k, int n) {
  check_k(k);
  if (n < 0) throw IndexOutOfRange("matrix size must be non-negative");
  IntMatrix m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  IntPoly p = psi_line(k);
  IntPoly pw{1};
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      if (static_cast<std::size_t>(i) < pw.size()) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = pw[static_cast<std::size_t>(i)];
    }
    pw = poly_mul(pw, p, static_cast<std::size_t>(n));
  }
  return m;
}

BetaElt psi_inv_beta(int k, int i) {
  IntMatrix m = psi_inv_matrix(k, i);
  BetaElt out;
  for (int j = 0; j <= i; ++j) {
    const Int& c = m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (c != 0) out.coeffs.emplace(j, Rat(c));
  }
  return out;
}

BetaTensor psi_inv_tensor(int k, int i, int j) {
  BetaElt a = psi_inv_beta(k, i), b = psi_inv_beta(k, j);
  BetaTensor out;
  for (const auto& [m, x] : a.coeffs) {
    for (const auto& [n, y] : b.coeffs) out.coeffs.emplace(std::make_pair(m, n), x * y);
  }
  return out;
}

std::vector<Int> psi3_power_coeffs(int j) {
  if (j < 0) throw IndexOutOfRange("power must be non-negative");
  IntPoly p = psi_line(3);
  IntPoly pw{1};
  for (int t = 0; t < j; ++t) pw = poly_mul(pw, p, static_cast<std::size_t>(3 * j));
  return pw;
}

NkiMode parse_nki_mode(const std::string& text) {
  if (text == "paper") return NkiMode::kPaper;
  if (text == "extended-gcd") return NkiMode::kExtendedGcd;
  throw ParseError("unknown n_k^i mode '" + text + "'");
}

std::string nki_mode_name(NkiMode mode) { return mode == NkiMode::kPaper ? "paper" : "extended-gcd"; }

Int binomial_gcd(int k) {
  if (k < 2) throw UnsupportedK("d_k needs k >= 2");
  Int g = 0;
  for (int i = 1; i < k; ++i) g = gcd(g, binomial(k, i));
  return g;
}

std::vector<Int> nki_coeffs(int k, NkiMode mode) {
  if (k < 2) throw UnsupportedK("d_k needs k >= 2");
  if (mode == NkiMode::kPaper) {
    static const std::map<int, std::vector<int>> kTable{
        {2, {1}},
        {3, {1, 0}},
        {4, {-1, 1, 0}},
        {5, {1, 0, 0, 0}},
        {6, {1, 1, -1, 0, 0}},
        {7, {1, 0, 0, 0, 0, 0}},
        {8, {9, 0, 0, -1, 0, 0, 0}},
        {9, {-9, 0, 1, 0, 0, 0, 0, 0}},
        {10, {1, 11, 0, 0, -2, 0, 0, 0, 0}},
    };
    auto it = kTable.find(k);
    if (it == kTable.end()) throw UnsupportedK("the tabulated n_k^i stop at k = 10");
    return std::vector<Int>(it->second.begin(), it->second.end());
  }
  std::vector<Int> n(static_cast<std::size_t>(k) - 1, 0);
  Int g = binomial(k, 1);
  n[0] = 1;
  for (int i = 2; i < k; ++i) {
    Int b = binomial(k, i);
    if (mpz_divisible_p(b.get_mpz_t(), g.get_mpz_t())) continue;
    Int g2, s, t;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
    for (auto& x : n) x *= s;
    n[static_cast<std::size_t>(i) - 1] += t;
    g = g2;
  }
  return n;
}

VarList apoly_vars(int n) { return a_vars(n - 1); }

int apoly_weight(const QSeries& apoly, const Exp& e) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    auto [a, b] = a_pair(apoly.vars()[i].name);
    w += 2 * (a + b) * e[i];
  }
  return w;
}

QSeries a_elem(const VarList& avars, int i, int j) {
  QSeries ctx(avars, kUnbounded);
  if (i < 0 || j < 0) return ctx.zero_like();
  if (i == 0 && j == 0) return ctx.one_like();
  if (i == 0 || j == 0) return ctx.zero_like();
  return ctx.var(a_name(i, j));
}

QSeries d_as_apoly(const VarList& avars, int k, NkiMode mode) {
  auto n = nki_coeffs(k, mode);
  QSeries out(avars, kUnbounded);
  for (int i = 1; i < k; ++i) {
    const Int& c = n[static_cast<std::size_t>(i) - 1];
    if (c != 0) out += a_elem(avars, i, k - i).scaled(Rat(c));
  }
  return out;
}

QSeries psi_on_a(const VarList& avars, int k, int i, int j) {
  QSeries out(avars, kUnbounded);
  if (i < 0 || j < 0) return out;
  int n = std::max(i, j);
  IntMatrix m = psi_inv_matrix(k, n);
  for (int p = 0; p <= i; ++p) {
    const Int& x = m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(p));
    if (x == 0) continue;
    for (int q = 0; q <= j; ++q) {
      const Int& y = m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(q));
      if (y == 0) continue;
      out += a_elem(avars, p, q).scaled(Rat(x * y));
    }
  }
  return out;
}

QSeries psi_on_linear_apoly(const QSeries& apoly, int k) {
  std::map<std::string, QSeries> images;
  for (const auto& v : apoly.vars()) {
    if (max_exponent(apoly, v.name) == 0) continue;
    auto [i, j] = a_pair(v.name);
    images.emplace(v.name, psi_on_a(apoly.vars(), k, i, j));
  }
  // psi is a ring map, so substituting the images of the generators applies it
  // to products as well.
  return substitute(apoly, images, apoly.vars(), kUnbounded);
}

std::string Relation::monomial_str() const {
  VarList xyz{{"x", 1}, {"y", 1}, {"z", 1}};
  return format_monomial(xyz, Exp(monomial.begin(), monomial.end()));
}

std::vector<const Relation*> RelationSet::of_degree(int degree) const {
  std::vector<const Relation*> out;
  for (const auto& r : relations) {
    if (r.monomial[0] + r.monomial[1] + r.monomial[2] == degree) out.push_back(&r);
  }
  return out;
}

const Relation* RelationSet::at(int a, int b, int c) const {
  for (const auto& r : relations) {
    if (r.monomial == std::array<int, 3>{a, b, c}) return &r;
  }
  return nullptr;
}

VarList relation_vars(int n) {
  VarList vars{{"s", 0}};
  VarList a = apoly_vars(n);
  vars.insert(vars.end(), a.begin(), a.end());
  return vars;
}

RelationSet gen_2structure_relations(int n) {
  if (n < 2) throw IndexOutOfRange("relations need degree bound >= 2");
  VarList rv = relation_vars(n);
  VarList vars = rv;
  for (const char* v : {"x", "y", "z"}) vars.push_back({v, 1});
  QSeries ctx(vars, n);
  QSeries x = ctx.var("x"), y = ctx.var("y"), z = ctx.var("z"), s = ctx.var("s");

  QSeries f = ctx.one_like();
  for (int i = 1; i < n; ++i) {
    for (int j = 1; i + j <= n; ++j) {
      f += ctx.var(a_name(i, j)) * x.pow(static_cast<unsigned>(i)) * y.pow(static_cast<unsigned>(j));
    }
  }
  auto law = [&](const QSeries& p, const QSeries& q) { return p + q + s * p * q; };
  auto f_of = [&](const QSeries& p, const QSeries& q) { return substitute(f, {{"x", p}, {"y", q}}, vars, n); };
  QSeries lhs = f * f_of(law(x, y), z);
  QSeries rhs = f_of(x, law(y, z)) * f_of(y, z);
  QSeries diff = lhs - rhs;

  int ix = ctx.index_of("x");
  std::map<std::array<int, 3>, QSeries> grouped;
  for (const auto& [e, c] : diff.terms()) {
    std::array<int, 3> key{e[static_cast<std::size_t>(ix)], e[static_cast<std::size_t>(ix) + 1],
                           e[static_cast<std::size_t>(ix) + 2]};
    Exp rest(e.begin(), e.begin() + ix);
    auto [it, inserted] = grouped.try_emplace(key, QSeries(rv, kUnbounded));
    it->second.add_term(rest, c);
  }
  RelationSet out;
  out.bound = n;
  for (auto& [key, poly] : grouped) {
    if (!poly.is_zero()) out.relations.push_back({key, std::move(poly)});
  }
  std::stable_sort(out.relations.begin(), out.relations.end(), [](const Relation& a, const Relation& b) {
    int da = a.monomial[0] + a.monomial[1] + a.monomial[2];
    int db = b.monomial[0] + b.monomial[1] + b.monomial[2];
    if (da != db) return da < db;
    return a.monomial > b.monomial;
  });
  return out;
}

QSeries specialize_v1(const QSeries& rel) {
  VarList rest;
  for (const auto& v : rel.vars()) {
    if (v.name != "s") rest.push_back(v);
  }
  QSeries target(rest, kUnbounded);
  if (!rel.has_var("s")) return retarget(rel, rest, kUnbounded);
  return substitute(rel, {{"s", target.constant_like(Rat(-1))}}, rest, kUnbounded);
}

std::map<std::pair<int, int>, QSeries> coboundary_coeffs(const std::vector<Rat>& g, int n) {
  VarList vars{{"s", 0}, {"x", 1}, {"y", 1}};
  QSeries ctx(vars, n);
  QSeries x = ctx.var("x"), y = ctx.var("y"), s = ctx.var("s");
  auto series = [&](const QSeries& t) {
    QSeries out = ctx.one_like();
    QSeries p = ctx.one_like();
    for (const auto& c : g) {
      p = p * t;
      out += p.scaled(c);
    }
    return out;
  };
  QSeries f = series(x) * series(y) * reciprocal(series(x + y + s * x * y));
  VarList sv{{"s", 0}};
  std::map<std::pair<int, int>, QSeries> out;
  for (int i = 1; i < n; ++i) {
    for (int j = i; i + j <= n; ++j) {
      out.emplace(std::make_pair(i, j), retarget(coeff_in(coeff_in(f, "x", i), "y", j), sv, kUnbounded));
    }
  }
  return out;
}

VarList d_vars(int max_k) {
  VarList vars;
  for (int k = 2; k <= max_k; ++k) vars.push_back({"d" + std::to_string(k), 2 * k});
  return vars;
}

template <CoeffRing R>
std::string dpoly_str(const MultiSeries<R>& p) {
  using T = ring_traits<R>;
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exp, R>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    long wa = p.weight(a.first), wb = p.weight(b.first);
    if (wa != wb) return wa > wb;
    return std::lexicographical_compare(b.first.rbegin(), b.first.rend(), a.first.rbegin(), a.first.rend());
  });
  std::string out;
  int min_prec = Padic2::kExact;
  for (const auto& [e, c] : terms) {
    std::string mono = spaced_monomial(p.vars(), e);
    if constexpr (std::is_same_v<R, Rat>) {
      out += coeff_term(c, mono, out.empty());
    } else {
      std::string cs;
      if constexpr (std::is_same_v<R, Padic2>) {
        cs = c.value().get_str();
        if (!c.is_exact()) min_prec = std::min(min_prec, c.precision());
      } else {
        cs = T::str(c);
      }
      std::string body = mono.empty() ? cs : (cs == "1" ? mono : cs + " " + mono);
      out += out.empty() ? body : " + " + body;
    }
  }
  if (min_prec != Padic2::kExact) out += " + O(2^" + std::to_string(min_prec) + ")";
  return out;
}

template std::string dpoly_str(const MultiSeries<Rat>&);
template std::string dpoly_str(const MultiSeries<GF2>&);
template std::string dpoly_str(const MultiSeries<Padic2>&);

DReducer::DReducer(RelationSet rels, NkiMode mode)
    : rels_(std::move(rels)), mode_(mode), dvars_(d_vars(std::max(rels_.bound, 2))) {}

const QSeries& DReducer::normal_form(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1) throw IndexOutOfRange("a_ij needs i, j >= 1");
  int w = i + j;
  if (w > rels_.bound) throw NotReducible(w);
  while (solved_ < w) solve_weight(solved_ + 1);
  return nf_.at({i, j});
}

void DReducer::solve_weight(int w) {
  struct Row {
    std::vector<Rat> a;
    QSeries rhs;
  };
  const std::size_t m = static_cast<std::size_t>(w / 2);
  QSeries dctx(dvars_, kUnbounded);
  std::map<std::string, QSeries> lower;
  for (const auto& [ij, p] : nf_) lower.emplace(a_name(ij.first, ij.second), p);

  std::vector<Row> rows;
  for (const Relation* rel : rels_.of_degree(w)) {
    QSeries r = specialize_v1(rel->poly);
    Row row{std::vector<Rat>(m, Rat(0)), dctx.zero_like()};
    QSeries rest = r.zero_like();
    for (const auto& [e, c] : r.terms()) {
      int nz = 0, idx = -1, total = 0;
      for (std::size_t t = 0; t < e.size(); ++t) {
        if (e[t] == 0) continue;
        ++nz;
        idx = static_cast<int>(t);
        total += e[t];
      }
      if (nz == 1 && total == 1) {
        auto [a, b] = a_pair(r.vars()[static_cast<std::size_t>(idx)].name);
        if (a + b == w) {
          row.a[static_cast<std::size_t>(a) - 1] += c;
          continue;
        }
      }
      for (std::size_t t = 0; t < e.size(); ++t) {
        if (e[t] == 0) continue;
        auto [a, b] = a_pair(r.vars()[t].name);
        if (a + b >= w) {
          throw RelationInconsistent("relation at " + rel->monomial_str() + " is not linear in weight " +
                                     std::to_string(2 * w));
        }
      }
      rest.add_term(e, c);
    }
    row.rhs = -substitute(rest, lower, dvars_, kUnbounded);
    rows.push_back(std::move(row));
  }
  {
    auto n = nki_coeffs(w, mode_);
    Row row{std::vector<Rat>(m, Rat(0)), dctx.var("d" + std::to_string(w))};
    for (int i = 1; i < w; ++i) row.a[static_cast<std::size_t>(std::min(i, w - i)) - 1] += Rat(n[static_cast<std::size_t>(i) - 1]);
    rows.push_back(std::move(row));
  }

  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < m && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p].a[c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = rows[r].a[c].inverse();
    for (auto& x : rows[r].a) x *= inv;
    rows[r].rhs = rows[r].rhs.scaled(inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i].a[c].is_zero()) continue;
      Rat f = rows[i].a[c];
      for (std::size_t j = 0; j < m; ++j) rows[i].a[j] -= f * rows[r].a[j];
      rows[i].rhs -= rows[r].rhs.scaled(f);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (!rows[i].rhs.is_zero()) {
      throw RelationInconsistent("weight " + std::to_string(2 * w) + " leaves residual " + dpoly_str(rows[i].rhs));
    }
  }
  if (pivots.size() < m) throw NotReducible(w);
  for (std::size_t i = 0; i < m; ++i) {
    int a = static_cast<int>(pivots[i]) + 1;
    nf_.emplace(std::make_pair(a, w - a), rows[i].rhs);
  }
  solved_ = w;
}

QSeries DReducer::reduce(const QSeries& apoly) {
  std::map<std::string, QSeries> images;
  for (const auto& v : apoly.vars()) {
    if (max_exponent(apoly, v.name) == 0) continue;
    auto [i, j] = a_pair(v.name);
    images.emplace(v.name, normal_form(i, j));
  }
  return substitute(apoly, images, dvars_, kUnbounded);
}

QSeries reduce_to_d(const QSeries& apoly, const RelationSet& rels, NkiMode mode) {
  DReducer red(rels, mode);
  return red.reduce(apoly);
}

QSeries psi_on_dk(int k, DReducer& reducer) {
  VarList avars = apoly_vars(k);
  return reducer.reduce(psi_on_linear_apoly(d_as_apoly(avars, k, reducer.mode()), 3));
}

PsiTableOver<GF2> psi_table_mod2(const PsiTable& table) {
  PsiTableOver<GF2> out;
  for (const auto& [k, p] : table) out.emplace(k, p.map_coeffs([](const Rat& c) { return reduce_mod2(c); }));
  return out;
}

PsiTableOver<Padic2> psi_table_2adic(const PsiTable& table, int precision) {
  PsiTableOver<Padic2> out;
  for (const auto& [k, p] : table) {
    out.emplace(k, p.map_coeffs([precision](const Rat& c) { return embed_2adic(c, precision); }));
  }
  return out;
}

template <CoeffRing R>
MultiSeries<R> apply_psi(const MultiSeries<R>& z, const PsiTableOver<R>& table) {
  const VarList& vars = z.vars();
  std::vector<MultiSeries<R>> images;
  for (const auto& v : vars) {
    auto it = table.find(d_index(v.name));
    if (it == table.end()) {
      images.push_back(z.zero_like());
      continue;
    }
    images.push_back(retarget_table_entry(it->second, vars));
  }
  std::map<std::string, MultiSeries<R>> subst;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (max_exponent(z, vars[i].name) == 0) continue;
    if (!table.contains(d_index(vars[i].name))) throw InsufficientTable("no psi image for " + vars[i].name);
    subst.emplace(vars[i].name, images[i]);
  }
  return substitute(z, subst, vars, z.bound());
}

template MultiSeries<Rat> apply_psi(const MultiSeries<Rat>&, const PsiTableOver<Rat>&);
template MultiSeries<GF2> apply_psi(const MultiSeries<GF2>&, const PsiTableOver<GF2>&);
template MultiSeries<Padic2> apply_psi(const MultiSeries<Padic2>&, const PsiTableOver<Padic2>&);

int d_weight(const VarList& dvars, const Exp& e) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += 2 * d_index(dvars[i].name) * e[i];
  return w;
}

std::vector<Exp> d_monomials(const VarList& dvars, int max_weight) {
  std::vector<Exp> out;
  Exp cur(dvars.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == dvars.size()) {
      out.push_back(cur);
      return;
    }
    int w = 2 * d_index(dvars[i].name);
    for (int e = 0; e * w <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e * w);
    }
    cur[i] = 0;
  };
  rec(rec, 0, max_weight);
  std::stable_sort(out.begin(), out.end(), [&](const Exp& a, const Exp& b) {
    int wa = d_weight(dvars, a), wb = d_weight(dvars, b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

namespace {

// Matrix of (psi - id) on the span of `basis`, one column per basis monomial.
// Rows are the monomials occurring in the images, indexed through `rows`.
template <CoeffRing R>
FieldMatrix<R> psi_minus_id(const VarList& vars, const std::vector<Exp>& basis, const PsiTableOver<R>& table,
                            std::map<Exp, std::size_t>& rows, std::vector<MultiSeries<R>>& images) {
  using T = ring_traits<R>;
  MultiSeries<R> ctx(vars, kUnbounded);
  for (const auto& e : basis) rows.emplace(e, rows.size());
  images.clear();
  for (const auto& e : basis) {
    MultiSeries<R> mono = ctx.zero_like();
    mono.add_term(e, T::one());
    MultiSeries<R> img = apply_psi(mono, table) - mono;
    for (const auto& [f, c] : img.terms()) rows.try_emplace(f, rows.size());
    images.push_back(std::move(img));
  }
  FieldMatrix<R> m(rows.size(), std::vector<R>(basis.size(), T::zero()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [f, c] : images[j].terms()) m[rows.at(f)][j] = c;
  }
  return m;
}

}  // namespace

bool is_spherical(const MultiSeries<GF2>& z, const PsiTableOver<GF2>& table) {
  return apply_psi(z, table) == z;
}

std::vector<SphericalClass> spherical_search(int max_weight, const PsiTableOver<GF2>& table) {
  int kmax = max_weight / 2;
  std::vector<SphericalClass> out;
  if (kmax < 2) return out;
  for (int k = 2; k <= kmax; ++k) {
    if (!table.contains(k)) throw InsufficientTable("no psi image for d" + std::to_string(k));
  }
  VarList vars = d_vars(kmax);
  MultiSeries<GF2> ctx(vars, kUnbounded);
  for (int w = 2; w <= max_weight; w += 2) {
    // Columns ordered by decreasing weight so that the echelon pivot of a
    // kernel vector is its leading monomial.
    std::vector<Exp> basis = d_monomials(vars, w);
    std::reverse(basis.begin(), basis.end());
    std::map<Exp, std::size_t> rows;
    std::vector<MultiSeries<GF2>> images;
    FieldMatrix<GF2> m = psi_minus_id(vars, basis, table, rows, images);
    auto ker = field_kernel(m, basis.size());
    auto pivots = row_reduce(ker, basis.size());
    for (std::size_t i = 0; i < ker.size(); ++i) {
      if (d_weight(vars, basis[pivots[i]]) != w) continue;
      MultiSeries<GF2> z = ctx.zero_like();
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (!ker[i][j].is_zero()) z.add_term(basis[j], GF2(1));
      }
      out.push_back({w, z});
    }
  }
  return out;
}

MultiSeries<Padic2> bootstrap_lift(const MultiSeries<Padic2>& start, const PsiTableOver<Padic2>& table,
                                   int target_precision) {
  if (target_precision < 1) throw PrecisionTooLow("target precision must be positive");
  const VarList& vars = start.vars();
  MultiSeries<Padic2> ctx(vars, kUnbounded);
  int top = 0;
  for (const auto& [e, c] : start.terms()) top = std::max(top, d_weight(vars, e));
  std::vector<Exp> basis = d_monomials(vars, top);
  std::map<Exp, std::size_t> rows;
  std::vector<MultiSeries<Padic2>> images;
  psi_minus_id(vars, basis, table, rows, images);
  FieldMatrix<GF2> mbar(rows.size(), std::vector<GF2>(basis.size(), GF2(0)));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [f, c] : images[j].terms()) mbar[rows.at(f)][j] = GF2::from_int(c.value());
  }

  MultiSeries<Padic2> b = start;
  auto residual = [&]() {
    MultiSeries<Padic2> r = apply_psi(b, table) - b;
    for (const auto& [f, c] : r.terms()) {
      if (!c.is_exact() && c.precision() < target_precision) {
        throw PrecisionTooLow("psi table precision " + std::to_string(c.precision()) + " is below the target");
      }
    }
    return r;
  };
  auto fixed_mod = [](const MultiSeries<Padic2>& r, int m) {
    for (const auto& [f, c] : r.terms()) {
      if (!mpz_divisible_2exp_p(c.value().get_mpz_t(), static_cast<mp_bitcnt_t>(m))) return false;
    }
    return true;
  };
  MultiSeries<Padic2> r = residual();
  if (!fixed_mod(r, 1)) throw NotInDomain("element is not fixed by psi modulo 2");
  for (int m = 1; m < target_precision; ++m) {
    if (fixed_mod(r, target_precision)) break;
    std::vector<GF2> rhs(rows.size(), GF2(0));
    for (const auto& [f, c] : r.terms()) {
      auto it = rows.find(f);
      if (it == rows.end()) throw LiftObstruction(m);
      rhs[it->second] = GF2(mpz_tstbit(c.value().get_mpz_t(), static_cast<mp_bitcnt_t>(m)));
    }
    auto sol = field_solve(mbar, rhs, basis.size());
    if (!sol) throw LiftObstruction(m);
    Int step;
    mpz_ui_pow_ui(step.get_mpz_t(), 2, static_cast<unsigned long>(m));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if ((*sol)[j].is_zero()) continue;
      b.add_term(basis[j], Padic2(step, Padic2::kExact));
    }
    r = residual();
    if (!fixed_mod(r, m + 1)) throw LiftObstruction(m);
  }
  return b.map_coeffs([target_precision](const Padic2& c) { return Padic2(c.value(), target_precision); });
}

MultiSeries<Padic2> bootstrap_lift(const MultiSeries<GF2>& z, const PsiTableOver<Padic2>& table,
                                   int target_precision) {
  MultiSeries<Padic2> start = z.map_coeffs([](GF2 c) { return Padic2(c.bit() ? 1 : 0); });
  return bootstrap_lift(start, table, target_precision);
}

}  // namespace fglab
