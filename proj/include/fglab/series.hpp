#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fglab/coeff_ring.hpp"
#include "fglab/error.hpp"
#include "fglab/parallel.hpp"

namespace fglab {

/// A named indeterminate. `weight` is the truncation weight; symbolic
/// parameters that should never be truncated use weight 0.
struct Var {
  std::string name;
  int weight = 1;

  friend bool operator==(const Var&, const Var&) = default;
};

using VarList = std::vector<Var>;
using Exp = std::vector<int>;

/// Bound for plain polynomials: nothing is ever truncated.
inline constexpr int kUnbounded = INT_MAX;

struct ExpHash {
  std::size_t operator()(const Exp& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : e) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

std::string format_monomial(const VarList& vars, const Exp& e);

/// Sparse multivariate power series truncated at weighted total degree
/// `bound`. Terms are kept in lexicographic order of exponent vectors and zero
/// coefficients are never stored.
template <CoeffRing R>
class MultiSeries {
 public:
  using Terms = std::map<Exp, R>;
  using Traits = ring_traits<R>;

  MultiSeries() : vars_(std::make_shared<VarList>()), bound_(kUnbounded) {}
  MultiSeries(VarList vars, int bound)
      : vars_(std::make_shared<VarList>(std::move(vars))), bound_(bound) {
    for (const auto& v : *vars_) {
      if (v.weight < 0) throw VariableMismatch("negative truncation weight for " + v.name);
    }
  }

  static MultiSeries constant(VarList vars, int bound, const R& c) {
    MultiSeries s(std::move(vars), bound);
    s.add_term(Exp(s.nvars(), 0), c);
    return s;
  }

  MultiSeries zero_like() const { return MultiSeries(vars_, bound_); }
  MultiSeries constant_like(const R& c) const {
    MultiSeries s = zero_like();
    s.add_term(Exp(nvars(), 0), c);
    return s;
  }
  MultiSeries one_like() const { return constant_like(Traits::one()); }
  MultiSeries var(const std::string& name) const { return var(index_of(name)); }
  MultiSeries var(int index) const {
    Exp e(nvars(), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(e, Traits::one());
  }
  MultiSeries monomial(const Exp& e, const R& c) const {
    MultiSeries s = zero_like();
    s.add_term(e, c);
    return s;
  }

  const VarList& vars() const { return *vars_; }
  std::size_t nvars() const { return vars_->size(); }
  int bound() const { return bound_; }
  bool bounded() const { return bound_ != kUnbounded; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool has_var(const std::string& name) const {
    return std::any_of(vars_->begin(), vars_->end(), [&](const Var& v) { return v.name == name; });
  }
  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if ((*vars_)[i].name == name) return static_cast<int>(i);
    }
    throw VariableMismatch("no variable named " + name);
  }

  long weight(const Exp& e) const {
    long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long>(e[i]) * (*vars_)[i].weight;
    return w;
  }
  bool in_bound(const Exp& e) const { return !bounded() || weight(e) <= bound_; }

  R coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Traits::zero() : it->second;
  }
  /// Coefficient of the empty exponent.
  R constant_term() const { return coeff(Exp(nvars(), 0)); }

  /// Adds c * monomial(e); terms beyond the bound are dropped.
  void add_term(const Exp& e, const R& c) {
    if (e.size() != nvars()) throw VariableMismatch("exponent length does not match variables");
    if (Traits::is_zero(c) || !in_bound(e)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool same_context(const MultiSeries& o) const {
    return (vars_ == o.vars_ || *vars_ == *o.vars_);
  }
  void check_compatible(const MultiSeries& o) const {
    if (!same_context(o)) throw VariableMismatch("operands use different variables");
    if (bound_ != o.bound_) throw BoundMismatch("operands use different bounds");
  }

  /// Same terms viewed with a different bound (terms beyond it are dropped).
  MultiSeries with_bound(int bound) const {
    MultiSeries s(vars_, bound);
    for (const auto& [e, c] : terms_) {
      if (s.in_bound(e)) s.terms_.emplace(e, c);
    }
    return s;
  }

  MultiSeries& operator+=(const MultiSeries& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiSeries& operator-=(const MultiSeries& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }

  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator-(const MultiSeries& a) {
    MultiSeries s = a.zero_like();
    for (const auto& [e, c] : a.terms_) s.terms_.emplace(e, -c);
    return s;
  }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) { return a.mul(b); }
  friend MultiSeries operator*(const R& c, const MultiSeries& a) { return a.scaled(c); }
  friend MultiSeries operator*(const MultiSeries& a, const R& c) { return a.scaled(c); }

  MultiSeries scaled(const R& c) const {
    MultiSeries s = zero_like();
    if (Traits::is_zero(c)) return s;
    for (const auto& [e, x] : terms_) {
      R y = x * c;
      if (!Traits::is_zero(y)) s.terms_.emplace(e, y);
    }
    return s;
  }

  MultiSeries pow(unsigned n) const {
    MultiSeries result = one_like();
    MultiSeries base = *this;
    while (n > 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return result;
  }

  template <typename F>
  auto map_coeffs(F f) const -> MultiSeries<decltype(f(std::declval<R>()))> {
    using S = decltype(f(std::declval<R>()));
    MultiSeries<S> out(*vars_, bound_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.same_context(b) && a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

  /// Human-readable form: terms by increasing weight, then by decreasing
  /// exponent vector; e.g. "v^4 + 24*v^3*b1 - 1/3*x".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const typename Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
      long wa = weight(a->first), wb = weight(b->first);
      if (wa != wb) return wa < wb;
      return a->first > b->first;
    });
    std::string out;
    bool first = true;
    for (auto* t : order) {
      std::string c = Traits::str(t->second);
      bool neg = !c.empty() && c.front() == '-';
      if (neg) c.erase(0, 1);
      std::string mono = format_monomial(*vars_, t->first);
      std::string body;
      if (mono.empty()) {
        body = c;
      } else if (c == "1") {
        body = mono;
      } else {
        body = c + "*" + mono;
      }
      if (first) {
        out += neg ? "-" + body : body;
      } else {
        out += neg ? " - " + body : " + " + body;
      }
      first = false;
    }
    return out;
  }

 private:
  template <CoeffRing S>
  friend class MultiSeries;

  MultiSeries(std::shared_ptr<VarList> vars, int bound) : vars_(std::move(vars)), bound_(bound) {}

  using Accum = std::unordered_map<Exp, R, ExpHash>;

  void mul_block(const MultiSeries& b, typename Terms::const_iterator first,
                 typename Terms::const_iterator last, Accum& acc) const {
    const std::size_t n = nvars();
    std::vector<long> wb;
    wb.reserve(b.terms_.size());
    for (const auto& [e, c] : b.terms_) wb.push_back(b.weight(e));
    Exp e(n);
    for (auto it = first; it != last; ++it) {
      long wa = weight(it->first);
      std::size_t j = 0;
      for (const auto& [eb, cb] : b.terms_) {
        long w = wb[j++];
        if (bounded() && wa + w > bound_) continue;
        for (std::size_t k = 0; k < n; ++k) e[k] = it->first[k] + eb[k];
        auto [slot, inserted] = acc.try_emplace(e, it->second * cb);
        if (!inserted) slot->second = slot->second + it->second * cb;
      }
    }
  }

  MultiSeries mul(const MultiSeries& b) const {
    check_compatible(b);
    MultiSeries out = zero_like();
    if (terms_.empty() || b.terms_.empty()) return out;
    const std::size_t work = terms_.size() * b.terms_.size();
    const std::size_t blocks =
        work < 20000 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(thread_count()), terms_.size());
    std::vector<Accum> partial(blocks);
    std::vector<typename Terms::const_iterator> cuts;
    {
      std::size_t per = (terms_.size() + blocks - 1) / blocks;
      auto it = terms_.begin();
      for (std::size_t k = 0; k < blocks; ++k) {
        cuts.push_back(it);
        for (std::size_t s = 0; s < per && it != terms_.end(); ++s) ++it;
      }
      cuts.push_back(terms_.end());
    }
    parallel_for(blocks, [&](std::size_t k) { mul_block(b, cuts[k], cuts[k + 1], partial[k]); });
    // Exact coefficients: the merge order cannot change the result.
    for (auto& acc : partial) {
      for (auto& [e, c] : acc) out.add_term(e, c);
    }
    return out;
  }

  std::shared_ptr<VarList> vars_;
  int bound_;
  Terms terms_;
};

/// Homogeneous component of weighted degree d.
template <CoeffRing R>
MultiSeries<R> degree_part(const MultiSeries<R>& a, long d) {
  MultiSeries<R> out = a.zero_like();
  for (const auto& [e, c] : a.terms()) {
    if (a.weight(e) == d) out.add_term(e, c);
  }
  return out;
}

/// Coefficient of var^k, as a series in the same variables with var removed
/// (its exponent set to zero).
template <CoeffRing R>
MultiSeries<R> coeff_in(const MultiSeries<R>& a, const std::string& var, int k) {
  int idx = a.index_of(var);
  MultiSeries<R> out = a.zero_like();
  for (const auto& [e, c] : a.terms()) {
    if (e[static_cast<std::size_t>(idx)] != k) continue;
    Exp f = e;
    f[static_cast<std::size_t>(idx)] = 0;
    out.add_term(f, c);
  }
  return out;
}

/// Highest exponent of var occurring in a.
template <CoeffRing R>
int max_exponent(const MultiSeries<R>& a, const std::string& var) {
  int idx = a.index_of(var);
  int m = 0;
  for (const auto& [e, c] : a.terms()) m = std::max(m, e[static_cast<std::size_t>(idx)]);
  return m;
}

/// Re-expresses a in another variable list, matching variables by name.
/// Variables of a that are missing from `vars` must not occur in any term.
template <CoeffRing R>
MultiSeries<R> retarget(const MultiSeries<R>& a, const VarList& vars, int bound) {
  MultiSeries<R> out(vars, bound);
  std::vector<int> map(a.nvars(), -1);
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (vars[j].name == a.vars()[i].name) map[i] = static_cast<int>(j);
    }
  }
  for (const auto& [e, c] : a.terms()) {
    Exp f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw VariableMismatch("variable " + a.vars()[i].name + " has no target");
      f[static_cast<std::size_t>(map[i])] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

/// Multiplicative inverse. The weight-0 part must be a unit scalar.
template <CoeffRing R>
MultiSeries<R> reciprocal(const MultiSeries<R>& a) {
  using T = ring_traits<R>;
  const Exp zero(a.nvars(), 0);
  for (const auto& [e, c] : a.terms()) {
    if (a.weight(e) == 0 && e != zero) {
      throw NonUnitConstantTerm("constant term involves weight-0 symbols: " + a.str());
    }
  }
  R c0 = a.constant_term();
  R inv;
  try {
    inv = T::inverse(c0);
  } catch (const Error&) {
    throw NonUnitConstantTerm("constant term " + T::str(c0) + " is not a unit");
  }
  MultiSeries<R> h = a.scaled(inv) - a.one_like();
  if (h.is_zero()) return a.constant_like(inv);
  if (!a.bounded()) throw NonUnitConstantTerm("reciprocal of a non-constant polynomial");
  int minw = a.bound();
  for (const auto& [e, c] : h.terms()) minw = std::min<int>(minw, static_cast<int>(h.weight(e)));
  int steps = a.bound() / std::max(1, minw);
  MultiSeries<R> r = a.one_like();
  for (int k = 0; k < steps; ++k) r = a.one_like() - h * r;
  return r.scaled(inv);
}

/// Simultaneous substitution. Each variable of `src` named in `images` is
/// replaced by its image; every other variable of `src` must exist (by name)
/// in `vars`. All images must live in (vars, bound).
template <CoeffRing R>
MultiSeries<R> substitute(const MultiSeries<R>& src, const std::map<std::string, MultiSeries<R>>& images,
                          const VarList& vars, int bound) {
  MultiSeries<R> target(vars, bound);
  const std::size_t n = src.nvars();
  std::vector<MultiSeries<R>> base(n);
  std::vector<bool> replaced(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = src.vars()[i].name;
    auto it = images.find(name);
    if (it != images.end()) {
      if (!(it->second.vars() == vars)) throw VariableMismatch("image of " + name + " uses other variables");
      base[i] = it->second.with_bound(bound);
      replaced[i] = true;
    }
  }
  std::vector<int> keep(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (replaced[i]) continue;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (vars[j].name == src.vars()[i].name) keep[i] = static_cast<int>(j);
    }
  }
  std::vector<std::vector<MultiSeries<R>>> powers(n);
  auto power = [&](std::size_t i, int k) -> const MultiSeries<R>& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(target.one_like());
    while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * base[i]);
    return p[static_cast<std::size_t>(k)];
  };
  // Group terms by the exponents of replaced variables so each distinct
  // product of powers is formed once.
  std::map<Exp, MultiSeries<R>> groups;
  for (const auto& [e, c] : src.terms()) {
    Exp key(n, 0);
    Exp rest(vars.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (replaced[i]) {
        key[i] = e[i];
      } else {
        if (keep[i] < 0) throw VariableMismatch("variable " + src.vars()[i].name + " has no target");
        rest[static_cast<std::size_t>(keep[i])] = e[i];
      }
    }
    auto [it, inserted] = groups.try_emplace(key, target);
    it->second.add_term(rest, c);
  }
  MultiSeries<R> out = target;
  for (const auto& [key, cofactor] : groups) {
    MultiSeries<R> prod = cofactor;
    for (std::size_t i = 0; i < n; ++i) {
      if (key[i] > 0) prod = prod * power(i, key[i]);
    }
    out += prod;
  }
  return out;
}

/// outer(var := inner). Other variables of `outer` are matched by name in
/// the context of `inner`. The inner series must have no weight-0 part.
template <CoeffRing R>
MultiSeries<R> compose(const MultiSeries<R>& outer, const std::string& var, const MultiSeries<R>& inner) {
  for (const auto& [e, c] : inner.terms()) {
    if (inner.weight(e) == 0) throw NonzeroConstantTerm("inner series has a weight-0 term: " + inner.str());
  }
  return substitute(outer, {{var, inner}}, inner.vars(), inner.bound());
}

namespace detail {

template <CoeffRing R>
void check_strict(const MultiSeries<R>& g, const std::string& var) {
  using T = ring_traits<R>;
  if (!coeff_in(g, var, 0).is_zero()) throw NotStrict("series has a term without " + var);
  MultiSeries<R> lead = coeff_in(g, var, 1);
  if (!(lead == g.constant_like(T::one()))) {
    throw NotStrict("coefficient of " + var + " is " + lead.str() + ", not 1");
  }
}

}  // namespace detail

/// Compositional inverse h of a strict series g = var + ..., i.e.
/// g(h) = var = h(g) to the bound.
template <CoeffRing R>
MultiSeries<R> comp_inverse(const MultiSeries<R>& g, const std::string& var) {
  detail::check_strict(g, var);
  MultiSeries<R> x = g.var(var);
  int w = g.vars()[static_cast<std::size_t>(g.index_of(var))].weight;
  if (w <= 0) throw NotStrict("series variable must have positive weight");
  if (!g.bounded()) throw BoundMismatch("compositional inverse needs a finite bound");
  MultiSeries<R> h = x;
  // Each pass fixes at least one more order of var.
  for (int pass = 0; pass <= g.bound() / w; ++pass) {
    MultiSeries<R> err = compose(g, var, h) - x;
    if (err.is_zero()) break;
    h -= err;
  }
  return h;
}

/// Coefficient c_n of var^(n+1) in the compositional inverse of the strict
/// series g = sum_{i>=0} b_i var^(i+1), via
///   c_n = 1/(n+1) * [t^n] (sum_i b_i t^i)^(-(n+1)).
/// The result is a series in the variables of g not involving var.
/// Throws DivisionUndefined when n+1 is not invertible.
template <CoeffRing R>
MultiSeries<R> residue_inverse_coeff(const MultiSeries<R>& g, const std::string& var, int n) {
  using T = ring_traits<R>;
  detail::check_strict(g, var);
  R scale;
  try {
    scale = T::inverse(T::from_int(n + 1));
  } catch (const Error&) {
    throw DivisionUndefined(std::to_string(n + 1) + " is not invertible in " + T::name);
  }
  // Work in a context where only var carries weight, truncated at n.
  VarList flat = g.vars();
  for (auto& v : flat) v.weight = (v.name == var) ? 1 : 0;
  MultiSeries<R> p(flat, n);
  MultiSeries<R> t = p.var(var);
  MultiSeries<R> tk = p.one_like();
  for (int i = 0; i <= n; ++i) {
    p += retarget(coeff_in(g, var, i + 1), flat, n) * tk;
    tk = tk * t;
  }
  MultiSeries<R> q = reciprocal(p).pow(static_cast<unsigned>(n + 1));
  return retarget(coeff_in(q, var, n), g.vars(), g.bound()).scaled(scale);
}

/// Partial derivative. The bound drops by the weight of var.
template <CoeffRing R>
MultiSeries<R> derivative(const MultiSeries<R>& a, const std::string& var) {
  using T = ring_traits<R>;
  int idx = a.index_of(var);
  int w = a.vars()[static_cast<std::size_t>(idx)].weight;
  MultiSeries<R> out = a.bounded() ? a.zero_like().with_bound(a.bound() - w) : a.zero_like();
  for (const auto& [e, c] : a.terms()) {
    int k = e[static_cast<std::size_t>(idx)];
    if (k == 0) continue;
    Exp f = e;
    f[static_cast<std::size_t>(idx)] = k - 1;
    out.add_term(f, c * T::from_int(k));
  }
  return out;
}

/// Term-wise antiderivative with zero constant of integration; the bound
/// grows by the weight of var. Throws DivisionUndefined outside Q-algebras.
template <CoeffRing R>
MultiSeries<R> integrate(const MultiSeries<R>& a, const std::string& var) {
  using T = ring_traits<R>;
  int idx = a.index_of(var);
  int w = a.vars()[static_cast<std::size_t>(idx)].weight;
  MultiSeries<R> out = a.bounded() ? a.zero_like().with_bound(a.bound() + w) : a.zero_like();
  for (const auto& [e, c] : a.terms()) {
    int k = e[static_cast<std::size_t>(idx)];
    Exp f = e;
    f[static_cast<std::size_t>(idx)] = k + 1;
    R inv;
    try {
      inv = T::inverse(T::from_int(k + 1));
    } catch (const Error&) {
      throw DivisionUndefined(std::to_string(k + 1) + " is not invertible in " + T::name);
    }
    out.add_term(f, c * inv);
  }
  return out;
}

using QSeries = MultiSeries<Rat>;

}  // namespace fglab
