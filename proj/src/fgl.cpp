#include "fglab/fgl.hpp"

#include <cctype>

#include "fglab/series_parse.hpp"

namespace fglab {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// First offending monomial: lowest weight, then map order.
std::string first_monomial(const QSeries& s) {
  const Exp* best = nullptr;
  long bw = 0;
  for (const auto& [e, c] : s.terms()) {
    long w = s.weight(e);
    if (best == nullptr || w < bw) {
      best = &e;
      bw = w;
    }
  }
  std::string m = best ? format_monomial(s.vars(), *best) : "";
  return m.empty() ? "1" : m;
}

}  // namespace

std::optional<std::pair<int, int>> parse_a_name(const std::string& name) {
  if (name.size() < 3 || name[0] != 'a') return std::nullopt;
  std::string rest = name.substr(1);
  auto us = rest.find('_');
  if (us != std::string::npos) {
    std::string l = rest.substr(0, us), r = rest.substr(us + 1);
    if (!all_digits(l) || !all_digits(r)) return std::nullopt;
    return std::make_pair(std::stoi(l), std::stoi(r));
  }
  if (rest.size() != 2 || !all_digits(rest)) return std::nullopt;
  return std::make_pair(rest[0] - '0', rest[1] - '0');
}

std::string a_name(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 10 && j < 10) return "a" + std::to_string(i) + std::to_string(j);
  return "a" + std::to_string(i) + "_" + std::to_string(j);
}

VarList law_vars(const std::vector<std::string>& symbols) {
  VarList vars;
  for (const auto& s : symbols) vars.push_back({s, 0});
  vars.push_back({"x", 1});
  vars.push_back({"y", 1});
  return vars;
}

std::vector<std::string> vb_symbols(int n) {
  std::vector<std::string> s{"v"};
  for (int i = 1; i <= n; ++i) s.push_back("b" + std::to_string(i));
  return s;
}

std::optional<int> default_degree(const std::string& name) {
  if (name == "v") return 1;
  if (name == "u") return -1;
  if (name == "x" || name == "y" || name == "z") return -1;
  if (name.size() >= 2 && name[0] == 'b' && all_digits(name.substr(1))) return std::stoi(name.substr(1));
  if (auto ij = parse_a_name(name)) return ij->first + ij->second - 1;
  return std::nullopt;
}

std::optional<int> homogeneous_degree(const QSeries& s) {
  std::vector<std::optional<int>> deg;
  for (const auto& v : s.vars()) deg.push_back(default_degree(v.name));
  std::optional<int> out;
  for (const auto& [e, c] : s.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!deg[i]) return std::nullopt;
      d += e[i] * *deg[i];
    }
    if (out && *out != d) return std::nullopt;
    out = d;
  }
  return out;
}

FGL::FGL(QSeries law) : law_(std::move(law)) {}

QSeries FGL::a(int i, int j) const {
  return retarget(coeff_in(coeff_in(law_, "x", i), "y", j), symbol_vars(), kUnbounded);
}

VarList FGL::symbol_vars() const {
  VarList out;
  for (const auto& v : law_.vars()) {
    if (v.name != "x" && v.name != "y") out.push_back({v.name, 0});
  }
  return out;
}

FGL fgl_check(const QSeries& law) {
  if (!law.has_var("x") || !law.has_var("y")) throw VariableMismatch("a law needs variables x and y");
  QSeries x = law.var("x"), y = law.var("y");
  QSeries f_x0 = coeff_in(law, "y", 0);
  QSeries f_0y = coeff_in(law, "x", 0);
  if (!(f_x0 - x).is_zero()) throw AxiomViolation("unit", first_monomial(f_x0 - x));
  if (!(f_0y - y).is_zero()) throw AxiomViolation("unit", first_monomial(f_0y - y));

  int ix = law.index_of("x"), iy = law.index_of("y");
  QSeries swapped = law.zero_like();
  for (const auto& [e, c] : law.terms()) {
    Exp s = e;
    std::swap(s[static_cast<std::size_t>(ix)], s[static_cast<std::size_t>(iy)]);
    swapped.add_term(s, c);
  }
  if (!(swapped - law).is_zero()) throw AxiomViolation("commutativity", first_monomial(swapped - law));

  VarList vars3 = law.vars();
  vars3.push_back({"z", law.vars()[static_cast<std::size_t>(ix)].weight});
  QSeries ctx3(vars3, law.bound());
  QSeries f_xy = retarget(law, vars3, law.bound());
  QSeries f_yz = substitute(law, {{"x", ctx3.var("y")}, {"y", ctx3.var("z")}}, vars3, law.bound());
  QSeries lhs = substitute(law, {{"y", f_yz}}, vars3, law.bound());
  QSeries rhs = substitute(law, {{"x", f_xy}, {"y", ctx3.var("z")}}, vars3, law.bound());
  if (!(lhs - rhs).is_zero()) throw AxiomViolation("associativity", first_monomial(lhs - rhs));
  return FGL(law);
}

QSeries multiplicative_law(const VarList& vars, int bound, const std::string& v) {
  QSeries ctx(vars, bound);
  return ctx.var("x") + ctx.var("y") + ctx.var(v) * ctx.var("x") * ctx.var("y");
}

QSeries generic_strict_series(const QSeries& ctx, int n) {
  QSeries x = ctx.var("x");
  QSeries g = x;
  QSeries xp = x;
  for (int i = 1; i <= n; ++i) {
    xp = xp * x;
    g += ctx.var("b" + std::to_string(i)) * xp;
  }
  return g;
}

FGL fgl_twist(const FGL& f, const QSeries& g) {
  const QSeries& law = f.law();
  law.check_compatible(g);
  QSeries ginv = comp_inverse(g, "x");
  QSeries ginv_y = substitute(ginv, {{"x", law.var("y")}}, law.vars(), law.bound());
  QSeries inner = substitute(law, {{"x", ginv}, {"y", ginv_y}}, law.vars(), law.bound());
  QSeries out = compose(g, "x", inner);
  if (homogeneous_degree(law) == -1 && homogeneous_degree(g) == -1 && homogeneous_degree(out) != -1) {
    throw AxiomViolation("grading", "twisted law is not homogeneous of degree -1");
  }
  return FGL(out);
}

QSeries fgl_log(const FGL& f) {
  QSeries dy = coeff_in(f.law(), "y", 1);
  return integrate(reciprocal(dy), "x").with_bound(f.bound());
}

FGL fgl_from_genus(const QSeries& p) {
  if (!(p.constant_term() == Rat(1)) || !(degree_part(p, 0) == p.one_like())) {
    throw NonUnitConstantTerm("genus series must have constant term 1");
  }
  QSeries q = p.var("x") * reciprocal(p);
  QSeries g = comp_inverse(q, "x");
  QSeries gy = substitute(g, {{"x", p.var("y")}}, p.vars(), p.bound());
  return FGL(compose(q, "x", g + gy));
}

QSeries todd_series(const QSeries& ctx) {
  if (!ctx.bounded()) throw BoundMismatch("the Todd series needs a truncation bound");
  // (1 - e^-x) / x = sum_n (-1)^n x^n / (n + 1)!
  QSeries q = ctx.zero_like();
  QSeries xn = ctx.one_like();
  Rat fact(1);
  for (int n = 0; !xn.is_zero(); ++n) {
    fact *= Rat(n + 1);
    q += xn.scaled(Rat(n % 2 == 0 ? 1 : -1) / fact);
    xn = xn * ctx.var("x");
  }
  return reciprocal(q);
}

std::map<std::pair<int, int>, QSeries> fgl_binom(const FGL& f, int k) {
  const QSeries& law = f.law();
  QSeries pw = law.pow(static_cast<unsigned>(k));
  int ix = law.index_of("x"), iy = law.index_of("y");
  VarList sym = f.symbol_vars();
  std::map<std::pair<int, int>, QSeries> out;
  for (const auto& [e, c] : pw.terms()) {
    auto key = std::make_pair(e[static_cast<std::size_t>(ix)], e[static_cast<std::size_t>(iy)]);
    Exp rest;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) != ix && static_cast<int>(i) != iy) rest.push_back(e[i]);
    }
    auto [it, inserted] = out.try_emplace(key, QSeries(sym, kUnbounded));
    it->second.add_term(rest, c);
  }
  return out;
}

CpnMode parse_cpn_mode(const std::string& text) {
  if (text == "paper-box") return CpnMode::kPaperBox;
  if (text == "residue-exact") return CpnMode::kResidueExact;
  throw ParseError("unknown substitution mode '" + text + "'");
}

std::string cpn_mode_name(CpnMode mode) {
  return mode == CpnMode::kPaperBox ? "paper-box" : "residue-exact";
}

VarList a_vars(int max_index) {
  VarList vars;
  for (int s = 2; s <= max_index + 1; ++s) {
    for (int i = 1; 2 * i <= s; ++i) vars.push_back({a_name(i, s - i), 0});
  }
  return vars;
}

QSeries cpn_in_a(int n, CpnMode mode) {
  if (n < 1) throw UnsupportedDimension("[CP^n] needs n >= 1");
  if (mode == CpnMode::kPaperBox) {
    static const char* const kBox[] = {
        "-a11",
        "-a12 + a11^2",
        "-a13 - a11^3 + 2 a11 a12",
        "-a14 + a11^4 + a12^2 + 2 a11 a13",
    };
    if (n > 4) throw UnsupportedDimension("paper-box mode tabulates [CP^n] for n <= 4 only");
    return parse_series(kBox[n - 1], a_vars(4), kUnbounded);
  }
  VarList vars = a_vars(n);
  VarList with_t = vars;
  with_t.push_back({"t", 1});
  QSeries ctx(with_t, n);
  QSeries s = ctx.one_like();
  QSeries tk = ctx.one_like();
  for (int i = 1; i <= n; ++i) {
    tk = tk * ctx.var("t");
    s += ctx.var(a_name(1, i)) * tk;
  }
  return retarget(coeff_in(reciprocal(s), "t", n), vars, kUnbounded);
}

}  // namespace fglab
