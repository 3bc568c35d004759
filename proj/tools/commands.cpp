#include "commands.hpp"

#include <regex>
#include <sstream>

#include "fglab/bordism.hpp"
#include "fglab/cannibal.hpp"
#include "fglab/chern.hpp"
#include "fglab/padic_mahler.hpp"
#include "fglab/series_json.hpp"
#include "fglab/series_parse.hpp"

namespace fglab::cli {

namespace {

using json = nlohmann::ordered_json;

std::string coeff_num(const Rat& c) { return c.num().get_str(); }
std::string coeff_den(const Rat& c) { return c.den().get_str(); }
std::string coeff_num(const GF2& c) { return c == GF2(1) ? "1" : "0"; }
std::string coeff_den(const GF2&) { return "1"; }

// {"terms": [{"mono": {"d2": e2, ...}, "num": "...", "den": "..."}]}
template <CoeffRing R>
json dpoly_json(const MultiSeries<R>& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json mono = json::object();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) mono[p.vars()[i].name] = e[i];
    }
    terms.push_back({{"mono", mono}, {"num", coeff_num(c)}, {"den", coeff_den(c)}});
  }
  return {{"terms", terms}};
}

template <CoeffRing R>
Report psi_table_report(const std::map<int, MultiSeries<R>>& table) {
  Report r;
  CsvTable t{{"generator", "image"}, {}};
  r.json = json::object();
  for (const auto& [k, p] : table) {
    std::string name = "d" + std::to_string(k);
    std::string img = dpoly_str(p);
    r.text += "psi(" + name + ") = " + img + "\n";
    t.rows.push_back({name, img});
    r.json[name] = dpoly_json(p);
  }
  r.csv = std::move(t);
  return r;
}

Report series_report(const QSeries& s) {
  Report r;
  r.text = s.str() + "\n";
  r.json = series_to_json(s);
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

VarList symbols_and_x(int n) {
  VarList vars;
  for (int i = 1; i <= n; ++i) vars.push_back({"b" + std::to_string(i), 0});
  vars.push_back({"x", 1});
  return vars;
}

FGL twisted_law(int n, int bound) {
  QSeries ctx(law_vars(vb_symbols(n)), bound);
  return fgl_twist(FGL(multiplicative_law(ctx.vars(), bound)), generic_strict_series(ctx, n));
}

ProjProduct parse_space(const std::string& text) {
  BordismExpr e = BordismExpr::parse(text);
  const auto& terms = e.terms();
  require(terms.size() == 1 && terms.begin()->second == Rat(1), "expected a single product such as CP1xCP3");
  return ProjProduct(terms.begin()->first);
}

std::vector<int> parse_chern_monomial(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    require(factor.size() >= 2 && factor[0] == 'c', "bad Chern monomial factor '" + factor + "'");
    auto caret = factor.find('^');
    int k = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    int e = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
    for (int t = 0; t < e; ++t) out.push_back(k);
  }
  require(!out.empty(), "empty Chern monomial");
  return out;
}

std::vector<std::vector<std::string>> int_cells(const IntMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) cells[i].push_back(m.at(i, j).get_str());
  }
  return cells;
}

std::vector<std::string> indexed(const std::string& prefix, int from, int to) {
  std::vector<std::string> v;
  for (int i = from; i <= to; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

Padic2 parse_2adic(const std::string& text, int precision) {
  Rat q = Rat::parse(text);
  if (q.is_integer()) return Padic2(q.num(), Padic2::kExact);
  return Padic2::from_rat(q, precision);
}

PsiTable thom_table(int max_k, NkiMode nki) {
  DReducer red(gen_2structure_relations(max_k), nki);
  return thom_psi_table(max_k, theta3_direct(max_k), red);
}

}  // namespace

Report series_inverse(const Config&, int n, const std::string& method) {
  require(n >= 1, "--n must be at least 1");
  require(method == "recursive" || method == "residue", "--method must be recursive or residue");
  QSeries ctx(symbols_and_x(n), n + 1);
  QSeries g = ctx.var("x");
  for (int i = 1; i <= n; ++i) g += ctx.var("b" + std::to_string(i)) * ctx.var("x").pow(static_cast<unsigned>(i + 1));
  std::vector<std::pair<std::string, std::string>> rows;
  QSeries h = method == "recursive" ? comp_inverse(g, "x") : ctx.zero_like();
  for (int k = 1; k <= n; ++k) {
    QSeries c = method == "recursive" ? coeff_in(h, "x", k + 1) : residue_inverse_coeff(g, "x", k);
    rows.emplace_back("c" + std::to_string(k), c.str());
  }
  return key_value_report(rows, "coefficient", "value");
}

Report fgl_twist_images(const Config&, int n) {
  require(n >= 1, "--n must be at least 1");
  FGL t = twisted_law(n, n + 1);
  std::vector<std::pair<std::string, std::string>> rows;
  for (int d = 2; d <= n + 1; ++d) {
    for (int i = d - 1; i >= (d + 1) / 2; --i) {
      rows.emplace_back("a" + std::to_string(i) + std::to_string(d - i), t.a(i, d - i).str());
    }
  }
  return key_value_report(rows, "coefficient", "image");
}

Report fgl_check_twisted(const Config& cfg, int n) {
  require(n >= 1, "--n must be at least 1");
  fgl_check(twisted_law(n, cfg.bound).law());
  Report r = key_value_report({{"axioms", "unit, commutativity, associativity hold to bound " + std::to_string(cfg.bound)}});
  return r;
}

Report fgl_log_of(const Config& cfg, const std::string& law) {
  QSeries ctx(law_vars({}), cfg.bound);
  if (law == "multiplicative") return series_report(fgl_log(FGL(multiplicative_law(law_vars({"v"}), cfg.bound))));
  if (law == "todd") return series_report(fgl_log(fgl_from_genus(todd_series(ctx))));
  throw UsageError("--law must be multiplicative or todd");
}

Report fgl_todd(const Config& cfg) {
  QSeries ctx(law_vars({}), cfg.bound);
  return series_report(fgl_check(fgl_from_genus(todd_series(ctx)).law()).law());
}

Report fgl_cpn(const Config& cfg, int n) {
  require(n >= 1, "--n must be at least 1");
  Report r = series_report(cpn_in_a(n, cfg.mode));
  r.text = "[CP" + std::to_string(n) + "] = " + r.text;
  return r;
}

Report fgl_miscenko(const Config& cfg, const std::string& expr, int n) {
  BordismExpr e = BordismExpr::parse(expr);
  int dim = e.dimension();
  require(n >= 1, "--n must be at least 1");
  return series_report(miscenko_image(e, twisted_law(n, dim + 1), cfg.mode));
}

Report chern_system(const Config&, int dim) {
  ConstraintSystem sys = su_constraint_system(default_basis(dim), dim);
  return matrix_report(sys.row_names, sys.col_names, int_cells(sys.matrix), "monomial");
}

Report chern_reduce(const Config&, int dim) {
  ConstraintSystem sys = su_constraint_system(default_basis(dim), dim);
  IntMatrix h = integer_reduce(sys.matrix);
  return matrix_report(indexed("r", 1, static_cast<int>(h.rows())), sys.col_names, int_cells(h), "row");
}

Report chern_nullspace(const Config&, int dim) {
  ConstraintSystem sys = su_constraint_system(default_basis(dim), dim);
  auto ns = nullspace_rational(sys.matrix);
  std::vector<std::vector<std::string>> cells;
  for (const auto& v : ns) {
    std::vector<std::string> row;
    for (const auto& c : v) row.push_back(c.str());
    cells.push_back(std::move(row));
  }
  return matrix_report(indexed("v", 1, static_cast<int>(ns.size())), sys.col_names, cells, "vector");
}

Report chern_number_of(const Config&, const std::string& space, const std::string& monomial) {
  ProjProduct p = parse_space(space);
  auto mono = parse_chern_monomial(monomial);
  return key_value_report({{chern_monomial_name(mono) + "[" + p.str() + "]", chern_number(p, mono).get_str()}});
}

Report chern_todd(const Config&, const std::string& space, const std::string& numbers) {
  require(space.empty() != numbers.empty(), "give exactly one of --space and --numbers");
  std::vector<Rat> c;
  std::string label;
  if (!space.empty()) {
    ProjProduct p = parse_space(space);
    require(p.dimension() == 4, "T4 needs a product of complex dimension 4");
    for (const auto& m : std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 3}, {1, 1, 2}, {2, 2}, {4}}) {
      c.emplace_back(chern_number(p, m));
    }
    label = "T4[" + p.str() + "]";
  } else {
    std::stringstream ss(numbers);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.push_back(Rat::parse(tok));
    require(c.size() == 5, "--numbers needs c1^4,c1*c3,c1^2*c2,c2^2,c4");
    label = "T4";
  }
  return key_value_report({{label, todd_t4(c[0], c[1], c[2], c[3], c[4]).str()}});
}

Report adams_beta(const Config&, int k, int i) {
  require(i >= 0, "--i must be non-negative");
  BetaElt b = psi_inv_beta(k, i);
  Report r;
  r.text = b.str() + "\n";
  CsvTable t{{"index", "coefficient"}, {}};
  json terms = json::array();
  for (const auto& [j, c] : b.coeffs) {
    t.rows.push_back({std::to_string(j), c.str()});
    terms.push_back({{"index", j}, {"num", coeff_num(c)}, {"den", coeff_den(c)}});
  }
  r.csv = std::move(t);
  r.json = {{"k", k}, {"i", i}, {"terms", terms}};
  return r;
}

Report adams_matrix(const Config&, int k, int n, bool mod2) {
  require(n >= 0, "--n must be non-negative");
  IntMatrix m = psi_inv_matrix(k, n);
  auto cells = int_cells(m);
  if (mod2) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) cells[i][j] = GF2::from_int(m.at(i, j)) == GF2(1) ? "1" : "0";
    }
  }
  return matrix_report(indexed("psi b", 0, n), indexed("b", 0, n), cells, "row");
}

Report adams_power(const Config&, int j) {
  require(j >= 0, "--j must be non-negative");
  auto coeffs = psi3_power_coeffs(j);
  QSeries p(VarList{{"x", 1}}, kUnbounded);
  for (std::size_t e = 0; e < coeffs.size(); ++e) p.add_term({static_cast<int>(e)}, Rat(coeffs[e]));
  Report r = series_report(p);
  r.text = "(3x - 3x^2 + x^3)^" + std::to_string(j) + " = " + r.text;
  return r;
}

Report adams_nki(const Config& cfg, int k) {
  auto n = nki_coeffs(k, cfg.nki);
  std::vector<std::pair<std::string, std::string>> rows;
  for (std::size_t i = 0; i < n.size(); ++i) rows.emplace_back("n" + std::to_string(k) + "^" + std::to_string(i + 1), n[i].get_str());
  rows.emplace_back("gcd", binomial_gcd(k).get_str());
  return key_value_report(rows);
}

Report adams_relations(const Config&, int n, bool at_v1) {
  require(n >= 2, "--n must be at least 2");
  RelationSet rels = gen_2structure_relations(n);
  Report r;
  CsvTable t{{"monomial", "relation"}, {}};
  r.json = json::array();
  for (const auto& rel : rels.relations) {
    QSeries p = at_v1 ? specialize_v1(rel.poly) : rel.poly;
    r.text += rel.monomial_str() + ": " + p.str() + "\n";
    t.rows.push_back({rel.monomial_str(), p.str()});
    r.json.push_back({{"monomial", rel.monomial_str()}, {"relation", series_to_json(p)}});
  }
  r.csv = std::move(t);
  return r;
}

Report adams_psi(const Config& cfg, int max_k, bool mod2) {
  require(max_k >= 2, "--max-k must be at least 2");
  DReducer red(gen_2structure_relations(max_k), cfg.nki);
  PsiTable table;
  for (int k = 2; k <= max_k; ++k) table.emplace(k, psi_on_dk(k, red));
  return mod2 ? psi_table_report(psi_table_mod2(table)) : psi_table_report(table);
}

Report cannibal_sequence(const Config&, int n) {
  require(n >= 0, "--n must be non-negative");
  auto t = theta_gen(n);
  std::vector<std::pair<std::string, std::string>> rows;
  for (int k = 0; k <= n; ++k) rows.emplace_back("t" + std::to_string(k), t[static_cast<std::size_t>(k)].str());
  return key_value_report(rows);
}

Report cannibal_table(const Config& cfg) {
  ThetaTable t = theta3_direct(cfg.bound);
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : t.c) {
    std::vector<std::string> r;
    for (const auto& c : row) r.push_back(c.str());
    cells.push_back(std::move(r));
  }
  Report r = matrix_report(indexed("", 0, cfg.bound), indexed("", 0, cfg.bound), cells, "m");
  std::ostringstream os;
  t.write_csv(os);
  r.text = os.str();
  return r;
}

Report cannibal_thom(const Config& cfg, int max_k, bool mod2) {
  require(max_k >= 2, "--max-k must be at least 2");
  PsiTable table = thom_table(max_k, cfg.nki);
  return mod2 ? psi_table_report(psi_table_mod2(table)) : psi_table_report(table);
}

Report cannibal_spherical(const Config& cfg, int max_weight) {
  require(max_weight >= 4, "--max-weight must be at least 4");
  auto table = psi_table_mod2(thom_table(max_weight / 2, cfg.nki));
  auto classes = spherical_search(max_weight, table);
  Report r;
  CsvTable t{{"weight", "class"}, {}};
  r.json = json::array();
  std::map<int, int> count;
  for (const auto& c : classes) {
    ++count[c.weight];
    r.text += "z" + std::to_string(c.weight) + " = " + dpoly_str(c.z) + "\n";
    t.rows.push_back({std::to_string(c.weight), dpoly_str(c.z)});
    r.json.push_back({{"weight", c.weight}, {"class", dpoly_json(c.z)}});
  }
  for (int w = 4; w <= max_weight; w += 2) {
    if (count[w] == 0) r.text += "weight " + std::to_string(w) + ": none\n";
  }
  r.csv = std::move(t);
  return r;
}

Report cannibal_lift(const Config& cfg, const std::string& z, int target) {
  int max_k = 2;
  static const std::regex kGen("d([0-9]+)");
  for (auto it = std::sregex_iterator(z.begin(), z.end(), kGen); it != std::sregex_iterator(); ++it) {
    max_k = std::max(max_k, std::stoi((*it)[1].str()));
  }
  auto z2 = parse_series(z, d_vars(max_k), kUnbounded).map_coeffs([](const Rat& c) { return GF2::from_rat(c); });
  auto table = psi_table_2adic(thom_table(max_k, cfg.nki), cfg.precision);
  return key_value_report({{"lift", dpoly_str(bootstrap_lift(z2, table, target))}});
}

Report cannibal_virtual(const Config& cfg, int k) { return series_report(theta_k_virtual(k, cfg.bound)); }

Report mahler_expand_poly(const Config&, const std::string& poly, int n) {
  RatPoly p = parse_poly(poly);
  NumPoly m = n < 0 ? mahler_expand(p) : mahler_expand(p, n);
  Report r;
  r.text = m.str() + "\n";
  CsvTable t{{"index", "coefficient"}, {}};
  r.json = json::array();
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    t.rows.push_back({std::to_string(i), m.a[i].str()});
    r.json.push_back(m.a[i].str());
  }
  r.csv = std::move(t);
  return r;
}

Report mahler_dilate(const Config& cfg, const std::string& k, int i) {
  Padic2 kp = parse_2adic(k, cfg.precision);
  if (kp.is_exact()) {
    NumPoly m = dilate(kp.value().get_si(), i);
    Report r;
    r.text = m.str() + "\n";
    CsvTable t{{"index", "coefficient"}, {}};
    r.json = json::array();
    for (std::size_t j = 0; j < m.a.size(); ++j) {
      t.rows.push_back({std::to_string(j), m.a[j].str()});
      r.json.push_back(m.a[j].str());
    }
    r.csv = std::move(t);
    return r;
  }
  PadicNumPoly m = dilate(kp, i);
  std::vector<std::pair<std::string, std::string>> rows;
  for (std::size_t j = m.a.size(); j-- > 0;) {
    if (!m.a[j].is_zero()) rows.emplace_back("C(T," + std::to_string(j) + ")", m.a[j].str());
  }
  return key_value_report(rows, "basis", "coefficient");
}

Report mahler_matrix(const Config&, long k, int n) {
  IntMatrix m = dilation_matrix(k, n);
  return matrix_report(indexed("i", 0, n), indexed("j", 0, n), int_cells(m), "C(kT i) in C(T j)");
}

Report mahler_check(const Config&, int n, int k) {
  DilationReport d = dilation_vs_adams(n, k);
  return key_value_report({{"k", std::to_string(d.k)},
                           {"n", std::to_string(d.n)},
                           {"D = S A S with S = diag((-1)^i)", "holds"},
                           {"D = A with x = L - 1", "holds"}});
}

Report artin_schreier(const Config& cfg, const std::string& u) {
  ArtinSchreierResult a = artin_schreier_check(parse_2adic(u, cfg.precision + 4), cfg.precision);
  Report r = key_value_report({{"b", a.b.str()},
                               {"-log(u/81)/log(81)", a.shifted.str()},
                               {"verified", a.verified ? "true" : "false"}});
  r.status = a.verified ? 0 : 1;
  return r;
}

}  // namespace fglab::cli
