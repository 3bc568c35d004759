#include "golden.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "fglab/bordism.hpp"
#include "fglab/cannibal.hpp"
#include "fglab/chern.hpp"
#include "fglab/error.hpp"
#include "fglab/padic_mahler.hpp"
#include "fglab/series_parse.hpp"

namespace fglab::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string normalize_ws(const std::string& s) {
  std::string out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out += (out.empty() ? "" : " ") + tok;
  return out;
}

// Variables are whatever identifiers occur in either cell.
VarList infer_vars(const std::string& a, const std::string& b) {
  static const std::regex kIdent("[A-Za-z][A-Za-z0-9_]*");
  std::set<std::string> names;
  for (const std::string* s : {&a, &b}) {
    for (auto it = std::sregex_iterator(s->begin(), s->end(), kIdent); it != std::sregex_iterator(); ++it) {
      names.insert(it->str());
    }
  }
  VarList vars;
  for (const auto& n : names) vars.push_back({n, 1});
  return vars;
}

std::vector<std::vector<Rat>> parse_rows(const std::string& s) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : split(s, ';')) {
    std::istringstream is(r);
    std::vector<Rat> row;
    std::string tok;
    while (is >> tok) row.push_back(Rat::parse(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix to_int_matrix(const std::vector<std::vector<Rat>>& rows) {
  std::vector<std::vector<Int>> ints;
  for (const auto& r : rows) {
    std::vector<Int> row;
    for (const auto& c : r) {
      if (!c.is_integer()) throw ParseError("non-integer matrix entry " + c.str());
      row.push_back(c.num());
    }
    ints.push_back(std::move(row));
  }
  return IntMatrix::from_rows(ints);
}

std::string matrix_cell(const IntMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m.at(i, j).get_str();
  }
  return s;
}

std::string vectors_cell(const std::vector<RatVector>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < vs[i].size(); ++j) s += (j ? " " : "") + vs[i][j].str();
  }
  return s;
}

// Lazily built shared inputs for the table computations.
struct Inputs {
  const Config& cfg;
  std::optional<FGL> twisted;
  std::optional<DReducer> reducer;
  std::optional<PsiTable> thom;
  std::optional<PsiTableOver<GF2>> thom_mod2;
  std::optional<ThetaTable> theta;

  static constexpr int kRelDegree = 10;

  const FGL& law() {
    if (!twisted) {
      QSeries ctx(law_vars(vb_symbols(4)), 5);
      twisted = fgl_twist(FGL(multiplicative_law(ctx.vars(), 5)), generic_strict_series(ctx, 4));
    }
    return *twisted;
  }
  DReducer& red() {
    if (!reducer) reducer.emplace(gen_2structure_relations(kRelDegree), cfg.nki);
    return *reducer;
  }
  const ThetaTable& c() {
    if (!theta) theta = theta3_direct(std::max(cfg.bound, kRelDegree));
    return *theta;
  }
  const PsiTable& thom_table() {
    if (!thom) {
      ThetaTable t = theta3_direct(kRelDegree);
      thom = thom_psi_table(kRelDegree, t, red());
    }
    return *thom;
  }
  const PsiTableOver<GF2>& thom_table_mod2() {
    if (!thom_mod2) thom_mod2 = psi_table_mod2(thom_table());
    return *thom_mod2;
  }
};

int index_after(const std::string& key, std::size_t pos) { return std::stoi(key.substr(pos)); }

std::string sum_cell(const std::vector<std::pair<Rat, std::string>>& terms) {
  std::string s;
  for (const auto& [c, name] : terms) {
    if (c == Rat(0)) continue;
    bool neg = c < Rat(0);
    Rat a = neg ? -c : c;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (a != Rat(1) || name.empty()) s += a.str() + (name.empty() ? "" : " ");
    s += name;
  }
  return s.empty() ? "0" : s;
}

using Compute = std::function<std::string(Inputs&, const std::string& key)>;

std::string compute_inverse(Inputs&, const std::string& key) {
  int k = index_after(key, 1);
  VarList vars;
  for (int i = 1; i <= k; ++i) vars.push_back({"b" + std::to_string(i), 0});
  vars.push_back({"x", 1});
  QSeries ctx(vars, k + 1);
  QSeries g = ctx.var("x");
  for (int i = 1; i <= k; ++i) g += ctx.var("b" + std::to_string(i)) * ctx.var("x").pow(static_cast<unsigned>(i + 1));
  return residue_inverse_coeff(g, "x", k).str();
}

std::string compute_twisted(Inputs& in, const std::string& key) {
  auto ij = parse_a_name(key);
  if (!ij) throw ParseError("not a coefficient name: " + key);
  return in.law().a(ij->first, ij->second).str();
}

std::string compute_chern_system(Inputs&, const std::string& key) {
  ConstraintSystem sys = su_constraint_system(default_basis(4), 4);
  if (key == "system") return matrix_cell(sys.matrix);
  if (key == "reduced") return matrix_cell(integer_reduce(sys.matrix));
  if (key == "nullspace") return vectors_cell(nullspace_rational(sys.matrix));
  if (key == "columns") {
    std::string s;
    for (const auto& n : sys.col_names) s += (s.empty() ? "" : " ") + n;
    return s;
  }
  throw ParseError("unknown key " + key);
}

std::string compute_miscenko(Inputs& in, const std::string& key) {
  return miscenko_image(BordismExpr::parse(key), in.law(), in.cfg.mode).str();
}

std::string compute_todd(Inputs&, const std::string& key) {
  if (key == "law") {
    QSeries ctx(law_vars({}), 6);
    return fgl_check(fgl_from_genus(todd_series(ctx)).law()).law().str();
  }
  if (key == "T4 CP4") {
    ProjProduct p({4});
    std::vector<Rat> c;
    for (const auto& m : std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 3}, {1, 1, 2}, {2, 2}, {4}}) {
      c.emplace_back(chern_number(p, m));
    }
    return todd_t4(c[0], c[1], c[2], c[3], c[4]).str();
  }
  if (key == "T4 coefficient of c2^2") return todd_t4(0, 0, 0, 1, 0).str();
  throw ParseError("unknown key " + key);
}

std::string compute_beta(Inputs&, const std::string& key) { return psi_inv_beta(3, index_after(key, 4)).str(); }

std::string compute_power(Inputs&, const std::string& key) {
  auto coeffs = psi3_power_coeffs(index_after(key, 1));
  std::vector<std::pair<Rat, std::string>> terms;
  for (std::size_t e = coeffs.size(); e-- > 0;) {
    terms.emplace_back(Rat(coeffs[e]), e == 0 ? "" : e == 1 ? "x" : "x^" + std::to_string(e));
  }
  return sum_cell(terms);
}

std::string compute_beta_mod2(Inputs&, const std::string& key) {
  int i = index_after(key, 4);
  IntMatrix m = psi_inv_matrix(3, i);
  std::string s;
  for (int j = 0; j <= i; ++j) {
    if (GF2::from_int(m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) == GF2(1)) {
      s += (s.empty() ? "" : " ") + std::to_string(j);
    }
  }
  return s;
}

std::string compute_nki(Inputs& in, const std::string& key) {
  std::string s;
  for (const auto& n : nki_coeffs(index_after(key, 1), in.cfg.nki)) s += (s.empty() ? "" : " ") + n.get_str();
  return s;
}

std::string compute_relation(Inputs&, const std::string& key) {
  std::array<int, 3> e{0, 0, 0};
  static const std::regex kFactor("([xyz])(\\^([0-9]+))?");
  for (auto it = std::sregex_iterator(key.begin(), key.end(), kFactor); it != std::sregex_iterator(); ++it) {
    int var = (*it)[1].str()[0] - 'x';
    e[static_cast<std::size_t>(var)] += (*it)[3].matched ? std::stoi((*it)[3].str()) : 1;
  }
  RelationSet rels = gen_2structure_relations(e[0] + e[1] + e[2]);
  const Relation* r = rels.at(e[0], e[1], e[2]);
  if (!r) throw ParseError("no relation at " + key);
  return specialize_v1(r->poly).str();
}

std::string compute_psi_base(Inputs& in, const std::string& key) {
  if (key == "psi(d7) - 2187 d7") {
    VarList av = apoly_vars(8);
    QSeries d7 = d_as_apoly(av, 7, in.cfg.nki);
    return (psi_on_linear_apoly(d7, 3) - d7.scaled(Rat(2187))).str();
  }
  return dpoly_str(psi_on_dk(index_after(key, 1), in.red()));
}

std::string compute_theta(Inputs& in, const std::string& key) {
  static const std::regex kIdx("c\\(([0-9]+) ([0-9]+)\\)");
  std::smatch m;
  if (!std::regex_match(key, m, kIdx)) throw ParseError("not a coefficient name: " + key);
  return in.c().at(std::stoi(m[1].str()), std::stoi(m[2].str())).str();
}

std::string compute_thom(Inputs& in, const std::string& key) {
  return dpoly_str(in.thom_table().at(index_after(key, 1)));
}

std::string compute_thom_mod2(Inputs& in, const std::string& key) {
  return dpoly_str(in.thom_table_mod2().at(index_after(key, 1)));
}

std::string compute_spherical(Inputs& in, const std::string& key) {
  const auto& table = in.thom_table_mod2();
  if (key.rfind("weight ", 0) == 0) {
    int w = index_after(key, 7);
    std::string s;
    for (const auto& c : spherical_search(w, table)) {
      if (c.weight == w) s += (s.empty() ? "" : "; ") + dpoly_str(c.z);
    }
    return s.empty() ? "none" : s;
  }
  auto z = parse_series(key, d_vars(Inputs::kRelDegree), kUnbounded).map_coeffs([](const Rat& c) {
    return GF2::from_rat(c);
  });
  return is_spherical(z, table) ? "fixed" : "not fixed";
}

std::string compute_dilation(Inputs&, const std::string& key) {
  NumPoly p = dilate(3, index_after(key, 1));
  std::vector<std::pair<Rat, std::string>> terms;
  for (std::size_t j = p.a.size(); j-- > 0;) terms.emplace_back(p.a[j], j == 0 ? "" : "C" + std::to_string(j));
  return sum_cell(terms);
}

const std::map<std::string, Compute>& computations() {
  static const std::map<std::string, Compute> kTables = {
      {"inverse-series.csv", compute_inverse},   {"twisted-law.csv", compute_twisted},
      {"chern-system.csv", compute_chern_system}, {"miscenko.csv", compute_miscenko},
      {"todd.csv", compute_todd},                 {"adams-beta.csv", compute_beta},
      {"psi3-powers.csv", compute_power},         {"adams-beta-mod2.csv", compute_beta_mod2},
      {"nki.csv", compute_nki},                   {"relations.csv", compute_relation},
      {"psi-base.csv", compute_psi_base},         {"theta-coefficients.csv", compute_theta},
      {"thom-psi.csv", compute_thom},             {"thom-psi-mod2.csv", compute_thom_mod2},
      {"spherical.csv", compute_spherical},       {"dilation.csv", compute_dilation},
  };
  return kTables;
}

}  // namespace

std::string status_name(GoldenStatus s) {
  switch (s) {
    case GoldenStatus::kMatch: return "MATCH";
    case GoldenStatus::kScaled: return "SCALED";
    case GoldenStatus::kErratum: return "ERRATUM";
    case GoldenStatus::kDiff: return "DIFF";
  }
  return "?";
}

bool cells_equal(const std::string& kind, const std::string& a, const std::string& b) {
  if (kind == "text") return normalize_ws(a) == normalize_ws(b);
  if (kind == "rat") return Rat::parse(normalize_ws(a)) == Rat::parse(normalize_ws(b));
  if (kind == "poly") {
    VarList vars = infer_vars(a, b);
    return parse_series(a, vars, kUnbounded) == parse_series(b, vars, kUnbounded);
  }
  if (kind == "matrix") return parse_rows(a) == parse_rows(b);
  if (kind == "rowspace") return same_row_space(to_int_matrix(parse_rows(a)), to_int_matrix(parse_rows(b)));
  if (kind == "span") {
    auto ra = parse_rows(a), rb = parse_rows(b);
    auto both = ra;
    both.insert(both.end(), rb.begin(), rb.end());
    std::size_t r = rational_rank(both);
    return rational_rank(ra) == r && rational_rank(rb) == r;
  }
  throw ParseError("unknown golden kind '" + kind + "'");
}

bool cells_proportional(const std::string& kind, const std::string& a, const std::string& b) {
  if (kind != "poly") return cells_equal(kind, a, b);
  VarList vars = infer_vars(a, b);
  QSeries pa = parse_series(a, vars, kUnbounded), pb = parse_series(b, vars, kUnbounded);
  if (pa.is_zero() || pb.is_zero()) return pa == pb;
  const auto& [e, c] = *pa.terms().begin();
  Rat ratio = pb.coeff(e) / c;
  return ratio != Rat(0) && pa.scaled(ratio) == pb;
}

GoldenStatus classify(const GoldenRow& row, const std::string& computed) {
  if (!cells_equal(row.kind, computed, row.reproduced)) return GoldenStatus::kDiff;
  if (normalize_ws(row.published) == "-" || cells_equal(row.kind, row.published, row.reproduced)) {
    return GoldenStatus::kMatch;
  }
  if (cells_proportional(row.kind, row.published, row.reproduced)) return GoldenStatus::kScaled;
  return GoldenStatus::kErratum;
}

std::vector<GoldenRow> read_golden_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open " + path);
  std::vector<GoldenRow> rows;
  std::string line;
  bool header = true;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto f = split(line, ',');
    if (f.size() != 5) throw ParseError(path + ":" + std::to_string(lineno) + ": expected 5 fields");
    rows.push_back({f[0], f[1], f[2], f[3], f[4]});
  }
  return rows;
}

void write_golden_csv(const std::string& path, const std::vector<GoldenRow>& rows) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot write " + path);
  os << "key,kind,published,reproduced,note\n";
  for (const auto& r : rows) {
    os << r.key << ',' << r.kind << ',' << r.published << ',' << r.reproduced << ',' << r.note << '\n';
  }
}

Report reproduce_tables(const Config& cfg, const std::string& dir, bool update) {
  std::ifstream index(dir + "/index.csv");
  if (!index) throw UsageError("no index.csv in " + dir);
  Inputs in{cfg, {}, {}, {}, {}, {}};
  Report r;
  CsvTable t{{"file", "key", "status"}, {}};
  r.json = nlohmann::ordered_json::array();
  std::map<GoldenStatus, int> counts;
  std::string line;
  std::getline(index, line);
  while (std::getline(index, line)) {
    if (line.empty()) continue;
    auto f = split(line, ',');
    const std::string& file = f.at(0);
    auto it = computations().find(file);
    if (it == computations().end()) throw ParseError("no computation registered for " + file);
    std::string path = dir + "/" + file;
    auto rows = read_golden_csv(path);
    for (auto& row : rows) {
      std::string computed = it->second(in, row.key);
      if (update) row.reproduced = computed;
      GoldenStatus s = classify(row, computed);
      ++counts[s];
      r.text += file + " " + row.key + ": " + status_name(s);
      if (s == GoldenStatus::kDiff) r.text += " (computed " + computed + ")";
      if (s == GoldenStatus::kErratum || s == GoldenStatus::kScaled) {
        r.text += " (printed " + row.published + "; reproduced " + row.reproduced + ")";
      }
      r.text += "\n";
      t.rows.push_back({file, row.key, status_name(s)});
      r.json.push_back({{"file", file},
                        {"key", row.key},
                        {"status", status_name(s)},
                        {"published", row.published},
                        {"reproduced", row.reproduced},
                        {"computed", computed}});
    }
    if (update) write_golden_csv(path, rows);
  }
  if (counts[GoldenStatus::kDiff] == 0) {
    r.text += "all tables match (" + std::to_string(counts[GoldenStatus::kErratum]) + " errata, " +
              std::to_string(counts[GoldenStatus::kScaled]) + " scaled)\n";
  } else {
    r.text += std::to_string(counts[GoldenStatus::kDiff]) + " differences\n";
    r.status = 3;
  }
  r.csv = std::move(t);
  return r;
}

}  // namespace fglab::cli
