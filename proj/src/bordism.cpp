#include "fglab/bordism.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace fglab {

namespace {

std::vector<Rat> ints(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  BordismExpr run() {
    BordismExpr out;
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty bordism expression");
    bool first = true;
    while (pos_ < s_.size()) {
      Rat sign(1);
      if (peek() == '+' || peek() == '-') {
        if (get() == '-') sign = Rat(-1);
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-' at position " + std::to_string(pos_));
      }
      out = out + term().scaled(sign);
      first = false;
      skip();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(const std::string& word) {
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  int number() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) throw ParseError("expected a number at position " + std::to_string(pos_));
    return std::stoi(d);
  }

  BordismExpr term() {
    Rat c(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = std::to_string(number());
      std::string den = "1";
      if (peek() == '/') {
        get();
        den = std::to_string(number());
      }
      c = Rat::parse(num + "/" + den);
      skip();
      if (peek() == '*') get();
      skip();
    }
    if (accept("K3SQ")) return BordismExpr::from_dim4_vector(k3sq_vector()).scaled(c);
    if (peek() == 'N') {
      get();
      return BordismExpr::from_dim4_vector(n_vector()).scaled(c);
    }
    BordismExpr::Product p;
    while (true) {
      if (!accept("CP")) throw ParseError("expected CP<n>, K3SQ or N at position " + std::to_string(pos_));
      int n = number();
      int k = 1;
      if (peek() == '^') {
        get();
        k = number();
      }
      if (n < 1) throw ParseError("CP0 is not a generator");
      for (int i = 0; i < k; ++i) p.push_back(n);
      if (peek() == 'x') {
        get();
        continue;
      }
      break;
    }
    BordismExpr e;
    e.add(p, c);
    return e;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

const std::vector<BordismExpr::Product>& dim4_basis() {
  static const std::vector<BordismExpr::Product> basis{{4}, {1, 3}, {2, 2}, {1, 1, 1, 1}, {1, 1, 2}};
  return basis;
}

std::vector<Rat> k3sq_vector() { return ints({0, 0, 256, 324, -576}); }
std::vector<Rat> n_vector() { return ints({8, -25, -12, -23, 52}); }

BordismExpr BordismExpr::parse(const std::string& text) { return ExprParser(text).run(); }

BordismExpr BordismExpr::from_dim4_vector(const std::vector<Rat>& abcde) {
  if (abcde.size() != 5) throw DimensionMismatch("dimension-4 vectors have five entries");
  BordismExpr e;
  for (std::size_t i = 0; i < 5; ++i) e.add(dim4_basis()[i], abcde[i]);
  return e;
}

void BordismExpr::add(const Product& p, const Rat& c) {
  Product key = p;
  std::sort(key.begin(), key.end());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int BordismExpr::dimension() const {
  int dim = -1;
  for (const auto& [p, c] : terms_) {
    int d = std::accumulate(p.begin(), p.end(), 0);
    if (dim >= 0 && d != dim) throw DimensionMismatch("summands of different complex dimension");
    dim = d;
  }
  return std::max(dim, 0);
}

BordismExpr BordismExpr::operator+(const BordismExpr& o) const {
  BordismExpr out = *this;
  for (const auto& [p, c] : o.terms_) out.add(p, c);
  return out;
}

BordismExpr BordismExpr::scaled(const Rat& c) const {
  BordismExpr out;
  for (const auto& [p, x] : terms_) out.add(p, x * c);
  return out;
}

std::string BordismExpr::str() const {
  if (terms_.empty()) return "0";
  // Fewer factors first, so "CP4" precedes "CP1xCP3".
  std::vector<std::pair<Product, Rat>> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  std::string out;
  bool first = true;
  for (const auto& [p, c] : order) {
    std::string prod;
    for (std::size_t i = 0; i < p.size();) {
      std::size_t j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      if (!prod.empty()) prod += "x";
      prod += "CP" + std::to_string(p[i]);
      if (j - i > 1) prod += "^" + std::to_string(j - i);
      i = j;
    }
    Rat a = c.sign() < 0 ? -c : c;
    std::string body = (a == Rat(1) ? "" : a.str() + "*") + prod;
    if (first) {
      out = c.sign() < 0 ? "-" + body : body;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

QSeries miscenko_image(const BordismExpr& expr, const FGL& f, CpnMode mode) {
  int dim = expr.dimension();
  VarList avars = a_vars(std::max(dim, 1));
  QSeries poly(avars, kUnbounded);
  for (const auto& [p, c] : expr.terms()) {
    QSeries prod = poly.one_like();
    for (int n : p) prod = prod * retarget(cpn_in_a(n, mode), avars, kUnbounded);
    poly += prod.scaled(c);
  }
  VarList sym = f.symbol_vars();
  std::map<std::string, QSeries> images;
  for (int s = 2; s <= dim + 1; ++s) {
    for (int i = 1; 2 * i <= s; ++i) {
      if (s > f.bound()) throw BoundMismatch("law is truncated below the needed coefficients");
      images.emplace(a_name(i, s - i), f.a(i, s - i));
    }
  }
  return substitute(poly, images, sym, kUnbounded);
}

}  // namespace fglab
