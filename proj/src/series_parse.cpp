#include "fglab/series_parse.hpp"

#include <cctype>

namespace fglab {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const QSeries& ctx) : s_(text), ctx_(ctx) {}

  QSeries run() {
    QSeries out = ctx_.zero_like();
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-' at position " + std::to_string(pos_));
      }
      out += term().scaled(Rat(sign));
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

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }

  QSeries term() {
    Rat c(1);
    Exp e(ctx_.nvars(), 0);
    bool any = false;
    while (true) {
      skip();
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num = digits();
        std::string den = "1";
        if (peek() == '/') {
          get();
          den = digits();
          if (den.empty()) throw ParseError("missing denominator at position " + std::to_string(pos_));
        }
        c *= Rat::parse(num + "/" + den);
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += get();
        int k = 1;
        if (peek() == '^') {
          get();
          std::string d = digits();
          if (d.empty()) throw ParseError("missing exponent after " + name);
          k = std::stoi(d);
        }
        e[static_cast<std::size_t>(ctx_.index_of(name))] += k;
      } else {
        break;
      }
      any = true;
      skip();
      if (peek() == '*') {
        get();
        continue;
      }
      char nx = peek();
      if (!(std::isalnum(static_cast<unsigned char>(nx)) || nx == '_')) break;
    }
    if (!any) throw ParseError("expected a term at position " + std::to_string(pos_));
    return ctx_.monomial(e, c);
  }

  const std::string& s_;
  const QSeries& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

QSeries parse_series(const std::string& text, const VarList& vars, int bound) {
  QSeries ctx(vars, bound);
  return Parser(text, ctx).run();
}

}  // namespace fglab
