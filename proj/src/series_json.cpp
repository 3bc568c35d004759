#include "fglab/series_json.hpp"

namespace fglab {

using nlohmann::ordered_json;

ordered_json series_to_json(const QSeries& s) {
  ordered_json j;
  j["vars"] = ordered_json::array();
  for (const auto& v : s.vars()) j["vars"].push_back({{"name", v.name}, {"weight", v.weight}});
  j["bound"] = s.bounded() ? ordered_json(s.bound()) : ordered_json(nullptr);
  j["terms"] = ordered_json::array();
  for (const auto& [e, c] : s.terms()) {
    j["terms"].push_back({{"exp", e}, {"num", c.num().get_str()}, {"den", c.den().get_str()}});
  }
  return j;
}

QSeries series_from_json(const ordered_json& j) {
  try {
    VarList vars;
    for (const auto& v : j.at("vars")) vars.push_back({v.at("name").get<std::string>(), v.at("weight").get<int>()});
    const auto& b = j.at("bound");
    int bound = b.is_null() ? kUnbounded : b.get<int>();
    QSeries s(vars, bound);
    for (const auto& t : j.at("terms")) {
      Exp e = t.at("exp").get<Exp>();
      if (e.size() != vars.size()) throw ParseError("exponent length does not match variables");
      for (int x : e) {
        if (x < 0) throw ParseError("negative exponent");
      }
      Rat c = Rat::parse(t.at("num").get<std::string>() + "/" + t.at("den").get<std::string>());
      if (!s.in_bound(e)) throw ParseError("term beyond the declared bound");
      s.add_term(e, c);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed series JSON: ") + e.what());
  }
}

std::string series_to_json_string(const QSeries& s) { return series_to_json(s).dump(); }

QSeries series_from_json_string(const std::string& text) {
  try {
    return series_from_json(ordered_json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace fglab
