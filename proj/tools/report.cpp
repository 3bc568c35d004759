#include "report.hpp"

namespace fglab::cli {

Format parse_format(const std::string& text) {
  if (text == "text") return Format::kText;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw UsageError("unknown format '" + text + "' (expected text, csv or json)");
}

Report key_value_report(const std::vector<std::pair<std::string, std::string>>& rows, const std::string& key_header,
                        const std::string& value_header) {
  Report r;
  CsvTable t{{key_header, value_header}, {}};
  r.json = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rows) {
    r.text += k + " = " + v + "\n";
    t.rows.push_back({k, v});
    r.json[k] = v;
  }
  r.csv = std::move(t);
  return r;
}

Report matrix_report(const std::vector<std::string>& row_names, const std::vector<std::string>& col_names,
                     const std::vector<std::vector<std::string>>& cells, const std::string& corner) {
  Report r;
  CsvTable t;
  if (!row_names.empty()) t.header.push_back(corner);
  t.header.insert(t.header.end(), col_names.begin(), col_names.end());
  r.json = nlohmann::ordered_json::object();
  r.json["columns"] = col_names;
  r.json["rows"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::vector<std::string> row;
    if (!row_names.empty()) row.push_back(row_names[i]);
    row.insert(row.end(), cells[i].begin(), cells[i].end());
    t.rows.push_back(row);
    nlohmann::ordered_json jr;
    if (!row_names.empty()) jr["name"] = row_names[i];
    jr["values"] = cells[i];
    r.json["rows"].push_back(std::move(jr));
  }
  r.csv = t;
  auto line = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "\n";
  };
  r.text = line(t.header);
  for (const auto& row : t.rows) r.text += line(row);
  return r;
}

void write_report(std::ostream& os, const Report& r, Format format) {
  switch (format) {
    case Format::kText:
      os << r.text;
      break;
    case Format::kJson:
      os << r.json.dump(2) << '\n';
      break;
    case Format::kCsv: {
      if (!r.csv) throw UsageError("this subcommand has no CSV output");
      auto line = [&](const std::vector<std::string>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << '\n';
      };
      line(r.csv->header);
      for (const auto& row : r.csv->rows) line(row);
      break;
    }
  }
}

}  // namespace fglab::cli
