#pragma once
// Command reports and their text / markdown / csv / json renderings.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace ambi {

struct ReportResult {
  std::string name;
  std::string status;  // pass, fail, note, skip
  std::string detail;
  std::string ref;
};

struct ReportTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool transpose_md = false;  // markdown: one table row per column
};

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<ReportResult> results;
  std::vector<ReportTable> tables;
  std::vector<std::string> lines;  // free-form output
  double seconds = -1;            // emitted only when >= 0

  bool ok() const {
    for (const auto& r : results)
      if (r.status == "fail") return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = {}, std::string ref = {}) {
    results.push_back({std::move(name), pass ? "pass" : "fail", std::move(detail), std::move(ref)});
  }
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

inline void md_table(std::ostream& os, const std::vector<std::string>& head,
                     const std::vector<std::vector<std::string>>& rows) {
  os << "|";
  for (const auto& h : head) os << " " << md_cell(h) << " |";
  os << "\n|";
  for (std::size_t i = 0; i < head.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) {
    os << "|";
    for (const auto& c : r) os << " " << md_cell(c) << " |";
    os << "\n";
  }
}

}  // namespace detail

inline std::string render_json(const Report& r) {
  nlohmann::json j;
  j["schema"] = "ambi-report/1";
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["ok"] = r.ok();
  j["results"] = nlohmann::json::array();
  for (const auto& x : r.results)
    j["results"].push_back({{"name", x.name}, {"status", x.status}, {"detail", x.detail}, {"ref", x.ref}});
  j["tables"] = nlohmann::json::array();
  for (const auto& t : r.tables) j["tables"].push_back({{"columns", t.columns}, {"rows", t.rows}});
  j["lines"] = r.lines;
  if (r.seconds >= 0) j["seconds"] = r.seconds;
  return j.dump(1) + "\n";
}

inline std::string render_csv(const Report& r) {
  std::ostringstream os;
  for (const auto& t : r.tables) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << detail::csv_field(t.columns[i]);
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_field(row[i]);
      os << "\n";
    }
  }
  if (!r.results.empty()) {
    os << "name,status,detail,ref\n";
    for (const auto& x : r.results)
      os << detail::csv_field(x.name) << "," << x.status << "," << detail::csv_field(x.detail) << ","
         << detail::csv_field(x.ref) << "\n";
  }
  return os.str();
}

inline std::string render_md(const Report& r) {
  std::ostringstream os;
  os << "### " << r.command << "\n\n";
  for (const auto& t : r.tables) {
    if (t.transpose_md) {
      std::vector<std::string> head{""};
      for (std::size_t k = 0; k < t.rows.size(); ++k) head.push_back(std::to_string(k + 1));
      std::vector<std::vector<std::string>> body;
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        std::vector<std::string> line{t.columns[c]};
        for (const auto& row : t.rows) line.push_back(row[c]);
        body.push_back(line);
      }
      detail::md_table(os, head, body);
    } else {
      detail::md_table(os, t.columns, t.rows);
    }
    os << "\n";
  }
  for (const auto& l : r.lines) os << "    " << l << "\n";
  if (!r.lines.empty()) os << "\n";
  if (!r.results.empty()) {
    std::vector<std::vector<std::string>> body;
    for (const auto& x : r.results) body.push_back({x.name, x.status, x.detail, x.ref});
    detail::md_table(os, {"check", "status", "detail", "ref"}, body);
  }
  return os.str();
}

inline std::string render_text(const Report& r) {
  std::ostringstream os;
  for (const auto& t : r.tables) {
    std::vector<std::size_t> w(t.columns.size(), 0);
    for (std::size_t i = 0; i < t.columns.size(); ++i) w[i] = t.columns[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os << cells[i];
        if (i + 1 < cells.size()) os << std::string(w[i] - cells[i].size() + 2, ' ');
      }
      os << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
    os << "\n";
  }
  for (const auto& l : r.lines) os << l << "\n";
  for (const auto& x : r.results) {
    os << "[" << x.status << "] " << x.name;
    if (!x.detail.empty()) os << ": " << x.detail;
    os << "\n";
  }
  if (!r.results.empty()) os << (r.ok() ? "OK" : "FAILED") << "\n";
  if (r.seconds >= 0) os << "time " << r.seconds << " s\n";
  return os.str();
}

inline std::string render(const Report& r, const std::string& format) {
  if (format == "json") return render_json(r);
  if (format == "csv") return render_csv(r);
  if (format == "md") return render_md(r);
  return render_text(r);
}

}  // namespace ambi
