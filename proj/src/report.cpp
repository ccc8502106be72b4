#include "seriaccel/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace seriaccel {

namespace {

constexpr std::string_view kCsvHeader = "m,family,k,n,value,valid";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = line.find(sep);
    out.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

std::size_t parse_index(std::string_view s) {
  if (s.empty()) throw ParseError("empty index");
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("malformed index '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

bool parse_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError("malformed boolean '" + std::string(s) + "'");
}

}  // namespace

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.m) + ',' + r.family + ',' + std::to_string(r.k) + ',' + std::to_string(r.n) + ',' +
           r.value + ',' + (r.valid ? "true" : "false") + '\n';
  }
  return out;
}

std::string to_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["m"] = r.m;
    o["family"] = r.family;
    o["k"] = r.k;
    o["n"] = r.n;
    o["value"] = r.valid ? nlohmann::ordered_json(r.value) : nlohmann::ordered_json(nullptr);
    o["valid"] = r.valid;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::vector<ReportRow> parse_csv(std::string_view text) {
  std::vector<ReportRow> rows;
  bool header = true;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != kCsvHeader) throw ParseError("unexpected CSV header '" + std::string(line) + "'");
      header = false;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 6) throw ParseError("CSV row needs 6 fields: '" + std::string(line) + "'");
    rows.push_back({parse_index(f[0]), std::string(f[1]), parse_index(f[2]), parse_index(f[3]), std::string(f[4]),
                    parse_bool(f[5])});
  }
  return rows;
}

std::vector<ReportRow> parse_json(std::string_view text) {
  std::vector<ReportRow> rows;
  try {
    const auto arr = nlohmann::json::parse(text);
    for (const auto& o : arr) {
      ReportRow r;
      r.m = o.at("m").get<std::size_t>();
      r.family = o.at("family").get<std::string>();
      r.k = o.at("k").get<std::size_t>();
      r.n = o.at("n").get<std::size_t>();
      r.valid = o.at("valid").get<bool>();
      if (!o.at("value").is_null()) r.value = o.at("value").get<std::string>();
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON report: ") + e.what());
  }
  return rows;
}

std::string format_grid(const std::vector<ReportRow>& rows, int digits) {
  std::vector<std::string> families;
  std::map<std::size_t, std::map<std::string, std::string>> cells;
  for (const auto& r : rows) {
    if (std::find(families.begin(), families.end(), r.family) == families.end()) families.push_back(r.family);
    cells[r.m][r.family] = r.valid ? decimal_string(parse_rational(r.value), digits) : "invalid";
  }
  const int width = digits + 10;
  std::ostringstream out;
  out << std::setw(4) << "m";
  for (const auto& f : families) out << "  " << std::setw(width) << f;
  out << '\n';
  for (const auto& [m, row] : cells) {
    out << std::setw(4) << m;
    for (const auto& f : families) {
      const auto it = row.find(f);
      out << "  " << std::setw(width) << (it == row.end() ? "" : it->second);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace seriaccel
