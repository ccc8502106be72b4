#pragma once

// Table rows for CSV / JSON output and their parsers.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "seriaccel/family.hpp"
#include "seriaccel/numeric.hpp"
#include "seriaccel/remainder.hpp"

namespace seriaccel {

/// One cell; `value` is the exact rendering of the scalar (a fraction in
/// rational mode, a round-trippable decimal otherwise) and is empty when
/// the entry broke down.
struct ReportRow {
  std::size_t m = 0;
  std::string family;
  std::size_t k = 0;
  std::size_t n = 0;
  std::string value;
  bool valid = true;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

template <Field T>
std::vector<ReportRow> report_rows(const std::vector<TermCell<T>>& cells) {
  std::vector<ReportRow> rows;
  rows.reserve(cells.size());
  for (const auto& c : cells) {
    rows.push_back({c.m, std::string(to_string(c.family)), c.k, c.n,
                    c.value ? to_exact_string(*c.value) : std::string(), c.value.has_value()});
  }
  return rows;
}

std::string to_csv(const std::vector<ReportRow>& rows);
std::string to_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> parse_csv(std::string_view text);
std::vector<ReportRow> parse_json(std::string_view text);

/// Fixed-width grid: one line per m, one column per family, values shown
/// with `digits` significant digits ("invalid" for breakdowns).
std::string format_grid(const std::vector<ReportRow>& rows, int digits);

}  // namespace seriaccel
