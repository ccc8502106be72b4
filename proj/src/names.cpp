#include <stdexcept>
#include <string>

#include "seriaccel/family.hpp"
#include "seriaccel/transforms.hpp"

namespace seriaccel {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::aitken: return "aitken";
    case Family::epsilon: return "epsilon";
    case Family::theta: return "theta";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "aitken") return Family::aitken;
  if (text == "epsilon") return Family::epsilon;
  if (text == "theta" || text == "theta-iterated") return Family::theta;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (aitken, epsilon, theta)");
}

namespace {

constexpr std::pair<TableKind, std::string_view> kTableNames[] = {
    {TableKind::aitken_classic, "aitken-classic"},
    {TableKind::aitken_rearranged, "aitken-rearranged"},
    {TableKind::epsilon, "epsilon"},
    {TableKind::epsilon_cross, "epsilon-cross"},
    {TableKind::epsilon_cross_rearranged, "epsilon-cross-rearranged"},
    {TableKind::theta, "theta"},
    {TableKind::theta_modified, "theta-modified"},
    {TableKind::theta_iterated_classic, "theta-iterated-classic"},
    {TableKind::theta_iterated_rearranged, "theta-iterated-rearranged"},
};

}  // namespace

std::string_view to_string(TableKind kind) {
  for (const auto& [k, name] : kTableNames) {
    if (k == kind) return name;
  }
  return "?";
}

TableKind parse_table_kind(std::string_view text) {
  if (text == "aitken") return TableKind::aitken_rearranged;
  if (text == "theta-iterated") return TableKind::theta_iterated_rearranged;
  for (const auto& [k, name] : kTableNames) {
    if (name == text) return k;
  }
  std::string known;
  for (const auto& [k, name] : kTableNames) known += (known.empty() ? "" : ", ") + std::string(name);
  throw std::invalid_argument("unknown table '" + std::string(text) + "' (" + known + ")");
}

std::string_view to_string(ConvergenceKind kind) {
  switch (kind) {
    case ConvergenceKind::linear: return "linear";
    case ConvergenceKind::logarithmic: return "logarithmic";
    case ConvergenceKind::divergent: return "divergent";
    case ConvergenceKind::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace seriaccel
