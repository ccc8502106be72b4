#pragma once

// The four log-series experiments with their reference values:
//
//   table1      error terms z^offset * R at z = 0.95, m = 0..12 (6 digits)
//   table2      transformation terms z^offset * Phi at z = 5, m = 0..10 (10 digits)
//   expansion7  exact z^7..z^9 error coefficients of A_3^(0), eps_6^(0), J_2^(0)
//   predict13   gamma_13..gamma_16 predicted from gamma_0..gamma_12 (10 digits)

#include <string>
#include <string_view>
#include <vector>

namespace seriaccel {

struct GoldenCheck {
  std::string label;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct ExperimentResult {
  std::string name;
  std::string report;  // deterministic text output
  std::vector<GoldenCheck> checks;

  bool matched() const;
  std::size_t mismatches() const;
};

const std::vector<std::string>& experiment_names();

/// Throws std::invalid_argument for an unknown name.
ExperimentResult run_experiment(std::string_view name);

/// Compares at `digits` significant digits after rounding both sides.
bool same_digits(std::string_view expected, std::string_view actual_exact, int digits);

}  // namespace seriaccel
