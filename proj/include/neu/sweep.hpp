#pragma once

#include "neu/batch.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace neu {

struct PropertyResult {
  std::string module;
  std::string name;
  double step = 0.0;
  std::size_t cases = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Reported for information only; never affects the verdict.
  bool informational = false;
  std::optional<std::string> counterexample;
};

struct SweepReport {
  double step = 0.0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool all_passed() const noexcept;
};

struct SweepOptions {
  /// Grid spacing on [0,1]; must lie in (0, 0.5].
  double step = 0.01;
  std::uint64_t seed = 0;
  Execution exec = Execution::Parallel;
  /// Random connector applications for the normalization closure check.
  std::size_t closure_cases = 100000;
  /// Random sets (or set triples) for the set-algebra checks.
  std::size_t set_cases = 1000;
  std::size_t set_size = 8;
};

/// Points 0, step, 2 step, ... up to 1, always including 1.
std::vector<double> sweep_grid(double step);

/// Checks every connector, set and topology law on the grid and on seeded
/// random cases. Identical for both execution modes. Throws
/// std::invalid_argument for a step outside (0, 0.5].
SweepReport run_sweep(const SweepOptions& options);

std::string report_text(const SweepReport& report);
std::string report_json(const SweepReport& report);

}  // namespace neu
