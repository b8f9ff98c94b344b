#pragma once

#include "neu/triple.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace neu {

struct OrientationRow {
  std::string name;
  double stable = 0.0;    // s, percent
  double unstable = 0.0;  // u = 100 - s

  friend bool operator==(const OrientationRow&, const OrientationRow&) = default;
};

/// Stability scale: rows strictly decreasing in s, unique names, s + u = 100.
class OrientationTable {
public:
  /// Throws Error(InvariantViolation).
  explicit OrientationTable(std::vector<OrientationRow> rows);

  const std::vector<OrientationRow>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const OrientationRow& operator[](std::size_t k) const { return rows_[k]; }

  friend bool operator==(const OrientationTable&, const OrientationTable&) = default;

private:
  std::vector<OrientationRow> rows_;
};

/// M1..M7 with s = 100, 95, 65, 50, 35, 5, 0.
const OrientationTable& builtin_table();

/// A system that is s% stable, i% indeterminate and u% unstable.
class SystemAssessment {
public:
  /// Throws Error(OutOfRange) / Error(NotNormalized).
  SystemAssessment(double stable, double indeterminate, double unstable);

  double stable() const noexcept { return s_; }
  double indeterminate() const noexcept { return i_; }
  double unstable() const noexcept { return u_; }

private:
  double s_, i_, u_;
};

struct Classification {
  std::string model;
  std::size_t row = 0;
  double distance = 0.0;
  /// [s, s + i] in percent.
  Interval stability;
};

/// Nearest row by |s - row.s|; ties go to the more stable row.
Classification classify(const SystemAssessment& sys, const OrientationTable& table);

/// Format: {"rows": [{"name": "M1", "s": 100}, ...]}; "u" is optional and
/// checked against 100 - s when present. Throws Error(ParseError) or
/// Error(InvariantViolation).
OrientationTable load_table(const std::string& path);
OrientationTable parse_table(const std::string& json_text);
std::string table_to_json(const OrientationTable& table);

}  // namespace neu
