#include "neu/orientation.hpp"

#include "json_util.hpp"
#include "neu/error.hpp"

#include <cmath>
#include <set>

namespace neu {

namespace {

constexpr double kPercentTolerance = 100.0 * kEpsNorm;

}  // namespace

OrientationTable::OrientationTable(std::vector<OrientationRow> rows) : rows_(std::move(rows))
{
  if (rows_.empty()) throw Error(ErrorKind::InvariantViolation, "orientation table has no rows");
  std::set<std::string> names;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto& row = rows_[k];
    if (!names.insert(row.name).second) {
      throw Error(ErrorKind::InvariantViolation, "duplicate model name '" + row.name + "'");
    }
    if (!(row.stable >= 0.0 && row.stable <= 100.0)) {
      throw Error(ErrorKind::InvariantViolation, "model '" + row.name + "' has s outside [0,100]");
    }
    if (std::abs(row.stable + row.unstable - 100.0) > kPercentTolerance) {
      throw Error(ErrorKind::InvariantViolation, "model '" + row.name + "' has s + u != 100");
    }
    if (k > 0 && !(row.stable < rows_[k - 1].stable)) {
      throw Error(ErrorKind::InvariantViolation, "rows must be strictly decreasing in s");
    }
  }
}

const OrientationTable& builtin_table()
{
  static const OrientationTable table({
      {"M1", 100.0, 0.0},
      {"M2", 95.0, 5.0},
      {"M3", 65.0, 35.0},
      {"M4", 50.0, 50.0},
      {"M5", 35.0, 65.0},
      {"M6", 5.0, 95.0},
      {"M7", 0.0, 100.0},
  });
  return table;
}

SystemAssessment::SystemAssessment(double stable, double indeterminate, double unstable)
  : s_(stable), i_(indeterminate), u_(unstable)
{
  (void)from_percent(s_, i_, u_);
}

Classification classify(const SystemAssessment& sys, const OrientationTable& table)
{
  Classification best;
  best.distance = INFINITY;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const double d = std::abs(sys.stable() - table[k].stable);
    // Strict comparison keeps the earlier, more stable row on ties.
    if (d < best.distance) {
      best.distance = d;
      best.row = k;
      best.model = table[k].name;
    }
  }
  best.stability = {sys.stable(), sys.stable() + sys.indeterminate()};
  return best;
}

OrientationTable parse_table(const std::string& json_text)
{
  using detail::json;
  const json doc = detail::parse_json(json_text);
  std::vector<OrientationRow> rows;
  for (const json& r : detail::require(doc, "rows", json::value_t::array)) {
    OrientationRow row;
    row.name = detail::require(r, "name", json::value_t::string).get<std::string>();
    row.stable = detail::require(r, "s", json::value_t::number_float).get<double>();
    row.unstable = 100.0 - row.stable;
    if (r.contains("u")) {
      const double u = detail::number(r.at("u"), "field \"u\"");
      if (std::abs(row.stable + u - 100.0) > kPercentTolerance) {
        throw Error(ErrorKind::InvariantViolation, "model '" + row.name + "' has s + u != 100");
      }
    }
    rows.push_back(std::move(row));
  }
  return OrientationTable(std::move(rows));
}

OrientationTable load_table(const std::string& path) { return parse_table(detail::read_file(path)); }

std::string table_to_json(const OrientationTable& table)
{
  using detail::json;
  json rows = json::array();
  for (const auto& row : table.rows()) {
    rows.push_back({{"name", row.name}, {"s", row.stable}, {"u", row.unstable}});
  }
  return json{{"rows", rows}}.dump(2);
}

}  // namespace neu
