#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace mconc {

// Tabular result carrier rendered either as aligned-column CSV (values with
// 12 decimal places) or as JSON with full-precision numbers.  Insertion order
// is preserved everywhere so reports are byte-deterministic.
class Report {
 public:
  using Cell = std::variant<std::string, double, std::int64_t, bool>;

  explicit Report(std::vector<std::string> columns);

  void add_row(std::vector<Cell> cells);
  void set_meta(const std::string& key, nlohmann::ordered_json value);

  std::string csv() const;
  nlohmann::ordered_json to_json() const;
  std::string render(bool as_json) const;

  size_t num_rows() const { return rows_.size(); }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  nlohmann::ordered_json meta_ = nlohmann::ordered_json::object();
};

// Fixed 12-decimal rendering used for CSV values.
std::string format_value(double v);

}  // namespace mconc
