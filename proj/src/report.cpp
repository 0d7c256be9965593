#include "mconc/report.hpp"

#include <cstdio>

#include "mconc/errors.hpp"

namespace mconc {

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;  // collapse negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

Report::Report(std::vector<std::string> columns)
    : columns_(std::move(columns)) {}

void Report::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size())
    throw InputError("report row has " + std::to_string(cells.size()) +
                     " cells, expected " + std::to_string(columns_.size()));
  rows_.push_back(std::move(cells));
}

void Report::set_meta(const std::string& key, nlohmann::ordered_json value) {
  meta_[key] = std::move(value);
}

namespace {

std::string cell_text(const Report::Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* d = std::get_if<double>(&cell)) return format_value(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell))
    return std::to_string(*i);
  return std::get<bool>(cell) ? "yes" : "no";
}

nlohmann::ordered_json cell_json(const Report::Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  return std::get<bool>(cell);
}

}  // namespace

std::string Report::csv() const {
  std::vector<size_t> width(columns_.size());
  std::vector<std::vector<std::string>> texts;
  texts.reserve(rows_.size());
  for (size_t c = 0; c < columns_.size(); ++c) width[c] = columns_[c].size();
  for (const auto& row : rows_) {
    std::vector<std::string> t;
    t.reserve(row.size());
    for (size_t c = 0; c < row.size(); ++c) {
      t.push_back(cell_text(row[c]));
      width[c] = std::max(width[c], t.back().size());
    }
    texts.push_back(std::move(t));
  }

  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c) out += ", ";
      out += cells[c];
      if (c + 1 < cells.size())
        out.append(width[c] - cells[c].size(), ' ');
    }
    out += '\n';
  };
  emit(columns_);
  for (const auto& t : texts) emit(t);
  return out;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t c = 0; c < row.size(); ++c) obj[columns_[c]] = cell_json(row[c]);
    rows.push_back(std::move(obj));
  }
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  if (!meta_.empty()) out["meta"] = meta_;
  out["rows"] = std::move(rows);
  return out;
}

std::string Report::render(bool as_json) const {
  return as_json ? to_json().dump(2) + "\n" : csv();
}

}  // namespace mconc
