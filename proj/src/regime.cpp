#include "masim/regime.hpp"

#include <iomanip>
#include <sstream>

namespace masim {

RegimeTable regime_table(const CostParams& params, const std::vector<std::uint32_t>& n_rows,
                         const std::vector<double>& size_rows, std::uint32_t n_for_size_rows) {
  RegimeTable table;
  for (const std::uint32_t n : n_rows) {
    RegimeRow row;
    row.axis = "servers";
    row.value = n;
    row.result = classify_regime(params, n);
    table.rows.push_back(row);
  }
  for (const double size : size_rows) {
    CostParams p = params;
    p.alpha = size;
    RegimeRow row;
    row.axis = "data_size";
    row.value = size;
    row.result = classify_regime(p, n_for_size_rows);
    table.rows.push_back(row);
  }
  return table;
}

std::string RegimeTable::to_text() const {
  std::ostringstream out;
  out << std::left << std::setw(10) << "axis" << std::setw(12) << "value" << std::setw(8)
      << "time" << std::setw(8) << "cost" << "overall" << '\n';
  for (const auto& row : rows) {
    out << std::left << std::setw(10) << row.axis << std::setw(12) << format_number(row.value)
        << std::setw(8) << to_string(row.result.time_winner) << std::setw(8)
        << to_string(row.result.cost_winner) << to_string(row.result.overall) << '\n';
  }
  return out.str();
}

std::string RegimeTable::to_csv() const {
  std::string out = "axis,value,time_winner,cost_winner,overall\n";
  for (const auto& row : rows) {
    out += row.axis;
    out += ',';
    out += format_number(row.value);
    out += ',';
    out += to_string(row.result.time_winner);
    out += ',';
    out += to_string(row.result.cost_winner);
    out += ',';
    out += to_string(row.result.overall);
    out += '\n';
  }
  return out;
}

}  // namespace masim
