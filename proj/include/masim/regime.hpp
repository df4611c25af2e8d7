#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "masim/cost_model.hpp"

namespace masim {

struct RegimeRow {
  std::string axis;  // "servers" or "data_size"
  double value = 0;
  RegimeResult result;
};

struct RegimeTable {
  std::vector<RegimeRow> rows;

  std::string to_text() const;
  std::string to_csv() const;
};

// Winner table over two axes: one row per request count in n_rows, one row
// per request size in size_rows (evaluated at n_for_size_rows requests). Each
// row is classified by direct metric comparison, never by lookup thresholds.
RegimeTable regime_table(const CostParams& params, const std::vector<std::uint32_t>& n_rows,
                         const std::vector<double>& size_rows, std::uint32_t n_for_size_rows);

}  // namespace masim
