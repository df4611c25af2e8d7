#pragma once

#include <string>
#include <vector>

#include "masim/config.hpp"
#include "masim/report.hpp"

namespace masim {

struct SweepRow {
  std::string paradigm;
  std::string sweep_var;
  double sweep_value = 0;
  RunReport report;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ordered by (paradigm, sweep value), DNR first
  std::string csv;             // full CSV text including header
};

// Exact emitted column order.
extern const char* const kCsvHeader;

// Runs one report per (paradigm, sweep point). Deterministic for a given spec
// and seed: per-run engine seeds derive from the experiment seed, never from
// global state.
SweepResult run_sweep(const ExperimentSpec& spec);

std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_reports_csv(const std::string& csv_text);

// Writes <name>.csv and a matching gnuplot script next to it. Output is
// buffered and written whole, so a failed run leaves no partial file.
// Returns the CSV path.
std::string write_sweep_outputs(const SweepResult& result, const ExperimentSpec& spec,
                                const std::string& out_dir);

}  // namespace masim
