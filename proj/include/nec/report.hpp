#pragma once

#include <string>
#include <vector>

#include "nec/catalog.hpp"

namespace nec {

struct BatchRow {
  std::string signature;
  CertifyStatus status = CertifyStatus::Certified;
  std::string recipe;
  long long index = 0;
  long long genus = 0;
  double millis = 0;
  std::string detail;
};

struct BatchReport {
  std::vector<BatchRow> rows;
};

// One signature per line, '#' starts a comment. Rows run concurrently with
// per-row derived seeds; output order follows input order.
BatchReport run_batch(const std::vector<std::string>& lines, const SearchContext& ctx,
                      int threads = 0);

struct TableRow {
  std::string label;       // row description
  std::string instance;    // concrete signature, empty for open rows
  bool open = false;
  CertifyOutcome outcome;  // meaningful when !open
};

// The ten solved one-cycle rows, each instantiated at its smallest admissible
// parameters, followed by the eight open rows.
std::vector<TableRow> solved_table_rows(const SearchContext& ctx);
std::vector<TableRow> open_table_rows();

} // namespace nec
