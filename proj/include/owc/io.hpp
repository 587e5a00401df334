#pragma once

#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include "owc/config.hpp"
#include "owc/grid.hpp"
#include "owc/state.hpp"

namespace owc {

struct SnapshotRow {
  double x = 0.0;
  double zeta = 0.0;
  double q = 0.0;
  const char* segment = "";
};

// RAII CSV writer: header on open, values at 17 significant digits, flushed
// on destruction so partial series survive a numerical abort.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& header);
  void row(std::initializer_list<double> values);

 private:
  std::ofstream out_;
};

// One row per grid node ordered by x; interface nodes appear once. Nodes
// under the structure report zeta_w and q_i.
std::vector<SnapshotRow> snapshot_rows(const State& s,
                                       const PhysicalConfig& cfg,
                                       const Grid& grid);

void write_rows_csv(const std::string& path,
                    const std::vector<SnapshotRow>& rows);

void write_snapshot(const State& s, const PhysicalConfig& cfg,
                    const Grid& grid, const std::string& path);

}  // namespace owc
