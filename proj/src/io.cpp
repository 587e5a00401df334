#include "owc/io.hpp"

#include "owc/errors.hpp"
#include "owc/format.hpp"

namespace owc {

CsvWriter::CsvWriter(const std::string& path, const std::string& header)
    : out_(path) {
  if (!out_) throw ConfigError("cannot open output file '" + path + "'");
  out_ << header << "\n";
}

void CsvWriter::row(std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out_ << ",";
    out_ << g17(v);
    first = false;
  }
  out_ << "\n";
}

std::vector<SnapshotRow> snapshot_rows(const State& s,
                                       const PhysicalConfig& cfg,
                                       const Grid& grid) {
  std::vector<SnapshotRow> rows;
  rows.reserve(grid.total_nodes());
  for (int i = 0; i <= grid.n1; ++i) {
    rows.push_back({grid.x[i], s.e0.zeta[i], s.e0.q[i], "E0"});
  }
  for (int j = 1; j <= grid.n2; ++j) {
    rows.push_back({grid.x[grid.n1 + j], s.e1.zeta[j], s.e1.q[j], "E1"});
  }
  for (int k = 1; k < grid.n3; ++k) {
    rows.push_back({grid.x[grid.i_wall_left + k], cfg.zeta_w, s.q_i, "I"});
  }
  for (int j = 0; j <= grid.n4; ++j) {
    rows.push_back({grid.x[grid.i_wall_right + j], s.e2.zeta[j], s.e2.q[j], "E2"});
  }
  return rows;
}

void write_rows_csv(const std::string& path,
                    const std::vector<SnapshotRow>& rows) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  out << "x,zeta,q,segment\n";
  for (const SnapshotRow& r : rows) {
    out << g17(r.x) << "," << g17(r.zeta) << "," << g17(r.q) << ","
        << r.segment << "\n";
  }
}

void write_snapshot(const State& s, const PhysicalConfig& cfg,
                    const Grid& grid, const std::string& path) {
  write_rows_csv(path, snapshot_rows(s, cfg, grid));
}

}  // namespace owc
