#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdepth/power.hpp"

namespace qdepth {

enum class CellStatus {
  proven_match,       // qdepth = m and (n, t) lies in a proven region
  conjectural_match,  // qdepth = m outside every proven region
  counterexample,     // qdepth < m outside every proven region: a discovery
  bound_violation,    // contradicts a proved statement: an implementation bug
};

const char* cell_status_name(CellStatus s);

// (n, t) pairs where a proved statement pins qdepth(m^t) = ceil(n/(t+1)):
// t <= 2, t >= n-1, or n <= (t+1)(t+3).
bool proven_region(int n, int t);

struct ScanCell {
  int n = 0;
  int t = 0;
  int m_expected = 0;
  int qdepth_computed = 0;
  CellStatus status = CellStatus::proven_match;
  std::optional<BetaWitness> witness;

  bool operator==(const ScanCell&) const = default;
};

struct ScanSummary {
  long long cells = 0;
  long long proven_match = 0;
  long long conjectural_match = 0;
  long long counterexample = 0;
  long long bound_violation = 0;
  long long nonmonotone_gaps = 0;  // data only; expected to stay 0
};

struct Report {
  std::string tool = "qdepth";
  std::string version;
  int n_max = 0;
  int t_max = 0;
  std::vector<ScanCell> cells;  // ordered by (t, n); covers the grid exactly once
  ScanSummary summary;
  // wall clock; printed to the console but never serialized, so report files
  // stay byte-identical across runs
  double seconds = 0.0;
};

ScanCell scan_cell(int n, int t, bool* gap_below_max = nullptr);

// In-memory scan over 2 <= n <= n_max, 1 <= t <= t_max with `jobs` workers
// (jobs <= 0 means hardware concurrency). The result is deterministic and
// independent of jobs.
Report run_scan(int n_max, int t_max, int jobs);

// header: n,t,m,qdepth,status,witness_d,witness_k,witness_beta
extern const char* kScanCsvHeader;
std::string cell_csv_row(const ScanCell& cell);
std::string report_csv(const Report& report);
std::string report_json(const Report& report);
std::vector<ScanCell> parse_report_csv(std::istream& in);

struct ScanFilesOutcome {
  Report report;
  long long computed = 0;  // cells evaluated this run
  long long resumed = 0;   // cells taken from an existing CSV
  int exit_code = 0;       // 3 when strict and a proven-region cell mismatches
  std::string csv_path;
  std::string json_path;
};

// File-backed scan: writes <out_base>.csv (append-only, rows flushed in
// (t, n) order as soon as they are final, so an interrupted run leaves a
// resumable prefix) and rewrites <out_base>.json at the end. Cells already
// present in the CSV are not recomputed.
ScanFilesOutcome run_scan_files(int n_max, int t_max, int jobs, const std::string& out_base,
                                bool strict);

}  // namespace qdepth
