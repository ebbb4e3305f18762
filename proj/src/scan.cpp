#include "qdepth/scan.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace qdepth {

const char* kScanCsvHeader = "n,t,m,qdepth,status,witness_d,witness_k,witness_beta";

const char* cell_status_name(CellStatus s) {
  switch (s) {
    case CellStatus::proven_match: return "proven-match";
    case CellStatus::conjectural_match: return "conjectural-match";
    case CellStatus::counterexample: return "COUNTEREXAMPLE";
    case CellStatus::bound_violation: return "bound-violation";
  }
  return "?";
}

bool proven_region(int n, int t) { return t <= 2 || t >= n - 1 || n <= (t + 1) * (t + 3); }

ScanCell scan_cell(int n, int t, bool* gap_below_max) {
  QDepthResult r = qdepth_power_fast(n, t);
  if (gap_below_max) *gap_below_max = r.gap_below_max;
  ScanCell cell;
  cell.n = n;
  cell.t = t;
  cell.m_expected = static_cast<int>(ceil_div(n, t + 1));
  cell.qdepth_computed = r.qdepth;
  if (r.qdepth == cell.m_expected) {
    cell.status = proven_region(n, t) ? CellStatus::proven_match : CellStatus::conjectural_match;
  } else if (r.qdepth > cell.m_expected) {
    // contradicts the universal upper bound: only possible via a bug
    cell.status = CellStatus::bound_violation;
  } else {
    // below m inside a proven region would contradict a proved statement,
    // so it too signals a bug; outside, it is a genuine discovery
    cell.status = proven_region(n, t) ? CellStatus::bound_violation : CellStatus::counterexample;
  }
  cell.witness = std::move(r.witness);
  return cell;
}

namespace {

struct CellOutcome {
  ScanCell cell;
  bool gap = false;
};

// Evaluates the given (n, t) cells with `jobs` workers and hands each
// outcome to flush() exactly once, in input order, regardless of completion
// order.
void compute_cells(const std::vector<std::pair<int, int>>& cells, int jobs,
                   const std::function<void(const CellOutcome&)>& flush) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = static_cast<int>(
      std::min<size_t>(static_cast<size_t>(jobs), std::max<size_t>(cells.size(), 1)));

  std::vector<std::optional<CellOutcome>> results(cells.size());
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;

  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      CellOutcome out;
      out.cell = scan_cell(cells[i].first, cells[i].second, &out.gap);
      {
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(out);
      }
      cv.notify_one();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(jobs));
  for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);

  size_t flushed = 0;
  while (flushed < cells.size()) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return results[flushed].has_value(); });
    while (flushed < cells.size() && results[flushed].has_value()) {
      CellOutcome out = std::move(*results[flushed]);
      results[flushed].reset();
      ++flushed;
      lock.unlock();
      flush(out);
      lock.lock();
    }
  }
  for (auto& th : pool) th.join();
}

void check_grid(int n_max, int t_max) {
  if (n_max < 2) throw std::invalid_argument("scan: n_max must be >= 2");
  if (t_max < 1) throw std::invalid_argument("scan: t_max must be >= 1");
}

std::vector<std::pair<int, int>> grid_order(int n_max, int t_max) {
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<size_t>(n_max - 1) * static_cast<size_t>(t_max));
  for (int t = 1; t <= t_max; ++t)
    for (int n = 2; n <= n_max; ++n) cells.emplace_back(n, t);
  return cells;
}

void tally(ScanSummary& summary, const ScanCell& cell, bool gap) {
  ++summary.cells;
  switch (cell.status) {
    case CellStatus::proven_match: ++summary.proven_match; break;
    case CellStatus::conjectural_match: ++summary.conjectural_match; break;
    case CellStatus::counterexample: ++summary.counterexample; break;
    case CellStatus::bound_violation: ++summary.bound_violation; break;
  }
  if (gap) ++summary.nonmonotone_gaps;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

CellStatus status_from_name(const std::string& name) {
  for (CellStatus s : {CellStatus::proven_match, CellStatus::conjectural_match,
                       CellStatus::counterexample, CellStatus::bound_violation})
    if (name == cell_status_name(s)) return s;
  throw std::runtime_error("scan CSV: unknown status '" + name + "'");
}

}  // namespace

std::string cell_csv_row(const ScanCell& cell) {
  std::string row = std::to_string(cell.n) + "," + std::to_string(cell.t) + "," +
                    std::to_string(cell.m_expected) + "," + std::to_string(cell.qdepth_computed) +
                    "," + cell_status_name(cell.status) + ",";
  if (cell.witness) {
    row += std::to_string(cell.witness->d) + "," + std::to_string(cell.witness->k) + "," +
           cell.witness->beta.str();
  } else {
    row += ",,";
  }
  return row;
}

std::string report_csv(const Report& report) {
  std::string out = std::string(kScanCsvHeader) + "\n";
  for (const ScanCell& cell : report.cells) out += cell_csv_row(cell) + "\n";
  return out;
}

std::vector<ScanCell> parse_report_csv(std::istream& in) {
  std::vector<ScanCell> cells;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line != kScanCsvHeader)
        throw std::runtime_error("scan CSV: unexpected header '" + line + "'");
      continue;
    }
    std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 8)
      throw std::runtime_error("scan CSV line " + std::to_string(lineno) + ": expected 8 fields");
    ScanCell cell;
    try {
      cell.n = std::stoi(f[0]);
      cell.t = std::stoi(f[1]);
      cell.m_expected = std::stoi(f[2]);
      cell.qdepth_computed = std::stoi(f[3]);
      cell.status = status_from_name(f[4]);
      if (!f[5].empty() || !f[6].empty() || !f[7].empty()) {
        cell.witness = BetaWitness{std::stoi(f[5]), std::stoi(f[6]), ExactInt(f[7])};
      }
    } catch (const std::runtime_error&) {
      throw;
    } catch (const std::exception& e) {
      throw std::runtime_error("scan CSV line " + std::to_string(lineno) + ": " + e.what());
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::string report_json(const Report& report) {
  nlohmann::ordered_json j;
  j["tool"] = report.tool;
  j["version"] = report.version;
  j["grid"] = {{"n_min", 2}, {"n_max", report.n_max}, {"t_min", 1}, {"t_max", report.t_max}};
  j["summary"] = {{"cells", report.summary.cells},
                  {"proven_match", report.summary.proven_match},
                  {"conjectural_match", report.summary.conjectural_match},
                  {"counterexample", report.summary.counterexample},
                  {"bound_violation", report.summary.bound_violation},
                  {"nonmonotone_gaps", report.summary.nonmonotone_gaps}};
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const ScanCell& cell : report.cells) {
    nlohmann::ordered_json c;
    c["n"] = cell.n;
    c["t"] = cell.t;
    c["m_expected"] = cell.m_expected;
    c["qdepth_computed"] = cell.qdepth_computed;
    c["status"] = cell_status_name(cell.status);
    if (cell.witness) {
      // beta values exceed 64 bits; rendered as decimal strings
      c["witness"] = {{"d", cell.witness->d},
                      {"k", cell.witness->k},
                      {"beta", cell.witness->beta.str()}};
    } else {
      c["witness"] = nullptr;
    }
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

Report run_scan(int n_max, int t_max, int jobs) {
  check_grid(n_max, t_max);
  auto start = std::chrono::steady_clock::now();
  Report report;
  report.version = kVersion;
  report.n_max = n_max;
  report.t_max = t_max;
  compute_cells(grid_order(n_max, t_max), jobs, [&report](const CellOutcome& out) {
    tally(report.summary, out.cell, out.gap);
    report.cells.push_back(out.cell);
  });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ScanFilesOutcome run_scan_files(int n_max, int t_max, int jobs, const std::string& out_base,
                                bool strict) {
  check_grid(n_max, t_max);
  auto start = std::chrono::steady_clock::now();

  ScanFilesOutcome outcome;
  outcome.csv_path = out_base + ".csv";
  outcome.json_path = out_base + ".json";

  // rows carried over from an earlier, possibly interrupted run
  std::map<std::pair<int, int>, ScanCell> done;
  bool csv_exists = std::filesystem::exists(outcome.csv_path);
  if (csv_exists) {
    std::ifstream in(outcome.csv_path);
    if (!in) throw std::runtime_error("cannot read '" + outcome.csv_path + "'");
    for (ScanCell& cell : parse_report_csv(in)) {
      std::pair<int, int> key{cell.t, cell.n};
      if (done.count(key))
        throw std::runtime_error("scan CSV: duplicate cell n=" + std::to_string(cell.n) +
                                 " t=" + std::to_string(cell.t));
      done.emplace(key, std::move(cell));
    }
  }

  std::vector<std::pair<int, int>> todo;
  for (const auto& [n, t] : grid_order(n_max, t_max))
    if (!done.count({t, n})) todo.emplace_back(n, t);

  std::ofstream csv(outcome.csv_path, std::ios::app);
  if (!csv) throw std::runtime_error("cannot write '" + outcome.csv_path + "'");
  if (!csv_exists) {
    csv << kScanCsvHeader << "\n";
    csv.flush();
  }

  std::map<std::pair<int, int>, ScanCell> fresh;
  compute_cells(todo, jobs, [&](const CellOutcome& out) {
    csv << cell_csv_row(out.cell) << "\n";
    csv.flush();
    if (out.gap) ++outcome.report.summary.nonmonotone_gaps;
    fresh.emplace(std::pair<int, int>{out.cell.t, out.cell.n}, out.cell);
  });
  csv.close();
  if (!csv) throw std::runtime_error("write failure on '" + outcome.csv_path + "'");

  Report& report = outcome.report;
  report.version = kVersion;
  report.n_max = n_max;
  report.t_max = t_max;
  long long gaps = report.summary.nonmonotone_gaps;
  report.summary = ScanSummary{};
  report.summary.nonmonotone_gaps = gaps;
  for (const auto& [n, t] : grid_order(n_max, t_max)) {
    auto it = fresh.find({t, n});
    const ScanCell* cell = nullptr;
    if (it != fresh.end()) {
      cell = &it->second;
      ++outcome.computed;
    } else {
      cell = &done.at({t, n});
      ++outcome.resumed;
    }
    ++report.summary.cells;
    switch (cell->status) {
      case CellStatus::proven_match: ++report.summary.proven_match; break;
      case CellStatus::conjectural_match: ++report.summary.conjectural_match; break;
      case CellStatus::counterexample: ++report.summary.counterexample; break;
      case CellStatus::bound_violation: ++report.summary.bound_violation; break;
    }
    report.cells.push_back(*cell);
  }

  std::ofstream json(outcome.json_path, std::ios::trunc);
  if (!json) throw std::runtime_error("cannot write '" + outcome.json_path + "'");
  json << report_json(report);
  json.close();
  if (!json) throw std::runtime_error("write failure on '" + outcome.json_path + "'");

  if (strict) {
    for (const ScanCell& cell : report.cells)
      if (proven_region(cell.n, cell.t) && cell.status != CellStatus::proven_match)
        outcome.exit_code = 3;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

}  // namespace qdepth
