#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdepth/exact.hpp"
#include "qdepth/ideal_io.hpp"
#include "qdepth/monomial.hpp"
#include "qdepth/power.hpp"
#include "qdepth/qdepth_core.hpp"
#include "qdepth/scan.hpp"
#include "qdepth/selftest.hpp"

namespace {

using nlohmann::ordered_json;

// exit codes: 0 ok, 1 usage/parse/io error, 2 containment violation,
// 3 strict-mode proven-region mismatch, 4 disagreement or selftest failure

ordered_json result_json(const qdepth::QDepthResult& r) {
  ordered_json j;
  j["qdepth"] = r.qdepth;
  j["polarized_qdepth"] = r.polarized_qdepth;
  j["added_vars"] = r.added_vars;
  ordered_json cert = ordered_json::array();
  for (const qdepth::ExactInt& b : r.certificate) cert.push_back(b.str());
  j["certificate"] = std::move(cert);
  if (r.witness) {
    j["witness"] = {{"d", r.witness->d}, {"k", r.witness->k}, {"beta", r.witness->beta.str()}};
  } else {
    j["witness"] = nullptr;
  }
  j["gap_below_max"] = r.gap_below_max;
  return j;
}

void print_result_human(const qdepth::QDepthResult& r, bool quiet) {
  std::cout << "qdepth: " << r.qdepth << "\n";
  if (quiet) return;
  std::cout << "polarized qdepth: " << r.polarized_qdepth
            << "   added variables: " << r.added_vars << "\n";
  std::cout << "certificate (beta row at d=" << r.polarized_qdepth << "):";
  for (const qdepth::ExactInt& b : r.certificate) std::cout << ' ' << b;
  std::cout << "\n";
  if (r.witness) {
    std::cout << "witness: beta_" << r.witness->k << "^" << r.witness->d << " = "
              << r.witness->beta << " < 0\n";
  } else {
    std::cout << "witness: none (every d is feasible)\n";
  }
}

bool results_agree(const qdepth::QDepthResult& a, const qdepth::QDepthResult& b) {
  if (a.qdepth != b.qdepth || a.polarized_qdepth != b.polarized_qdepth ||
      a.added_vars != b.added_vars || a.certificate != b.certificate)
    return false;
  if (a.witness.has_value() != b.witness.has_value()) return false;
  if (a.witness && (a.witness->d != b.witness->d || a.witness->k != b.witness->k ||
                    a.witness->beta != b.witness->beta))
    return false;
  return true;
}

int cmd_power(int n, int t, bool oracle, int oracle_cap, bool json, bool quiet) {
  qdepth::QDepthResult fast = qdepth::qdepth_power_fast(n, t);
  bool oracle_ran = false;
  if (oracle) {
    if (static_cast<long long>(n) * t > oracle_cap) {
      std::cerr << "error: --oracle needs n*t <= " << oracle_cap
                << " (raise with --oracle-cap at your own risk)\n";
      return 1;
    }
    qdepth::QDepthResult slow =
        qdepth::qdepth_general(qdepth::MonomialIdeal::zero(n), qdepth::maximal_power_ideal(n, t));
    oracle_ran = true;
    if (!results_agree(fast, slow)) {
      std::cerr << "error: closed form and enumeration disagree for n=" << n << " t=" << t
                << ": fast qdepth=" << fast.qdepth << ", oracle qdepth=" << slow.qdepth
                << " (this is a bug)\n";
      return 4;
    }
  }
  if (json) {
    ordered_json j;
    j["command"] = "power";
    j["n"] = n;
    j["t"] = t;
    j["m"] = static_cast<int>(qdepth::ceil_div(n, t + 1));
    j.update(result_json(fast));
    j["oracle_checked"] = oracle_ran;
    std::cout << j.dump(2) << "\n";
  } else {
    print_result_human(fast, quiet);
    if (oracle_ran && !quiet) std::cout << "oracle: enumeration agrees\n";
  }
  return 0;
}

int cmd_ideal(const std::string& inner_path, const std::string& outer_path, bool json,
              bool quiet) {
  qdepth::MonomialIdeal outer = qdepth::parse_ideal_file(outer_path);
  qdepth::MonomialIdeal inner = inner_path.empty()
                                    ? qdepth::MonomialIdeal::zero(outer.nvars())
                                    : qdepth::parse_ideal_file(inner_path);
  qdepth::QDepthResult r = qdepth::qdepth_general(inner, outer);
  if (json) {
    ordered_json j;
    j["command"] = "ideal";
    j["nvars"] = outer.nvars();
    j["inner_generators"] = inner.generators().size();
    j["outer_generators"] = outer.generators().size();
    j.update(result_json(r));
    std::cout << j.dump(2) << "\n";
  } else {
    print_result_human(r, quiet);
  }
  return 0;
}

int cmd_scan(int n_max, int t_max, int jobs, const std::string& out_base, bool strict, bool json,
             bool quiet) {
  qdepth::ScanFilesOutcome outcome = qdepth::run_scan_files(n_max, t_max, jobs, out_base, strict);
  const qdepth::Report& report = outcome.report;
  if (json) {
    std::cout << qdepth::report_json(report);
  } else {
    std::printf("scan n=2..%d t=1..%d: %lld cells (%lld computed, %lld resumed) in %.1fs\n",
                report.n_max, report.t_max, report.summary.cells, outcome.computed,
                outcome.resumed, report.seconds);
    if (!quiet) {
      std::printf("status: %lld proven-match, %lld conjectural-match, %lld COUNTEREXAMPLE, "
                  "%lld bound-violation, %lld nonmonotone gaps\n",
                  report.summary.proven_match, report.summary.conjectural_match,
                  report.summary.counterexample, report.summary.bound_violation,
                  report.summary.nonmonotone_gaps);
      std::printf("report: %s %s\n", outcome.csv_path.c_str(), outcome.json_path.c_str());
    }
  }
  for (const qdepth::ScanCell& cell : report.cells) {
    if (cell.status == qdepth::CellStatus::counterexample)
      std::printf("!! COUNTEREXAMPLE at n=%d t=%d: qdepth=%d, expected m=%d\n", cell.n, cell.t,
                  cell.qdepth_computed, cell.m_expected);
    if (cell.status == qdepth::CellStatus::bound_violation)
      std::printf("!! bound-violation at n=%d t=%d: qdepth=%d, expected m=%d "
                  "(implementation bug)\n",
                  cell.n, cell.t, cell.qdepth_computed, cell.m_expected);
  }
  return outcome.exit_code;
}

int cmd_selftest(const std::string& depth, bool json) {
  bool full = depth == "full";
  std::vector<qdepth::SuiteResult> suites = qdepth::selftest(full);
  long long checks = 0, failures = 0;
  for (const qdepth::SuiteResult& s : suites) {
    checks += s.checks;
    failures += s.failures;
  }
  if (json) {
    ordered_json j;
    j["command"] = "selftest";
    j["depth"] = full ? "full" : "quick";
    ordered_json arr = ordered_json::array();
    for (const qdepth::SuiteResult& s : suites)
      arr.push_back({{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}});
    j["suites"] = std::move(arr);
    j["pass"] = (failures == 0);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const qdepth::SuiteResult& s : suites)
      std::printf("suite %-22s %8lld checks, %lld failures\n", s.name.c_str(), s.checks,
                  s.failures);
    std::printf("selftest: %s (%lld checks)\n", failures == 0 ? "PASS" : "FAIL", checks);
  }
  return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi depth of monomial ideal quotients"};
  app.set_version_flag("--version", qdepth::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false, quiet = false;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--quiet", quiet, "minimal output");

  int n = 0, t = 0, oracle_cap = 16;
  bool oracle = false;
  CLI::App* power = app.add_subcommand("power", "qdepth of m^t by closed form");
  power->add_option("--n", n, "number of ring variables (>= 2)")->required();
  power->add_option("--t", t, "power of the maximal ideal (>= 1)")->required();
  power->add_flag("--oracle", oracle, "cross-check against the enumeration oracle");
  power->add_option("--oracle-cap", oracle_cap, "max n*t admitted for --oracle (default 16)");

  std::string inner_path, outer_path;
  CLI::App* ideal = app.add_subcommand("ideal", "qdepth of a quotient J/I from ideal files");
  ideal->add_option("--outer", outer_path, "ideal file for J")->required();
  ideal->add_option("--inner", inner_path, "ideal file for I (omit for the zero ideal)");

  int n_max = 0, t_max = 0, jobs = 0;
  std::string out_base = "scan_report";
  bool strict = false;
  CLI::App* scan = app.add_subcommand("scan", "sweep a (n, t) grid against ceil(n/(t+1))");
  scan->add_option("--n-max", n_max, "largest n (grid starts at n=2)")->required();
  scan->add_option("--t-max", t_max, "largest t (grid starts at t=1)")->required();
  scan->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");
  scan->add_option("--out", out_base, "report base path; writes <out>.csv and <out>.json");
  scan->add_flag("--strict", strict, "exit 3 if a proven-region cell mismatches");

  std::string depth = "quick";
  CLI::App* selftest = app.add_subcommand("selftest", "run built-in consistency suites");
  selftest->add_option("--depth", depth, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // CLI11 reports help/version as a zero-code "error"
    return code == 0 ? 0 : 1;
  }

  try {
    if (power->parsed()) return cmd_power(n, t, oracle, oracle_cap, json, quiet);
    if (ideal->parsed()) return cmd_ideal(inner_path, outer_path, json, quiet);
    if (scan->parsed()) return cmd_scan(n_max, t_max, jobs, out_base, strict, json, quiet);
    if (selftest->parsed()) return cmd_selftest(depth, json);
  } catch (const qdepth::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const qdepth::ContainmentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
