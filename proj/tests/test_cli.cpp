// End-to-end checks of the installed command line: exit codes, file
// interfaces, and report determinism. Each case shells out to the real
// binary (path injected by the build).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const char* kCli = QDEPTH_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("qdepth_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const TempDir& tmp, const std::string& args) {
  fs::path out = tmp.path / "stdout.txt";
  fs::path err = tmp.path / "stderr.txt";
  std::string cmd = std::string(kCli) + " " + args + " > " + out.string() + " 2> " + err.string();
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WEXITSTATUS(raw);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::trunc);
  out << text;
}

}  // namespace

TEST_CASE("power prints the closed-form value") {
  TempDir tmp;
  RunResult r = run(tmp, "power --n 7 --t 2 --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["qdepth"] == 3);
  CHECK(j["m"] == 3);
  CHECK(j["witness"]["beta"] == "-28");

  RunResult human = run(tmp, "power --n 3 --t 5");
  CHECK(human.code == 0);
  CHECK(human.out.find("qdepth: 1") != std::string::npos);
}

TEST_CASE("power --oracle agrees and respects the cap") {
  TempDir tmp;
  CHECK(run(tmp, "power --n 2 --t 2 --oracle").code == 0);
  CHECK(run(tmp, "power --n 4 --t 3 --oracle").code == 0);  // n*t = 12 <= 16
  RunResult capped = run(tmp, "power --n 5 --t 4 --oracle");
  CHECK(capped.code == 1);  // 20 > default cap 16
  CHECK(run(tmp, "power --n 5 --t 4 --oracle --oracle-cap 20").code == 0);
}

TEST_CASE("power usage errors exit 1") {
  TempDir tmp;
  CHECK(run(tmp, "power --t 2").code == 1);
  CHECK(run(tmp, "power --n 1 --t 2").code == 1);
  CHECK(run(tmp, "bogus").code == 1);
}

TEST_CASE("ideal computes qdepth from files") {
  TempDir tmp;
  write_file(tmp.path / "m3.ideal", "vars: 3\nx1\nx2\nx3\n");
  RunResult r = run(tmp, "ideal --outer " + (tmp.path / "m3.ideal").string() + " --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["qdepth"] == 2);

  write_file(tmp.path / "m2sq.ideal", "vars: 2\nx1^2\nx1*x2\nx2^2\n");
  write_file(tmp.path / "unit.ideal", "vars: 2\n1\n");
  RunResult q = run(tmp, "ideal --inner " + (tmp.path / "m2sq.ideal").string() + " --outer " +
                             (tmp.path / "unit.ideal").string() + " --json");
  CHECK(q.code == 0);
  auto jq = nlohmann::json::parse(q.out);
  CHECK(jq["qdepth"] == 0);

  RunResult sq = run(tmp, "ideal --outer " + (tmp.path / "m2sq.ideal").string());
  CHECK(sq.code == 0);
  CHECK(sq.out.find("qdepth: 1") != std::string::npos);
}

TEST_CASE("ideal parse errors exit 1 and name the line") {
  TempDir tmp;
  write_file(tmp.path / "bad.ideal", "vars: 2\nx1\nz9\n");
  RunResult r = run(tmp, "ideal --outer " + (tmp.path / "bad.ideal").string());
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run(tmp, "ideal --outer " + (tmp.path / "missing.ideal").string()).code == 1);
}

TEST_CASE("ideal containment violations exit 2") {
  TempDir tmp;
  write_file(tmp.path / "m.ideal", "vars: 2\nx1\nx2\n");
  write_file(tmp.path / "m2.ideal", "vars: 2\nx1^2\nx1*x2\nx2^2\n");
  // inner m is not inside outer m^2
  RunResult r = run(tmp, "ideal --inner " + (tmp.path / "m.ideal").string() + " --outer " +
                             (tmp.path / "m2.ideal").string());
  CHECK(r.code == 2);
  // inner == outer
  RunResult eq = run(tmp, "ideal --inner " + (tmp.path / "m.ideal").string() + " --outer " +
                              (tmp.path / "m.ideal").string());
  CHECK(eq.code == 2);
}

TEST_CASE("scan writes byte-identical reports for any --jobs and resumes") {
  TempDir tmp;
  std::string base1 = (tmp.path / "a").string();
  std::string base2 = (tmp.path / "b").string();
  CHECK(run(tmp, "scan --n-max 10 --t-max 3 --jobs 1 --strict --out " + base1).code == 0);
  CHECK(run(tmp, "scan --n-max 10 --t-max 3 --jobs 2 --strict --out " + base2).code == 0);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  CHECK(slurp(base1 + ".csv") == slurp(base2 + ".csv"));
  CHECK(slurp(base1 + ".json") == slurp(base2 + ".json"));

  // CSV and JSON carry the same cells
  auto j = nlohmann::json::parse(slurp(base1 + ".json"));
  CHECK(j["summary"]["cells"] == 27);
  CHECK(j["cells"].size() == 27);
  CHECK(j["summary"]["bound_violation"] == 0);

  // truncating the CSV to a prefix and rerunning restores identical bytes
  std::string full = slurp(base1 + ".csv");
  {
    std::istringstream all(full);
    std::ostringstream prefix;
    std::string line;
    for (int i = 0; i < 8 && std::getline(all, line); ++i) prefix << line << "\n";
    std::ofstream out(base1 + ".csv", std::ios::trunc | std::ios::binary);
    out << prefix.str();
  }
  RunResult resumed = run(tmp, "scan --n-max 10 --t-max 3 --out " + base1);
  CHECK(resumed.code == 0);
  CHECK(resumed.out.find("7 resumed") != std::string::npos);
  CHECK(slurp(base1 + ".csv") == full);
}

TEST_CASE("scan rejects an unwritable output path") {
  TempDir tmp;
  CHECK(run(tmp, "scan --n-max 4 --t-max 1 --out /nonexistent_dir_zz/r").code == 1);
}

TEST_CASE("selftest passes and its output is deterministic") {
  TempDir tmp;
  RunResult a = run(tmp, "selftest");
  CHECK(a.code == 0);
  CHECK(a.out.find("selftest: PASS") != std::string::npos);
  RunResult b = run(tmp, "selftest");
  CHECK(a.out == b.out);
  RunResult j = run(tmp, "selftest --json");
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["pass"] == true);
}
