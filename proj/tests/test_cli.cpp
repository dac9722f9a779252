#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef PSUMLAB_CLI_PATH
#error "PSUMLAB_CLI_PATH must point at the psumlab binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(PSUMLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse_report(const RunResult& r) {
  REQUIRE(!r.out.empty());
  return json::parse(r.out);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("psumlab-test-" + std::to_string(::getpid()) + "-" +
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
  std::string cache() const { return (path / "cache.jsonl").string(); }
};

}  // namespace

TEST_CASE("coeff: paper values through the CLI") {
  TempDir tmp;
  auto r = run("coeff --k 6 --family e --j 1 --cache " + tmp.cache());
  CHECK(r.exit_code == 0);
  auto doc = parse_report(r);
  CHECK(doc["result"]["value"] == "-28");
  CHECK(doc["result"]["method"] == "capped-pipeline");

  auto r2 = run("coeff --k 3 --family c --j 1 --no-cache --format text");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out == "-1\n");
}

TEST_CASE("exit codes: usage, budget, conjecture-relevant") {
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("coeff --family e --j 1").exit_code == 2);          // missing --k
  CHECK(run("coeff --k 6 --family a --j 1 --no-cache").exit_code == 2);  // a needs i
  CHECK(run("order --group Z7 --set 1,2,4 --variant alspach").exit_code == 2);
  CHECK(run("certify --conjecture gadms --k 2 --j '' --no-cache").exit_code == 2);

  CHECK(run("sweep --group Z19 --k 5 --budget 10").exit_code == 3);
  CHECK(run("coeff --k 6 --family e --j 1 --no-cache --max-terms 3").exit_code == 3);

  CHECK(run("certify --conjecture alspach --k 3 --j 2 --no-cache").exit_code == 4);

  CHECK(run("--help").exit_code == 0);
  CHECK(run("--version").exit_code == 0);
}

TEST_CASE("reports are byte-identical across worker counts (modulo meta)") {
  TempDir tmp;
  auto a = run("table --k 4 --jobs 1 --no-cache");
  auto b = run("table --k 4 --jobs 2 --no-cache");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  auto da = parse_report(a), db = parse_report(b);
  da.erase("meta");
  db.erase("meta");
  CHECK(da.dump() == db.dump());

  // identical invocations: identical bytes outside meta
  auto c = run("sweep --group Z11 --k 3 --variant cmpp --jobs 2");
  auto d = run("sweep --group Z11 --k 3 --variant cmpp --jobs 1");
  auto dc = parse_report(c), dd = parse_report(d);
  dc.erase("meta");
  dd.erase("meta");
  CHECK(dc.dump() == dd.dump());
}

TEST_CASE("order: reduction trace for Z^m input") {
  auto r = run("order --group Z^2 --set '(1,0);(0,1);(2,3)'");
  REQUIRE(r.exit_code == 0);
  auto doc = parse_report(r);
  CHECK(doc["result"]["M"] == "9");
  CHECK(doc["result"]["p"] == 41);
  CHECK(doc["result"]["ordering"]["ordering"].size() == 3);

  auto r2 = run("order --group Z5 --set 1,2,3 --variant alspach");
  auto doc2 = parse_report(r2);
  CHECK(doc2["result"]["ordering"] == json::array({2, 1, 3}));

  auto r3 = run("order --group Z7 --set 1,2,4 --variant cmpp");
  CHECK(r3.exit_code == 0);
  CHECK(parse_report(r3)["result"]["partial_sums"].back() == 0);

  // Z^m elements serialize as integer arrays
  CHECK(doc["result"]["source"][0].is_array());
  CHECK(doc["result"]["ordering"]["ordering"][0].is_array());
}

TEST_CASE("table CSV export") {
  TempDir tmp;
  const std::string csv_path = (tmp.path / "t.csv").string();
  auto r = run("table --k 2 --no-cache --csv " + csv_path);
  REQUIRE(r.exit_code == 0);
  std::ifstream csv(csv_path);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(csv, line)) lines.push_back(line);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "family,k,i,j,value");
  CHECK(lines[1] == "a,2,2,1,1");
  CHECK(lines[2] == "a,2,1,2,-1");
  CHECK(lines[3] == "e,2,,1,1");
  CHECK(lines[4] == "e,2,,2,-1");
}

TEST_CASE("cache: hits, round trip, verify") {
  TempDir tmp;
  const std::string cache = " --cache " + tmp.cache();

  auto r1 = run("coeff --k 5 --family e --j 2" + cache);
  REQUIRE(r1.exit_code == 0);
  CHECK(parse_report(r1)["result"]["value"] == "-2");

  // the e-record and its four a-jobs are now cached
  auto list = run("cache --action list" + cache);
  REQUIRE(list.exit_code == 0);
  CHECK(parse_report(list)["result"]["count"] == 5);

  // second run is a cache hit with the identical value and no new records
  auto r2 = run("coeff --k 5 --family e --j 2" + cache);
  CHECK(parse_report(r2)["result"]["value"] == "-2");
  auto list_again = run("cache --action list" + cache);
  CHECK(parse_report(list_again)["result"]["count"] == 5);

  // export -> import on a fresh path reproduces the record set
  const std::string exported = (tmp.path / "exported.jsonl").string();
  CHECK(run("cache --action export --file " + exported + cache).exit_code == 0);
  const std::string fresh = (tmp.path / "fresh.jsonl").string();
  auto imp = run("cache --action import --file " + exported + " --cache " + fresh);
  CHECK(imp.exit_code == 0);
  CHECK(parse_report(imp)["result"]["imported"] == 5);
  auto list2 = run("cache --action list --cache " + fresh);
  CHECK(parse_report(list2)["result"]["records"] ==
        parse_report(list)["result"]["records"]);

  // spot-check: recomputation agrees with the cache
  auto verify = run("cache --action verify --sample 3 --seed 1" + cache);
  CHECK(verify.exit_code == 0);
  CHECK(parse_report(verify)["result"]["ok"] == true);

  // clear empties the cache; list on an empty cache exits 0
  CHECK(run("cache --action clear" + cache).exit_code == 0);
  auto empty = run("cache --action list" + cache);
  CHECK(empty.exit_code == 0);
  CHECK(parse_report(empty)["result"]["count"] == 0);
}

TEST_CASE("cache: corrupt records are loud errors") {
  TempDir tmp;
  REQUIRE(run("coeff --k 3 --family e --j 1 --cache " + tmp.cache()).exit_code == 0);

  {
    std::ofstream f(tmp.cache(), std::ios::app);
    f << "{this is not json}\n";
  }
  auto r = run("cache --action list --cache " + tmp.cache());
  CHECK(r.exit_code == 1);

  // wrong schema version on import
  const std::string bad = (tmp.path / "bad.jsonl").string();
  {
    std::ofstream f(bad);
    f << R"({"schema":99,"semantics":"fk-capped-1","family":"e","k":3,"j":1,)"
      << R"("value":"1","method":"capped-pipeline","config":"0"})" << "\n";
  }
  auto imp = run("cache --action import --file " + bad + " --cache " +
                 (tmp.path / "other.jsonl").string());
  CHECK(imp.exit_code == 1);
}

TEST_CASE("consistency subcommand") {
  auto r = run("consistency --k 3 --p 5 --variant alspach --no-cache");
  REQUIRE(r.exit_code == 0);
  auto doc = parse_report(r);
  CHECK(doc["result"]["agree"] == true);
  CHECK(doc["result"]["certificate"]["gcd"] == "1");

  auto r2 = run("consistency --k 4 --p 7 --variant gadms --no-cache");
  CHECK(r2.exit_code == 0);
  CHECK(parse_report(r2)["result"]["agree"] == true);

  // p = 4 is not even prime: precondition violation
  CHECK(run("consistency --k 3 --p 4 --variant alspach --no-cache").exit_code == 2);
}
