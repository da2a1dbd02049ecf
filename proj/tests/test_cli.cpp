// Drives the installed command-line binary end to end.  The path to the
// binary arrives via COGROWTH_CLI (set by the test harness); when it is
// absent these cases are skipped so the unit binary stays runnable alone.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "cogrowth/counting.hpp"
#include "cogrowth/io.hpp"
#include "cogrowth/marked_group.hpp"
#include "cogrowth/presets.hpp"
#include "doctest.h"

using namespace cogrowth;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

const char *cli_path() { return std::getenv("COGROWTH_CLI"); }

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("cogrowth_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliResult run_cli(const std::string &args) {
  static std::atomic<int> counter{0};
  const int id = counter++;
  const fs::path out = scratch_dir() / ("out" + std::to_string(id));
  const fs::path err = scratch_dir() / ("err" + std::to_string(id));
  const std::string cmd = std::string("\"") + cli_path() + "\" " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = read_text_file(out.string());
  r.err = read_text_file(err.string());
  fs::remove(out);
  fs::remove(err);
  return r;
}

std::string write_scratch(const std::string &name, const std::string &content) {
  const fs::path p = scratch_dir() / name;
  write_text_file(p.string(), content);
  return p.string();
}

std::string table_json(const std::string &preset, int n_max) {
  const CountTable t = count_table(load_preset(preset), n_max);
  Provenance prov;
  prov.source = "preset:" + preset;
  prov.ball_budget = kDefaultBallBudget;
  return write_count_table_json(t, prov);
}

}  // namespace

#define NEED_CLI() \
  if (cli_path() == nullptr) { MESSAGE("COGROWTH_CLI not set; skipping"); return; }

TEST_CASE("cli: presets listing") {
  NEED_CLI();
  const CliResult r = run_cli("presets");
  CHECK(r.code == 0);
  for (const char *id : {"trivial", "zsquared", "z2xz2", "s3", "sl2z"})
    CHECK(r.out.find(id) != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);

  const CliResult rj = run_cli("presets --format json");
  CHECK(rj.code == 0);
  const json j = json::parse(rj.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);
  CHECK(j[0].at("id") == "trivial");
  CHECK(j[4].at("id") == "sl2z");
  CHECK(j[4].at("finite_backend") == false);
}

TEST_CASE("cli: count produces the exact table") {
  NEED_CLI();
  const CliResult r = run_cli("count --preset trivial --nmax 6 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("format") == "cogrowth.count_table.v1");
  CHECK(j.at("group").at("id") == "trivial");
  CHECK(j.at("group").at("q") == 3);
  CHECK(j.at("n_max") == 6);
  CHECK(j.at("truncated_at").is_null());
  const std::vector<std::string> gamma = j.at("gamma");
  CHECK(gamma == std::vector<std::string>{"1", "4", "12", "36", "108", "324", "972"});
  const std::vector<std::string> walk = j.at("walk");
  CHECK(walk[2] == "16");
  CHECK(j.at("provenance").at("source") == "preset:trivial");
}

TEST_CASE("cli: count output is deterministic") {
  NEED_CLI();
  const CliResult a = run_cli("count --preset z2xz2 --nmax 12 --format json");
  const CliResult b = run_cli("count --preset z2xz2 --nmax 12 --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("cli: count csv and out-file") {
  NEED_CLI();
  const CliResult r = run_cli("count --preset z2xz2 --nmax 4 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# cogrowth.count_table.csv v1\n", 0) == 0);
  CHECK(r.out.find("2,4,8\n") != std::string::npos);

  const std::string path = (scratch_dir() / "tbl.json").string();
  const CliResult w = run_cli("count --preset s3 --nmax 6 --format json --out " + path);
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  const json j = json::parse(read_text_file(path));
  CHECK(j.at("gamma")[2] == "4");
}

TEST_CASE("cli: configuration errors exit with code 2") {
  NEED_CLI();
  const CliResult unknown = run_cli("count --preset martian --nmax 4");
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown preset") != std::string::npos);

  const CliResult missing = run_cli("count --nmax 4");
  CHECK(missing.code == 2);

  const CliResult bad_flag = run_cli("count --preset trivial --nmax 1");
  CHECK(bad_flag.code == 2);

  const CliResult no_sub = run_cli("");
  CHECK(no_sub.code == 2);

  const CliResult help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("count") != std::string::npos);
}

TEST_CASE("cli: verify passes on clean presets") {
  NEED_CLI();
  const CliResult r = run_cli("verify --preset z2xz2 --order 14 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("pass") == true);
  REQUIRE(j.at("checks").size() == 4);
  CHECK(j.at("checks")[0].at("name") == "grigorchuk");
  CHECK(j.at("checks")[0].at("tag") == "Eq. (1)");
  CHECK(j.at("checks")[1].at("tag") == "Eq. (5)");
  CHECK(j.at("checks")[2].at("tag") == "Theorem 2");
  CHECK(j.at("checks")[3].at("tag") == "Theorem 2");
  for (const auto &c : j.at("checks")) {
    CHECK(c.at("applicable") == true);
    CHECK(c.at("pass") == true);
  }
}

TEST_CASE("cli: verify skips structure checks without a finite backend") {
  NEED_CLI();
  const CliResult r = run_cli("verify --preset zsquared --order 12");
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[SKIP]") != std::string::npos);
  CHECK(r.out.find("backend not finite") != std::string::npos);
  CHECK(r.out.find("overall: PASS") != std::string::npos);

  const CliResult forced = run_cli("verify --preset zsquared --which functional");
  CHECK(forced.code == 2);
  CHECK(forced.err.find("explicitly requested check cannot run") != std::string::npos);
}

TEST_CASE("cli: verify reports corrupted counts with the offending index") {
  NEED_CLI();
  json j = json::parse(table_json("z2xz2", 12));
  const Int bumped = Int(j.at("gamma")[6].get<std::string>(), 10) + 1;
  j["gamma"][6] = bumped.get_str();
  const std::string path = write_scratch("corrupt_gamma.json", j.dump());

  const CliResult r = run_cli("verify --counts " + path + " --format json");
  CHECK(r.code == 1);
  const json rep = json::parse(r.out);
  CHECK(rep.at("pass") == false);
  // gamma_6 enters the generating-function identity at z-order 7 and the
  // moment identity at order 6.
  CHECK(rep.at("checks")[0].at("name") == "grigorchuk");
  CHECK(rep.at("checks")[0].at("pass") == false);
  CHECK(rep.at("checks")[0].at("failed_at") == 7);
  CHECK(rep.at("checks")[1].at("failed_at") == 6);
  // Without a group the structure checks are skipped, not failed.
  CHECK(rep.at("checks")[2].at("applicable") == false);

  json jw = json::parse(table_json("s3", 12));
  const Int w4 = Int(jw.at("walk")[4].get<std::string>(), 10) - 1;
  jw["walk"][4] = w4.get_str();
  const std::string wpath = write_scratch("corrupt_walk.json", jw.dump());
  const CliResult rw = run_cli("verify --counts " + wpath + " --format json");
  CHECK(rw.code == 1);
  const json repw = json::parse(rw.out);
  CHECK(repw.at("checks")[0].at("failed_at") == 5);
  CHECK(repw.at("checks")[1].at("failed_at") == 4);
}

TEST_CASE("cli: verify can pair an artifact with its group") {
  NEED_CLI();
  const std::string path = write_scratch("clean_s3.json", table_json("s3", 14));
  const CliResult r = run_cli("verify --preset s3 --counts " + path + " --format json");
  CHECK(r.code == 0);
  const json rep = json::parse(r.out);
  for (const auto &c : rep.at("checks")) CHECK(c.at("applicable") == true);

  // Mismatched q between the counts artifact and the group is a config error.
  const std::string spec = write_scratch(
      "rank3.json",
      MarkedGroup::free_abelian(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).to_spec_json());
  const CliResult bad = run_cli("verify --group " + spec + " --counts " + path);
  CHECK(bad.code == 2);
  CHECK(bad.err.find("does not match") != std::string::npos);
}

TEST_CASE("cli: budget exhaustion truncates and exits 2") {
  NEED_CLI();
  const CliResult r = run_cli("count --preset sl2z --nmax 12 --ball-budget 50 --format json");
  CHECK(r.code == 2);
  CHECK(r.err.find("ball budget") != std::string::npos);
  const json j = json::parse(r.out);
  CHECK_FALSE(j.at("truncated_at").is_null());
  CHECK(j.at("truncated_at").get<int>() <= 12);
}

TEST_CASE("cli: asymptotics reports") {
  NEED_CLI();
  const CliResult csv = run_cli("asymptotics --preset zsquared --nmax 12 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("# cogrowth.asymptotics.csv v1\n", 0) == 0);

  const CliResult j = run_cli("asymptotics --preset s3 --nmax 20 --format json");
  REQUIRE(j.code == 0);
  const json rep = json::parse(j.out);
  CHECK(rep.at("finite") == true);
  CHECK(rep.at("amenability").at("verdict") == "consistent-with-amenable");
  CHECK(rep.at("integral_split").size() == 10);

  const std::string path = write_scratch("asym_counts.json", table_json("z2xz2", 16));
  const CliResult from_counts = run_cli("asymptotics --counts " + path + " --format json");
  CHECK(from_counts.code == 0);
  const json rep2 = json::parse(from_counts.out);
  CHECK(rep2.at("finite") == false);
  CHECK(rep2.at("gamma").at("even_ratio").at("ok") == true);
}
