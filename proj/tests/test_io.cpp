#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "cogrowth/cogrowth_series.hpp"
#include "cogrowth/counting.hpp"
#include "cogrowth/errors.hpp"
#include "cogrowth/io.hpp"
#include "cogrowth/presets.hpp"
#include "cogrowth/singularity.hpp"
#include "doctest.h"

using namespace cogrowth;
using nlohmann::json;

namespace {

std::string strip_trailing(const std::string &s) {
  std::size_t end = s.size();
  while (end > 0 && (s[end - 1] == '\n' || s[end - 1] == '\r' || s[end - 1] == ' '))
    --end;
  return s.substr(0, end);
}

}  // namespace

TEST_CASE("count table json round trip") {
  const CountTable t = count_table(load_preset("z2xz2"), 10);
  Provenance prov;
  prov.source = "z2xz2";
  prov.ball_budget = 4096;
  const std::string text = write_count_table_json(t, prov);
  CHECK(text.find("\"format\": \"cogrowth.count_table.v1\"") != std::string::npos);
  const CountTable back = read_count_table_json(text);
  CHECK(back.group_id == t.group_id);
  CHECK(back.rank == t.rank);
  CHECK(back.q == t.q);
  CHECK(back.n_max == t.n_max);
  CHECK_FALSE(back.truncated_at.has_value());
  CHECK(back.gamma == t.gamma);
  CHECK(back.walk == t.walk);
}

TEST_CASE("count table json is byte-stable") {
  const CountTable t = count_table(load_preset("s3"), 8);
  Provenance prov;
  prov.source = "s3";
  prov.ball_budget = 0;
  CHECK(write_count_table_json(t, prov) == write_count_table_json(t, prov));
}

TEST_CASE("truncated tables round trip with their marker") {
  const CountTable t = count_table(load_preset("zsquared"), 20, 40);
  REQUIRE(t.truncated_at.has_value());
  Provenance prov;
  prov.source = "zsquared";
  prov.ball_budget = 40;
  const CountTable back = read_count_table_json(write_count_table_json(t, prov));
  REQUIRE(back.truncated_at.has_value());
  CHECK(*back.truncated_at == *t.truncated_at);
  CHECK(back.gamma.size() == t.gamma.size());

  const std::string csv = write_count_table_csv(t);
  CHECK(csv.rfind("# cogrowth.count_table.csv v1\n", 0) == 0);
  CHECK(csv.find("# truncated_at " + std::to_string(*t.truncated_at) + "\n") !=
        std::string::npos);

  const std::string plain = write_count_table_text(t);
  CHECK(plain.find("TRUNCATED") != std::string::npos);
}

TEST_CASE("reader is lenient about values but strict about structure") {
  const CountTable t = count_table(load_preset("z2xz2"), 8);
  Provenance prov;
  prov.source = "z2xz2";
  const std::string text = write_count_table_json(t, prov);

  SUBCASE("a tampered count is returned verbatim") {
    json j = json::parse(text);
    j["gamma"][4] = "61";
    const CountTable back = read_count_table_json(j.dump());
    CHECK(back.gamma[4] == 61);
    CHECK(back.gamma[2] == 4);
  }
  SUBCASE("invalid json") {
    CHECK_THROWS_AS(read_count_table_json("not json"), IoError);
  }
  SUBCASE("wrong format tag") {
    json j = json::parse(text);
    j["format"] = "something.else.v9";
    CHECK_THROWS_AS(read_count_table_json(j.dump()), IoError);
  }
  SUBCASE("missing field") {
    json j = json::parse(text);
    j.erase("walk");
    CHECK_THROWS_AS(read_count_table_json(j.dump()), IoError);
  }
  SUBCASE("bad integer literal") {
    json j = json::parse(text);
    j["gamma"][2] = "xyz";
    CHECK_THROWS_AS(read_count_table_json(j.dump()), IoError);
  }
  SUBCASE("gamma must be an array") {
    json j = json::parse(text);
    j["gamma"] = "4";
    CHECK_THROWS_AS(read_count_table_json(j.dump()), IoError);
  }
}

TEST_CASE("count table csv layout") {
  const CountTable t = count_table(load_preset("z2xz2"), 4);
  const std::string csv = write_count_table_csv(t);
  CHECK(csv.find("n,gamma_n,walk_n\n") != std::string::npos);
  CHECK(csv.find("0,1,1\n") != std::string::npos);
  CHECK(csv.find("2,4,8\n") != std::string::npos);
  CHECK(csv.find("4,60,128\n") != std::string::npos);
}

TEST_CASE("verify report rendering") {
  VerifyReport r;
  r.group_id = "z2xz2";
  r.q = 3;
  r.order = 14;
  VerifyCheck ok;
  ok.name = "grigorchuk";
  ok.tag = "Eq. (1)";
  ok.pass = true;
  VerifyCheck bad;
  bad.name = "chebyshev";
  bad.tag = "Eq. (5)";
  bad.pass = false;
  bad.failed_at = 4;
  bad.residual = "1/3";
  VerifyCheck skipped;
  skipped.name = "singularities";
  skipped.tag = "Theorem 2";
  skipped.applicable = false;
  skipped.skip_reason = "requires a finite-backend group";
  r.checks = {ok, bad, skipped};

  const std::string text = write_verify_report_text(r);
  CHECK(text.find("[PASS] grigorchuk") != std::string::npos);
  CHECK(text.find("[FAIL] chebyshev") != std::string::npos);
  CHECK(text.find("first failure at order 4; residual 1/3") != std::string::npos);
  CHECK(text.find("[SKIP] singularities") != std::string::npos);
  CHECK(text.find("requires a finite-backend group") != std::string::npos);
  CHECK(text.find("overall: FAIL\n") != std::string::npos);

  const json j = json::parse(write_verify_report_json(r));
  CHECK(j.at("format") == "cogrowth.verify_report.v1");
  CHECK(j.at("pass") == false);
  CHECK(j.at("checks")[1].at("failed_at") == 4);
  CHECK(j.at("checks")[1].at("residual") == "1/3");
  CHECK(j.at("checks")[2].at("applicable") == false);

  SUBCASE("skips do not fail the report") {
    r.checks = {ok, skipped};
    CHECK(r.all_pass());
    const std::string t2 = write_verify_report_text(r);
    CHECK(t2.find("overall: PASS\n") != std::string::npos);
  }
}

TEST_CASE("singularity report serialization") {
  const RationalFunction g = cogrowth_series_finite(load_preset("z2xz2"));
  const SingularityReport r = singularity_analysis(g, Int(3));
  const json j = json::parse(write_singularity_json(r, "z2xz2"));
  CHECK(j.at("format") == "cogrowth.singularity_report.v1");
  CHECK(j.at("ok") == true);
  CHECK(j.at("spectral_poly").size() == 4);  // u^3 - 16u
  CHECK(j.at("circle_poles").size() == 2);
  CHECK(j.at("real_poles").size() == 2);
  CHECK(j.at("real_poles")[0].at("exact") == true);
  CHECK(j.at("real_poles")[0].at("value") == "-1/3");
  CHECK(j.at("gamma_exponent").at("value") == "3");
  CHECK(j.at("split").at("available") == true);
  CHECK(j.at("split").at("mass0") == "1/2");

  const std::string text = write_singularity_text(r, "z2xz2");
  CHECK(text.find("singularity report: z2xz2") != std::string::npos);
  CHECK(text.find("cogrowth exponent: 3 (exact)") != std::string::npos);
  CHECK(text.find("circle poles (|z| = q^{-1/2}): 2") != std::string::npos);
  CHECK(text.find("z = -1/3 (exact)") != std::string::npos);
}

TEST_CASE("asymptotics report serialization") {
  const MarkedGroup g = load_preset("s3");
  const CountTable t = count_table(g, 20);
  const auto spec = adjacency_spectrum(FiniteStructure(g));
  const AsymptoticsReport rep = asymptotics_report(t, &spec);

  const json j = json::parse(write_asymptotics_json(rep));
  CHECK(j.at("format") == "cogrowth.asymptotics_report.v1");
  CHECK(j.at("finite") == true);
  CHECK(j.at("amenability").at("verdict") == "consistent-with-amenable");
  CHECK(j.at("integral_split").size() == 10);
  CHECK(j.at("remark").at("rows").size() == 10);
  CHECK(j.at("rho").at("even_ratio").at("ok") == true);

  const std::string csv = write_asymptotics_csv(t, rep);
  CHECK(csv.rfind("# cogrowth.asymptotics.csv v1\n", 0) == 0);
  CHECK(csv.find("n,gamma_2n,ratio,prediction,deviation,I,I1,I2,I2_surrogate,"
                 "surrogate_deviation,majorant1,L_n\n") != std::string::npos);
  // Rows n = 1..10; the n = 1 row starts with the exact gamma_2 = 4.
  CHECK(csv.find("\n1,4,") != std::string::npos);
  const std::string text = write_asymptotics_text(rep);
  CHECK(text.find("amenability verdict: consistent-with-amenable") != std::string::npos);
  CHECK(text.find("remark probe:") != std::string::npos);
}

TEST_CASE("asymptotics csv on an infinite preset leaves diagnostic cells empty") {
  const CountTable t = count_table(load_preset("zsquared"), 12);
  const AsymptoticsReport rep = asymptotics_report(t);
  const std::string csv = write_asymptotics_csv(t, rep);
  // gamma_2 = 0 for zsquared; no integral/remark columns.
  CHECK(csv.find("\n1,0,") != std::string::npos);
  CHECK(csv.find(",,,,,,\n") != std::string::npos);
}

TEST_CASE("text file helpers") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cogrowth_io_test";
  fs::create_directories(dir);
  const std::string path = (dir / "table.json").string();
  const CountTable t = count_table(load_preset("trivial"), 6);
  Provenance prov;
  prov.source = "trivial";
  const std::string text = write_count_table_json(t, prov);
  write_text_file(path, text);
  CHECK(read_text_file(path) == text);
  const CountTable back = read_count_table_json(read_text_file(path));
  CHECK(back.gamma == t.gamma);
  fs::remove_all(dir);

  CHECK_THROWS_AS(read_text_file((dir / "missing.json").string()), IoError);
  CHECK_THROWS_AS(write_text_file((dir / "sub" / "x.json").string(), "x"), IoError);
}

TEST_CASE("shipped preset spec files match the embedded specs") {
  const char *data_dir = std::getenv("COGROWTH_DATA_DIR");
  if (data_dir == nullptr) {
    MESSAGE("COGROWTH_DATA_DIR not set; skipping data file comparison");
    return;
  }
  for (const PresetInfo &info : list_presets()) {
    const std::string path = std::string(data_dir) + "/presets/" + info.id + ".json";
    CAPTURE(path);
    const std::string on_disk = read_text_file(path);
    CHECK(strip_trailing(on_disk) == strip_trailing(preset_spec_json(info.id)));
    // The file is a loadable group spec in its own right.
    const MarkedGroup g = MarkedGroup::from_spec_json(on_disk);
    CHECK(g.id() == info.id);
  }
}
