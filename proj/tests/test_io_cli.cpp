#include "k3lat/commands.hpp"
#include "k3lat/json_io.hpp"
#include "k3lat/sample.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace k3lat;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("k3lat_test_" + name);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

IntVec unit(Index n, Index i) {
  IntVec v = IntVec::Zero(n);
  v(i) = 1;
  return v;
}

const char* kPlaneEF = R"({"d": 4,
  "omega1": [0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],
  "omega2": [0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]})";

}  // namespace

TEST_SUITE_BEGIN("io_cli");

TEST_CASE("integer and rational JSON forms round-trip") {
  CHECK(int_to_json(Int(42)).is_number_integer());
  CHECK(int_from_json(int_to_json(Int(42))) == 42);
  Int big("-123456789012345678901234567890");
  Json jb = int_to_json(big);
  CHECK(jb.is_string());
  CHECK(int_from_json(jb) == big);
  CHECK(rat_from_json(rat_to_json(parse_rat("3/7"))) == parse_rat("3/7"));
  CHECK(rat_to_json(parse_rat("5")) == Json("5"));
  CHECK(rat_from_json(Json(7)) == Rat(7));
  CHECK_THROWS_AS(int_from_json(Json(1.5)), Error);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_int("12x"), Error);
}

TEST_CASE("plane JSON accepts rationals and normalizes") {
  Json j = Json::parse(R"({"d": 4,
    "omega1": ["1/2",0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],
    "omega2": [0,"3",0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]})");
  Plane h = plane_from_json(j);
  CHECK(h.omega1() == unit(21, 0));
  CHECK(h.omega2() == unit(21, 1));
  Json back = plane_to_json(h);
  CHECK(back["d"] == 4);
  CHECK(plane_from_json(back).omega1() == h.omega1());
}

TEST_CASE("plane JSON rejects malformed input") {
  CHECK_THROWS_AS(plane_from_json(Json::parse(R"({"d": 4, "omega1": [1,2]})")), Error);
  CHECK_THROWS_AS(plane_from_json(Json::parse(R"({"omega1": [], "omega2": []})")), Error);
  CHECK_THROWS_AS(load_json_file("/nonexistent/k3lat.json"), Error);
}

TEST_CASE("lattice-info command output") {
  std::ostringstream out;
  CHECK(cli::run_lattice_info(4, out) == 0);
  Json j = Json::parse(out.str());
  CHECK(j["rank"] == 21);
  CHECK(j["det"] == -4);
  CHECK(j["signature"] == Json::array({2, 19}));
  CHECK(j["even"] == true);
  CHECK(j["gram"].size() == 441);

  std::ostringstream out2;
  cli::run_lattice_info(2, out2);
  CHECK(Json::parse(out2.str())["det"] == -2);

  CHECK_THROWS_AS(cli::run_lattice_info(3, out), Error);
}

TEST_CASE("check command: verdicts side by side") {
  auto path = temp_file("plane_ef.json");
  write_text(path, kPlaneEF);
  std::ostringstream out;
  CHECK(cli::run_check(path.string(), 23, out) == 0);
  Json j = Json::parse(out.str());
  CHECK(j["property_r"]["holds"] == false);
  CHECK(j["property_r"]["residue"] == 22);
  CHECK(j["property_r_integral"]["holds"] == false);
  CHECK(j["agree"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("check command: parse failures map to the parse exit code") {
  auto path = temp_file("broken.json");
  write_text(path, "{not json");
  std::ostringstream out;
  try {
    cli::run_check(path.string(), 23, out);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(cli::exit_code_for(e) == cli::kExitParse);
  }
  std::filesystem::remove(path);
}

TEST_CASE("perturb command: writes a verifying certificate") {
  auto in = temp_file("plane_in.json");
  auto out_file = temp_file("cert_out.json");
  write_text(in, kPlaneEF);
  std::ostringstream out;
  int code = cli::run_perturb(in.string(), 23, "1/100", out_file.string(), out);
  CHECK(code == 0);
  PerturbCertificate cert = certificate_from_json(load_json_file(out_file.string()));
  CHECK(verify_certificate(cert).ok);
  CHECK(cert.distance <= parse_rat("1/100"));
  std::filesystem::remove(in);
  std::filesystem::remove(out_file);
}

TEST_CASE("perturb command: precondition errors carry distinct exit codes") {
  auto in = temp_file("plane_pre.json");
  write_text(in, kPlaneEF);
  std::ostringstream out;
  try {
    cli::run_perturb(in.string(), 2, "1/100", "", out);
    FAIL("expected InvalidPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPrime);
    CHECK(cli::exit_code_for(e) == cli::kExitPrecondition);
  }
  // p | d
  std::string d46 = kPlaneEF;
  d46.replace(d46.find("\"d\": 4"), 6, "\"d\": 46");
  write_text(in, d46);
  try {
    cli::run_perturb(in.string(), 23, "1/100", "", out);
    FAIL("expected InvalidPrime for p | d");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPrime);
  }
  std::filesystem::remove(in);
}

TEST_CASE("verify command: audits certificate files") {
  auto in = temp_file("plane_v.json");
  auto cert_path = temp_file("cert_v.json");
  write_text(in, kPlaneEF);
  std::ostringstream discard;
  REQUIRE(cli::run_perturb(in.string(), 23, "1/100", cert_path.string(), discard) == 0);

  std::ostringstream out;
  CHECK(cli::run_verify(cert_path.string(), out) == 0);
  CHECK(Json::parse(out.str())["ok"] == true);

  // Corrupt one output coordinate through the JSON and re-audit.
  Json j = load_json_file(cert_path.string());
  j["output"]["omega1"][0] = int_to_json(Int(int_from_json(j["output"]["omega1"][0]) + 1));
  write_json_file(cert_path.string(), j);
  std::ostringstream out2;
  CHECK(cli::run_verify(cert_path.string(), out2) == cli::kExitVerifyFailed);
  Json v2 = Json::parse(out2.str());
  CHECK(v2["ok"] == false);
  CHECK(!v2["reasons"].empty());

  std::filesystem::remove(in);
  std::filesystem::remove(cert_path);
}

TEST_CASE("lemma-sweep command: CSV rows and the p < 5 warning path") {
  std::ostringstream out;
  CHECK(cli::run_lemma_sweep(23, out) == 0);
  std::string csv = out.str();
  CHECK(csv.find("p,pairs,solved,max_y\n") == 0);
  CHECK(csv.find("\n23,484,484,") != std::string::npos);
  CHECK(csv.find("\n5,16,16,") != std::string::npos);

  std::ostringstream out2;
  CHECK(cli::run_lemma_sweep(3, out2) == 0);
  CHECK(out2.str() == "p,pairs,solved,max_y\n");
}

TEST_CASE("sample-density command: full success, stats, determinism") {
  std::ostringstream a, b;
  CHECK(cli::run_sample_density(4, 23, 20, "1/100", 7, false, "", a) == 0);
  CHECK(cli::run_sample_density(4, 23, 20, "1/100", 7, false, "", b) == 0);
  CHECK(a.str() == b.str());  // byte-identical given the seed
  Json j = Json::parse(a.str());
  CHECK(j["trials"] == 20);
  CHECK(j["successes"] == 20);
  CHECK(j["seed"] == 7);
  Rat max = rat_from_json(j["distance_stats"]["max"]);
  CHECK(max <= parse_rat("1/100"));
  Rat mn = rat_from_json(j["distance_stats"]["min"]);
  Rat mean = rat_from_json(j["distance_stats"]["mean"]);
  CHECK(mn <= mean);
  CHECK(mean <= max);

  std::ostringstream c;
  CHECK(cli::run_sample_density(4, 23, 3, "1/100", 11, true, "", c) == 0);
  Json jc = Json::parse(c.str());
  CHECK(jc["posdef_count"] == 3);  // rejection sampling conditions the inputs
}

TEST_CASE("golden files: JSON field order and bytes are frozen") {
  // Regenerate tests/golden/ with the CLI if the formats change on purpose.
  auto slurp = [](const std::string& name) {
    std::ifstream in(std::string(K3LAT_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  {
    LatticePtr l = make_lambda_d(4);
    Plane h(l, unit(21, 1), unit(21, 2));
    PerturbCertificate cert = make_property_r(h, 23, parse_rat("1/100"));
    CHECK(certificate_to_json(cert).dump(2) + "\n" == slurp("cert_ef_p23.json"));
  }
  {
    std::ostringstream out;
    cli::run_sample_density(4, 23, 5, "1/100", 7, false, "", out);
    CHECK(out.str() == slurp("report_d4_p23_t5_s7.json"));
  }
}

TEST_CASE("sample report with zero trials has null stats") {
  std::ostringstream out;
  CHECK(cli::run_sample_density(4, 23, 0, "1/100", 1, false, "", out) == 0);
  Json j = Json::parse(out.str());
  CHECK(j["distance_stats"].is_null());
  CHECK(j["successes"] == 0);
}

TEST_SUITE_END();
