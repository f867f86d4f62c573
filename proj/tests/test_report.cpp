#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccoef/complexity.hpp"
#include "ccoef/engine.hpp"
#include "ccoef/enumeration.hpp"
#include "ccoef/report.hpp"

using namespace ccoef;
namespace fs = std::filesystem;

TEST_CASE("sha256 of known strings") {
  CHECK(sha256_hex(std::string()) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex(std::string("abc")) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("PBM P4 layout") {
  const auto evo = evolve(RuleTable::elementary(204), Configuration::from_string("1000000001"), 2);
  const auto pbm = pbm_p4(evo, "m.json");
  const std::string header = "P4\n# ccoef.pbm/1 manifest=m.json\n10 3\n";
  REQUIRE(pbm.substr(0, header.size()) == header);
  const std::string body = pbm.substr(header.size());
  REQUIRE(body.size() == 6);  // 2 bytes per row
  for (int r = 0; r < 3; ++r) {
    CHECK(static_cast<unsigned char>(body[2 * r]) == 0x80);
    CHECK(static_cast<unsigned char>(body[2 * r + 1]) == 0x40);
  }
}

TEST_CASE("PBM for life grids") {
  const auto g = LifeGrid::from_rows({"*.", ".*"});
  const auto pbm = pbm_p4(g, "m");
  CHECK(pbm.substr(pbm.size() - 2) == std::string("\x80\x40", 2));
}

TEST_CASE("curve CSV") {
  VariabilityCurve c;
  c.points = {{4, 0.5}, {5, 0.25}};
  CHECK(curve_csv(c, "manifest.json") == "# schema=ccoef.curve.csv/1 manifest=manifest.json\nt_prime,S\n4,0.5\n5,0.25\n");
}

TEST_CASE("shortest round-trip doubles") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.5e-7) == "-2.5e-07");
  const double x = 0.012720301801656159;
  CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("coefficient JSON starts with its fields") {
  const auto res = coefficient_C(RuleTable::elementary(30), gray_initials(8, 21), 40);
  const auto j = to_json(res);
  CHECK(j.begin().key() == "c_value");
  CHECK(j["params"]["compressor_id"] == compressor_id());
  CHECK(j["fit"]["point_count"] == res.fit.point_count);
}

TEST_CASE("output set commits atomically") {
  const fs::path dir = fs::temp_directory_path() / "ccoef_report_test";
  fs::remove_all(dir);
  OutputSet out;
  out.add("a.txt", std::string("alpha"));
  out.add("b.txt", std::string("beta"));
  CHECK_THROWS(out.add("../evil", std::string("x")));
  out.commit(dir);
  std::ifstream in(dir / "a.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "alpha");
  CHECK(out.hashes().at("b.txt") == sha256_hex(std::string("beta")));
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    CHECK(e.path().filename().string().front() != '.');
    ++files;
  }
  CHECK(files == 2);
  fs::remove_all(dir);
}

TEST_CASE("manifest round-trip") {
  RunManifest m;
  m.command = "coeff";
  m.command_line = {"coeff", "--rule", "30"};
  m.parameters = {{"t", 200}};
  m.outputs = {{"coeff.json", "abc"}};
  m.timestamp = utc_timestamp();
  const auto back = RunManifest::from_json(m.to_json());
  CHECK(back.command_line == m.command_line);
  CHECK(back.outputs == m.outputs);
  CHECK(back.parameters == m.parameters);
  CHECK(m.to_json().begin().key() == "schema");
  CHECK_THROWS(RunManifest::from_json(Json{{"schema", "other"}}));
}
