#include "hypack/density.hpp"
#include "hypack/io.hpp"
#include "hypack/truncation.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

using namespace hypack;
using nlohmann::json;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_fixture(text, "fx.json");
  } catch (const FixtureError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("reals round-trip through text") {
  for (double x : {0.1, 1.0 / 3.0, 0.75864825042005329, 1e-300, -2.5e17, 5.19550}) {
    CHECK(std::strtod(format_real(x).c_str(), nullptr) == x);
  }
  CHECK(format_real(std::numeric_limits<double>::infinity()) == "null");
  CHECK(format_real(std::nan("")) == "null");
}

TEST_CASE("json text keeps full precision and scalar arrays on one line") {
  json j;
  j["x"] = 0.1;
  j["v"] = {1.0, 2.0};
  j["name"] = "a";
  CHECK(json_text(j) == R"({"name":"a","v":[1,2],"x":0.10000000000000001})");
  const std::string pretty = json_text(j, 2);
  CHECK(pretty.find("[1, 2]") != std::string::npos);
  CHECK(json::parse(pretty) == json::parse(json_text(j)));
}

TEST_CASE("density report fields") {
  const json j = json::parse(json_text(to_json(density(5.5))));
  for (const char* key : {"p", "s", "h", "theta", "vol3_base", "vol4_orthoscheme", "vol4_hyperball", "delta"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["delta"].get<double>() == density(5.5).delta);
}

TEST_CASE("sweep CSV") {
  const auto rows = sweep(5.2, 5.8, 4);
  std::ostringstream os;
  write_sweep_csv(os, rows);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == kSweepHeader);
  int n = 0;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    int k = 0;
    double last = 0;
    while (std::getline(cells, cell, ',')) {
      last = std::strtod(cell.c_str(), nullptr);
      ++k;
    }
    CHECK(k == 8);
    CHECK(last == rows[n].delta);
    ++n;
  }
  CHECK(n == 4);
}

TEST_CASE("fixture round trip") {
  const DecompositionFixture fx = glued_simplices_fixture(1.2);
  const DecompositionFixture back = parse_fixture(json_text(to_json(fx)));
  CHECK(back.dim == fx.dim);
  CHECK(back.base_plane_indices == fx.base_plane_indices);
  CHECK(back.height == fx.height);
  REQUIRE(back.halfspaces.size() == fx.halfspaces.size());
  for (std::size_t i = 0; i < fx.halfspaces.size(); ++i) {
    CHECK((back.halfspaces[i].form.coeffs() - fx.halfspaces[i].form.coeffs()).norm() < 1e-14);
    CHECK(back.halfspaces[i].side == fx.halfspaces[i].side);
  }
}

TEST_CASE("fixture errors name their location") {
  CHECK(error_of("{").find("fx.json: byte") == 0);
  CHECK(error_of("[]") == "fx.json: $: expected an object");
  CHECK(error_of(R"({"dim":4,"halfspaces":[],"height":1})") ==
        "fx.json: $: missing key \"base_plane_indices\"");
  CHECK(error_of(R"({"dim":2,"halfspaces":[],"base_plane_indices":[],"height":1})") ==
        "fx.json: $.dim: must be 3 or 4");
  CHECK(error_of(R"({"dim":3,"halfspaces":[[[0,1,0],1]],"base_plane_indices":[],"height":1})") ==
        "fx.json: $.halfspaces[0][0]: expected 4 coefficients");
  CHECK(error_of(R"({"dim":3,"halfspaces":[[[0,1,0,"x"],1]],"base_plane_indices":[],"height":1})") ==
        "fx.json: $.halfspaces[0][0][3]: expected a number");
  CHECK(error_of(R"({"dim":3,"halfspaces":[[[0,1,0,0],2]],"base_plane_indices":[],"height":1})") ==
        "fx.json: $.halfspaces[0][1]: side must be 1 or -1");
  CHECK(error_of(R"({"dim":3,"halfspaces":[[[1,0,0,0],1]],"base_plane_indices":[],"height":1})")
            .find("fx.json: $.halfspaces[0][0]: ") == 0);
  CHECK(error_of(R"({"dim":3,"halfspaces":[[[0,1,0,0],1]],"base_plane_indices":[1],"height":1})") ==
        "fx.json: $.base_plane_indices[0]: index out of range");
  CHECK(error_of(R"({"dim":3,"halfspaces":[[[0,1,0,0],1]],"base_plane_indices":[0],"height":-1})") ==
        "fx.json: $.height: expected a nonnegative number");
}

TEST_CASE("missing fixture file") {
  CHECK_THROWS_AS(load_fixture("/nonexistent/fixture.json"), IoError);
}
