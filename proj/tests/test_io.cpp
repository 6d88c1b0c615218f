// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "drep/io.hpp"
#include "support.hpp"

using namespace drep;

namespace {

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

io::Position error_position(std::string_view text) {
  try {
    io::parse_algebra(text);
  } catch (const io::ParseError& e) {
    return e.position();
  }
  FAIL("no parse error");
  return {};
}

std::string error_detail(std::string_view text) {
  try {
    io::parse_algebra(text);
  } catch (const io::ParseError& e) {
    return e.detail();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing the k[x,y] resolution") {
  auto res = io::parse_algebra("generator x : 0;\ngenerator y : 0;\ngenerator t : -1;\nd t = x*y - y*x;\n", "kxy");
  CHECK(res.name() == "kxy");
  REQUIRE(res.alphabet()->size() == 3);
  CHECK(nc::to_string(res.diff(2)) == "x*y - y*x");
  CHECK(res.diff(0).is_zero());
  CHECK(nc::validate_resolution(res).ok());
}

TEST_CASE("expression syntax") {
  const char* head = "generator x, y : 0; generator t : -1;\n";
  auto diff = [&](const std::string& expr) {
    return nc::to_string(io::parse_algebra(std::string(head) + "d t = " + expr + ";").diff(2));
  };
  CHECK(diff("x^3") == "x*x*x");
  CHECK(diff("(x + y)*(x - y)") == "x*x - x*y + y*x - y*y");
  CHECK(diff("2/3*x*y - (-x)") == "x + 2/3*x*y");
  CHECK(diff("-(x*y)") == "-x*y");
  CHECK(diff("3") == "3");
  CHECK(diff("x*2*y") == "2*x*y");
  CHECK(diff("(x - x)") == "0");
  CHECK(diff("x^0") == "1");
  CHECK(diff("# comment\n x") == "x");
}

TEST_CASE("algebra names and comments") {
  auto res = io::parse_algebra("# header\nalgebra demo;  # trailing\ngenerator a : 0;\n", "fallback");
  CHECK(res.name() == "demo");
  CHECK(io::parse_algebra("generator a : 0;", "fallback").name() == "fallback");
}

TEST_CASE("positioned errors") {
  auto p = error_position("generator x : 0;\ngenerator t : -1;\nd t = x*u;\n");
  CHECK(p.line == 3);
  CHECK(p.column == 9);
  CHECK(error_detail("generator x : 0;\ngenerator t : -1;\nd t = x*u;\n") == "undeclared generator 'u'");

  auto dup = error_position("generator x : 0;\ngenerator y, x : 0;\n");
  CHECK(dup.line == 2);
  CHECK(dup.column == 14);
  CHECK(error_detail("generator x : 0; generator t : -1; d t = x; d t = x;").find("duplicate differential") == 0);
  CHECK(error_detail("generator x : 0 generator").find("expected ';'") == 0);
  CHECK(error_detail("generator x : 0; generator t : -1; d t = x $ x;").find("unexpected character") == 0);
  CHECK(error_detail("generator x : 0; generator t : -1; d t = 1/0*x;") == "zero denominator");
  CHECK(error_detail("generator d : 0;") == "'d' is reserved");
  CHECK(error_detail("generator x : 0; generator t : -1; d t = (x;").find("expected ')'") == 0);

  try {
    io::parse_algebra("\n\n   foo");
    FAIL("expected a parse error");
  } catch (const io::ParseError& e) {
    CHECK(std::string(e.what()).rfind("3:4: ", 0) == 0);
  }
}

TEST_CASE("declaration positions are recorded") {
  auto f = io::parse_algebra_file("generator x : 0;\n  generator t : -1;\nd t = x*x;\n");
  CHECK(f.declared_at[1].line == 2);
  CHECK(f.declared_at[1].column == 13);
  CHECK_FALSE(f.diff_at[0].has_value());
  REQUIRE(f.diff_at[1].has_value());
  CHECK(f.diff_at[1]->line == 3);
}

TEST_CASE("bundled files round trip through the printer") {
  for (const auto& entry : std::filesystem::directory_iterator(DREP_DATA_DIR)) {
    if (entry.path().extension() != ".alg") continue;
    CAPTURE(entry.path().string());
    auto res = io::parse_algebra(read(entry.path()), entry.path().stem().string());
    CHECK(nc::validate_resolution(res).ok());
    auto printed = io::print_algebra(res);
    auto again = io::parse_algebra(printed);
    CHECK(again == res);
    CHECK(again.name() == res.name());
    CHECK(io::print_algebra(again) == printed);
  }
}

TEST_CASE("random resolutions round trip") {
  std::mt19937 rng(53);
  for (int iter = 0; iter < 50; ++iter) {
    auto res = testing::random_resolution(rng);
    CHECK(io::parse_algebra(io::print_algebra(res)) == res);
  }
}

TEST_CASE("representation files") {
  auto rho = io::parse_rep("# point\nn = 2\nx = [[1, 2], [3/4, -5]]\ny = [[0,0],[0,0]]\n");
  CHECK(rho.n == 2);
  REQUIRE(rho.values.count("x"));
  CHECK(rho.values["x"](1, 0) == Rational(3, 4));
  CHECK(rho.values["x"](1, 1) == -5);
  CHECK(io::parse_rep(io::print_rep(rho)).values == rho.values);

  auto fails = [](const char* text) {
    try {
      io::parse_rep(text);
    } catch (const io::ParseError& e) {
      return e.detail();
    }
    return std::string();
  };
  CHECK(fails("x = [[1]]").find("start with 'n = N'") != std::string::npos);
  CHECK(fails("n = 2\nx = [[1, 2]]").find("has 1 rows") != std::string::npos);
  CHECK(fails("n = 2\nx = [[1, 2], [3]]").find("row 2") == 0);
  CHECK(fails("n = 1\nx = [[1]]\nx = [[2]]").find("duplicate value") == 0);
  CHECK(fails("n = 0").find("positive") != std::string::npos);
}
