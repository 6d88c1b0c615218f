// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "drep/expand.hpp"
#include "drep/io.hpp"
#include "drep/linalg.hpp"
#include "support.hpp"

using namespace drep;

namespace {

nc::Resolution load(const std::string& file) {
  std::ifstream in(std::string(DREP_DATA_DIR) + "/" + file);
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse_algebra(buf.str(), file.substr(0, file.find('.')));
}

gc::CPoly named(const expand::ExpandedAlgebra& ea, const std::string& name) {
  auto i = ea.variables()->find(name);
  REQUIRE(i.has_value());
  return gc::CPoly::variable(ea.variables(), *i);
}

// Evaluates a degree-0 polynomial at a point given by matrices per generator.
Rational evaluate(const gc::CPoly& p, const expand::ExpandedAlgebra& ea,
                  const std::map<std::uint32_t, linalg::Matrix>& point) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (auto [var, e] : m.even()) {
      auto g = ea.generator_of(var);
      std::size_t local = var % (ea.n() * ea.n());
      const auto& mat = point.at(g);
      for (std::uint32_t i = 0; i < e; ++i) v *= mat(local / ea.n(), local % ea.n());
    }
    total += v;
  }
  return total;
}

}  // namespace

TEST_CASE("f_jk on short words") {
  auto a = nc::make_alphabet({{"x", 0}, {"y", 0}});
  auto big = expand::expanded_alphabet(*a, 2);
  CHECK(big->size() == 8);
  CHECK((*big)[1].name == "x_1_2");
  CHECK(nc::to_string(expand::f_jk(nc::Word{0, 1}, 1, 1, 2, big)) == "x_1_1*y_1_1 + x_1_2*y_2_1");
  CHECK(nc::to_string(expand::f_jk(nc::Word{0}, 2, 1, 2, big)) == "x_2_1");
  CHECK(expand::f_jk(nc::Word{}, 1, 2, 2, big).is_zero());
  CHECK(nc::to_string(expand::f_jk(nc::Word{}, 1, 1, 2, big)) == "1");
  CHECK(expand::f_jk(nc::Word{0, 1, 0, 1}, 2, 1, 2, big).terms().size() == 8);
  CHECK_THROWS_AS(expand::f_jk(nc::Word{0}, 3, 1, 2, big), Error);
  CHECK_THROWS_AS(expand::f_jk(nc::Word{0}, 0, 1, 2, big), Error);
}

TEST_CASE("f_jk has n^(m-1) summands") {
  auto a = nc::make_alphabet({{"x", 0}, {"y", 0}, {"z", 0}});
  for (std::size_t n = 1; n <= 3; ++n) {
    auto big = expand::expanded_alphabet(*a, n);
    nc::Word w;
    std::size_t expected = 1;
    for (std::size_t m = 1; m <= 4; ++m) {
      w.push_back(static_cast<std::uint32_t>(m % 3));
      CHECK(expand::f_jk(w, 1, n, n, big).terms().size() == expected);
      expected *= n;
    }
  }
}

TEST_CASE("f_jk is multiplicative") {
  auto a = nc::make_alphabet({{"x", 0}, {"t", -1}, {"u", -2}});
  std::vector<std::uint32_t> letters = {0, 1, 2};
  std::mt19937 rng(17);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto big = expand::expanded_alphabet(*a, n);
    for (int iter = 0; iter < 10; ++iter) {
      auto u = testing::random_word(rng, letters, 3), v = testing::random_word(rng, letters, 3);
      auto uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= n; ++k) {
          nc::NCPoly sum(big);
          for (std::size_t s = 1; s <= n; ++s)
            sum += nc::nc_mul(expand::f_jk(u, j, s, n, big), expand::f_jk(v, s, k, n, big));
          CHECK(sum == expand::f_jk(uv, j, k, n, big));
        }
    }
  }
}

TEST_CASE("abelianization applies Koszul signs") {
  auto a = nc::make_alphabet({{"x", 0}, {"s", -1}, {"t", -1}});
  auto vars = gc::make_variables({{"x", 0}, {"s", -1}, {"t", -1}});
  auto ts = nc::NCPoly::monomial(a, {2, 1});
  CHECK(gc::to_string(expand::abelianize(ts, vars)) == "-s*t");
  auto tt = nc::NCPoly::monomial(a, {2, 2});
  CHECK(expand::abelianize(tt, vars).is_zero());
  auto comm = nc::NCPoly::monomial(a, {0, 2}) - nc::NCPoly::monomial(a, {2, 0});
  CHECK(expand::abelianize(comm, vars).is_zero());
}

TEST_CASE("kxy expansion") {
  auto res = load("kxy.alg");
  auto one = expand::expand(res, 1);
  CHECK(one.variables()->size() == 3);
  CHECK(one.presentation().diff(2).is_zero());

  auto ea = expand::expand(res, 2);
  CHECK(ea.variables()->size() == 12);
  CHECK(ea.variable_index(2, 1, 1) == 8);
  CHECK((*ea.variables())[ea.variable_index(1, 2, 1)].name == "y_2_1");
  CHECK(gc::to_string(ea.presentation().diff(8)) == "x_1_2*y_2_1 - x_2_1*y_1_2");
  for (std::uint32_t v = 0; v < 12; ++v) CHECK((*ea.variables())[v].degree == res.alphabet()->degree(ea.generator_of(v)));
  CHECK(gc::validate_presentation(ea.presentation()).empty());
}

TEST_CASE("U(sl2) expansion keeps the linear term") {
  auto ea = expand::expand(load("usl2.alg"), 2);
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) {
      gc::CPoly expected = named(ea, "x_" + std::to_string(i) + "_" + std::to_string(j));
      for (std::size_t k = 1; k <= 2; ++k) {
        auto ik = "_" + std::to_string(i) + "_" + std::to_string(k);
        auto kj = "_" + std::to_string(k) + "_" + std::to_string(j);
        expected += gc::c_mul(named(ea, "y" + ik), named(ea, "z" + kj));
        expected -= gc::c_mul(named(ea, "z" + ik), named(ea, "y" + kj));
      }
      auto X = *ea.variables()->find("X_" + std::to_string(i) + "_" + std::to_string(j));
      CHECK(ea.presentation().diff(X) == expected);
    }
  CHECK(gc::validate_presentation(ea.presentation()).empty());
}

TEST_CASE("invalid resolutions are rejected") {
  auto a = nc::make_alphabet({{"x", 0}, {"t", -1}});
  nc::Resolution bad("bad", a, {nc::NCPoly(a), nc::NCPoly::generator(a, 1)});
  CHECK_THROWS_AS(expand::expand(bad, 2), Error);
  CHECK_THROWS_AS(expand::expand(load("kxy.alg"), 0), Error);
}

TEST_CASE("h0 ideals") {
  auto ea = expand::expand(load("kxy.alg"), 2);
  auto h0 = expand::h0_ideal(ea);
  REQUIRE(h0.size() == 4);
  CHECK(gc::to_string(h0[0]) == "x_1_2*y_2_1 - x_2_1*y_1_2");

  auto one = expand::h0_ideal(expand::expand(load("kxy.alg"), 1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_zero());
  CHECK(expand::h0_ideal(expand::expand(load("free2.alg"), 3)).empty());
}

TEST_CASE("h0 ideal vanishes exactly on commuting pairs") {
  auto ea = expand::expand(load("kxy.alg"), 2);
  auto h0 = expand::h0_ideal(ea);
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> e(-4, 4);
  auto random_matrix = [&] {
    linalg::Matrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = e(rng);
    return m;
  };
  for (int iter = 0; iter < 50; ++iter) {
    auto x = random_matrix();
    // y commutes with x when it is a polynomial in x.
    linalg::Matrix y = Rational(e(rng)) * x * x + Rational(e(rng)) * linalg::Matrix::identity(2);
    bool commuting = iter % 2 == 0;
    if (!commuting) y = random_matrix();
    bool actually = x * y == y * x;
    std::map<std::uint32_t, linalg::Matrix> point = {{0, x}, {1, y}};
    bool all_zero = true;
    for (const auto& p : h0) all_zero = all_zero && evaluate(p, ea, point) == 0;
    CHECK(all_zero == actually);
  }
}

TEST_CASE("expansion commutes with the differential") {
  std::mt19937 rng(29);
  for (int iter = 0; iter < 30; ++iter) {
    auto res = testing::random_resolution(rng);
    std::vector<std::uint32_t> letters(res.alphabet()->size());
    for (std::uint32_t i = 0; i < letters.size(); ++i) letters[i] = i;
    for (std::size_t n = 1; n <= 2; ++n) {
      auto ea = expand::expand(res, n);
      const auto& big = ea.free_algebra().alphabet();
      for (int k = 0; k < 3; ++k) {
        auto w = nc::NCPoly::monomial(res.alphabet(), testing::random_word(rng, letters, 3));
        for (std::size_t j = 1; j <= n; ++j)
          for (std::size_t l = 1; l <= n; ++l) {
            auto lhs = gc::c_d(expand::abelianize(expand::f_jk(w, j, l, n, big), ea.variables()), ea.presentation());
            auto rhs = expand::abelianize(expand::f_jk(nc::nc_d(w, res), j, l, n, big), ea.variables());
            CHECK(lhs == rhs);
          }
      }
    }
  }
}
