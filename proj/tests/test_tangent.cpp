// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "drep/io.hpp"
#include "drep/tangent.hpp"

using namespace drep;
using linalg::Matrix;

namespace {

nc::Resolution load(const std::string& file) {
  std::ifstream in(std::string(DREP_DATA_DIR) + "/" + file);
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse_algebra(buf.str(), file.substr(0, file.find('.')));
}

Matrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix zero(std::size_t n) { return Matrix(n, n); }

tangent::Representation pair(const Matrix& x, const Matrix& y) { return {x.rows(), {{"x", x}, {"y", y}}}; }

Matrix random_matrix(std::mt19937& rng, std::size_t n, int range = 3) {
  std::uniform_int_distribution<int> e(-range, range);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
  return m;
}

Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    auto p = random_matrix(rng, n);
    if (linalg::rank(p) == n) return p;
  }
}

// Random commuting pair: polynomials in one random matrix.
tangent::Representation random_commuting(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-2, 2);
  auto a = random_matrix(rng, n);
  auto x = Rational(c(rng)) * a + Rational(c(rng)) * Matrix::identity(n);
  auto y = Rational(c(rng)) * a * a + Rational(c(rng)) * a;
  return pair(x, y);
}

long euler(const std::vector<std::size_t>& dims) {
  long e = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) e += (i % 2 ? -1 : 1) * static_cast<long>(dims[i]);
  return e;
}

}  // namespace

TEST_CASE("representations are checked against the relations") {
  auto res = load("kxy.alg");
  auto bad = tangent::validate_rep(res, pair(mat({{0, 1}, {0, 0}}), mat({{1, 0}, {0, 2}})));
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].generator == "t");
  REQUIRE(bad.violations[0].residue);
  CHECK(*bad.violations[0].residue == mat({{0, 1}, {0, 0}}));
  CHECK(tangent::validate_rep(res, pair(mat({{1, 0}, {0, 2}}), mat({{3, 0}, {0, 4}}))).ok());
  CHECK(tangent::validate_rep(load("free2.alg"), pair(mat({{0, 1}, {0, 0}}), mat({{1, 0}, {0, 2}}))).ok());

  auto missing = tangent::validate_rep(res, {2, {{"x", zero(2)}}});
  CHECK_FALSE(missing.ok());
  auto extra = tangent::validate_rep(res, {2, {{"x", zero(2)}, {"y", zero(2)}, {"t", zero(2)}}});
  CHECK_FALSE(extra.ok());
  auto shape = tangent::validate_rep(res, {2, {{"x", zero(2)}, {"y", zero(3)}}});
  CHECK_FALSE(shape.ok());
}

TEST_CASE("evaluation sends negative generators to zero") {
  auto res = load("kxy.alg");
  auto rho = pair(mat({{1, 2}, {3, 4}}), mat({{0, 1}, {1, 0}}));
  const auto& a = res.alphabet();
  auto xy = nc::NCPoly::monomial(a, {0, 1});
  CHECK(tangent::evaluate(res, rho, xy) == mat({{2, 1}, {4, 3}}));
  CHECK(tangent::evaluate(res, rho, nc::NCPoly::monomial(a, {0, 2})).is_zero());
  CHECK(tangent::evaluate(res, rho, nc::NCPoly::unit(a)) == Matrix::identity(2));
}

TEST_CASE("tangent spaces of kxy at points of the plane") {
  auto res = load("kxy.alg");
  auto rho = pair(mat({{2}}), mat({{Rational(-1, 3)}}));
  auto cx = tangent::der_complex(res, rho);
  REQUIRE(cx.deltas.size() == 1);
  CHECK(cx.deltas[0].is_zero());
  CHECK(cx.pieces[0].dim == 2);
  CHECK(cx.pieces[1].dim == 1);
  auto t = tangent::tangent_cohomology(res, rho);
  CHECK(t.dims == std::vector<std::size_t>{2, 1});
}

TEST_CASE("free algebras have no higher tangent cohomology") {
  auto res = load("free2.alg");
  auto rho = pair(mat({{1, 2}, {0, 1}}), mat({{0, 0}, {5, 1}}));
  auto t = tangent::tangent_cohomology(res, rho);
  REQUIRE(!t.dims.empty());
  CHECK(t.dims[0] == 8);
  for (std::size_t i = 1; i < t.dims.size(); ++i) CHECK(t.dims[i] == 0);
}

TEST_CASE("U(sl2) at the zero representation") {
  auto res = load("usl2.alg");
  tangent::Representation rho{1, {{"x", zero(1)}, {"y", zero(1)}, {"z", zero(1)}}};
  REQUIRE(tangent::validate_rep(res, rho).ok());
  auto cx = tangent::der_complex(res, rho);
  // only the linear terms of dX, dY, dZ survive: delta_0 is -identity
  REQUIRE(cx.deltas.size() >= 1);
  CHECK(cx.deltas[0] == Rational(-1) * Matrix::identity(3));
  auto t = tangent::tangent_cohomology(res, rho);
  CHECK(t.dims == std::vector<std::size_t>{0, 0, 1});
  // a nonzero scalar point violates [y,z] = -x
  tangent::Representation bad{1, {{"x", mat({{1}})}, {"y", zero(1)}, {"z", zero(1)}}};
  CHECK_FALSE(tangent::validate_rep(res, bad).ok());
  CHECK_THROWS_AS(tangent::der_complex(res, bad), Error);
}

TEST_CASE("delta^2 = 0, Euler characteristic and conjugation invariance") {
  std::mt19937 rng(41);
  for (const char* file : {"kxy.alg", "kxyz.alg", "kxy_stable.alg"}) {
    CAPTURE(file);
    auto res = load(file);
    for (int iter = 0; iter < 6; ++iter) {
      std::size_t n = 1 + iter % 3;
      auto base = random_commuting(rng, n);
      tangent::Representation rho{n, {}};
      for (const auto& g : res.alphabet()->generators())
        if (g.degree == 0) rho.values[g.name] = g.name == "y" ? base.values["y"] : base.values["x"];
      if (std::string(file) == "kxy_stable.alg") rho.values["u"] = zero(n);
      REQUIRE(tangent::validate_rep(res, rho).ok());
      auto cx = tangent::der_complex(res, rho);
      for (std::size_t m = 0; m + 1 < cx.deltas.size(); ++m) CHECK((cx.deltas[m + 1] * cx.deltas[m]).is_zero());
      auto t = tangent::cohomology_of(cx);
      long chain = 0;
      for (const auto& p : cx.pieces) chain += (p.m % 2 ? -1 : 1) * static_cast<long>(p.dim);
      CHECK(euler(t.dims) == chain);

      auto p = random_invertible(rng, n);
      auto pinv = linalg::inverse(p);
      tangent::Representation conj{n, {}};
      for (const auto& [name, m] : rho.values) conj.values[name] = p * m * pinv;
      CHECK(tangent::tangent_cohomology(res, conj).dims == t.dims);
    }
  }
}

TEST_CASE("Koszul complex of a polynomial algebra") {
  auto hh = tangent::hh_koszul({mat({{5}}), mat({{7}})});
  CHECK(hh.hh == std::vector<std::size_t>{1, 2, 1});
  CHECK(hh.z1 == 2);
  auto id = tangent::hh_koszul({Matrix::identity(2), Matrix::identity(2)});
  CHECK(id.hh == std::vector<std::size_t>{4, 8, 4});
  auto diag = tangent::hh_koszul({mat({{1, 0}, {0, 2}}), mat({{3, 0}, {0, 4}})});
  CHECK(diag.hh == std::vector<std::size_t>{2, 4, 2});
  CHECK_THROWS_AS(tangent::hh_koszul({mat({{0, 1}, {0, 0}}), mat({{1, 0}, {0, 2}})}), Error);
  // the Euler characteristic of a Koszul complex of a commuting family is zero
  std::mt19937 rng(43);
  for (int iter = 0; iter < 10; ++iter) {
    auto rho = random_commuting(rng, 3);
    auto k = tangent::hh_koszul({rho.values["x"], rho.values["y"]});
    CHECK(euler(k.hh) == 0);
  }
}

TEST_CASE("tangent cohomology matches the Koszul oracle") {
  std::mt19937 rng(47);
  auto kxy = load("kxy.alg");
  for (int iter = 0; iter < 10; ++iter) {
    auto rho = random_commuting(rng, 1 + iter % 3);
    auto report = tangent::check_p2(kxy, rho, 2);
    CHECK(report.ok());
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].tangent_label == "T^0");
    CHECK(report.rows[0].oracle_label == "Z^1");
    CHECK(report.rows[1].oracle_label == "HH^2");
  }
  auto kxyz = load("kxyz.alg");
  for (int iter = 0; iter < 6; ++iter) {
    std::size_t n = 1 + iter % 2;
    auto a = random_matrix(rng, n);
    tangent::Representation rho{n, {{"x", a}, {"y", a * a}, {"z", Matrix::identity(n)}}};
    auto report = tangent::check_p2(kxyz, rho, 3);
    CHECK(report.ok());
    CHECK(report.rows.size() == 3);
  }
  // the declared variable count must match the algebra
  CHECK_THROWS_AS(tangent::check_p2(kxy, pair(mat({{1}}), mat({{1}})), 3), Error);
}
