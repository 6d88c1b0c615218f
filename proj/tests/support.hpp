// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

// Shared helpers for tests: seeded generators and a brute-force oracle that
// computes graded pieces of submodules by dense linear algebra.

#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "drep/gcalg.hpp"
#include "drep/groebner.hpp"
#include "drep/linalg.hpp"
#include "drep/ncalg.hpp"

namespace drep::testing {

inline std::vector<gb::Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<gb::Monomial> out;
  if (d < 0) return out;
  gb::Monomial m;
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == nvars || nvars == 0) {
      if (nvars == 0) {
        if (left == 0) out.push_back(m);
        return;
      }
      m.set(var, static_cast<unsigned>(left));
      out.push_back(m);
      m.set(var, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(var, static_cast<unsigned>(e));
      self(self, var + 1, left - e);
    }
    m.set(var, 0);
  };
  rec(rec, 0, d);
  return out;
}

/// Vectors m * g (deg m = d - deg g) spanning the degree-d piece of <gens>.
inline std::vector<gb::Element> degree_piece_spanners(const std::vector<gb::Element>& gens,
                                                      const std::vector<int>& shifts,
                                                      std::size_t nvars, int d) {
  std::vector<gb::Element> out;
  for (const auto& g : gens) {
    auto deg = g.degree(shifts);
    if (!deg) continue;
    for (const auto& m : monomials_of_degree(nvars, d - *deg)) out.push_back(g.times(m));
  }
  return out;
}

/// Coordinates of elements in the monomial basis of the degree-d piece of S^r.
class Coordinates {
 public:
  Coordinates(std::size_t rank, const std::vector<int>& shifts, std::size_t nvars, int d) {
    for (std::uint32_t c = 0; c < rank; ++c) {
      int s = c < shifts.size() ? shifts[c] : 0;
      for (const auto& m : monomials_of_degree(nvars, d - s)) {
        index_.emplace(key(m, c), index_.size());
      }
    }
  }
  std::size_t size() const { return index_.size(); }
  linalg::Matrix matrix(const std::vector<gb::Element>& cols) const {
    linalg::Matrix a(size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& t : cols[j].terms()) a(index_.at(key(t.mon, t.comp)), j) = t.coeff;
    return a;
  }

 private:
  using Key = std::pair<std::uint32_t, std::array<std::uint8_t, gb::kMaxVars>>;
  static Key key(const gb::Monomial& m, std::uint32_t c) { return {c, m.exp}; }
  std::map<Key, std::size_t> index_;
};

inline std::size_t span_dimension(const std::vector<gb::Element>& gens, std::size_t rank,
                                  const std::vector<int>& shifts, std::size_t nvars, int d) {
  Coordinates coords(rank, shifts, nvars, d);
  auto cols = degree_piece_spanners(gens, shifts, nvars, d);
  if (cols.empty()) return 0;
  return linalg::rank(coords.matrix(cols));
}

inline bool in_span(const gb::Element& v, const std::vector<gb::Element>& gens, std::size_t rank,
                    const std::vector<int>& shifts, std::size_t nvars) {
  if (v.is_zero()) return true;
  auto d = v.degree(shifts);
  if (!d) return false;
  Coordinates coords(rank, shifts, nvars, *d);
  auto cols = degree_piece_spanners(gens, shifts, nvars, *d);
  std::size_t r0 = cols.empty() ? 0 : linalg::rank(coords.matrix(cols));
  cols.push_back(v);
  return linalg::rank(coords.matrix(cols)) == r0;
}

/// Random homogeneous polynomial vector of weighted degree d with small
/// integer coefficients.
inline gb::Element random_homogeneous(std::mt19937& rng, std::size_t rank,
                                      const std::vector<int>& shifts, std::size_t nvars, int d,
                                      int terms) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::uint32_t> comp(0, static_cast<std::uint32_t>(rank - 1));
  std::vector<gb::Term> out;
  for (int i = 0; i < terms; ++i) {
    std::uint32_t c = comp(rng);
    int s = c < shifts.size() ? shifts[c] : 0;
    auto mons = monomials_of_degree(nvars, d - s);
    if (mons.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    out.push_back({mons[pick(rng)], c, Rational(coef(rng))});
  }
  return gb::Element::from_terms(std::move(out));
}

inline nc::Word random_word(std::mt19937& rng, const std::vector<std::uint32_t>& letters, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  nc::Word w(static_cast<std::size_t>(len(rng)));
  for (auto& g : w) g = letters[pick(rng)];
  return w;
}

/// Small random almost-free resolution: 1-3 generators of degree 0, 1-2 of
/// degree -1 with random differentials, and possibly one of degree -2 whose
/// differential is a cycle of the form t*dt - dt*t plus a boundary.
inline nc::Resolution random_resolution(std::mt19937& rng) {
  std::uniform_int_distribution<int> n0(1, 3), n1(1, 2), n2(0, 1), coef(-2, 2), terms(1, 3);
  int k0 = n0(rng), k1 = n1(rng), k2 = n2(rng);
  std::vector<nc::Generator> gens;
  std::vector<std::uint32_t> zero, minus1;
  for (int i = 0; i < k0; ++i) {
    zero.push_back(static_cast<std::uint32_t>(gens.size()));
    gens.push_back({"a" + std::to_string(i), 0});
  }
  for (int i = 0; i < k1; ++i) {
    minus1.push_back(static_cast<std::uint32_t>(gens.size()));
    gens.push_back({"t" + std::to_string(i), -1});
  }
  for (int i = 0; i < k2; ++i) gens.push_back({"v" + std::to_string(i), -2});
  auto alphabet = nc::make_alphabet(gens);
  std::vector<nc::NCPoly> diffs(gens.size(), nc::NCPoly(alphabet));
  for (auto t : minus1) {
    int nt = terms(rng);
    for (int j = 0; j < nt; ++j) diffs[t].add_term(random_word(rng, zero, 3), Rational(coef(rng)));
  }
  if (k2 > 0) {
    nc::Resolution partial("partial", alphabet, diffs);
    std::uniform_int_distribution<std::size_t> pick(0, minus1.size() - 1);
    auto t = minus1[pick(rng)];
    auto tp = nc::NCPoly::generator(alphabet, t);
    nc::NCPoly cycle = nc::nc_mul(tp, diffs[t]) - nc::nc_mul(diffs[t], tp);
    // plus the boundary of a random degree -2 word u*t*w*t'
    nc::Word w = random_word(rng, zero, 1);
    w.push_back(minus1[pick(rng)]);
    auto tail = random_word(rng, zero, 1);
    w.insert(w.end(), tail.begin(), tail.end());
    w.push_back(minus1[pick(rng)]);
    cycle += Rational(coef(rng)) * nc::nc_d(nc::NCPoly::monomial(alphabet, w), partial);
    diffs.back() = cycle;
  }
  return nc::Resolution("random", alphabet, diffs);
}

/// Random element of a graded-commutative algebra: a sum of products of up to
/// `len` variables. Not homogeneous in general.
inline gc::CPoly random_cpoly(std::mt19937& rng, const gc::VariableSetPtr& vars, int nterms, int len) {
  std::uniform_int_distribution<int> coef(-3, 3), l(0, len);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(vars->size() - 1));
  gc::CPoly p(vars);
  for (int i = 0; i < nterms; ++i) {
    gc::CPoly term = gc::CPoly::constant(vars, Rational(coef(rng)));
    int k = l(rng);
    for (int j = 0; j < k; ++j) term = gc::c_mul(term, gc::CPoly::variable(vars, pick(rng)));
    p += term;
  }
  return p;
}

/// Random homogeneous element of cohomological degree `deg`, or zero if the
/// draws never hit that degree.
inline gc::CPoly random_homogeneous_cpoly(std::mt19937& rng, const gc::VariableSetPtr& vars, int deg,
                                          int nterms, int len) {
  gc::CPoly out(vars);
  for (int tries = 0; tries < 40 * nterms; ++tries) {
    auto p = random_cpoly(rng, vars, 1, len);
    if (!p.is_zero() && p.degree() == deg) out += p;
    if (static_cast<int>(out.terms().size()) >= nterms) break;
  }
  return out;
}

inline gb::Element var(std::size_t i) { return gb::Element::monomial(gb::Monomial::variable(i)); }

}  // namespace drep::testing
