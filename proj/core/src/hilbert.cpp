// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

// Hilbert series of monomial submodules by pivot recursion:
// HN(I) = HN(I + (p)) + t^deg(p) * HN(I : p).

#include <algorithm>
#include <bit>

#include "drep/groebner.hpp"

namespace drep::gb {

namespace {

using Series = std::vector<Integer>;

void add_shifted(Series& acc, const Series& s, std::size_t shift, int sign = 1) {
  if (acc.size() < s.size() + shift) acc.resize(s.size() + shift, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (sign > 0)
      acc[i + shift] += s[i];
    else
      acc[i + shift] -= s[i];
  }
}

// s * (1 - t^d)
Series times_one_minus(const Series& s, std::size_t d) {
  Series out = s;
  add_shifted(out, s, d, -1);
  return out;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(g);
  }
  gens = std::move(kept);
}

Series numerator(std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  minimalize(gens);
  if (gens.front().degree == 0) return {0};

  // Pairwise coprime generators: a complete intersection.
  std::uint64_t seen = 0;
  bool disjoint = true;
  for (const auto& g : gens) {
    if (seen & g.mask) {
      disjoint = false;
      break;
    }
    seen |= g.mask;
  }
  if (disjoint) {
    Series s{1};
    for (const auto& g : gens) s = times_one_minus(s, g.degree);
    return s;
  }

  // Pivot on the variable that occurs in the most generators.
  std::array<unsigned, kMaxVars> count{};
  for (const auto& g : gens)
    for (std::uint64_t m = g.mask; m; m &= m - 1) ++count[std::countr_zero(m)];
  std::size_t var = 0;
  for (std::size_t i = 1; i < kMaxVars; ++i)
    if (count[i] > count[var]) var = i;
  // Exponent: the smallest positive exponent among generators containing var.
  unsigned e = kMaxExponent;
  for (const auto& g : gens)
    if (g.exp[var]) e = std::min<unsigned>(e, g.exp[var]);
  Monomial pivot = Monomial::variable(var, e);

  std::vector<Monomial> sum;
  sum.reserve(gens.size() + 1);
  for (const auto& g : gens)
    if (!divides(pivot, g)) sum.push_back(g);
  sum.push_back(pivot);

  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(var, g.exp[var] > e ? g.exp[var] - e : 0);
    colon.push_back(q);
  }

  Series out = numerator(std::move(sum));
  add_shifted(out, numerator(std::move(colon)), e);
  while (out.size() > 1 && sgn(out.back()) == 0) out.pop_back();
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

std::vector<Integer> hilbert_numerator(const GroebnerBasis& gb, std::size_t nvars) {
  (void)nvars;
  auto leads = gb.leading_monomials();
  Series total{0};
  for (std::size_t c = 0; c < gb.rank(); ++c) {
    int shift = c < gb.shifts().size() ? gb.shifts()[c] : 0;
    if (shift < 0) throw Error("Hilbert series needs non-negative module shifts");
    add_shifted(total, numerator(leads[c]), static_cast<std::size_t>(shift));
  }
  while (total.size() > 1 && sgn(total.back()) == 0) total.pop_back();
  return total;
}

std::vector<Integer> hilbert_from_numerator(const std::vector<Integer>& numerator,
                                            std::size_t nvars, int up_to) {
  std::vector<Integer> out;
  for (int d = 0; d <= up_to; ++d) {
    Integer v = 0;
    for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= d; ++i) {
      long r = d - static_cast<long>(i);
      if (nvars == 0) {
        if (r == 0) v += numerator[i];
      } else {
        v += numerator[i] * binomial(static_cast<long>(nvars) - 1 + r, static_cast<long>(nvars) - 1);
      }
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Integer> hilbert_function(const ModulePresentation& mp, std::size_t nvars, int up_to,
                                      const GroebnerOptions& options) {
  if (!mp.is_homogeneous()) throw Error("Hilbert function needs a homogeneous presentation");
  GroebnerOptions opts = options;
  if (!opts.degree_bound || *opts.degree_bound > up_to) opts.degree_bound = up_to;
  auto gb = buchberger(mp.rank(), mp.generator_degrees, mp.relations, opts);
  return hilbert_from_numerator(hilbert_numerator(gb, nvars), nvars, up_to);
}

}  // namespace drep::gb
