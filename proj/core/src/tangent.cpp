// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include "drep/tangent.hpp"

#include <algorithm>
#include <bit>

namespace drep::tangent {

namespace {

using linalg::Matrix;

// Values indexed by generator; empty optional for negative generators.
std::vector<std::optional<Matrix>> values_by_index(const nc::Resolution& res, const Representation& rho) {
  const auto& alphabet = *res.alphabet();
  std::vector<std::optional<Matrix>> out(alphabet.size());
  for (std::uint32_t g = 0; g < alphabet.size(); ++g) {
    if (alphabet.degree(g) != 0) continue;
    auto it = rho.values.find(alphabet[g].name);
    if (it == rho.values.end()) throw Error("representation has no value for generator " + alphabet[g].name);
    out[g] = it->second;
  }
  return out;
}

Matrix word_value(const std::vector<std::optional<Matrix>>& vals, std::size_t n, const nc::Word& w,
                  std::size_t begin, std::size_t end) {
  Matrix m = Matrix::identity(n);
  for (std::size_t i = begin; i < end; ++i) m = m * *vals[w[i]];
  return m;
}

std::size_t rank_of(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return linalg::rank(m);
}

}  // namespace

RepReport validate_rep(const nc::Resolution& res, const Representation& rho) {
  RepReport report;
  const auto& alphabet = *res.alphabet();
  if (rho.n == 0) report.violations.push_back({"", "matrix size must be positive", std::nullopt});
  for (const auto& [name, value] : rho.values) {
    auto g = alphabet.find(name);
    if (!g) {
      report.violations.push_back({name, "unknown generator " + name, std::nullopt});
    } else if (alphabet.degree(*g) != 0) {
      report.violations.push_back({name, "generator " + name + " has negative degree and maps to zero", std::nullopt});
    } else if (value.rows() != rho.n || value.cols() != rho.n) {
      report.violations.push_back({name, "value of " + name + " is not " + std::to_string(rho.n) + "x" +
                                             std::to_string(rho.n), std::nullopt});
    }
  }
  for (std::uint32_t g = 0; g < alphabet.size(); ++g)
    if (alphabet.degree(g) == 0 && !rho.values.count(alphabet[g].name))
      report.violations.push_back({alphabet[g].name, "no value for generator " + alphabet[g].name, std::nullopt});
  if (!report.ok()) return report;
  for (std::uint32_t g = 0; g < alphabet.size(); ++g) {
    if (alphabet.degree(g) != -1) continue;
    auto residue = evaluate(res, rho, res.diff(g));
    if (!residue.is_zero())
      report.violations.push_back({alphabet[g].name, "relation d" + alphabet[g].name + " does not vanish", residue});
  }
  return report;
}

Matrix evaluate(const nc::Resolution& res, const Representation& rho, const nc::NCPoly& p) {
  auto vals = values_by_index(res, rho);
  Matrix out(rho.n, rho.n);
  for (const auto& [w, c] : p.terms()) {
    bool negative = std::any_of(w.begin(), w.end(), [&](std::uint32_t g) { return !vals[g]; });
    if (negative) continue;
    out = out + c * word_value(vals, rho.n, w, 0, w.size());
  }
  return out;
}

DerComplex der_complex(const nc::Resolution& res, const Representation& rho) {
  auto report = validate_rep(res, rho);
  if (!report.ok()) throw Error("invalid representation: " + report.violations.front().message);
  const auto& alphabet = *res.alphabet();
  const std::size_t n = rho.n, n2 = n * n;
  auto vals = values_by_index(res, rho);

  DerComplex cx;
  cx.n = n;
  const int depth = res.depth();
  for (int m = 0; m <= depth; ++m) {
    DerPiece piece;
    piece.m = m;
    for (std::uint32_t g = 0; g < alphabet.size(); ++g)
      if (alphabet.degree(g) == -m) piece.generators.push_back(g);
    piece.dim = n2 * piece.generators.size();
    cx.pieces.push_back(std::move(piece));
  }
  for (int m = 0; m < depth; ++m) {
    const auto& src = cx.pieces[m];
    const auto& tgt = cx.pieces[m + 1];
    Matrix delta(tgt.dim, src.dim);
    std::map<std::uint32_t, std::size_t> position;
    for (std::size_t i = 0; i < src.generators.size(); ++i) position[src.generators[i]] = i;
    const Rational sign = m % 2 == 0 ? Rational(-1) : Rational(1);
    for (std::size_t hi = 0; hi < tgt.generators.size(); ++hi) {
      for (const auto& [w, c] : res.diff(tgt.generators[hi]).terms()) {
        // Only words with one degree -m letter and degree-0 letters elsewhere survive.
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (alphabet.degree(w[i]) != -m) continue;
          bool rest_zero = true;
          for (std::size_t j = 0; j < w.size() && rest_zero; ++j)
            if (j != i && alphabet.degree(w[j]) != 0) rest_zero = false;
          if (!rest_zero) continue;
          Matrix pre = word_value(vals, n, w, 0, i);
          Matrix post = word_value(vals, n, w, i + 1, w.size());
          std::size_t col0 = position.at(w[i]) * n2;
          Rational coeff = sign * c;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              for (std::size_t p = 0; p < n; ++p) {
                if (sgn(pre(p, a)) == 0) continue;
                for (std::size_t q = 0; q < n; ++q) {
                  if (sgn(post(b, q)) == 0) continue;
                  delta(hi * n2 + p * n + q, col0 + a * n + b) += coeff * pre(p, a) * post(b, q);
                }
              }
        }
      }
    }
    cx.deltas.push_back(std::move(delta));
  }
  return cx;
}

TangentCohomology cohomology_of(const DerComplex& complex) {
  TangentCohomology out;
  const std::size_t count = complex.pieces.size();
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t dim = complex.pieces[i].dim;
    std::vector<std::vector<Rational>> kernel;
    if (i < complex.deltas.size() && complex.deltas[i].rows() > 0) {
      kernel = linalg::nullspace(complex.deltas[i]);
    } else {
      for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Rational> e(dim);
        e[j] = 1;
        kernel.push_back(std::move(e));
      }
    }
    // Extend a basis of the image of the incoming map by kernel vectors.
    std::vector<std::vector<Rational>> span;
    if (i > 0) {
      const auto& in = complex.deltas[i - 1];
      for (std::size_t c = 0; c < in.cols(); ++c) {
        std::vector<Rational> col(dim);
        for (std::size_t r = 0; r < dim; ++r) col[r] = in(r, c);
        span.push_back(std::move(col));
      }
    }
    auto rank_cols = [&](const std::vector<std::vector<Rational>>& cols) {
      if (cols.empty() || dim == 0) return std::size_t{0};
      Matrix m(dim, cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < dim; ++r) m(r, c) = cols[c][r];
      return linalg::rank(m);
    };
    std::size_t r0 = rank_cols(span);
    std::vector<std::vector<Rational>> basis;
    for (auto& v : kernel) {
      span.push_back(v);
      std::size_t r1 = rank_cols(span);
      if (r1 > r0) {
        r0 = r1;
        basis.push_back(std::move(v));
      } else {
        span.pop_back();
      }
    }
    out.dims.push_back(basis.size());
    out.bases.push_back(std::move(basis));
  }
  return out;
}

TangentCohomology tangent_cohomology(const nc::Resolution& res, const Representation& rho) {
  return cohomology_of(der_complex(res, rho));
}

KoszulDims hh_koszul(const std::vector<Matrix>& xs) {
  const std::size_t d = xs.size();
  if (d > 20) throw Error("too many variables for the Koszul complex");
  const std::size_t n = d ? xs.front().rows() : 0;
  for (const auto& x : xs)
    if (x.rows() != n || x.cols() != n) throw Error("Koszul input matrices must be square of one size");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!(xs[i] * xs[j] == xs[j] * xs[i])) throw Error("Koszul input matrices do not commute");
  const std::size_t n2 = n * n;

  // Subsets of {0..d-1} grouped by size, as bitmasks in increasing order.
  std::vector<std::vector<std::uint32_t>> subsets(d + 1);
  for (std::uint32_t s = 0; s < (1u << d); ++s) subsets[std::popcount(s)].push_back(s);
  std::vector<std::map<std::uint32_t, std::size_t>> pos(d + 1);
  for (std::size_t p = 0; p <= d; ++p)
    for (std::size_t i = 0; i < subsets[p].size(); ++i) pos[p][subsets[p][i]] = i;

  std::vector<std::size_t> ranks(d + 1, 0);
  for (std::size_t p = 0; p < d; ++p) {
    Matrix del(subsets[p + 1].size() * n2, subsets[p].size() * n2);
    for (std::size_t si = 0; si < subsets[p].size(); ++si) {
      std::uint32_t s = subsets[p][si];
      for (std::size_t i = 0; i < d; ++i) {
        if (s & (1u << i)) continue;
        int sign = std::popcount(s & ((1u << i) - 1)) % 2 ? -1 : 1;
        std::size_t ti = pos[p + 1].at(s | (1u << i));
        const auto& x = xs[i];
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            std::size_t col = si * n2 + a * n + b;
            // [X, E_ab] = X E_ab - E_ab X
            for (std::size_t r = 0; r < n; ++r) {
              if (sgn(x(r, a)) != 0) del(ti * n2 + r * n + b, col) += sign * x(r, a);
              if (sgn(x(b, r)) != 0) del(ti * n2 + a * n + r, col) -= sign * x(b, r);
            }
          }
      }
    }
    ranks[p] = rank_of(del);
  }
  KoszulDims out;
  for (std::size_t p = 0; p <= d; ++p) {
    std::size_t dim = subsets[p].size() * n2;
    std::size_t in = p > 0 ? ranks[p - 1] : 0;
    out.hh.push_back(dim - ranks[p] - in);
  }
  out.z1 = d >= 1 ? subsets[1].size() * n2 - ranks[1] : 0;
  return out;
}

bool P2Report::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const P2Row& r) { return r.agree(); });
}

P2Report check_p2(const nc::Resolution& res, const Representation& rho, std::size_t d) {
  const auto& alphabet = *res.alphabet();
  std::vector<Matrix> xs;
  for (std::uint32_t g = 0; g < alphabet.size(); ++g)
    if (alphabet.degree(g) == 0) {
      auto it = rho.values.find(alphabet[g].name);
      if (it == rho.values.end()) throw Error("representation has no value for generator " + alphabet[g].name);
      xs.push_back(it->second);
    }
  if (xs.size() != d)
    throw Error("the Koszul oracle needs a polynomial algebra on " + std::to_string(d) +
                " variables, but the resolution has " + std::to_string(xs.size()) + " degree-0 generators");
  auto t = tangent_cohomology(res, rho);
  auto k = hh_koszul(xs);
  P2Report report;
  report.rows.push_back({"T^0", t.dims.empty() ? 0 : t.dims[0], "Z^1", k.z1});
  const std::size_t top = std::max(t.dims.size(), d);
  for (std::size_t i = 1; i < top; ++i) {
    std::size_t ti = i < t.dims.size() ? t.dims[i] : 0;
    std::size_t hh = i + 1 < k.hh.size() ? k.hh[i + 1] : 0;
    report.rows.push_back({"T^" + std::to_string(i), ti, "HH^" + std::to_string(i + 1), hh});
  }
  return report;
}

}  // namespace drep::tangent
