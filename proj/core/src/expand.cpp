// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include "drep/expand.hpp"

namespace drep::expand {

std::string variable_name(const std::string& generator, std::size_t j, std::size_t k) {
  return generator + "_" + std::to_string(j) + "_" + std::to_string(k);
}

nc::AlphabetPtr expanded_alphabet(const nc::Alphabet& source, std::size_t n) {
  std::vector<nc::Generator> gens;
  gens.reserve(source.size() * n * n);
  for (const auto& g : source.generators())
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k) gens.push_back({variable_name(g.name, j, k), g.degree});
  return nc::make_alphabet(std::move(gens));
}

nc::NCPoly f_jk(const nc::Word& w, std::size_t j, std::size_t k, std::size_t n,
                const nc::AlphabetPtr& expanded) {
  if (n == 0 || j < 1 || j > n || k < 1 || k > n)
    throw Error("f_jk: matrix index out of range");
  nc::NCPoly out(expanded);
  if (w.empty()) {
    if (j == k) out.add_term({}, 1);
    return out;
  }
  const std::size_t n2 = n * n;
  for (auto g : w)
    if ((static_cast<std::size_t>(g) + 1) * n2 > expanded->size())
      throw Error("f_jk: word refers to a generator outside the expanded alphabet");
  // Enumerate the internal indices s_1..s_{m-1} as an odometer.
  const std::size_t m = w.size();
  std::vector<std::size_t> s(m + 1, 1);
  s[0] = j;
  s[m] = k;
  nc::Word image(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i)
      image[i] = static_cast<std::uint32_t>(w[i] * n2 + (s[i] - 1) * n + (s[i + 1] - 1));
    out.add_term(image, 1);
    std::size_t pos = m - 1;
    while (pos >= 1) {
      if (s[pos] < n) {
        ++s[pos];
        break;
      }
      s[pos] = 1;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

nc::NCPoly f_jk(const nc::NCPoly& p, std::size_t j, std::size_t k, std::size_t n,
                const nc::AlphabetPtr& expanded) {
  nc::NCPoly out(expanded);
  for (const auto& [w, c] : p.terms()) out += c * f_jk(w, j, k, n, expanded);
  return out;
}

gc::CPoly abelianize(const nc::NCPoly& p, const gc::VariableSetPtr& vars) {
  if (p.alphabet()->size() != vars->size())
    throw Error("abelianize: generator and variable counts differ");
  gc::CPoly out(vars);
  for (const auto& [w, c] : p.terms()) {
    auto sm = gc::normalize(*vars, w);
    if (sm.sign == 0) continue;
    out.add_term(sm.monomial, sm.sign > 0 ? c : Rational(-c));
  }
  return out;
}

namespace {

nc::Resolution build_free(const nc::Resolution& source, std::size_t n) {
  auto alphabet = expanded_alphabet(*source.alphabet(), n);
  std::vector<nc::NCPoly> diffs;
  diffs.reserve(alphabet->size());
  for (std::uint32_t g = 0; g < source.alphabet()->size(); ++g)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k) diffs.push_back(f_jk(source.diff(g), j, k, n, alphabet));
  return nc::Resolution(source.name() + "_" + std::to_string(n), alphabet, std::move(diffs));
}

gc::DGCommPresentation build_presentation(const nc::Resolution& free) {
  std::vector<gc::Variable> vars;
  for (const auto& g : free.alphabet()->generators()) vars.push_back({g.name, g.degree});
  auto vs = gc::make_variables(std::move(vars));
  std::vector<gc::CPoly> diffs;
  diffs.reserve(vs->size());
  for (const auto& d : free.diffs()) diffs.push_back(abelianize(d, vs));
  return gc::DGCommPresentation(vs, std::move(diffs));
}

}  // namespace

ExpandedAlgebra::ExpandedAlgebra(nc::Resolution source, std::size_t n)
    : n_(n),
      source_(std::move(source)),
      free_(build_free(source_, n)),
      presentation_(build_presentation(free_)) {
  const auto& vars = *presentation_.variables();
  for (std::uint32_t v = 0; v < vars.size(); ++v)
    if (vars[v].degree == 0) degree_zero_.push_back(v);
}

std::uint32_t ExpandedAlgebra::variable_index(std::uint32_t generator, std::size_t j,
                                              std::size_t k) const {
  if (generator >= source_.alphabet()->size() || j < 1 || j > n_ || k < 1 || k > n_)
    throw Error("variable_index out of range");
  return static_cast<std::uint32_t>(generator * n_ * n_ + (j - 1) * n_ + (k - 1));
}

ExpandedAlgebra expand(const nc::Resolution& res, std::size_t n) {
  if (n == 0) throw Error("expand: matrix size must be at least 1");
  auto report = nc::validate_resolution(res);
  if (!report.ok()) throw Error("expand: invalid resolution: " + report.violations.front().message);
  return ExpandedAlgebra(res, n);
}

std::vector<gc::CPoly> h0_ideal(const ExpandedAlgebra& ea) {
  std::vector<gc::CPoly> out;
  const auto& pres = ea.presentation();
  for (const auto& b : gc::component_basis(pres, 1))
    out.push_back(gc::c_d(gc::CPoly::monomial(pres.variables(), b), pres));
  return out;
}

}  // namespace drep::expand
