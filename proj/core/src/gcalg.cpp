// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include "drep/gcalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace drep::gc {

VariableSet::VariableSet(std::vector<Variable> variables) : variables_(std::move(variables)) {
  for (std::uint32_t i = 0; i < variables_.size(); ++i) {
    auto [it, inserted] = index_.emplace(variables_[i].name, i);
    if (!inserted) throw Error("duplicate variable '" + variables_[i].name + "'");
  }
}

std::optional<std::uint32_t> VariableSet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VariableSetPtr make_variables(std::vector<Variable> variables) {
  return std::make_shared<const VariableSet>(std::move(variables));
}

struct MonomialBuilder {
  static Monomial make(std::vector<std::pair<std::uint32_t, std::uint32_t>> even,
                       std::vector<std::uint32_t> odd, int degree) {
    Monomial m;
    m.even_ = std::move(even);
    m.odd_ = std::move(odd);
    m.degree_ = degree;
    return m;
  }
};

std::uint32_t Monomial::length() const {
  std::uint32_t n = static_cast<std::uint32_t>(odd_.size());
  for (const auto& [v, e] : even_) n += e;
  return n;
}

std::vector<std::uint32_t> Monomial::factors() const {
  std::vector<std::uint32_t> f;
  for (const auto& [v, e] : even_) f.insert(f.end(), e, v);
  f.insert(f.end(), odd_.begin(), odd_.end());
  return f;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  if (a.odd() != b.odd())
    return std::lexicographical_compare(a.odd().begin(), a.odd().end(), b.odd().begin(),
                                        b.odd().end());
  const auto& ea = a.even();
  const auto& eb = b.even();
  std::size_t i = 0;
  for (; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first;
    if (ea[i].second != eb[i].second) return ea[i].second > eb[i].second;
  }
  return i < ea.size() && i == eb.size();
}

namespace {

SignedMonomial zero_monomial() { return {0, Monomial{}}; }

}  // namespace

SignedMonomial normalize(const VariableSet& vars, const std::vector<std::uint32_t>& factors) {
  std::vector<std::uint32_t> odd;
  std::map<std::uint32_t, std::uint32_t> even;
  int degree = 0;
  for (auto f : factors) {
    if (f >= vars.size()) throw Error("normalize: unknown variable index");
    degree += vars[f].degree;
    if (vars[f].odd())
      odd.push_back(f);
    else
      ++even[f];
  }
  // Sign of the permutation sorting the odd factors: parity of the inversion count.
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      if (odd[i] == odd[j]) return zero_monomial();
      if (odd[i] > odd[j]) ++inversions;
    }
  std::sort(odd.begin(), odd.end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ev(even.begin(), even.end());
  return {inversions % 2 == 0 ? 1 : -1, MonomialBuilder::make(std::move(ev), std::move(odd), degree)};
}

SignedMonomial multiply(const VariableSet&, const Monomial& a, const Monomial& b) {
  const auto& oa = a.odd();
  const auto& ob = b.odd();
  std::vector<std::uint32_t> odd;
  odd.reserve(oa.size() + ob.size());
  // Merge; each time an element of b overtakes the remaining elements of a,
  // it passes (remaining a) odd factors.
  std::size_t i = 0, j = 0, swaps = 0;
  while (i < oa.size() && j < ob.size()) {
    if (oa[i] == ob[j]) return zero_monomial();
    if (oa[i] < ob[j]) {
      odd.push_back(oa[i++]);
    } else {
      swaps += oa.size() - i;
      odd.push_back(ob[j++]);
    }
  }
  odd.insert(odd.end(), oa.begin() + i, oa.end());
  odd.insert(odd.end(), ob.begin() + j, ob.end());

  const auto& ea = a.even();
  const auto& eb = b.even();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> even;
  even.reserve(ea.size() + eb.size());
  i = j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      even.push_back(ea[i++]);
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      even.push_back(eb[j++]);
    } else {
      even.emplace_back(ea[i].first, ea[i].second + eb[j].second);
      ++i;
      ++j;
    }
  }
  return {swaps % 2 == 0 ? 1 : -1,
          MonomialBuilder::make(std::move(even), std::move(odd), a.degree() + b.degree())};
}

CPoly::CPoly(VariableSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw Error("CPoly requires a variable set");
}

CPoly CPoly::constant(VariableSetPtr vars, const Rational& c) {
  CPoly p(std::move(vars));
  p.add_term(Monomial{}, c);
  return p;
}

CPoly CPoly::variable(VariableSetPtr vars, std::uint32_t index) {
  if (index >= vars->size()) throw Error("variable index out of range");
  auto sm = normalize(*vars, {index});
  CPoly p(std::move(vars));
  p.add_term(sm.monomial, 1);
  return p;
}

CPoly CPoly::monomial(VariableSetPtr vars, Monomial m, const Rational& c) {
  CPoly p(std::move(vars));
  p.add_term(m, c);
  return p;
}

void CPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool CPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

std::optional<int> CPoly::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree();
}

void CPoly::check_same_variables(const CPoly& o) const {
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
    throw Error("commutative polynomials over different variable sets");
}

CPoly& CPoly::operator+=(const CPoly& o) {
  check_same_variables(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  check_same_variables(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CPoly& CPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool operator==(const CPoly& a, const CPoly& b) {
  return (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) && a.terms_ == b.terms_;
}

CPoly c_mul(const CPoly& p, const CPoly& q) {
  if (p.variables() != q.variables() && !(*p.variables() == *q.variables()))
    throw Error("c_mul: operands over different variable sets");
  CPoly r(p.variables());
  const auto& vars = *p.variables();
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) {
      auto sm = multiply(vars, a, b);
      if (sm.sign == 0) continue;
      r.add_term(sm.monomial, sm.sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  return r;
}

DGCommPresentation::DGCommPresentation(VariableSetPtr vars, std::vector<CPoly> diffs)
    : vars_(std::move(vars)), diffs_(std::move(diffs)) {
  if (diffs_.size() != vars_->size())
    throw Error("presentation needs exactly one differential per variable");
  for (const auto& d : diffs_)
    if (d.variables() != vars_ && !(*d.variables() == *vars_))
      throw Error("differential written over a different variable set");
}

CPoly c_d(const CPoly& p, const DGCommPresentation& pres) {
  const auto& vars = *pres.variables();
  if (p.variables() != pres.variables() && !(*p.variables() == vars))
    throw Error("c_d: polynomial is not over the presentation's variables");
  CPoly out(pres.variables());
  auto add_product = [&](const Monomial& left, const CPoly& middle, const Monomial& right,
                         const Rational& coeff) {
    for (const auto& [mid, cm] : middle.terms()) {
      auto lm = multiply(vars, left, mid);
      if (lm.sign == 0) continue;
      auto full = multiply(vars, lm.monomial, right);
      if (full.sign == 0) continue;
      Rational c = coeff * cm;
      if (lm.sign * full.sign < 0) c = -c;
      out.add_term(full.monomial, c);
    }
  };
  for (const auto& [m, c] : p.terms()) {
    const auto& even = m.even();
    const auto& odd = m.odd();
    auto odd_part = normalize(vars, odd).monomial;
    // d of the even part: sum over x of e_x * (E / x) * d(x), followed by the odd part.
    for (std::size_t i = 0; i < even.size(); ++i) {
      const auto& [v, e] = even[i];
      const CPoly& dv = pres.diff(v);
      if (dv.is_zero()) continue;
      std::vector<std::uint32_t> rest;
      for (std::size_t k = 0; k < even.size(); ++k)
        rest.insert(rest.end(), k == i ? even[k].second - 1 : even[k].second, even[k].first);
      auto left = normalize(vars, rest).monomial;
      add_product(left, dv, odd_part, c * static_cast<unsigned long>(e));
    }
    // E times d of the odd part; the sign alternates since every odd factor is odd.
    std::vector<std::uint32_t> even_factors;
    for (const auto& [v, e] : even) even_factors.insert(even_factors.end(), e, v);
    for (std::size_t i = 0; i < odd.size(); ++i) {
      const CPoly& dv = pres.diff(odd[i]);
      if (dv.is_zero()) continue;
      std::vector<std::uint32_t> prefix = even_factors;
      prefix.insert(prefix.end(), odd.begin(), odd.begin() + i);
      std::vector<std::uint32_t> suffix(odd.begin() + i + 1, odd.end());
      auto left = normalize(vars, prefix).monomial;
      auto right = normalize(vars, suffix).monomial;
      add_product(left, dv, right, i % 2 == 0 ? c : Rational(-c));
    }
  }
  return out;
}

std::vector<std::string> validate_presentation(const DGCommPresentation& pres) {
  std::vector<std::string> problems;
  const auto& vars = *pres.variables();
  for (std::uint32_t v = 0; v < vars.size(); ++v) {
    const CPoly& d = pres.diff(v);
    if (vars[v].degree > 0) problems.push_back("variable '" + vars[v].name + "' has positive degree");
    if (d.is_zero()) continue;
    if (vars[v].degree == 0) {
      problems.push_back("degree-0 variable '" + vars[v].name + "' has nonzero differential");
      continue;
    }
    auto deg = d.degree();
    if (!deg || *deg != vars[v].degree + 1)
      problems.push_back("d(" + vars[v].name + ") does not have degree " +
                         std::to_string(vars[v].degree + 1));
  }
  if (!problems.empty()) return problems;
  for (std::uint32_t v = 0; v < vars.size(); ++v) {
    CPoly dd = c_d(pres.diff(v), pres);
    if (!dd.is_zero()) problems.push_back("d^2(" + vars[v].name + ") = " + to_string(dd) + " != 0");
  }
  return problems;
}

std::vector<Monomial> component_basis(const DGCommPresentation& pres, int m) {
  const auto& vars = *pres.variables();
  std::vector<std::uint32_t> negative;
  for (std::uint32_t v = 0; v < vars.size(); ++v)
    if (vars[v].degree < 0) negative.push_back(v);
  std::vector<Monomial> out;
  if (m < 0) return out;
  std::vector<std::uint32_t> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int remaining) {
    if (remaining == 0) {
      out.push_back(normalize(vars, chosen).monomial);
      return;
    }
    if (pos == negative.size()) return;
    std::uint32_t v = negative[pos];
    int w = -vars[v].degree;
    int max_power = vars[v].odd() ? 1 : remaining / w;
    for (int e = 0; e <= max_power && e * w <= remaining; ++e) {
      chosen.insert(chosen.end(), e, v);
      rec(pos + 1, remaining - e * w);
      chosen.resize(chosen.size() - e);
    }
  };
  rec(0, m);
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

std::string to_string(const VariableSet& vars, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : m.even()) {
    if (!first) out << "*";
    first = false;
    out << vars[v].name;
    if (e > 1) out << "^" << e;
  }
  for (auto v : m.odd()) {
    if (!first) out << "*";
    first = false;
    out << vars[v].name;
  }
  return out.str();
}

std::string to_string(const CPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_unit()) {
      out << drep::to_string(mag);
    } else {
      if (mag != 1) out << drep::to_string(mag) << "*";
      out << to_string(*p.variables(), m);
    }
  }
  return out.str();
}

}  // namespace drep::gc
