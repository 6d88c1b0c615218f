// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include "drep/ncalg.hpp"

#include <algorithm>
#include <sstream>

namespace drep::nc {

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  for (std::uint32_t i = 0; i < generators_.size(); ++i) {
    auto [it, inserted] = index_.emplace(generators_[i].name, i);
    if (!inserted) throw Error("duplicate generator '" + generators_[i].name + "'");
  }
}

std::optional<std::uint32_t> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AlphabetPtr make_alphabet(std::vector<Generator> generators) {
  return std::make_shared<const Alphabet>(std::move(generators));
}

bool WordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

int word_degree(const Alphabet& alphabet, const Word& w) {
  int deg = 0;
  for (auto g : w) deg += alphabet.degree(g);
  return deg;
}

NCPoly::NCPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw Error("NCPoly requires an alphabet");
}

NCPoly NCPoly::unit(AlphabetPtr alphabet) { return monomial(std::move(alphabet), {}); }

NCPoly NCPoly::generator(AlphabetPtr alphabet, std::uint32_t index) {
  if (index >= alphabet->size()) throw Error("generator index out of range");
  return monomial(std::move(alphabet), {index});
}

NCPoly NCPoly::monomial(AlphabetPtr alphabet, Word w, Rational coeff) {
  NCPoly p(std::move(alphabet));
  for (auto g : w)
    if (g >= p.alphabet_->size()) throw Error("word refers to an unknown generator");
  p.add_term(w, coeff);
  return p;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool NCPoly::is_homogeneous() const {
  std::optional<int> deg;
  for (const auto& [w, c] : terms_) {
    int d = word_degree(*alphabet_, w);
    if (deg && *deg != d) return false;
    deg = d;
  }
  return true;
}

std::optional<int> NCPoly::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return word_degree(*alphabet_, terms_.begin()->first);
}

void NCPoly::check_same_alphabet(const NCPoly& o) const {
  if (alphabet_ != o.alphabet_ && !(*alphabet_ == *o.alphabet_))
    throw Error("noncommutative polynomials over different generator sets");
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check_same_alphabet(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check_same_alphabet(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  return (a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_) && a.terms_ == b.terms_;
}

NCPoly nc_mul(const NCPoly& p, const NCPoly& q) {
  if (p.alphabet() != q.alphabet() && !(*p.alphabet() == *q.alphabet()))
    throw Error("nc_mul: operands over different generator sets");
  NCPoly r(p.alphabet());
  Word w;
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) {
      w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add_term(w, a * b);
    }
  return r;
}

Resolution::Resolution(std::string name, AlphabetPtr alphabet, std::vector<NCPoly> diffs)
    : name_(std::move(name)), alphabet_(std::move(alphabet)), diffs_(std::move(diffs)) {
  if (diffs_.size() != alphabet_->size())
    throw Error("resolution needs exactly one differential per generator");
  for (const auto& d : diffs_)
    if (d.alphabet() != alphabet_ && !(*d.alphabet() == *alphabet_))
      throw Error("differential written over a different generator set");
}

int Resolution::depth() const {
  int depth = 0;
  for (const auto& g : alphabet_->generators()) depth = std::max(depth, -g.degree);
  return depth;
}

bool operator==(const Resolution& a, const Resolution& b) {
  return *a.alphabet_ == *b.alphabet_ && a.diffs_ == b.diffs_;
}

NCPoly nc_d(const NCPoly& p, const Resolution& res) {
  const auto& alphabet = *res.alphabet();
  if (!(p.alphabet() == res.alphabet() || *p.alphabet() == alphabet))
    throw Error("nc_d: polynomial is not over the resolution's generators");
  NCPoly out(res.alphabet());
  Word w;
  for (const auto& [word, c] : p.terms()) {
    int prefix_degree = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      const NCPoly& dg = res.diff(word[i]);
      if (!dg.is_zero()) {
        Rational sign = (prefix_degree % 2 == 0) ? c : Rational(-c);
        for (const auto& [inner, a] : dg.terms()) {
          w.assign(word.begin(), word.begin() + i);
          w.insert(w.end(), inner.begin(), inner.end());
          w.insert(w.end(), word.begin() + i + 1, word.end());
          out.add_term(w, sign * a);
        }
      }
      prefix_degree += alphabet.degree(word[i]);
    }
  }
  return out;
}

ValidationReport validate_resolution(const Resolution& res) {
  ValidationReport report;
  const auto& alphabet = *res.alphabet();
  bool degrees_ok = true;
  for (std::uint32_t g = 0; g < alphabet.size(); ++g) {
    const auto& gen = alphabet[g];
    if (gen.degree > 0) {
      report.violations.push_back({Violation::Kind::PositiveDegree, g,
                                   "generator '" + gen.name + "' has positive degree " +
                                       std::to_string(gen.degree),
                                   std::nullopt});
      degrees_ok = false;
    }
    const NCPoly& d = res.diff(g);
    if (d.is_zero()) continue;
    if (gen.degree == 0) {
      report.violations.push_back({Violation::Kind::NonzeroOnDegreeZero, g,
                                   "degree-0 generator '" + gen.name + "' has nonzero differential",
                                   d});
      degrees_ok = false;
      continue;
    }
    if (!d.is_homogeneous()) {
      report.violations.push_back({Violation::Kind::InhomogeneousDifferential, g,
                                   "d(" + gen.name + ") is not homogeneous", d});
      degrees_ok = false;
      continue;
    }
    int deg = *d.degree();
    if (deg != gen.degree + 1) {
      report.violations.push_back(
          {Violation::Kind::WrongDifferentialDegree, g,
           "d(" + gen.name + ") has degree " + std::to_string(deg) + ", expected " +
               std::to_string(gen.degree + 1) + " (differential raises degree by " +
               std::to_string(deg - gen.degree) + ")",
           d});
      degrees_ok = false;
    }
  }
  if (!degrees_ok) return report;
  for (std::uint32_t g = 0; g < alphabet.size(); ++g) {
    NCPoly dd = nc_d(res.diff(g), res);
    if (!dd.is_zero())
      report.violations.push_back({Violation::Kind::SquareNonzero, g,
                                   "d^2(" + alphabet[g].name + ") = " + to_string(dd) + " != 0",
                                   dd});
  }
  return report;
}

std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& alphabet = *p.alphabet();
  for (const auto& [w, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || w.empty()) {
      out << drep::to_string(mag);
      need_star = true;
    }
    for (auto g : w) {
      if (need_star) out << "*";
      out << alphabet[g].name;
      need_star = true;
    }
  }
  return out.str();
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::PositiveDegree: return "positive-degree";
    case Violation::Kind::InhomogeneousDifferential: return "inhomogeneous-differential";
    case Violation::Kind::WrongDifferentialDegree: return "wrong-differential-degree";
    case Violation::Kind::NonzeroOnDegreeZero: return "nonzero-on-degree-zero";
    case Violation::Kind::SquareNonzero: return "d-squared-nonzero";
  }
  return "unknown";
}

}  // namespace drep::nc
