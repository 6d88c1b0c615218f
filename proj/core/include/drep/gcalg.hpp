// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

// Graded-commutative DG polynomial algebras: a polynomial ring on the
// even-degree variables tensored with an exterior algebra on the odd ones.
// Products follow the Koszul sign rule xy = (-1)^{|x||y|} yx.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "drep/rational.hpp"

namespace drep::gc {

struct Variable {
  std::string name;
  int degree = 0;
  bool odd() const { return degree % 2 != 0; }

  friend bool operator==(const Variable&, const Variable&) = default;
};

class VariableSet {
 public:
  explicit VariableSet(std::vector<Variable> variables);

  std::size_t size() const { return variables_.size(); }
  const Variable& operator[](std::size_t i) const { return variables_[i]; }
  const std::vector<Variable>& variables() const { return variables_; }
  std::optional<std::uint32_t> find(const std::string& name) const;

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.variables_ == b.variables_;
  }

 private:
  std::vector<Variable> variables_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

VariableSetPtr make_variables(std::vector<Variable> variables);

/// Canonical monomial: even part as (variable, exponent) pairs sorted by
/// variable, odd part as a strictly increasing list of variables.
class Monomial {
 public:
  Monomial() = default;

  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& even() const { return even_; }
  const std::vector<std::uint32_t>& odd() const { return odd_; }
  int degree() const { return degree_; }
  bool is_unit() const { return even_.empty() && odd_.empty(); }

  /// Total number of factors counted with multiplicity.
  std::uint32_t length() const;

  /// The factor list in canonical order: evens (repeated), then odds.
  std::vector<std::uint32_t> factors() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  friend struct MonomialBuilder;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> even_;
  std::vector<std::uint32_t> odd_;
  int degree_ = 0;
};

/// Order: higher cohomological degree first, then odd part lexicographic,
/// then even exponent vector lexicographic (larger exponent first).
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct SignedMonomial {
  int sign = 0;  // +1, -1, or 0 when the product vanishes
  Monomial monomial;
};

/// Normalizes a listed product of variables. Throws Error on unknown variables.
SignedMonomial normalize(const VariableSet& vars, const std::vector<std::uint32_t>& factors);

/// Product of two canonical monomials with its Koszul sign.
SignedMonomial multiply(const VariableSet& vars, const Monomial& a, const Monomial& b);

class CPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  explicit CPoly(VariableSetPtr vars);

  static CPoly constant(VariableSetPtr vars, const Rational& c);
  static CPoly variable(VariableSetPtr vars, std::uint32_t index);
  static CPoly monomial(VariableSetPtr vars, Monomial m, const Rational& c = 1);

  const VariableSetPtr& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c);
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const Rational& s);

  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(const Rational& s, CPoly a) { return a *= s; }
  friend bool operator==(const CPoly& a, const CPoly& b);

 private:
  void check_same_variables(const CPoly& o) const;

  VariableSetPtr vars_;
  TermMap terms_;
};

/// Graded-commutative product. Throws Error if the variable sets differ.
CPoly c_mul(const CPoly& p, const CPoly& q);

class DGCommPresentation {
 public:
  DGCommPresentation(VariableSetPtr vars, std::vector<CPoly> diffs);

  const VariableSetPtr& variables() const { return vars_; }
  const CPoly& diff(std::uint32_t v) const { return diffs_[v]; }
  const std::vector<CPoly>& diffs() const { return diffs_; }

 private:
  VariableSetPtr vars_;
  std::vector<CPoly> diffs_;
};

CPoly c_d(const CPoly& p, const DGCommPresentation& pres);

/// Checks degree +1, vanishing on degree-0 variables and d^2 = 0.
/// Returns one message per violation.
std::vector<std::string> validate_presentation(const DGCommPresentation& pres);

/// Monomials in the negative-degree variables of total degree -m, in canonical order.
std::vector<Monomial> component_basis(const DGCommPresentation& pres, int m);

std::string to_string(const VariableSet& vars, const Monomial& m);
std::string to_string(const CPoly& p);

}  // namespace drep::gc
