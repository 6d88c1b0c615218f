// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

// Free graded noncommutative DG algebras and almost-free resolutions.
//
// Degrees are cohomological: generators live in degrees <= 0 and the
// differential raises degree by one. The differential extends to words by
//   d(uv) = d(u) v + (-1)^{|u|} u d(v).

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "drep/rational.hpp"

namespace drep::nc {

struct Generator {
  std::string name;
  int degree = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered set of generators; the declaration order fixes the word order.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::uint32_t> find(const std::string& name) const;
  int degree(std::uint32_t i) const { return generators_[i].degree; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.generators_ == b.generators_; }

 private:
  std::vector<Generator> generators_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<Generator> generators);

/// A word is a sequence of generator indices; the empty word is the unit.
using Word = std::vector<std::uint32_t>;

/// Degree-lexicographic: shorter words first, then lexicographic on indices.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

int word_degree(const Alphabet& alphabet, const Word& w);

class NCPoly {
 public:
  using TermMap = std::map<Word, Rational, WordLess>;

  explicit NCPoly(AlphabetPtr alphabet);

  static NCPoly unit(AlphabetPtr alphabet);
  static NCPoly generator(AlphabetPtr alphabet, std::uint32_t index);
  static NCPoly monomial(AlphabetPtr alphabet, Word w, Rational coeff = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Rational& c);

  /// True for the zero polynomial and for polynomials whose words share one degree.
  bool is_homogeneous() const;
  /// The common degree of all words; nullopt if zero or inhomogeneous.
  std::optional<int> degree() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& s);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const Rational& s, NCPoly a) { return a *= s; }
  friend NCPoly operator-(NCPoly a) { return a *= Rational(-1); }
  friend bool operator==(const NCPoly& a, const NCPoly& b);

 private:
  void check_same_alphabet(const NCPoly& o) const;

  AlphabetPtr alphabet_;
  TermMap terms_;
};

/// Concatenation product. Throws Error if the alphabets differ.
NCPoly nc_mul(const NCPoly& p, const NCPoly& q);

/// Free DG algebra: an alphabet with one differential value per generator.
class Resolution {
 public:
  Resolution(std::string name, AlphabetPtr alphabet, std::vector<NCPoly> diffs);

  const std::string& name() const { return name_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const NCPoly& diff(std::uint32_t generator) const { return diffs_[generator]; }
  const std::vector<NCPoly>& diffs() const { return diffs_; }

  /// Largest |degree| over all generators.
  int depth() const;

  friend bool operator==(const Resolution& a, const Resolution& b);

 private:
  std::string name_;
  AlphabetPtr alphabet_;
  std::vector<NCPoly> diffs_;
};

/// Graded Leibniz extension of the generator differentials.
NCPoly nc_d(const NCPoly& p, const Resolution& res);

struct Violation {
  enum class Kind {
    PositiveDegree,
    InhomogeneousDifferential,
    WrongDifferentialDegree,
    NonzeroOnDegreeZero,
    SquareNonzero,
  };
  Kind kind;
  std::uint32_t generator;
  std::string message;
  std::optional<NCPoly> residue;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the almost-free DG axioms; never throws for violations.
ValidationReport validate_resolution(const Resolution& res);

/// "2*x*y - 1/2*t"; "0" for zero; "1" for the unit word.
std::string to_string(const NCPoly& p);
std::string to_string(Violation::Kind kind);

}  // namespace drep::nc
