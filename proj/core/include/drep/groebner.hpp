// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

// Gröbner bases for submodules of free modules over a polynomial ring
// S = k[x_1, ..., x_N] with all variables of weight 1. Free modules carry
// integer shifts so that homogeneous maps can be expressed; elements are
// homogeneous when deg(monomial) + shift(component) is constant.
//
// Arithmetic over Q is done on primitive integer vectors (content cleared);
// an optional single-word prime field serves as a fast pre-check.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drep/rational.hpp"

namespace drep::gb {

inline constexpr std::size_t kMaxVars = 64;
inline constexpr unsigned kMaxExponent = 127;

/// Dense exponent vector. Exponents are bounded by kMaxExponent.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint32_t degree = 0;
  std::uint64_t mask = 0;

  unsigned operator[](std::size_t i) const { return exp[i]; }
  void set(std::size_t i, unsigned e);

  static Monomial variable(std::size_t i, unsigned e = 1);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.exp == b.exp;
  }
};

bool divides(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);
/// a / b; requires divides(b, a).
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
/// Degree reverse lexicographic comparison: -1, 0 or 1.
int compare_degrevlex(const Monomial& a, const Monomial& b);

class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names);
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::string to_string(const Monomial& m) const;

 private:
  std::vector<std::string> names_;
};

struct Term {
  Monomial mon;
  std::uint32_t comp = 0;
  Rational coeff;
};

/// Element of a free module S^r; a polynomial when every component is 0.
/// Terms are kept sorted by component, then by descending degrevlex.
class Element {
 public:
  Element() = default;
  static Element from_terms(std::vector<Term> terms);
  static Element basis_vector(std::uint32_t comp, const Rational& c = 1);
  static Element monomial(const Monomial& m, std::uint32_t comp = 0, const Rational& c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient polynomial of one component, as a rank-1 element.
  Element component(std::uint32_t comp) const;
  /// Re-indexes components through `map` (must be defined for every used component).
  Element remap(const std::vector<std::uint32_t>& map) const;
  /// The common value of deg(mon) + shifts[comp], or nullopt if inhomogeneous.
  /// The zero element reports nullopt.
  std::optional<int> degree(const std::vector<int>& shifts) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& s);
  Element times(const Monomial& m) const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  /// Product of a polynomial (rank-1 element) with a module element.
  friend Element operator*(const Element& poly, const Element& v);
  friend bool operator==(const Element& a, const Element& b);

 private:
  std::vector<Term> terms_;
};

std::string to_string(const Element& e, const PolyRing& ring, bool module = true);

/// S-linear map between free modules, stored by columns.
struct FreeModuleMap {
  std::size_t target_rank = 0;
  std::vector<int> source_shifts;
  std::vector<int> target_shifts;
  std::vector<Element> columns;

  std::size_t source_rank() const { return columns.size(); }
  Element apply(const Element& v) const;
  /// Every nonzero column entry has the degree forced by the shifts.
  bool is_homogeneous() const;
};

/// outer ∘ inner.
FreeModuleMap compose(const FreeModuleMap& outer, const FreeModuleMap& inner);

enum class OrderKind { PositionOverTerm, TermOverPosition };
enum class Field { Rational, Prime };

inline constexpr std::uint32_t kPrime = 2147483647u;

struct GroebnerOptions {
  OrderKind order = OrderKind::PositionOverTerm;
  /// For homogeneous input: stop once every remaining S-pair exceeds this degree.
  std::optional<int> degree_bound;
  Field field = Field::Rational;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t chain_criterion = 0;
  std::size_t product_criterion = 0;
};

class ReducerBase;

/// Reduced Gröbner basis, monic over Q (over the prime field, coefficients are
/// residues in [0, p)).
class GroebnerBasis {
 public:
  GroebnerBasis();

  std::size_t rank() const { return rank_; }
  const std::vector<int>& shifts() const { return shifts_; }
  OrderKind order() const { return order_; }
  Field field() const { return field_; }
  const std::vector<Element>& elements() const { return elements_; }
  /// False when a degree bound stopped the computation with pairs left over.
  bool complete() const { return complete_; }
  bool homogeneous() const { return homogeneous_; }
  const GroebnerStats& stats() const { return stats_; }

  /// Remainder of full reduction; exact and linear in f over Q.
  Element normal_form(const Element& f) const;
  bool contains(const Element& f) const { return normal_form(f).is_zero(); }

  /// Leading monomials grouped by component.
  std::vector<std::vector<Monomial>> leading_monomials() const;
  /// Leading component and monomial of elements()[i] under the basis order.
  const std::pair<std::uint32_t, Monomial>& leads_of(std::size_t i) const { return leads_[i]; }

 private:
  friend struct GroebnerAccess;
  std::size_t rank_ = 0;
  std::vector<int> shifts_;
  OrderKind order_ = OrderKind::PositionOverTerm;
  Field field_ = Field::Rational;
  std::vector<Element> elements_;
  std::vector<std::pair<std::uint32_t, Monomial>> leads_;
  bool complete_ = true;
  bool homogeneous_ = true;
  GroebnerStats stats_;
  std::shared_ptr<const ReducerBase> reducer_;
};

/// Reduced Gröbner basis of the submodule of S^rank generated by `generators`.
/// `shifts` may be empty (all zero).
GroebnerBasis buchberger(std::size_t rank, std::vector<int> shifts,
                         const std::vector<Element>& generators,
                         const GroebnerOptions& options = {});

/// Convenience overload for ideals.
GroebnerBasis buchberger(const std::vector<Element>& polys, const GroebnerOptions& options = {});

Element normal_form(const Element& f, const GroebnerBasis& gb);

struct SyzygyResult {
  std::vector<Element> generators;
  bool complete = true;
};

/// Generators of ker(m) in the source module, computed from a Gröbner basis of
/// the graph of m under an elimination order. Homogeneous maps get a minimal
/// generating set.
SyzygyResult syzygies(const FreeModuleMap& m, const GroebnerOptions& options = {});

struct MinimalSelection {
  std::vector<std::size_t> kept;            // indices into the candidate list
  std::map<int, std::size_t> count_by_degree;
  bool complete = true;
};

/// Greedy graded selection: a candidate is kept when it is not in the
/// submodule generated by `relations` and the previously kept candidates.
/// The kept set minimally generates (candidates + relations) / relations.
/// Requires homogeneous input.
MinimalSelection select_minimal(std::size_t rank, std::vector<int> shifts,
                                const std::vector<Element>& relations,
                                const std::vector<Element>& candidates,
                                const GroebnerOptions& options = {});

/// Finitely presented graded module: coker of relations in S^g(shifts).
struct ModulePresentation {
  std::vector<int> generator_degrees;
  std::vector<Element> relations;

  std::size_t rank() const { return generator_degrees.size(); }
  bool is_homogeneous() const;
};

/// Hilbert numerator N(t) with HS = N(t) / (1 - t)^nvars.
std::vector<Integer> hilbert_numerator(const GroebnerBasis& gb, std::size_t nvars);

/// Coefficients of N(t) / (1 - t)^nvars in degrees 0..up_to.
std::vector<Integer> hilbert_from_numerator(const std::vector<Integer>& numerator,
                                            std::size_t nvars, int up_to);

/// dim_k of the degree-d piece of the presented module for d = 0..up_to.
/// Throws Error for inhomogeneous presentations.
std::vector<Integer> hilbert_function(const ModulePresentation& mp, std::size_t nvars, int up_to,
                                      const GroebnerOptions& options = {});

struct MinimalGenerators {
  std::map<int, std::size_t> count_by_degree;
  std::vector<std::size_t> generator_indices;  // presentation generators kept
  bool complete = true;
  std::size_t total() const;
};

/// Minimal generator counts per degree (graded Nakayama).
/// Throws Error for inhomogeneous presentations.
MinimalGenerators minimal_generators(const ModulePresentation& mp,
                                     const GroebnerOptions& options = {});

}  // namespace drep::gb
