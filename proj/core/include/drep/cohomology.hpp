// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

// Cohomology of R_n degree by degree. The degree -m component F_m of R_n is a
// free module over S = k[degree-0 variables] with basis component_basis(m),
// and d is a matrix over S, so
//
//   H^{-m} = ker(d_m : F_m -> F_{m-1}) / im(d_{m+1} : F_{m+1} -> F_m)
//
// is computed with module Gröbner bases. Degree-0 variables have internal
// weight 1; negative generators get weights that make the differential
// homogeneous whenever possible.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "drep/expand.hpp"
#include "drep/gcalg.hpp"
#include "drep/groebner.hpp"

namespace drep::coh {

/// Internal weights of the source generators.
struct Grading {
  bool homogeneous = true;
  std::vector<int> weights;  // one per source generator
  std::string reason;        // why no consistent weights exist
};

/// Solves the weight constraints generator by generator, from degree 0 down.
/// A generator with zero differential gets weight 1.
Grading detect_grading(const nc::Resolution& res);

struct DegreeComponent {
  int m = 0;
  std::vector<gc::Monomial> basis;
  std::vector<int> weights;       // internal weight of each basis monomial
  gb::FreeModuleMap incoming;     // d_{m+1} : F_{m+1} -> F_m
  gb::FreeModuleMap outgoing;     // d_m : F_m -> F_{m-1}; rank-0 target for m = 0
};

struct CohomologyClass {
  int m = 0;
  gb::Element representative;  // element of F_m
};

struct HPresentation {
  int m = 0;
  bool homogeneous = true;   // internal grading consistent; presentation minimized
  bool complete = true;      // false when the degree bound cut a computation short
  std::optional<int> degree_bound;
  std::vector<gb::Element> cocycles;  // generator representatives in F_m
  gb::ModulePresentation module;      // H^{-m} = coker(relations) on the cocycles

  std::map<int, std::size_t> generator_counts() const;
  std::size_t generator_count() const { return cocycles.size(); }
};

struct EulerRow {
  int degree = 0;
  Integer chain_side;       // sum_m (-1)^m dim F_{m,d}
  Integer cohomology_side;  // sum_m (-1)^m dim H^{-m}_d
};

struct EulerReport {
  std::vector<EulerRow> rows;
  bool ok() const;
};

/// The cochain complex of R_n with cached components and Gröbner data.
class CochainComplex {
 public:
  explicit CochainComplex(const expand::ExpandedAlgebra& ea, gb::GroebnerOptions options = {});
  ~CochainComplex();
  CochainComplex(CochainComplex&&) noexcept;
  CochainComplex& operator=(CochainComplex&&) noexcept;

  const expand::ExpandedAlgebra& algebra() const { return ea_; }
  const Grading& grading() const { return grading_; }
  bool homogeneous() const { return grading_.homogeneous; }
  const gb::PolyRing& ring() const { return ring_; }
  std::size_t nvars() const { return ring_.size(); }
  /// Largest m with a nonzero component, or nullopt if components never stop
  /// (an even negative generator).
  std::optional<int> top_degree() const;

  const std::vector<gc::Monomial>& basis(int m) const;
  const std::vector<int>& weights(int m) const;
  /// d_m : F_m -> F_{m-1} for m >= 1.
  const gb::FreeModuleMap& differential(int m) const;
  DegreeComponent component(int m) const;

  /// Internal weight of a variable of R_n.
  int variable_weight(std::uint32_t var) const;

  gb::Element to_element(const gc::CPoly& p, int m) const;
  gc::CPoly to_cpoly(const gb::Element& v, int m) const;
  std::string format(const gb::Element& v, int m) const;

  /// Gröbner basis of im d_{m+1} in F_m (cached per degree bound).
  const gb::GroebnerBasis& boundaries(int m, std::optional<int> degree_bound = {}) const;
  bool is_cocycle(const gb::Element& v, int m) const;
  bool is_coboundary(const gb::Element& v, int m) const;

  /// Presentation of H^{-m}. Without `with_relations` only the cocycle
  /// generators are computed.
  HPresentation h_presentation(int m, std::optional<int> degree_bound = {},
                               bool with_relations = true) const;
  /// dim_k H^{-m}_d for d = 0..up_to, from cokernels of the adjacent differentials.
  std::vector<Integer> hilbert_function(int m, int up_to) const;
  bool vanishing(int m) const;
  CohomologyClass cup_product(const CohomologyClass& a, const CohomologyClass& b) const;
  EulerReport euler_check(int up_to) const;

  /// dim_k F_{m,d}.
  Integer component_dimension(int m, int d) const;

 private:
  struct Cache;
  expand::ExpandedAlgebra ea_;
  gb::GroebnerOptions options_;
  Grading grading_;
  gb::PolyRing ring_;
  std::vector<int> var_weight_;
  std::vector<int> s_index_;  // R_n variable -> S variable, or -1
  std::unique_ptr<Cache> cache_;
};

/// S-matrix of d : F_m -> F_{m-1} in the canonical bases (m >= 1).
gb::FreeModuleMap differential_matrix(const expand::ExpandedAlgebra& ea, int m);
HPresentation h_presentation(const expand::ExpandedAlgebra& ea, int m,
                             std::optional<int> degree_bound = {});
bool vanishing(const expand::ExpandedAlgebra& ea, int m);
EulerReport euler_check(const expand::ExpandedAlgebra& ea, int up_to);

/// Linear relation sum_i a_i * x_i = 0 (mod coboundaries) between unknown
/// classes x_i of H^{-m}, with polynomial coefficients a_i in S.
struct LinearRelation {
  std::vector<gb::Element> coefficients;
};

/// k-basis of tuples (x_1..x_k) of cocycles of internal weight w that satisfy
/// every relation modulo coboundaries, reduced modulo tuples of coboundaries.
std::vector<std::vector<gb::Element>> solve_relations(const CochainComplex& cx, int m, int w,
                                                      const std::vector<LinearRelation>& relations);

}  // namespace drep::coh
