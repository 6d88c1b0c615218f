// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

// Matrix expansion of a free DG algebra. Each generator r of R becomes an
// n x n matrix of generators r_j_k of the same degree; a word r_1 ... r_m maps
// to the (j,k) entry of the corresponding product of generic matrices. The
// free algebra on the r_j_k with differential d(r_j_k) = f_jk(d r) represents
// the n-dimensional representation functor of R, and its graded-commutative
// quotient is the commutative DG algebra R_n.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "drep/gcalg.hpp"
#include "drep/ncalg.hpp"

namespace drep::expand {

/// Name of the expanded variable for generator g and 1-based indices j, k.
std::string variable_name(const std::string& generator, std::size_t j, std::size_t k);

/// Alphabet of r_j_k in generator-major, then row-major order.
nc::AlphabetPtr expanded_alphabet(const nc::Alphabet& source, std::size_t n);

/// Entry (j,k) (1-based) of the matrix product for a word of the source
/// alphabet; the empty word maps to delta_jk.
nc::NCPoly f_jk(const nc::Word& w, std::size_t j, std::size_t k, std::size_t n,
                const nc::AlphabetPtr& expanded);
nc::NCPoly f_jk(const nc::NCPoly& p, std::size_t j, std::size_t k, std::size_t n,
                const nc::AlphabetPtr& expanded);

/// Signed commutative image of a noncommutative polynomial whose generators
/// correspond one-to-one with `vars`.
gc::CPoly abelianize(const nc::NCPoly& p, const gc::VariableSetPtr& vars);

class ExpandedAlgebra {
 public:
  ExpandedAlgebra(nc::Resolution source, std::size_t n);

  std::size_t n() const { return n_; }
  const nc::Resolution& source() const { return source_; }
  /// The free DG algebra on the r_j_k (before abelianization).
  const nc::Resolution& free_algebra() const { return free_; }
  const gc::DGCommPresentation& presentation() const { return presentation_; }
  const gc::VariableSetPtr& variables() const { return presentation_.variables(); }

  std::uint32_t variable_index(std::uint32_t generator, std::size_t j, std::size_t k) const;
  std::uint32_t generator_of(std::uint32_t variable) const {
    return static_cast<std::uint32_t>(variable / (n_ * n_));
  }

  /// Indices of the degree-0 variables, in declaration order.
  const std::vector<std::uint32_t>& degree_zero_variables() const { return degree_zero_; }

 private:
  std::size_t n_;
  nc::Resolution source_;
  nc::Resolution free_;
  gc::DGCommPresentation presentation_;
  std::vector<std::uint32_t> degree_zero_;
};

/// Throws Error if the resolution fails validation or n == 0.
ExpandedAlgebra expand(const nc::Resolution& res, std::size_t n);

/// Generators of the ideal I with H^0 = S / I: d applied to each degree -1 basis monomial.
std::vector<gc::CPoly> h0_ideal(const ExpandedAlgebra& ea);

}  // namespace drep::expand
