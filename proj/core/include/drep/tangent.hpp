// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

// Derived tangent spaces at a representation rho : A -> End(k^n) computed
// from the complex of rho-twisted derivations of a resolution R, and the
// Koszul complex computing Hochschild cohomology of a polynomial algebra with
// coefficients in End(k^n), used as an independent cross-check.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drep/linalg.hpp"
#include "drep/ncalg.hpp"

namespace drep::tangent {

/// Values on the degree-0 generators; negative generators map to zero.
struct Representation {
  std::size_t n = 0;
  std::map<std::string, linalg::Matrix> values;
};

struct RepViolation {
  std::string generator;
  std::string message;
  std::optional<linalg::Matrix> residue;
};

struct RepReport {
  std::vector<RepViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks shapes, coverage of the degree-0 generators, and that every
/// degree -1 relation evaluates to zero.
RepReport validate_rep(const nc::Resolution& res, const Representation& rho);

/// rho applied to a polynomial; words containing a negative generator vanish.
linalg::Matrix evaluate(const nc::Resolution& res, const Representation& rho, const nc::NCPoly& p);

struct DerPiece {
  int m = 0;
  std::vector<std::uint32_t> generators;  // generators of degree -m
  std::size_t dim = 0;                    // n^2 * generators.size()
};

/// Piece m has basis (generator, matrix unit E_ab), generator-major then
/// row-major; deltas[m] maps piece m to piece m + 1.
struct DerComplex {
  std::size_t n = 0;
  std::vector<DerPiece> pieces;
  std::vector<linalg::Matrix> deltas;
};

/// Throws Error for an invalid representation.
DerComplex der_complex(const nc::Resolution& res, const Representation& rho);

struct TangentCohomology {
  std::vector<std::size_t> dims;                          // dim T^i
  std::vector<std::vector<std::vector<Rational>>> bases;  // cocycle representatives
};

TangentCohomology tangent_cohomology(const nc::Resolution& res, const Representation& rho);
TangentCohomology cohomology_of(const DerComplex& complex);

struct KoszulDims {
  std::vector<std::size_t> hh;  // dim HH^p, p = 0..d
  std::size_t z1 = 0;           // 1-cocycles (derivations)
};

/// Koszul complex M (x) Lambda^p(k^d), M = Mat(n), with differential
/// m (x) e_I -> sum_i [X_i, m] (x) e_i ^ e_I. Throws Error on non-commuting input.
KoszulDims hh_koszul(const std::vector<linalg::Matrix>& xs);

struct P2Row {
  std::string tangent_label;
  std::size_t tangent = 0;
  std::string oracle_label;
  std::size_t oracle = 0;
  bool agree() const { return tangent == oracle; }
};

struct P2Report {
  std::vector<P2Row> rows;
  bool ok() const;
};

/// Compares T^0 with Z^1 and T^i with HH^{i+1}. `d` declares the source to be
/// the polynomial algebra on its d degree-0 generators; Error if it has a
/// different number of them.
P2Report check_p2(const nc::Resolution& res, const Representation& rho, std::size_t d);

}  // namespace drep::tangent
