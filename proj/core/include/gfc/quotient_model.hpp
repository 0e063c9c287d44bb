// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gfc/elliptic.hpp"
#include "gfc/group.hpp"
#include "gfc/quadrics.hpp"

namespace gfc {

/// Monomial in the affine chart x7 = 1: exponents over x1..x6.
using Monomial = std::array<int, 6>;

int monomial_degree(const Monomial& m);
std::string monomial_str(const Monomial& m);

/// The 13 generators t1..t13 of the K-invariant algebra, indexed 1..13:
/// t1..t6 = x1^2..x6^2, then
/// t7 = x1*x2*x5, t8 = x1*x2*x3*x6, t9 = x1*x4*x6, t10 = x1*x3*x4*x5,
/// t11 = x2*x4*x5*x6, t12 = x2*x3*x4, t13 = x3*x5*x6.
const std::array<Monomial, 13>& t_monomials();

/// Minimal generating set of the monomials of degree <= 4 fixed by the sign
/// action of a free order-8 subgroup, sorted by (degree, exponents). For
/// k_subgroup() this reproduces t_monomials() as a set.
std::vector<Monomial> invariant_monomials(const Subgroup& k);

/// The 30 binomial relations among t1..t13, as (lhs, rhs) index multisets.
const std::vector<std::pair<std::vector<int>, std::vector<int>>>& binomial_relations();

struct RelationReport {
  int binomial_checked = 0;
  int binomial_ok = 0;
  bool linear_ok = false;
  std::vector<std::string> failures;
  bool all_ok() const { return binomial_ok == binomial_checked && linear_ok; }
};

/// Verifies the full 35-relation system of the quotient model: each binomial
/// row as an exact monomial identity, and each of the 5 linear rows as the
/// matching quadric of build_quadrics(mu) under t_j = x_j^2, 1 = x7^2.
RelationReport verify_quotient_relations(const ModuliPoint& mu);

/// Signs (+1/-1) each of a1*, a2*, a3* puts on t7..t13, computed from
/// monomial parities.
std::array<std::array<int, 7>, 3> involution_signs();
/// The displayed sign table for the three generating involutions.
std::array<std::array<int, 7>, 3> displayed_involution_signs();

/// One row of the three-curve fiber-product model of the genus-7 quotient.
struct FiberRow {
  std::array<int, 3> line;
  EllipticModel model;
};

struct FiberProductModel {
  std::array<FiberRow, 3> rows;  // lines through the pairs (2,3), (1,2), (1,3)
};

/// The fiber-product equations of the quotient by k (k or k*): rows are the
/// elliptic quotients for the Fano lines through index pairs (2,3), (1,2)
/// and (1,3), branch sets {mu_k : k not on the line}.
FiberProductModel fiber_product_model(const ModuliPoint& mu, const Subgroup& k);

/// Comparison of the derived K*-quotient model against the displayed one
/// (whose first two right-hand sides coincide and cannot both be correct).
struct KStarComparison {
  FiberProductModel derived;
  std::array<EllipticModel, 3> displayed;
  std::array<bool, 3> row_matches;
  bool displayed_rows_repeat;  // rows 1 and 2 of the display are identical
};
KStarComparison compare_kstar_display(const ModuliPoint& mu);

}  // namespace gfc
