// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <string>
#include <vector>

#include "gfc/group.hpp"
#include "gfc/moduli_point.hpp"

namespace gfc {

/// Double cover of the line y^2 = prod (x - r_k) over 3 or 4 distinct finite
/// roots. With 3 roots the fourth branch point sits at infinity; with 4
/// distinct roots infinity is unramified. Either way the effective branch set
/// has exactly 4 points, which is all the j-invariant needs.
class EllipticModel {
 public:
  explicit EllipticModel(std::vector<CycloElem> finite_roots);
  /// From 4 pairwise-distinct branch points (at most one infinite).
  static EllipticModel from_branch(const std::vector<P1Point>& branch);

  const std::vector<CycloElem>& finite_roots() const { return roots_; }
  bool branched_at_infinity() const { return roots_.size() == 3; }
  std::vector<P1Point> branch_points() const;  // always 4

  std::string str() const;  // "y^2 = (x - r1)(x - r2)..."

 private:
  std::vector<CycloElem> roots_;
};

/// j = 256*(L^2 - L + 1)^3 / (L^2*(L - 1)^2) where L is the cross-ratio of
/// the 4 branch points in a fixed order; the value is independent of the
/// ordering.
CycloElem j_invariant(const EllipticModel& e);

/// Complex-isomorphism test: exact equality of j-invariants.
bool isomorphic(const EllipticModel& e1, const EllipticModel& e2);

/// The elliptic quotient attached to one Fano line of H/K.
struct TCurve {
  std::array<int, 3> line;  // indices {i, j, r} with a_i* a_j* = a_r*
  EllipticModel model;      // branch set {mu_k : k not on the line}
};

/// The seven elliptic quotients of the genus-7 curve, one per Fano line of
/// fano_lines(k_subgroup()), in the canonical sorted line order.
std::vector<TCurve> t_curves(const ModuliPoint& mu);

/// "T{i}{j}" from the two smallest indices of the line.
std::string line_label(const std::array<int, 3>& line);

/// The explicitly quoted genus-1 curves at mu0. `e_as_printed` is
/// y^2 = x(x-1)(x - A(z^6)) exactly as displayed; the toolkit checks rather
/// than assumes its relation to the T-curves.
struct MuZeroCurves {
  EllipticModel e_as_printed;
  std::vector<EllipticModel> e1_to_e6;  // E1..E6
};
MuZeroCurves e_curves_mu0();

/// j-invariants of all C(7,4) = 35 four-point subsets of a 7-point branch
/// set, in lexicographic subset order over the sorted points.
std::vector<CycloElem> thirty_five_factors(const BranchSet& branch);

}  // namespace gfc
