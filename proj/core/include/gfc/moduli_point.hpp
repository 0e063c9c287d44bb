// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "gfc/p1.hpp"

namespace gfc {

/// Parameter mu = (mu4, mu5, mu6, mu7) of the curve family: each coordinate
/// outside {0, 1} and all four pairwise distinct (membership in Omega). The
/// associated branch set is (inf, 0, 1, mu4, mu5, mu6, mu7), indexed 1..7.
class ModuliPoint {
 public:
  ModuliPoint(CycloElem mu4, CycloElem mu5, CycloElem mu6, CycloElem mu7);

  /// j in 4..7.
  const CycloElem& mu(int j) const;
  /// Branch slot j in 1..7: inf, 0, 1, mu4..mu7.
  P1Point branch_point(int slot) const;
  BranchSet branch_set() const;

  bool operator==(const ModuliPoint& o) const = default;
  bool operator<(const ModuliPoint& o) const;

  std::string str() const;

 private:
  CycloElem m_[4];
};

/// The Moebius map sending 1 -> inf, z -> 0, z^2 -> 1, i.e.
/// A(x) = (1+z)(x-z) / (z(x-1)).
const MoebiusMap& map_a();

/// A(p) for finite p, as a field element; p must not be 1.
CycloElem apply_a(const CycloElem& p);

/// mu0 = (A(z^3), A(z^4), A(z^5), A(z^6)), the parameter of the genus-7
/// Hurwitz curve.
const ModuliPoint& mu_zero();

/// The same point built from the closed-form fractions
/// (1+z)(z^{k-1}-1)/(z^k-1), k = 3..6; equals mu_zero() exactly.
ModuliPoint mu_zero_closed_form();

}  // namespace gfc
