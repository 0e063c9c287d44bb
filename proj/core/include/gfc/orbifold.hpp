// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "gfc/group.hpp"
#include "gfc/rational.hpp"

namespace gfc {

/// Genus plus cone-point orders of a quotient orbifold.
struct OrbSignature {
  int genus = 0;
  std::vector<int> cone_orders;  // sorted ascending

  bool operator==(const OrbSignature& o) const = default;
  std::string str() const;
  /// Orbifold Euler characteristic 2 - 2g - sum(1 - 1/n).
  Rational chi() const;
};

/// Genus and cone data of the quotient of the genus-49 curve by a subgroup J
/// of the deck group H. The degree-|H/J| cover of the sphere is ramified
/// (index 2) over the branch point mu_k exactly when a_k lies outside J;
/// when a_k lies in J its |H/J| preimages are cone points of order 2.
OrbSignature quotient_genus_and_cones(const Subgroup& j);

/// The subgroup of H generated by k and the listed generators a_i: the
/// preimage of a subgroup of H/k named by involution indices.
Subgroup preimage_with(const Subgroup& k, const std::vector<int>& extra_indices);

/// Fixed points of the involution a_r* on the genus-7 quotient by the free
/// order-8 subgroup k: the |H|/|<k, a_r>| = 4 ramification points above mu_r.
/// Throws degenerate_input when r is out of range, k is not free of order 8,
/// or a_r lies in k.
int fixed_point_count(int r, const Subgroup& k);

/// Signature of the quotient of the sphere-with-seven-order-2-cone-points
/// (cone set = 7th roots of unity) by the rotation x -> z*x: genus 0, one
/// order-2 point (the single rotation orbit of the cone set) and two order-7
/// points (the rotation's fixed points 0 and infinity). The orbit and fixed
/// point structure is recomputed exactly over Q(zeta_7), not assumed.
OrbSignature rotation_quotient_signature();

/// The two Riemann-Hurwitz-consistent candidates for the quotient of a
/// genus-7 surface by Z_2^3: sphere with seven order-2 cones or torus with
/// three. Both have chi_orb = -3/2; an order-7 symmetry permuting the cone
/// points forces the sphere case, because 3 points under an order-7
/// permutation would all be fixed.
struct SphereDichotomy {
  OrbSignature sphere_case;
  OrbSignature torus_case;
  Rational expected_chi;          // chi(genus 7) / 8 = -3/2
  bool both_chi_consistent;
  int torus_orbit_forced_fixed;   // cone points an order-7 map must fix: 3
};
SphereDichotomy sphere_quotient_dichotomy();

}  // namespace gfc
