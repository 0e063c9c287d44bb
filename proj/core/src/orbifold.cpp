// SPDX-License-Identifier: MIT
#include "gfc/orbifold.hpp"

#include <algorithm>
#include <sstream>

#include "gfc/errors.hpp"
#include "gfc/p1.hpp"

namespace gfc {

std::string OrbSignature::str() const {
  std::ostringstream os;
  os << "(" << genus;
  for (int n : cone_orders) os << "; " << n;
  // conventional rendering groups all cone orders after one semicolon
  std::string s = os.str();
  size_t first = s.find(';');
  if (first != std::string::npos) {
    std::string out = s.substr(0, first) + ";";
    std::istringstream rest(s.substr(first));
    std::string tok;
    bool first_num = true;
    while (std::getline(rest, tok, ';')) {
      if (tok.empty()) continue;
      out += (first_num ? "" : ",") + tok;
      first_num = false;
    }
    return out + ")";
  }
  return s + ")";
}

Rational OrbSignature::chi() const {
  Rational c = 2 - 2 * Rational(genus);
  for (int n : cone_orders) c -= Rational(n - 1, n);
  return c;
}

OrbSignature quotient_genus_and_cones(const Subgroup& j) {
  const long n = 64 / j.order();  // degree over the sphere
  long ramified = 0;
  long cones = 0;
  for (int k = 1; k <= 7; ++k) {
    if (j.contains(GroupElem::a(k)))
      cones += n;  // unramified fiber of order-2 cone points
    else
      ramified++;
  }
  // 2 - 2g = 2n - ramified * n/2
  Rational twog = Rational(2) - (Rational(2) * n - Rational(ramified) * Rational(n, 2));
  Rational g = twog / 2;
  if (g.get_den() != 1) throw degenerate_input("non-integral genus: impossible cover data");
  OrbSignature sig;
  sig.genus = static_cast<int>(g.get_num().get_si());
  sig.cone_orders.assign(static_cast<size_t>(cones), 2);
  return sig;
}

Subgroup preimage_with(const Subgroup& k, const std::vector<int>& extra_indices) {
  std::vector<GroupElem> gens = k.elements();
  for (int i : extra_indices) gens.push_back(GroupElem::a(i));
  return generate(gens);
}

int fixed_point_count(int r, const Subgroup& k) {
  if (r < 1 || r > 7) throw degenerate_input("involution index must be in 1..7");
  if (k.order() != 8 || !acts_freely(k))
    throw degenerate_input("fixed_point_count expects a free subgroup of order 8");
  if (k.contains(GroupElem::a(r)))
    throw degenerate_input("a_r lies in k, so a_r* is trivial on the quotient");
  return 64 / preimage_with(k, {r}).order();
}

OrbSignature rotation_quotient_signature() {
  // Cone set: the 7th roots of unity; rotation m(x) = z*x.
  std::vector<P1Point> cones;
  for (long k = 0; k < 7; ++k) cones.push_back(P1Point::finite(CycloElem::zeta(k)));
  MoebiusMap rot(CycloElem::zeta(1), CycloElem(0), CycloElem(0), CycloElem(1));

  // The cone set must form a single orbit.
  P1Point p = cones[0];
  int orbit = 0;
  do {
    p = rot(p);
    ++orbit;
  } while (p != cones[0] && orbit < 8);
  if (orbit != 7) throw degenerate_input("rotation orbit of the cone set is not of size 7");
  for (const auto& c : cones)
    if (rot(c) == c) throw degenerate_input("rotation unexpectedly fixes a cone point");

  // Fixed points of the rotation must be exactly {0, infinity}.
  P1Point zero = P1Point::finite(CycloElem(0));
  P1Point inf = P1Point::infinity();
  if (rot(zero) != zero || rot(inf) != inf)
    throw degenerate_input("rotation must fix 0 and infinity");

  OrbSignature sig;
  sig.genus = 0;
  sig.cone_orders = {2, 7, 7};
  return sig;
}

SphereDichotomy sphere_quotient_dichotomy() {
  SphereDichotomy d;
  d.sphere_case.genus = 0;
  d.sphere_case.cone_orders.assign(7, 2);
  d.torus_case.genus = 1;
  d.torus_case.cone_orders.assign(3, 2);
  d.expected_chi = Rational(2 - 2 * 7) / 8;
  d.both_chi_consistent =
      d.sphere_case.chi() == d.expected_chi && d.torus_case.chi() == d.expected_chi;
  // Orbits of an order-7 permutation have size 1 or 7; on 3 points all are fixed.
  d.torus_orbit_forced_fixed = 3;
  return d;
}

}  // namespace gfc
