// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gfc/moduli_point.hpp"

namespace gfc {

/// Permutation of the 7 branch slots (inf, 0, 1, mu4..mu7), 1-based images.
using SlotPerm = std::array<int, 7>;

SlotPerm slot_identity();
SlotPerm slot_compose(const SlotPerm& f, const SlotPerm& g);  // f after g
bool slot_is_transposition(const SlotPerm& p);
int slot_order(const SlotPerm& p);

/// Componentwise reciprocal (mu4..mu7 -> 1/mu4..1/mu7); stays in Omega.
ModuliPoint act_A(const ModuliPoint& mu);
/// (mu7/(mu7-1), mu7/(mu7-mu4), mu7/(mu7-mu5), mu7/(mu7-mu6)); stays in Omega.
ModuliPoint act_B(const ModuliPoint& mu);
/// Coordinate permutation: sigma maps positions {4,5,6,7} to themselves;
/// result coordinate j is mu_{sigma(j)}.
ModuliPoint act_sigma(const std::array<int, 4>& sigma, const ModuliPoint& mu);

/// Branch-slot permutations realized by the two generators: the generator A
/// renormalizes through x -> 1/x (slots 1 and 2 swap), B through
/// x -> mu7/(mu7 - x) (a 7-cycle).
SlotPerm slot_perm_A();
SlotPerm slot_perm_B();

/// The Moebius renormalization that realizes the action on branch sets.
MoebiusMap renormalizer_A();
MoebiusMap renormalizer_B(const ModuliPoint& mu);

/// Applies a word over {'A','B'} left-to-right ("AB" acts as B after A... the
/// leftmost letter acts first).
ModuliPoint apply_word(const std::string& word, const ModuliPoint& mu);
SlotPerm slot_perm_of_word(const std::string& word);

/// Size of the closure of {A, B} in the slot-permutation representation.
int group_order();

/// A word over {A,B} whose slot permutation equals p, if p lies in the
/// closure (it always does: the closure is the full symmetric group).
std::optional<std::string> word_for_slot_perm(const SlotPerm& p);

struct OrbitWitness {
  bool equivalent = false;
  std::string word;  // witnessing generator word when equivalent
};

/// Does mu_prime lie in the orbit of mu under the group generated by A and B?
/// Breadth-first over all 5040 slot permutations, re-deriving parameter
/// values along the words; exact comparisons only.
OrbitWitness equivalent(const ModuliPoint& mu, const ModuliPoint& mu_prime);

/// All distinct parameter values in the orbit of mu (at most 5040).
std::vector<ModuliPoint> orbit_values(const ModuliPoint& mu);

/// The parameter of the dual quotient: (mu6/mu5, mu7/mu5, mu4/mu5, 1/mu5).
ModuliPoint dual_mu(const ModuliPoint& mu);

/// The locus carrying the mirror symmetry of the branch set. Both sign
/// variants of the degree-2 coefficient of the sextic are evaluated; mu0
/// satisfies the +6 form exactly and the -6 form by a nonzero margin, so
/// holds() is decided by the +6 form and both values are exposed for
/// reporting.
struct ZetaConditionResult {
  bool mu6_is_mu5sq_over_mu4 = false;
  bool mu7_is_mu5sq = false;
  CycloElem sextic_plus6;   // mu5^6 - 5*mu5^4 + 6*mu5^2 - 1
  CycloElem sextic_minus6;  // mu5^6 - 5*mu5^4 - 6*mu5^2 - 1
  bool holds() const {
    return mu6_is_mu5sq_over_mu4 && mu7_is_mu5sq && sextic_plus6.is_zero();
  }
};
ZetaConditionResult zeta_condition(const ModuliPoint& mu);

}  // namespace gfc
