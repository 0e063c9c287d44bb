// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>

#include "gfc/group.hpp"
#include "gfc/moduli_point.hpp"

namespace gfc {

/// CycloElem <-> JSON array of 6 strings "num/den".
std::string cyclo_to_json(const CycloElem& a);
CycloElem cyclo_from_json(const std::string& json_text);

/// P1Point <-> {"inf": true} or {"val": <CycloElem>}.
std::string p1_to_json(const P1Point& p);
P1Point p1_from_json(const std::string& json_text);

/// ModuliPoint <-> {"mu4": ..., "mu5": ..., "mu6": ..., "mu7": ...}.
std::string moduli_to_json(const ModuliPoint& mu);
ModuliPoint moduli_from_json(const std::string& json_text);

/// Subgroup -> sorted JSON array of canonical element masks (0..63).
std::string subgroup_to_json(const Subgroup& s);

/// Resolves a --mu argument: "mu0", "random" or "random:SEED" (seeded small
/// rationals, re-drawn until the tuple lies in Omega), a bare JSON array of 4
/// rationals or CycloElems, or the full JSON object form.
ModuliPoint parse_mu_argument(const std::string& arg);

/// Deterministic Omega point from a seed (small distinct rationals).
ModuliPoint random_omega_point(std::uint64_t seed);

/// Model dump for one quotient: quadrics, the 13 invariant monomials as
/// exponent vectors, the 35-relation system, and the fiber-product rows.
/// `quotient` is "K" or "Kstar"; text = false yields JSON.
std::string emit_model(const ModuliPoint& mu, const std::string& quotient, bool text);

}  // namespace gfc
