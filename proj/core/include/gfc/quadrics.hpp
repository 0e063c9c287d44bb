// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gfc/moduli_point.hpp"

namespace gfc {

/// The five diagonal quadrics cutting out the genus-49 curve in P^6:
/// row i (i = 1..5):  alpha_i*x1^2 + x2^2 + x_{i+2}^2 = 0 with
/// alpha = (1, mu4, mu5, mu6, mu7). Rows are stored as full coefficient
/// vectors over (x1^2, ..., x7^2).
class QuadricSystem {
 public:
  using Row = std::array<CycloElem, 7>;

  explicit QuadricSystem(const ModuliPoint& mu);

  const std::array<Row, 5>& rows() const { return rows_; }
  const CycloElem& alpha(int i) const;  // i in 1..5
  const ModuliPoint& mu() const { return mu_; }

  std::string str() const;

 private:
  ModuliPoint mu_;
  std::array<Row, 5> rows_;
};

inline QuadricSystem build_quadrics(const ModuliPoint& mu) { return QuadricSystem(mu); }

/// One vanishing pattern of the smoothness case analysis: "exactly the
/// coordinates in zero_set (bit j-1 = x_j) vanish".
struct VanishingCase {
  unsigned zero_set = 0;
  bool admissible = false;           // consistent with a nonzero solution
  std::string reason;                // why the pattern dies, when it does
  std::array<int, 5> minor_columns{};  // for admissible cases: a nonsingular 5x5 minor
  std::string minor_determinant;       // its symbolic determinant (nonzero by pattern + Omega)
};

/// Certificate that the 5x7 Jacobian of the quadric system has rank 5 at
/// every nonzero solution: all 2^7 vanishing patterns, each either refuted
/// symbolically or equipped with a nonsingular minor. `witness` is set (and
/// ok cleared) if some case cannot be discharged.
struct SmoothnessCertificate {
  bool ok = false;
  std::vector<VanishingCase> cases;
  std::optional<unsigned> witness;

  int admissible_count() const;
};

SmoothnessCertificate smoothness_certificate(const ModuliPoint& mu);

/// Witness for a candidate linear automorphism of the curve that permutes and
/// scales coordinates. Only squares of the scale factors appear: slot j of
/// the image reads sqrt(squared_scale[j-1]) * x_{source_of[j-1]}, so a
/// quadric pulls back by the substitution x_j^2 -> squared_scale[j] *
/// x_{source_of[j]}^2. Square roots themselves never enter.
struct LinearAutWitness {
  std::array<int, 7> source_of;            // coordinate permutation (1-based images)
  std::array<CycloElem, 7> squared_scale;  // all nonzero

  std::string str() const;
};

/// The order-7 lift at mu0: slot pattern (x7, c2*x1, x2, c4*x3, ..., c7*x6)
/// with c2^2 = A(z^6) and c_j^2 = -A(z^{j-1}) for j = 4..7.
LinearAutWitness t_hat_witness();
/// Same witness with the opposite sign choice on slots 4..7.
LinearAutWitness t_hat_witness_flipped();

/// The order-2 lift at mu0: slot pattern (x2, d2*x1, x7, d4*x6, d5*x5,
/// d6*x4, d7*x3) with d2^2 = d7^2 = A(z^6), d_j^2 = A(z^{j-1}) for j = 4..6.
LinearAutWitness u_witness();

/// True iff every quadric of build_quadrics(mu), pulled back through the
/// witness substitution, lies in the row space of the original coefficient
/// matrix over Q(zeta_7) - an exact Gaussian-elimination membership test.
bool verify_linear_aut(const ModuliPoint& mu, const LinearAutWitness& w);

/// Exact row-space membership helper (also used by tests): does v lie in the
/// span of rows?
bool in_row_space(const std::vector<std::array<CycloElem, 7>>& rows,
                  const std::array<CycloElem, 7>& v);

}  // namespace gfc
