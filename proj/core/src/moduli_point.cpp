// SPDX-License-Identifier: MIT
#include "gfc/moduli_point.hpp"

#include "gfc/errors.hpp"

namespace gfc {

ModuliPoint::ModuliPoint(CycloElem mu4, CycloElem mu5, CycloElem mu6, CycloElem mu7)
    : m_{std::move(mu4), std::move(mu5), std::move(mu6), std::move(mu7)} {
  const CycloElem one(1);
  for (int i = 0; i < 4; ++i) {
    if (m_[i].is_zero() || m_[i] == one)
      throw omega_violation("mu" + std::to_string(i + 4) + " must avoid {0, 1}");
    for (int j = i + 1; j < 4; ++j)
      if (m_[i] == m_[j])
        throw omega_violation("mu" + std::to_string(i + 4) + " collides with mu" +
                              std::to_string(j + 4));
  }
}

const CycloElem& ModuliPoint::mu(int j) const {
  if (j < 4 || j > 7) throw degenerate_input("mu index must be in 4..7");
  return m_[j - 4];
}

P1Point ModuliPoint::branch_point(int slot) const {
  switch (slot) {
    case 1:
      return P1Point::infinity();
    case 2:
      return P1Point::finite(CycloElem(0));
    case 3:
      return P1Point::finite(CycloElem(1));
    case 4:
    case 5:
    case 6:
    case 7:
      return P1Point::finite(m_[slot - 4]);
    default:
      throw degenerate_input("branch slot must be in 1..7");
  }
}

BranchSet ModuliPoint::branch_set() const {
  std::vector<P1Point> pts;
  for (int s = 1; s <= 7; ++s) pts.push_back(branch_point(s));
  return BranchSet(std::move(pts));
}

bool ModuliPoint::operator<(const ModuliPoint& o) const {
  for (int i = 0; i < 4; ++i) {
    int c = CycloElem::cmp(m_[i], o.m_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string ModuliPoint::str() const {
  return "(" + m_[0].str() + ", " + m_[1].str() + ", " + m_[2].str() + ", " + m_[3].str() + ")";
}

const MoebiusMap& map_a() {
  static const MoebiusMap a = [] {
    CycloElem z = CycloElem::zeta(1);
    CycloElem one(1);
    return MoebiusMap(one + z, -(z * (one + z)), z, -z);
  }();
  return a;
}

CycloElem apply_a(const CycloElem& p) {
  P1Point img = map_a()(P1Point::finite(p));
  return img.value();
}

const ModuliPoint& mu_zero() {
  static const ModuliPoint m0 = [] {
    return ModuliPoint(apply_a(CycloElem::zeta(3)), apply_a(CycloElem::zeta(4)),
                       apply_a(CycloElem::zeta(5)), apply_a(CycloElem::zeta(6)));
  }();
  return m0;
}

ModuliPoint mu_zero_closed_form() {
  CycloElem z = CycloElem::zeta(1);
  CycloElem one(1);
  auto frac = [&](long k) {
    return (one + z) * (z.pow(k - 1) - one) / (z.pow(k) - one);
  };
  return ModuliPoint(frac(3), frac(4), frac(5), frac(6));
}

}  // namespace gfc
