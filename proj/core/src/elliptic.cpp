// SPDX-License-Identifier: MIT
#include "gfc/elliptic.hpp"

#include <algorithm>

#include "gfc/errors.hpp"

namespace gfc {

EllipticModel::EllipticModel(std::vector<CycloElem> finite_roots)
    : roots_(std::move(finite_roots)) {
  if (roots_.size() != 3 && roots_.size() != 4)
    throw degenerate_input("elliptic model needs 3 or 4 finite roots");
  std::sort(roots_.begin(), roots_.end());
  for (size_t i = 0; i + 1 < roots_.size(); ++i)
    if (roots_[i] == roots_[i + 1])
      throw degenerate_input("elliptic model roots must be distinct");
}

EllipticModel EllipticModel::from_branch(const std::vector<P1Point>& branch) {
  if (branch.size() != 4) throw degenerate_input("branch set must have 4 points");
  std::vector<CycloElem> roots;
  int infs = 0;
  for (const auto& p : branch) {
    if (p.is_infinity())
      ++infs;
    else
      roots.push_back(p.value());
  }
  if (infs > 1) throw degenerate_input("branch points must be distinct");
  return EllipticModel(std::move(roots));
}

std::vector<P1Point> EllipticModel::branch_points() const {
  std::vector<P1Point> out;
  if (branched_at_infinity()) out.push_back(P1Point::infinity());
  for (const auto& r : roots_) out.push_back(P1Point::finite(r));
  return out;
}

std::string EllipticModel::str() const {
  std::string s = "y^2 =";
  for (const auto& r : roots_) {
    if (r.is_zero()) {
      s += " x";
    } else {
      s += " (x - (" + r.str() + "))";
    }
  }
  return s;
}

CycloElem j_invariant(const EllipticModel& e) {
  auto b = e.branch_points();
  CycloElem lam = cross_ratio(b[0], b[1], b[2], b[3]);
  CycloElem one(1);
  CycloElem num = Rational(256) * (lam * lam - lam + one).pow(3);
  CycloElem den = lam * lam * (lam - one).pow(2);
  return num / den;
}

bool isomorphic(const EllipticModel& e1, const EllipticModel& e2) {
  return j_invariant(e1) == j_invariant(e2);
}

std::vector<TCurve> t_curves(const ModuliPoint& mu) {
  std::vector<TCurve> out;
  for (const auto& line : fano_lines(k_subgroup())) {
    std::vector<P1Point> branch;
    for (int k = 1; k <= 7; ++k)
      if (k != line[0] && k != line[1] && k != line[2]) branch.push_back(mu.branch_point(k));
    out.push_back(TCurve{line, EllipticModel::from_branch(branch)});
  }
  return out;
}

std::string line_label(const std::array<int, 3>& line) {
  auto s = line;
  std::sort(s.begin(), s.end());
  return "T" + std::to_string(s[0]) + std::to_string(s[1]);
}

MuZeroCurves e_curves_mu0() {
  CycloElem zero(0), one(1);
  auto zp = [](long k) { return CycloElem::zeta(k); };
  MuZeroCurves out{
      EllipticModel({zero, one, apply_a(zp(6))}),
      {
          EllipticModel({one, zp(1), zp(2), zp(3)}),
          EllipticModel({one, zp(1), zp(2), zp(4)}),
          EllipticModel({one, zp(1), zp(2), zp(5)}),
          EllipticModel({one, zp(1), zp(3), zp(4)}),
          EllipticModel({one, zp(1), zp(4), zp(5)}),
          EllipticModel({one, cyclo_cos(1), cyclo_cos(2), cyclo_cos(3)}),
      },
  };
  return out;
}

std::vector<CycloElem> thirty_five_factors(const BranchSet& branch) {
  const auto& pts = branch.points();
  std::vector<CycloElem> out;
  out.reserve(35);
  for (size_t a = 0; a < 7; ++a)
    for (size_t b = a + 1; b < 7; ++b)
      for (size_t c = b + 1; c < 7; ++c)
        for (size_t d = c + 1; d < 7; ++d)
          out.push_back(j_invariant(
              EllipticModel::from_branch({pts[a], pts[b], pts[c], pts[d]})));
  return out;
}

}  // namespace gfc
