// SPDX-License-Identifier: MIT
#include "gfc/p1.hpp"

#include <algorithm>

#include "gfc/errors.hpp"

namespace gfc {

const CycloElem& P1Point::value() const {
  if (inf_) throw degenerate_input("value() on the point at infinity");
  return v_;
}

MoebiusMap::MoebiusMap(CycloElem a, CycloElem b, CycloElem c, CycloElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero())
    throw degenerate_input("degenerate Moebius matrix (ad - bc = 0)");
}

MoebiusMap MoebiusMap::identity() {
  return MoebiusMap(CycloElem(1), CycloElem(0), CycloElem(0), CycloElem(1));
}

P1Point MoebiusMap::operator()(const P1Point& p) const {
  if (p.is_infinity()) {
    if (c_.is_zero()) return P1Point::infinity();
    return P1Point::finite(a_ / c_);
  }
  const CycloElem& x = p.value();
  CycloElem den = c_ * x + d_;
  if (den.is_zero()) return P1Point::infinity();
  return P1Point::finite((a_ * x + b_) / den);
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const {
  return MoebiusMap(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                    c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

MoebiusMap MoebiusMap::inverse() const {
  return MoebiusMap(d_, -b_, -c_, a_);
}

bool MoebiusMap::same_map(const MoebiusMap& o) const {
  // Cross products of all entry pairs vanish iff the matrices are proportional.
  const CycloElem* u[4] = {&a_, &b_, &c_, &d_};
  const CycloElem* v[4] = {&o.a_, &o.b_, &o.c_, &o.d_};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(*u[i] * *v[j] - *u[j] * *v[i]).is_zero()) return false;
  return true;
}

std::string MoebiusMap::str() const {
  return "[[" + a_.str() + ", " + b_.str() + "], [" + c_.str() + ", " + d_.str() + "]]";
}

MoebiusMap three_point_map(const P1Point& p, const P1Point& q, const P1Point& r) {
  if (p == q || p == r || q == r)
    throw degenerate_input("three_point_map needs pairwise-distinct points");
  const CycloElem one(1);
  if (p.is_infinity()) {
    // x -> (x - q)/(r - q)
    const CycloElem& qv = q.value();
    const CycloElem& rv = r.value();
    return MoebiusMap(one, -qv, CycloElem(0), rv - qv);
  }
  if (q.is_infinity()) {
    // x -> (r - p)/(x - p)
    const CycloElem& pv = p.value();
    const CycloElem& rv = r.value();
    return MoebiusMap(CycloElem(0), rv - pv, one, -pv);
  }
  if (r.is_infinity()) {
    // x -> (x - q)/(x - p)
    const CycloElem& pv = p.value();
    const CycloElem& qv = q.value();
    return MoebiusMap(one, -qv, one, -pv);
  }
  // x -> ((x - q)(r - p)) / ((x - p)(r - q))
  const CycloElem& pv = p.value();
  const CycloElem& qv = q.value();
  const CycloElem& rv = r.value();
  CycloElem rp = rv - pv, rq = rv - qv;
  return MoebiusMap(rp, -(qv * rp), rq, -(pv * rq));
}

CycloElem cross_ratio(const P1Point& p1, const P1Point& p2, const P1Point& p3,
                      const P1Point& p4) {
  if (p4 == p1 || p4 == p2 || p4 == p3)
    throw degenerate_input("cross_ratio needs pairwise-distinct points");
  MoebiusMap m = three_point_map(p1, p2, p3);
  P1Point img = m(p4);
  // p4 != p1 keeps the image finite.
  return img.value();
}

BranchSet::BranchSet(std::vector<P1Point> pts) : pts_(std::move(pts)) {
  if (pts_.size() != 7) throw degenerate_input("branch set must have exactly 7 points");
  std::sort(pts_.begin(), pts_.end());
  for (size_t i = 0; i + 1 < pts_.size(); ++i)
    if (pts_[i] == pts_[i + 1]) throw degenerate_input("branch set points must be distinct");
}

bool BranchSet::contains(const P1Point& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

bool BranchSet::set_equal(const BranchSet& o) const { return pts_ == o.pts_; }

BranchSet BranchSet::apply(const MoebiusMap& m) const {
  std::vector<P1Point> out;
  out.reserve(7);
  for (const auto& p : pts_) out.push_back(m(p));
  return BranchSet(std::move(out));
}

std::optional<MoebiusMap> branch_sets_equivalent(const BranchSet& s1, const BranchSet& s2) {
  const auto& a = s1.points();
  const auto& b = s2.points();
  MoebiusMap src = three_point_map(a[0], a[1], a[2]);
  for (size_t i = 0; i < 7; ++i)
    for (size_t j = 0; j < 7; ++j) {
      if (j == i) continue;
      for (size_t k = 0; k < 7; ++k) {
        if (k == i || k == j) continue;
        MoebiusMap tgt = three_point_map(b[i], b[j], b[k]);
        MoebiusMap cand = tgt.inverse().compose(src);
        if (s1.apply(cand).set_equal(s2)) return cand;
      }
    }
  return std::nullopt;
}

}  // namespace gfc
