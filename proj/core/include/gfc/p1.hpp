// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfc/cyclo.hpp"

namespace gfc {

/// Point of P^1 over Q(zeta_7): a finite value or the point at infinity.
class P1Point {
 public:
  P1Point() : inf_(true) {}  // infinity
  explicit P1Point(CycloElem v) : inf_(false), v_(std::move(v)) {}
  static P1Point infinity() { return P1Point(); }
  static P1Point finite(CycloElem v) { return P1Point(std::move(v)); }

  bool is_infinity() const { return inf_; }
  const CycloElem& value() const;  // requires a finite point

  bool operator==(const P1Point& o) const {
    if (inf_ != o.inf_) return false;
    return inf_ || v_ == o.v_;
  }
  bool operator!=(const P1Point& o) const { return !(*this == o); }
  bool operator<(const P1Point& o) const {  // infinity sorts first
    if (inf_ != o.inf_) return inf_;
    return !inf_ && v_ < o.v_;
  }

  std::string str() const { return inf_ ? "inf" : v_.str(); }

 private:
  bool inf_;
  CycloElem v_;
};

/// Moebius transformation x -> (a*x + b)/(c*x + d), stored as the matrix
/// [[a,b],[c,d]] with ad - bc != 0. Two maps are equal when the matrices are
/// proportional; composition is matrix product.
class MoebiusMap {
 public:
  MoebiusMap(CycloElem a, CycloElem b, CycloElem c, CycloElem d);
  static MoebiusMap identity();

  const CycloElem& a() const { return a_; }
  const CycloElem& b() const { return b_; }
  const CycloElem& c() const { return c_; }
  const CycloElem& d() const { return d_; }

  P1Point operator()(const P1Point& p) const;
  MoebiusMap compose(const MoebiusMap& o) const;  // *this after o
  MoebiusMap inverse() const;

  /// Projective equality: matrices proportional over Q(zeta_7).
  bool same_map(const MoebiusMap& o) const;

  std::string str() const;

 private:
  CycloElem a_, b_, c_, d_;
};

/// The unique map (up to scalar) sending p -> inf, q -> 0, r -> 1.
/// Throws degenerate_input when the three points are not pairwise distinct.
MoebiusMap three_point_map(const P1Point& p, const P1Point& q, const P1Point& r);

/// Cross-ratio: image of p4 under the normalization (p1,p2,p3) -> (inf,0,1).
/// The four points must be pairwise distinct; the result is never 0 or 1.
CycloElem cross_ratio(const P1Point& p1, const P1Point& p2, const P1Point& p3,
                      const P1Point& p4);

/// Unordered set of exactly 7 pairwise-distinct points of P^1: the branch
/// locus of a degree-2^6 cover of the sphere.
class BranchSet {
 public:
  explicit BranchSet(std::vector<P1Point> pts);  // validates size and distinctness
  const std::vector<P1Point>& points() const { return pts_; }
  bool contains(const P1Point& p) const;
  bool set_equal(const BranchSet& o) const;
  BranchSet apply(const MoebiusMap& m) const;

 private:
  std::vector<P1Point> pts_;  // kept sorted
};

/// Searches for a Moebius transformation carrying s1 onto s2 as sets. One
/// fixed triple of s1 is matched against all 7*6*5 ordered target triples of
/// s2, which is exhaustive: any witness map is determined by where that
/// triple goes. Returns the first witness in the deterministic scan order.
std::optional<MoebiusMap> branch_sets_equivalent(const BranchSet& s1, const BranchSet& s2);

}  // namespace gfc
