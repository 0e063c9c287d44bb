// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gfc {

/// Element of H = Z_2^7 / <a1*a2*...*a7>, canonicalized to the numerically
/// smaller of (mask, mask ^ 0b1111111). Bit j-1 stands for the sign involution
/// a_j; canonical masks are exactly 0..63. The identity is mask 0.
class GroupElem {
 public:
  GroupElem() : m_(0) {}
  /// From any 7-bit representative.
  static GroupElem from_mask(unsigned mask);
  /// The generator a_j, j in 1..7 (a_7 canonicalizes to a1..a6).
  static GroupElem a(int j);
  /// Product of generators a_j for the listed indices.
  static GroupElem word(std::initializer_list<int> indices);

  unsigned mask() const { return m_; }
  bool is_identity() const { return m_ == 0; }
  GroupElem operator*(const GroupElem& o) const { return from_mask(m_ ^ o.m_); }

  bool operator==(const GroupElem& o) const = default;
  auto operator<=>(const GroupElem& o) const = default;

  /// Rendering such as "a1*a3*a7" ("1" for the identity), using the
  /// lowest-weight representative of the pair (mask, complement).
  std::string str() const;

 private:
  explicit GroupElem(unsigned m) : m_(m) {}
  unsigned m_;
};

/// Generator-permuting automorphism of H: a_j -> a_{perm(j)}.
class GenAut {
 public:
  GenAut();  // identity
  explicit GenAut(std::array<int, 7> images_one_based);

  int image(int j) const { return img_[static_cast<size_t>(j - 1)]; }
  GroupElem operator()(const GroupElem& e) const;
  GenAut compose(const GenAut& o) const;  // *this after o
  GenAut inverse() const;

  bool operator==(const GenAut& o) const = default;

  static GenAut lambda();  // a_j -> a_{j+1}, a_7 -> a_1
  static GenAut zeta();    // (1 2)(3 7)(4 6), fixing a_5

 private:
  std::array<int, 7> img_;
};

/// Subgroup of H, stored as a 64-bit set over canonical element masks.
class Subgroup {
 public:
  Subgroup() : bits_(1) {}  // trivial subgroup
  static Subgroup from_bits(std::uint64_t bits);  // validates closure

  std::uint64_t bits() const { return bits_; }
  int order() const;
  bool contains(const GroupElem& e) const { return (bits_ >> e.mask()) & 1u; }
  std::vector<GroupElem> elements() const;  // sorted
  bool is_subset_of(const Subgroup& o) const { return (bits_ & ~o.bits_) == 0; }

  /// Setwise image under a generator automorphism (again a subgroup).
  Subgroup image(const GenAut& aut) const;
  bool invariant_under(const GenAut& aut) const { return image(aut).bits_ == bits_; }

  bool operator==(const Subgroup& o) const = default;
  auto operator<=>(const Subgroup& o) const = default;

  std::string str() const;

 private:
  std::uint64_t bits_;
};

/// Smallest subgroup containing the given elements.
Subgroup generate(const std::vector<GroupElem>& gens);

/// The whole group H (order 64).
Subgroup full_group();
/// K = <a1*a3*a7, a2*a3*a5, a1*a2*a4>, the lambda-invariant free subgroup.
Subgroup k_subgroup();
/// K* = <a1*a2*a6, a2*a3*a7, a1*a3*a4>, its zeta-partner.
Subgroup k_star_subgroup();

/// Every subgroup of H exactly once, sorted by (order, bitset). Breadth-first
/// closure over the 64-element group; the Gaussian-binomial count 2825 lives
/// in the tests as the independent oracle.
const std::vector<Subgroup>& all_subgroups();

/// Subgroups setwise invariant under aut, in all_subgroups() order.
std::vector<Subgroup> invariant_subgroups(const GenAut& aut);

/// Smallest aut-invariant subgroup containing e (the span of e's aut-orbit).
Subgroup invariant_closure(const GroupElem& e, const GenAut& aut);

/// True iff j contains none of a_1..a_7, the only elements with fixed points.
bool acts_freely(const Subgroup& j);

/// For a free order-8 subgroup k: the unique expression of each of a_4*..a_7*
/// as a product of a_1*, a_2*, a_3* in H/k. Keys 4..7; values are sorted index
/// lists over {1,2,3}. Throws degenerate_input when a_1*, a_2*, a_3* fail to
/// generate the quotient.
std::map<int, std::vector<int>> quotient_relations(const Subgroup& k);

/// The seven order-4 subgroups of H/k, each reported as the index triple
/// {i, j, r} with a_i* a_j* = a_r*. The triples form a Fano plane.
std::vector<std::array<int, 3>> fano_lines(const Subgroup& k);

/// Generator permutation induced by conjugating the sign involutions by a
/// scaled coordinate permutation: slot p of the output reads source
/// coordinate source_of[p], and conjugation sends a_j to a_{source_of^-1(j)}.
GenAut conjugation_action(const std::array<int, 7>& source_of);

}  // namespace gfc
