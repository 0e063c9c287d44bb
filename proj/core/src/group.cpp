// SPDX-License-Identifier: MIT
#include "gfc/group.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "gfc/errors.hpp"

namespace gfc {

namespace {
constexpr unsigned kAll = 0x7f;

unsigned canonical(unsigned mask) {
  mask &= kAll;
  unsigned c = mask ^ kAll;
  return std::min(mask, c);
}
}  // namespace

GroupElem GroupElem::from_mask(unsigned mask) { return GroupElem(canonical(mask)); }

GroupElem GroupElem::a(int j) {
  if (j < 1 || j > 7) throw degenerate_input("generator index must be in 1..7");
  return from_mask(1u << (j - 1));
}

GroupElem GroupElem::word(std::initializer_list<int> indices) {
  unsigned m = 0;
  for (int j : indices) {
    if (j < 1 || j > 7) throw degenerate_input("generator index must be in 1..7");
    m ^= 1u << (j - 1);
  }
  return from_mask(m);
}

std::string GroupElem::str() const {
  if (m_ == 0) return "1";
  unsigned rep = m_;
  unsigned comp = m_ ^ kAll;
  if (std::popcount(comp) < std::popcount(rep)) rep = comp;
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < 7; ++j) {
    if ((rep >> j) & 1u) {
      if (!first) os << "*";
      os << "a" << (j + 1);
      first = false;
    }
  }
  return os.str();
}

GenAut::GenAut() : img_{1, 2, 3, 4, 5, 6, 7} {}

GenAut::GenAut(std::array<int, 7> images_one_based) : img_(images_one_based) {
  unsigned seen = 0;
  for (int v : img_) {
    if (v < 1 || v > 7) throw degenerate_input("permutation image out of range");
    seen |= 1u << (v - 1);
  }
  if (seen != kAll) throw degenerate_input("not a permutation of 1..7");
}

GroupElem GenAut::operator()(const GroupElem& e) const {
  unsigned out = 0;
  for (int j = 0; j < 7; ++j)
    if ((e.mask() >> j) & 1u) out |= 1u << (img_[static_cast<size_t>(j)] - 1);
  return GroupElem::from_mask(out);
}

GenAut GenAut::compose(const GenAut& o) const {
  std::array<int, 7> r{};
  for (int j = 1; j <= 7; ++j) r[static_cast<size_t>(j - 1)] = image(o.image(j));
  return GenAut(r);
}

GenAut GenAut::inverse() const {
  std::array<int, 7> r{};
  for (int j = 1; j <= 7; ++j) r[static_cast<size_t>(image(j) - 1)] = j;
  return GenAut(r);
}

GenAut GenAut::lambda() { return GenAut({2, 3, 4, 5, 6, 7, 1}); }
GenAut GenAut::zeta() { return GenAut({2, 1, 7, 6, 5, 4, 3}); }

Subgroup Subgroup::from_bits(std::uint64_t bits) {
  if (!(bits & 1u)) throw degenerate_input("subgroup must contain the identity");
  Subgroup s;
  s.bits_ = bits;
  for (int x = 0; x < 64; ++x) {
    if (!((bits >> x) & 1u)) continue;
    for (int y = x; y < 64; ++y) {
      if (!((bits >> y) & 1u)) continue;
      unsigned p = canonical(static_cast<unsigned>(x) ^ static_cast<unsigned>(y));
      if (!((bits >> p) & 1u)) throw degenerate_input("element set not closed under product");
    }
  }
  return s;
}

int Subgroup::order() const { return std::popcount(bits_); }

std::vector<GroupElem> Subgroup::elements() const {
  std::vector<GroupElem> out;
  for (unsigned x = 0; x < 64; ++x)
    if ((bits_ >> x) & 1u) out.push_back(GroupElem::from_mask(x));
  return out;
}

Subgroup Subgroup::image(const GenAut& aut) const {
  std::uint64_t out = 0;
  for (unsigned x = 0; x < 64; ++x)
    if ((bits_ >> x) & 1u) out |= std::uint64_t(1) << aut(GroupElem::from_mask(x)).mask();
  Subgroup s;
  s.bits_ = out;
  return s;
}

std::string Subgroup::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& e : elements()) {
    if (!first) os << ", ";
    os << e.str();
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

// Extends a closed set by one element: S union S*g is again closed.
std::uint64_t extend(std::uint64_t s, unsigned g) {
  std::uint64_t out = s;
  for (unsigned x = 0; x < 64; ++x)
    if ((s >> x) & 1u) out |= std::uint64_t(1) << canonical(x ^ g);
  return out;
}

}  // namespace

Subgroup generate(const std::vector<GroupElem>& gens) {
  std::uint64_t s = 1;
  for (const auto& g : gens)
    if (!((s >> g.mask()) & 1u)) s = extend(s, g.mask());
  Subgroup out;
  out = Subgroup::from_bits(s);
  return out;
}

Subgroup full_group() {
  std::vector<GroupElem> gens;
  for (int j = 1; j <= 6; ++j) gens.push_back(GroupElem::a(j));
  return generate(gens);
}

Subgroup k_subgroup() {
  return generate({GroupElem::word({1, 3, 7}), GroupElem::word({2, 3, 5}),
                   GroupElem::word({1, 2, 4})});
}

Subgroup k_star_subgroup() {
  return generate({GroupElem::word({1, 2, 6}), GroupElem::word({2, 3, 7}),
                   GroupElem::word({1, 3, 4})});
}

const std::vector<Subgroup>& all_subgroups() {
  static const std::vector<Subgroup> result = [] {
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier{1};
    seen.insert(1);
    while (!frontier.empty()) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t s : frontier) {
        for (unsigned g = 1; g < 64; ++g) {
          if ((s >> g) & 1u) continue;
          std::uint64_t t = extend(s, g);
          if (seen.insert(t).second) next.push_back(t);
        }
      }
      frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (std::uint64_t b : seen) out.push_back(Subgroup::from_bits(b));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.bits() < b.bits();
    });
    return out;
  }();
  return result;
}

std::vector<Subgroup> invariant_subgroups(const GenAut& aut) {
  std::vector<Subgroup> out;
  for (const auto& s : all_subgroups())
    if (s.invariant_under(aut)) out.push_back(s);
  return out;
}

Subgroup invariant_closure(const GroupElem& e, const GenAut& aut) {
  // The span of an invariant set is invariant, so one orbit pass suffices.
  std::vector<GroupElem> orbit;
  GroupElem cur = e;
  do {
    orbit.push_back(cur);
    cur = aut(cur);
  } while (cur != e);
  return generate(orbit);
}

bool acts_freely(const Subgroup& j) {
  for (int i = 1; i <= 7; ++i)
    if (j.contains(GroupElem::a(i))) return false;
  return true;
}

namespace {

// Coset id of element e in H/k: the smallest mask in e*k.
unsigned coset_id(unsigned e, const Subgroup& k) {
  unsigned best = 64;
  for (unsigned x = 0; x < 64; ++x)
    if ((k.bits() >> x) & 1u) best = std::min(best, canonical(e ^ x));
  return best;
}

void require_free_order8(const Subgroup& k, const char* who) {
  if (k.order() != 8) throw degenerate_input(std::string(who) + ": subgroup must have order 8");
  if (!acts_freely(k))
    throw degenerate_input(std::string(who) + ": subgroup must avoid all a_j");
}

}  // namespace

std::map<int, std::vector<int>> quotient_relations(const Subgroup& k) {
  require_free_order8(k, "quotient_relations");
  std::vector<GroupElem> gens = k.elements();
  gens.push_back(GroupElem::a(1));
  gens.push_back(GroupElem::a(2));
  gens.push_back(GroupElem::a(3));
  if (generate(gens).order() != 64)
    throw degenerate_input("a1*, a2*, a3* do not generate H/k");
  std::map<int, std::vector<int>> out;
  for (int j = 4; j <= 7; ++j) {
    unsigned target = GroupElem::a(j).mask();
    for (unsigned w = 1; w < 8 && !out.count(j); ++w) {
      unsigned m = target;
      std::vector<int> word;
      for (int i = 0; i < 3; ++i)
        if ((w >> i) & 1u) {
          m ^= GroupElem::a(i + 1).mask();
          word.push_back(i + 1);
        }
      if (k.contains(GroupElem::from_mask(m))) out[j] = word;
    }
    if (!out.count(j)) throw degenerate_input("no word over {a1,a2,a3} matches a_j in H/k");
  }
  return out;
}

std::vector<std::array<int, 3>> fano_lines(const Subgroup& k) {
  require_free_order8(k, "fano_lines");
  std::array<unsigned, 8> cos{};  // cos[j] = coset id of a_j, j = 1..7
  for (int j = 1; j <= 7; ++j) cos[static_cast<size_t>(j)] = coset_id(GroupElem::a(j).mask(), k);
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      if (cos[static_cast<size_t>(i)] == cos[static_cast<size_t>(j)])
        throw degenerate_input("involution images in H/k are not pairwise distinct");
  std::set<std::array<int, 3>> lines;
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      unsigned pc = coset_id(GroupElem::a(i).mask() ^ GroupElem::a(j).mask(), k);
      int r = 0;
      for (int t = 1; t <= 7; ++t)
        if (cos[static_cast<size_t>(t)] == pc) r = t;
      if (r == 0) throw degenerate_input("product coset is not an involution image");
      std::array<int, 3> line{i, j, r};
      std::sort(line.begin(), line.end());
      lines.insert(line);
    }
  }
  if (lines.size() != 7) throw degenerate_input("expected exactly 7 order-4 subgroups");
  return {lines.begin(), lines.end()};
}

GenAut conjugation_action(const std::array<int, 7>& source_of) {
  GenAut perm(source_of);  // validates
  // a_j flips source coordinate j, so after conjugation the flipped output
  // slot is source_of^-1(j); the scale factors cancel in pairs.
  std::array<int, 7> img{};
  for (int p = 1; p <= 7; ++p) img[static_cast<size_t>(perm.image(p) - 1)] = p;
  return GenAut(img);
}

}  // namespace gfc
