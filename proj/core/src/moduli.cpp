// SPDX-License-Identifier: MIT
#include "gfc/moduli.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "gfc/errors.hpp"

namespace gfc {

SlotPerm slot_identity() { return {1, 2, 3, 4, 5, 6, 7}; }

SlotPerm slot_compose(const SlotPerm& f, const SlotPerm& g) {
  SlotPerm r{};
  for (int i = 0; i < 7; ++i)
    r[static_cast<size_t>(i)] = f[static_cast<size_t>(g[static_cast<size_t>(i)] - 1)];
  return r;
}

bool slot_is_transposition(const SlotPerm& p) {
  int moved = 0;
  for (int i = 1; i <= 7; ++i)
    if (p[static_cast<size_t>(i - 1)] != i) ++moved;
  if (moved != 2) return false;
  return slot_compose(p, p) == slot_identity();
}

int slot_order(const SlotPerm& p) {
  SlotPerm acc = p;
  int n = 1;
  while (acc != slot_identity()) {
    acc = slot_compose(p, acc);
    ++n;
    if (n > 5040) throw degenerate_input("permutation order overflow");
  }
  return n;
}

ModuliPoint act_A(const ModuliPoint& mu) {
  return ModuliPoint(mu.mu(4).inverse(), mu.mu(5).inverse(), mu.mu(6).inverse(),
                     mu.mu(7).inverse());
}

ModuliPoint act_B(const ModuliPoint& mu) {
  const CycloElem& m7 = mu.mu(7);
  CycloElem one(1);
  return ModuliPoint(m7 / (m7 - one), m7 / (m7 - mu.mu(4)), m7 / (m7 - mu.mu(5)),
                     m7 / (m7 - mu.mu(6)));
}

ModuliPoint act_sigma(const std::array<int, 4>& sigma, const ModuliPoint& mu) {
  unsigned seen = 0;
  for (int v : sigma) {
    if (v < 4 || v > 7) throw degenerate_input("sigma must permute {4,5,6,7}");
    seen |= 1u << (v - 4);
  }
  if (seen != 0xf) throw degenerate_input("sigma must permute {4,5,6,7}");
  return ModuliPoint(mu.mu(sigma[0]), mu.mu(sigma[1]), mu.mu(sigma[2]), mu.mu(sigma[3]));
}

SlotPerm slot_perm_A() { return {2, 1, 3, 4, 5, 6, 7}; }
SlotPerm slot_perm_B() { return {2, 3, 4, 5, 6, 7, 1}; }

MoebiusMap renormalizer_A() {
  return MoebiusMap(CycloElem(0), CycloElem(1), CycloElem(1), CycloElem(0));
}

MoebiusMap renormalizer_B(const ModuliPoint& mu) {
  // x -> mu7 / (mu7 - x)
  return MoebiusMap(CycloElem(0), mu.mu(7), -CycloElem(1), mu.mu(7));
}

ModuliPoint apply_word(const std::string& word, const ModuliPoint& mu) {
  ModuliPoint cur = mu;
  for (char c : word) {
    if (c == 'A')
      cur = act_A(cur);
    else if (c == 'B')
      cur = act_B(cur);
    else
      throw parse_error("word letters must be A or B");
  }
  return cur;
}

SlotPerm slot_perm_of_word(const std::string& word) {
  SlotPerm acc = slot_identity();
  for (char c : word) {
    if (c == 'A')
      acc = slot_compose(slot_perm_A(), acc);
    else if (c == 'B')
      acc = slot_compose(slot_perm_B(), acc);
    else
      throw parse_error("word letters must be A or B");
  }
  return acc;
}

namespace {

// Breadth-first closure of {A, B} with shortest witnessing words.
const std::map<SlotPerm, std::string>& closure_words() {
  static const std::map<SlotPerm, std::string> table = [] {
    std::map<SlotPerm, std::string> words;
    std::queue<SlotPerm> q;
    words[slot_identity()] = "";
    q.push(slot_identity());
    while (!q.empty()) {
      SlotPerm cur = q.front();
      q.pop();
      const std::string& w = words[cur];
      for (char g : {'A', 'B'}) {
        SlotPerm next =
            slot_compose(g == 'A' ? slot_perm_A() : slot_perm_B(), cur);
        if (words.emplace(next, w + g).second) q.push(next);
      }
    }
    return words;
  }();
  return table;
}

}  // namespace

int group_order() { return static_cast<int>(closure_words().size()); }

std::optional<std::string> word_for_slot_perm(const SlotPerm& p) {
  auto it = closure_words().find(p);
  if (it == closure_words().end()) return std::nullopt;
  return it->second;
}

OrbitWitness equivalent(const ModuliPoint& mu, const ModuliPoint& mu_prime) {
  if (mu == mu_prime) return {true, ""};
  std::set<SlotPerm> seen{slot_identity()};
  std::queue<std::pair<SlotPerm, std::pair<ModuliPoint, std::string>>> q;
  q.push({slot_identity(), {mu, ""}});
  while (!q.empty()) {
    auto [perm, state] = q.front();
    q.pop();
    for (char g : {'A', 'B'}) {
      SlotPerm next = slot_compose(g == 'A' ? slot_perm_A() : slot_perm_B(), perm);
      if (!seen.insert(next).second) continue;
      ModuliPoint val = g == 'A' ? act_A(state.first) : act_B(state.first);
      std::string word = state.second + g;
      if (val == mu_prime) return {true, word};
      q.push({next, {val, word}});
    }
  }
  return {false, ""};
}

std::vector<ModuliPoint> orbit_values(const ModuliPoint& mu) {
  std::set<SlotPerm> seen{slot_identity()};
  std::set<ModuliPoint> values{mu};
  std::queue<std::pair<SlotPerm, ModuliPoint>> q;
  q.push({slot_identity(), mu});
  while (!q.empty()) {
    auto [perm, val] = q.front();
    q.pop();
    for (char g : {'A', 'B'}) {
      SlotPerm next = slot_compose(g == 'A' ? slot_perm_A() : slot_perm_B(), perm);
      if (!seen.insert(next).second) continue;
      ModuliPoint nv = g == 'A' ? act_A(val) : act_B(val);
      values.insert(nv);
      q.push({next, nv});
    }
  }
  return {values.begin(), values.end()};
}

ModuliPoint dual_mu(const ModuliPoint& mu) {
  CycloElem inv5 = mu.mu(5).inverse();
  return ModuliPoint(mu.mu(6) * inv5, mu.mu(7) * inv5, mu.mu(4) * inv5, inv5);
}

ZetaConditionResult zeta_condition(const ModuliPoint& mu) {
  ZetaConditionResult r;
  CycloElem m5sq = mu.mu(5) * mu.mu(5);
  r.mu6_is_mu5sq_over_mu4 = (mu.mu(6) * mu.mu(4) == m5sq);
  r.mu7_is_mu5sq = (mu.mu(7) == m5sq);
  CycloElem m5_4 = m5sq * m5sq;
  CycloElem m5_6 = m5_4 * m5sq;
  CycloElem one(1);
  CycloElem base = m5_6 - Rational(5) * m5_4 - one;
  r.sextic_plus6 = base + Rational(6) * m5sq;
  r.sextic_minus6 = base - Rational(6) * m5sq;
  return r;
}

}  // namespace gfc
