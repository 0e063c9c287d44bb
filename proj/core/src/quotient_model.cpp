// SPDX-License-Identifier: MIT
#include "gfc/quotient_model.hpp"

#include <algorithm>

#include "gfc/errors.hpp"

namespace gfc {

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (int j = 0; j < 6; ++j) {
    if (m[static_cast<size_t>(j)] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(j + 1);
    if (m[static_cast<size_t>(j)] > 1) s += "^" + std::to_string(m[static_cast<size_t>(j)]);
  }
  return s.empty() ? "1" : s;
}

const std::array<Monomial, 13>& t_monomials() {
  static const std::array<Monomial, 13> t = {{
      {2, 0, 0, 0, 0, 0},  // t1
      {0, 2, 0, 0, 0, 0},  // t2
      {0, 0, 2, 0, 0, 0},  // t3
      {0, 0, 0, 2, 0, 0},  // t4
      {0, 0, 0, 0, 2, 0},  // t5
      {0, 0, 0, 0, 0, 2},  // t6
      {1, 1, 0, 0, 1, 0},  // t7
      {1, 1, 1, 0, 0, 1},  // t8
      {1, 0, 0, 1, 0, 1},  // t9
      {1, 0, 1, 1, 1, 0},  // t10
      {0, 1, 0, 1, 1, 1},  // t11
      {0, 1, 1, 1, 0, 0},  // t12
      {0, 0, 1, 0, 1, 1},  // t13
  }};
  return t;
}

namespace {

// Parity of m under the sign vector of a canonical group element (bit j-1
// flips x_j; canonical masks never touch x7, matching the chart x7 = 1).
bool fixed_by(const Monomial& m, unsigned mask) {
  int parity = 0;
  for (int j = 0; j < 6; ++j)
    if ((mask >> j) & 1u) parity += m[static_cast<size_t>(j)];
  return parity % 2 == 0;
}

bool divides(const Monomial& a, const Monomial& b) {  // a | b
  for (int j = 0; j < 6; ++j)
    if (a[static_cast<size_t>(j)] > b[static_cast<size_t>(j)]) return false;
  return true;
}

}  // namespace

std::vector<Monomial> invariant_monomials(const Subgroup& k) {
  if (k.order() != 8 || !acts_freely(k))
    throw degenerate_input("invariant_monomials expects a free subgroup of order 8");
  std::vector<GroupElem> elems = k.elements();

  std::vector<Monomial> inv;  // all invariant monomials, degree 1..4
  Monomial m{};
  auto scan = [&](auto&& self, int pos, int left) -> void {
    if (pos == 6) {
      if (monomial_degree(m) == 0) return;
      for (const auto& e : elems)
        if (!fixed_by(m, e.mask())) return;
      inv.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
    m[static_cast<size_t>(pos)] = 0;
  };
  scan(scan, 0, 4);

  std::sort(inv.begin(), inv.end(), [](const Monomial& a, const Monomial& b) {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return a < b;
  });

  // A monomial is redundant when an invariant proper divisor exists: the
  // cofactor is then invariant too, so the monomial is a product of smaller
  // invariants.
  std::vector<Monomial> gens;
  for (const auto& cand : inv) {
    bool redundant = false;
    for (const auto& g : gens) {
      if (monomial_degree(g) >= monomial_degree(cand)) break;
      if (divides(g, cand)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens.push_back(cand);
  }
  return gens;
}

const std::vector<std::pair<std::vector<int>, std::vector<int>>>& binomial_relations() {
  static const std::vector<std::pair<std::vector<int>, std::vector<int>>> rel = {
      {{6, 10}, {9, 13}},      {{6, 7, 12}, {8, 11}},  {{5, 9, 12}, {10, 11}},
      {{5, 8}, {7, 13}},       {{5, 6, 12}, {11, 13}}, {{4, 8}, {9, 12}},
      {{4, 7, 13}, {10, 11}},  {{4, 6, 7}, {9, 11}},   {{3, 11}, {12, 13}},
      {{3, 6, 7}, {8, 13}},    {{3, 5, 9}, {10, 13}},  {{3, 5, 6}, {13, 13}},
      {{3, 4, 7}, {10, 12}},   {{2, 10}, {7, 12}},     {{2, 9, 13}, {8, 11}},
      {{2, 5, 9}, {7, 11}},    {{2, 4, 13}, {11, 12}}, {{2, 4, 5, 6}, {11, 11}},
      {{2, 3, 9}, {8, 12}},    {{2, 3, 4}, {12, 12}},  {{1, 12, 13}, {8, 10}},
      {{1, 11}, {7, 9}},       {{1, 6, 12}, {8, 9}},   {{1, 5, 12}, {7, 10}},
      {{1, 4, 13}, {9, 10}},   {{1, 4, 6}, {9, 9}},    {{1, 3, 4, 5}, {10, 10}},
      {{1, 2, 13}, {7, 8}},    {{1, 2, 5}, {7, 7}},    {{1, 2, 3, 6}, {8, 8}},
  };
  return rel;
}

namespace {

std::array<int, 6> exponent_sum(const std::vector<int>& t_indices) {
  std::array<int, 6> e{};
  for (int i : t_indices) {
    const Monomial& m = t_monomials()[static_cast<size_t>(i - 1)];
    for (int j = 0; j < 6; ++j) e[static_cast<size_t>(j)] += m[static_cast<size_t>(j)];
  }
  return e;
}

std::string side_str(const std::vector<int>& t_indices) {
  std::string s;
  for (int i : t_indices) {
    if (!s.empty()) s += "*";
    s += "t" + std::to_string(i);
  }
  return s;
}

}  // namespace

RelationReport verify_quotient_relations(const ModuliPoint& mu) {
  RelationReport rep;
  for (const auto& [lhs, rhs] : binomial_relations()) {
    ++rep.binomial_checked;
    if (exponent_sum(lhs) == exponent_sum(rhs)) {
      ++rep.binomial_ok;
    } else {
      rep.failures.push_back("binomial " + side_str(lhs) + " = " + side_str(rhs));
    }
  }

  // Linear rows: alpha_i*t1 + t2 + t_{i+2} = 0 for i = 1..4 and
  // mu7*t1 + t2 + 1 = 0; under t_j = x_j^2, 1 = x7^2 these must be exactly
  // the rows of the quadric system.
  QuadricSystem sys(mu);
  rep.linear_ok = true;
  for (int i = 1; i <= 5; ++i) {
    std::array<CycloElem, 7> expect{};
    expect[0] = (i == 1) ? CycloElem(1) : mu.mu(i + 2);  // coefficient of t1
    expect[1] = CycloElem(1);                            // t2
    expect[static_cast<size_t>(i + 1)] = CycloElem(1);   // t_{i+2}, or x7^2 for i = 5
    if (expect != sys.rows()[static_cast<size_t>(i - 1)]) {
      rep.linear_ok = false;
      rep.failures.push_back("linear row " + std::to_string(i));
    }
  }
  return rep;
}

std::array<std::array<int, 7>, 3> involution_signs() {
  std::array<std::array<int, 7>, 3> out{};
  for (int g = 0; g < 3; ++g) {
    unsigned mask = GroupElem::a(g + 1).mask();
    for (int t = 7; t <= 13; ++t)
      out[static_cast<size_t>(g)][static_cast<size_t>(t - 7)] =
          fixed_by(t_monomials()[static_cast<size_t>(t - 1)], mask) ? 1 : -1;
  }
  return out;
}

std::array<std::array<int, 7>, 3> displayed_involution_signs() {
  return {{{-1, -1, -1, -1, 1, 1, 1},
           {-1, -1, 1, 1, -1, -1, 1},
           {1, -1, 1, -1, 1, -1, -1}}};
}

namespace {

FiberRow row_for_pair(const ModuliPoint& mu, const Subgroup& k, int i, int j) {
  for (const auto& line : fano_lines(k)) {
    bool has_i = line[0] == i || line[1] == i || line[2] == i;
    bool has_j = line[0] == j || line[1] == j || line[2] == j;
    if (!has_i || !has_j) continue;
    std::vector<P1Point> branch;
    for (int s = 1; s <= 7; ++s)
      if (s != line[0] && s != line[1] && s != line[2]) branch.push_back(mu.branch_point(s));
    return FiberRow{line, EllipticModel::from_branch(branch)};
  }
  throw degenerate_input("no Fano line through the requested pair");
}

}  // namespace

FiberProductModel fiber_product_model(const ModuliPoint& mu, const Subgroup& k) {
  return FiberProductModel{{row_for_pair(mu, k, 2, 3), row_for_pair(mu, k, 1, 2),
                            row_for_pair(mu, k, 1, 3)}};
}

KStarComparison compare_kstar_display(const ModuliPoint& mu) {
  FiberProductModel derived = fiber_product_model(mu, k_star_subgroup());
  CycloElem zero(0), one(1);
  std::array<EllipticModel, 3> displayed = {
      EllipticModel({mu.mu(4), mu.mu(5), mu.mu(6)}),
      EllipticModel({mu.mu(4), mu.mu(5), mu.mu(6)}),
      EllipticModel({zero, one, mu.mu(4), mu.mu(6)}),
  };
  KStarComparison out{derived, displayed, {}, true};
  for (int r = 0; r < 3; ++r)
    out.row_matches[static_cast<size_t>(r)] =
        derived.rows[static_cast<size_t>(r)].model.finite_roots() ==
        displayed[static_cast<size_t>(r)].finite_roots();
  out.displayed_rows_repeat =
      displayed[0].finite_roots() == displayed[1].finite_roots();
  return out;
}

}  // namespace gfc
