// SPDX-License-Identifier: MIT
#include "gfc/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gfc/elliptic.hpp"
#include "gfc/embed.hpp"
#include "gfc/errors.hpp"
#include "gfc/group.hpp"
#include "gfc/moduli.hpp"
#include "gfc/orbifold.hpp"
#include "gfc/quadrics.hpp"
#include "gfc/quotient_model.hpp"
#include "gfc/serialize.hpp"

namespace gfc {

std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Flagged:
      return "flagged-discrepancy";
  }
  return "?";
}

CheckContext::CheckContext() : mu(mu_zero()) {}

namespace {

struct Expect {
  CheckResult& r;
  // Failed expectations demote the check to Fail and record the message.
  void that(bool ok, const std::string& what) {
    if (!ok) {
      r.status = CheckStatus::Fail;
      r.details.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { r.details.push_back(what); }
};

long gaussian_binomial_2(int n, int k) {
  // Number of k-dimensional subspaces of F_2^n.
  long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (1L << (n - i)) - 1;
    den *= (1L << (k - i)) - 1;
  }
  return num / den;
}

// ---- individual checks ----------------------------------------------------

CheckResult check_lemma(const CheckContext&) {
  CheckResult r{"lemma-invariant-subgroups", "Lemma 3", CheckStatus::Pass, {}};
  Expect e{r};

  const auto& subs = all_subgroups();
  long expected_total = 0;
  for (int k = 0; k <= 6; ++k) expected_total += gaussian_binomial_2(6, k);
  e.that(static_cast<long>(subs.size()) == expected_total,
         "subgroup count " + std::to_string(subs.size()) + " != Gaussian-binomial sum " +
             std::to_string(expected_total));
  long order8 = std::count_if(subs.begin(), subs.end(),
                              [](const Subgroup& s) { return s.order() == 8; });
  e.that(order8 == gaussian_binomial_2(6, 3),
         "order-8 subgroup count " + std::to_string(order8));

  auto inv = invariant_subgroups(GenAut::lambda());
  std::set<Subgroup> got(inv.begin(), inv.end());
  std::set<Subgroup> stated{k_subgroup(), k_star_subgroup(), full_group()};
  std::set<Subgroup> with_trivial = stated;
  with_trivial.insert(Subgroup());
  e.that(got == with_trivial,
         "lambda-invariant subgroups differ from {1, K, K*, H}");
  e.that(k_subgroup().image(GenAut::zeta()) == k_star_subgroup(),
         "zeta does not carry K onto K*");
  e.that(k_star_subgroup().image(GenAut::zeta()) == k_subgroup(),
         "zeta does not carry K* onto K");

  // Proof replay: the invariant closure of each orbit representative.
  std::vector<std::pair<GroupElem, Subgroup>> replay = {
      {GroupElem::word({1}), full_group()},
      {GroupElem::word({1, 2}), full_group()},
      {GroupElem::word({1, 3}), full_group()},
      {GroupElem::word({1, 4}), full_group()},
      {GroupElem::word({1, 2, 3}), full_group()},
      {GroupElem::word({1, 2, 4}), k_subgroup()},
      {GroupElem::word({1, 2, 5}), full_group()},
      {GroupElem::word({1, 2, 6}), k_star_subgroup()},
      {GroupElem::word({1, 3, 5}), full_group()},
      {GroupElem::word({1, 3, 4}), k_star_subgroup()},
  };
  for (const auto& [g, expect] : replay)
    e.that(invariant_closure(g, GenAut::lambda()) == expect,
           "lambda-closure of " + g.str() + " has unexpected value");

  if (r.status == CheckStatus::Pass) {
    r.status = CheckStatus::Flagged;
    r.note("statement lists {H, K, K*}; the exhaustive enumeration also finds the trivial "
           "subgroup, which is vacuously lambda-invariant (reported, not suppressed)");
    r.note("lambda-invariant subgroups among all " + std::to_string(subs.size()) +
           ": trivial, K, K*, H; zeta swaps K and K*");
  }
  return r;
}

CheckResult check_free_action_genus(const CheckContext&) {
  CheckResult r{"free-action-genus", "§2.2", CheckStatus::Pass, {}};
  Expect e{r};
  const Subgroup k = k_subgroup(), ks = k_star_subgroup();
  e.that(acts_freely(k), "K contains some a_j");
  e.that(acts_freely(ks), "K* contains some a_j");

  e.that(quotient_genus_and_cones(Subgroup()) == OrbSignature{49, {}},
         "genus of the full curve is not 49");
  e.that(quotient_genus_and_cones(k) == OrbSignature{7, {}}, "genus of S is not 7");
  e.that(quotient_genus_and_cones(ks) == OrbSignature{7, {}}, "genus of S* is not 7");
  OrbSignature h_sig = quotient_genus_and_cones(full_group());
  e.that(h_sig == OrbSignature{0, std::vector<int>(7, 2)},
         "S/G signature is not (0; 2^7)");

  int fixed_total = 0;
  for (int rr = 1; rr <= 7; ++rr) {
    OrbSignature s3 = quotient_genus_and_cones(preimage_with(k, {rr}));
    e.that(s3 == OrbSignature{3, std::vector<int>(4, 2)},
           "quotient by <a_" + std::to_string(rr) + "*> is not genus 3 with 4 cones");
    int f = fixed_point_count(rr, k);
    e.that(f == 4, "a_" + std::to_string(rr) + "* does not have 4 fixed points");
    fixed_total += f;
  }
  e.that(fixed_total == 28, "total fixed points over the 7 involutions != 28");

  for (const auto& line : fano_lines(k)) {
    OrbSignature s1 = quotient_genus_and_cones(preimage_with(k, {line[0], line[1]}));
    e.that(s1 == OrbSignature{1, std::vector<int>(6, 2)},
           "quotient by L_{" + std::to_string(line[0]) + std::to_string(line[1]) +
               "} is not genus 1 with 6 cones");
  }

  // chi_orb * |J| is constant over the whole subgroup lattice.
  Rational expected(-96);
  for (const auto& s : all_subgroups()) {
    OrbSignature sig = quotient_genus_and_cones(s);
    if (sig.chi() * s.order() != expected) {
      e.that(false, "chi_orb * order breaks at subgroup " + s.str());
      break;
    }
  }
  if (r.status == CheckStatus::Pass)
    r.note("genus chain 49 / 7 / 3 / 1 / 0 with cone counts 0 / 0 / 4 / 6 / 7; "
           "chi_orb * |J| = -96 across all 2825 subgroups");
  return r;
}

CheckResult check_smoothness(const CheckContext& ctx) {
  CheckResult r{"smoothness-certificate", "§2.1", CheckStatus::Pass, {}};
  Expect e{r};

  auto run_one = [&](const ModuliPoint& mu, const std::string& label) {
    SmoothnessCertificate cert = smoothness_certificate(mu);
    e.that(cert.ok, "certificate failed at " + label);
    e.that(cert.cases.size() == 128, "expected 128 vanishing patterns at " + label);
    // x3 = x4 = 0 must be refuted through (mu4 - 1)*x1^2 = 0.
    for (const auto& c : cert.cases) {
      if (c.zero_set == ((1u << 2) | (1u << 3))) {
        e.that(!c.admissible, "pattern x3 = x4 = 0 not refuted at " + label);
        e.that(c.reason.find("mu4 - 1") != std::string::npos,
               "pattern x3 = x4 = 0 lacks the (mu4 - 1)*x1^2 reason at " + label);
      }
    }
  };

  run_one(ctx.mu, "the requested parameter");
  run_one(mu_zero(), "mu0");
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    run_one(random_omega_point(seed), "random Omega point " + std::to_string(seed));
  if (r.status == CheckStatus::Pass) {
    SmoothnessCertificate cert = smoothness_certificate(ctx.mu);
    r.note("all 128 vanishing patterns discharged; " +
           std::to_string(cert.admissible_count()) +
           " admissible patterns carry explicit nonsingular 5x5 minors");
  }
  return r;
}

CheckResult check_relations(const CheckContext& ctx) {
  CheckResult r{"quotient-model-relations", "eq. (3)", CheckStatus::Pass, {}};
  Expect e{r};

  RelationReport rep = verify_quotient_relations(ctx.mu);
  e.that(rep.binomial_checked == 30, "expected 30 binomial relations");
  e.that(rep.binomial_ok == rep.binomial_checked, "some binomial relation fails");
  e.that(rep.linear_ok, "linear rows do not match the quadric system");
  for (const auto& f : rep.failures) e.that(false, f);

  auto inv = invariant_monomials(k_subgroup());
  std::set<Monomial> got(inv.begin(), inv.end());
  std::set<Monomial> expect(t_monomials().begin(), t_monomials().end());
  e.that(got == expect, "derived invariant monomials differ from t1..t13");
  e.that(inv.size() == 13, "expected exactly 13 generators");

  auto inv_star = invariant_monomials(k_star_subgroup());
  e.that(inv_star.size() == 13, "expected 13 generators for the K* action");

  e.that(involution_signs() == displayed_involution_signs(),
         "involution sign table does not match the displayed one");

  if (r.status == CheckStatus::Pass)
    r.note("30 monomial identities, 5 linear rows, 13 invariant generators and the three "
           "sign rows all verified exactly");
  return r;
}

CheckResult check_automorphism_lift(const CheckContext&) {
  CheckResult r{"automorphism-lift", "§3", CheckStatus::Pass, {}};
  Expect e{r};

  const ModuliPoint& m0 = mu_zero();
  bool t_ok = verify_linear_aut(m0, t_hat_witness());
  bool t_flipped = verify_linear_aut(m0, t_hat_witness_flipped());
  e.that(t_ok, "the order-7 witness fails at mu0");
  e.that(t_ok || t_flipped, "neither sign choice of the order-7 witness passes");
  e.that(!t_flipped, "the opposite sign choice unexpectedly passes too");
  e.that(verify_linear_aut(m0, u_witness()), "the order-2 witness fails at mu0");

  e.that(conjugation_action(t_hat_witness().source_of) == GenAut::lambda(),
         "conjugation by the order-7 lift does not induce lambda");
  e.that(conjugation_action(u_witness().source_of) == GenAut::zeta(),
         "conjugation by the order-2 lift does not induce zeta");

  ModuliPoint fixture(CycloElem(2), CycloElem(3), CycloElem(4), CycloElem(5));
  e.that(!verify_linear_aut(fixture, t_hat_witness()),
         "the mu0 witness unexpectedly passes at the generic fixture");

  if (r.status == CheckStatus::Pass)
    r.note("both lifts verified at mu0 through squared scale factors only; the same "
           "witness fails at (2,3,4,5)");
  return r;
}

CheckResult check_fm_parameter(const CheckContext&) {
  CheckResult r{"fm-parameter", "Theorem 8", CheckStatus::Pass, {}};
  Expect e{r};

  e.that(mu_zero() == mu_zero_closed_form(),
         "closed-form fractions disagree with the A-composed definition");

  ZetaConditionResult z = zeta_condition(mu_zero());
  e.that(z.mu6_is_mu5sq_over_mu4, "mu6 != mu5^2/mu4 at mu0");
  e.that(z.mu7_is_mu5sq, "mu7 != mu5^2 at mu0");
  e.that(z.sextic_plus6.is_zero(), "mu5^6 - 5mu5^4 + 6mu5^2 - 1 != 0 at mu0");
  e.that(!z.sextic_minus6.is_zero(),
         "the -6 sextic variant unexpectedly vanishes as well");

  if (r.status == CheckStatus::Pass) {
    r.status = CheckStatus::Flagged;
    r.note("the displayed sextic mu5^6 - 5mu5^4 - 6mu5^2 - 1 does not vanish at mu0: it "
           "evaluates to " + z.sextic_minus6.str() + " = -12*mu5^2");
    r.note("the sign-corrected identity mu5^6 - 5mu5^4 + 6mu5^2 - 1 = 0 holds exactly; "
           "mu6 = mu5^2/mu4 and mu7 = mu5^2 hold as displayed");
  }
  return r;
}

CheckResult check_fiber_pullback(const CheckContext&) {
  CheckResult r{"fiber-product-pullback", "Remark 9", CheckStatus::Pass, {}};
  Expect e{r};

  FiberProductModel fp = fiber_product_model(mu_zero(), k_subgroup());
  auto zp = [](long k) { return P1Point::finite(CycloElem::zeta(k)); };
  std::vector<std::set<P1Point>> expected = {
      {zp(0), zp(3), zp(5), zp(6)},
      {zp(2), zp(4), zp(5), zp(6)},
      {zp(1), zp(3), zp(4), zp(5)},
  };
  MoebiusMap a_inv = map_a().inverse();
  for (int row = 0; row < 3; ++row) {
    std::set<P1Point> pulled;
    for (const auto& p : fp.rows[static_cast<size_t>(row)].model.branch_points())
      pulled.insert(a_inv(p));
    e.that(pulled == expected[static_cast<size_t>(row)],
           "row " + std::to_string(row + 1) + " does not pull back to the displayed roots");
  }
  if (r.status == CheckStatus::Pass)
    r.note("u = A(x) carries the three mu0 fiber-product rows onto the root sets "
           "{1,z^3,z^5,z^6}, {z^2,z^4,z^5,z^6}, {z,z^3,z^4,z^5}");
  return r;
}

CheckResult check_t_curves(const CheckContext&) {
  CheckResult r{"t-curves-isomorphic", "Corollary 10", CheckStatus::Pass, {}};
  Expect e{r};

  auto ts = t_curves(mu_zero());
  e.that(ts.size() == 7, "expected 7 elliptic quotients");
  CycloElem jstar = j_invariant(ts.front().model);
  for (const auto& t : ts)
    e.that(j_invariant(t.model) == jstar,
           "j(" + line_label(t.line) + ") differs at mu0");
  e.that(jstar == CycloElem(1792), "common j at mu0 is not 1792");

  MuZeroCurves curves = e_curves_mu0();
  CycloElem j_e3 = j_invariant(curves.e1_to_e6[2]);
  e.that(j_e3 == jstar, "j(E3) differs from the common T-curve value");

  CycloElem j_printed = j_invariant(curves.e_as_printed);
  CycloElem j_e1 = j_invariant(curves.e1_to_e6[0]);
  e.that(j_printed == j_e1, "the displayed E is not isomorphic to E1 either");

  EllipticModel t47_shape({CycloElem(0), CycloElem(1), mu_zero().mu(6)});
  e.that(j_invariant(t47_shape) == jstar, "x(x-1)(x-mu6) does not carry the common j");

  if (r.status == CheckStatus::Pass) {
    if (j_printed != jstar) {
      r.status = CheckStatus::Flagged;
      r.note("the displayed E = y^2 = x(x-1)(x - A(z^6)) has j = " + j_printed.str() +
             ", not the common value 1792 of the seven T-curves; it is isomorphic to E1");
      r.note("the model x(x-1)(x - A(z^5)) (the T47 row at mu0, third root mu6 instead of "
             "mu7) does have j = 1792, matching E3 ~ E and JS ~ E^7");
    } else {
      r.note("all seven T-curves and the displayed E share j = 1792");
    }
  }
  return r;
}

CheckResult check_thirty_five(const CheckContext&) {
  CheckResult r{"thirty-five-factors", "Remark 11", CheckStatus::Pass, {}};
  Expect e{r};

  std::vector<P1Point> roots;
  for (long k = 0; k < 7; ++k) roots.push_back(P1Point::finite(CycloElem::zeta(k)));
  auto js = thirty_five_factors(BranchSet(roots));
  e.that(js.size() == 35, "expected 35 factors");
  std::map<CycloElem, int> mult;
  for (const auto& j : js) mult[j]++;

  std::multiset<int> sizes;
  for (const auto& [v, n] : mult) sizes.insert(n);
  bool structure_ok = (sizes == std::multiset<int>{7, 7, 7, 14});
  e.that(mult.size() == 4, "distinct j count is " + std::to_string(mult.size()));
  e.that(structure_ok, "multiplicity pattern is not {7, 7, 7, 14}");

  MuZeroCurves curves = e_curves_mu0();
  std::vector<CycloElem> ejs;
  for (int i = 0; i < 5; ++i) ejs.push_back(j_invariant(curves.e1_to_e6[static_cast<size_t>(i)]));
  e.that(ejs[1] == ejs[2], "E2 and E3 are displayed as distinct but are not isomorphic");
  e.that(ejs[3] == ejs[4], "E4 and E5 should be isomorphic (same rotation orbit)");
  for (const auto& j : ejs) e.that(mult.count(j) == 1, "a displayed E_i is not a factor value");

  // The value missing from the displayed list: the orbit of {1, z, z^3, z^5}.
  CycloElem j_missing = j_invariant(
      EllipticModel({CycloElem(1), CycloElem::zeta(1), CycloElem::zeta(3), CycloElem::zeta(5)}));
  std::set<CycloElem> displayed(ejs.begin(), ejs.end());
  e.that(displayed.size() == 3, "displayed E1..E5 should cover exactly 3 distinct j values");
  e.that(mult.count(j_missing) == 1 && !displayed.count(j_missing),
         "the fourth factor value should be j({1, z, z^3, z^5}) and absent from the display");

  // The rational value of multiplicity 14 and the Galois-closed cubic triple.
  CycloElem j14;
  std::vector<CycloElem> j7;
  for (const auto& [v, n] : mult) (n == 14 ? j14 : j7.emplace_back()) = v;
  e.that(j14 == CycloElem(1792), "the multiplicity-14 value is not 1792");
  if (j7.size() == 3) {
    CycloElem e1 = j7[0] + j7[1] + j7[2];
    CycloElem e2 = j7[0] * j7[1] + j7[0] * j7[2] + j7[1] * j7[2];
    CycloElem e3 = j7[0] * j7[1] * j7[2];
    e.that(e1.is_rational() && e2.is_rational() && e3.is_rational(),
           "the three multiplicity-7 values are not a Galois-stable triple");
  } else {
    e.that(false, "expected exactly three multiplicity-7 values");
  }

  CycloElem j_e6 = j_invariant(curves.e1_to_e6[5]);
  r.note("j(E6) = " + j_e6.str() + " (the genus-2-factor curve; recorded, not matched)");

  if (r.status == CheckStatus::Pass) {
    r.status = CheckStatus::Flagged;
    r.note("the 35 four-point factors over the 7th roots of unity realize 4 distinct "
           "j-values with multiplicities (7, 14, 7, 7), not 5 values of multiplicity 7");
    r.note("the displayed E2 and E3 are already isomorphic (j = 1792, via x -> 1/x), as are "
           "E4 and E5 (same rotation orbit); the factor value j({1, z, z^3, z^5}) = " +
           j_missing.str() + " is missing from the displayed list");
  }
  return r;
}

CheckResult check_fano_lines(const CheckContext& ctx) {
  CheckResult r{"fano-lines", "§2.4", CheckStatus::Pass, {}};
  Expect e{r};

  auto lines = fano_lines(k_subgroup());
  std::vector<std::array<int, 3>> expected = {{1, 2, 4}, {1, 3, 7}, {1, 5, 6}, {2, 3, 5},
                                              {2, 6, 7}, {3, 4, 6}, {4, 5, 7}};
  std::sort(expected.begin(), expected.end());
  e.that(lines == expected, "derived Fano lines differ");

  int incidence_ok = 1;
  for (int i = 1; i <= 7 && incidence_ok; ++i) {
    int cnt = 0;
    for (const auto& l : lines) cnt += (l[0] == i || l[1] == i || l[2] == i);
    if (cnt != 3) incidence_ok = 0;
  }
  e.that(incidence_ok, "some index does not lie on exactly 3 lines");

  auto rel = quotient_relations(k_subgroup());
  e.that(rel[4] == std::vector<int>{1, 2} && rel[5] == std::vector<int>{2, 3} &&
             rel[6] == std::vector<int>{1, 2, 3} && rel[7] == std::vector<int>{1, 3},
         "quotient relations for K differ from the displayed a_j* expressions");
  auto rel_star = quotient_relations(k_star_subgroup());
  e.that(rel_star[4] == std::vector<int>{1, 3} && rel_star[5] == std::vector<int>{1, 2, 3} &&
             rel_star[6] == std::vector<int>{1, 2} && rel_star[7] == std::vector<int>{2, 3},
         "quotient relations for K* differ from the displayed b_j expressions");

  // The displayed T-table rows, as index sets of deleted branch points.
  const std::vector<std::pair<std::array<int, 2>, std::array<int, 3>>> table = {
      {{2, 3}, {2, 3, 5}}, {{1, 2}, {1, 2, 4}}, {{1, 3}, {1, 3, 7}}, {{1, 5}, {1, 5, 6}},
      {{2, 6}, {2, 6, 7}}, {{3, 4}, {3, 4, 6}}, {{4, 7}, {4, 5, 7}}};
  for (const auto& [pair, line] : table) {
    bool found = std::find(lines.begin(), lines.end(), line) != lines.end();
    bool covers = (line[0] == pair[0] || line[1] == pair[0] || line[2] == pair[0]) &&
                  (line[0] == pair[1] || line[1] == pair[1] || line[2] == pair[1]);
    e.that(found && covers,
           "T-table label (" + std::to_string(pair[0]) + "," + std::to_string(pair[1]) +
               ") does not sit on a derived line");
  }

  // The displayed subgroup-label list names L17, which is the same line as
  // L13; the {2,6,7} line of the T-table is missing from that list.
  auto line_of_pair = [&](int i, int j) -> std::array<int, 3> {
    for (const auto& l : lines)
      if ((l[0] == i || l[1] == i || l[2] == i) && (l[0] == j || l[1] == j || l[2] == j))
        return l;
    throw degenerate_input("pair not on any line");
  };
  bool l17_is_l13 = line_of_pair(1, 7) == line_of_pair(1, 3);
  e.that(l17_is_l13, "expected L17 and L13 to be the same order-4 subgroup");

  (void)ctx;
  if (r.status == CheckStatus::Pass) {
    r.status = CheckStatus::Flagged;
    r.note("the displayed subgroup list L12, L13, L15, L23, L17, L34, L47 repeats one line: "
           "L17 = L13 = {1,3,7} (a1*a7* = a3*); the seventh line {2,6,7} - the T26 row of "
           "the displayed table - is absent from that list");
    r.note("derived lines: {124} {137} {156} {235} {267} {346} {457}, a Fano plane");
  }
  return r;
}

CheckResult check_kstar_model(const CheckContext& ctx) {
  CheckResult r{"kstar-model", "§2.6", CheckStatus::Pass, {}};
  Expect e{r};

  KStarComparison cmp = compare_kstar_display(ctx.mu);
  e.that(cmp.displayed_rows_repeat, "displayed w1/w2 rows were expected to coincide");
  e.that(cmp.row_matches[0], "derived first row should match the display");
  e.that(!cmp.row_matches[1], "derived second row should differ from the repeated display row");

  if (r.status == CheckStatus::Pass) {
    r.status = CheckStatus::Flagged;
    r.note("the displayed S* model repeats (z-mu4)(z-mu5)(z-mu6) for both w1^2 and w2^2, "
           "which cannot both hold for a smooth genus-7 quotient");
    r.note("derived rows (lines through the pairs (2,3), (1,2), (1,3) of b-involutions): "
           "w1^2 = " + cmp.derived.rows[0].model.str() +
           "; w2^2 = " + cmp.derived.rows[1].model.str() +
           "; w3^2 = " + cmp.derived.rows[2].model.str());
    r.note("the displayed third row z(z-1)(z-mu4)(z-mu6) is the quotient by the line "
           "{1,5,7}, a valid but different choice");
  }
  return r;
}

CheckResult check_moduli_action(const CheckContext& ctx) {
  CheckResult r{"moduli-action", "§2.1", CheckStatus::Pass, {}};
  Expect e{r};

  e.that(group_order() == 5040, "closure of {A, B} has order " + std::to_string(group_order()));
  e.that(slot_is_transposition(slot_perm_A()), "A does not induce a transposition");
  e.that(slot_order(slot_perm_B()) == 7, "B does not induce a 7-cycle");

  const ModuliPoint& mu = ctx.mu;
  e.that(act_A(act_A(mu)) == mu, "A is not an involution on parameters");
  ModuliPoint b7 = mu;
  for (int i = 0; i < 7; ++i) b7 = act_B(b7);
  e.that(b7 == mu, "B^7 is not the identity on parameters");

  // The slot permutations really are the branch-set renormalizations.
  e.that(act_A(mu).branch_set().set_equal(mu.branch_set().apply(renormalizer_A())),
         "x -> 1/x does not realize the A action on branch sets");
  e.that(act_B(mu).branch_set().set_equal(mu.branch_set().apply(renormalizer_B(mu))),
         "x -> mu7/(mu7 - x) does not realize the B action on branch sets");
  for (int slot = 1; slot <= 7; ++slot) {
    e.that(renormalizer_A()(mu.branch_point(slot)) ==
               act_A(mu).branch_point(slot_perm_A()[static_cast<size_t>(slot - 1)]),
           "A slot tracking fails at slot " + std::to_string(slot));
    e.that(renormalizer_B(mu)(mu.branch_point(slot)) ==
               act_B(mu).branch_point(slot_perm_B()[static_cast<size_t>(slot - 1)]),
           "B slot tracking fails at slot " + std::to_string(slot));
  }

  // Every coordinate permutation T_sigma lies in the closure.
  std::array<int, 4> sigma{4, 5, 6, 7};
  std::sort(sigma.begin(), sigma.end());
  int checked = 0;
  do {
    SlotPerm target = slot_identity();
    for (int i = 0; i < 4; ++i) target[static_cast<size_t>(i + 3)] = sigma[static_cast<size_t>(i)];
    // target maps slot 3+i+1 -> value; as a slot permutation, coordinate j of
    // the new tuple is mu_{sigma(j)}: slot sigma(j) -> slot j.
    SlotPerm perm = slot_identity();
    for (int i = 0; i < 4; ++i) perm[static_cast<size_t>(sigma[static_cast<size_t>(i)] - 1)] = i + 4;
    auto word = word_for_slot_perm(perm);
    e.that(word.has_value(), "no word realizes a coordinate permutation");
    if (word) {
      ModuliPoint via_word = apply_word(*word, mu);
      ModuliPoint via_sigma = act_sigma(sigma, mu);
      e.that(via_word == via_sigma, "word action disagrees with T_sigma");
    }
    ++checked;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  e.that(checked == 24, "expected 24 coordinate permutations");

  if (r.status == CheckStatus::Pass)
    r.note("closure order 5040 = 7!, generators a transposition and a 7-cycle; all 24 "
           "T_sigma realized by explicit words");
  return r;
}

CheckResult check_duality(const CheckContext& ctx) {
  CheckResult r{"duality", "§2.6", CheckStatus::Pass, {}};
  Expect e{r};

  // T(x) = x/mu5 carries the branch set of mu onto the branch set of dual mu.
  auto scale = MoebiusMap(CycloElem(1), CycloElem(0), CycloElem(0), ctx.mu.mu(5));
  e.that(dual_mu(ctx.mu).branch_set().set_equal(ctx.mu.branch_set().apply(scale)),
         "x -> x/mu5 does not carry the branch set onto the dual branch set");

  OrbitWitness w = equivalent(mu_zero(), dual_mu(mu_zero()));
  e.that(w.equivalent, "mu0 and its dual are not orbit-equivalent");
  if (w.equivalent) r.note("mu0 ~ dual(mu0) via the word \"" + (w.word.empty() ? std::string("id") : w.word) + "\"");

  auto bw = branch_sets_equivalent(ctx.mu.branch_set(), dual_mu(ctx.mu).branch_set());
  e.that(bw.has_value(), "no Moebius map carries the branch set onto the dual branch set");

  if (r.status == CheckStatus::Pass)
    r.note("S and the dual S* quotient sit over Moebius-equivalent branch sets");
  return r;
}

CheckResult check_rotation_signature(const CheckContext&) {
  CheckResult r{"rotation-signature", "§3", CheckStatus::Pass, {}};
  Expect e{r};

  OrbSignature sig = rotation_quotient_signature();
  e.that(sig == OrbSignature{0, {2, 7, 7}}, "rotation quotient signature is not (0;2,7,7)");

  OrbSignature upstairs{0, std::vector<int>(7, 2)};
  e.that(upstairs.chi() == Rational(7) * sig.chi(),
         "chi_orb does not scale by the rotation order");

  SphereDichotomy d = sphere_quotient_dichotomy();
  e.that(d.both_chi_consistent, "both dichotomy cases should have chi_orb = -3/2");
  e.that(d.torus_orbit_forced_fixed == 3,
         "an order-7 symmetry should fix all 3 torus-case cone points");

  if (r.status == CheckStatus::Pass)
    r.note("signature (0;2,7,7); the genus-1 alternative is Riemann-Hurwitz-consistent but "
           "incompatible with an order-7 symmetry (its 3 cone points would all be fixed)");
  return r;
}

CheckResult check_field_kernel(const CheckContext& ctx) {
  CheckResult r{"field-kernel", "§1", CheckStatus::Pass, {}};
  Expect e{r};

  CycloElem phi_sum;
  for (long k = 0; k < 7; ++k) phi_sum += CycloElem::zeta(k);
  e.that(phi_sum.is_zero(), "1 + z + ... + z^6 != 0");

  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<int> coeff(-6, 6);
  auto rand_elem = [&] {
    std::array<Rational, 6> c;
    for (auto& x : c) x = Rational(coeff(rng), 1 + (rng() % 4));
    return CycloElem(c);
  };

  int identities = 0;
  for (int i = 0; i < 250; ++i) {
    CycloElem a = rand_elem(), b = rand_elem(), c = rand_elem();
    if ((a + b) + c != a + (b + c)) e.that(false, "associativity of + fails");
    if ((a * b) * c != a * (b * c)) e.that(false, "associativity of * fails");
    if (a * (b + c) != a * b + a * c) e.that(false, "distributivity fails");
    if (!(a + (-a)).is_zero()) e.that(false, "additive inverse fails");
    identities += 4;
    if (!a.is_zero()) {
      if (a * a.inverse() != CycloElem(1)) e.that(false, "multiplicative inverse fails");
      ++identities;
    }
  }

  const long prec = ctx.precision;
  int oracle_checked = 0;
  for (int i = 0; i < 100; ++i) {
    CycloElem a = rand_elem(), b = rand_elem();
    BigComplex diff = embed(a * b, prec) - embed(a, prec) * embed(b, prec);
    if (!diff.abs_below_pow2(-(prec / 2))) e.that(false, "embedding oracle disagrees on a product");
    BigComplex diff2 = embed(a + b, prec) - (embed(a, prec) + embed(b, prec));
    if (!diff2.abs_below_pow2(-(prec / 2))) e.that(false, "embedding oracle disagrees on a sum");
    oracle_checked += 2;
  }
  if (r.status == CheckStatus::Pass)
    r.note(std::to_string(identities) + " exact field identities and " +
           std::to_string(oracle_checked) + " embedding comparisons at " +
           std::to_string(prec) + " bits");
  return r;
}

using CheckFn = CheckResult (*)(const CheckContext&);

struct RegistryEntry {
  const char* name;
  CheckFn fn;
};

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> reg = {
      {"field-kernel", check_field_kernel},
      {"lemma-invariant-subgroups", check_lemma},
      {"free-action-genus", check_free_action_genus},
      {"smoothness-certificate", check_smoothness},
      {"quotient-model-relations", check_relations},
      {"fano-lines", check_fano_lines},
      {"kstar-model", check_kstar_model},
      {"moduli-action", check_moduli_action},
      {"duality", check_duality},
      {"automorphism-lift", check_automorphism_lift},
      {"fm-parameter", check_fm_parameter},
      {"fiber-product-pullback", check_fiber_pullback},
      {"t-curves-isomorphic", check_t_curves},
      {"thirty-five-factors", check_thirty_five},
      {"rotation-signature", check_rotation_signature},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : registry()) n.push_back(e.name);
    return n;
  }();
  return names;
}

const std::vector<std::string>& fm_check_names() {
  static const std::vector<std::string> names = {
      "automorphism-lift",   "fm-parameter",        "fiber-product-pullback",
      "t-curves-isomorphic", "thirty-five-factors", "duality",
      "rotation-signature",
  };
  return names;
}

CheckResult run_check(const std::string& name, const CheckContext& ctx) {
  for (const auto& e : registry())
    if (name == e.name) return e.fn(ctx);
  throw degenerate_input("unknown check: " + name);
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const CheckContext& ctx) {
  std::vector<CheckResult> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(run_check(n, ctx));
  return out;
}

std::string render_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  int pass = 0, fail = 0, flagged = 0;
  for (const auto& r : results) {
    std::string tag = r.status == CheckStatus::Pass     ? "PASS"
                      : r.status == CheckStatus::Fail   ? "FAIL"
                                                        : "FLAG";
    os << "[" << tag << "] " << r.name << "  (" << r.anchor << ")\n";
    for (const auto& d : r.details) os << "       - " << d << "\n";
    (r.status == CheckStatus::Pass ? pass : r.status == CheckStatus::Fail ? fail : flagged)++;
  }
  os << "summary: " << pass << " passed, " << flagged << " flagged discrepancies, " << fail
     << " failed\n";
  if (flagged > 0 && fail == 0)
    os << "flagged checks document source-text typos detected by exact recomputation; "
          "they are not implementation failures\n";
  return os.str();
}

std::string render_json(const std::vector<CheckResult>& results, bool with_timestamp) {
  nlohmann::json out;
  out["checks"] = nlohmann::json::array();
  int pass = 0, fail = 0, flagged = 0;
  for (const auto& r : results) {
    out["checks"].push_back({{"name", r.name},
                             {"anchor", r.anchor},
                             {"status", status_str(r.status)},
                             {"details", r.details}});
    (r.status == CheckStatus::Pass ? pass : r.status == CheckStatus::Fail ? fail : flagged)++;
  }
  out["summary"] = {{"pass", pass}, {"fail", fail}, {"flagged", flagged}};
  if (with_timestamp) {
    auto now = std::chrono::system_clock::now();
    out["generated_at"] =
        static_cast<std::int64_t>(std::chrono::duration_cast<std::chrono::seconds>(
                                      now.time_since_epoch())
                                      .count());
  }
  return out.dump(2);
}

int report_exit_code(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::Fail) return 1;
  return 0;
}

}  // namespace gfc
