// SPDX-License-Identifier: MIT
//
// Batch verification runner for the genus-7 family toolkit. Every claim the
// library can decide in exact arithmetic is exposed as a named check;
// emitters dump the models and invariants for human diffing.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfc/checks.hpp"
#include "gfc/elliptic.hpp"
#include "gfc/embed.hpp"
#include "gfc/errors.hpp"
#include "gfc/group.hpp"
#include "gfc/moduli.hpp"
#include "gfc/orbifold.hpp"
#include "gfc/serialize.hpp"

#include <json.hpp>

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadMu = 3;
constexpr int kExitOmega = 4;

struct Options {
  std::string mu = "mu0";
  std::string mu_prime;
  std::string quotient = "K";
  std::string format = "text";
  long precision = 128;
};

int emit_report(const std::vector<gfc::CheckResult>& results, const Options& opt) {
  if (opt.format == "json")
    std::cout << gfc::render_json(results) << "\n";
  else
    std::cout << gfc::render_text(results);
  return gfc::report_exit_code(results);
}

int run_named(const std::vector<std::string>& names, const Options& opt) {
  gfc::CheckContext ctx;
  ctx.mu = gfc::parse_mu_argument(opt.mu);
  ctx.precision = opt.precision;
  return emit_report(gfc::run_checks(names, ctx), opt);
}

int run_j_report(const Options& opt) {
  gfc::ModuliPoint mu = gfc::parse_mu_argument(opt.mu);
  nlohmann::json out;
  auto put = [&](const std::string& label, const gfc::CycloElem& j) {
    out[label] = {{"j", nlohmann::json::parse(gfc::cyclo_to_json(j))},
                  {"approx", gfc::embed(j, opt.precision).str(20)}};
  };
  // Displayed T-labels: the unique listed pair contained in each Fano line.
  const std::vector<std::array<int, 2>> label_pairs = {{2, 3}, {1, 2}, {1, 3}, {1, 5},
                                                       {2, 6}, {3, 4}, {4, 7}};
  for (const auto& t : gfc::t_curves(mu)) {
    std::string label = gfc::line_label(t.line);
    for (const auto& p : label_pairs) {
      bool a = t.line[0] == p[0] || t.line[1] == p[0] || t.line[2] == p[0];
      bool b = t.line[0] == p[1] || t.line[1] == p[1] || t.line[2] == p[1];
      if (a && b) label = "T" + std::to_string(p[0]) + std::to_string(p[1]);
    }
    put(label, gfc::j_invariant(t.model));
  }
  if (mu == gfc::mu_zero()) {
    auto curves = gfc::e_curves_mu0();
    put("E", gfc::j_invariant(curves.e_as_printed));
    for (int i = 0; i < 6; ++i)
      put("E" + std::to_string(i + 1), gfc::j_invariant(curves.e1_to_e6[static_cast<size_t>(i)]));
  }
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : out.items())
      std::cout << k << ": j = " << v["approx"].get<std::string>() << "\n";
  }
  return 0;
}

int run_genus_report(const Options& opt) {
  using gfc::OrbSignature;
  struct Row {
    std::string label;
    gfc::Subgroup j;
  };
  std::vector<Row> rows;
  rows.push_back({"{1}", gfc::Subgroup()});
  rows.push_back({"K", gfc::k_subgroup()});
  rows.push_back({"K*", gfc::k_star_subgroup()});
  for (int r = 1; r <= 7; ++r)
    rows.push_back({"<K, a" + std::to_string(r) + ">",
                    gfc::preimage_with(gfc::k_subgroup(), {r})});
  for (const auto& line : gfc::fano_lines(gfc::k_subgroup()))
    rows.push_back({"<K, a" + std::to_string(line[0]) + ", a" + std::to_string(line[1]) + ">",
                    gfc::preimage_with(gfc::k_subgroup(), {line[0], line[1]})});
  rows.push_back({"H", gfc::full_group()});

  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    OrbSignature sig = gfc::quotient_genus_and_cones(row.j);
    out.push_back({{"subgroup", row.label},
                   {"order", row.j.order()},
                   {"genus", sig.genus},
                   {"cone_orders", sig.cone_orders}});
  }
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("%-16s %6s %6s  %s\n", "subgroup", "order", "genus", "cone orders");
    for (const auto& row : out) {
      std::string cones;
      for (const auto& c : row["cone_orders"]) {
        if (!cones.empty()) cones += ",";
        cones += std::to_string(c.get<int>());
      }
      std::printf("%-16s %6d %6d  [%s]\n", row["subgroup"].get<std::string>().c_str(),
                  row["order"].get<int>(), row["genus"].get<int>(),
                  cones.c_str());
    }
  }
  return 0;
}

int run_equiv(const Options& opt) {
  gfc::ModuliPoint mu = gfc::parse_mu_argument(opt.mu);
  gfc::ModuliPoint mu_prime = gfc::parse_mu_argument(opt.mu_prime);
  gfc::OrbitWitness w = gfc::equivalent(mu, mu_prime);
  if (opt.format == "json") {
    nlohmann::json out = {{"equivalent", w.equivalent}};
    if (w.equivalent) out["word"] = w.word.empty() ? "id" : w.word;
    std::cout << out.dump(2) << "\n";
  } else if (w.equivalent) {
    std::cout << (w.word.empty() ? "id" : w.word) << "\n";
  } else {
    std::cout << "inequivalent\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for the genus-7 generalized-Fermat family "
               "and the Fricke-Macbeath specialization"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_mu = true) {
    if (with_mu)
      sub->add_option("--mu", opt.mu, "parameter: JSON, \"mu0\", or \"random[:SEED]\"");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--precision", opt.precision, "embedding-oracle precision in bits")
        ->check(CLI::Range(64L, 4096L));
  };

  auto* lemma = app.add_subcommand("verify-lemma", "subgroup enumeration and the invariance lemma");
  add_common(lemma, false);
  auto* smooth = app.add_subcommand("verify-smooth", "smoothness certificate for the quadric model");
  add_common(smooth);
  auto* aut = app.add_subcommand("verify-aut", "automorphism lifts at mu0");
  add_common(aut, false);
  auto* rel = app.add_subcommand("verify-relations", "quotient-model relation system");
  add_common(rel);
  auto* fm = app.add_subcommand("verify-fm", "full mu0 specialization suite");
  add_common(fm, false);
  auto* all = app.add_subcommand("verify-all", "every registered check");
  add_common(all);
  auto* emit = app.add_subcommand("emit-model", "dump quadrics, invariants, relations, fiber product");
  add_common(emit);
  emit->add_option("--quotient", opt.quotient, "K or Kstar")
      ->check(CLI::IsMember({"K", "Kstar"}));
  auto* jrep = app.add_subcommand("j-report", "j-invariants of the seven elliptic quotients");
  add_common(jrep);
  auto* genus = app.add_subcommand("genus-report", "genus and cone table over the subgroup chain");
  add_common(genus, false);
  auto* equivc = app.add_subcommand("equiv", "orbit equivalence of two parameters");
  add_common(equivc);
  equivc->add_option("--mu-prime", opt.mu_prime, "second parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (lemma->parsed()) return run_named({"lemma-invariant-subgroups"}, opt);
    if (smooth->parsed()) return run_named({"smoothness-certificate"}, opt);
    if (aut->parsed()) return run_named({"automorphism-lift"}, opt);
    if (rel->parsed()) return run_named({"quotient-model-relations"}, opt);
    if (fm->parsed()) return run_named(gfc::fm_check_names(), opt);
    if (all->parsed()) return run_named(gfc::all_check_names(), opt);
    if (emit->parsed()) {
      std::cout << gfc::emit_model(gfc::parse_mu_argument(opt.mu), opt.quotient,
                                   opt.format == "text");
      if (opt.format == "text") std::cout << "\n";
      return 0;
    }
    if (jrep->parsed()) return run_j_report(opt);
    if (genus->parsed()) return run_genus_report(opt);
    if (equivc->parsed()) return run_equiv(opt);
  } catch (const gfc::omega_violation& e) {
    std::cerr << "omega violation: " << e.what() << "\n";
    return kExitOmega;
  } catch (const gfc::parse_error& e) {
    std::cerr << "bad parameter: " << e.what() << "\n";
    return kExitBadMu;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
