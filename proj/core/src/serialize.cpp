// SPDX-License-Identifier: MIT
#include "gfc/serialize.hpp"

#include <random>

#include <json.hpp>

#include "gfc/errors.hpp"
#include "gfc/quotient_model.hpp"

namespace gfc {

using nlohmann::json;

namespace {

json cyclo_json(const CycloElem& a) {
  json arr = json::array();
  for (const auto& c : a.coeffs()) arr.push_back(format_rational(c));
  return arr;
}

CycloElem cyclo_from(const json& j) {
  if (!j.is_array() || j.size() != 6)
    throw parse_error("cyclotomic element must be an array of 6 rationals");
  std::array<Rational, 6> coeffs;
  for (size_t i = 0; i < 6; ++i) {
    if (!j[i].is_string()) throw parse_error("cyclotomic coefficients must be strings");
    coeffs[i] = parse_rational(j[i].get<std::string>());
  }
  return CycloElem(coeffs);
}

json p1_json(const P1Point& p) {
  if (p.is_infinity()) return json{{"inf", true}};
  return json{{"val", cyclo_json(p.value())}};
}

P1Point p1_from(const json& j) {
  if (!j.is_object()) throw parse_error("P1 point must be an object");
  if (j.contains("inf")) {
    if (j["inf"].get<bool>()) return P1Point::infinity();
    throw parse_error("\"inf\" must be true when present");
  }
  if (!j.contains("val")) throw parse_error("P1 point needs \"inf\" or \"val\"");
  return P1Point::finite(cyclo_from(j["val"]));
}

json moduli_json(const ModuliPoint& mu) {
  json out;
  for (int k = 4; k <= 7; ++k) out["mu" + std::to_string(k)] = cyclo_json(mu.mu(k));
  return out;
}

CycloElem coordinate_from(const json& j) {
  // A coordinate may be a bare rational string or a 6-coefficient array.
  if (j.is_string()) return CycloElem(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return CycloElem(static_cast<long>(j.get<long long>()));
  return cyclo_from(j);
}

ModuliPoint moduli_from(const json& j) {
  if (j.is_array()) {
    if (j.size() != 4) throw parse_error("mu array must have 4 entries");
    return ModuliPoint(coordinate_from(j[0]), coordinate_from(j[1]), coordinate_from(j[2]),
                       coordinate_from(j[3]));
  }
  if (j.is_object()) {
    for (int k = 4; k <= 7; ++k)
      if (!j.contains("mu" + std::to_string(k))) throw parse_error("missing mu" + std::to_string(k));
    return ModuliPoint(coordinate_from(j["mu4"]), coordinate_from(j["mu5"]),
                       coordinate_from(j["mu6"]), coordinate_from(j["mu7"]));
  }
  throw parse_error("mu must be a JSON array or object");
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON: " + text);
  return j;
}

}  // namespace

std::string cyclo_to_json(const CycloElem& a) { return cyclo_json(a).dump(); }

CycloElem cyclo_from_json(const std::string& text) { return cyclo_from(parse_json(text)); }

std::string p1_to_json(const P1Point& p) { return p1_json(p).dump(); }

P1Point p1_from_json(const std::string& text) { return p1_from(parse_json(text)); }

std::string moduli_to_json(const ModuliPoint& mu) { return moduli_json(mu).dump(); }

ModuliPoint moduli_from_json(const std::string& text) { return moduli_from(parse_json(text)); }

std::string subgroup_to_json(const Subgroup& s) {
  json arr = json::array();
  for (const auto& e : s.elements()) arr.push_back(e.mask());
  return arr.dump();
}

ModuliPoint random_omega_point(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::array<CycloElem, 4> c;
    for (auto& x : c) x = CycloElem(Rational(num(rng), den(rng)));
    try {
      return ModuliPoint(c[0], c[1], c[2], c[3]);
    } catch (const omega_violation&) {
    }
  }
  throw degenerate_input("could not draw an Omega point");
}

ModuliPoint parse_mu_argument(const std::string& arg) {
  if (arg == "mu0") return mu_zero();
  if (arg == "random") return random_omega_point(0xC0FFEE);
  if (arg.rfind("random:", 0) == 0) {
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(arg.substr(7));
    } catch (const std::exception&) {
      throw parse_error("bad random seed in: " + arg);
    }
    return random_omega_point(seed);
  }
  return moduli_from(parse_json(arg));
}

std::string emit_model(const ModuliPoint& mu, const std::string& quotient, bool text) {
  if (quotient != "K" && quotient != "Kstar")
    throw parse_error("quotient must be K or Kstar");
  const Subgroup k = quotient == "K" ? k_subgroup() : k_star_subgroup();

  QuadricSystem sys(mu);
  auto monomials = invariant_monomials(k);
  auto fp = fiber_product_model(mu, k);

  if (!text) {
    json out;
    out["mu"] = moduli_json(mu);
    out["quotient"] = quotient;
    json quad = json::array();
    for (const auto& row : sys.rows()) {
      json r = json::array();
      for (const auto& c : row) r.push_back(cyclo_json(c));
      quad.push_back(r);
    }
    out["quadrics"] = quad;
    json inv = json::array();
    for (const auto& m : monomials) inv.push_back(m);
    out["invariants"] = inv;
    json rel = json::array();
    for (const auto& [lhs, rhs] : binomial_relations()) rel.push_back(json{{"lhs", lhs}, {"rhs", rhs}});
    for (int i = 1; i <= 5; ++i) {
      json row;
      row["linear"] = json::array();
      row["linear"].push_back(cyclo_json(sys.alpha(i)));
      row["terms"] = json::array({"t1", "t2", i == 5 ? "1" : "t" + std::to_string(i + 2)});
      rel.push_back(row);
    }
    out["relations"] = rel;
    json rows = json::array();
    for (const auto& r : fp.rows) {
      json row;
      row["line"] = r.line;
      row["roots"] = json::array();
      for (const auto& p : r.model.branch_points()) row["roots"].push_back(p1_json(p));
      rows.push_back(row);
    }
    out["fiber_product"] = rows;
    if (quotient == "Kstar") {
      auto cmpres = compare_kstar_display(mu);
      out["display_comparison"] = {
          {"rows_match", cmpres.row_matches},
          {"displayed_rows_repeat", cmpres.displayed_rows_repeat},
      };
    }
    return out.dump(2);
  }

  std::string s;
  s += "quadrics (mu = " + mu.str() + "):\n" + sys.str() + "\n\n";
  s += "invariant monomials (" + std::to_string(monomials.size()) + "):\n";
  for (const auto& m : monomials) s += "  " + monomial_str(m) + "\n";
  s += "\nbinomial relations:\n";
  for (const auto& [lhs, rhs] : binomial_relations()) {
    std::string l, r;
    for (int i : lhs) l += (l.empty() ? "t" : "*t") + std::to_string(i);
    for (int i : rhs) r += (r.empty() ? "t" : "*t") + std::to_string(i);
    s += "  " + l + " = " + r + "\n";
  }
  s += "linear relations:\n";
  for (int i = 1; i <= 5; ++i)
    s += "  (" + sys.alpha(i).str() + ")*t1 + t2 + " + (i == 5 ? std::string("1") : "t" + std::to_string(i + 2)) +
         " = 0\n";
  s += "\nfiber product rows:\n";
  for (const auto& r : fp.rows) {
    s += "  line {" + std::to_string(r.line[0]) + "," + std::to_string(r.line[1]) + "," +
         std::to_string(r.line[2]) + "}: " + r.model.str() + "\n";
  }
  if (quotient == "Kstar") {
    auto cmpres = compare_kstar_display(mu);
    s += "\ndisplayed-model comparison: rows match = [";
    for (int i = 0; i < 3; ++i)
      s += std::string(cmpres.row_matches[static_cast<size_t>(i)] ? "yes" : "NO") + (i < 2 ? ", " : "");
    s += "]";
    if (cmpres.displayed_rows_repeat)
      s += "; the displayed first and second right-hand sides coincide (flagged)";
    s += "\n";
  }
  return s;
}

}  // namespace gfc
