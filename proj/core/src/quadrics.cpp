// SPDX-License-Identifier: MIT
#include "gfc/quadrics.hpp"

#include <bit>
#include <sstream>

#include "gfc/errors.hpp"

namespace gfc {

QuadricSystem::QuadricSystem(const ModuliPoint& mu) : mu_(mu) {
  for (int i = 1; i <= 5; ++i) {
    Row& r = rows_[static_cast<size_t>(i - 1)];
    r[0] = (i == 1) ? CycloElem(1) : mu.mu(i + 2);
    r[1] = CycloElem(1);
    r[static_cast<size_t>(i + 1)] = CycloElem(1);  // x_{i+2}^2 column
  }
}

const CycloElem& QuadricSystem::alpha(int i) const {
  if (i < 1 || i > 5) throw degenerate_input("quadric row index must be in 1..5");
  return rows_[static_cast<size_t>(i - 1)][0];
}

std::string QuadricSystem::str() const {
  std::ostringstream os;
  for (int i = 1; i <= 5; ++i) {
    os << "(" << alpha(i).str() << ")*x1^2 + x2^2 + x" << (i + 2) << "^2 = 0";
    if (i < 5) os << "\n";
  }
  return os.str();
}

namespace {

std::string alpha_name(int i) {
  return i == 1 ? std::string("1") : "mu" + std::to_string(i + 2);
}

}  // namespace

int SmoothnessCertificate::admissible_count() const {
  int n = 0;
  for (const auto& c : cases) n += c.admissible ? 1 : 0;
  return n;
}

SmoothnessCertificate smoothness_certificate(const ModuliPoint& mu) {
  QuadricSystem sys(mu);
  SmoothnessCertificate cert;
  cert.ok = true;

  // Omega gives alpha_i != 0 and alpha_i != alpha_j; re-check exactly so a
  // caller slipping past validation gets a witness instead of a bogus proof.
  for (int i = 1; i <= 5 && cert.ok; ++i) {
    if (sys.alpha(i).is_zero()) cert.ok = false;
    for (int j = i + 1; j <= 5 && cert.ok; ++j)
      if (sys.alpha(i) == sys.alpha(j)) cert.ok = false;
  }
  if (!cert.ok) {
    cert.witness = 0;
    return cert;
  }

  for (unsigned z = 0; z < 128; ++z) {
    VanishingCase c;
    c.zero_set = z;
    const bool z1 = z & 1u, z2 = z & 2u;
    std::vector<int> zero_tail;  // vanishing coordinates among x3..x7
    for (int j = 3; j <= 7; ++j)
      if (z & (1u << (j - 1))) zero_tail.push_back(j);

    if (z == 127) {
      c.reason = "all coordinates zero: not a projective point";
    } else if (z1 && z2) {
      // Each row i reads alpha_i*0 + 0 + x_{i+2}^2 = 0.
      c.reason = "x1 = x2 = 0 forces x3 = ... = x7 = 0, contradicting a declared nonzero coordinate";
    } else if (zero_tail.size() >= 2) {
      int p = zero_tail[0], q = zero_tail[1];
      int rp = p - 2, rq = q - 2;  // rows whose diagonal entries vanish
      c.reason = "rows " + std::to_string(rp) + " and " + std::to_string(rq) +
                 " give (" + alpha_name(rq) + " - " + alpha_name(rp) +
                 ")*x1^2 = 0, so x1 = 0, then x2^2 = 0: all coordinates vanish";
    } else if (zero_tail.size() == 1) {
      int k = zero_tail[0];
      int row = k - 2;
      if (z1) {
        c.reason = "row " + std::to_string(row) + " with x1 = x" + std::to_string(k) +
                   " = 0 forces x2^2 = 0, contradicting x2 != 0";
      } else if (z2) {
        c.reason = "row " + std::to_string(row) + " with x2 = x" + std::to_string(k) +
                   " = 0 forces " + alpha_name(row) + "*x1^2 = 0, contradicting x1 != 0";
      } else {
        // x1*x2 != 0; drop the dead diagonal column, keep column 1 and the
        // other four diagonal columns.
        c.admissible = true;
        c.minor_columns[0] = 1;
        int idx = 1;
        std::string prod = "2*" + alpha_name(row) + "*x1";
        for (int j = 3; j <= 7; ++j) {
          if (j == k) continue;
          c.minor_columns[static_cast<size_t>(idx++)] = j;
          prod += " * 2*x" + std::to_string(j);
        }
        c.minor_determinant = "+/- " + prod + " (nonzero: x1 != 0, " + alpha_name(row) +
                              " != 0, and the four diagonal entries are declared nonzero)";
      }
    } else {
      // No vanishing among x3..x7: the five diagonal columns do it, whatever
      // x1, x2 are (at most one of them vanishes here).
      c.admissible = true;
      std::string prod;
      for (int j = 3; j <= 7; ++j) {
        c.minor_columns[static_cast<size_t>(j - 3)] = j;
        if (j > 3) prod += " * ";
        prod += "2*x" + std::to_string(j);
      }
      c.minor_determinant = prod + " (nonzero: all five diagonal entries declared nonzero)";
    }
    cert.cases.push_back(std::move(c));
  }
  return cert;
}

std::string LinearAutWitness::str() const {
  std::ostringstream os;
  os << "perm(";
  for (int j = 0; j < 7; ++j) {
    if (j) os << ",";
    os << source_of[static_cast<size_t>(j)];
  }
  os << ") scales^2(";
  for (int j = 0; j < 7; ++j) {
    if (j) os << ",";
    os << squared_scale[static_cast<size_t>(j)].str();
  }
  os << ")";
  return os.str();
}

namespace {

CycloElem a_of_zeta(long k) { return apply_a(CycloElem::zeta(k)); }

}  // namespace

LinearAutWitness t_hat_witness() {
  LinearAutWitness w;
  w.source_of = {7, 1, 2, 3, 4, 5, 6};
  w.squared_scale[0] = CycloElem(1);
  w.squared_scale[1] = a_of_zeta(6);  // c2^2
  w.squared_scale[2] = CycloElem(1);
  w.squared_scale[3] = -a_of_zeta(3);  // c4 = i*sqrt(A(z^3))
  w.squared_scale[4] = -a_of_zeta(4);
  w.squared_scale[5] = -a_of_zeta(5);
  w.squared_scale[6] = -a_of_zeta(6);
  return w;
}

LinearAutWitness t_hat_witness_flipped() {
  LinearAutWitness w = t_hat_witness();
  for (int j = 3; j < 7; ++j)
    w.squared_scale[static_cast<size_t>(j)] = -w.squared_scale[static_cast<size_t>(j)];
  return w;
}

LinearAutWitness u_witness() {
  LinearAutWitness w;
  w.source_of = {2, 1, 7, 6, 5, 4, 3};
  w.squared_scale[0] = CycloElem(1);
  w.squared_scale[1] = a_of_zeta(6);  // d2^2
  w.squared_scale[2] = CycloElem(1);
  w.squared_scale[3] = a_of_zeta(3);
  w.squared_scale[4] = a_of_zeta(4);
  w.squared_scale[5] = a_of_zeta(5);
  w.squared_scale[6] = a_of_zeta(6);  // d7^2
  return w;
}

bool in_row_space(const std::vector<std::array<CycloElem, 7>>& rows,
                  const std::array<CycloElem, 7>& v) {
  // Exact elimination: reduce v against an echelon form of rows.
  std::vector<std::array<CycloElem, 7>> ech;
  std::vector<int> pivot;
  for (auto row : rows) {
    for (size_t r = 0; r < ech.size(); ++r) {
      const CycloElem& lead = row[static_cast<size_t>(pivot[r])];
      if (!lead.is_zero()) {
        CycloElem f = lead;  // echelon rows are normalized to pivot 1
        for (int c = 0; c < 7; ++c) row[static_cast<size_t>(c)] -= f * ech[r][static_cast<size_t>(c)];
      }
    }
    int p = -1;
    for (int c = 0; c < 7 && p < 0; ++c)
      if (!row[static_cast<size_t>(c)].is_zero()) p = c;
    if (p < 0) continue;
    CycloElem inv = row[static_cast<size_t>(p)].inverse();
    for (int c = 0; c < 7; ++c) row[static_cast<size_t>(c)] *= inv;
    ech.push_back(row);
    pivot.push_back(p);
  }
  std::array<CycloElem, 7> r = v;
  for (size_t i = 0; i < ech.size(); ++i) {
    const CycloElem& lead = r[static_cast<size_t>(pivot[i])];
    if (!lead.is_zero()) {
      CycloElem f = lead;
      for (int c = 0; c < 7; ++c) r[static_cast<size_t>(c)] -= f * ech[i][static_cast<size_t>(c)];
    }
  }
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool verify_linear_aut(const ModuliPoint& mu, const LinearAutWitness& w) {
  for (const auto& s : w.squared_scale)
    if (s.is_zero()) throw degenerate_input("witness scale must be nonzero");
  GenAut perm(w.source_of);  // validates the permutation

  QuadricSystem sys(mu);
  std::vector<std::array<CycloElem, 7>> rows(sys.rows().begin(), sys.rows().end());
  for (const auto& row : sys.rows()) {
    std::array<CycloElem, 7> pulled{};
    for (int j = 1; j <= 7; ++j) {
      const CycloElem& coeff = row[static_cast<size_t>(j - 1)];
      if (coeff.is_zero()) continue;
      int src = w.source_of[static_cast<size_t>(j - 1)];
      pulled[static_cast<size_t>(src - 1)] +=
          coeff * w.squared_scale[static_cast<size_t>(j - 1)];
    }
    if (!in_row_space(rows, pulled)) return false;
  }
  return true;
}

}  // namespace gfc
