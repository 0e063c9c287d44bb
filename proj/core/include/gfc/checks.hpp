// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "gfc/moduli_point.hpp"

namespace gfc {

/// pass: the claim holds as displayed. fail: an implementation-level failure
/// (never expected). flagged: the toolkit's derivation contradicts the
/// displayed claim in a documented way - a source-text discrepancy, not an
/// implementation failure; flagged checks do not affect the exit code.
enum class CheckStatus { Pass, Fail, Flagged };

std::string status_str(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string anchor;  // statement anchor, e.g. "Lemma 3" or "eq. (3)"
  CheckStatus status = CheckStatus::Fail;
  std::vector<std::string> details;
};

struct CheckContext {
  ModuliPoint mu;       // parameter for mu-dependent checks
  long precision = 128; // embedding-oracle precision (reporting only)
  CheckContext();       // defaults to mu0
};

/// Names of all registered checks, in fixed report order.
const std::vector<std::string>& all_check_names();
/// The mu0-specialization subsuite (verify-fm).
const std::vector<std::string>& fm_check_names();

CheckResult run_check(const std::string& name, const CheckContext& ctx);
std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const CheckContext& ctx);

std::string render_text(const std::vector<CheckResult>& results);
/// Deterministic except for the "generated_at" field.
std::string render_json(const std::vector<CheckResult>& results, bool with_timestamp = true);

/// 0 when no check failed (flagged discrepancies are not failures).
int report_exit_code(const std::vector<CheckResult>& results);

}  // namespace gfc
