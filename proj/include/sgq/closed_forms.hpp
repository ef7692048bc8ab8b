#pragma once

// Audit of a list of candidate closed-form solutions of n * p = g.
//
// The candidates below are checked term by term against `normal_form`,
// whose block elimination is exact and unique. Each candidate is evaluated
// on the blocks of a concrete g (g_ij / gamma_ij read by position) and on
// the coordinates u, eta, xi, v produced by the elimination.

#include <string>
#include <vector>

#include "json.hpp"
#include "sgq/flag_quotient.hpp"

namespace sgq {

struct ClosedFormCheck {
  int line = 0;            // 1-based line of the candidate list
  std::string symbol;      // quantity the candidate defines
  std::string formula;     // candidate right-hand side
  std::string compared_to; // elimination quantity it is compared with
  bool evaluable = false;  // false when block sizes do not conform
  bool matches = false;
  std::string note;
};

struct NotationIssue {
  std::string location;
  std::string written;
  std::string resolved;
};

/// Evaluates every candidate on g. Throws NotInBigCell.
std::vector<ClosedFormCheck> check_closed_forms(const SuperMatrix& g, const BlockProfile& bp);

/// Index and labelling inconsistencies in the candidate system that are not
/// numeric checks.
std::vector<NotationIssue> notation_issues();

/// Machine-readable report: {"profile", "checks": [...], "notation": [...],
/// "first_line_ok": bool, "mismatches": int}.
nlohmann::json closed_form_report(const SuperMatrix& g, const BlockProfile& bp);

}  // namespace sgq
