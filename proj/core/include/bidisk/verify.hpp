#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bidisk/symbol.hpp"

namespace bidisk::verify {

struct PropertyResult {
  std::string suite;
  std::string property;
  bool passed = false;
  std::string detail;  // first counterexample, or a short summary when passed
  double seconds = 0.0;
};

/// Knobs shared by the CLI `verify` command and the acceptance suite; the
/// defaults are the stated verification ranges.
struct VerifyOptions {
  unsigned long det_n_max = 200;
  unsigned cofactor_n_max = 40;
  unsigned recurrence_n_max = 60;
  unsigned series_k_max = 40;
  unsigned long partial_truncation = 1000;
  unsigned enclosure_k_max = 20;
  unsigned grid_max = 25;
  unsigned defect_n_max = 12;
  unsigned eigen_n_max = 100;
  unsigned fh_alpha_max = 3;
  unsigned fh_n_max = 60;
  unsigned fh_vanish_n_max = 20;
  unsigned long cert_k_max = 500;
  unsigned long analytic_k_max = 1000000;
  unsigned long residual_k_lo = 10;
  unsigned long residual_k_hi = 200;
  unsigned long sk_soundness_k_max = 10000;
  unsigned long two_route_k_max = 100;
  /// Testing hook: "pf-coeff" corrupts one partial-fraction amplitude inside
  /// the series=closed-form check so regression detection can be exercised.
  std::string inject_fault;
};

// Individual properties. Each returns a populated PropertyResult and never
// throws on mathematical failure (failures are reported in the result).
PropertyResult det_closed_forms(const VerifyOptions& opt = {});
PropertyResult cofactor_rows_vs_minors(const VerifyOptions& opt = {});
PropertyResult cofactor_recurrence(const VerifyOptions& opt = {});
PropertyResult invariant_values_exact(const VerifyOptions& opt = {});
PropertyResult series_matches_closed_form(const VerifyOptions& opt = {});
PropertyResult partial_sums_within_tail(const VerifyOptions& opt = {});
PropertyResult pairing_grid_equality(const VerifyOptions& opt = {});
PropertyResult defect_space_properties(const VerifyOptions& opt = {});
PropertyResult core_operator_identities(const VerifyOptions& opt = {});
PropertyResult fisher_hartwig_consistency(const VerifyOptions& opt = {});
PropertyResult fisher_hartwig_exponents(const VerifyOptions& opt = {});
PropertyResult monotonicity(const VerifyOptions& opt = {});
PropertyResult residual_bounds(const VerifyOptions& opt = {});
PropertyResult sk_enclosure_soundness(const VerifyOptions& opt = {});
PropertyResult delta_two_route(const VerifyOptions& opt = {});

/// Suites: "linalg", "fh", "invariants", "asymptotics", or "all".
std::vector<std::string> suite_names();
std::vector<PropertyResult> run_suite(std::string_view suite, const VerifyOptions& opt = {});

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace bidisk::verify
