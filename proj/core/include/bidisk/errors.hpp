#pragma once

#include <stdexcept>
#include <string>

namespace bidisk {

// Base class for every error raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument lies outside an operation's stated domain.
struct domain_error : error {
  using error::error;
};

// A Gram determinant vanished; the generating symbol is inadmissible.
struct singular_gram_error : error {
  using error::error;
};

// Vector/row lengths do not match the expected dimension.
struct dimension_error : error {
  using error::error;
};

// Certified sign evaluation hit the hard interval-width cap.
struct refinement_budget_error : error {
  using error::error;
};

// Partial-fraction shifts must be pairwise distinct.
struct duplicate_shift_error : error {
  using error::error;
};

// An internal exact identity failed; signals a formula regression.
struct identity_violation_error : error {
  using error::error;
};

// A monotonicity certificate found a non-positive difference.
struct certificate_error : error {
  certificate_error(const std::string& what, unsigned long first_k)
      : error(what), first_k(first_k) {}
  unsigned long first_k;
};

}  // namespace bidisk
