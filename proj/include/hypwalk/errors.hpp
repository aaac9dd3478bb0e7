#pragma once

#include <stdexcept>
#include <string>

namespace hypwalk {

/// Bad arguments, malformed input files, mixed space variants.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Floating-point degradation: determinant drift, overflow, points leaving
/// the upper half-plane, indeterminate trace classification.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or table would exceed its configured size budget.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Brute-force verification contradicted an issued certificate. Signals an
/// implementation bug or an underestimated hyperbolicity constant.
struct CertificateRefuted : std::logic_error {
  explicit CertificateRefuted(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hypwalk
