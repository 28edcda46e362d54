#pragma once

#include <stdexcept>
#include <string>

namespace okubo {

// Error codes surface verbatim in CLI error bodies.
namespace errc {
inline constexpr const char* kInvalidInput = "invalid_input";
inline constexpr const char* kDimensionMismatch = "dimension_mismatch";
inline constexpr const char* kSingularMatrix = "singular_matrix";
inline constexpr const char* kNotAnEigenvalue = "not_an_eigenvalue";
inline constexpr const char* kDegenerateParameters = "degenerate_parameters";
inline constexpr const char* kDegenerateChart = "degenerate_chart";
inline constexpr const char* kDConditionFails = "d_condition_fails";
inline constexpr const char* kEigenvectorDegeneracy = "eigenvector_degeneracy";
inline constexpr const char* kAdmissibilityViolated = "admissibility_violated";
inline constexpr const char* kBlockForm = "block_form_violated";
inline constexpr const char* kOutsideDisc = "outside_disc";
inline constexpr const char* kOutOfRange = "out_of_range";
inline constexpr const char* kQuadrature = "quadrature_nonconvergence";
inline constexpr const char* kInternal = "internal_inconsistency";
}  // namespace errc

/// Exception carrying a machine-readable code and an optional context string
/// (usually the offending quantity).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, std::string context = {})
      : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  std::string code_;
  std::string context_;
};

}  // namespace okubo
