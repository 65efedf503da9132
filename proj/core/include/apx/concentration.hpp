#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "apx/rational.hpp"

namespace apx {

/// Non-negative integer weights a_j on the window j in [-R, R]; weights
/// outside the window are zero.
class IntWeightSeq {
 public:
  /// `weights` lists a_{-R}, ..., a_R (odd length). Throws InvalidArgument
  /// on negative entries or an even-length list.
  explicit IntWeightSeq(std::vector<std::int64_t> weights);

  /// Builds the symmetric sequence from a_0, a_1, ..., a_R.
  static IntWeightSeq symmetric_from_half(std::span<const std::int64_t> half);

  std::int64_t radius() const noexcept { return static_cast<std::int64_t>(weights_.size() / 2); }
  /// a_j, zero outside [-R, R].
  std::int64_t at(std::int64_t j) const noexcept;
  std::int64_t total() const noexcept { return total_; }
  bool symmetric() const noexcept;
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t total_ = 0;
};

/// sum over i, j in [-R, R] of min(a_i a_j, a_i a_{i+j}, a_j a_{i+j}).
std::int64_t min_product_sum(const IntWeightSeq& seq);

struct ConcentrationCheck {
  std::int64_t lhs = 0;  // min_product_sum
  Rational rhs;          // (1 - eps) d^2
  bool hypothesis = false;  // lhs >= (1 - eps) d^2
  bool conclusion = false;  // a_0 >= (1 - eps) d
  bool ok = false;          // !hypothesis || conclusion
};

/// Checks "large min-product sum forces a_0 >= (1 - eps) d" on one
/// sequence. Throws SymmetryRequired for asymmetric input and
/// InvalidArgument for total = 0.
ConcentrationCheck concentration_check(const IntWeightSeq& seq, const Rational& eps);

struct ConcentrationViolation {
  std::vector<std::int64_t> weights;  // a_{-R}..a_R
  std::int64_t total = 0;
  std::int64_t lhs = 0;
  Rational rhs;
};

struct ConcentrationScan {
  std::int64_t checked = 0;
  std::vector<ConcentrationViolation> violations;
};

/// Every symmetric sequence with 1 <= total <= d_max supported in
/// [-radius, radius], in lexicographic order of (a_0, a_1, ..., a_R).
ConcentrationScan concentration_scan(std::int64_t d_max, std::int64_t radius, const Rational& eps,
                                     unsigned threads = 0);

}  // namespace apx
