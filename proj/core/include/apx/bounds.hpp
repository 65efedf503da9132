#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apx/rational.hpp"

namespace apx {

/// n/|S| = q + alpha with q a positive integer and alpha in [0,1).
struct SizeProfile {
  std::int64_t q = 1;
  Rational alpha;
};

/// Throws InvalidArgument unless 1 <= d <= n.
SizeProfile size_profile(std::int64_t n, std::int64_t d);

enum class Branch { term1, term2, gamma0 };
std::string to_string(Branch b);

struct BoundValue {
  Rational value;
  Branch active_branch = Branch::term1;
  Rational term1;
  Rational term2;
};

/// 949/1000.
Rational default_gamma0();

/// (q^2 - alpha q + alpha^2) / q^2
Rational bound_term1(std::int64_t q, const Rational& alpha);
/// (q^2 + 2 alpha q + 4 alpha^2 - 6 alpha + 3) / (q+1)^2
Rational bound_term2(std::int64_t q, const Rational& alpha);

/// max(term1, term2, gamma0), exactly. The branch label is the first
/// maximal branch in the order term1, term2, gamma0. Throws InvalidArgument
/// unless q >= 1 and 0 <= alpha <= 1 (alpha = 1 is accepted).
BoundValue extremal_bound(std::int64_t q, const Rational& alpha, const Rational& gamma0 = default_gamma0());

/// 1 - alpha + alpha^2: the pigeonhole bound on Prob[S] when |S| > n/2.
Rational base_case_bound(const Rational& alpha);

/// q*C(d+1,3) + C(r,3) where n = q(d+1) + r, 0 <= r <= d: the conjectured
/// maximum triangle count for n vertices and maximum degree d.
std::int64_t gls_bound(std::int64_t n, std::int64_t d);

/// (q + alpha^3) / (q + alpha).
Rational sufficiency_threshold(std::int64_t q, const Rational& alpha);

struct GlsSufficiency {
  Rational m;          // extremal_bound(q, alpha).value
  Rational threshold;  // (q + alpha^3)/(q + alpha)
  bool holds = false;  // m <= threshold
  Rational identity1;  // threshold - term1
  Rational identity2;  // threshold - term2
  bool identity1_matches = false;
  bool identity2_matches = false;
};

/// Checks whether the sum-closure bound implies the triangle conjecture at
/// (q, alpha), and verifies both difference identities exactly:
///   threshold - term1 = alpha^3 (q^2-1) / (q^2 (q+alpha))
///   threshold - term2 = (1-alpha)^2 (q-1)((2+alpha)q + 3alpha) / ((q+1)^2 (q+alpha))
GlsSufficiency gls_sufficiency(std::int64_t q, const Rational& alpha, const Rational& gamma0 = default_gamma0());

struct ThresholdMinimum {
  double value = 0;
  double argmin = 0;
};

/// min over alpha in {0, 1/steps, ..., 1} of (q + alpha^3)/(q + alpha).
ThresholdMinimum threshold_minimum(std::int64_t q, std::int64_t steps = 10000);

/// Smallest q in [1, q_limit] such that gamma0 <= (q+alpha^3)/(q+alpha) for
/// every alpha on the grid, and for every larger q up to q_limit. Returns 0
/// when none exists.
std::int64_t gls_threshold_q(const Rational& gamma0, std::int64_t steps = 10000, std::int64_t q_limit = 100);

struct ScalingCheck {
  std::int64_t q_prime = 0;
  Rational alpha_prime;
  Rational lhs;  // eta^2 F(q', alpha') + 3 (1-eta)^2
  Rational rhs;  // F(q, alpha)
  bool holds_le = false;
  bool strict = false;
};

/// Compares eta^2 F(q',alpha') + 3(1-eta)^2 against F(q,alpha) with
/// q' = floor((q+alpha)/(k eta)), alpha' = (q+alpha)/(k eta) - q'.
/// Requires q >= 2, alpha in [0,1], 1 <= k <= q, eta in (3/4, 1]
/// (InvalidArgument); q' = 0 raises OutOfScalingRange.
ScalingCheck scaling_check(std::int64_t q, const Rational& alpha, std::int64_t k, const Rational& eta,
                           const Rational& gamma0 = default_gamma0());

struct ScalingPoint {
  std::int64_t q = 0;
  Rational alpha;
  std::int64_t k = 0;
  Rational eta;
  Rational lhs;
  Rational rhs;
};

struct ScalingScan {
  std::int64_t checked = 0;
  std::vector<ScalingPoint> violations;  // lhs > rhs
  std::vector<ScalingPoint> equalities;  // lhs == rhs
};

/// Grid scan of scaling_check over q in [2, q_max], every k in [1, q],
/// alpha_i = i/(alpha_steps-1) and eta_j = 3/4 + j/(4 eta_steps),
/// j = 1..eta_steps. Point lists are sorted by (q, alpha, k, eta).
ScalingScan scaling_scan(std::int64_t q_max, std::int64_t alpha_steps, std::int64_t eta_steps,
                         const Rational& gamma0 = default_gamma0(), unsigned threads = 0);

}  // namespace apx
