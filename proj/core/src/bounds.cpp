#include "apx/bounds.hpp"

#include <algorithm>
#include <tuple>

#include "apx/errors.hpp"
#include "apx/parallel.hpp"

namespace apx {

namespace {

void require_alpha(const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw InvalidArgument("alpha must lie in [0,1], got " + to_string(alpha));
}

std::int64_t choose3(std::int64_t m) {
  if (m < 3) return 0;
  return m * (m - 1) * (m - 2) / 6;
}

}  // namespace

SizeProfile size_profile(std::int64_t n, std::int64_t d) {
  if (d < 1 || d > n) {
    throw InvalidArgument("size profile needs 1 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
  SizeProfile p;
  p.q = n / d;
  p.alpha = make_rational(n % d, d);
  return p;
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::term1: return "term1";
    case Branch::term2: return "term2";
    case Branch::gamma0: return "gamma0";
  }
  return "unknown";
}

Rational default_gamma0() { return make_rational(949, 1000); }

Rational bound_term1(std::int64_t q, const Rational& alpha) {
  Rational qq(static_cast<long>(q));
  Rational value = (qq * qq - alpha * qq + alpha * alpha) / (qq * qq);
  value.canonicalize();
  return value;
}

Rational bound_term2(std::int64_t q, const Rational& alpha) {
  Rational qq(static_cast<long>(q));
  Rational value = (qq * qq + 2 * alpha * qq + 4 * alpha * alpha - 6 * alpha + 3) / ((qq + 1) * (qq + 1));
  value.canonicalize();
  return value;
}

BoundValue extremal_bound(std::int64_t q, const Rational& alpha, const Rational& gamma0) {
  if (q < 1) throw InvalidArgument("q must be >= 1, got " + std::to_string(q));
  require_alpha(alpha);
  BoundValue b;
  b.term1 = bound_term1(q, alpha);
  b.term2 = bound_term2(q, alpha);
  b.value = b.term1;
  b.active_branch = Branch::term1;
  if (b.term2 > b.value) {
    b.value = b.term2;
    b.active_branch = Branch::term2;
  }
  if (gamma0 > b.value) {
    b.value = gamma0;
    b.active_branch = Branch::gamma0;
  }
  return b;
}

Rational base_case_bound(const Rational& alpha) {
  require_alpha(alpha);
  Rational value = 1 - alpha + alpha * alpha;
  value.canonicalize();
  return value;
}

std::int64_t gls_bound(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 0) throw InvalidArgument("gls_bound needs n >= 1 and d >= 0");
  const std::int64_t q = n / (d + 1);
  const std::int64_t r = n % (d + 1);
  return q * choose3(d + 1) + choose3(r);
}

Rational sufficiency_threshold(std::int64_t q, const Rational& alpha) {
  Rational qq(static_cast<long>(q));
  Rational value = (qq + alpha * alpha * alpha) / (qq + alpha);
  value.canonicalize();
  return value;
}

GlsSufficiency gls_sufficiency(std::int64_t q, const Rational& alpha, const Rational& gamma0) {
  BoundValue bound = extremal_bound(q, alpha, gamma0);
  GlsSufficiency r;
  r.m = bound.value;
  r.threshold = sufficiency_threshold(q, alpha);
  r.holds = r.m <= r.threshold;
  r.identity1 = r.threshold - bound.term1;
  r.identity2 = r.threshold - bound.term2;

  Rational qq(static_cast<long>(q));
  Rational closed1 = alpha * alpha * alpha * (qq * qq - 1) / (qq * qq * (qq + alpha));
  Rational closed2 = (1 - alpha) * (1 - alpha) * (qq - 1) * ((2 + alpha) * qq + 3 * alpha) /
                     ((qq + 1) * (qq + 1) * (qq + alpha));
  closed1.canonicalize();
  closed2.canonicalize();
  r.identity1_matches = r.identity1 == closed1 && r.identity1 >= 0;
  r.identity2_matches = r.identity2 == closed2 && r.identity2 >= 0;
  return r;
}

ThresholdMinimum threshold_minimum(std::int64_t q, std::int64_t steps) {
  if (q < 1 || steps < 1) throw InvalidArgument("threshold_minimum needs q >= 1 and steps >= 1");
  ThresholdMinimum best{2.0, 0.0};
  for (std::int64_t i = 0; i <= steps; ++i) {
    double a = static_cast<double>(i) / static_cast<double>(steps);
    double v = (static_cast<double>(q) + a * a * a) / (static_cast<double>(q) + a);
    if (v < best.value) best = {v, a};
  }
  return best;
}

std::int64_t gls_threshold_q(const Rational& gamma0, std::int64_t steps, std::int64_t q_limit) {
  std::int64_t answer = 0;
  for (std::int64_t q = q_limit; q >= 1; --q) {
    bool ok = true;
    for (std::int64_t i = 0; i <= steps && ok; ++i) {
      ok = gamma0 <= sufficiency_threshold(q, make_rational(i, steps));
    }
    if (!ok) break;
    answer = q;
  }
  return answer;
}

ScalingCheck scaling_check(std::int64_t q, const Rational& alpha, std::int64_t k, const Rational& eta,
                           const Rational& gamma0) {
  if (q < 2) throw InvalidArgument("scaling check needs q >= 2");
  require_alpha(alpha);
  if (k < 1 || k > q) throw InvalidArgument("scaling check needs 1 <= k <= q");
  if (eta <= make_rational(3, 4) || eta > 1) throw InvalidArgument("scaling check needs eta in (3/4, 1]");

  Rational ratio = (Rational(static_cast<long>(q)) + alpha) / (Rational(static_cast<long>(k)) * eta);
  ratio.canonicalize();
  ScalingCheck c;
  c.q_prime = floor_to_int(ratio);
  if (c.q_prime < 1) throw OutOfScalingRange("q' = floor((q+alpha)/(k eta)) is 0");
  c.alpha_prime = ratio - Rational(static_cast<long>(c.q_prime));
  c.lhs = eta * eta * extremal_bound(c.q_prime, c.alpha_prime, gamma0).value + 3 * (1 - eta) * (1 - eta);
  c.lhs.canonicalize();
  c.rhs = extremal_bound(q, alpha, gamma0).value;
  c.holds_le = c.lhs <= c.rhs;
  c.strict = c.lhs < c.rhs;
  return c;
}

ScalingScan scaling_scan(std::int64_t q_max, std::int64_t alpha_steps, std::int64_t eta_steps, const Rational& gamma0,
                         unsigned threads) {
  if (q_max < 2) throw InvalidArgument("scaling scan needs q_max >= 2");
  if (alpha_steps < 2 || eta_steps < 2) throw InvalidArgument("scaling scan needs at least 2 grid points per axis");

  std::vector<Rational> etas;
  for (std::int64_t j = 1; j <= eta_steps; ++j) etas.push_back(make_rational(3, 4) + make_rational(j, 4 * eta_steps));

  // One task per (q, alpha) row; rows come back in order.
  const std::size_t rows = static_cast<std::size_t>((q_max - 1) * alpha_steps);
  auto parts = parallel_map<ScalingScan>(rows, threads, [&](std::size_t row) {
    const std::int64_t q = 2 + static_cast<std::int64_t>(row) / alpha_steps;
    const Rational alpha = make_rational(static_cast<std::int64_t>(row) % alpha_steps, alpha_steps - 1);
    ScalingScan part;
    for (std::int64_t k = 1; k <= q; ++k) {
      for (const Rational& eta : etas) {
        ScalingCheck c = scaling_check(q, alpha, k, eta, gamma0);
        ++part.checked;
        if (!c.holds_le) {
          part.violations.push_back({q, alpha, k, eta, c.lhs, c.rhs});
        } else if (!c.strict) {
          part.equalities.push_back({q, alpha, k, eta, c.lhs, c.rhs});
        }
      }
    }
    return part;
  });

  ScalingScan out;
  for (auto& part : parts) {
    out.checked += part.checked;
    std::move(part.violations.begin(), part.violations.end(), std::back_inserter(out.violations));
    std::move(part.equalities.begin(), part.equalities.end(), std::back_inserter(out.equalities));
  }
  return out;
}

}  // namespace apx
