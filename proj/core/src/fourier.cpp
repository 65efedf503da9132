#include "apx/fourier.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "apx/errors.hpp"

namespace apx {

namespace {
__extension__ typedef __int128 wide_int;
}  // namespace

namespace {

/// exp(-2 pi i k / n) for k in [0, n).
std::vector<std::complex<double>> root_table(std::int64_t n) {
  std::vector<std::complex<double>> table(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    table[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
  }
  return table;
}

/// Per-axis weights n/n_i so that the phase is sum m_i x_i (n/n_i) mod n.
std::vector<std::int64_t> axis_weights(const GroupSpec& g) {
  std::vector<std::int64_t> w;
  for (std::int64_t m : g.moduli()) w.push_back(g.order() / m);
  return w;
}

std::int64_t centered(std::int64_t r, std::int64_t k) { return 2 * r > k ? r - k : r; }

}  // namespace

std::int64_t character_phase(const GroupSpec& g, Index m, Index x) {
  const std::int64_t n = g.order();
  wide_int phase = 0;
  for (std::int64_t mod : g.moduli()) {
    phase += static_cast<wide_int>(m % mod) * (x % mod) % mod * (n / mod);
    m /= mod;
    x /= mod;
  }
  return static_cast<std::int64_t>(phase % n);
}

std::int64_t character_order(const GroupSpec& g, Index m) {
  const std::int64_t n = g.order();
  std::int64_t gen = n;
  for (std::int64_t mod : g.moduli()) {
    gen = std::gcd(gen, (m % mod) * (n / mod));
    m /= mod;
  }
  return n / gen;
}

Spectrum dft_indicator(const SubsetMask& s) {
  const GroupSpec& g = s.group();
  const std::int64_t n = g.order();
  const auto table = root_table(n);
  const auto weights = axis_weights(g);
  const auto elems = s.elements();

  // Phase of each member along each axis, so <m,x> reduces to a sum of
  // per-axis products.
  const std::size_t r = g.rank();
  std::vector<std::int64_t> coords(elems.size() * r);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Index x = elems[i];
    for (std::size_t a = 0; a < r; ++a) {
      coords[i * r + a] = x % g.moduli()[a];
      x /= g.moduli()[a];
    }
  }

  Spectrum spectrum{g, std::vector<std::complex<double>>(static_cast<std::size_t>(n))};
  std::vector<std::int64_t> mc(r);
  for (Index m = 0; m < n; ++m) {
    Index rest = m;
    for (std::size_t a = 0; a < r; ++a) {
      mc[a] = (rest % g.moduli()[a]) * weights[a];
      rest /= g.moduli()[a];
    }
    std::complex<double> acc = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      std::int64_t phase = 0;
      for (std::size_t a = 0; a < r; ++a) phase = (phase + coords[i * r + a] * mc[a]) % n;
      acc += table[static_cast<std::size_t>(phase)];
    }
    spectrum.coeffs[static_cast<std::size_t>(m)] = acc / static_cast<double>(n);
  }
  return spectrum;
}

double prob_spectral(const SubsetMask& s) {
  if (s.empty()) throw EmptySet("Prob[S] is undefined for the empty set");
  if (!s.is_symmetric()) throw SymmetryRequired("spectral Prob[S] needs a symmetric set");
  return prob_spectral(s, dft_indicator(s));
}

double prob_spectral(const SubsetMask& s, const Spectrum& spectrum) {
  if (s.empty()) throw EmptySet("Prob[S] is undefined for the empty set");
  if (!s.is_symmetric()) throw SymmetryRequired("spectral Prob[S] needs a symmetric set");
  const double n = static_cast<double>(s.group().order());
  const double d = static_cast<double>(s.size());
  std::complex<double> sum = 0;
  for (const auto& c : spectrum.coeffs) sum += c * c * c;
  return (n * n / (d * d)) * sum.real();
}

double t3_spectral(const SubsetMask& s) { return t3_spectral(s, dft_indicator(s)); }

double t3_spectral(const SubsetMask& s, const Spectrum& spectrum) {
  if (s.empty()) throw EmptySet("T3 spectral form is undefined for the empty set");
  const GroupSpec& g = s.group();
  const double n = static_cast<double>(g.order());
  std::complex<double> sum = 0;
  for (Index m = 0; m < g.order(); ++m) {
    Index minus_two_m = g.neg(g.add(m, m));
    sum += spectrum[m] * spectrum[m] * spectrum[minus_two_m];
  }
  return n * n * sum.real();
}

double plancherel_residual(const SubsetMask& s, const Spectrum& spectrum) {
  double energy = 0;
  for (const auto& c : spectrum.coeffs) energy += std::norm(c);
  return std::abs(energy - static_cast<double>(s.size()) / static_cast<double>(s.group().order()));
}

double inversion_residual(const SubsetMask& s, const Spectrum& spectrum) {
  const GroupSpec& g = s.group();
  const std::int64_t n = g.order();
  const auto table = root_table(n);
  double worst = 0;
  for (Index x = 0; x < n; ++x) {
    std::complex<double> acc = 0;
    for (Index m = 0; m < n; ++m) {
      std::int64_t phase = character_phase(g, m, x);
      // exp(+2 pi i phase/n) is the conjugate of the table entry.
      acc += spectrum[m] * std::conj(table[static_cast<std::size_t>(phase)]);
    }
    double expected = s.contains(x) ? 1.0 : 0.0;
    worst = std::max(worst, std::abs(acc - expected));
  }
  return worst;
}

double max_imaginary(const Spectrum& spectrum) {
  double worst = 0;
  for (const auto& c : spectrum.coeffs) worst = std::max(worst, std::abs(c.imag()));
  return worst;
}

Peak top_nonzero_coefficient(const Spectrum& spectrum, PeakMode mode) {
  const std::int64_t n = spectrum.group.order();
  if (n < 2) throw NoNonzeroFrequency("the trivial group has no nonzero frequency");
  constexpr double tie_tolerance = 1e-12;
  Peak best{1, 0};
  for (Index m = 1; m < n; ++m) {
    double v = mode == PeakMode::symmetric ? spectrum[m].real() : std::abs(spectrum[m]);
    if (m == 1 || v > best.value + tie_tolerance) best = {m, v};
  }
  return best;
}

std::int64_t WeightSeq::at(std::int64_t residue) const {
  auto it = weights.find(residue);
  return it == weights.end() ? 0 : it->second;
}

bool WeightSeq::symmetric() const {
  for (const auto& [i, a] : weights) {
    std::int64_t mirror = centered(((-i) % modulus + modulus) % modulus, modulus);
    if (at(mirror) != a) return false;
  }
  return true;
}

WeightSeq residue_weights(const SubsetMask& s, Index m0) {
  const GroupSpec& g = s.group();
  if (m0 <= 0 || m0 >= g.order()) {
    throw InvalidArgument("residue weights need a nonzero frequency in range, got " + std::to_string(m0));
  }
  WeightSeq w;
  w.modulus = character_order(g, m0);
  const std::int64_t kernel = g.order() / w.modulus;
  for (std::int64_t r = 0; r < w.modulus; ++r) w.weights[centered(r, w.modulus)] = 0;
  for (Index x : s.elements()) {
    std::int64_t residue = character_phase(g, m0, x) / kernel;
    ++w.weights[centered(residue, w.modulus)];
  }
  w.total = s.size();
  return w;
}

StructureReport structure_report(const SubsetMask& s, double gamma, const Rational& gamma0) {
  if (!s.is_symmetric()) throw SymmetryRequired("structure report needs a symmetric set");
  const std::int64_t n = s.group().order();
  const std::int64_t d = s.size();
  if (d < 1 || d >= n) throw InvalidArgument("structure report needs 1 <= |S| < n");
  const double density = static_cast<double>(d) / static_cast<double>(n);
  if (!(gamma > density)) {
    throw MuUndefined("gamma must exceed |S|/n = " + std::to_string(density) + " for mu to be positive");
  }
  if (gamma > 1) throw InvalidArgument("gamma must be <= 1");

  StructureReport r;
  r.gamma = gamma;
  const Spectrum spectrum = dft_indicator(s);
  const Peak peak = top_nonzero_coefficient(spectrum, PeakMode::symmetric);
  r.m0 = peak.m0;
  r.coeff_value = peak.value;
  r.k = character_order(s.group(), r.m0);
  r.g = n / r.k;

  r.mu = (gamma - density) / (1 - density);
  r.nu = (2 * r.mu + 1) / 3;
  r.beta = (gamma + 2 * r.nu * r.nu - r.nu - 1) / (r.nu * r.nu);

  r.residue_weights = residue_weights(s, r.m0);
  // Closed arc |phase| <= 2pi/3, i.e. 3|residue| <= k.
  for (const auto& [residue, count] : r.residue_weights.weights) {
    if (3 * std::abs(residue) <= r.k) r.arc_size += count;
  }
  r.arc_mass = static_cast<double>(r.arc_size) / static_cast<double>(d);

  r.kernel_size = r.residue_weights.at(0);
  r.eta = make_rational(r.kernel_size, d);
  if (r.kernel_size > 0) {
    Rational ratio = make_rational(r.g, r.kernel_size);
    r.q_prime = floor_to_int(ratio);
    r.alpha_prime = ratio - Rational(static_cast<long>(*r.q_prime));
    Rational rhs = r.eta * r.eta * extremal_bound(*r.q_prime, *r.alpha_prime, gamma0).value +
                   3 * (1 - r.eta) * (1 - r.eta);
    rhs.canonicalize();
    r.induction_rhs = rhs;
  }
  return r;
}

}  // namespace apx
