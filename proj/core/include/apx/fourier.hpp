#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "apx/bounds.hpp"
#include "apx/rational.hpp"
#include "apx/subset.hpp"

namespace apx {

/// Fourier coefficients of an indicator function,
///   coeffs[m] = (1/n) sum_{x in S} exp(-2 pi i <m, x>),  <m,x> = sum m_i x_i / n_i,
/// indexed by m in the group's mixed-radix space.
struct Spectrum {
  GroupSpec group;
  std::vector<std::complex<double>> coeffs;

  const std::complex<double>& operator[](Index m) const { return coeffs[static_cast<std::size_t>(m)]; }
};

/// n * <m, x> reduced mod n: the character value exp(2 pi i <m,x>) is
/// exp(2 pi i phase / n). Exact integer arithmetic.
std::int64_t character_phase(const GroupSpec& g, Index m, Index x);

/// Order of the character x -> exp(2 pi i <m,x>) in the dual group.
std::int64_t character_order(const GroupSpec& g, Index m);

Spectrum dft_indicator(const SubsetMask& s);

/// (n^2/|S|^2) sum_m coeff(m)^3, real part. Throws SymmetryRequired for a
/// non-symmetric S and EmptySet for S = {}.
double prob_spectral(const SubsetMask& s);
double prob_spectral(const SubsetMask& s, const Spectrum& spectrum);

/// n^2 sum_m coeff(m)^2 coeff(-2m), real part. Throws EmptySet for S = {}.
double t3_spectral(const SubsetMask& s);
double t3_spectral(const SubsetMask& s, const Spectrum& spectrum);

/// |sum_m |coeff(m)|^2 - |S|/n|.
double plancherel_residual(const SubsetMask& s, const Spectrum& spectrum);
/// max_x |sum_m coeff(m) exp(+2 pi i <m,x>) - 1_S(x)|.
double inversion_residual(const SubsetMask& s, const Spectrum& spectrum);
/// max_m |imag coeff(m)|.
double max_imaginary(const Spectrum& spectrum);

enum class PeakMode { symmetric, general };

struct Peak {
  Index m0 = 0;
  double value = 0;
};

/// The largest coefficient over m != 0: by real part (symmetric mode) or by
/// modulus (general mode). Ties within 1e-12 go to the smallest index.
/// Throws NoNonzeroFrequency when the group is trivial.
Peak top_nonzero_coefficient(const Spectrum& spectrum, PeakMode mode);

/// Bucket sizes of S by the value of the m0-character, reduced to the
/// character's order k; keys are centered residues in (-k/2, k/2].
struct WeightSeq {
  std::int64_t modulus = 1;
  std::map<std::int64_t, std::int64_t> weights;
  std::int64_t total = 0;

  std::int64_t at(std::int64_t residue) const;
  bool symmetric() const;
};

/// Centered residue of x's m0-character value in Z_k. Throws InvalidArgument
/// for m0 = 0 or out-of-range indices.
WeightSeq residue_weights(const SubsetMask& s, Index m0);

struct StructureReport {
  Index m0 = 0;
  double coeff_value = 0;
  std::int64_t g = 1;  // n / k: size of the character's kernel
  std::int64_t k = 1;  // order of the character
  double gamma = 0;
  double mu = 0;
  double nu = 0;
  double beta = 0;
  std::int64_t arc_size = 0;  // |A|
  double arc_mass = 0;        // |A| / d
  WeightSeq residue_weights;
  std::int64_t kernel_size = 0;  // |D|: elements of S in the kernel
  Rational eta;                  // |D| / d
  std::optional<std::int64_t> q_prime;
  std::optional<Rational> alpha_prime;
  std::optional<Rational> induction_rhs;  // eta^2 F(q', alpha') + 3 (1-eta)^2
};

/// Structural diagnostics of a symmetric S probed at threshold gamma:
/// the peak frequency, its kernel, the closed 2pi/3 arc mass, residue
/// weights and the induction parameters. Requires S symmetric
/// (SymmetryRequired), 1 <= |S| < n (InvalidArgument), gamma in (|S|/n, 1]
/// (MuUndefined when gamma <= |S|/n, InvalidArgument when gamma > 1).
StructureReport structure_report(const SubsetMask& s, double gamma, const Rational& gamma0 = default_gamma0());

}  // namespace apx
