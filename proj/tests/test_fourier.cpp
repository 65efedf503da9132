#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "apx/counting.hpp"
#include "apx/crosscheck.hpp"
#include "apx/errors.hpp"
#include "apx/fourier.hpp"
#include "oracle.hpp"

using namespace apx;

namespace {

SubsetMask set_of(std::vector<std::int64_t> moduli, std::string_view list) {
  return SubsetMask::from_indices(GroupSpec(std::move(moduli)), parse_index_list(list));
}

}  // namespace

TEST(Fourier, CharacterPhaseAndOrder) {
  GroupSpec g({12});
  EXPECT_EQ(character_phase(g, 1, 5), 5);
  EXPECT_EQ(character_phase(g, 3, 5), 3);
  EXPECT_EQ(character_order(g, 3), 4);
  EXPECT_EQ(character_order(g, 0), 1);
  GroupSpec h({2, 4});
  // m = (1,1), x = (1,1): 1/2 + 1/4 of a turn, i.e. 6 of 8.
  EXPECT_EQ(character_phase(h, 3, 3), 6);
  EXPECT_EQ(character_order(h, 3), 4);
}

TEST(Fourier, DftMatchesOracle) {
  std::mt19937_64 rng(11);
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{7}, {12}, {2, 6}, {3, 3, 3}, {5, 4}}) {
    GroupSpec g(moduli);
    for (int rep = 0; rep < 5; ++rep) {
      SubsetMask s = random_subset(rng, g);
      Spectrum spec = dft_indicator(s);
      auto ref = oracle::dft(s);
      for (Index m = 0; m < g.order(); ++m) EXPECT_LT(std::abs(spec[m] - ref[static_cast<std::size_t>(m)]), 1e-12);
    }
  }
}

TEST(Fourier, ThreePointCycleCoefficients) {
  auto s = set_of({7}, "0,1,6");
  Spectrum spec = dft_indicator(s);
  for (Index m = 0; m < 7; ++m) {
    double expected = (1 + 2 * std::cos(2 * std::numbers::pi * static_cast<double>(m) / 7)) / 7;
    EXPECT_NEAR(spec[m].real(), expected, 1e-14);
    EXPECT_NEAR(spec[m].imag(), 0, 1e-14);
  }
  Peak peak = top_nonzero_coefficient(spec, PeakMode::symmetric);
  EXPECT_EQ(peak.m0, 1);  // m = 1 and m = 6 tie; smaller index wins
  EXPECT_NEAR(peak.value, 0.32099708624535245, 1e-12);
}

TEST(Fourier, SpectralFormulasOnRandomSets) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    GroupSpec g = random_group(rng, 512);
    SubsetMask s = random_symmetric_subset(rng, g);
    Spectrum spec = dft_indicator(s);
    EXPECT_NEAR(prob_spectral(s, spec), to_double(direct_prob(s)), 1e-9) << g.to_string();
    EXPECT_LE(plancherel_residual(s, spec), 1e-10);
    EXPECT_LE(inversion_residual(s, spec), 1e-8);
    EXPECT_LE(max_imaginary(spec), 1e-10);
    if (g.odd_order()) {
      EXPECT_NEAR(t3_spectral(s, spec), static_cast<double>(direct_t3(s)), 1e-6) << g.to_string();
    }
  }
}

TEST(Fourier, T3SpectralHoldsForAsymmetricSets) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    GroupSpec g = random_group(rng, 99);
    if (!g.odd_order()) continue;
    SubsetMask s = random_subset(rng, g);
    EXPECT_NEAR(t3_spectral(s), static_cast<double>(direct_t3(s)), 1e-6);
  }
}

TEST(Fourier, Errors) {
  EXPECT_THROW(prob_spectral(set_of({6}, "1,2")), SymmetryRequired);
  EXPECT_THROW(prob_spectral(set_of({6}, "")), EmptySet);
  Spectrum trivial = dft_indicator(set_of({1}, "0"));
  EXPECT_THROW(top_nonzero_coefficient(trivial, PeakMode::general), NoNonzeroFrequency);
  auto s = set_of({12}, "1,11");
  EXPECT_THROW(structure_report(set_of({12}, "1,2"), 0.5), SymmetryRequired);
  EXPECT_THROW(structure_report(s, 1.0 / 6), MuUndefined);
  EXPECT_THROW(structure_report(s, 1.5), InvalidArgument);
  EXPECT_THROW(structure_report(SubsetMask::full(GroupSpec({4})), 1.0), InvalidArgument);
}

TEST(Fourier, StructureReportInvariants) {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 200) {
    GroupSpec g = random_group(rng, 200);
    if (g.order() < 2) continue;
    SubsetMask s = random_symmetric_subset(rng, g);
    const std::int64_t d = s.size();
    if (d >= g.order()) continue;
    const double gamma = (static_cast<double>(d) / static_cast<double>(g.order()) + 1) / 2;
    StructureReport r = structure_report(s, gamma);
    ++checked;
    EXPECT_EQ(r.g * r.k, g.order());
    EXPECT_EQ(r.k, character_order(g, r.m0));
    EXPECT_EQ(r.residue_weights.total, d);
    EXPECT_TRUE(r.residue_weights.symmetric());
    EXPECT_EQ(r.kernel_size, r.residue_weights.at(0));
    EXPECT_EQ(r.eta, make_rational(r.kernel_size, d));
    EXPECT_LE(r.arc_size, d);
    EXPECT_GE(r.arc_size, r.kernel_size);
    // Arc: residues r with 3|r| <= k.
    std::int64_t arc = 0;
    for (const auto& [res, w] : r.residue_weights.weights)
      if (3 * std::abs(res) <= r.k) arc += w;
    EXPECT_EQ(arc, r.arc_size);
    Spectrum spec = dft_indicator(s);
    EXPECT_NEAR(r.coeff_value, spec[r.m0].real(), 1e-12);
    for (Index m = 1; m < g.order(); ++m) EXPECT_LE(spec[m].real(), r.coeff_value + 1e-12);
  }
}
