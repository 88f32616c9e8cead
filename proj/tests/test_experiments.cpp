#include "qecc/experiments.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qecc/catalog.hpp"

using qecc::analytic_failure;
using qecc::analytic_success;
using qecc::catalog;
using qecc::ChannelKind;
using qecc::concat_failure;
using qecc::NoiseChannel;
using qecc::pseudothreshold;
using qecc::run_monte_carlo;

TEST(AnalyticSuccess, PerfectChannelAlwaysSucceeds) {
  for (const char* name : {"bit_flip", "phase_flip", "shor9", "steane7"}) {
    EXPECT_DOUBLE_EQ(analytic_success(name, 0.0), 1.0);
  }
}

TEST(AnalyticSuccess, BitFlipAtTenPercent) {
  EXPECT_NEAR(analytic_success("bit_flip", 0.1), 0.972, 1e-12);
  EXPECT_NEAR(analytic_failure("bit_flip", 0.1), 0.028, 1e-12);
  // The failure complement is the paper's 3p^2(1-p) + p^3.
  const double p = 0.1;
  EXPECT_NEAR(analytic_failure("bit_flip", p),
              3 * p * p * (1 - p) + p * p * p, 1e-15);
}

TEST(AnalyticSuccess, LargerCodesEvaluateTheirFormulas) {
  const double p = 0.03;
  const double q = 1 - p;
  EXPECT_NEAR(analytic_success("shor9", p),
              std::pow(q, 9) + 9 * p * std::pow(q, 8), 1e-15);
  EXPECT_NEAR(analytic_success("steane7", p),
              std::pow(q, 7) + 7 * p * std::pow(q, 6), 1e-15);
}

TEST(AnalyticSuccess, RejectsUnsupportedInputs) {
  EXPECT_THROW(analytic_success("five_qubit", 0.1), std::domain_error);
  EXPECT_THROW(analytic_success("bit_flip", 1.5), std::domain_error);
  EXPECT_THROW(analytic_success("bit_flip", -0.1), std::domain_error);
}

TEST(Pseudothreshold, MatchesThePaperValues) {
  EXPECT_NEAR(pseudothreshold("bit_flip"), 0.5, 1e-6);
  EXPECT_NEAR(pseudothreshold("phase_flip"), 0.5, 1e-6);
  EXPECT_NEAR(pseudothreshold("shor9"), 0.0323, 5e-4);
  EXPECT_NEAR(pseudothreshold("steane7"), 0.0579, 5e-4);
}

TEST(Pseudothreshold, CrossingConsistency) {
  for (const char* name : {"bit_flip", "shor9", "steane7"}) {
    const double p_star = pseudothreshold(name);
    EXPECT_NEAR(analytic_success(name, p_star), 1.0 - p_star, 1e-6) << name;
  }
}

TEST(MonteCarlo, NoNoiseNeverFails) {
  const auto stats = run_monte_carlo(
      catalog("five_qubit"), NoiseChannel(ChannelKind::depolarizing, 0.0),
      2000, 3);
  EXPECT_EQ(stats.failures, 0u);
  EXPECT_DOUBLE_EQ(stats.logical_error_rate, 0.0);
}

TEST(MonteCarlo, BitFlipRateMatchesTheFailureFormula) {
  const auto stats = run_monte_carlo(catalog("bit_flip"),
                                     NoiseChannel(ChannelKind::bit_flip, 0.1),
                                     100000, 42);
  const double expected = analytic_failure("bit_flip", 0.1);
  EXPECT_NEAR(stats.logical_error_rate, expected, 3.0 * stats.std_error);
}

TEST(MonteCarlo, FourPointAnalyticAgreement) {
  for (double p : {0.02, 0.05, 0.1, 0.2}) {
    const auto stats = run_monte_carlo(
        catalog("bit_flip"), NoiseChannel(ChannelKind::bit_flip, p), 100000,
        1234);
    const double expected = 3 * p * p * (1 - p) + p * p * p;
    EXPECT_NEAR(stats.logical_error_rate, expected, 4.0 * stats.std_error)
        << "p = " << p;
  }
}

TEST(MonteCarlo, DeterministicGivenSeed) {
  const auto a = run_monte_carlo(catalog("steane7"),
                                 NoiseChannel(ChannelKind::depolarizing, 0.05),
                                 20000, 99);
  const auto b = run_monte_carlo(catalog("steane7"),
                                 NoiseChannel(ChannelKind::depolarizing, 0.05),
                                 20000, 99);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.logical_error_rate, b.logical_error_rate);
}

TEST(MonteCarlo, SteaneCrossoverBracketsThePseudothreshold) {
  // Below the crossover encoding helps, above it hurts. The exact crossing
  // is not asserted because the analytic formula counts physical-error
  // multiplicity rather than decoder outcomes.
  const auto low = run_monte_carlo(
      catalog("steane7"), NoiseChannel(ChannelKind::depolarizing, 0.02),
      100000, 7);
  EXPECT_LT(low.logical_error_rate, 0.02);
  const auto high = run_monte_carlo(
      catalog("steane7"), NoiseChannel(ChannelKind::depolarizing, 0.10),
      100000, 7);
  EXPECT_GT(high.logical_error_rate, 0.10);
}

TEST(MonteCarlo, StatsFieldsAreConsistent) {
  const auto stats = run_monte_carlo(catalog("bit_flip"),
                                     NoiseChannel(ChannelKind::bit_flip, 0.2),
                                     5000, 11);
  EXPECT_EQ(stats.trials, 5000u);
  EXPECT_EQ(stats.seed, 11u);
  EXPECT_DOUBLE_EQ(stats.p, 0.2);
  EXPECT_DOUBLE_EQ(stats.logical_error_rate,
                   static_cast<double>(stats.failures) / 5000.0);
  EXPECT_DOUBLE_EQ(
      stats.std_error,
      std::sqrt(stats.logical_error_rate * (1 - stats.logical_error_rate) /
                5000.0));
  EXPECT_THROW(run_monte_carlo(catalog("bit_flip"),
                               NoiseChannel(ChannelKind::bit_flip, 0.2), 0, 1),
               std::invalid_argument);
}

TEST(ConcatFailure, LevelZeroIsExactlyP) {
  for (double p : {0.0, 1e-3, 0.37, 1.0}) {
    EXPECT_EQ(concat_failure(p, 100.0, 0), p);
  }
}

TEST(ConcatFailure, FixedPointAtOneOverC) {
  for (int k = 0; k < 8; ++k) {
    EXPECT_DOUBLE_EQ(concat_failure(0.25, 4.0, k), 0.25);
  }
}

TEST(ConcatFailure, PaperExampleValue) {
  // (100 * 1e-3)^4 / 100 = 1e-6.
  EXPECT_NEAR(concat_failure(1e-3, 100.0, 2), 1e-6, 1e-18);
}

TEST(ConcatFailure, DoublyExponentialDecayBelowThreshold) {
  const double p = 1e-3, c = 100.0;
  double prev = concat_failure(p, c, 0);
  for (int k = 1; k <= 5; ++k) {
    const double cur = concat_failure(p, c, k);
    EXPECT_LT(cur, prev);
    prev = cur;
  }
  EXPECT_THROW(concat_failure(-0.5, 100.0, 1), std::domain_error);
  EXPECT_THROW(concat_failure(0.1, 0.0, 1), std::domain_error);
  EXPECT_THROW(concat_failure(0.1, 100.0, -1), std::domain_error);
}

TEST(Csv, HeaderAndDeterminism) {
  EXPECT_STREQ(qecc::kCsvHeader,
               "code,channel,p,trials,failures,rate,std_error,seed");
  const auto code = catalog("bit_flip");
  const std::vector<double> ps = {0.02, 0.1};
  const std::string a = qecc::monte_carlo_sweep_csv(
      code, "bit_flip", ChannelKind::bit_flip, ps, 20000, 5);
  const std::string b = qecc::monte_carlo_sweep_csv(
      code, "bit_flip", ChannelKind::bit_flip, ps, 20000, 5);
  EXPECT_EQ(a, b);
  // Header plus one row per p value.
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 3);
  EXPECT_EQ(a.substr(0, a.find('\n')), qecc::kCsvHeader);
  EXPECT_NE(a.find("bit_flip,bit_flip,0.02,20000,"), std::string::npos);
}
