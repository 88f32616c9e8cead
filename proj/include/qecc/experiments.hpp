#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "qecc/decoder.hpp"
#include "qecc/errors.hpp"
#include "qecc/noise.hpp"
#include "qecc/rng.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

// Closed-form probability of zero or one physical errors on the codeword,
// which is the success event for these codes under their matched noise.
inline double analytic_success(const std::string& code_name, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("probability must lie in [0, 1]");
  }
  const double q = 1.0 - p;
  if (code_name == "bit_flip" || code_name == "phase_flip") {
    return q * q * q + 3.0 * p * q * q;
  }
  if (code_name == "shor9") {
    return std::pow(q, 9) + 9.0 * p * std::pow(q, 8);
  }
  if (code_name == "steane7") {
    return std::pow(q, 7) + 7.0 * p * std::pow(q, 6);
  }
  throw std::domain_error("no analytic success formula for '" + code_name +
                          "'; supported: bit_flip, phase_flip, shor9, steane7");
}

inline double analytic_failure(const std::string& code_name, double p) {
  return 1.0 - analytic_success(code_name, p);
}

// Physical error probability at which encoding stops helping: the root of
// analytic_success(p) = 1 - p, found by bisection on (1e-9, 0.5]. All the
// supported codes cross exactly once in that interval (the bit-flip code
// right at the endpoint 1/2).
inline double pseudothreshold(const std::string& code_name) {
  auto margin = [&](double p) { return analytic_success(code_name, p) - (1.0 - p); };
  double lo = 1e-9;
  double hi = 0.5;
  if (margin(lo) <= 0.0) return lo;
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    if (margin(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Monte Carlo aggregate for one (code, channel, p) configuration.
struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double logical_error_rate = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  double p = 0.0;
};

// Per trial: sample_error -> syndrome_of -> decode -> classify_residual.
// A trial fails unless the residual (correction times error) lands back in
// the stabilizer group; unmatched syndromes count as failures too. Each
// trial reseeds from (seed, trial index), so results are schedule
// independent.
inline TrialStats run_monte_carlo(const StabilizerCode& code,
                                  const NoiseChannel& channel,
                                  std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  const SyndromeTable table = build_table(code, channel.kind);
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const PauliOperator error = sample_error(channel, code.n, rng);
    const DecodeResult dr = decode(table, syndrome_of(code, error));
    const ResidualClass cls =
        classify_residual(code, dr.correction * error);
    if (dr.detected_uncorrectable || cls != ResidualClass::success) {
      ++failures;
    }
  }
  TrialStats stats;
  stats.trials = trials;
  stats.failures = failures;
  stats.logical_error_rate =
      static_cast<double>(failures) / static_cast<double>(trials);
  stats.std_error = std::sqrt(stats.logical_error_rate *
                              (1.0 - stats.logical_error_rate) /
                              static_cast<double>(trials));
  stats.seed = seed;
  stats.p = channel.p;
  return stats;
}

// Concatenation back-of-envelope: level-k uncorrectable error rate
// (Cp)^(2^k)/C, capped at 1.
inline double concat_failure(double p, double c, int k) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("probability must lie in [0, 1]");
  }
  if (!(c > 0.0) || k < 0) {
    throw std::domain_error("need C > 0 and k >= 0");
  }
  if (k == 0) return p;
  const double value = std::pow(c * p, std::ldexp(1.0, k)) / c;
  return std::min(1.0, value);
}

inline constexpr const char* kCsvHeader =
    "code,channel,p,trials,failures,rate,std_error,seed";

inline std::string csv_row(const std::string& code_label, ChannelKind kind,
                           const TrialStats& stats) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%s,%.10g,%llu,%llu,%.10g,%.10g,%llu",
                code_label.c_str(), to_string(kind), stats.p,
                static_cast<unsigned long long>(stats.trials),
                static_cast<unsigned long long>(stats.failures),
                stats.logical_error_rate, stats.std_error,
                static_cast<unsigned long long>(stats.seed));
  return buf;
}

// One CSV row per p value, fixed header; identical arguments and seed give
// byte-identical text.
inline std::string monte_carlo_sweep_csv(const StabilizerCode& code,
                                         const std::string& code_label,
                                         ChannelKind kind,
                                         const std::vector<double>& ps,
                                         std::uint64_t trials,
                                         std::uint64_t seed) {
  std::string out = kCsvHeader;
  out.push_back('\n');
  for (double p : ps) {
    const TrialStats stats =
        run_monte_carlo(code, NoiseChannel(kind, p), trials, seed);
    out += csv_row(code_label, kind, stats);
    out.push_back('\n');
  }
  return out;
}

}  // namespace qecc
