#pragma once

// Occupation statistics for the finite box: per-level occupation numbers
// for both particle statistics, their large-box ratio limits, geometric
// level probabilities of the equally spaced ladder, and level fractions.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace modbox::thermo {

enum class Statistics { FERMI, BOSE };

// "fermi" or "bose", case sensitive on purpose: CLI normalizes first.
inline Statistics parse_statistics(const std::string& name) {
  if (name == "fermi") return Statistics::FERMI;
  if (name == "bose") return Statistics::BOSE;
  throw std::invalid_argument("parse_statistics: expected \"fermi\" or \"bose\", got \"" + name +
                              "\"");
}

inline void check_level_range(long long k, long long n, const char* where) {
  if (k < 0) throw std::invalid_argument(std::string(where) + ": k must be >= 0");
  if (n < 0) throw std::invalid_argument(std::string(where) + ": n must be >= 0");
  if (n > k) throw std::invalid_argument(std::string(where) + ": n must be <= k");
}

// (k - n + 1) / (e^{beta (n + 1/2)} + s) with s = +1 for FERMI, -1 for
// BOSE. Evaluated through e^{-x} for positive exponents so large beta n
// never overflows.
inline double occupation(long long k, long long n, double beta, Statistics stat) {
  check_level_range(k, n, "occupation");
  if (!std::isfinite(beta)) throw std::invalid_argument("occupation: beta must be finite");
  const double d = double(k - n + 1);
  const double x = beta * (double(n) + 0.5);
  if (stat == Statistics::BOSE) {
    if (beta <= 0.0) throw std::domain_error("occupation: BOSE requires beta > 0");
    return d * std::exp(-x) / (-std::expm1(-x));
  }
  if (x > 0.0) {
    const double e = std::exp(-x);
    return d * e / (1.0 + e);
  }
  return d / (std::exp(x) + 1.0);
}

// log(e^x + 1) and log(e^x - 1) without overflow. The BOSE branch is only
// reached with x > 0.
inline double log_denominator(double x, Statistics stat) {
  if (stat == Statistics::FERMI)
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
  return x > 1.0 ? x + std::log1p(-std::exp(-x)) : std::log(std::expm1(x));
}

// Large-box limit of N_i^k / N_j^k: the degeneracy factors cancel and the
// denominators survive, (e^{beta (j + 1/2)} + s) / (e^{beta (i + 1/2)} + s).
inline double occupation_ratio_limit(long long i, long long j, double beta, Statistics stat) {
  if (i < 0 || j < 0)
    throw std::invalid_argument("occupation_ratio_limit: level indices must be >= 0");
  if (!std::isfinite(beta))
    throw std::invalid_argument("occupation_ratio_limit: beta must be finite");
  if (stat == Statistics::BOSE && beta <= 0.0)
    throw std::domain_error("occupation_ratio_limit: BOSE requires beta > 0");
  const double xi = beta * (double(i) + 0.5);
  const double xj = beta * (double(j) + 0.5);
  return std::exp(log_denominator(xj, stat) - log_denominator(xi, stat));
}

// e^{-beta (n + 1/2)} / Z with the closed form Z = e^{-beta/2} / (1 - e^{-beta}),
// which reduces to e^{-beta n} (1 - e^{-beta}).
inline double gibbs_probability(double beta, long long n) {
  if (n < 0) throw std::invalid_argument("gibbs_probability: n must be >= 0");
  if (!std::isfinite(beta)) throw std::invalid_argument("gibbs_probability: beta must be finite");
  if (beta <= 0.0) throw std::domain_error("gibbs_probability: beta must be > 0");
  return std::exp(-beta * double(n)) * (-std::expm1(-beta));
}

// All occupations of the box at cut k, indexed by n = 0..k.
inline std::vector<double> occupancy_list(long long k, double beta, Statistics stat) {
  if (k < 0) throw std::invalid_argument("occupancy_list: k must be >= 0");
  std::vector<double> out;
  out.reserve(std::size_t(k) + 1);
  for (long long n = 0; n <= k; ++n) out.push_back(occupation(k, n, beta, stat));
  return out;
}

// Compensated sum keeps the normalization exact to a few ulps even for
// boxes with millions of levels.
inline double occupation_sum(long long k, double beta, Statistics stat) {
  double sum = 0.0;
  double carry = 0.0;
  for (long long n = 0; n <= k; ++n) {
    const double y = occupation(k, n, beta, stat) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

// Share of level n in the total occupation of the box at cut k.
inline double level_fraction(long long k, long long n, double beta, Statistics stat) {
  const double value = occupation(k, n, beta, stat);
  return value / occupation_sum(k, beta, stat);
}

}  // namespace modbox::thermo
