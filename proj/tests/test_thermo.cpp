#include <catch2/catch_amalgamated.hpp>

#include "modbox/thermo.hpp"

using namespace modbox;
using thermo::Statistics;

TEST_CASE("occupation_closed_values", "[thermo]") {
  CHECK(thermo::occupation(4, 1, 0.0, Statistics::FERMI) == 2.0);

  double beta = 2.0 * std::log(2.0);
  CHECK(std::abs(thermo::occupation(4, 0, beta, Statistics::FERMI) - 5.0 / 3.0) < 1e-14);
  CHECK(std::abs(thermo::occupation(2, 0, beta, Statistics::BOSE) - 3.0) < 1e-13);

  // Large exponents underflow to zero instead of overflowing.
  CHECK(thermo::occupation(10, 5, 1000.0, Statistics::FERMI) == 0.0);
  CHECK(thermo::occupation(10, 5, 1000.0, Statistics::BOSE) == 0.0);

  // Negative temperature parameter is allowed for FERMI only.
  CHECK(thermo::occupation(3, 0, -2.0, Statistics::FERMI) ==
        4.0 / (std::exp(-1.0) + 1.0));
  CHECK_THROWS_AS(thermo::occupation(3, 0, -2.0, Statistics::BOSE), std::domain_error);
  CHECK_THROWS_AS(thermo::occupation(3, 0, 0.0, Statistics::BOSE), std::domain_error);

  CHECK_THROWS_AS(thermo::occupation(3, 4, 1.0, Statistics::FERMI), std::invalid_argument);
  CHECK_THROWS_AS(thermo::occupation(3, -1, 1.0, Statistics::FERMI), std::invalid_argument);
}

TEST_CASE("occupation_positive_and_decreasing", "[thermo]") {
  for (Statistics stat : {Statistics::FERMI, Statistics::BOSE}) {
    for (double beta : {0.3, 1.0, 2.5}) {
      double prev = -1.0;
      for (long long n = 0; n <= 40; ++n) {
        double value = thermo::occupation(40, n, beta, stat);
        CHECK(value > 0.0);
        if (n > 0) CHECK(value < prev);
        prev = value;
      }
    }
  }
}

TEST_CASE("occupation_ratio_limit_values", "[thermo]") {
  CHECK(thermo::occupation_ratio_limit(3, 3, 1.7, Statistics::FERMI) == 1.0);
  CHECK(thermo::occupation_ratio_limit(5, 5, 0.4, Statistics::BOSE) == 1.0);

  double beta = 2.0 * std::log(2.0);
  CHECK(std::abs(thermo::occupation_ratio_limit(0, 1, beta, Statistics::FERMI) - 3.0) < 1e-13);

  // Direct quotient oracle at a huge box.
  for (Statistics stat : {Statistics::FERMI, Statistics::BOSE}) {
    long long k = 1000000;
    double quotient = thermo::occupation(k, 0, 1.0, stat) / thermo::occupation(k, 1, 1.0, stat);
    double limit = thermo::occupation_ratio_limit(0, 1, 1.0, stat);
    CHECK(std::abs(quotient - limit) < 1e-5);
  }

  CHECK_THROWS_AS(thermo::occupation_ratio_limit(-1, 0, 1.0, Statistics::FERMI),
                  std::invalid_argument);
  CHECK_THROWS_AS(thermo::occupation_ratio_limit(0, 1, -1.0, Statistics::BOSE),
                  std::domain_error);
}

TEST_CASE("occupation_ratio_cocycle", "[thermo]") {
  for (Statistics stat : {Statistics::FERMI, Statistics::BOSE}) {
    for (double beta : {0.5, 1.0, 3.0}) {
      for (long long i : {0LL, 2LL, 7LL})
        for (long long j : {1LL, 4LL})
          for (long long l : {0LL, 3LL, 9LL}) {
            double lhs = thermo::occupation_ratio_limit(i, j, beta, stat) *
                         thermo::occupation_ratio_limit(j, l, beta, stat);
            double rhs = thermo::occupation_ratio_limit(i, l, beta, stat);
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, rhs));
          }
    }
  }
}

TEST_CASE("ratio_convergence_improves_with_k", "[thermo]") {
  for (Statistics stat : {Statistics::FERMI, Statistics::BOSE}) {
    double limit = thermo::occupation_ratio_limit(0, 1, 1.0, stat);
    double prev_err = 1e300;
    for (long long k : {10LL, 100LL, 10000LL, 1000000LL}) {
      double quotient = thermo::occupation(k, 0, 1.0, stat) / thermo::occupation(k, 1, 1.0, stat);
      double err = std::abs(quotient - limit);
      CHECK(err < prev_err);
      prev_err = err;
    }
    CHECK(prev_err < 1e-5);
  }
}

TEST_CASE("gibbs_probability_geometric_values", "[thermo]") {
  double beta = std::log(2.0);
  CHECK(std::abs(thermo::gibbs_probability(beta, 0) - 0.5) < 1e-15);
  CHECK(std::abs(thermo::gibbs_probability(beta, 1) - 0.25) < 1e-15);

  for (double b : {0.5, 1.0, 2.0}) {
    double sum = 0.0;
    long long n = 0;
    while (std::exp(-b * double(n)) >= 1e-16) sum += thermo::gibbs_probability(b, n++);
    CHECK(std::abs(sum - 1.0) < 1e-12);
    CHECK(n <= 80);
  }

  double partial = 0.0;
  for (long long n = 0; n <= 60; ++n) partial += thermo::gibbs_probability(0.5, n);
  CHECK(std::abs(partial - 1.0) < 1e-12);

  CHECK_THROWS_AS(thermo::gibbs_probability(0.0, 1), std::domain_error);
  CHECK_THROWS_AS(thermo::gibbs_probability(-1.0, 1), std::domain_error);
  CHECK_THROWS_AS(thermo::gibbs_probability(1.0, -1), std::invalid_argument);
}

TEST_CASE("level_fraction_normalization", "[thermo]") {
  CHECK(thermo::level_fraction(0, 0, 1.3, Statistics::FERMI) == 1.0);

  // At beta = 0 the FERMI denominators cancel and the fraction is purely
  // combinatorial.
  long long k = 12;
  double total = double((k + 1) * (k + 2) / 2);
  for (long long n = 0; n <= k; ++n) {
    double want = double(k - n + 1) / total;
    CHECK(std::abs(thermo::level_fraction(k, n, 0.0, Statistics::FERMI) - want) < 1e-15);
  }

  for (Statistics stat : {Statistics::FERMI, Statistics::BOSE}) {
    for (long long cut : {5LL, 100LL, 2000LL}) {
      double sum = 0.0;
      double denom = thermo::occupation_sum(cut, 1.0, stat);
      for (double value : thermo::occupancy_list(cut, 1.0, stat)) sum += value / denom;
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("level_fraction_stabilizes_for_large_boxes", "[thermo]") {
  for (long long n = 0; n <= 10; ++n) {
    double small = thermo::level_fraction(1000, n, 1.0, Statistics::FERMI);
    double large = thermo::level_fraction(10000, n, 1.0, Statistics::FERMI);
    CHECK(std::abs(small - large) < 1e-2);
  }
}

TEST_CASE("statistics_parser", "[thermo]") {
  CHECK(thermo::parse_statistics("fermi") == Statistics::FERMI);
  CHECK(thermo::parse_statistics("bose") == Statistics::BOSE);
  CHECK_THROWS_AS(thermo::parse_statistics("boltzmann"), std::invalid_argument);
}
