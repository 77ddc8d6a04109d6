#pragma once

// The nine verification suites behind both the acceptance binary and the
// selftest subcommand: each runs a batch of randomized or exact checks
// against its named tolerances and reports the worst defect it saw.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "density.hpp"
#include "hs.hpp"
#include "io.hpp"
#include "kms.hpp"
#include "landau.hpp"
#include "modular.hpp"
#include "random.hpp"
#include "thermo.hpp"

namespace modbox::selftest {

// Named tolerances with fixed defaults. Overrides must name a known key,
// so typos fail loudly instead of silently testing nothing.
class Tolerances {
 public:
  Tolerances() {
    values_ = {
        {"landau.spectrum_rel", 1e-8}, {"landau.gap_abs", 1e-8},
        {"tt.s_relation", 1e-9},       {"tt.j_squared", 1e-10},
        {"tt.jdj", 1e-9},              {"tt.conjugation", 1e-9},
        {"tt.flow", 1e-9},             {"kms.matched", 1e-8},
        {"kms.mismatch_min", 1e-4},    {"kms.modular", 1e-8},
        {"admissibility.rel", 1e-10},  {"classifier.rank", 1e-12},
        {"trace.chain", 1e-10},        {"schatten.minkowski", 1e-10},
        {"thermo.ratio", 1e-5},        {"thermo.prob_sum", 1e-12},
    };
  }

  double get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw std::invalid_argument("unknown tolerance \"" + name + "\"");
    return it->second;
  }

  void set(const std::string& name, double value) {
    if (!(value > 0.0))
      throw std::invalid_argument("tolerance \"" + name + "\" must be > 0");
    auto it = values_.find(name);
    if (it == values_.end()) throw std::invalid_argument("unknown tolerance \"" + name + "\"");
    it->second = value;
  }

  const std::map<std::string, double>& all() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

struct Config {
  std::uint64_t seed = kDefaultSeed;
  Tolerances tol;
};

struct SuiteResult {
  std::string suite;
  bool passed = true;
  long long checks = 0;
  double max_defect = 0.0;
  double runtime_seconds = 0.0;
  std::string detail;
  std::string failure;  // first failing case, serialized for replay
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

  // defect is the measured quantity on the tolerance's scale; describe is
  // only evaluated for the first failure.
  void check(bool ok, double defect, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (defect > result_.max_defect) result_.max_defect = defect;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.failure = describe();
    }
  }

  SuiteResult finish(std::string detail, std::chrono::steady_clock::time_point started) {
    result_.detail = std::move(detail);
    result_.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return std::move(result_);
  }

 private:
  SuiteResult result_;
};

// Random coefficient matrix kept away from rank deficiency so the modular
// structure is well conditioned.
inline Matrix conditioned_coefficients(std::mt19937_64& rng, int n) {
  while (true) {
    Matrix c = random_matrix(rng, n, n);
    RealVector sv = singular_values(c);
    if (sv[sv.size() - 1] > 0.02 * sv[0]) return c;
  }
}

inline std::string case_json(std::initializer_list<std::pair<std::string, io::json>> fields) {
  io::json j = io::json::object();
  for (const auto& [key, value] : fields) j[key] = value;
  return j.dump();
}

}  // namespace detail

// Suite 1: every tridiagonal block eigenvalue sits on the arithmetic
// ladder 2 + 4j and consecutive eigenvalues stay 4 apart.
inline SuiteResult run_landau(const Config& cfg) {
  auto started = std::chrono::steady_clock::now();
  detail::Recorder rec("landau");
  const double rel = cfg.tol.get("landau.spectrum_rel");
  const double gap_slack = cfg.tol.get("landau.gap_abs");
  for (long long k = 0; k <= 60; ++k) {
    RealVector values = landau::block_spectrum(k);
    for (long long j = 0; j <= k; ++j) {
      const double want = 2.0 + 4.0 * double(j);
      const double defect = std::abs(values[j] - want) / want;
      rec.check(defect < rel, defect, [&] {
        return detail::case_json({{"case", "block-eigenvalue"},
                                  {"k", k},
                                  {"j", j},
                                  {"eigenvalue", values[j]},
                                  {"expected", want}});
      });
    }
    for (long long j = 0; j + 1 <= k; ++j) {
      const double gap = values[j + 1] - values[j];
      rec.check(gap >= 4.0 - gap_slack, std::max(0.0, 4.0 - gap), [&] {
        return detail::case_json({{"case", "block-gap"}, {"k", k}, {"j", j}, {"gap", gap}});
      });
    }
  }
  return rec.finish("blocks k <= 60 against the 2+4j ladder", started);
}

// Suite 2: the five modular identities on random cyclic/separating
// vectors, all defects taken relative to the target's scale.
inline SuiteResult run_tomita(const Config& cfg) {
  auto started = std::chrono::steady_clock::now();
  detail::Recorder rec("tomita");
  const double tol_s = cfg.tol.get("tt.s_relation");
  const double tol_j2 = cfg.tol.get("tt.j_squared");
  const double tol_jdj = cfg.tol.get("tt.jdj");
  const double tol_conj = cfg.tol.get("tt.conjugation");
  const double tol_flow = cfg.tol.get("tt.flow");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> times(-2.0, 2.0);

  for (int n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 100; ++rep) {
      Matrix coeffs = detail::conditioned_coefficients(rng, n);
      auto m = modular::build_modular(modular::CyclicVector(coeffs));
      Matrix a = random_matrix(rng, n, n);
      Matrix x = random_matrix(rng, n, n);
      const double t = times(rng);

      auto describe = [&](const char* what, double defect) {
        return [&, what, defect] {
          return detail::case_json({{"case", what},
                                    {"n", n},
                                    {"defect", defect},
                                    {"omega", io::matrix_to_json(coeffs)},
                                    {"a", io::matrix_to_json(a)}});
        };
      };

      Matrix want_s = a.adjoint() * m.t;
      double d = max_abs(modular::s_apply(m, a * m.t) - want_s) /
                 std::max(1.0, max_abs(want_s));
      rec.check(d < tol_s, d, describe("s-relation", d));

      Matrix jj = modular::modular_conjugation_apply(m, modular::modular_conjugation_apply(m, x));
      d = max_abs(jj - x) / std::max(1.0, max_abs(x));
      rec.check(d < tol_j2, d, describe("j-squared", d));

      Matrix jdj = modular::modular_conjugation_apply(
          m, modular::modular_power_apply(m, Complex(1.0, 0.0),
                                          modular::modular_conjugation_apply(m, x)));
      Matrix inv = modular::modular_power_apply(m, Complex(-1.0, 0.0), x);
      d = max_abs(jdj - inv) / std::max(1.0, max_abs(inv));
      rec.check(d < tol_jdj, d, describe("jdj-inverse", d));

      auto conj = modular::modular_conjugation_algebra_check(m, a);
      d = conj.distance / std::max(1.0, max_abs(a));
      rec.check(d < tol_conj, d, describe("conjugated-algebra", d));

      Matrix lhs = modular::modular_power_apply(
          m, Complex(0.0, t), a * modular::modular_power_apply(m, Complex(0.0, -t), x));
      Matrix rhs = modular::modular_flow_left(m, t, a) * x;
      d = max_abs(lhs - rhs) / std::max(1.0, max_abs(rhs));
      rec.check(d < tol_flow, d, describe("flow", d));
    }
  }
  return rec.finish("five modular identities, n in 2..8, 100 vectors each", started);
}

// Suite 3: the analytic boundary identity at the state's own temperature,
// its breakdown at a wrong temperature, and the vector-state variant.
inline SuiteResult run_kms(const Config& cfg) {
  auto started = std::chrono::steady_clock::now();
  detail::Recorder rec("kms");
  const double tol_match = cfg.tol.get("kms.matched");
  const double min_mismatch = cfg.tol.get("kms.mismatch_min");
  const double tol_modular = cfg.tol.get("kms.modular");
  std::mt19937_64 rng(cfg.seed + 1);
  const double t_grid[] = {-2.0, -1.0, 0.0, 1.0, 2.0};

  for (double beta : {0.5, 1.0, 2.0}) {
    for (int n = 2; n <= 8; ++n) {
      Matrix h = random_hermitian(rng, n);
      auto state = kms::make_gibbs(h, beta);
      double worst_mismatch = 0.0;
      for (int pair = 0; pair < 50; ++pair) {
        Matrix a = random_matrix(rng, n, n);
        Matrix b = random_matrix(rng, n, n);
        for (double t : t_grid) {
          const double d = kms::kms_defect(state, a, b, t, beta);
          rec.check(d < tol_match, d, [&] {
            return detail::case_json({{"case", "kms-matched"},
                                      {"beta", beta},
                                      {"n", n},
                                      {"t", t},
                                      {"defect", d},
                                      {"hamiltonian", io::matrix_to_json(h)}});
          });
        }
        worst_mismatch =
            std::max(worst_mismatch, kms::kms_defect(state, a, b, 0.7, beta + 1.0));
      }
      rec.check(worst_mismatch > min_mismatch, 0.0, [&] {
        return detail::case_json({{"case", "kms-mismatch-undetected"},
                                  {"beta", beta},
                                  {"n", n},
                                  {"worst", worst_mismatch}});
      });
    }
  }

  for (int n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      Matrix coeffs = detail::conditioned_coefficients(rng, n);
      auto m = modular::build_modular(modular::CyclicVector(coeffs));
      Matrix a = random_matrix(rng, n, n);
      Matrix b = random_matrix(rng, n, n);
      for (double t : {-1.0, 0.5}) {
        const double d = kms::modular_kms_defect(m, a, b, t);
        rec.check(d < tol_modular, d, [&] {
          return detail::case_json({{"case", "kms-modular"},
                                    {"n", n},
                                    {"t", t},
                                    {"defect", d},
                                    {"omega", io::matrix_to_json(coeffs)}});
        });
      }
    }
  }
  return rec.finish("boundary identity at matched, wrong, and vector-state temperatures",
                    started);
}

// Suite 4: the geometric series certifies, the unbounded-degeneracy ladder
// diverges, and the box norm keeps growing with the cut.
inline SuiteResult run_admissibility(const Config& cfg) {
  auto started = std::chrono::steady_clock::now();
  detail::Recorder rec("admissibility");
  const double rel = cfg.tol.get("admissibility.rel");

  kms::SpectrumRule rule;
  rule.energy_offset = 0.5;
  rule.energy_slope = 1.0;
  auto geometric = kms::admissibility(kms::spectrum_from_rule(rule, {25, 50, 100, 200}));
  const double want = std::exp(-0.5) / (1.0 - std::exp(-1.0));
  const double defect =
      geometric.converged ? std::abs(geometric.hs_norm_sq - want) / want : 1.0;
  rec.check(geometric.converged && defect < rel, defect, [&] {
    return detail::case_json({{"case", "geometric-sum"},
                              {"converged", geometric.converged},
                              {"value", geometric.hs_norm_sq},
                              {"expected", want}});
  });

  auto unbounded = kms::admissibility(kms::landau_spectrum());
  rec.check(!unbounded.converged && unbounded.reason == "unbounded-degeneracy", 0.0, [&] {
    return detail::case_json(
        {{"case", "unbounded-degeneracy"}, {"reason", unbounded.reason}});
  });

  auto growth = kms::landau_truncation_growth({10, 1000});
  rec.check(growth[1] > 10.0 * growth[0], 0.0, [&] {
    return detail::case_json(
        {{"case", "truncation-growth"}, {"at-10", growth[0]}, {"at-1000", growth[1]}});
  });

  return rec.finish("certified geometric limit, divergence, box-norm growth", started);
}

// Suite 5: the commutant of the right algebra has full matrix-algebra
// dimension at every computable size.
inline SuiteResult run_commutant(const Config&) {
  auto started = std::chrono::steady_clock::now();
  detail::Recorder rec("commutant");
  for (int n = 1; n <= 4; ++n) {
    const int dim = hs::commutant_dimension(n);
    rec.check(dim == n * n, std::abs(double(dim - n * n)), [&] {
      return detail::case_json({{"case", "commutant-dimension"}, {"n", n}, {"dim", dim}});
    });
  }
  return rec.finish("commutant dimension n^2 for n in 1..4", started);
}

// Suite 6: the singular-value classifier agrees with a vectorized kernel
// oracle on a half rank-deficient sample.
inline SuiteResult run_classifier(const Config& cfg) {
  auto started = std::chrono::steady_clock::now();
  detail::Recorder rec("classifier");
  const double rank_tol = cfg.tol.get("classifier.rank");
  std::mt19937_64 rng(cfg.seed + 2);

  for (int count = 0; count < 1000; ++count) {
    const int n = 1 + int(rng() % 6);
    Matrix coeffs;
    if (count % 2 == 0) {
      coeffs = random_matrix(rng, n, n);
    } else {
      coeffs = random_rank(rng, n, int(rng() % n));
    }
    const bool verdict =
        modular::check_cyclic_separating(modular::CyclicVector(coeffs), rank_tol).is_cs;

    // Oracle: the right-multiplication map X -> X T drops rank exactly
    // when T does.
    Matrix t_mat = modular::CyclicVector(coeffs).to_operator();
    Matrix super = superop_matrix(n, [&](const Matrix& x) { return Matrix(x * t_mat); });
    RealVector sv = singular_values(super);
    const bool oracle = sv[sv.size() - 1] > rank_tol * sv[0];

    rec.check(verdict == oracle, verdict == oracle ? 0.0 : 1.0, [&] {
      return detail::case_json({{"case", "classifier-disagreement"},
                                {"n", n},
                                {"verdict", verdict},
                                {"oracle", oracle},
                                {"coefficients", io::matrix_to_json(coeffs)}});
    });
  }
  return rec.finish("1000 coefficient matrices, half rank-deficient, against kernel oracle",
                    started);
}

// Suite 7: the two-factor trace bound chain and the Schatten triangle
// inequality across the p grid.
inline SuiteResult run_trace(const Config& cfg) {
  auto started = std::chrono::steady_clock::now();
  detail::Recorder rec("trace");
  const double chain_tol = cfg.tol.get("trace.chain");
  const double mink_tol = cfg.tol.get("schatten.minkowski");
  std::mt19937_64 rng(cfg.seed + 3);
  const double p_grid[] = {1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()};

  for (int count = 0; count < 1000; ++count) {
    const int n = 1 + int(rng() % 5);
    Matrix a = random_matrix(rng, n, n);
    Matrix b = random_matrix(rng, n, n);

    auto report = hs::trace_inequality_check(a, b, chain_tol);
    rec.check(report.holds, report.holds ? 0.0 : 1.0, [&] {
      return detail::case_json({{"case", "trace-chain"},
                                {"n", n},
                                {"lhs", report.lhs},
                                {"mid", report.mid},
                                {"rhs", report.rhs},
                                {"a", io::matrix_to_json(a)},
                                {"b", io::matrix_to_json(b)}});
    });

    for (double p : p_grid) {
      const double excess =
          hs::schatten_norm(a + b, p) - hs::schatten_norm(a, p) - hs::schatten_norm(b, p);
      rec.check(excess <= mink_tol, std::max(0.0, excess), [&] {
        return detail::case_json({{"case", "schatten-triangle"},
                                  {"n", n},
                                  {"p", p},
                                  {"excess", excess},
                                  {"a", io::matrix_to_json(a)},
                                  {"b", io::matrix_to_json(b)}});
      });
    }
  }
  return rec.finish("trace chain and Schatten triangle on 1000 random pairs", started);
}

// Suite 8: box occupation ratios against their closed-form limits, the
// geometric probability normalization, and the counting formulas.
inline SuiteResult run_thermo(const Config& cfg) {
  auto started = std::chrono::steady_clock::now();
  detail::Recorder rec("thermo");
  const double ratio_tol = cfg.tol.get("thermo.ratio");
  const double sum_tol = cfg.tol.get("thermo.prob_sum");

  for (auto stat : {thermo::Statistics::FERMI, thermo::Statistics::BOSE}) {
    const long long k = 1000000;
    const double quotient =
        thermo::occupation(k, 0, 1.0, stat) / thermo::occupation(k, 1, 1.0, stat);
    const double limit = thermo::occupation_ratio_limit(0, 1, 1.0, stat);
    const double d = std::abs(quotient - limit);
    rec.check(d < ratio_tol, d, [&] {
      return detail::case_json({{"case", "ratio-limit"},
                                {"statistics", stat == thermo::Statistics::FERMI ? "fermi" : "bose"},
                                {"quotient", quotient},
                                {"limit", limit}});
    });
  }

  for (double beta : {0.5, 1.0, 2.0}) {
    double sum = 0.0;
    long long n = 0;
    while (std::exp(-beta * double(n)) >= 1e-16) sum += thermo::gibbs_probability(beta, n++);
    const double d = std::abs(sum - 1.0);
    rec.check(d < sum_tol, d, [&] {
      return detail::case_json({{"case", "probability-sum"}, {"beta", beta}, {"sum", sum}});
    });
  }

  for (long long k = 0; k <= 50; ++k) {
    auto basis = landau::full_basis(k);
    rec.check(landau::state_count(k) == basis.dim(),
              std::abs(double(landau::state_count(k) - basis.dim())), [&] {
                return detail::case_json({{"case", "state-count"}, {"k", k}});
              });
    std::map<long long, long long> per_level;
    for (const auto& s : basis.states) ++per_level[s.n];
    for (long long n = 0; n <= k; ++n) {
      rec.check(landau::degeneracy(k, n) == per_level[n],
                std::abs(double(landau::degeneracy(k, n) - per_level[n])), [&] {
                  return detail::case_json({{"case", "degeneracy"}, {"k", k}, {"n", n}});
                });
    }
  }
  return rec.finish("ratio limits at k = 10^6, probability sums, counting formulas", started);
}

// Suite 9: exact rational densities and the additivity demonstrations.
inline SuiteResult run_density(const Config&) {
  auto started = std::chrono::steady_clock::now();
  detail::Recorder rec("density");
  using density::Rational;

  const Rational evens = *density::density_limit(density::progression(0, 2));
  rec.check(evens == Rational(1, 2), 0.0, [&] {
    return detail::case_json({{"case", "evens-density"}});
  });

  for (long long j : {1LL, 7LL, 12345LL}) {
    const Rational single = *density::density_limit(density::finite_set({j}));
    rec.check(single == Rational(0), 0.0, [&] {
      return detail::case_json({{"case", "singleton-density"}, {"j", j}});
    });
  }

  Rational total(0);
  std::vector<density::IntegerSet> classes;
  for (long long r = 0; r < 3; ++r) {
    classes.push_back(density::progression(r, 3));
    total += *density::density_limit(classes.back());
  }
  rec.check(total == Rational(1), 0.0, [&] {
    return detail::case_json({{"case", "mod-3-additivity"}});
  });
  rec.check(*density::density_limit(density::set_union(classes)) == Rational(1), 0.0, [&] {
    return detail::case_json({{"case", "mod-3-union"}});
  });

  auto demo = density::sigma_additivity_failure_demo();
  const bool demo_ok = demo.singleton_sum == Rational(0) &&
                       demo.whole_density == Rational(1) && !demo.equal;
  rec.check(demo_ok, 0.0, [&] {
    return detail::case_json({{"case", "sigma-additivity-demo"}});
  });

  return rec.finish("exact densities, finite additivity, countable-additivity failure",
                    started);
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "landau", "tomita",     "kms",   "admissibility", "commutant",
      "classifier", "trace", "thermo", "density",
  };
  return names;
}

inline SuiteResult run_suite(const std::string& name, const Config& cfg) {
  if (name == "landau") return run_landau(cfg);
  if (name == "tomita") return run_tomita(cfg);
  if (name == "kms") return run_kms(cfg);
  if (name == "admissibility") return run_admissibility(cfg);
  if (name == "commutant") return run_commutant(cfg);
  if (name == "classifier") return run_classifier(cfg);
  if (name == "trace") return run_trace(cfg);
  if (name == "thermo") return run_thermo(cfg);
  if (name == "density") return run_density(cfg);
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

inline std::vector<SuiteResult> run_all(const Config& cfg) {
  std::vector<SuiteResult> results;
  for (const auto& name : suite_names()) results.push_back(run_suite(name, cfg));
  return results;
}

// Runtimes are deliberately left out: identical seed and tolerances must
// produce byte-identical reports.
inline io::json report_to_json(const std::vector<SuiteResult>& results, const Config& cfg) {
  io::json suites = io::json::array();
  for (const auto& r : results) {
    io::json entry{{"suite", r.suite},
                   {"passed", r.passed},
                   {"checks", r.checks},
                   {"max_defect", r.max_defect},
                   {"detail", r.detail}};
    if (!r.passed) entry["failure"] = io::json::parse(r.failure);
    suites.push_back(std::move(entry));
  }
  return io::json{{"seed", cfg.seed}, {"suites", std::move(suites)}};
}

}  // namespace modbox::selftest
