#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"

// Equilibrium checks for matrix dynamics.  The boundary function
// F(z) = tr(rho A e^(izh) B e^(-izh)) of a Gibbs state rho = e^(-beta h)/Z
// must satisfy F(t + i beta) = tr(rho B(t) A); the defect of that identity
// is what these routines measure.  The modular variant drives the flow with
// T T† and tests the same identity at inverse temperature -1.

namespace modbox::kms {

// ------------------------------ Gibbs states ------------------------------

struct GibbsState {
  Matrix h;
  double beta;
  Matrix rho;   // e^(-beta h) / tr e^(-beta h)
  HermEig eig;  // spectral data of h
};

inline void require_hermitian(const Matrix& h, const char* fn) {
  if (max_abs(h - h.adjoint()) > 1e-12 * std::max(1.0, max_abs(h)))
    throw std::invalid_argument(std::string(fn) + ": matrix must be Hermitian");
}

inline GibbsState make_gibbs(Matrix h, double beta) {
  require_square(h, "make_gibbs");
  require_finite(h, "make_gibbs");
  require_hermitian(h, "make_gibbs");
  if (!std::isfinite(beta)) throw std::invalid_argument("make_gibbs: beta must be finite");
  HermEig eig = herm_eig(h);
  // Weights shifted by the smallest exponent so nothing overflows.
  double shift = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    shift = std::min(shift, beta * eig.values[i]);
  double z = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    z += std::exp(-(beta * eig.values[i] - shift));
  Matrix rho = herm_apply(eig, [&](double w) { return std::exp(-(beta * w - shift)) / z; });
  return {std::move(h), beta, std::move(rho), std::move(eig)};
}

// e^(ith) A e^(-ith).
inline Matrix heisenberg_evolve(const Matrix& h, double t, const Matrix& a) {
  require_square(h, "heisenberg_evolve");
  require_same_dim(h, a, "heisenberg_evolve");
  require_hermitian(h, "heisenberg_evolve");
  HermEig eig = herm_eig(h);
  Matrix u = herm_apply(eig, [t](double w) { return std::exp(Complex(0.0, t * w)); });
  Matrix u_inv = herm_apply(eig, [t](double w) { return std::exp(Complex(0.0, -t * w)); });
  return u * a * u_inv;
}

// ------------------------------ KMS defect ------------------------------

// | F(t + i beta_test) - tr(rho B(t) A) | for F as above.  Zero (to rounding)
// exactly when beta_test matches the state's inverse temperature.
inline double kms_defect(const GibbsState& state, const Matrix& a, const Matrix& b, double t,
                         double beta_test) {
  require_same_dim(state.h, a, "kms_defect");
  require_same_dim(state.h, b, "kms_defect");
  if (!std::isfinite(t) || !std::isfinite(beta_test))
    throw std::invalid_argument("kms_defect: t and beta_test must be finite");
  // e^(izh) with z = t + i beta_test.
  Matrix ev = herm_apply(state.eig, [&](double w) {
    return std::exp(Complex(-beta_test * w, t * w));
  });
  Matrix ev_inv = herm_apply(state.eig, [&](double w) {
    return std::exp(Complex(beta_test * w, -t * w));
  });
  Complex f_analytic = (state.rho * a * ev * b * ev_inv).trace();
  Matrix u = herm_apply(state.eig, [&](double w) { return std::exp(Complex(0.0, t * w)); });
  Matrix u_inv = herm_apply(state.eig, [&](double w) { return std::exp(Complex(0.0, -t * w)); });
  Complex f_kms = (state.rho * u * b * u_inv * a).trace();
  return std::abs(f_analytic - f_kms);
}

}  // namespace modbox::kms

#include "modular.hpp"

namespace modbox::kms {

// Same identity for the state of a cyclic separating vector under its own
// modular flow, tested at inverse temperature -1.  The flow generator is
// T T†, which is also the (unnormalized) density matrix of the state.
inline double modular_kms_defect(const modular::ModularStructure& m, const Matrix& a,
                                 const Matrix& b, double t) {
  require_same_dim(m.t, a, "modular_kms_defect");
  require_same_dim(m.t, b, "modular_kms_defect");
  if (!std::isfinite(t)) throw std::invalid_argument("modular_kms_defect: t must be finite");
  Matrix rho = m.t * m.t.adjoint();
  rho /= rho.trace();
  // tau_z(B) = (TT†)^(iz) B (TT†)^(-iz) at z = t - i.
  const Complex iz(1.0, t);
  Matrix b_shifted = pos_power(m.left, iz) * b * pos_power(m.left, -iz);
  Complex f_analytic = (rho * a * b_shifted).trace();
  Matrix b_t = modular::modular_flow_left(m, t, b);
  Complex f_kms = (rho * b_t * a).trace();
  return std::abs(f_analytic - f_kms);
}

// ------------------------------ energy spectra ------------------------------

// A level with no degeneracy value stands for an infinite-dimensional
// eigenspace.
struct Level {
  double energy;
  std::optional<long long> degeneracy;
};

// E_n = energy_offset + energy_slope * n, d_n = deg_offset + deg_slope * n,
// defined while d_n >= 1.
struct SpectrumRule {
  double energy_offset = 0.0;
  double energy_slope = 1.0;
  long long deg_offset = 1;
  long long deg_slope = 0;
  bool deg_unbounded = false;
};

struct EnergySpectrum {
  std::vector<Level> levels;
  std::optional<SpectrumRule> rule;
  std::vector<long long> schedule;  // increasing term-count cuts for partial sums
};

inline const std::vector<long long>& default_schedule() {
  static const std::vector<long long> s = {16, 64, 256, 1024};
  return s;
}

inline void validate_schedule(const std::vector<long long>& schedule, const char* fn) {
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 1 || (i > 0 && schedule[i] <= schedule[i - 1]))
      throw std::invalid_argument(std::string(fn) + ": schedule must be strictly increasing and >= 1");
  }
}

inline EnergySpectrum spectrum_from_levels(std::vector<Level> levels,
                                           std::vector<long long> schedule = {}) {
  if (levels.empty()) throw std::invalid_argument("spectrum_from_levels: no levels");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!std::isfinite(levels[i].energy))
      throw std::invalid_argument("spectrum_from_levels: non-finite energy at level " +
                                  std::to_string(i));
    if (i > 0 && !(levels[i].energy > levels[i - 1].energy))
      throw std::invalid_argument("spectrum_from_levels: energies must increase strictly at level " +
                                  std::to_string(i));
    if (levels[i].degeneracy && *levels[i].degeneracy < 1)
      throw std::invalid_argument("spectrum_from_levels: degeneracy must be >= 1 at level " +
                                  std::to_string(i));
  }
  if (schedule.empty()) schedule = default_schedule();
  validate_schedule(schedule, "spectrum_from_levels");
  return {std::move(levels), std::nullopt, std::move(schedule)};
}

inline EnergySpectrum spectrum_from_rule(SpectrumRule rule, std::vector<long long> schedule = {}) {
  if (!std::isfinite(rule.energy_offset) || !std::isfinite(rule.energy_slope) ||
      rule.energy_slope <= 0.0)
    throw std::invalid_argument("spectrum_from_rule: energy slope must be finite and > 0");
  if (!rule.deg_unbounded && rule.deg_offset < 1)
    throw std::invalid_argument("spectrum_from_rule: degeneracy at n = 0 must be >= 1");
  if (schedule.empty()) schedule = default_schedule();
  validate_schedule(schedule, "spectrum_from_rule");
  return {{}, rule, std::move(schedule)};
}

// E_n = n + 1/2 with unbounded degeneracy at every level.
inline EnergySpectrum landau_spectrum() {
  SpectrumRule rule;
  rule.energy_offset = 0.5;
  rule.energy_slope = 1.0;
  rule.deg_unbounded = true;
  return spectrum_from_rule(rule);
}

// ------------------------------ admissibility ------------------------------

// Verdict on sum_n d_n e^(-E_n): converged with a certified geometric tail
// bound, or diverged (an unbounded level, or no certification within the
// schedule) with the recorded partial sums.
struct AdmissibilityResult {
  bool converged;
  double hs_norm_sq = 0.0;
  double tail_bound = 0.0;
  std::vector<double> partial_sums;
  std::string reason;
};

inline AdmissibilityResult admissibility(const EnergySpectrum& spectrum) {
  if (!spectrum.rule && spectrum.levels.empty())
    throw std::invalid_argument("admissibility: empty spectrum");

  AdmissibilityResult out;

  if (!spectrum.rule) {
    double sum = 0.0;
    std::size_t bounded_prefix = 0;
    bool unbounded = false;
    std::vector<double> prefix_sums;  // cumulative over bounded prefix levels
    for (const Level& lvl : spectrum.levels) {
      if (!lvl.degeneracy) {
        unbounded = true;
        break;
      }
      sum += double(*lvl.degeneracy) * std::exp(-lvl.energy);
      prefix_sums.push_back(sum);
      ++bounded_prefix;
    }
    for (long long cut : spectrum.schedule)
      if (cut <= (long long)bounded_prefix) out.partial_sums.push_back(prefix_sums[cut - 1]);
    if (unbounded) {
      out.converged = false;
      out.reason = "unbounded-degeneracy";
      return out;
    }
    out.converged = true;
    out.hs_norm_sq = sum;
    out.tail_bound = 0.0;
    out.reason = "finite-spectrum";
    if (out.partial_sums.empty() || out.partial_sums.back() != sum) out.partial_sums.push_back(sum);
    return out;
  }

  const SpectrumRule& rule = *spectrum.rule;
  if (rule.deg_unbounded) {
    out.converged = false;
    out.reason = "unbounded-degeneracy";
    return out;
  }

  auto degeneracy_at = [&](long long n) { return rule.deg_offset + rule.deg_slope * n; };
  auto term_at = [&](long long n) {
    return double(degeneracy_at(n)) * std::exp(-(rule.energy_offset + rule.energy_slope * n));
  };

  // Negative degeneracy slope ends the spectrum at the last n with d_n >= 1.
  if (rule.deg_slope < 0) {
    long long last = (rule.deg_offset - 1) / (-rule.deg_slope);
    double sum = 0.0;
    for (long long n = 0; n <= last; ++n) {
      sum += term_at(n);
      for (long long cut : spectrum.schedule)
        if (cut == n + 1) out.partial_sums.push_back(sum);
    }
    out.converged = true;
    out.hs_norm_sq = sum;
    out.tail_bound = 0.0;
    out.reason = "finite-spectrum";
    return out;
  }

  // Non-decreasing degeneracy: the term ratio r_n = (d_{n+1}/d_n) e^(-slope)
  // is non-increasing, so the first r_N < 1 bounds every later ratio.
  const long long max_terms = spectrum.schedule.back();
  double sum = 0.0;
  std::optional<double> certified_ratio;
  double previous_increment = 0.0;
  for (long long n = 0; n < max_terms; ++n) {
    double t = term_at(n);
    sum += t;
    if (!certified_ratio) {
      double r = (double(degeneracy_at(n + 1)) / double(degeneracy_at(n))) *
                 std::exp(-rule.energy_slope);
      if (r < 1.0) certified_ratio = r;
    }
    for (long long cut : spectrum.schedule)
      if (cut == n + 1) out.partial_sums.push_back(sum);
    // Divergence watchdog: runaway partial sums with non-shrinking steps.
    if (sum > 1e15 && t >= previous_increment) {
      out.converged = false;
      out.reason = "divergent-partial-sums";
      return out;
    }
    previous_increment = t;
  }
  if (!certified_ratio) {
    out.converged = false;
    out.reason = "uncertified";
    return out;
  }
  out.converged = true;
  out.hs_norm_sq = sum;
  out.tail_bound = term_at(max_terms) / (1.0 - *certified_ratio);
  out.reason = "certified-tail";
  return out;
}

// sum_{n=0..k} (k - n + 1) e^(-(n + 1/2)) for each requested k.
inline std::vector<double> landau_truncation_growth(const std::vector<long long>& ks) {
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (ks[i] < 0 || (i > 0 && ks[i] <= ks[i - 1]))
      throw std::invalid_argument("landau_truncation_growth: cuts must be non-negative and increasing");
  std::vector<double> out;
  out.reserve(ks.size());
  for (long long k : ks) {
    double sum = 0.0;
    for (long long n = 0; n <= k; ++n) sum += double(k - n + 1) * std::exp(-(double(n) + 0.5));
    out.push_back(sum);
  }
  return out;
}

}  // namespace modbox::kms
