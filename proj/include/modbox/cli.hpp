#pragma once

// Command-line surface: one dispatch entry point routing to the analysis
// subcommands. All reports are built in memory first and written in one
// shot, so invalid input never leaves a partial output file.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "selftest.hpp"

namespace modbox::cli {

constexpr int kExitSuccess = 0;      // command ran, checks passed
constexpr int kExitCheckFailed = 1;  // command ran, a mathematical check failed
constexpr int kExitBadInput = 2;     // arguments or input files were invalid

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> tol_overrides;
  std::string out_path;
  std::string format;  // empty = per-command default
  bool physics_sign = false;
  selftest::Tolerances tolerances;
};

namespace detail {

inline void emit(const Globals& g, std::ostream& out, const std::string& content) {
  if (g.out_path.empty())
    out << content;
  else
    io::write_text_file(g.out_path, content);
}

inline std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

// Commands whose natural output is a single report reject --format csv.
inline void require_json_format(const Globals& g, const char* command) {
  if (!g.format.empty() && g.format != "json")
    throw std::invalid_argument(std::string(command) + ": only json output is available");
}

inline std::string table_format(const Globals& g) {
  return g.format.empty() ? "csv" : g.format;
}

inline io::json rational_json(const density::Rational& r) {
  return io::json{{"numerator", r.numerator()},
                  {"denominator", r.denominator()},
                  {"decimal", boost::rational_cast<double>(r)}};
}

// The five relative identity defects on seeded random probes, worst case
// over the batch. Mirrors the verification suite's definitions.
inline io::json invariant_defects(const modular::ModularStructure& m, std::mt19937_64& rng) {
  const int n = int(m.t.rows());
  std::uniform_real_distribution<double> times(-2.0, 2.0);
  double worst_s = 0.0, worst_j2 = 0.0, worst_jdj = 0.0, worst_conj = 0.0, worst_flow = 0.0;
  for (int rep = 0; rep < 8; ++rep) {
    Matrix a = random_matrix(rng, n, n);
    Matrix x = random_matrix(rng, n, n);
    const double t = times(rng);

    Matrix want_s = a.adjoint() * m.t;
    worst_s = std::max(worst_s, max_abs(modular::s_apply(m, a * m.t) - want_s) /
                                    std::max(1.0, max_abs(want_s)));

    Matrix jj = modular::modular_conjugation_apply(m, modular::modular_conjugation_apply(m, x));
    worst_j2 = std::max(worst_j2, max_abs(jj - x) / std::max(1.0, max_abs(x)));

    Matrix jdj = modular::modular_conjugation_apply(
        m, modular::modular_power_apply(m, Complex(1.0, 0.0),
                                        modular::modular_conjugation_apply(m, x)));
    Matrix inv = modular::modular_power_apply(m, Complex(-1.0, 0.0), x);
    worst_jdj = std::max(worst_jdj, max_abs(jdj - inv) / std::max(1.0, max_abs(inv)));

    auto conj = modular::modular_conjugation_algebra_check(m, a);
    worst_conj = std::max(worst_conj, conj.distance / std::max(1.0, max_abs(a)));

    Matrix lhs = modular::modular_power_apply(
        m, Complex(0.0, t), a * modular::modular_power_apply(m, Complex(0.0, -t), x));
    Matrix rhs = modular::modular_flow_left(m, t, a) * x;
    worst_flow = std::max(worst_flow, max_abs(lhs - rhs) / std::max(1.0, max_abs(rhs)));
  }
  return io::json{{"s_relation", worst_s},
                  {"j_squared", worst_j2},
                  {"jdj_inverse", worst_jdj},
                  {"conjugated_algebra", worst_conj},
                  {"flow", worst_flow},
                  {"hamiltonian_split", modular::full_modular_hamiltonian_check(m)}};
}

inline int run_modular_analyze(const Globals& g, std::ostream& out, const std::string& omega_path,
                               double rank_tol) {
  require_json_format(g, "modular analyze");
  Matrix coeffs = io::read_matrix_file(omega_path);
  modular::CyclicVector omega(coeffs);
  auto cls = modular::check_cyclic_separating(omega, rank_tol);

  io::json report;
  report["is_cyclic_separating"] = cls.is_cs;
  report["rank_tolerance"] = rank_tol;
  io::json sv = io::json::array();
  for (Eigen::Index i = 0; i < cls.singular_values.size(); ++i)
    sv.push_back(cls.singular_values[i]);
  report["singular_values"] = std::move(sv);

  if (!cls.is_cs) {
    emit(g, out, dump(report));
    return kExitCheckFailed;
  }

  auto m = modular::build_modular(omega, rank_tol);
  RealVector h_values = herm_eig(m.h).values;
  std::vector<double> h_sorted;
  for (Eigen::Index i = 0; i < h_values.size(); ++i)
    h_sorted.push_back(g.physics_sign ? -h_values[i] : h_values[i]);
  std::sort(h_sorted.begin(), h_sorted.end());
  report["h_eigenvalues"] = h_sorted;
  report["sign_convention"] = g.physics_sign ? "physics" : "math";

  std::mt19937_64 rng(g.seed);
  report["invariant_defects"] = invariant_defects(m, rng);
  emit(g, out, dump(report));
  return kExitSuccess;
}

inline int run_kms_check(const Globals& g, std::ostream& out, const std::string& h_path,
                         double beta, int trials) {
  require_json_format(g, "kms check");
  if (trials < 1) throw std::invalid_argument("kms check: --trials must be >= 1");
  Matrix h = io::read_matrix_file(h_path);
  auto state = kms::make_gibbs(h, beta);
  const double tolerance = g.tolerances.get("kms.matched");
  const int n = int(h.rows());

  std::mt19937_64 rng(g.seed);
  const double t_grid[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
  double max_defect = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Matrix a = random_matrix(rng, n, n);
    Matrix b = random_matrix(rng, n, n);
    for (double t : t_grid)
      max_defect = std::max(max_defect, kms::kms_defect(state, a, b, t, beta));
  }
  const bool passed = max_defect < tolerance;

  io::json report{{"dim", n},
                  {"beta", beta},
                  {"trials", trials},
                  {"max_defect", max_defect},
                  {"tolerance", tolerance},
                  {"passed", passed}};
  emit(g, out, dump(report));
  return passed ? kExitSuccess : kExitCheckFailed;
}

inline int run_kms_admissible(const Globals& g, std::ostream& out,
                              const std::string& spectrum_path) {
  require_json_format(g, "kms admissible");
  auto spectrum = io::read_spectrum_file(spectrum_path);
  auto result = kms::admissibility(spectrum);
  io::json report{{"converged", result.converged},
                  {"tail_bound", result.tail_bound},
                  {"reason", result.reason},
                  {"partial_sums", result.partial_sums}};
  if (result.converged) report["hs_norm_sq"] = result.hs_norm_sq;
  emit(g, out, dump(report));
  return kExitSuccess;
}

inline int run_landau_spectrum(const Globals& g, std::ostream& out, long long k_max) {
  if (k_max < 0 || k_max > 1000)
    throw std::invalid_argument("landau spectrum: --k-max must be in 0..1000");
  const double tolerance = g.tolerances.get("landau.spectrum_rel");

  double max_rel = 0.0;
  std::string csv = io::csv_line({"k", "j", "eigenvalue", "expected", "abs_err"});
  io::json rows = io::json::array();
  for (long long k = 0; k <= k_max; ++k) {
    RealVector values = landau::block_spectrum(k);
    for (long long j = 0; j <= k; ++j) {
      const double expected = 2.0 + 4.0 * double(j);
      const double abs_err = std::abs(values[j] - expected);
      max_rel = std::max(max_rel, abs_err / expected);
      if (table_format(g) == "csv") {
        csv += io::csv_line({std::to_string(k), std::to_string(j), io::format_real(values[j]),
                             io::format_real(expected), io::format_real(abs_err)});
      } else {
        rows.push_back(io::json{{"k", k},
                                {"j", j},
                                {"eigenvalue", values[j]},
                                {"expected", expected},
                                {"abs_err", abs_err}});
      }
    }
  }
  const bool passed = max_rel < tolerance;
  if (table_format(g) == "csv") {
    emit(g, out, csv);
  } else {
    emit(g, out,
         dump(io::json{{"rows", std::move(rows)},
                       {"max_rel_err", max_rel},
                       {"tolerance", tolerance},
                       {"passed", passed}}));
  }
  return passed ? kExitSuccess : kExitCheckFailed;
}

inline int run_landau_cutoff(const Globals& g, std::ostream& out, double r_squared) {
  auto k = landau::box_cutoff(r_squared);
  if (table_format(g) == "csv") {
    emit(g, out,
         io::csv_line({"r_squared", "k"}) +
             io::csv_line({io::format_real(r_squared), k ? std::to_string(*k) : ""}));
  } else {
    io::json report{{"r_squared", r_squared}};
    if (k)
      report["k"] = *k;
    else
      report["k"] = nullptr;
    emit(g, out, dump(report));
  }
  return kExitSuccess;
}

inline int run_landau_count(const Globals& g, std::ostream& out, long long k) {
  if (k > 1000000000) throw std::invalid_argument("landau count: --k must be <= 10^9");
  const long long count = landau::state_count(k);
  if (table_format(g) == "csv") {
    emit(g, out, io::csv_line({"k", "count"}) +
                     io::csv_line({std::to_string(k), std::to_string(count)}));
  } else {
    emit(g, out, dump(io::json{{"k", k}, {"count", count}}));
  }
  return kExitSuccess;
}

inline int run_thermo_occupancy(const Globals& g, std::ostream& out, long long k, double beta,
                                const std::string& stat_name) {
  if (k < 0 || k > 1000000)
    throw std::invalid_argument("thermo occupancy: --k must be in 0..10^6");
  const auto stat = thermo::parse_statistics(stat_name);
  const std::vector<double> occupations = thermo::occupancy_list(k, beta, stat);
  const double total = thermo::occupation_sum(k, beta, stat);

  if (table_format(g) == "csv") {
    std::string csv = io::csv_line({"n", "N", "fraction"});
    for (long long n = 0; n <= k; ++n)
      csv += io::csv_line({std::to_string(n), io::format_real(occupations[std::size_t(n)]),
                           io::format_real(occupations[std::size_t(n)] / total)});
    emit(g, out, csv);
  } else {
    io::json rows = io::json::array();
    for (long long n = 0; n <= k; ++n)
      rows.push_back(io::json{{"n", n},
                              {"N", occupations[std::size_t(n)]},
                              {"fraction", occupations[std::size_t(n)] / total}});
    emit(g, out, dump(io::json{{"k", k},
                               {"beta", beta},
                               {"statistics", stat_name},
                               {"rows", std::move(rows)}}));
  }
  return kExitSuccess;
}

inline int run_thermo_ratio(const Globals& g, std::ostream& out, long long i, long long j,
                            double beta, const std::string& stat_name) {
  const auto stat = thermo::parse_statistics(stat_name);
  const double ratio = thermo::occupation_ratio_limit(i, j, beta, stat);
  if (table_format(g) == "csv") {
    emit(g, out, io::csv_line({"i", "j", "beta", "statistics", "ratio"}) +
                     io::csv_line({std::to_string(i), std::to_string(j), io::format_real(beta),
                                   stat_name, io::format_real(ratio)}));
  } else {
    emit(g, out, dump(io::json{{"i", i},
                               {"j", j},
                               {"beta", beta},
                               {"statistics", stat_name},
                               {"ratio", ratio}}));
  }
  return kExitSuccess;
}

inline int run_density_demo(const Globals& g, std::ostream& out) {
  require_json_format(g, "density demo-sigma");
  auto report = density::sigma_additivity_failure_demo();
  emit(g, out,
       dump(io::json{{"singleton_sum", rational_json(report.singleton_sum)},
                     {"whole_density", rational_json(report.whole_density)},
                     {"equal", report.equal}}));
  return kExitSuccess;
}

inline int run_density(const Globals& g, std::ostream& out, const std::string& set_expr,
                       bool want_limit, long long at_k) {
  require_json_format(g, "density");
  if (set_expr.empty())
    throw std::invalid_argument("density: --set is required (or use the demo-sigma subcommand)");
  if (want_limit == (at_k > 0))
    throw std::invalid_argument("density: pass exactly one of --limit and --at-k K");
  auto set = density::parse_set(set_expr);

  io::json report{{"set", set_expr}};
  if (want_limit) {
    auto limit = density::density_limit(set);
    report["limit"] = rational_json(*limit);
  } else {
    report["k"] = at_k;
    report["count"] = density::count_prefix(set, at_k);
    report["estimate"] = rational_json(density::density_estimate(set, at_k));
  }
  emit(g, out, dump(report));
  return kExitSuccess;
}

inline int run_selftest(const Globals& g, std::ostream& out, const std::string& suite) {
  require_json_format(g, "selftest");
  selftest::Config cfg;
  cfg.seed = g.seed;
  cfg.tol = g.tolerances;
  std::vector<selftest::SuiteResult> results;
  if (suite.empty())
    results = selftest::run_all(cfg);
  else
    results.push_back(selftest::run_suite(suite, cfg));
  const bool all_passed =
      std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  emit(g, out, dump(selftest::report_to_json(results, cfg)));
  return all_passed ? kExitSuccess : kExitCheckFailed;
}

}  // namespace detail

// Parses args (program name excluded) and runs the selected subcommand.
// Returns 0 on success, 1 when a mathematical check failed, 2 on invalid
// arguments or input files.
inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-dimensional modular analysis and Landau-box statistics", "modbox"};
  app.require_subcommand(1);

  Globals g;
  std::string config_path;
  app.add_option("--config", config_path, "Run configuration JSON file");
  app.add_option("--seed", g.seed, "Seed for randomized verification (default 12345)");
  app.add_option("--tol", g.tol_overrides, "Tolerance override NAME=VALUE (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--out", g.out_path, "Write the report to this file instead of stdout");
  app.add_option("--format", g.format, "Output format for tabular commands")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--physics-sign", g.physics_sign,
               "Report the modular Hamiltonian with the opposite sign convention");

  auto* modular_cmd = app.add_subcommand("modular", "Modular structure of a vector state");
  modular_cmd->require_subcommand(1);
  modular_cmd->fallthrough();
  auto* analyze = modular_cmd->add_subcommand(
      "analyze", "Classify a coefficient matrix and report the modular data");
  analyze->fallthrough();
  std::string omega_path;
  double rank_tol = 1e-12;
  analyze->add_option("--omega", omega_path, "Coefficient matrix JSON file")->required();
  analyze->add_option("--tol", rank_tol, "Relative singular-value threshold");

  auto* kms_cmd = app.add_subcommand("kms", "Equilibrium condition checks");
  kms_cmd->require_subcommand(1);
  kms_cmd->fallthrough();
  auto* kms_check = kms_cmd->add_subcommand(
      "check", "Verify the boundary identity for the Gibbs state of a Hamiltonian");
  kms_check->fallthrough();
  std::string h_path;
  double kms_beta = 1.0;
  int kms_trials = 50;
  kms_check->add_option("--hamiltonian", h_path, "Hermitian matrix JSON file")->required();
  kms_check->add_option("--beta", kms_beta, "Inverse temperature")->required();
  kms_check->add_option("--trials", kms_trials, "Number of random operator pairs");
  auto* kms_adm = kms_cmd->add_subcommand(
      "admissible", "Decide convergence of sum d_n exp(-E_n) for a spectrum");
  kms_adm->fallthrough();
  std::string spectrum_path;
  kms_adm->add_option("--spectrum", spectrum_path, "Spectrum JSON file")->required();

  auto* landau_cmd = app.add_subcommand("landau", "Finite-box level structure");
  landau_cmd->require_subcommand(1);
  landau_cmd->fallthrough();
  auto* lspectrum = landau_cmd->add_subcommand(
      "spectrum", "Tridiagonal block eigenvalues against the 2+4j ladder");
  lspectrum->fallthrough();
  long long k_max = 60;
  lspectrum->add_option("--k-max", k_max, "Largest block index (default 60)");
  auto* lcutoff = landau_cmd->add_subcommand("cutoff", "Largest complete block inside a box");
  lcutoff->fallthrough();
  double r_squared = 0.0;
  lcutoff->add_option("--r-squared", r_squared, "Box radius squared")->required();
  auto* lcount = landau_cmd->add_subcommand("count", "Number of states up to a block index");
  lcount->fallthrough();
  long long count_k = 0;
  lcount->add_option("--k", count_k, "Block index")->required();

  auto* thermo_cmd = app.add_subcommand("thermo", "Occupation statistics of the box");
  thermo_cmd->require_subcommand(1);
  thermo_cmd->fallthrough();
  auto* occupancy = thermo_cmd->add_subcommand("occupancy", "Per-level occupations and fractions");
  occupancy->fallthrough();
  long long occ_k = 0;
  double occ_beta = 1.0;
  std::string occ_stat = "fermi";
  occupancy->add_option("--k", occ_k, "Box cut")->required();
  occupancy->add_option("--beta", occ_beta, "Inverse temperature")->required();
  occupancy->add_option("--stat", occ_stat, "fermi or bose")->required();
  auto* ratio = thermo_cmd->add_subcommand("ratio", "Large-box limit of an occupation ratio");
  ratio->fallthrough();
  long long ratio_i = 0, ratio_j = 0;
  double ratio_beta = 1.0;
  std::string ratio_stat = "fermi";
  ratio->add_option("--i", ratio_i, "Numerator level")->required();
  ratio->add_option("--j", ratio_j, "Denominator level")->required();
  ratio->add_option("--beta", ratio_beta, "Inverse temperature")->required();
  ratio->add_option("--stat", ratio_stat, "fermi or bose")->required();

  auto* density_cmd = app.add_subcommand("density", "Natural density of integer sets");
  density_cmd->fallthrough();
  std::string set_expr;
  bool want_limit = false;
  long long at_k = 0;
  density_cmd->add_option("--set", set_expr,
                          "Set expression: ap:a,m | finite:x1,... | union(...) | inter(...) | "
                          "compl(...)");
  density_cmd->add_flag("--limit", want_limit, "Report the certified density limit");
  density_cmd->add_option("--at-k", at_k, "Report the exact counting estimate at this prefix");
  auto* demo = density_cmd->add_subcommand(
      "demo-sigma", "Show that singleton densities sum to 0 while the whole space has density 1");
  demo->fallthrough();

  auto* selftest_cmd =
      app.add_subcommand("selftest", "Run the verification suites and emit a JSON report");
  selftest_cmd->fallthrough();
  std::string suite;
  selftest_cmd->add_option("--suite", suite, "Run a single suite by name");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitBadInput;
  }

  // Default report names when a run config supplies an output directory.
  const char* slug = nullptr;
  bool tabular = false;
  if (analyze->parsed()) {
    slug = "modular-analyze";
  } else if (kms_check->parsed()) {
    slug = "kms-check";
  } else if (kms_adm->parsed()) {
    slug = "kms-admissible";
  } else if (lspectrum->parsed()) {
    slug = "landau-spectrum";
    tabular = true;
  } else if (lcutoff->parsed()) {
    slug = "landau-cutoff";
    tabular = true;
  } else if (lcount->parsed()) {
    slug = "landau-count";
    tabular = true;
  } else if (occupancy->parsed()) {
    slug = "thermo-occupancy";
    tabular = true;
  } else if (ratio->parsed()) {
    slug = "thermo-ratio";
    tabular = true;
  } else if (demo->parsed()) {
    slug = "density-demo-sigma";
  } else if (density_cmd->parsed()) {
    slug = "density";
  } else if (selftest_cmd->parsed()) {
    slug = "selftest";
  }

  try {
    // Explicit command-line flags win over run-config values.
    if (!config_path.empty()) {
      const io::json config = io::read_json_file(config_path);
      if (!config.is_object())
        throw std::invalid_argument("run config: expected an object");
      for (const auto& [key, value] : config.items()) {
        (void)value;
        if (key != "seed" && key != "tolerances" && key != "out_dir" && key != "format")
          throw std::invalid_argument("run config: unknown key \"" + key + "\"");
      }
      if (config.contains("seed")) {
        const auto& seed = config["seed"];
        if (!seed.is_number_integer() || seed.get<long long>() < 0)
          throw std::invalid_argument("run config: \"seed\" must be a nonnegative integer");
        if (app.count("--seed") == 0) g.seed = seed.get<std::uint64_t>();
      }
      if (config.contains("format")) {
        const auto& format = config["format"];
        if (!format.is_string() || (format != "json" && format != "csv"))
          throw std::invalid_argument("run config: \"format\" must be \"json\" or \"csv\"");
        if (g.format.empty()) g.format = format.get<std::string>();
      }
      if (config.contains("tolerances")) {
        const auto& overrides = config["tolerances"];
        if (!overrides.is_object())
          throw std::invalid_argument("run config: \"tolerances\" must be an object");
        for (const auto& [name, value] : overrides.items()) {
          if (!value.is_number())
            throw std::invalid_argument("run config: tolerance \"" + name +
                                        "\" must be a number");
          g.tolerances.set(name, value.get<double>());
        }
      }
      if (config.contains("out_dir")) {
        const auto& out_dir = config["out_dir"];
        if (!out_dir.is_string() || out_dir.get<std::string>().empty())
          throw std::invalid_argument("run config: \"out_dir\" must be a nonempty string");
        if (g.out_path.empty() && slug != nullptr) {
          const std::filesystem::path dir(out_dir.get<std::string>());
          std::filesystem::create_directories(dir);
          const std::string ext = (tabular && g.format != "json") ? ".csv" : ".json";
          g.out_path = (dir / (std::string(slug) + ext)).string();
        }
      }
    }

    for (const auto& override_text : g.tol_overrides) {
      const auto eq = override_text.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--tol expects NAME=VALUE, got \"" + override_text + "\"");
      const std::string value_text = override_text.substr(eq + 1);
      double value = 0.0;
      std::size_t used = 0;
      try {
        value = std::stod(value_text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != value_text.size())
        throw std::invalid_argument("--tol value is not a number in \"" + override_text + "\"");
      g.tolerances.set(override_text.substr(0, eq), value);
    }

    if (analyze->parsed()) return detail::run_modular_analyze(g, out, omega_path, rank_tol);
    if (kms_check->parsed()) return detail::run_kms_check(g, out, h_path, kms_beta, kms_trials);
    if (kms_adm->parsed()) return detail::run_kms_admissible(g, out, spectrum_path);
    if (lspectrum->parsed()) return detail::run_landau_spectrum(g, out, k_max);
    if (lcutoff->parsed()) return detail::run_landau_cutoff(g, out, r_squared);
    if (lcount->parsed()) return detail::run_landau_count(g, out, count_k);
    if (occupancy->parsed())
      return detail::run_thermo_occupancy(g, out, occ_k, occ_beta, occ_stat);
    if (ratio->parsed())
      return detail::run_thermo_ratio(g, out, ratio_i, ratio_j, ratio_beta, ratio_stat);
    if (demo->parsed()) return detail::run_density_demo(g, out);
    if (density_cmd->parsed()) return detail::run_density(g, out, set_expr, want_limit, at_k);
    if (selftest_cmd->parsed()) return detail::run_selftest(g, out, suite);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const RankDeficiencyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  err << "error: no subcommand selected\n\n" << app.help();
  return kExitBadInput;
}

}  // namespace modbox::cli
