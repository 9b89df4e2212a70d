#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cantor/density.hpp"
#include "cantor/errors.hpp"
#include "cantor/estimator.hpp"
#include "cantor/experiments.hpp"
#include "cantor/measures.hpp"
#include "cantor/rng.hpp"
#include "cantor/words.hpp"

namespace {

// Writes to the given path, or to stdout when the path is "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct CommonArgs {
  std::string mu_spec;
  std::string lambda_spec;
  std::string point;
  int k_min = 8;
  int k_max = 13;
  std::uint64_t reps = 1000;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string out = "-";
};

void add_sweep_flags(CLI::App* cmd, CommonArgs& a, bool needs_reps) {
  cmd->add_option("--mu", a.mu_spec, "measure spec for mu")->required();
  cmd->add_option("--lambda", a.lambda_spec, "measure spec for lambda")
      ->required();
  cmd->add_option("--point", a.point, "evaluation point, a bit string")
      ->required();
  cmd->add_option("--k-min", a.k_min, "smallest partition depth");
  cmd->add_option("--k-max", a.k_max, "largest partition depth");
  if (needs_reps) {
    cmd->add_option("--reps", a.reps, "Monte Carlo replications per depth");
    cmd->add_option("--seed", a.seed, "master seed")->required();
    cmd->add_option("--workers", a.workers, "worker threads");
  }
  cmd->add_option("--out", a.out, "output file, '-' for stdout");
}

int run(int argc, char** argv) {
  CLI::App app{"histogram density estimation on infinite binary sequences"};
  app.require_subcommand(1);

  // measure-check
  std::string check_spec;
  int check_depth = 12;
  double check_tol = 1e-12;
  std::uint64_t check_seed = 0;
  std::uint64_t check_random = 10000;
  auto* check = app.add_subcommand("measure-check", "verify cylinder additivity");
  check->add_option("--lambda,--measure", check_spec, "measure spec")->required();
  check->add_option("--depth", check_depth, "max word depth to check");
  check->add_option("--tol", check_tol, "additivity tolerance");
  check->add_option("--seed", check_seed, "seed for random deep words");
  check->add_option("--random-words", check_random,
                    "random words beyond the exhaustive depth");

  // sample
  std::string sample_spec;
  std::uint64_t sample_n = 0;
  std::size_t sample_horizon = 0;
  std::uint64_t sample_seed = 0;
  std::string sample_out = "-";
  auto* sample = app.add_subcommand("sample", "draw prefixes from a measure");
  sample->add_option("--mu", sample_spec, "measure spec")->required();
  sample->add_option("--n", sample_n, "number of observations")->required();
  sample->add_option("--horizon", sample_horizon, "bits per observation")
      ->required();
  sample->add_option("--seed", sample_seed, "seed")->required();
  sample->add_option("--out", sample_out, "output file, '-' for stdout");

  // estimate
  std::string est_lambda, est_in, est_out = "-";
  int est_k = 0;
  bool est_force = false;
  auto* est = app.add_subcommand("estimate", "histogram from a sample file");
  est->add_option("--lambda", est_lambda, "dominating measure spec")->required();
  est->add_option("--k", est_k, "partition depth")->required();
  est->add_option("--in", est_in, "sample file")->required();
  est->add_option("--out", est_out, "output file, '-' for stdout");
  est->add_flag("--force-k", est_force,
                "proceed although the sample size is not 2^k");

  // density
  std::string den_mu, den_lambda, den_point;
  int den_m = 0;
  auto* den = app.add_subcommand("density", "evaluate the density at a point");
  den->add_option("--mu", den_mu, "measure spec for mu")->required();
  den->add_option("--lambda", den_lambda, "measure spec for lambda")->required();
  den->add_option("--point", den_point, "evaluation point")->required();
  den->add_option("--m", den_m, "truncation depth (default: point horizon)");

  CommonArgs mse_args, mom_args, ldt_args;
  auto* mse = app.add_subcommand("mse", "bias/variance/MSE sweep over depths");
  add_sweep_flags(mse, mse_args, true);
  int mom_order = 2;
  auto* mom = app.add_subcommand("moments", "central moment sweep");
  add_sweep_flags(mom, mom_args, true);
  mom->add_option("--m", mom_order, "moment order (1 or 2)");
  auto* ldt = app.add_subcommand("ldt", "analytic cell-average convergence");
  add_sweep_flags(ldt, ldt_args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  if (*check) {
    auto m = cantor::parse_measure(check_spec);
    auto rep = cantor::verify_additivity(m, check_depth, check_tol, check_seed,
                                         check_random);
    std::cout << "measure: " << m.describe() << '\n'
              << "words checked: " << rep.words_checked << '\n'
              << "worst violation: " << rep.worst_violation;
    if (!rep.worst_word.empty()) std::cout << " at word " << rep.worst_word;
    std::cout << '\n' << (rep.pass ? "PASS" : "FAIL") << '\n';
    return rep.pass ? 0 : 1;
  }

  if (*sample) {
    auto m = cantor::parse_measure(sample_spec);
    std::mt19937_64 rng(cantor::derive_seed(sample_seed, 0));
    Output out(sample_out);
    out.stream() << "# seed=" << sample_seed << '\n';
    for (std::uint64_t i = 0; i < sample_n; ++i) {
      out.stream() << cantor::sample_prefix(m, sample_horizon, rng).str() << '\n';
    }
    return 0;
  }

  if (*est) {
    auto lambda = cantor::parse_measure(est_lambda);
    std::ifstream in(est_in);
    if (!in) throw std::runtime_error("cannot open sample file " + est_in);
    auto s = cantor::read_sample(in);
    auto h = cantor::build_histogram(s, lambda, est_k, est_force);
    if (h.rate_overridden()) {
      std::cerr << "warning: sample size " << s.size()
                << " does not equal 2^" << est_k << "; depth overridden\n";
    }
    Output out(est_out);
    h.write_csv(out.stream());
    return 0;
  }

  if (*den) {
    auto mu = cantor::parse_measure(den_mu);
    auto lambda = cantor::parse_measure(den_lambda);
    auto x = cantor::SequencePrefix::parse(den_point);
    std::size_t m = den_m > 0 ? static_cast<std::size_t>(den_m) : x.horizon();
    double trunc = cantor::truncated_density(mu, lambda, x, m);
    std::cout << "truncated_density(m=" << m << ") = " << trunc << '\n';
    if (mu.product_params() && lambda.product_params()) {
      auto oracle = cantor::DensityOracle::from_measures(mu, lambda);
      std::cout << "constancy_depth = " << oracle.constancy_depth() << '\n'
                << "exact_density = " << oracle(x) << '\n';
    } else {
      std::cout << "exact_density = n/a (no closed form for this pair)\n";
    }
    return 0;
  }

  auto run_sweep = [](const CommonArgs& a, auto&& body) {
    auto mu = cantor::parse_measure(a.mu_spec);
    auto lambda = cantor::parse_measure(a.lambda_spec);
    auto x = cantor::SequencePrefix::parse(a.point);
    auto oracle = cantor::DensityOracle::from_measures(mu, lambda);
    cantor::SweepConfig cfg{a.k_min, a.k_max, a.reps, a.seed, a.workers};
    Output out(a.out);
    body(mu, lambda, oracle, x, cfg, out.stream());
  };

  if (*mse) {
    run_sweep(mse_args, [&](auto& mu, auto& lambda, auto& oracle, auto& x,
                            auto& cfg, std::ostream& os) {
      auto rows = cantor::mse_sweep(mu, lambda, oracle, x, cfg);
      cantor::write_convergence_csv(os, rows, cfg.master_seed);
    });
    return 0;
  }
  if (*mom) {
    run_sweep(mom_args, [&](auto& mu, auto& lambda, auto& oracle, auto& x,
                            auto& cfg, std::ostream& os) {
      auto rows = cantor::moment_sweep(mu, lambda, oracle, x, cfg, mom_order);
      cantor::write_moment_csv(os, rows, cfg.master_seed);
    });
    return 0;
  }
  if (*ldt) {
    run_sweep(ldt_args, [&](auto&, auto& lambda, auto& oracle, auto& x,
                            auto& cfg, std::ostream& os) {
      auto rows = cantor::ldt_check(oracle, lambda, x, cfg.k_min, cfg.k_max);
      cantor::write_ldt_csv(os, rows);
    });
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cantor::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const cantor::InadmissiblePairError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const cantor::HorizonError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const cantor::SampleRateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
