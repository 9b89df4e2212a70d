// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Quantitative targets come from the closed-form binomial moment
// oracles; every run is seeded and deterministic.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cantor/density.hpp"
#include "cantor/estimator.hpp"
#include "cantor/experiments.hpp"
#include "cantor/measures.hpp"
#include "cantor/rng.hpp"
#include "cantor/stats.hpp"
#include "cantor/words.hpp"

using namespace cantor;

namespace {

constexpr std::uint64_t kSeed = 20240823;

int g_failures = 0;

class Criterion {
 public:
  Criterion(int id, std::string name)
      : id_(id), name_(std::move(name)), start_(clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok) {
      ok_ = false;
      details_.push_back(detail);
    }
  }

  double elapsed() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

  void finish(double runtime_limit = 0.0) {
    double t = elapsed();
    if (runtime_limit > 0.0 && t > runtime_limit) {
      ok_ = false;
      details_.push_back("runtime " + std::to_string(t) + "s exceeds " +
                         std::to_string(runtime_limit) + "s");
    }
    std::printf("[%s] criterion %d: %s (%.1fs)\n", ok_ ? "PASS" : "FAIL", id_,
                name_.c_str(), t);
    for (const auto& d : details_) std::printf("       %s\n", d.c_str());
    if (!ok_) ++g_failures;
  }

 private:
  using clock = std::chrono::steady_clock;
  int id_;
  std::string name_;
  clock::time_point start_;
  bool ok_ = true;
  std::vector<std::string> details_;
};

int workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 4;
}

std::vector<std::pair<std::string, CylinderMeasure>> builtin_measures() {
  return {
      {"lebesgue", CylinderMeasure::lebesgue()},
      {"bernoulli tail=0.75", CylinderMeasure::bernoulli(ParamSequence({}, 0.75))},
      {"bernoulli tail=0.75 head=0.5",
       CylinderMeasure::bernoulli(ParamSequence({0.5}, 0.75))},
      {"bernoulli tail=0.6 head=0.3;0.8",
       CylinderMeasure::bernoulli(ParamSequence({0.3, 0.8}, 0.6))},
      {"markov", CylinderMeasure::markov(
                     {{0.5, 0.5}, {{{0.9, 0.1}, {0.2, 0.8}}}})},
  };
}

struct SetupA {
  CylinderMeasure mu = CylinderMeasure::bernoulli(ParamSequence({0.5}, 0.75));
  CylinderMeasure lambda = CylinderMeasure::bernoulli(ParamSequence({}, 0.75));
  DensityOracle oracle = DensityOracle::from_measures(mu, lambda);
  SequencePrefix x = SequencePrefix::parse("1111111111111111");
};

struct SetupB {
  CylinderMeasure mu = CylinderMeasure::bernoulli(ParamSequence({0.75}, 0.5));
  CylinderMeasure lambda = CylinderMeasure::lebesgue();
  DensityOracle oracle = DensityOracle::from_measures(mu, lambda);
  SequencePrefix x = SequencePrefix::parse("1111111111111111");
};

void criterion1_measure_laws() {
  Criterion c(1, "measure laws: additivity and partition mass");
  for (const auto& [name, m] : builtin_measures()) {
    auto rep = verify_additivity(m, 40, 1e-12, kSeed, 10000);
    c.require(rep.pass, name + ": worst additivity violation " +
                            std::to_string(rep.worst_violation));
    for (int k = 1; k <= 12; ++k) {
      double total = 0.0;
      for (std::uint64_t j = 0; j < (std::uint64_t{1} << k); ++j) {
        total += m(FiniteWord::from_index(j, k));
      }
      c.require(std::abs(total - 1.0) <= 1e-10,
                name + ": partition mass at k=" + std::to_string(k) + " is " +
                    std::to_string(total));
    }
  }
  c.finish(5.0);
}

void criterion2_sampler() {
  Criterion c(2, "sampler chi-square goodness of fit on Pi_6");
  const std::size_t draws = 100000;
  for (const auto& [name, m] : builtin_measures()) {
    std::mt19937_64 rng(derive_seed(kSeed, 2));
    std::vector<std::uint64_t> observed(64, 0);
    for (std::size_t i = 0; i < draws; ++i) {
      ++observed[cell_of(sample_prefix(m, 6, rng), 6).index];
    }
    std::vector<double> expected(64);
    for (std::uint64_t j = 0; j < 64; ++j) {
      expected[j] = static_cast<double>(draws) * m(FiniteWord::from_index(j, 6));
    }
    double p = stats::chi_square_pvalue(
        stats::pearson_statistic(observed, expected), 63.0);
    c.require(p > 0.001, name + ": p-value " + std::to_string(p));
  }
  c.finish(10.0);
}

void criterion3_histogram_identities() {
  Criterion c(3, "histogram identities and hand-count fixture");
  Sample fixture;
  for (const char* line : {"00", "01", "01", "11"}) {
    fixture.prefixes.push_back(SequencePrefix::parse(line));
  }
  auto h = build_histogram(fixture, CylinderMeasure::lebesgue(), 2);
  double expect[4] = {1.0, 2.0, 0.0, 1.0};
  for (std::uint64_t j = 0; j < 4; ++j) {
    c.require(h.evaluate_cell(j) == expect[j],
              "fixture f_N at cell " + std::to_string(j));
  }

  std::mt19937_64 rng(derive_seed(kSeed, 3));
  auto mu = CylinderMeasure::bernoulli(ParamSequence({0.3}, 0.7));
  for (int k : {4, 6, 8, 10}) {
    Sample s;
    std::size_t n = std::size_t{1} << k;
    for (std::size_t i = 0; i < n; ++i) {
      s.prefixes.push_back(sample_prefix(mu, static_cast<std::size_t>(k) + 4, rng));
    }
    auto hist = build_histogram(s, CylinderMeasure::lebesgue(), k);
    c.require(std::abs(hist.integral_check() - 1.0) <= 1e-12,
              "integral_check at k=" + std::to_string(k));
    // evaluate must depend only on the depth-k prefix
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Bit> stem(static_cast<std::size_t>(k));
      for (auto& bit : stem) bit = static_cast<Bit>(rng() & 1u);
      auto a = stem;
      a.push_back(0);
      auto b = stem;
      b.push_back(1);
      b.push_back(1);
      c.require(hist.evaluate(SequencePrefix(a)) == hist.evaluate(SequencePrefix(b)),
                "prefix dependence at k=" + std::to_string(k));
    }
  }
  c.finish();
}

void criterion4_lemma2() {
  Criterion c(4, "Lemma 2 exactness of cell averages");
  SetupA a;
  for (const auto& r : ldt_check(a.oracle, a.lambda, a.x, 1, 14)) {
    c.require(r.abs_error <= 1e-12,
              "setup A abs_error at k=" + std::to_string(r.k) + " is " +
                  std::to_string(r.abs_error));
  }
  DensityOracle id(ParamSequence({}, 0.75), ParamSequence({}, 0.75));
  for (const auto& r : ldt_check(id, a.lambda, a.x, 1, 14)) {
    c.require(r.abs_error <= 1e-12 && r.f_x == 1.0,
              "identity abs_error at k=" + std::to_string(r.k));
  }
  c.finish();
}

std::vector<ConvergenceRow> criterion5_sufficiency(const SetupA& a,
                                                   const SweepConfig& cfg) {
  Criterion c(5, "Theorem 2 sufficiency: MSE decays at the analytic rate");
  auto rows = mse_sweep(a.mu, a.lambda, a.oracle, a.x, cfg);
  for (const auto& r : rows) {
    if (r.k > 13) continue;
    double bias_se = std::sqrt(r.variance / static_cast<double>(r.replications));
    c.require(std::abs(r.bias) <= 3.0 * bias_se,
              "bias at k=" + std::to_string(r.k) + " is " +
                  std::to_string(r.bias) + " (3SE=" +
                  std::to_string(3.0 * bias_se) + ")");
    c.require(std::abs(r.mse - r.predicted_variance) <= 4.0 * r.mse_se,
              "mse at k=" + std::to_string(r.k) + " is " +
                  std::to_string(r.mse) + ", predicted " +
                  std::to_string(r.predicted_variance));
  }
  int in_band = 0, pairs = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    double ratio = rows[i + 1].mse / rows[i].mse;
    ++pairs;
    if (ratio >= 0.55 && ratio <= 0.80) ++in_band;
  }
  c.require(pairs == 6 && in_band >= 5,
            "only " + std::to_string(in_band) + " of " + std::to_string(pairs) +
                " consecutive MSE ratios inside [0.55, 0.80]");
  c.finish(180.0);
  return rows;
}

std::vector<ConvergenceRow> criterion6_necessity(const SetupB& b,
                                                 const SweepConfig& cfg) {
  Criterion c(6, "Theorem 2 necessity: n_lambda stuck at 1, MSE stays large");
  auto rows = mse_sweep(b.mu, b.lambda, b.oracle, b.x, cfg);
  for (const auto& r : rows) {
    c.require(r.n_lambda == 1.0,
              "n_lambda at k=" + std::to_string(r.k) + " is " +
                  std::to_string(r.n_lambda));
    c.require(r.mse > 1.2, "mse at k=" + std::to_string(r.k) + " is " +
                               std::to_string(r.mse));
  }
  c.finish(180.0);
  return rows;
}

std::vector<MomentRow> criterion7_moments(const SetupA& a,
                                          const SweepConfig& cfg) {
  Criterion c(7, "Theorem 3: fourth central moment scales like (N lambda)^-2");
  auto m2 = moment_sweep(a.mu, a.lambda, a.oracle, a.x, cfg, 2);
  auto m1 = moment_sweep(a.mu, a.lambda, a.oracle, a.x, cfg, 1);
  double lo = m2.front().ratio, hi = lo;
  for (const auto& r : m2) {
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  c.require(hi / lo < 3.0, "ratio spread " + std::to_string(hi / lo) +
                               " across k (ratios in [" + std::to_string(lo) +
                               ", " + std::to_string(hi) + "])");
  for (const auto& r : m1) {
    c.require(std::abs(r.central_moment_2m - r.base.variance) <= 1e-9,
              "m=1 moment vs variance at k=" + std::to_string(r.base.k));
  }
  c.finish();
  return m2;
}

void criterion8_singularity_guard() {
  Criterion c(8, "singularity guard: differing tails rejected");
  bool threw = false;
  try {
    DensityOracle o(ParamSequence({}, 0.5), ParamSequence({}, 0.75));
    (void)o;
  } catch (const InadmissiblePairError&) {
    threw = true;
  }
  c.require(threw, "oracle construction with tails 0.5 vs 0.75 did not throw");
  c.finish();
}

void criterion9_determinism(const SetupA& a, const SetupB& b,
                            const std::vector<ConvergenceRow>& rows5,
                            const std::vector<ConvergenceRow>& rows6,
                            const std::vector<MomentRow>& rows7,
                            const SweepConfig& cfg5, const SweepConfig& cfg6,
                            const SweepConfig& cfg7) {
  Criterion c(9, "determinism: byte-identical CSVs across worker counts");
  auto csv_of = [](const std::vector<ConvergenceRow>& rows, std::uint64_t seed) {
    std::ostringstream os;
    write_convergence_csv(os, rows, seed);
    return os.str();
  };
  auto alt = [](SweepConfig cfg) {
    cfg.workers = (cfg.workers == 3) ? 5 : 3;
    return cfg;
  };
  c.require(csv_of(mse_sweep(a.mu, a.lambda, a.oracle, a.x, alt(cfg5)),
                   cfg5.master_seed) == csv_of(rows5, cfg5.master_seed),
            "criterion 5 CSV differs across worker counts");
  c.require(csv_of(mse_sweep(b.mu, b.lambda, b.oracle, b.x, alt(cfg6)),
                   cfg6.master_seed) == csv_of(rows6, cfg6.master_seed),
            "criterion 6 CSV differs across worker counts");
  auto moment_csv = [](const std::vector<MomentRow>& rows, std::uint64_t seed) {
    std::ostringstream os;
    write_moment_csv(os, rows, seed);
    return os.str();
  };
  c.require(moment_csv(moment_sweep(a.mu, a.lambda, a.oracle, a.x, alt(cfg7), 2),
                       cfg7.master_seed) == moment_csv(rows7, cfg7.master_seed),
            "criterion 7 CSV differs across worker counts");
  c.finish();
}

}  // namespace

int main() {
  criterion1_measure_laws();
  criterion2_sampler();
  criterion3_histogram_identities();
  criterion4_lemma2();

  SetupA a;
  SetupB b;
  int w = workers();

  // k up to 14 so the 8..13 starting points yield six consecutive MSE ratios.
  SweepConfig cfg5{8, 14, 1000, kSeed, w};
  auto rows5 = criterion5_sufficiency(a, cfg5);

  SweepConfig cfg6{8, 13, 1000, kSeed, w};
  auto rows6 = criterion6_necessity(b, cfg6);

  SweepConfig cfg7{8, 13, 2000, kSeed, w};
  auto rows7 = criterion7_moments(a, cfg7);

  criterion8_singularity_guard();
  criterion9_determinism(a, b, rows5, rows6, rows7, cfg5, cfg6, cfg7);

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
