#include "cantor/experiments.hpp"

#include <cmath>
#include <ostream>
#include <thread>

#include "cantor/csv.hpp"
#include "cantor/rng.hpp"

namespace cantor {

namespace {

void check_sweep_inputs(const SequencePrefix& x, int k_min, int k_max) {
  if (k_min < 1 || k_max < k_min) {
    throw std::invalid_argument("bad depth range [" + std::to_string(k_min) +
                                ", " + std::to_string(k_max) + "]");
  }
  if (x.horizon() < static_cast<std::size_t>(k_max)) {
    throw HorizonError("evaluation point horizon " +
                       std::to_string(x.horizon()) +
                       " shorter than max depth " + std::to_string(k_max));
  }
}

double single_estimate(const CylinderMeasure& mu, const CylinderMeasure& lambda,
                       const SequencePrefix& x, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t n = std::size_t{1} << k;
  Sample s;
  s.prefixes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.prefixes.push_back(sample_prefix(mu, static_cast<std::size_t>(k), rng));
  }
  return build_histogram(s, lambda, k).evaluate(x);
}

// Population moments (divisor R) so mse = bias^2 + variance holds exactly.
struct ReplicationStats {
  double mean = 0.0;
  double variance = 0.0;
  double central4 = 0.0;
  double mse = 0.0;
  double mse_se = 0.0;
};

ReplicationStats summarize(const std::vector<double>& values, double truth) {
  ReplicationStats st;
  double r = static_cast<double>(values.size());
  for (double v : values) st.mean += v;
  st.mean /= r;
  double sq_dev_mean = 0.0, sq_dev_sq = 0.0;
  for (double v : values) {
    double c = v - st.mean;
    st.variance += c * c;
    st.central4 += c * c * c * c;
    double d = (v - truth) * (v - truth);
    sq_dev_mean += d;
    sq_dev_sq += d * d;
  }
  st.variance /= r;
  st.central4 /= r;
  st.mse = sq_dev_mean / r;
  double var_sq_dev = sq_dev_sq / r - st.mse * st.mse;
  st.mse_se = std::sqrt(std::max(var_sq_dev, 0.0) / r);
  return st;
}

}  // namespace

std::vector<double> replicate_estimates(const CylinderMeasure& mu,
                                        const CylinderMeasure& lambda,
                                        const SequencePrefix& x, int k,
                                        std::uint64_t replications,
                                        std::uint64_t master_seed, int workers) {
  if (replications == 0) throw std::invalid_argument("replications must be >= 1");
  std::vector<double> values(replications);
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t r = lo; r < hi; ++r) {
      values[r] = single_estimate(
          mu, lambda, x, k,
          derive_seed(master_seed, static_cast<std::uint64_t>(k), r));
    }
  };
  if (workers <= 1) {
    run_range(0, replications);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t w = static_cast<std::uint64_t>(workers);
    std::uint64_t chunk = (replications + w - 1) / w;
    for (std::uint64_t i = 0; i < w; ++i) {
      std::uint64_t lo = i * chunk;
      std::uint64_t hi = std::min(replications, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  return values;
}

std::vector<ConvergenceRow> mse_sweep(const CylinderMeasure& mu,
                                      const CylinderMeasure& lambda,
                                      const DensityOracle& oracle,
                                      const SequencePrefix& x,
                                      const SweepConfig& cfg) {
  check_sweep_inputs(x, cfg.k_min, cfg.k_max);
  double truth = oracle(x);
  std::vector<ConvergenceRow> rows;
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    ConvergenceRow row = predicted_row(oracle, lambda, x, k);
    row.replications = cfg.replications;
    row.seed = cfg.master_seed;
    auto values = replicate_estimates(mu, lambda, x, k, cfg.replications,
                                      cfg.master_seed, cfg.workers);
    ReplicationStats st = summarize(values, truth);
    row.mean_fN = st.mean;
    row.bias = st.mean - truth;
    row.variance = st.variance;
    row.mse = st.mse;
    row.mse_se = st.mse_se;
    rows.push_back(row);
  }
  return rows;
}

std::vector<MomentRow> moment_sweep(const CylinderMeasure& mu,
                                    const CylinderMeasure& lambda,
                                    const DensityOracle& oracle,
                                    const SequencePrefix& x,
                                    const SweepConfig& cfg, int m) {
  if (m != 1 && m != 2) {
    throw std::invalid_argument("moment order m must be 1 or 2");
  }
  check_sweep_inputs(x, cfg.k_min, cfg.k_max);
  double truth = oracle(x);
  std::vector<MomentRow> rows;
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    MomentRow row;
    row.base = predicted_row(oracle, lambda, x, k);
    row.base.replications = cfg.replications;
    row.base.seed = cfg.master_seed;
    auto values = replicate_estimates(mu, lambda, x, k, cfg.replications,
                                      cfg.master_seed, cfg.workers);
    ReplicationStats st = summarize(values, truth);
    row.base.mean_fN = st.mean;
    row.base.bias = st.mean - truth;
    row.base.variance = st.variance;
    row.base.mse = st.mse;
    row.base.mse_se = st.mse_se;
    row.m = m;
    row.central_moment_2m = (m == 1) ? st.variance : st.central4;
    double n_lambda = row.base.n_lambda;
    row.bound_scale = std::pow(n_lambda, -m);
    row.ratio = row.central_moment_2m / row.bound_scale;
    rows.push_back(row);
  }
  return rows;
}

std::vector<LdtRow> ldt_check(const DensityOracle& oracle,
                              const CylinderMeasure& lambda,
                              const SequencePrefix& x, int k_min, int k_max) {
  check_sweep_inputs(x, k_min, k_max);
  CylinderMeasure mu = CylinderMeasure::bernoulli(oracle.mu_params());
  double truth = oracle(x);
  std::vector<LdtRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    FiniteWord cell = x.prefix(static_cast<std::size_t>(k));
    // (1/lambda(cell)) * integral of f over the cell = mu(cell)/lambda(cell).
    double avg = mu(cell) / lambda(cell);
    rows.push_back({k, avg, truth, std::abs(avg - truth)});
  }
  return rows;
}

ConvergenceRow predicted_row(const DensityOracle& oracle,
                             const CylinderMeasure& lambda,
                             const SequencePrefix& x, int k) {
  check_sweep_inputs(x, k, k);
  CylinderMeasure mu = CylinderMeasure::bernoulli(oracle.mu_params());
  FiniteWord cell = x.prefix(static_cast<std::size_t>(k));
  double lam = lambda(cell);
  double p = mu(cell);
  ConvergenceRow row;
  row.k = k;
  row.n = std::uint64_t{1} << k;
  row.lambda_cell = lam;
  row.n_lambda = static_cast<double>(row.n) * lam;
  row.mean_fN = p / lam;
  row.bias = p / lam - oracle(x);
  row.predicted_variance =
      p * (1.0 - p) / (static_cast<double>(row.n) * lam * lam);
  row.variance = row.predicted_variance;
  row.mse = row.bias * row.bias + row.variance;
  return row;
}

namespace {

void write_convergence_fields(std::ostream& os, const ConvergenceRow& r) {
  os << r.k << ',' << r.n << ',' << csv::num(r.lambda_cell) << ','
     << csv::num(r.n_lambda) << ',' << csv::num(r.mean_fN) << ','
     << csv::num(r.bias) << ',' << csv::num(r.variance) << ','
     << csv::num(r.mse) << ',' << csv::num(r.predicted_variance) << ','
     << r.replications << ',' << r.seed;
}

}  // namespace

void write_convergence_csv(std::ostream& os,
                           const std::vector<ConvergenceRow>& rows,
                           std::uint64_t seed) {
  os << "# seed=" << seed << '\n';
  os << "k,N,lambda_cell,n_lambda,mean_fN,bias,variance,mse,"
        "predicted_variance,replications,seed\n";
  for (const auto& r : rows) {
    write_convergence_fields(os, r);
    os << '\n';
  }
}

void write_moment_csv(std::ostream& os, const std::vector<MomentRow>& rows,
                      std::uint64_t seed) {
  os << "# seed=" << seed << '\n';
  os << "k,N,lambda_cell,n_lambda,mean_fN,bias,variance,mse,"
        "predicted_variance,replications,seed,m,central_moment_2m,"
        "bound_scale,ratio\n";
  for (const auto& r : rows) {
    write_convergence_fields(os, r.base);
    os << ',' << r.m << ',' << csv::num(r.central_moment_2m) << ','
       << csv::num(r.bound_scale) << ',' << csv::num(r.ratio) << '\n';
  }
}

void write_ldt_csv(std::ostream& os, const std::vector<LdtRow>& rows) {
  os << "k,cell_average,f,abs_error\n";
  for (const auto& r : rows) {
    os << r.k << ',' << csv::num(r.cell_average) << ',' << csv::num(r.f_x)
       << ',' << csv::num(r.abs_error) << '\n';
  }
}

}  // namespace cantor
