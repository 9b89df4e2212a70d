#ifndef CANTOR_EXPERIMENTS_HPP
#define CANTOR_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cantor/density.hpp"
#include "cantor/estimator.hpp"
#include "cantor/measures.hpp"
#include "cantor/words.hpp"

namespace cantor {

struct SweepConfig {
  int k_min = 1;
  int k_max = 1;
  std::uint64_t replications = 1000;
  std::uint64_t master_seed = 0;
  int workers = 1;
};

struct ConvergenceRow {
  int k = 0;
  std::uint64_t n = 0;  // sample size 2^k
  double lambda_cell = 0.0;
  double n_lambda = 0.0;
  double mean_fN = 0.0;
  double bias = 0.0;
  double variance = 0.0;
  double mse = 0.0;
  double predicted_variance = 0.0;
  std::uint64_t replications = 0;
  std::uint64_t seed = 0;
  // Monte Carlo standard error of the mse estimate; kept for acceptance
  // bands, not written to CSV.
  double mse_se = 0.0;
};

struct MomentRow {
  ConvergenceRow base;
  int m = 1;
  double central_moment_2m = 0.0;
  double bound_scale = 0.0;  // (N * lambda_cell)^{-m}
  double ratio = 0.0;
};

struct LdtRow {
  int k = 0;
  double cell_average = 0.0;
  double f_x = 0.0;
  double abs_error = 0.0;
};

// f_N(x) across R replications of sampling N = 2^k prefixes from mu and
// histogramming against lambda. Replication r uses a stream seeded from
// (master_seed, k, r); results are identical for any worker count.
std::vector<double> replicate_estimates(const CylinderMeasure& mu,
                                        const CylinderMeasure& lambda,
                                        const SequencePrefix& x, int k,
                                        std::uint64_t replications,
                                        std::uint64_t master_seed, int workers);

// Per-k bias/variance/MSE of f_N(x) against the exact density.
std::vector<ConvergenceRow> mse_sweep(const CylinderMeasure& mu,
                                      const CylinderMeasure& lambda,
                                      const DensityOracle& oracle,
                                      const SequencePrefix& x,
                                      const SweepConfig& cfg);

// Empirical 2m-th central moment with the (N lambda_cell)^{-m} scale.
// m = 1 reduces to the variance column.
std::vector<MomentRow> moment_sweep(const CylinderMeasure& mu,
                                    const CylinderMeasure& lambda,
                                    const DensityOracle& oracle,
                                    const SequencePrefix& x,
                                    const SweepConfig& cfg, int m);

// Analytic cell averages (1/lambda(cell)) * integral of f over the cell,
// which equals mu(cell)/lambda(cell); no sampling.
std::vector<LdtRow> ldt_check(const DensityOracle& oracle,
                              const CylinderMeasure& lambda,
                              const SequencePrefix& x, int k_min, int k_max);

// Closed-form row: exact bias mu(cell)/lambda(cell) - f(x) and exact
// binomial variance p(1-p)/(N lambda_cell^2) with p = mu(cell).
ConvergenceRow predicted_row(const DensityOracle& oracle,
                             const CylinderMeasure& lambda,
                             const SequencePrefix& x, int k);

void write_convergence_csv(std::ostream& os,
                           const std::vector<ConvergenceRow>& rows,
                           std::uint64_t seed);
void write_moment_csv(std::ostream& os, const std::vector<MomentRow>& rows,
                      std::uint64_t seed);
void write_ldt_csv(std::ostream& os, const std::vector<LdtRow>& rows);

}  // namespace cantor

#endif
