#ifndef CANTOR_STATS_HPP
#define CANTOR_STATS_HPP

#include <cstdint>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

namespace cantor::stats {

// Upper tail of the chi-square distribution with df degrees of freedom.
inline double chi_square_pvalue(double statistic, double df) {
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(df / 2.0, statistic / 2.0);
}

// Pearson statistic for observed counts against expected counts.
inline double pearson_statistic(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& expected) {
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    double d = static_cast<double>(observed[i]) - expected[i];
    stat += d * d / expected[i];
  }
  return stat;
}

}  // namespace cantor::stats

#endif
