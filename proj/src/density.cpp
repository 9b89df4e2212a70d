#include "cantor/density.hpp"

#include <algorithm>
#include <string>

namespace cantor {

std::size_t constancy_depth(const ParamSequence& mu, const ParamSequence& lambda) {
  if (mu.tail() != lambda.tail()) {
    throw InadmissiblePairError(
        "density limit does not stabilize; pair rejected for exact oracle "
        "(tails " + std::to_string(mu.tail()) + " and " +
        std::to_string(lambda.tail()) +
        " differ, so the measures are mutually singular)");
  }
  std::size_t depth = 0;
  std::size_t scan = std::max(mu.head().size(), lambda.head().size());
  for (std::size_t i = 1; i <= scan; ++i) {
    if (mu.at(i) != lambda.at(i)) depth = i;
  }
  return depth;
}

DensityOracle::DensityOracle(ParamSequence mu, ParamSequence lambda)
    : mu_(std::move(mu)),
      lambda_(std::move(lambda)),
      constancy_depth_(cantor::constancy_depth(mu_, lambda_)) {}

DensityOracle DensityOracle::from_measures(const CylinderMeasure& mu,
                                           const CylinderMeasure& lambda) {
  const ParamSequence* mp = mu.product_params();
  const ParamSequence* lp = lambda.product_params();
  if (!mp || !lp) {
    throw InadmissiblePairError(
        "exact density oracle requires generalized-Bernoulli (or Lebesgue) "
        "measures on both sides");
  }
  return DensityOracle(*mp, *lp);
}

double DensityOracle::operator()(const SequencePrefix& x) const {
  if (x.horizon() < constancy_depth_) {
    throw HorizonError("density evaluation needs the first " +
                       std::to_string(constancy_depth_) +
                       " bits, horizon is " + std::to_string(x.horizon()));
  }
  double f = 1.0;
  for (std::size_t i = 1; i <= constancy_depth_; ++i) {
    Bit b = x.at(i);
    double q = b ? mu_.at(i) : 1.0 - mu_.at(i);
    double p = b ? lambda_.at(i) : 1.0 - lambda_.at(i);
    f *= q / p;
  }
  return f;
}

double truncated_density(const CylinderMeasure& mu, const CylinderMeasure& lambda,
                         const SequencePrefix& x, std::size_t m) {
  FiniteWord w = x.prefix(m);  // throws HorizonError when horizon < m
  double denom = lambda(w);
  if (denom <= 0.0) {
    throw std::domain_error("dominating measure assigns zero mass to [" +
                            w.str() + "]");
  }
  return mu(w) / denom;
}

}  // namespace cantor
