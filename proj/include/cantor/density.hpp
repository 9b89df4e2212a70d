#ifndef CANTOR_DENSITY_HPP
#define CANTOR_DENSITY_HPP

#include <cstddef>

#include "cantor/measures.hpp"
#include "cantor/words.hpp"

namespace cantor {

// Largest coordinate where the two parameter sequences differ (0 when
// identical). Throws InadmissiblePairError when the tails differ: the
// density ratio then diverges to 0 or infinity almost everywhere and no
// finite limit exists.
std::size_t constancy_depth(const ParamSequence& mu, const ParamSequence& lambda);

// Closed-form density f = dmu/dlambda for a generalized-Bernoulli pair
// whose parameters agree beyond a finite coordinate M. Beyond M every
// per-coordinate ratio is 1, so f is constant on each depth-M cylinder
// and the cylinder-ratio limit is reached exactly after M steps.
class DensityOracle {
 public:
  DensityOracle(ParamSequence mu, ParamSequence lambda);

  // Throws InadmissiblePairError unless both measures are product-form.
  static DensityOracle from_measures(const CylinderMeasure& mu,
                                     const CylinderMeasure& lambda);

  std::size_t constancy_depth() const { return constancy_depth_; }
  const ParamSequence& mu_params() const { return mu_; }
  const ParamSequence& lambda_params() const { return lambda_; }

  // f(x); requires x.horizon >= constancy_depth.
  double operator()(const SequencePrefix& x) const;

 private:
  ParamSequence mu_;
  ParamSequence lambda_;
  std::size_t constancy_depth_;
};

// mu([x|m]) / lambda([x|m]), the truncated cylinder ratio. Works for any
// measure pair; equals the oracle exactly once m >= constancy depth.
double truncated_density(const CylinderMeasure& mu, const CylinderMeasure& lambda,
                         const SequencePrefix& x, std::size_t m);

}  // namespace cantor

#endif
