#ifndef CANTOR_MEASURES_HPP
#define CANTOR_MEASURES_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cantor/errors.hpp"
#include "cantor/words.hpp"

namespace cantor {

// Per-coordinate success probabilities: explicit head p_1..p_M, then a
// constant tail for every later coordinate. All values strictly in (0,1)
// so the induced measure is continuous and positive on every cylinder.
class ParamSequence {
 public:
  ParamSequence(std::vector<double> head, double tail);

  // 1-based coordinate index.
  double at(std::size_t i) const {
    return i <= head_.size() ? head_[i - 1] : tail_;
  }
  const std::vector<double>& head() const { return head_; }
  double tail() const { return tail_; }

  bool operator==(const ParamSequence&) const = default;

 private:
  std::vector<double> head_;
  double tail_;
};

struct MarkovParams {
  std::array<double, 2> initial;                  // P(first bit = 0), P(= 1)
  std::array<std::array<double, 2>, 2> transition;  // row-stochastic

  bool operator==(const MarkovParams&) const = default;
};

// An additive set function rho on finite words, rho(tau) = rho(tau0) +
// rho(tau1), inducing a Borel probability measure on the sequence space.
class CylinderMeasure {
 public:
  struct LebesgueTag {
    bool operator==(const LebesgueTag&) const = default;
  };

  static CylinderMeasure lebesgue();
  static CylinderMeasure bernoulli(ParamSequence params);
  static CylinderMeasure markov(MarkovParams params);

  double operator()(const FiniteWord& w) const;  // measure of the cylinder [w]

  // All built-in variants are normalized; kept as the extension point for
  // rescaled dominating measures.
  double total_mass() const { return 1.0; }

  // P(next bit = 1 | prefix w); constant time per variant.
  double conditional_one(const FiniteWord& w) const;

  // Bernoulli parameters when the variant is product-form (Lebesgue is the
  // constant-1/2 case); nullptr for Markov.
  const ParamSequence* product_params() const;

  std::string describe() const;

  bool operator==(const CylinderMeasure&) const = default;

 private:
  explicit CylinderMeasure(std::variant<LebesgueTag, ParamSequence, MarkovParams> v);

  std::variant<LebesgueTag, ParamSequence, MarkovParams> variant_;
};

struct AdditivityReport {
  bool pass = true;
  double worst_violation = 0.0;
  std::string worst_word;
  std::uint64_t words_checked = 0;
};

// Checks |rho(tau) - rho(tau0) - rho(tau1)| <= tol exhaustively to depth
// min(max_depth, 12) and on random words at the deeper levels.
AdditivityReport verify_additivity(const CylinderMeasure& m, int max_depth,
                                   double tol, std::uint64_t seed = 0,
                                   std::uint64_t random_words = 10000);

// Draws bits sequentially, bit i+1 ~ Bernoulli(conditional_one(prefix));
// the resulting prefix of length L has exact law w -> rho(w).
SequencePrefix sample_prefix(const CylinderMeasure& m, std::size_t length,
                             std::mt19937_64& rng);

// Measure mini-grammar:
//   "lebesgue"
//   "bernoulli:tail=<p>[,head=<p1;p2;...>]"
//   "markov:pi=<a,b>,P=<p00,p01;p10,p11>"
CylinderMeasure parse_measure(std::string_view spec);

}  // namespace cantor

#endif
