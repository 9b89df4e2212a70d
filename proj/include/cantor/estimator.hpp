#ifndef CANTOR_ESTIMATOR_HPP
#define CANTOR_ESTIMATOR_HPP

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "cantor/measures.hpp"
#include "cantor/words.hpp"

namespace cantor {

// An i.i.d. sample of observed prefixes x_1..x_N.
struct Sample {
  std::vector<SequencePrefix> prefixes;

  std::size_t size() const { return prefixes.size(); }
  // Minimum horizon across the sample; 0 for an empty sample.
  std::size_t depth_budget() const;
};

// k with N = 2^k exactly, k >= 1. Throws SampleRateError otherwise; the
// caller may override with an explicit k, and overrides are flagged.
int required_depth(std::uint64_t n);

// Fraction of sample prefixes extending w.
double empirical_measure(const Sample& s, const FiniteWord& w);

// Per-cell counts over Pi_k with the dominating measure, evaluable as
// f_N(x) = (count/N) / lambda(cell). Zero-count cells are not stored.
class HistogramEstimate {
 public:
  HistogramEstimate(int depth, std::uint64_t sample_size,
                    std::unordered_map<std::uint64_t, std::uint64_t> counts,
                    CylinderMeasure lambda, bool rate_overridden);

  int depth() const { return depth_; }
  std::uint64_t sample_size() const { return sample_size_; }
  const CylinderMeasure& lambda() const { return lambda_; }
  bool rate_overridden() const { return rate_overridden_; }

  std::uint64_t count(std::uint64_t cell_index) const;
  double evaluate(const SequencePrefix& x) const;
  double evaluate_cell(std::uint64_t cell_index) const;

  // Sum over cells of f_N * lambda(cell) = sum counts / N; 1 exactly for
  // a well-formed histogram.
  double integral_check() const;

  // CSV: cell_index,cell_word,count,lambda_cell,f_N. All 2^k cells when
  // the depth is enumerable, otherwise only the nonempty ones.
  void write_csv(std::ostream& os) const;

 private:
  int depth_;
  std::uint64_t sample_size_;
  std::unordered_map<std::uint64_t, std::uint64_t> counts_;
  CylinderMeasure lambda_;
  bool rate_overridden_;
};

// Counts the sample into Pi_k. Enforces N = 2^k unless force_k is set.
HistogramEstimate build_histogram(const Sample& s, CylinderMeasure lambda,
                                  int k, bool force_k = false);

// Sample file: one observation per line, a string over {0,1}; blank lines
// and lines starting with '#' are ignored.
Sample read_sample(std::istream& is);
void write_sample(std::ostream& os, const Sample& s);

}  // namespace cantor

#endif
