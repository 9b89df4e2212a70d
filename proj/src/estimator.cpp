#include "cantor/estimator.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <string>

#include "cantor/csv.hpp"

namespace cantor {

std::size_t Sample::depth_budget() const {
  std::size_t budget = 0;
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    std::size_t h = prefixes[i].horizon();
    budget = (i == 0) ? h : std::min(budget, h);
  }
  return budget;
}

int required_depth(std::uint64_t n) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw SampleRateError(
        "sampling-rate rule violated: sample size " + std::to_string(n) +
        " is not 2^k for a positive integer k (pass an explicit depth to "
        "override)");
  }
  return std::countr_zero(n);
}

double empirical_measure(const Sample& s, const FiniteWord& w) {
  if (s.size() == 0) throw std::invalid_argument("empty sample");
  if (s.depth_budget() < w.length()) {
    throw HorizonError("sample horizon " + std::to_string(s.depth_budget()) +
                       " shorter than word length " + std::to_string(w.length()));
  }
  std::uint64_t hits = 0;
  for (const auto& x : s.prefixes) {
    if (prefix_of(w, x)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(s.size());
}

HistogramEstimate::HistogramEstimate(
    int depth, std::uint64_t sample_size,
    std::unordered_map<std::uint64_t, std::uint64_t> counts,
    CylinderMeasure lambda, bool rate_overridden)
    : depth_(depth),
      sample_size_(sample_size),
      counts_(std::move(counts)),
      lambda_(std::move(lambda)),
      rate_overridden_(rate_overridden) {}

std::uint64_t HistogramEstimate::count(std::uint64_t cell_index) const {
  auto it = counts_.find(cell_index);
  return it == counts_.end() ? 0 : it->second;
}

double HistogramEstimate::evaluate_cell(std::uint64_t cell_index) const {
  double freq = static_cast<double>(count(cell_index)) /
                static_cast<double>(sample_size_);
  double mass = lambda_(FiniteWord::from_index(cell_index, depth_));
  return freq / mass;
}

double HistogramEstimate::evaluate(const SequencePrefix& x) const {
  return evaluate_cell(cell_of(x, depth_).index);
}

double HistogramEstimate::integral_check() const {
  std::uint64_t total = 0;
  for (const auto& [j, c] : counts_) total += c;
  return static_cast<double>(total) / static_cast<double>(sample_size_);
}

void HistogramEstimate::write_csv(std::ostream& os) const {
  os << "cell_index,cell_word,count,lambda_cell,f_N\n";
  auto row = [&](std::uint64_t j) {
    FiniteWord w = FiniteWord::from_index(j, depth_);
    double mass = lambda_(w);
    double f = static_cast<double>(count(j)) /
               static_cast<double>(sample_size_) / mass;
    os << j << ',' << w.str() << ',' << count(j) << ',' << csv::num(mass)
       << ',' << csv::num(f) << '\n';
  };
  if (depth_ <= 20) {
    std::uint64_t n = std::uint64_t{1} << depth_;
    for (std::uint64_t j = 0; j < n; ++j) row(j);
  } else {
    std::vector<std::uint64_t> nonempty;
    nonempty.reserve(counts_.size());
    for (const auto& [j, c] : counts_) nonempty.push_back(j);
    std::sort(nonempty.begin(), nonempty.end());
    for (std::uint64_t j : nonempty) row(j);
  }
}

HistogramEstimate build_histogram(const Sample& s, CylinderMeasure lambda,
                                  int k, bool force_k) {
  if (k < 1) throw std::invalid_argument("partition depth must be >= 1");
  if (s.size() == 0) throw std::invalid_argument("empty sample");
  if (s.depth_budget() < static_cast<std::size_t>(k)) {
    throw HorizonError("sample horizon " + std::to_string(s.depth_budget()) +
                       " shorter than partition depth " + std::to_string(k));
  }
  bool matches_rate = s.size() >= 2 && std::has_single_bit(s.size()) &&
                      std::countr_zero(s.size()) == k;
  if (!matches_rate && !force_k) {
    throw SampleRateError(
        "sampling-rate rule violated: sample size " + std::to_string(s.size()) +
        " does not equal 2^" + std::to_string(k) +
        " (use the override to proceed anyway)");
  }
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  counts.reserve(std::min<std::size_t>(s.size(), std::size_t{1} << std::min(k, 20)));
  for (const auto& x : s.prefixes) {
    ++counts[cell_of(x, k).index];
  }
  return HistogramEstimate(k, s.size(), std::move(counts), std::move(lambda),
                           !matches_rate);
}

Sample read_sample(std::istream& is) {
  Sample s;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      s.prefixes.push_back(SequencePrefix::parse(line));
    } catch (const ParseError& e) {
      throw ParseError("sample line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return s;
}

void write_sample(std::ostream& os, const Sample& s) {
  for (const auto& x : s.prefixes) os << x.str() << '\n';
}

}  // namespace cantor
