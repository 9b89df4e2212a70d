#ifndef CANTOR_WORDS_HPP
#define CANTOR_WORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/errors.hpp"

namespace cantor {

using Bit = std::uint8_t;

// A finite binary word tau. The cylinder [tau] is the set of infinite
// sequences extending tau; the empty word denotes the whole space.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(std::vector<Bit> bits);
  // Parses a string of '0'/'1' characters, first bit leftmost.
  static FiniteWord parse(std::string_view s);
  // The length-k word whose big-endian value is j, j in [0, 2^k).
  static FiniteWord from_index(std::uint64_t j, int k);

  std::size_t length() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  // 1-based position, matching the paper-style indexing tau(i).
  Bit at(std::size_t pos) const;
  const std::vector<Bit>& bits() const { return bits_; }

  FiniteWord child(Bit b) const;
  // Big-endian integer value of the word; requires length <= 63.
  std::uint64_t index() const;
  std::string str() const;

  bool operator==(const FiniteWord&) const = default;

 private:
  std::vector<Bit> bits_;
};

// The observed first L bits of an infinite binary sequence. Queries past
// the horizon are errors, never silent defaults.
class SequencePrefix {
 public:
  explicit SequencePrefix(std::vector<Bit> bits);
  static SequencePrefix parse(std::string_view s);

  std::size_t horizon() const { return bits_.size(); }
  Bit at(std::size_t pos) const;  // 1-based; throws HorizonError past horizon
  const std::vector<Bit>& bits() const { return bits_; }
  // First k bits as a word; throws HorizonError if horizon < k.
  FiniteWord prefix(std::size_t k) const;
  std::string str() const;

  bool operator==(const SequencePrefix&) const = default;

 private:
  std::vector<Bit> bits_;
};

enum class Metric { d1, d2 };

Metric parse_metric(std::string_view s);

// a is an initial segment of b, equivalently [b] is contained in [a].
bool prefix_of(const FiniteWord& a, const FiniteWord& b);
bool prefix_of(const FiniteWord& a, const SequencePrefix& b);

// Smallest 1-based position where a and b disagree, scanning only the
// shared range min(horizons). nullopt means identical-within-horizon.
std::optional<std::size_t> first_difference(const SequencePrefix& a,
                                            const SequencePrefix& b);

struct Distance {
  double value;
  bool identical_within_horizon;
};

// d1 = 1/N(a,b), d2 = 2^{-N(a,b)}; identical-within-horizon returns 0
// with the flag set (the infimum-consistent convention).
Distance distance(const SequencePrefix& a, const SequencePrefix& b, Metric m);

// Exact supremum of pairwise distances over [w]: extensions of w share
// the first |w| symbols, so the first possible disagreement is |w|+1.
// Hence 1/(|w|+1) under d1 and 2^{-(|w|+1)} under d2.
double cylinder_diameter(const FiniteWord& w, Metric m);

// The dyadic partition Pi_k: all 2^k words of length k, lexicographic.
struct Partition {
  int depth = 0;
  std::vector<FiniteWord> cells;
};

Partition partition(int k);

double mesh(const Partition& p, Metric m);
double mesh_at_depth(int k, Metric m);

struct CellRef {
  FiniteWord word;
  std::uint64_t index;
};

// The cell of Pi_k containing every extension of x.
CellRef cell_of(const SequencePrefix& x, int k);

}  // namespace cantor

#endif
