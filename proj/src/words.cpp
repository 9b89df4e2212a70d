#include "cantor/words.hpp"

#include <algorithm>
#include <cmath>

namespace cantor {

namespace {

std::vector<Bit> parse_bits(std::string_view s, const char* what) {
  std::vector<Bit> bits;
  bits.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c != '0' && c != '1') {
      throw ParseError(std::string(what) + ": invalid character '" + c +
                       "' at position " + std::to_string(i + 1) +
                       " (expected '0' or '1')");
    }
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return bits;
}

void check_bits(const std::vector<Bit>& bits, const char* what) {
  for (Bit b : bits) {
    if (b > 1) throw ParseError(std::string(what) + ": bit value out of {0,1}");
  }
}

constexpr int kMaxEnumerableDepth = 26;

}  // namespace

FiniteWord::FiniteWord(std::vector<Bit> bits) : bits_(std::move(bits)) {
  check_bits(bits_, "word");
}

FiniteWord FiniteWord::parse(std::string_view s) {
  return FiniteWord(parse_bits(s, "word"));
}

FiniteWord FiniteWord::from_index(std::uint64_t j, int k) {
  if (k < 0 || k > 63) throw std::invalid_argument("word length out of range");
  if (k < 64 && j >> k) throw std::invalid_argument("index exceeds 2^k");
  std::vector<Bit> bits(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    bits[static_cast<std::size_t>(i)] =
        static_cast<Bit>((j >> (k - 1 - i)) & 1u);
  }
  return FiniteWord(std::move(bits));
}

Bit FiniteWord::at(std::size_t pos) const {
  if (pos == 0 || pos > bits_.size()) {
    throw std::out_of_range("word position out of range");
  }
  return bits_[pos - 1];
}

FiniteWord FiniteWord::child(Bit b) const {
  std::vector<Bit> bits = bits_;
  bits.push_back(b & 1u);
  return FiniteWord(std::move(bits));
}

std::uint64_t FiniteWord::index() const {
  if (bits_.size() > 63) throw std::length_error("word too long for indexing");
  std::uint64_t j = 0;
  for (Bit b : bits_) j = (j << 1) | b;
  return j;
}

std::string FiniteWord::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

SequencePrefix::SequencePrefix(std::vector<Bit> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw ParseError("prefix: horizon must be positive");
  check_bits(bits_, "prefix");
}

SequencePrefix SequencePrefix::parse(std::string_view s) {
  return SequencePrefix(parse_bits(s, "prefix"));
}

Bit SequencePrefix::at(std::size_t pos) const {
  if (pos == 0) throw std::out_of_range("positions are 1-based");
  if (pos > bits_.size()) {
    throw HorizonError("bit position " + std::to_string(pos) +
                       " beyond horizon " + std::to_string(bits_.size()));
  }
  return bits_[pos - 1];
}

FiniteWord SequencePrefix::prefix(std::size_t k) const {
  if (k > bits_.size()) {
    throw HorizonError("prefix of length " + std::to_string(k) +
                       " requested, horizon is " + std::to_string(bits_.size()));
  }
  return FiniteWord(std::vector<Bit>(bits_.begin(),
                                     bits_.begin() + static_cast<std::ptrdiff_t>(k)));
}

std::string SequencePrefix::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

Metric parse_metric(std::string_view s) {
  if (s == "d1") return Metric::d1;
  if (s == "d2") return Metric::d2;
  throw ParseError("metric: expected 'd1' or 'd2'");
}

bool prefix_of(const FiniteWord& a, const FiniteWord& b) {
  return a.length() <= b.length() &&
         std::equal(a.bits().begin(), a.bits().end(), b.bits().begin());
}

bool prefix_of(const FiniteWord& a, const SequencePrefix& b) {
  return a.length() <= b.horizon() &&
         std::equal(a.bits().begin(), a.bits().end(), b.bits().begin());
}

std::optional<std::size_t> first_difference(const SequencePrefix& a,
                                            const SequencePrefix& b) {
  std::size_t shared = std::min(a.horizon(), b.horizon());
  for (std::size_t i = 0; i < shared; ++i) {
    if (a.bits()[i] != b.bits()[i]) return i + 1;
  }
  return std::nullopt;
}

Distance distance(const SequencePrefix& a, const SequencePrefix& b, Metric m) {
  auto n = first_difference(a, b);
  if (!n) return {0.0, true};
  double v = (m == Metric::d1)
                 ? 1.0 / static_cast<double>(*n)
                 : std::ldexp(1.0, -static_cast<int>(*n));
  return {v, false};
}

double cylinder_diameter(const FiniteWord& w, Metric m) {
  auto n = static_cast<int>(w.length()) + 1;  // first free position
  return (m == Metric::d1) ? 1.0 / n : std::ldexp(1.0, -n);
}

Partition partition(int k) {
  if (k < 1) throw std::invalid_argument("partition depth must be >= 1");
  if (k > kMaxEnumerableDepth) {
    throw std::length_error("partition depth " + std::to_string(k) +
                            " too large to enumerate cells");
  }
  Partition p;
  p.depth = k;
  std::uint64_t n = std::uint64_t{1} << k;
  p.cells.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    p.cells.push_back(FiniteWord::from_index(j, k));
  }
  return p;
}

double mesh(const Partition& p, Metric m) {
  double worst = 0.0;
  for (const auto& c : p.cells) worst = std::max(worst, cylinder_diameter(c, m));
  return worst;
}

double mesh_at_depth(int k, Metric m) {
  if (k < 1) throw std::invalid_argument("partition depth must be >= 1");
  return (m == Metric::d1) ? 1.0 / (k + 1) : std::ldexp(1.0, -(k + 1));
}

CellRef cell_of(const SequencePrefix& x, int k) {
  if (k < 1) throw std::invalid_argument("partition depth must be >= 1");
  FiniteWord w = x.prefix(static_cast<std::size_t>(k));
  return {w, w.index()};
}

}  // namespace cantor
