#include "cantor/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cantor/rng.hpp"

namespace cantor {

namespace {

constexpr double kStochasticTol = 1e-12;

void check_probability(double p, const std::string& field) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ParseError(field + ": value " + std::to_string(p) +
                     " must lie strictly inside (0,1)");
  }
}

}  // namespace

ParamSequence::ParamSequence(std::vector<double> head, double tail)
    : head_(std::move(head)), tail_(tail) {
  for (std::size_t i = 0; i < head_.size(); ++i) {
    check_probability(head_[i], "head[" + std::to_string(i + 1) + "]");
  }
  check_probability(tail_, "tail");
}

CylinderMeasure::CylinderMeasure(
    std::variant<LebesgueTag, ParamSequence, MarkovParams> v)
    : variant_(std::move(v)) {}

CylinderMeasure CylinderMeasure::lebesgue() {
  return CylinderMeasure(LebesgueTag{});
}

CylinderMeasure CylinderMeasure::bernoulli(ParamSequence params) {
  return CylinderMeasure(std::move(params));
}

CylinderMeasure CylinderMeasure::markov(MarkovParams params) {
  auto check_row = [](const std::array<double, 2>& row, const std::string& field) {
    check_probability(row[0], field);
    check_probability(row[1], field);
    if (std::abs(row[0] + row[1] - 1.0) > kStochasticTol) {
      throw ParseError(field + ": entries must sum to 1");
    }
  };
  check_row(params.initial, "pi");
  check_row(params.transition[0], "P row 0");
  check_row(params.transition[1], "P row 1");
  return CylinderMeasure(params);
}

double CylinderMeasure::operator()(const FiniteWord& w) const {
  const auto& bits = w.bits();
  if (std::holds_alternative<LebesgueTag>(variant_)) {
    return std::ldexp(1.0, -static_cast<int>(bits.size()));
  }
  if (const auto* p = std::get_if<ParamSequence>(&variant_)) {
    double mass = 1.0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      double pi = p->at(i + 1);
      mass *= bits[i] ? pi : 1.0 - pi;
    }
    return mass;
  }
  const auto& mk = std::get<MarkovParams>(variant_);
  if (bits.empty()) return 1.0;
  double mass = mk.initial[bits[0]];
  for (std::size_t i = 1; i < bits.size(); ++i) {
    mass *= mk.transition[bits[i - 1]][bits[i]];
  }
  return mass;
}

double CylinderMeasure::conditional_one(const FiniteWord& w) const {
  if (std::holds_alternative<LebesgueTag>(variant_)) return 0.5;
  if (const auto* p = std::get_if<ParamSequence>(&variant_)) {
    return p->at(w.length() + 1);
  }
  const auto& mk = std::get<MarkovParams>(variant_);
  if (w.empty()) return mk.initial[1];
  return mk.transition[w.bits().back()][1];
}

const ParamSequence* CylinderMeasure::product_params() const {
  if (std::holds_alternative<LebesgueTag>(variant_)) {
    static const ParamSequence fair({}, 0.5);
    return &fair;
  }
  return std::get_if<ParamSequence>(&variant_);
}

std::string CylinderMeasure::describe() const {
  std::ostringstream os;
  if (std::holds_alternative<LebesgueTag>(variant_)) {
    os << "lebesgue";
  } else if (const auto* p = std::get_if<ParamSequence>(&variant_)) {
    os << "bernoulli:tail=" << p->tail();
    if (!p->head().empty()) {
      os << ",head=";
      for (std::size_t i = 0; i < p->head().size(); ++i) {
        if (i) os << ';';
        os << p->head()[i];
      }
    }
  } else {
    const auto& mk = std::get<MarkovParams>(variant_);
    os << "markov:pi=" << mk.initial[0] << ',' << mk.initial[1]
       << ",P=" << mk.transition[0][0] << ',' << mk.transition[0][1] << ';'
       << mk.transition[1][0] << ',' << mk.transition[1][1];
  }
  return os.str();
}

AdditivityReport verify_additivity(const CylinderMeasure& m, int max_depth,
                                   double tol, std::uint64_t seed,
                                   std::uint64_t random_words) {
  AdditivityReport rep;
  auto check = [&](const FiniteWord& w) {
    double r = std::abs(m(w) - m(w.child(0)) - m(w.child(1)));
    ++rep.words_checked;
    if (r > rep.worst_violation) {
      rep.worst_violation = r;
      rep.worst_word = w.str();
    }
  };

  int exhaustive = std::min(max_depth, 12);
  for (int k = 0; k <= exhaustive; ++k) {
    std::uint64_t n = std::uint64_t{1} << k;
    for (std::uint64_t j = 0; j < n; ++j) check(FiniteWord::from_index(j, k));
  }
  if (max_depth > exhaustive && random_words > 0) {
    std::mt19937_64 rng(derive_seed(seed, 0x616464ULL));
    for (std::uint64_t i = 0; i < random_words; ++i) {
      int depth = exhaustive + 1 +
                  static_cast<int>(rng() % static_cast<std::uint64_t>(
                                              max_depth - exhaustive));
      std::vector<Bit> bits(static_cast<std::size_t>(depth));
      for (auto& b : bits) b = static_cast<Bit>(rng() & 1u);
      check(FiniteWord(std::move(bits)));
    }
  }
  rep.pass = rep.worst_violation <= tol;
  return rep;
}

SequencePrefix sample_prefix(const CylinderMeasure& m, std::size_t length,
                             std::mt19937_64& rng) {
  if (length == 0) throw std::invalid_argument("prefix length must be positive");
  std::vector<Bit> bits;
  bits.reserve(length);
  if (const auto* p = m.product_params()) {
    for (std::size_t i = 1; i <= length; ++i) {
      bits.push_back(bernoulli(rng, p->at(i)) ? 1 : 0);
    }
  } else {
    // Markov chain: conditional_one depends only on the previous bit.
    FiniteWord prefix;
    for (std::size_t i = 0; i < length; ++i) {
      Bit b = bernoulli(rng, m.conditional_one(prefix)) ? 1 : 0;
      bits.push_back(b);
      prefix = prefix.child(b);
    }
  }
  return SequencePrefix(std::move(bits));
}

namespace {

double parse_double(std::string_view s, const std::string& field) {
  try {
    std::size_t pos = 0;
    double v = std::stod(std::string(s), &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError(field + ": cannot parse '" + std::string(s) +
                     "' as a number");
  }
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

CylinderMeasure parse_bernoulli(std::string_view body) {
  std::optional<double> tail;
  std::vector<double> head;
  for (auto field : split(body, ',')) {
    if (field.starts_with("tail=")) {
      tail = parse_double(field.substr(5), "tail");
    } else if (field.starts_with("head=")) {
      for (auto item : split(field.substr(5), ';')) {
        head.push_back(parse_double(item, "head"));
      }
    } else {
      throw ParseError("bernoulli: unknown field '" + std::string(field) +
                       "' (expected tail= or head=)");
    }
  }
  if (!tail) throw ParseError("bernoulli: missing required field tail=");
  return CylinderMeasure::bernoulli(ParamSequence(std::move(head), *tail));
}

CylinderMeasure parse_markov(std::string_view body) {
  // Field values contain commas, so locate the "P=" field explicitly.
  if (!body.starts_with("pi=")) {
    throw ParseError("markov: expected leading field pi=");
  }
  std::size_t psep = body.find(",P=");
  if (psep == std::string_view::npos) {
    throw ParseError("markov: missing required field P=");
  }
  auto pi_items = split(body.substr(3, psep - 3), ',');
  if (pi_items.size() != 2) {
    throw ParseError("pi: expected two comma-separated probabilities");
  }
  MarkovParams mk;
  mk.initial = {parse_double(pi_items[0], "pi"), parse_double(pi_items[1], "pi")};
  auto rows = split(body.substr(psep + 3), ';');
  if (rows.size() != 2) throw ParseError("P: expected two rows separated by ';'");
  for (int r = 0; r < 2; ++r) {
    auto entries = split(rows[static_cast<std::size_t>(r)], ',');
    if (entries.size() != 2) {
      throw ParseError("P row " + std::to_string(r) +
                       ": expected two comma-separated probabilities");
    }
    mk.transition[static_cast<std::size_t>(r)] = {
        parse_double(entries[0], "P row " + std::to_string(r)),
        parse_double(entries[1], "P row " + std::to_string(r))};
  }
  return CylinderMeasure::markov(mk);
}

}  // namespace

CylinderMeasure parse_measure(std::string_view spec) {
  if (spec == "lebesgue") return CylinderMeasure::lebesgue();
  if (spec.starts_with("bernoulli:")) return parse_bernoulli(spec.substr(10));
  if (spec.starts_with("markov:")) return parse_markov(spec.substr(7));
  throw ParseError("measure: unknown variant '" + std::string(spec) +
                   "' (expected lebesgue, bernoulli:..., or markov:...)");
}

}  // namespace cantor
