#ifndef CANTOR_ERRORS_HPP
#define CANTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cantor {

// Malformed input: measure spec strings, bit strings, sample files.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Measure pair admits no exact density oracle (mutually singular tails,
// or a variant outside the generalized-Bernoulli family).
struct InadmissiblePairError : std::runtime_error {
  explicit InadmissiblePairError(const std::string& msg) : std::runtime_error(msg) {}
};

// A query reached past the known bits of a prefix, or a sample is too
// short for the requested partition depth.
struct HorizonError : std::runtime_error {
  explicit HorizonError(const std::string& msg) : std::runtime_error(msg) {}
};

// Sample size is not a power of two and no override was given.
struct SampleRateError : std::runtime_error {
  explicit SampleRateError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cantor

#endif
