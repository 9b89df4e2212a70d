#ifndef CANTOR_CSV_HPP
#define CANTOR_CSV_HPP

#include <cstdio>
#include <string>

namespace cantor::csv {

// Shortest round-trippable decimal form; locale-independent, so report
// files are byte-identical across runs and worker counts.
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back == v) {
    for (int prec = 1; prec < 17; ++prec) {
      char shorter[40];
      std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
      std::sscanf(shorter, "%lf", &back);
      if (back == v) return shorter;
    }
  }
  return buf;
}

}  // namespace cantor::csv

#endif
