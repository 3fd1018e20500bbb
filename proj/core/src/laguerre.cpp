#include "dicke3/laguerre.hpp"

#include <cmath>

#include "dicke3/errors.hpp"

namespace dicke3 {

double laguerre_assoc(int n, int k, double x) {
  if (n < 0) throw ParameterError("laguerre_assoc: n must be >= 0");
  if (k < 0) throw ParameterError("laguerre_assoc: k must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double displaced_overlap(int m, int n, double d) {
  if (m < 0 || n < 0) throw ParameterError("displaced_overlap: Fock labels must be >= 0");
  const int lo = std::min(m, n);
  const int gap = std::abs(n - m);
  const double lag = laguerre_assoc(lo, gap, d * d);
  if (gap == 0) return std::exp(-0.5 * d * d) * lag;
  if (d == 0.0) return 0.0;
  // (-d)^{n-m} for n > m, d^{m-n} for m > n
  const double base = (n > m) ? -d : d;
  const double sign = (base < 0.0 && gap % 2 == 1) ? -1.0 : 1.0;
  const double log_mag = 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + gap + 1.0)) +
                         gap * std::log(std::abs(d)) - 0.5 * d * d;
  return sign * std::exp(log_mag) * lag;
}

}  // namespace dicke3
