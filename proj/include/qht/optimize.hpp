#ifndef QHT_OPTIMIZE_HPP
#define QHT_OPTIMIZE_HPP

#include <cmath>

namespace qht {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section search for the minimum of a unimodal (here: convex)
// function on [a, b], to absolute x-tolerance. Derivative-free, so
// rank-deficient spectra that make the objective non-smooth at the
// endpoints need no special casing.
template <typename Fn>
ScalarOptimum golden_section_minimize(Fn&& f, double a, double b, double xtol,
                                      int max_iter = 200) {
  constexpr double kInvPhi = 0.61803398874989484820;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; (b - a) > xtol && iter < max_iter; ++iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

template <typename Fn>
ScalarOptimum golden_section_maximize(Fn&& f, double a, double b, double xtol,
                                      int max_iter = 200) {
  auto neg = [&](double x) { return -f(x); };
  ScalarOptimum m = golden_section_minimize(neg, a, b, xtol, max_iter);
  return {m.x, -m.value};
}

}  // namespace qht

#endif  // QHT_OPTIMIZE_HPP
