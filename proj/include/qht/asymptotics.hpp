#ifndef QHT_ASYMPTOTICS_HPP
#define QHT_ASYMPTOTICS_HPP

#include <vector>

#include "qht/chernoff.hpp"
#include "qht/discrimination.hpp"

namespace qht {

// One row of an n-copy rate experiment. rate = -(1/n) log value; flagged
// undefined once value drops below the underflow floor 1e-300.
struct RateEntry {
  int n = 0;
  double value = 0.0;  // exact optimal error P*_{e,n}
  double rate = 0.0;
  bool rate_defined = false;
  double lower_bound = 0.0;  // (1/2) classical ML error of the mapped pair
  double upper_bound = 0.0;  // min_s pi0^{1-s} pi1^s Q_s^n
  bool sandwich_ok = false;
};

struct RateExperiment {
  std::vector<RateEntry> entries;
  ChernoffResult chernoff;
};

// Exact optimal Bayesian error for n copies:
// (1 - ||pi1 sigma^(x)n - pi0 rho^(x)n||_1) / 2, by spectral decomposition
// of the d^n-dimensional difference. Throws DimensionCapExceeded.
double n_copy_error(const DensityMatrix& rho, const DensityMatrix& sigma,
                    const Priors& priors, int n,
                    std::size_t cap = default_dim_cap());

// For every n <= n_max, the exact error together with the two-sided
// finite-n bounds; sandwich_ok records that
// (1/2) ML <= P*_{e,n} <= min_s pi0^{1-s} pi1^s Q_s^n held to 1e-10.
RateExperiment chernoff_rate_experiment(const DensityMatrix& rho,
                                        const DensityMatrix& sigma,
                                        const Priors& priors, int n_max,
                                        std::size_t cap = default_dim_cap());

// Exponent-achieving projector test: with a = e^{-nx} sigma^(x)n and
// b = rho^(x)n, the test projects onto the range of (a-b)_+, where the
// tilt x is fixed by x(1-s) + log Q_s = -r at the s achieving e_Q(r).
struct HoeffdingTestResult {
  double alpha_n = 0.0;
  double beta_n = 0.0;
  double s = 0.0;
  double tilt_x = 0.0;
  double alpha_bound = 0.0;  // exp[n(-xs + log Q_s)]
  double beta_bound = 0.0;   // exp[n(x(1-s) + log Q_s)] = e^{-nr}
};

// Throws InfiniteExponentRegion when r lies in the infinite-value region,
// DimensionCapExceeded when dim^n exceeds the cap.
HoeffdingTestResult hoeffding_test(const DensityMatrix& rho,
                                   const DensityMatrix& sigma, double r, int n,
                                   std::size_t cap = default_dim_cap());

// sum_x min(eta0 p^(x)n(x), eta1 q^(x)n(x)) grouped by type classes with
// multinomial weights, so the cost is polynomial in n instead of |supp|^n.
// Throws SupportTooLarge when the joint support exceeds 16 outcomes.
double type_class_ml_error(const RealVector& p, const RealVector& q, double eta0,
                           double eta1, int n);

}  // namespace qht

#endif  // QHT_ASYMPTOTICS_HPP
