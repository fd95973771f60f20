#ifndef QHT_DISCRIMINATION_HPP
#define QHT_DISCRIMINATION_HPP

#include "qht/states.hpp"

namespace qht {

// Operating point of a two-outcome test; the projector accepts the
// alternative hypothesis (sigma).
struct TestOutcome {
  Matrix projector;
  double alpha = 0.0;       // Tr[P rho]
  double beta = 0.0;        // Tr[(1-P) sigma]
  double bayes_error = 0.0; // pi0 alpha + pi1 beta
};

// Optimal Bayesian test: projector onto the range of (pi1 sigma - pi0 rho)_+,
// error (1 - ||pi1 sigma - pi0 rho||_1)/2.
TestOutcome helstrom(const DensityMatrix& rho, const DensityMatrix& sigma,
                     const Priors& priors);

struct NeymanPearsonOutcome {
  Matrix projector;
  double alpha = 0.0;
  double beta = 0.0;
  // T - Tr[(T sigma - rho)_+]; the optimal value of alpha + T beta.
  double threshold_value = 0.0;
};

NeymanPearsonOutcome neyman_pearson(const DensityMatrix& rho,
                                    const DensityMatrix& sigma, double threshold);

// sum_i min(eta0 p_i, eta1 q_i): error of the maximum-likelihood test with
// general positive weights. Throws NotNormalized.
double classical_ml_error(const RealVector& p, const RealVector& q, double eta0,
                          double eta1);

struct WeightedTestError {
  double alpha = 0.0;
  double beta = 0.0;
  double weighted_error = 0.0;
};

// Errors of an arbitrary test operator (0 <= op <= 1; projectors included).
WeightedTestError quantum_error_of_test(const Matrix& test_op,
                                        const DensityMatrix& rho,
                                        const DensityMatrix& sigma, double eta0,
                                        double eta1);

}  // namespace qht

#endif  // QHT_DISCRIMINATION_HPP
