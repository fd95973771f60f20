#include "qht/discrimination.hpp"

#include <algorithm>
#include <cmath>

namespace qht {

TestOutcome helstrom(const DensityMatrix& rho, const DensityMatrix& sigma,
                     const Priors& priors) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("helstrom: dimensions differ");
  }
  const Matrix diff = priors.pi1 * sigma.mat - priors.pi0 * rho.mat;
  SpectralDecomposition sd = eigh(diff);
  TestOutcome out;
  out.projector = range_projector(sd);
  out.alpha = (out.projector * rho.mat).trace().real();
  out.beta = 1.0 - (out.projector * sigma.mat).trace().real();
  out.bayes_error = (1.0 - sd.eigenvalues.cwiseAbs().sum()) / 2.0;
  return out;
}

NeymanPearsonOutcome neyman_pearson(const DensityMatrix& rho,
                                    const DensityMatrix& sigma, double threshold) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("neyman_pearson: dimensions differ");
  }
  if (!(threshold > 0.0)) {
    throw Error("neyman_pearson: threshold must be positive");
  }
  const Matrix diff = threshold * sigma.mat - rho.mat;
  SpectralDecomposition sd = eigh(diff);
  NeymanPearsonOutcome out;
  out.projector = range_projector(sd);
  out.alpha = (out.projector * rho.mat).trace().real();
  out.beta = 1.0 - (out.projector * sigma.mat).trace().real();
  out.threshold_value = threshold - sd.eigenvalues.cwiseMax(0.0).sum();
  return out;
}

double classical_ml_error(const RealVector& p, const RealVector& q, double eta0,
                          double eta1) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("classical_ml_error: length mismatch");
  }
  if (std::abs(p.sum() - 1.0) > 1e-10 || std::abs(q.sum() - 1.0) > 1e-10) {
    throw NotNormalized("classical_ml_error: inputs must be probability vectors");
  }
  double sum = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    sum += std::min(eta0 * p[i], eta1 * q[i]);
  }
  return sum;
}

WeightedTestError quantum_error_of_test(const Matrix& test_op,
                                        const DensityMatrix& rho,
                                        const DensityMatrix& sigma, double eta0,
                                        double eta1) {
  if (test_op.rows() != rho.dim() || rho.dim() != sigma.dim()) {
    throw DimensionMismatch("quantum_error_of_test: dimensions differ");
  }
  WeightedTestError out;
  out.alpha = (test_op * rho.mat).trace().real();
  out.beta = 1.0 - (test_op * sigma.mat).trace().real();
  out.weighted_error = eta0 * out.alpha + eta1 * out.beta;
  return out;
}

}  // namespace qht
