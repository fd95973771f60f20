#ifndef QHT_SPECTRAL_PAIR_HPP
#define QHT_SPECTRAL_PAIR_HPP

#include "qht/linalg.hpp"
#include "qht/states.hpp"

namespace qht {

// Cached spectral data for a state pair: eigenvalues of both states and the
// overlap matrix O_ij = |<x_i|y_j>|^2. Every Q_s-style quantity is a
// weighted sum over O, so callers decompose once and evaluate many s.
struct SpectralPair {
  SpectralDecomposition rho;
  SpectralDecomposition sigma;
  Eigen::MatrixXd overlap;
  double rho_tol = 0.0;
  double sigma_tol = 0.0;

  Index dim() const { return rho.dim(); }
};

SpectralPair make_spectral_pair(const DensityMatrix& rho, const DensityMatrix& sigma);
SpectralPair make_spectral_pair(const SpectralDecomposition& rho_sd,
                                const SpectralDecomposition& sigma_sd);

// sum_{i,j} f_i g_j O_ij, evaluated as row partials combined in row order so
// the result does not depend on the thread count.
double weighted_overlap_sum(const Eigen::MatrixXd& overlap, const RealVector& f,
                            const RealVector& g);

// Q_s = Tr[rho^{1-s} sigma^s] = sum_ij lambda_i^{1-s} mu_j^s O_ij with the
// support convention at the endpoints (Q_0 = psi0, Q_1 = psi1).
double qs_from_pair(const SpectralPair& pair, double s);

// Endpoint overlaps psi0 = Tr[rho supp sigma], psi1 = Tr[sigma supp rho].
double psi0_from_pair(const SpectralPair& pair);
double psi1_from_pair(const SpectralPair& pair);

}  // namespace qht

#endif  // QHT_SPECTRAL_PAIR_HPP
