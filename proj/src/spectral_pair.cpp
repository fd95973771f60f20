#include "qht/spectral_pair.hpp"

#include <vector>

#include "qht/parallel.hpp"

namespace qht {

SpectralPair make_spectral_pair(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("state pair: dimensions differ");
  }
  return make_spectral_pair(eigh(rho.mat), eigh(sigma.mat));
}

SpectralPair make_spectral_pair(const SpectralDecomposition& rho_sd,
                                const SpectralDecomposition& sigma_sd) {
  if (rho_sd.dim() != sigma_sd.dim()) {
    throw DimensionMismatch("state pair: dimensions differ");
  }
  SpectralPair pair;
  pair.rho = rho_sd;
  pair.sigma = sigma_sd;
  pair.overlap = (rho_sd.eigenvectors.adjoint() * sigma_sd.eigenvectors).cwiseAbs2();
  pair.rho_tol = pair.rho.support_tol();
  pair.sigma_tol = pair.sigma.support_tol();
  return pair;
}

double weighted_overlap_sum(const Eigen::MatrixXd& overlap, const RealVector& f,
                            const RealVector& g) {
  // Column partials: each column of the (column-major) overlap matrix is
  // contiguous, and the final fold runs serially in column order, so the
  // value is independent of the thread count.
  const Index cols = overlap.cols();
  std::vector<double> col_partials(static_cast<std::size_t>(cols), 0.0);
  parallel_for(cols, [&](std::size_t j) {
    const Index col = static_cast<Index>(j);
    if (g[col] == 0.0) return;
    col_partials[j] = g[col] * f.dot(overlap.col(col));
  });
  double total = 0.0;
  for (double part : col_partials) total += part;
  return total;
}

namespace {

RealVector powered(const RealVector& eigs, double exponent, double tol) {
  RealVector out(eigs.size());
  for (Index i = 0; i < eigs.size(); ++i) {
    out[i] = scalar_power(eigs[i], exponent, tol);
  }
  return out;
}

}  // namespace

double qs_from_pair(const SpectralPair& pair, double s) {
  const RealVector f = powered(pair.rho.eigenvalues, 1.0 - s, pair.rho_tol);
  const RealVector g = powered(pair.sigma.eigenvalues, s, pair.sigma_tol);
  return weighted_overlap_sum(pair.overlap, f, g);
}

double psi0_from_pair(const SpectralPair& pair) { return qs_from_pair(pair, 0.0); }

double psi1_from_pair(const SpectralPair& pair) { return qs_from_pair(pair, 1.0); }

}  // namespace qht
