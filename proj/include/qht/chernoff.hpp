#ifndef QHT_CHERNOFF_HPP
#define QHT_CHERNOFF_HPP

#include <vector>

#include "qht/spectral_pair.hpp"

namespace qht {

struct CurvePoint {
  double s = 0.0;
  double value = 0.0;
};

struct ChernoffResult {
  double q_star = 0.0;   // inf_s Q_s
  double xi_qcb = 0.0;   // -log q_star; +infinity for orthogonal states
  double s_star = 0.0;
  std::vector<CurvePoint> curve;  // Q_s on a uniform 101-point grid
};

// Q_s = Tr[rho^{1-s} sigma^s], s in [0,1], with A^0 = supp A at the
// endpoints so that Q_0 = psi0 and Q_1 = psi1.
double q_s(const DensityMatrix& rho, const DensityMatrix& sigma, double s);

// Q_s on a uniform grid over [0,1]; grid points evaluate concurrently.
std::vector<CurvePoint> sample_qs_curve(const SpectralPair& pair, int points);

// d/ds Q_s = Tr[rho^{1-s} sigma^s (log sigma - log rho)]. Requires faithful
// (full-rank) states.
double q_s_derivative(const DensityMatrix& rho, const DensityMatrix& sigma,
                      double s);
double q_s_derivative(const SpectralPair& pair, double s);

// Minimizes the convex Q_s over [0,1]: golden-section search, refined for
// faithful states by bisection on the derivative (which pins s* well below
// the function-value noise floor; rank-deficient states keep the
// derivative-free path).
ChernoffResult chernoff_distance(const DensityMatrix& rho,
                                 const DensityMatrix& sigma);
ChernoffResult chernoff_distance(const SpectralPair& pair);

// ||rho^{1/2} sigma^{1/2}||_1 (singular-value sum).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// ||rho - sigma||_1 / 2.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Point of the interpolating family rho_s = rho^{1-s} sigma^s / Q_s. The
// spectrum comes from the Hermitian similarity
// rho^{(1-s)/2} sigma^s rho^{(1-s)/2} / Q_s, never from the non-Hermitian
// product itself. At the minimizer s* the two relative entropies balance.
struct ArcPoint {
  double s = 0.0;
  RealVector spectrum;        // positive, sums to 1
  double rel_ent_to_rho = 0.0;   // S(rho_s || rho)
  double rel_ent_to_sigma = 0.0; // S(rho_s || sigma)
};

// Requires faithful states and s in the open interval (0,1).
ArcPoint hellinger_arc(const DensityMatrix& rho, const DensityMatrix& sigma,
                       double s);

}  // namespace qht

#endif  // QHT_CHERNOFF_HPP
