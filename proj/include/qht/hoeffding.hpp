#ifndef QHT_HOEFFDING_HPP
#define QHT_HOEFFDING_HPP

#include <vector>

#include "qht/mapping.hpp"

namespace qht {

// One point of the error-exponent curve. value is +infinity on
// [0, -log psi1) when the supports are non-equivalent; s_achieving is the
// maximizing s in [0,1) when the value is finite.
struct ExponentPoint {
  double r = 0.0;
  double value = 0.0;
  double s_achieving = 0.0;
  bool has_achiever = false;

  bool is_infinite() const;
};

// Boundary parameters of the exponent curve: support overlaps and the
// support-restricted relative entropies marking the knee and the plateau.
struct CriticalPoints {
  double psi0 = 0.0;  // Tr[rho supp sigma]
  double psi1 = 0.0;  // Tr[sigma supp rho]
  double s_sigma_rho = 0.0;  // S_sigma(rho||sigma) = H(p~||q); plateau start
  double s_rho_sigma = 0.0;  // S_rho(sigma||rho) = H(q~||p); value at the knee
};

// Best type-I exponent under type-II exponent constraint r:
// e(r) = sup_{0<=s<1} (-rs - log sum_k q_k^s p_k^{1-s}) / (1-s),
// with e(r) = +infinity for r < -log psi1 when psi1 < 1. The sup is taken
// on the conditional pair, where log Q_s stays finite on all of [0,1].
ExponentPoint e_classical(const RealVector& p, const RealVector& q, double r);

// Quantum exponent e_Q(r): equal to e(r) of the mapped classical pair. A
// direct evaluation of the objective through Tr[rho^{1-s} sigma^s] is
// checked against the classical route on every call.
ExponentPoint e_quantum(const DensityMatrix& rho, const DensityMatrix& sigma,
                        double r);

// Pseudo-entropies computed two independent ways (operator formula and
// classical identities); throws if they disagree beyond 1e-9. Returned
// values use the classical route.
CriticalPoints critical_points(const DensityMatrix& rho,
                               const DensityMatrix& sigma);

std::vector<ExponentPoint> hoeffding_curve(const DensityMatrix& rho,
                                           const DensityMatrix& sigma,
                                           double r_min, double r_max,
                                           int steps);

// Optimal type-II exponent under a fixed type-I error bound: S(rho||sigma).
double stein_rate(const DensityMatrix& rho, const DensityMatrix& sigma);

namespace detail {

// sum_k p_k^{1-s} q_k^s with the support convention at the endpoints.
double classical_qs(const RealVector& p, const RealVector& q, double s);

struct ExponentContext {
  SpectralPair pair;
  ClassicalPair classical;
  ConditionalPair conditional;
};

ExponentContext make_exponent_context(const DensityMatrix& rho,
                                      const DensityMatrix& sigma);

ExponentPoint exponent_point(const ExponentContext& ctx, double r);

}  // namespace detail

}  // namespace qht

#endif  // QHT_HOEFFDING_HPP
