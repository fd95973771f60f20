#ifndef QHT_MAPPING_HPP
#define QHT_MAPPING_HPP

#include <vector>

#include "qht/spectral_pair.hpp"

namespace qht {

// Classical distribution pair produced by the state-pair mapping. Outcomes
// are the d^2 index pairs (i, j), stored at flat index i*d + j:
// p_{i,j} = lambda_i |<x_i|y_j>|^2, q_{i,j} = mu_j |<x_i|y_j>|^2.
struct ClassicalPair {
  Index dim = 0;  // d; p and q have length d*d
  RealVector p;
  RealVector q;
};

ClassicalPair ns_map(const DensityMatrix& rho, const DensityMatrix& sigma);
ClassicalPair ns_map(const SpectralPair& pair);

// Restriction of a classical pair to B = supp(p) /\ supp(q), renormalized.
struct ConditionalPair {
  std::vector<Index> outcomes;  // indices into the base pair's outcome set
  RealVector p_tilde;
  RealVector q_tilde;
  double psi0 = 0.0;  // p(B)
  double psi1 = 0.0;  // q(B)
};

// Throws OrthogonalHypotheses when p(B) vanishes.
ConditionalPair conditionalize(const ClassicalPair& cp);

// Relative entropy sum p_i (log p_i - log q_i) in natural log; +infinity
// exactly when p puts mass where q has none. Throws NotNormalized.
double classical_relent(const RealVector& p, const RealVector& q);

// Umegaki relative entropy Tr[rho (log rho - log sigma)]; +infinity when
// supp rho is not contained in supp sigma.
double quantum_relent(const DensityMatrix& rho, const DensityMatrix& sigma);
double quantum_relent(const SpectralPair& pair);

}  // namespace qht

#endif  // QHT_MAPPING_HPP
