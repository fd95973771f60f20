#ifndef QHT_STATES_HPP
#define QHT_STATES_HPP

#include <cstdint>

#include "qht/linalg.hpp"

namespace qht {

// Validated density matrix: Hermitian, PSD (within clamp tolerance) and
// unit trace. Construct through validate_density / random_density /
// pure_state.
struct DensityMatrix {
  Matrix mat;

  Index dim() const { return mat.rows(); }
};

struct Priors {
  double pi0;
  double pi1;
};

// Throws NonHermitianInput / NotPSD / TraceNotOne.
DensityMatrix validate_density(const Matrix& m);

Priors make_priors(double pi0);

// Ginibre-style construction: G is dim x rank with independent standard
// normal real and imaginary parts, state = G G^dagger / Tr. Rank of the
// result equals `rank` with probability 1. Same seed, same bytes.
DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed);

DensityMatrix pure_state(const CVector& v);

}  // namespace qht

#endif  // QHT_STATES_HPP
