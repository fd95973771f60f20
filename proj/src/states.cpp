#include "qht/states.hpp"

#include "qht/rng.hpp"

namespace qht {

DensityMatrix validate_density(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw NonHermitianInput("validate_density: matrix is not square");
  }
  SpectralDecomposition sd = eigh(m);
  const double tol = sd.support_tol();
  if (sd.eigenvalues.minCoeff() < -tol) {
    throw NotPSD("validate_density: negative eigenvalue " +
                 std::to_string(sd.eigenvalues.minCoeff()));
  }
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > 1e-10) {
    throw TraceNotOne("validate_density: trace is " + std::to_string(trace));
  }
  return DensityMatrix{hermitize(m)};
}

Priors make_priors(double pi0) {
  if (!(pi0 > 0.0) || !(pi0 < 1.0)) {
    throw Error("priors must be strictly inside (0, 1)");
  }
  return Priors{pi0, 1.0 - pi0};
}

DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw Error("random_density: need 1 <= rank <= dim");
  }
  Rng rng(seed);
  Matrix g(dim, rank);
  for (Index j = 0; j < rank; ++j) {
    for (Index i = 0; i < dim; ++i) {
      g(i, j) = rng.normal_pair();
    }
  }
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return validate_density(hermitize(m));
}

DensityMatrix pure_state(const CVector& v) {
  const double norm = v.norm();
  if (norm <= 0.0) {
    throw ZeroVector("pure_state: zero vector");
  }
  CVector unit = v / norm;
  return DensityMatrix{unit * unit.adjoint()};
}

}  // namespace qht
