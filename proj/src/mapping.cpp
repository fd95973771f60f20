#include "qht/mapping.hpp"

#include <cmath>
#include <limits>

namespace qht {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ClassicalPair ns_map(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return ns_map(make_spectral_pair(rho, sigma));
}

ClassicalPair ns_map(const SpectralPair& pair) {
  const Index d = pair.dim();
  ClassicalPair cp;
  cp.dim = d;
  cp.p.resize(d * d);
  cp.q.resize(d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const double w = pair.overlap(i, j);
      cp.p[i * d + j] = pair.rho.eigenvalues[i] * w;
      cp.q[i * d + j] = pair.sigma.eigenvalues[j] * w;
    }
  }
  return cp;
}

ConditionalPair conditionalize(const ClassicalPair& cp) {
  ConditionalPair out;
  for (Index k = 0; k < cp.p.size(); ++k) {
    if (cp.p[k] > kProbTol && cp.q[k] > kProbTol) {
      out.outcomes.push_back(k);
    }
  }
  double mass_p = 0.0, mass_q = 0.0;
  for (Index k : out.outcomes) {
    mass_p += cp.p[k];
    mass_q += cp.q[k];
  }
  if (mass_p <= kProbTol) {
    throw OrthogonalHypotheses("conditionalize: hypotheses have disjoint support");
  }
  out.psi0 = mass_p;
  out.psi1 = mass_q;
  const Index b = static_cast<Index>(out.outcomes.size());
  out.p_tilde.resize(b);
  out.q_tilde.resize(b);
  for (Index k = 0; k < b; ++k) {
    out.p_tilde[k] = cp.p[out.outcomes[static_cast<std::size_t>(k)]] / mass_p;
    out.q_tilde[k] = cp.q[out.outcomes[static_cast<std::size_t>(k)]] / mass_q;
  }
  return out;
}

double classical_relent(const RealVector& p, const RealVector& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("classical_relent: length mismatch");
  }
  if (std::abs(p.sum() - 1.0) > 1e-10 || std::abs(q.sum() - 1.0) > 1e-10) {
    throw NotNormalized("classical_relent: inputs must be probability vectors");
  }
  double sum = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p[i] <= kProbTol) continue;
    if (q[i] <= kProbTol) return kInf;
    sum += p[i] * (std::log(p[i]) - std::log(q[i]));
  }
  return sum;
}

double quantum_relent(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return quantum_relent(make_spectral_pair(rho, sigma));
}

double quantum_relent(const SpectralPair& pair) {
  const double psi0 = psi0_from_pair(pair);
  if (1.0 - psi0 > kProbTol) {
    return kInf;  // supp rho not contained in supp sigma
  }
  double entropy_term = 0.0;
  for (Index i = 0; i < pair.dim(); ++i) {
    const double lam = pair.rho.eigenvalues[i];
    if (lam > pair.rho_tol) entropy_term += lam * std::log(lam);
  }
  // Tr[rho log sigma] = sum_j log(mu_j) <y_j|rho|y_j> over the support.
  double cross_term = 0.0;
  for (Index j = 0; j < pair.dim(); ++j) {
    const double mu = pair.sigma.eigenvalues[j];
    if (mu <= pair.sigma_tol) continue;
    double weight = 0.0;
    for (Index i = 0; i < pair.dim(); ++i) {
      weight += pair.rho.eigenvalues[i] * pair.overlap(i, j);
    }
    cross_term += weight * std::log(mu);
  }
  return entropy_term - cross_term;
}

}  // namespace qht
