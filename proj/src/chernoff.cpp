#include "qht/chernoff.hpp"

#include <cmath>
#include <limits>

#include "qht/optimize.hpp"
#include "qht/parallel.hpp"

namespace qht {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kCurvePoints = 101;

RealVector powered(const RealVector& eigs, double exponent, double tol) {
  RealVector out(eigs.size());
  for (Index i = 0; i < eigs.size(); ++i) {
    out[i] = scalar_power(eigs[i], exponent, tol);
  }
  return out;
}

RealVector powered_log(const RealVector& eigs, double exponent, double tol) {
  RealVector out(eigs.size());
  for (Index i = 0; i < eigs.size(); ++i) {
    out[i] = eigs[i] > tol ? std::pow(eigs[i], exponent) * std::log(eigs[i]) : 0.0;
  }
  return out;
}

void require_faithful(const SpectralPair& pair, const char* who) {
  if (pair.rho.eigenvalues.minCoeff() <= pair.rho_tol ||
      pair.sigma.eigenvalues.minCoeff() <= pair.sigma_tol) {
    throw NotFaithful(std::string(who) + ": states must have full rank");
  }
}

}  // namespace

double q_s(const DensityMatrix& rho, const DensityMatrix& sigma, double s) {
  return qs_from_pair(make_spectral_pair(rho, sigma), s);
}

std::vector<CurvePoint> sample_qs_curve(const SpectralPair& pair, int points) {
  if (points < 2) throw Error("sample_qs_curve: need at least two points");
  std::vector<CurvePoint> curve(static_cast<std::size_t>(points));
  parallel_for(points, [&](std::size_t k) {
    const double s = static_cast<double>(k) / (points - 1);
    curve[k] = {s, qs_from_pair(pair, s)};
  });
  return curve;
}

double q_s_derivative(const DensityMatrix& rho, const DensityMatrix& sigma,
                      double s) {
  return q_s_derivative(make_spectral_pair(rho, sigma), s);
}

double q_s_derivative(const SpectralPair& pair, double s) {
  require_faithful(pair, "q_s_derivative");
  const RealVector f = powered(pair.rho.eigenvalues, 1.0 - s, pair.rho_tol);
  const RealVector g = powered(pair.sigma.eigenvalues, s, pair.sigma_tol);
  const RealVector f_log = powered_log(pair.rho.eigenvalues, 1.0 - s, pair.rho_tol);
  const RealVector g_log = powered_log(pair.sigma.eigenvalues, s, pair.sigma_tol);
  return weighted_overlap_sum(pair.overlap, f, g_log) -
         weighted_overlap_sum(pair.overlap, f_log, g);
}

ChernoffResult chernoff_distance(const DensityMatrix& rho,
                                 const DensityMatrix& sigma) {
  return chernoff_distance(make_spectral_pair(rho, sigma));
}

namespace {

// For faithful states Q_s is analytic and convex, so its derivative has a
// single sign change; bisecting on the sign locates s* far below the noise
// floor of function-value search (which is only ~sqrt(eps) in s).
double faithful_minimizer(const SpectralPair& pair) {
  const double d0 = q_s_derivative(pair, 0.0);
  if (d0 >= 0.0) return 0.0;
  const double d1 = q_s_derivative(pair, 1.0);
  if (d1 <= 0.0) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 80 && hi - lo > 1e-14; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double dm = q_s_derivative(pair, mid);
    if (dm == 0.0) return mid;
    (dm < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ChernoffResult chernoff_distance(const SpectralPair& pair) {
  ChernoffResult result;
  result.curve = sample_qs_curve(pair, kCurvePoints);

  const double trace_overlap = weighted_overlap_sum(
      pair.overlap, pair.rho.eigenvalues, pair.sigma.eigenvalues);
  if (trace_overlap <= kProbTol) {
    result.q_star = 0.0;
    result.xi_qcb = kInf;
    result.s_star = 0.5;
    return result;
  }

  const bool faithful = pair.rho.eigenvalues.minCoeff() > pair.rho_tol &&
                        pair.sigma.eigenvalues.minCoeff() > pair.sigma_tol;
  double s_star;
  if (faithful) {
    s_star = faithful_minimizer(pair);
  } else {
    auto objective = [&](double s) { return qs_from_pair(pair, s); };
    ScalarOptimum interior = golden_section_minimize(objective, 0.0, 1.0, 1e-10);
    const double q0 = qs_from_pair(pair, 0.0);
    const double q1 = qs_from_pair(pair, 1.0);
    s_star = interior.x;
    if (interior.x <= 1e-8 && q0 < interior.value) {
      s_star = 0.0;
    } else if (interior.x >= 1.0 - 1e-8 && q1 < interior.value) {
      s_star = 1.0;
    }
  }
  result.s_star = s_star;
  result.q_star = qs_from_pair(pair, s_star);
  result.xi_qcb = result.q_star <= kProbTol ? kInf : -std::log(result.q_star);
  return result;
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("fidelity: dimensions differ");
  }
  const Matrix product = matrix_power(rho.mat, 0.5) * matrix_power(sigma.mat, 0.5);
  Eigen::JacobiSVD<Matrix> svd(product);
  return svd.singularValues().sum();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("trace_distance: dimensions differ");
  }
  return 0.5 * trace_norm(rho.mat - sigma.mat);
}

ArcPoint hellinger_arc(const DensityMatrix& rho, const DensityMatrix& sigma,
                       double s) {
  if (!(s > 0.0) || !(s < 1.0)) {
    throw SOutOfRange("hellinger_arc: s must lie in (0,1)");
  }
  const SpectralPair pair = make_spectral_pair(rho, sigma);
  require_faithful(pair, "hellinger_arc");

  const double qs = qs_from_pair(pair, s);
  const Matrix half_rho = pair.rho.apply(powered(pair.rho.eigenvalues, (1.0 - s) / 2.0, pair.rho_tol));
  const Matrix sigma_s = pair.sigma.apply(powered(pair.sigma.eigenvalues, s, pair.sigma_tol));
  const Matrix similar = hermitize(half_rho * sigma_s * half_rho) / qs;

  ArcPoint out;
  out.s = s;
  out.spectrum = eigh(similar).eigenvalues;

  double log_trace = 0.0;  // Tr[rho_s log rho_s]
  for (Index i = 0; i < out.spectrum.size(); ++i) {
    log_trace += out.spectrum[i] * std::log(out.spectrum[i]);
  }
  const RealVector f = powered(pair.rho.eigenvalues, 1.0 - s, pair.rho_tol);
  const RealVector g = powered(pair.sigma.eigenvalues, s, pair.sigma_tol);
  const RealVector f_log = powered_log(pair.rho.eigenvalues, 1.0 - s, pair.rho_tol);
  const RealVector g_log = powered_log(pair.sigma.eigenvalues, s, pair.sigma_tol);
  const double cross_rho = weighted_overlap_sum(pair.overlap, f_log, g) / qs;
  const double cross_sigma = weighted_overlap_sum(pair.overlap, f, g_log) / qs;
  out.rel_ent_to_rho = log_trace - cross_rho;
  out.rel_ent_to_sigma = log_trace - cross_sigma;
  return out;
}

}  // namespace qht
