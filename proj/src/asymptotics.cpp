#include "qht/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "qht/hoeffding.hpp"
#include "qht/optimize.hpp"

namespace qht {

namespace {

constexpr double kUnderflowFloor = 1e-300;

void check_cap(Index dim, int n, std::size_t cap, const char* who) {
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) {
    total *= static_cast<std::size_t>(dim);
    if (total > cap) {
      throw DimensionCapExceeded(std::string(who) + ": dim^n exceeds cap " +
                                 std::to_string(cap));
    }
  }
}

// log of min_s pi0^{1-s} pi1^s Q_s^n over s in [0,1]; convex in s since
// log Q_s is convex.
double log_upper_bound(const SpectralPair& pair, const Priors& priors, int n) {
  auto objective = [&](double s) {
    const double qs = qs_from_pair(pair, s);
    if (qs <= kProbTol) return -std::numeric_limits<double>::infinity();
    return (1.0 - s) * std::log(priors.pi0) + s * std::log(priors.pi1) +
           n * std::log(qs);
  };
  ScalarOptimum interior = golden_section_minimize(objective, 0.0, 1.0, 1e-10);
  return std::min({interior.value, objective(0.0), objective(1.0)});
}

}  // namespace

double n_copy_error(const DensityMatrix& rho, const DensityMatrix& sigma,
                    const Priors& priors, int n, std::size_t cap) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("n_copy_error: dimensions differ");
  }
  check_cap(rho.dim(), n, cap, "n_copy_error");
  const Matrix rho_n = tensor_power(rho.mat, n, cap);
  const Matrix sigma_n = tensor_power(sigma.mat, n, cap);
  const double norm = trace_norm(priors.pi1 * sigma_n - priors.pi0 * rho_n);
  return (1.0 - norm) / 2.0;
}

RateExperiment chernoff_rate_experiment(const DensityMatrix& rho,
                                        const DensityMatrix& sigma,
                                        const Priors& priors, int n_max,
                                        std::size_t cap) {
  if (n_max < 1) throw Error("chernoff_rate_experiment: n_max must be >= 1");
  check_cap(rho.dim(), n_max, cap, "chernoff_rate_experiment");

  RateExperiment out;
  const SpectralPair pair = make_spectral_pair(rho, sigma);
  out.chernoff = chernoff_distance(pair);
  const ClassicalPair cp = ns_map(pair);

  const bool orthogonal = out.chernoff.q_star <= kProbTol;
  out.entries.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    RateEntry entry;
    entry.n = n;
    entry.value = n_copy_error(rho, sigma, priors, n, cap);
    entry.rate_defined = entry.value > kUnderflowFloor;
    entry.rate = entry.rate_defined ? -std::log(entry.value) / n : 0.0;
    entry.lower_bound = 0.5 * type_class_ml_error(cp.p, cp.q, priors.pi0, priors.pi1, n);
    entry.upper_bound = orthogonal ? 0.0 : std::exp(log_upper_bound(pair, priors, n));
    entry.sandwich_ok = entry.lower_bound <= entry.value + 1e-10 &&
                        entry.value <= entry.upper_bound + 1e-10;
    out.entries.push_back(entry);
  }
  return out;
}

HoeffdingTestResult hoeffding_test(const DensityMatrix& rho,
                                   const DensityMatrix& sigma, double r, int n,
                                   std::size_t cap) {
  if (!(r > 0.0)) throw Error("hoeffding_test: r must be positive");
  check_cap(rho.dim(), n, cap, "hoeffding_test");

  const detail::ExponentContext ctx = detail::make_exponent_context(rho, sigma);
  const ExponentPoint point = detail::exponent_point(ctx, r);
  if (point.is_infinite()) {
    throw InfiniteExponentRegion(
        "hoeffding_test: r lies below -log psi1, where e_Q is infinite");
  }

  HoeffdingTestResult out;
  out.s = point.s_achieving;
  const double log_qs = std::log(qs_from_pair(ctx.pair, out.s));
  out.tilt_x = -(r + log_qs) / (1.0 - out.s);
  out.beta_bound = std::exp(static_cast<double>(n) * (out.tilt_x * (1.0 - out.s) + log_qs));
  out.alpha_bound = std::exp(static_cast<double>(n) * (-out.tilt_x * out.s + log_qs));

  const Matrix rho_n = tensor_power(rho.mat, n, cap);
  const Matrix sigma_n = tensor_power(sigma.mat, n, cap);
  const Matrix tilted = std::exp(-static_cast<double>(n) * out.tilt_x) * sigma_n - rho_n;
  const Matrix projector = range_projector(tilted);
  out.alpha_n = (projector * rho_n).trace().real();
  out.beta_n = 1.0 - (projector * sigma_n).trace().real();
  return out;
}

double type_class_ml_error(const RealVector& p, const RealVector& q, double eta0,
                           double eta1, int n) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("type_class_ml_error: length mismatch");
  }
  if (n < 1) throw Error("type_class_ml_error: n must be >= 1");

  std::vector<double> log_p, log_q;
  for (Index k = 0; k < p.size(); ++k) {
    if (p[k] > kProbTol || q[k] > kProbTol) {
      log_p.push_back(p[k] > kProbTol ? std::log(p[k])
                                      : -std::numeric_limits<double>::infinity());
      log_q.push_back(q[k] > kProbTol ? std::log(q[k])
                                      : -std::numeric_limits<double>::infinity());
    }
  }
  const std::size_t m = log_p.size();
  if (m > 16) {
    throw SupportTooLarge("type_class_ml_error: joint support exceeds 16 outcomes");
  }
  if (m == 0) return 0.0;

  const double log_eta0 = std::log(eta0);
  const double log_eta1 = std::log(eta1);
  const double log_n_fact = std::lgamma(n + 1.0);

  double total = 0.0;
  // c * log with the convention 0 * (-inf) = 0: zero draws from an
  // unsupported outcome contribute nothing.
  auto scaled_log = [](int c, double lg) { return c == 0 ? 0.0 : c * lg; };
  // Enumerate compositions of n into m parts, depth-first.
  auto recurse = [&](auto&& self, std::size_t slot, int remaining, double log_w,
                     double lp, double lq) -> void {
    if (slot + 1 == m) {
      const double lw = log_w - std::lgamma(remaining + 1.0);
      const double flp = lp + scaled_log(remaining, log_p[slot]);
      const double flq = lq + scaled_log(remaining, log_q[slot]);
      const double log_term = lw + std::min(log_eta0 + flp, log_eta1 + flq);
      total += std::isinf(log_term) ? 0.0 : std::exp(log_term);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      self(self, slot + 1, remaining - c, log_w - std::lgamma(c + 1.0),
           lp + scaled_log(c, log_p[slot]), lq + scaled_log(c, log_q[slot]));
    }
  };
  recurse(recurse, 0, n, log_n_fact, 0.0, 0.0);
  return total;
}

}  // namespace qht
