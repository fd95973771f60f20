#include "qht/hoeffding.hpp"

#include <cmath>
#include <limits>

#include "qht/optimize.hpp"
#include "qht/parallel.hpp"

namespace qht {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kSupGridPoints = 2001;
constexpr double kSupEndpoint = 1.0 - 1e-9;

// H(a||b) for strictly positive vectors on a common support.
double relent_positive(const RealVector& a, const RealVector& b) {
  double sum = 0.0;
  for (Index k = 0; k < a.size(); ++k) {
    sum += a[k] * (std::log(a[k]) - std::log(b[k]));
  }
  return sum;
}

struct TildeSup {
  double value = 0.0;
  double s = 0.0;
};

// sup over s in [0,1) of (-r's - log Qt_s)/(1-s) for the conditional pair,
// where Qt_s = sum p~^{1-s} q~^s is finite and positive on all of [0,1].
// Grid first, then golden-section refinement of the bracketed maximum; the
// open endpoint is handled by the analytic s->1 limit, which is finite
// exactly when r' = 0 (value H(q~||p~)) and -infinity otherwise.
TildeSup tilde_exponent(const ConditionalPair& cond, double r_prime) {
  auto log_qt = [&](double s) {
    double sum = 0.0;
    for (Index k = 0; k < cond.p_tilde.size(); ++k) {
      sum += std::pow(cond.p_tilde[k], 1.0 - s) * std::pow(cond.q_tilde[k], s);
    }
    return std::log(sum);
  };
  auto objective = [&](double s) {
    return (-r_prime * s - log_qt(s)) / (1.0 - s);
  };

  int best = 0;
  double best_value = -kInf;
  std::vector<double> values(kSupGridPoints);
  for (int k = 0; k < kSupGridPoints; ++k) {
    const double s = kSupEndpoint * static_cast<double>(k) / (kSupGridPoints - 1);
    values[static_cast<std::size_t>(k)] = objective(s);
    if (values[static_cast<std::size_t>(k)] > best_value) {
      best_value = values[static_cast<std::size_t>(k)];
      best = k;
    }
  }
  const double step = kSupEndpoint / (kSupGridPoints - 1);
  const double lo = best > 0 ? (best - 1) * step : 0.0;
  const double hi = best < kSupGridPoints - 1 ? (best + 1) * step : kSupEndpoint;
  ScalarOptimum refined = golden_section_maximize(objective, lo, hi, 1e-12);

  // On the plateau the sup sits at s = 0 (value 0); report it exactly
  // rather than a refinement point a few ulps away.
  const double at_zero = objective(0.0);
  if (at_zero >= refined.value - 1e-15) {
    refined = {0.0, at_zero};
  }

  TildeSup out{refined.value, refined.x};
  if (std::abs(r_prime) <= kProbTol) {
    const double limit = relent_positive(cond.q_tilde, cond.p_tilde);
    if (limit > out.value) {
      out.value = limit;
      out.s = kSupEndpoint;
    }
  }
  return out;
}

ExponentPoint exponent_from_conditional(const ConditionalPair& cond, double r) {
  ExponentPoint point;
  point.r = r;
  const double log_psi1 = std::log(cond.psi1);
  if (cond.psi1 < 1.0 - kProbTol && r < -log_psi1 - kProbTol) {
    point.value = kInf;
    return point;
  }
  const double r_prime = std::max(0.0, r + log_psi1);
  const TildeSup sup = tilde_exponent(cond, r_prime);
  point.value = std::max(0.0, -std::log(cond.psi0) + sup.value);
  point.s_achieving = sup.s;
  point.has_achiever = true;
  return point;
}

}  // namespace

bool ExponentPoint::is_infinite() const { return std::isinf(value); }

ExponentPoint e_classical(const RealVector& p, const RealVector& q, double r) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("e_classical: length mismatch");
  }
  if (std::abs(p.sum() - 1.0) > 1e-10 || std::abs(q.sum() - 1.0) > 1e-10) {
    throw NotNormalized("e_classical: inputs must be probability vectors");
  }
  ClassicalPair cp;
  cp.dim = 0;
  cp.p = p;
  cp.q = q;
  return exponent_from_conditional(conditionalize(cp), r);
}

namespace detail {

double classical_qs(const RealVector& p, const RealVector& q, double s) {
  double sum = 0.0;
  for (Index k = 0; k < p.size(); ++k) {
    sum += scalar_power(p[k], 1.0 - s, kProbTol) * scalar_power(q[k], s, kProbTol);
  }
  return sum;
}

ExponentContext make_exponent_context(const DensityMatrix& rho,
                                      const DensityMatrix& sigma) {
  ExponentContext ctx;
  ctx.pair = make_spectral_pair(rho, sigma);
  ctx.classical = ns_map(ctx.pair);
  ctx.conditional = conditionalize(ctx.classical);
  return ctx;
}

ExponentPoint exponent_point(const ExponentContext& ctx, double r) {
  ExponentPoint point = exponent_from_conditional(ctx.conditional, r);
  if (point.is_infinite()) return point;

  // Cross-check: the objective evaluated through Tr[rho^{1-s} sigma^s] must
  // match the classical-sum route pointwise. Checked away from s = 1, where
  // the 1/(1-s) factor amplifies round-off past the tolerance.
  const double s_chk = std::min(point.s_achieving, 1.0 - 1e-4);
  const double quantum = (-r * s_chk - std::log(qs_from_pair(ctx.pair, s_chk))) / (1.0 - s_chk);
  const double classical =
      (-r * s_chk - std::log(classical_qs(ctx.classical.p, ctx.classical.q, s_chk))) /
      (1.0 - s_chk);
  if (std::abs(quantum - classical) > 1e-9) {
    throw Error("e_quantum: quantum and classical objective routes disagree");
  }
  return point;
}

}  // namespace detail

ExponentPoint e_quantum(const DensityMatrix& rho, const DensityMatrix& sigma,
                        double r) {
  return detail::exponent_point(detail::make_exponent_context(rho, sigma), r);
}

CriticalPoints critical_points(const DensityMatrix& rho,
                               const DensityMatrix& sigma) {
  const detail::ExponentContext ctx = detail::make_exponent_context(rho, sigma);
  const ConditionalPair& cond = ctx.conditional;

  CriticalPoints out;
  out.psi0 = cond.psi0;
  out.psi1 = cond.psi1;
  // Classical identities: S_sigma(rho||sigma) = H(p~||q), S_rho(sigma||rho) = H(q~||p).
  double h_pt_q = 0.0;
  double h_qt_p = 0.0;
  for (std::size_t k = 0; k < cond.outcomes.size(); ++k) {
    const Index idx = cond.outcomes[k];
    const double pt = cond.p_tilde[static_cast<Index>(k)];
    const double qt = cond.q_tilde[static_cast<Index>(k)];
    h_pt_q += pt * (std::log(pt) - std::log(ctx.classical.q[idx]));
    h_qt_p += qt * (std::log(qt) - std::log(ctx.classical.p[idx]));
  }
  out.s_sigma_rho = h_pt_q;
  out.s_rho_sigma = h_qt_p;

  // Independent operator route.
  const Matrix supp_rho = range_projector(ctx.pair.rho);
  const Matrix supp_sigma = range_projector(ctx.pair.sigma);
  const Matrix log_rho = support_log(ctx.pair.rho);
  const Matrix log_sigma = support_log(ctx.pair.sigma);
  const Matrix rho_m = ctx.pair.rho.reconstruct();
  const Matrix sigma_m = ctx.pair.sigma.reconstruct();
  const double psi0_op = (rho_m * supp_sigma).trace().real();
  const double psi1_op = (sigma_m * supp_rho).trace().real();
  const double s_sr_op =
      ((rho_m * log_rho - std::log(psi0_op) * rho_m - rho_m * log_sigma) * supp_sigma)
          .trace()
          .real() /
      psi0_op;
  const double s_rs_op =
      ((sigma_m * log_sigma - std::log(psi1_op) * sigma_m - sigma_m * log_rho) * supp_rho)
          .trace()
          .real() /
      psi1_op;

  if (std::abs(psi0_op - out.psi0) > 1e-10 || std::abs(psi1_op - out.psi1) > 1e-10 ||
      std::abs(s_sr_op - out.s_sigma_rho) > 1e-9 ||
      std::abs(s_rs_op - out.s_rho_sigma) > 1e-9) {
    throw Error("critical_points: operator and classical routes disagree");
  }
  return out;
}

std::vector<ExponentPoint> hoeffding_curve(const DensityMatrix& rho,
                                           const DensityMatrix& sigma,
                                           double r_min, double r_max, int steps) {
  if (r_min < 0.0 || r_max < r_min || steps < 2) {
    throw Error("hoeffding_curve: need 0 <= r_min <= r_max and steps >= 2");
  }
  const detail::ExponentContext ctx = detail::make_exponent_context(rho, sigma);
  std::vector<ExponentPoint> curve(static_cast<std::size_t>(steps));
  parallel_for(steps, [&](std::size_t k) {
    const double r =
        r_min + (r_max - r_min) * static_cast<double>(k) / (steps - 1);
    curve[k] = detail::exponent_point(ctx, r);
  });
  return curve;
}

double stein_rate(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return quantum_relent(rho, sigma);
}

}  // namespace qht
