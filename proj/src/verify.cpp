#include "qht/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qht/chernoff.hpp"
#include "qht/parallel.hpp"
#include "qht/rng.hpp"

namespace qht {

namespace {

// Pair on a common dimension. Rank-deficient states are over-sampled (half
// of the draws): the support boundary is where the spectral bookkeeping is
// most likely to go wrong.
void draw_pair(Rng& rng, const std::vector<Index>& dims, DensityMatrix& a,
               DensityMatrix& b) {
  const Index dim = dims[rng.below(dims.size())];
  auto draw_rank = [&]() {
    if (dim > 1 && rng.uniform() < 0.5) {
      return 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(dim - 1)));
    }
    return dim;
  };
  a = random_density(dim, draw_rank(), rng.bits());
  b = random_density(dim, draw_rank(), rng.bits());
}

double positive_scale(Rng& rng) { return 0.1 + 2.9 * rng.uniform(); }

VerificationReport fold_margins(std::string name, int trials, std::uint64_t seed,
                                const std::vector<double>& margins) {
  VerificationReport report;
  report.property_name = std::move(name);
  report.trials = trials;
  report.seed = seed;
  report.worst_margin = margins.empty() ? 0.0 : margins.front();
  for (double m : margins) {
    report.worst_margin = std::min(report.worst_margin, m);
    if (m < -1e-9) ++report.failures;
  }
  return report;
}

// Tr[a^s b^{1-s}] via the overlap kernel, with the support convention.
double cross_power_trace(const SpectralPair& pair, double s) {
  // pair holds (a, b) as (rho, sigma) slots; exponents swapped vs Q_s.
  RealVector f(pair.rho.eigenvalues.size());
  RealVector g(pair.sigma.eigenvalues.size());
  for (Index i = 0; i < f.size(); ++i) {
    f[i] = scalar_power(pair.rho.eigenvalues[i], s, pair.rho_tol);
  }
  for (Index j = 0; j < g.size(); ++j) {
    g[j] = scalar_power(pair.sigma.eigenvalues[j], 1.0 - s, pair.sigma_tol);
  }
  return weighted_overlap_sum(pair.overlap, f, g);
}

}  // namespace

std::string VerificationReport::to_string() const {
  char buf[192];
  std::snprintf(buf, sizeof(buf),
                "%-24s trials=%d failures=%d worst_margin=%.17g seed=%llu",
                property_name.c_str(), trials, failures, worst_margin,
                static_cast<unsigned long long>(seed));
  return buf;
}

VerificationReport check_trace_inequality(int trials, std::uint64_t seed,
                                          const std::vector<Index>& dims) {
  std::vector<double> margins(static_cast<std::size_t>(trials), 0.0);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng(sub_seed(seed, t));
    DensityMatrix sa, sb;
    draw_pair(rng, dims, sa, sb);
    const Matrix a = positive_scale(rng) * sa.mat;
    const Matrix b = positive_scale(rng) * sb.mat;
    const SpectralPair pair = make_spectral_pair(eigh(a), eigh(b));
    const double rhs =
        (a.trace().real() + b.trace().real() - trace_norm(a - b)) / 2.0;
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 20; ++k) {
      const double s = k / 20.0;
      worst = std::min(worst, cross_power_trace(pair, s) - rhs);
    }
    margins[t] = worst;
  });
  return fold_margins("trace_inequality", trials, seed, margins);
}

VerificationReport check_chain(int trials, std::uint64_t seed,
                               const std::vector<Index>& dims) {
  std::vector<double> margins(static_cast<std::size_t>(trials), 0.0);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng(sub_seed(seed, t));
    DensityMatrix rho, sigma;
    draw_pair(rng, dims, rho, sigma);
    const double f = fidelity(rho, sigma);
    const double td = trace_distance(rho, sigma);
    const double q = chernoff_distance(rho, sigma).q_star;
    const double lower_f = 1.0 - std::sqrt(std::max(0.0, 1.0 - f * f));
    const double upper_f = std::sqrt(std::max(0.0, 1.0 - td * td));
    margins[t] = std::min({(1.0 - td) - lower_f, q - (1.0 - td), f - q,
                           upper_f - f, q - f * f});
  });
  return fold_margins("chain", trials, seed, margins);
}

VerificationReport check_appendix(int trials, std::uint64_t seed,
                                  const std::vector<Index>& dims) {
  std::vector<double> margins(static_cast<std::size_t>(trials), 0.0);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng(sub_seed(seed, t));
    DensityMatrix sa, sb;
    draw_pair(rng, dims, sa, sb);
    const Matrix a = positive_scale(rng) * sa.mat;
    const Matrix b = positive_scale(rng) * sb.mat;
    const SpectralPair pair = make_spectral_pair(eigh(a), eigh(b));
    const double tr_a = a.trace().real();
    const double tr_b = b.trace().real();

    const Matrix sqrt_prod = matrix_power(pair.rho, 0.5) * matrix_power(pair.sigma, 0.5);
    Eigen::JacobiSVD<Matrix> svd(sqrt_prod);
    const double holder_lhs = svd.singularValues().sum();

    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 20; ++k) {
      const double s = k / 20.0;
      const double rhs = std::sqrt(cross_power_trace(pair, s)) *
                         std::pow(tr_a, (1.0 - s) / 2.0) * std::pow(tr_b, s / 2.0);
      worst = std::min(worst, rhs - holder_lhs);
    }

    const double diff_norm = trace_norm(a - b);
    const double sqrt_trace = sqrt_prod.trace().real();
    const double sum_trace = tr_a + tr_b;
    worst = std::min(worst, sum_trace * sum_trace - diff_norm * diff_norm -
                                4.0 * sqrt_trace * sqrt_trace);
    margins[t] = worst;
  });
  return fold_margins("appendix", trials, seed, margins);
}

VerificationReport check_tensor_counterexample() {
  const double b = 0.35;
  Matrix rho = Matrix::Zero(2, 2), sigma = Matrix::Zero(2, 2);
  Matrix rho_p = Matrix::Zero(2, 2), sigma_p = Matrix::Zero(2, 2);
  rho(0, 0) = 0.25;
  rho(1, 1) = 0.75;
  sigma(0, 0) = 0.75;
  sigma(1, 1) = 0.25;
  rho_p(1, 1) = 1.0;
  sigma_p(0, 0) = b;
  sigma_p(1, 1) = 1.0 - b;

  const double norm_1 = trace_norm(rho - sigma);
  const double norm_1p = trace_norm(rho_p - sigma_p);
  const double norm_2 = trace_norm(tensor_power(rho, 2) - tensor_power(sigma, 2));
  const double norm_2p =
      trace_norm(tensor_power(rho_p, 2) - tensor_power(sigma_p, 2));

  const DensityMatrix drho = validate_density(rho);
  const DensityMatrix dsigma = validate_density(sigma);
  const DensityMatrix drho_p = validate_density(rho_p);
  const DensityMatrix dsigma_p = validate_density(sigma_p);
  const double xi = chernoff_distance(drho, dsigma).xi_qcb;
  const double xi_p = chernoff_distance(drho_p, dsigma_p).xi_qcb;

  const std::vector<double> margins = {
      -std::abs(norm_1 - 1.0),
      -std::abs(norm_1p - 2.0 * b),
      -std::abs(norm_2 - 1.0),
      -std::abs(norm_2p - 2.0 * b * (2.0 - b)),
      norm_1 - norm_1p,   // one copy: (rho, sigma) further apart
      norm_2p - norm_2,   // two copies: ordering reversed
      -std::abs(xi - (-std::log(std::sqrt(3.0) / 2.0))),
      -std::abs(xi_p - (-std::log(1.0 - b))),
      xi_p - xi,          // asymptotically (rho', sigma') wins
  };
  return fold_margins("tensor_counterexample", 1, 0, margins);
}

VerificationReport check_convexity_concavity(int trials, std::uint64_t seed) {
  const std::vector<Index> dims = {2, 3, 4};
  std::vector<double> margins(static_cast<std::size_t>(trials), 0.0);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng(sub_seed(seed, t));
    double worst = std::numeric_limits<double>::infinity();

    // Convexity of Q_s along the sampled curve.
    {
      DensityMatrix rho, sigma;
      draw_pair(rng, dims, rho, sigma);
      const ChernoffResult res = chernoff_distance(rho, sigma);
      for (std::size_t k = 1; k + 1 < res.curve.size(); ++k) {
        const double interp = 0.5 * (res.curve[k - 1].value + res.curve[k + 1].value);
        worst = std::min(worst, interp - res.curve[k].value);
      }
    }

    // Joint concavity on random 4-tuples.
    {
      const Index dim = dims[rng.below(dims.size())];
      const DensityMatrix rho1 = random_density(dim, dim, rng.bits());
      const DensityMatrix rho2 = random_density(dim, dim, rng.bits());
      const DensityMatrix sigma1 = random_density(dim, dim, rng.bits());
      const DensityMatrix sigma2 = random_density(dim, dim, rng.bits());
      const double q1 = chernoff_distance(rho1, sigma1).q_star;
      const double q2 = chernoff_distance(rho2, sigma2).q_star;
      for (double mix : {0.25, 0.5, 0.75}) {
        const DensityMatrix rho_mix =
            validate_density(mix * rho1.mat + (1.0 - mix) * rho2.mat);
        const DensityMatrix sigma_mix =
            validate_density(mix * sigma1.mat + (1.0 - mix) * sigma2.mat);
        const double q_mix = chernoff_distance(rho_mix, sigma_mix).q_star;
        worst = std::min(worst, q_mix - (mix * q1 + (1.0 - mix) * q2));
      }
    }

    // Partial-trace monotonicity on two-qubit pairs.
    {
      const DensityMatrix rho = random_density(4, 4, rng.bits());
      const DensityMatrix sigma = random_density(4, 4, rng.bits());
      const DensityMatrix rho_a =
          validate_density(partial_trace(rho.mat, Subsystem::Second, 2, 2));
      const DensityMatrix sigma_a =
          validate_density(partial_trace(sigma.mat, Subsystem::Second, 2, 2));
      worst = std::min(worst, chernoff_distance(rho_a, sigma_a).q_star -
                                  chernoff_distance(rho, sigma).q_star);
    }
    margins[t] = worst;
  });
  return fold_margins("convexity_concavity", trials, seed, margins);
}

}  // namespace qht
