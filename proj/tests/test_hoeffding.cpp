#include <doctest.h>

#include <cmath>

#include "qht/hoeffding.hpp"
#include "test_support.hpp"

using namespace qht;
using namespace qht_test;

namespace {

RealVector vec(std::initializer_list<double> entries) {
  RealVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (double x : entries) v[i++] = x;
  return v;
}

constexpr double kHpq = 0.49463194;  // H(p||q) for p=(0.95,0.05), q=(0.5,0.5)
constexpr double kHqp = 0.83036560;  // H(q||p)

}  // namespace

TEST_SUITE("hoeffding") {

TEST_CASE("e_classical endpoints of the equivalent-support example") {
  const RealVector p = vec({0.95, 0.05});
  const RealVector q = vec({0.5, 0.5});

  const ExponentPoint at_zero = e_classical(p, q, 0.0);
  CHECK(std::abs(at_zero.value - kHqp) < 1e-6);

  const ExponentPoint at_hpq = e_classical(p, q, kHpq);
  CHECK(at_hpq.value < 1e-6);
  CHECK(at_hpq.value >= 0.0);
}

TEST_CASE("e_classical with equal conditionals is flat at -log psi0") {
  // Distinct p, q with p~ = q~: the curve is -log psi0 past the knee and
  // infinite before it.
  const RealVector p = vec({0.3, 0.3, 0.4, 0.0});
  const RealVector q = vec({0.2, 0.2, 0.0, 0.6});
  const double psi0 = 0.6, psi1 = 0.4;

  CHECK(e_classical(p, q, 0.5 * (-std::log(psi1))).is_infinite());

  for (double r : {-std::log(psi1), 1.0, 3.0}) {
    const ExponentPoint point = e_classical(p, q, r);
    CHECK(!point.is_infinite());
    CHECK(point.value == doctest::Approx(-std::log(psi0)).epsilon(1e-9));
  }
}

TEST_CASE("e_classical rejects bad input") {
  CHECK_THROWS_AS(e_classical(vec({0.6, 0.6}), vec({0.5, 0.5}), 0.1),
                  NotNormalized);
  CHECK_THROWS_AS(e_classical(vec({1.0, 0.0}), vec({0.0, 1.0}), 0.1),
                  OrthogonalHypotheses);
}

TEST_CASE("e_quantum at r = 0 equals S(sigma||rho) for faithful pairs") {
  for (std::uint64_t seed : {3u, 4u}) {
    const DensityMatrix rho = random_density(2, 2, seed);
    const DensityMatrix sigma = random_density(2, 2, seed + 20);
    const ExponentPoint point = e_quantum(rho, sigma, 0.0);
    CHECK(std::abs(point.value - quantum_relent(sigma, rho)) < 1e-6);
  }
}

TEST_CASE("e_quantum degenerates to rectangular form for pure pairs") {
  const DensityMatrix psi = pure_state(unit_vector({1.0, 0.0}));
  const DensityMatrix phi = pure_state(unit_vector({1.0, 1.0}));
  const double c = 0.5;  // |<psi|phi>|^2
  const double knee = -std::log(c);

  CHECK(e_quantum(psi, phi, 0.5 * knee).is_infinite());
  for (double r : {knee, knee + 0.5, knee + 2.0}) {
    const ExponentPoint point = e_quantum(psi, phi, r);
    CHECK(point.value == doctest::Approx(knee).epsilon(1e-9));
  }
}

TEST_CASE("e_quantum plateau at -log psi0 beyond S_sigma(rho||sigma)") {
  const DensityMatrix rho = random_density(3, 3, 31);
  const DensityMatrix sigma = random_density(3, 2, 32);
  const CriticalPoints cps = critical_points(rho, sigma);
  for (double extra : {0.0, 0.3, 1.0}) {
    const ExponentPoint point = e_quantum(rho, sigma, cps.s_sigma_rho + extra);
    CHECK(point.value == doctest::Approx(-std::log(cps.psi0)).epsilon(1e-8));
  }
}

TEST_CASE("critical_points on faithful, pure and equal pairs") {
  const DensityMatrix rho = random_density(3, 3, 41);
  const DensityMatrix sigma = random_density(3, 3, 42);
  const CriticalPoints faithful = critical_points(rho, sigma);
  CHECK(faithful.psi0 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(faithful.psi1 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(faithful.s_sigma_rho - quantum_relent(rho, sigma)) < 1e-9);
  CHECK(std::abs(faithful.s_rho_sigma - quantum_relent(sigma, rho)) < 1e-9);

  const DensityMatrix psi = pure_state(unit_vector({1.0, 0.0}));
  const DensityMatrix phi = pure_state(unit_vector({1.0, 1.0}));
  const CriticalPoints pure = critical_points(psi, phi);
  CHECK(pure.psi0 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pure.psi1 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pure.s_sigma_rho == doctest::Approx(-std::log(0.5)).epsilon(1e-9));
  CHECK(pure.s_rho_sigma == doctest::Approx(-std::log(0.5)).epsilon(1e-9));

  const CriticalPoints same = critical_points(rho, rho);
  CHECK(same.psi0 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(same.s_sigma_rho) < 1e-9);
  CHECK(std::abs(same.s_rho_sigma) < 1e-9);
}

TEST_CASE("critical_points invariant S_rho(sigma||rho) >= -log psi0") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Index dim = 2 + static_cast<Index>(seed % 3);
    const DensityMatrix rho =
        random_density(dim, 1 + static_cast<Index>(seed % dim), 100 + seed);
    const DensityMatrix sigma =
        random_density(dim, 1 + static_cast<Index>((seed + 1) % dim), 200 + seed);
    CriticalPoints cps;
    try {
      cps = critical_points(rho, sigma);
    } catch (const OrthogonalHypotheses&) {
      continue;
    }
    CHECK(cps.s_rho_sigma >= -std::log(cps.psi0) - 1e-10);
  }
}

TEST_CASE("equality case: pure pairs sit exactly at the corner") {
  Rng rng(55);
  CVector u(2), w(2);
  for (Index i = 0; i < 2; ++i) u[i] = rng.normal_pair(), w[i] = rng.normal_pair();
  const DensityMatrix pu = pure_state(u);
  const DensityMatrix pw = pure_state(w);
  const CriticalPoints cps = critical_points(pu, pw);
  CHECK(std::abs(cps.s_rho_sigma - (-std::log(cps.psi0))) < 1e-9);
  CHECK(std::abs(cps.s_sigma_rho - (-std::log(cps.psi1))) < 1e-9);

  // Distinct faithful pairs are strictly inside on both sides.
  const DensityMatrix rho = random_density(3, 3, 56);
  const DensityMatrix sigma = random_density(3, 3, 57);
  const CriticalPoints faithful = critical_points(rho, sigma);
  CHECK(faithful.s_rho_sigma > -std::log(faithful.psi0) + 1e-6);
  CHECK(faithful.s_sigma_rho > -std::log(faithful.psi1) + 1e-6);
}

TEST_CASE("hoeffding_curve endpoints for a faithful pair") {
  const DensityMatrix rho = random_density(2, 2, 61);
  const DensityMatrix sigma = random_density(2, 2, 62);
  const double s_sr = quantum_relent(rho, sigma);
  const double s_rs = quantum_relent(sigma, rho);
  const auto curve = hoeffding_curve(rho, sigma, 0.0, s_sr, 11);
  CHECK(std::abs(curve.front().value - s_rs) < 1e-6);
  CHECK(curve.back().value < 1e-6);
}

TEST_CASE("hoeffding_curve is non-increasing and convex past the knee") {
  for (std::uint64_t seed : {71u, 72u}) {
    const Index dim = 3;
    const DensityMatrix rho =
        random_density(dim, seed % 2 ? dim : 2, seed);
    const DensityMatrix sigma = random_density(dim, dim, seed + 30);
    const CriticalPoints cps = critical_points(rho, sigma);
    const double knee = std::max(0.0, -std::log(cps.psi1));
    const auto curve = hoeffding_curve(rho, sigma, knee, knee + 2.0, 41);
    for (std::size_t k = 1; k < curve.size(); ++k) {
      CHECK(curve[k].value <= curve[k - 1].value + 1e-9);
    }
    for (std::size_t k = 1; k + 1 < curve.size(); ++k) {
      const double interp = 0.5 * (curve[k - 1].value + curve[k + 1].value);
      CHECK(curve[k].value <= interp + 1e-9);
    }
  }
}

TEST_CASE("hoeffding_curve step shape for pure pairs") {
  const DensityMatrix psi = pure_state(unit_vector({1.0, 0.0}));
  const DensityMatrix phi = pure_state(unit_vector({1.0, 1.0}));
  const double knee = -std::log(0.5);
  const auto curve = hoeffding_curve(psi, phi, 0.0, 2.0 * knee, 9);
  for (const auto& point : curve) {
    if (point.r < knee - 1e-12) {
      CHECK(point.is_infinite());
    } else {
      CHECK(point.value == doctest::Approx(knee).epsilon(1e-9));
    }
  }
}

TEST_CASE("hoeffding_curve rejects bad grids") {
  const DensityMatrix rho = random_density(2, 2, 91);
  const DensityMatrix sigma = random_density(2, 2, 92);
  CHECK_THROWS_AS(hoeffding_curve(rho, sigma, -0.1, 1.0, 10), Error);
  CHECK_THROWS_AS(hoeffding_curve(rho, sigma, 0.0, 1.0, 1), Error);
  CHECK_THROWS_AS(hoeffding_curve(rho, sigma, 1.0, 0.5, 10), Error);
}

TEST_CASE("stein_rate") {
  const DensityMatrix state = random_density(3, 3, 81);
  CHECK(std::abs(stein_rate(state, state)) < 1e-10);

  const DensityMatrix wide = random_density(3, 3, 82);
  const DensityMatrix narrow = random_density(3, 2, 83);
  CHECK(std::isinf(stein_rate(wide, narrow)));

  // The exponent curve crosses zero exactly at the Stein rate.
  const DensityMatrix rho = random_density(2, 2, 84);
  const DensityMatrix sigma = random_density(2, 2, 85);
  const double rate = stein_rate(rho, sigma);
  CHECK(e_quantum(rho, sigma, rate - 1e-6).value > 0.0);
  CHECK(e_quantum(rho, sigma, rate + 1e-6).value == 0.0);
}

TEST_CASE("oracle: e(r) equals the constrained-divergence minimum over the arc") {
  // Independent route: for equivalent supports the minimizer of
  // inf{H(x||p) : H(x||q) <= r} lies on the exponential family
  // x_t ~ p^{1-t} q^t, where H(x_t||q) falls monotonically from H(p||q)
  // to 0. Bisect for the constraint boundary and read off H(x_t||p).
  auto relent = [](const RealVector& a, const RealVector& b) {
    double sum = 0.0;
    for (Index k = 0; k < a.size(); ++k) {
      sum += a[k] * (std::log(a[k]) - std::log(b[k]));
    }
    return sum;
  };
  auto arc_point = [](const RealVector& p, const RealVector& q, double t) {
    RealVector x(p.size());
    for (Index k = 0; k < p.size(); ++k) {
      x[k] = std::pow(p[k], 1.0 - t) * std::pow(q[k], t);
    }
    x /= x.sum();
    return x;
  };
  auto arc_oracle = [&](const RealVector& p, const RealVector& q, double r) {
    if (relent(p, q) <= r) return 0.0;
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (relent(arc_point(p, q, mid), q) > r ? lo : hi) = mid;
    }
    return relent(arc_point(p, q, 0.5 * (lo + hi)), p);
  };

  const RealVector p = vec({0.95, 0.05});
  const RealVector q = vec({0.5, 0.5});
  for (double r : {0.05, 0.1, 0.2, 0.3, 0.45}) {
    CHECK(e_classical(p, q, r).value ==
          doctest::Approx(arc_oracle(p, q, r)).epsilon(1e-7));
  }

  Rng rng(99);
  for (int trial = 0; trial < 4; ++trial) {
    const Index dim = 2 + trial % 2;
    RealVector pr(dim), qr(dim);
    for (Index k = 0; k < dim; ++k) pr[k] = 0.05 + rng.uniform();
    for (Index k = 0; k < dim; ++k) qr[k] = 0.05 + rng.uniform();
    pr /= pr.sum();
    qr /= qr.sum();
    const double h = relent(pr, qr);
    for (double frac : {0.2, 0.5, 0.8}) {
      const double r = frac * h;
      CHECK(e_classical(pr, qr, r).value ==
            doctest::Approx(arc_oracle(pr, qr, r)).epsilon(1e-7));
    }
  }
}

TEST_CASE("oracle: the non-equivalent case shifts the conditional arc answer") {
  // A rank-deficient quantum pair: e_Q(r) must equal
  // -log psi0 + e~(r + log psi1) with e~ computed by the arc oracle on the
  // conditional pair.
  const DensityMatrix rho = random_density(3, 2, 201);
  const DensityMatrix sigma = random_density(3, 3, 202);
  const ConditionalPair cond = conditionalize(ns_map(rho, sigma));

  auto relent = [](const RealVector& a, const RealVector& b) {
    double sum = 0.0;
    for (Index k = 0; k < a.size(); ++k) {
      sum += a[k] * (std::log(a[k]) - std::log(b[k]));
    }
    return sum;
  };
  auto arc_oracle = [&](const RealVector& p, const RealVector& q, double r) {
    if (relent(p, q) <= r) return 0.0;
    auto arc_point = [&](double t) {
      RealVector x(p.size());
      for (Index k = 0; k < p.size(); ++k) {
        x[k] = std::pow(p[k], 1.0 - t) * std::pow(q[k], t);
      }
      x /= x.sum();
      return x;
    };
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (relent(arc_point(mid), q) > r ? lo : hi) = mid;
    }
    return relent(arc_point(0.5 * (lo + hi)), p);
  };

  const double knee = -std::log(cond.psi1);
  for (double extra : {0.01, 0.05, 0.15}) {
    const double r = knee + extra;
    const double expected =
        -std::log(cond.psi0) +
        arc_oracle(cond.p_tilde, cond.q_tilde, r + std::log(cond.psi1));
    CHECK(e_quantum(rho, sigma, r).value ==
          doctest::Approx(expected).epsilon(1e-7));
  }
}

TEST_CASE("property: scale relation Q_s = psi0^{1-s} psi1^s Qt_s") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Index dim = 2 + static_cast<Index>(seed % 2);
    const DensityMatrix rho =
        random_density(dim, 1 + static_cast<Index>(seed % dim), 300 + seed);
    const DensityMatrix sigma =
        random_density(dim, 1 + static_cast<Index>((seed + 1) % dim), 400 + seed);
    const SpectralPair pair = make_spectral_pair(rho, sigma);
    ConditionalPair cond;
    try {
      cond = conditionalize(ns_map(pair));
    } catch (const OrthogonalHypotheses&) {
      continue;
    }
    for (int k = 0; k <= 10; ++k) {
      const double s = k / 10.0;
      double qt = 0.0;
      for (Index i = 0; i < cond.p_tilde.size(); ++i) {
        qt += std::pow(cond.p_tilde[i], 1.0 - s) * std::pow(cond.q_tilde[i], s);
      }
      const double scaled =
          std::pow(cond.psi0, 1.0 - s) * std::pow(cond.psi1, s) * qt;
      CHECK(std::abs(qs_from_pair(pair, s) - scaled) < 1e-10);
    }
  }
}

}  // TEST_SUITE
