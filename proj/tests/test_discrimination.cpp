#include <doctest.h>

#include "qht/discrimination.hpp"
#include "qht/mapping.hpp"
#include "test_support.hpp"

using namespace qht;
using namespace qht_test;

TEST_SUITE("discrimination") {

TEST_CASE("helstrom examples") {
  const Priors half = make_priors(0.5);

  const DensityMatrix state = random_density(3, 3, 1);
  CHECK(helstrom(state, state, half).bayes_error ==
        doctest::Approx(0.5).epsilon(1e-12));

  const DensityMatrix zero = pure_state(unit_vector({1.0, 0.0}));
  const DensityMatrix one = pure_state(unit_vector({0.0, 1.0}));
  CHECK(helstrom(zero, one, half).bayes_error == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(helstrom(mirror_rho(), mirror_sigma(), half).bayes_error ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("helstrom outcome is self-consistent") {
  const Priors priors = make_priors(0.3);
  const DensityMatrix rho = random_density(4, 3, 17);
  const DensityMatrix sigma = random_density(4, 4, 18);
  const TestOutcome out = helstrom(rho, sigma, priors);
  CHECK(std::abs(out.bayes_error -
                 (priors.pi0 * out.alpha + priors.pi1 * out.beta)) < 1e-10);
  CHECK(std::abs(out.alpha - (out.projector * rho.mat).trace().real()) < 1e-10);
  // projector is idempotent and Hermitian
  CHECK(max_abs(out.projector * out.projector - out.projector) < 1e-10);
  CHECK(hermiticity_gap(out.projector) < 1e-10);
}

TEST_CASE("neyman_pearson reproduces helstrom at T = pi1/pi0") {
  const Priors priors = make_priors(0.4);
  const DensityMatrix rho = random_density(3, 3, 23);
  const DensityMatrix sigma = random_density(3, 3, 24);
  const NeymanPearsonOutcome np = neyman_pearson(rho, sigma, priors.pi1 / priors.pi0);
  const TestOutcome hel = helstrom(rho, sigma, priors);
  CHECK(max_abs(np.projector - hel.projector) < 1e-9);
}

TEST_CASE("neyman_pearson identity and degenerate case") {
  const DensityMatrix state = random_density(3, 3, 29);
  const NeymanPearsonOutcome same = neyman_pearson(state, state, 1.0);
  CHECK(same.alpha + same.beta == doctest::Approx(1.0).epsilon(1e-10));

  const DensityMatrix rho = random_density(2, 2, 31);
  const DensityMatrix sigma = random_density(2, 2, 32);
  const double threshold = 2.0;
  const NeymanPearsonOutcome np = neyman_pearson(rho, sigma, threshold);
  CHECK(std::abs(np.alpha + threshold * np.beta - np.threshold_value) < 1e-10);
}

TEST_CASE("neyman_pearson optimality against random projectors") {
  const DensityMatrix rho = random_density(2, 2, 37);
  const DensityMatrix sigma = random_density(2, 2, 38);
  const double threshold = 2.0;
  const NeymanPearsonOutcome np = neyman_pearson(rho, sigma, threshold);
  for (std::uint64_t k = 0; k < 100; ++k) {
    const Matrix proj = random_projector(2, 1 + static_cast<Index>(k % 2), 500 + k);
    const WeightedTestError err = quantum_error_of_test(proj, rho, sigma, 1.0, 1.0);
    CHECK(err.alpha + threshold * err.beta >=
          np.alpha + threshold * np.beta - 1e-10);
  }
}

TEST_CASE("classical_ml_error") {
  RealVector p(2), q(2);
  p << 0.5, 0.5;
  q << 0.5, 0.5;
  CHECK(classical_ml_error(p, q, 0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-12));

  p << 1.0, 0.0;
  q << 0.0, 1.0;
  CHECK(classical_ml_error(p, q, 0.5, 0.5) == 0.0);

  p << 0.95, 0.05;
  q << 0.5, 0.5;
  CHECK(classical_ml_error(p, q, 0.5, 0.5) == doctest::Approx(0.275).epsilon(1e-12));

  RealVector bad(2);
  bad << 0.5, 0.6;
  CHECK_THROWS_AS(classical_ml_error(bad, q, 0.5, 0.5), NotNormalized);
}

TEST_CASE("quantum_error_of_test") {
  const DensityMatrix rho = random_density(3, 3, 41);
  const DensityMatrix sigma = random_density(3, 2, 42);

  const WeightedTestError none =
      quantum_error_of_test(Matrix::Zero(3, 3), rho, sigma, 0.5, 0.5);
  CHECK(none.alpha == 0.0);
  CHECK(none.beta == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(none.weighted_error == doctest::Approx(0.5).epsilon(1e-12));

  const WeightedTestError all =
      quantum_error_of_test(Matrix::Identity(3, 3), rho, sigma, 0.5, 0.5);
  CHECK(all.alpha == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(all.beta == doctest::Approx(0.0).epsilon(1e-12));

  const Priors half = make_priors(0.5);
  const TestOutcome hel = helstrom(rho, sigma, half);
  const WeightedTestError at_hel =
      quantum_error_of_test(hel.projector, rho, sigma, 0.5, 0.5);
  CHECK(at_hel.weighted_error == doctest::Approx(hel.bayes_error).epsilon(1e-10));
}

TEST_CASE("property: helstrom is optimal among tested projectors") {
  const Priors priors = make_priors(0.5);
  for (std::uint64_t seed : {61u, 62u}) {
    const Index dim = 3;
    const DensityMatrix rho = random_density(dim, 2, seed);
    const DensityMatrix sigma = random_density(dim, dim, seed + 100);
    const double best = helstrom(rho, sigma, priors).bayes_error;
    for (std::uint64_t k = 0; k < 50; ++k) {
      const Matrix proj =
          random_projector(dim, 1 + static_cast<Index>(k % dim), 700 + k);
      const WeightedTestError err =
          quantum_error_of_test(proj, rho, sigma, priors.pi0, priors.pi1);
      CHECK(best <= err.weighted_error + 1e-10);
    }
  }
}

TEST_CASE("property: quantum error at least half the mapped classical error") {
  std::uint64_t proj_seed = 9000;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Index dim = 2 + static_cast<Index>(seed % 5);
    const Index rank_rho = 1 + static_cast<Index>(seed % dim);
    const DensityMatrix rho = random_density(dim, rank_rho, 800 + seed);
    const DensityMatrix sigma = random_density(dim, dim, 900 + seed);
    const ClassicalPair cp = ns_map(rho, sigma);
    const double eta0 = 0.4, eta1 = 0.8;  // general positive scalars
    const double classical = classical_ml_error(cp.p, cp.q, eta0, eta1);
    for (int k = 0; k < 50; ++k) {
      const Matrix proj =
          random_projector(dim, 1 + static_cast<Index>(k % dim), proj_seed++);
      const WeightedTestError err =
          quantum_error_of_test(proj, rho, sigma, eta0, eta1);
      CHECK(err.weighted_error >= 0.5 * classical - 1e-10);
    }
  }
}

TEST_CASE("property: symmetry under swapping hypotheses and priors") {
  const DensityMatrix rho = random_density(4, 4, 71);
  const DensityMatrix sigma = random_density(4, 2, 72);
  const double direct = helstrom(rho, sigma, make_priors(0.3)).bayes_error;
  const double swapped = helstrom(sigma, rho, make_priors(0.7)).bayes_error;
  CHECK(std::abs(direct - swapped) < 1e-12);
}

}  // TEST_SUITE
