// Compares the OpenMP kernels against the serial reference implementations:
// wall time, speedup, and the largest deviation between the two results
// (zero where the arithmetic order is identical).

#include <chrono>
#include <cmath>
#include <cstdio>

#include "qht/chernoff.hpp"
#include "qht/parallel.hpp"
#include "qht/reference.hpp"
#include "qht/states.hpp"
#include "qht/verify.hpp"

using namespace qht;

namespace {

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename Fn>
double time_of(Fn&& fn, int repeats = 3) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const double start = now();
    fn();
    best = std::min(best, now() - start);
  }
  return best;
}

void row(const char* name, double serial_s, double parallel_s, double max_delta) {
  std::printf("%-28s %10.4f ms %10.4f ms %8.2fx   max|delta|=%.3g\n", name,
              serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s, max_delta);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    const Matrix a = random_density(40, 40, 1).mat;
    const Matrix b = random_density(40, 40, 2).mat;
    Matrix serial_out, parallel_out;
    const double ts = time_of([&] { serial_out = ref::kron(a, b); });
    const double tp = time_of([&] { parallel_out = kron(a, b); });
    row("kron 40x40 (x) 40x40", ts, tp,
        (serial_out - parallel_out).cwiseAbs().maxCoeff());
  }

  {
    const Matrix q = random_density(2, 2, 3).mat;
    Matrix serial_out, parallel_out;
    const double ts = time_of([&] { serial_out = ref::tensor_power(q, 10); });
    const double tp = time_of([&] { parallel_out = tensor_power(q, 10); });
    row("tensor_power qubit^10", ts, tp,
        (serial_out - parallel_out).cwiseAbs().maxCoeff());
  }

  {
    const SpectralPair pair = make_spectral_pair(random_density(256, 256, 4),
                                                 random_density(256, 128, 5));
    std::vector<CurvePoint> serial_curve, parallel_curve;
    const double ts = time_of([&] { serial_curve = ref::qs_curve(pair, 101); });
    const double tp = time_of([&] { parallel_curve = sample_qs_curve(pair, 101); });
    double max_delta = 0.0;
    for (std::size_t k = 0; k < serial_curve.size(); ++k) {
      max_delta = std::max(max_delta, std::abs(serial_curve[k].value -
                                               parallel_curve[k].value));
    }
    row("Q_s curve, dim 256, 101 pts", ts, tp, max_delta);
  }

  {
    const int saved = max_threads();
    VerificationReport serial_rep, parallel_rep;
    const double ts = time_of([&] {
      set_threads(1);
      serial_rep = check_chain(400, 7, {2, 3, 4});
    }, 1);
    set_threads(saved);
    const double tp = time_of([&] { parallel_rep = check_chain(400, 7, {2, 3, 4}); }, 1);
    row("check_chain, 400 trials", ts, tp,
        std::abs(serial_rep.worst_margin - parallel_rep.worst_margin));
  }

  return 0;
}
