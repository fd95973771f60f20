#include "qht/reference.hpp"

#include <string>

namespace qht {
namespace ref {

Matrix kron(const Matrix& a, const Matrix& b) {
  const Index ar = a.rows(), ac = a.cols();
  const Index br = b.rows(), bc = b.cols();
  Matrix out(ar * br, ac * bc);
  for (Index j = 0; j < ac; ++j) {
    for (Index l = 0; l < bc; ++l) {
      for (Index i = 0; i < ar; ++i) {
        for (Index k = 0; k < br; ++k) {
          out(i * br + k, j * bc + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

Matrix tensor_power(const Matrix& m, int n, std::size_t cap) {
  if (n < 1) throw Error("ref::tensor_power: n must be positive");
  std::size_t out_dim = 1;
  for (int k = 0; k < n; ++k) {
    out_dim *= static_cast<std::size_t>(m.rows());
    if (out_dim > cap) {
      throw DimensionCapExceeded("ref::tensor_power: dim^n exceeds cap " +
                                 std::to_string(cap));
    }
  }
  Matrix out = m;
  for (int k = 1; k < n; ++k) {
    out = kron(out, m);
  }
  return out;
}

double weighted_overlap_sum(const Eigen::MatrixXd& overlap, const RealVector& f,
                            const RealVector& g) {
  double total = 0.0;
  for (Index i = 0; i < overlap.rows(); ++i) {
    for (Index j = 0; j < overlap.cols(); ++j) {
      total += f[i] * g[j] * overlap(i, j);
    }
  }
  return total;
}

double q_s(const SpectralPair& pair, double s) {
  RealVector f(pair.rho.eigenvalues.size());
  RealVector g(pair.sigma.eigenvalues.size());
  for (Index i = 0; i < f.size(); ++i) {
    f[i] = scalar_power(pair.rho.eigenvalues[i], 1.0 - s, pair.rho_tol);
  }
  for (Index j = 0; j < g.size(); ++j) {
    g[j] = scalar_power(pair.sigma.eigenvalues[j], s, pair.sigma_tol);
  }
  return weighted_overlap_sum(pair.overlap, f, g);
}

std::vector<CurvePoint> qs_curve(const SpectralPair& pair, int points) {
  std::vector<CurvePoint> curve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double s = static_cast<double>(k) / (points - 1);
    curve[static_cast<std::size_t>(k)] = {s, q_s(pair, s)};
  }
  return curve;
}

}  // namespace ref
}  // namespace qht
