#include "qht/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "qht/parallel.hpp"

namespace qht {

double SpectralDecomposition::support_tol() const {
  const double max_abs =
      eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
  return static_cast<double>(dim()) * 1e-12 * max_abs;
}

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

Matrix SpectralDecomposition::apply(const RealVector& mapped) const {
  return eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
}

double hermiticity_gap(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

namespace {

bool exactly_diagonal(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (i != j && m(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

// Diagonal input: eigenpairs are the diagonal entries and coordinate
// vectors, so skip the O(d^3) solve. Matters for commuting states, where
// tensor powers stay diagonal at dimension d^n.
SpectralDecomposition eigh_diagonal(const Matrix& m) {
  const Index d = m.rows();
  std::vector<Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return m(a, a).real() > m(b, b).real();
  });
  SpectralDecomposition sd;
  sd.eigenvalues.resize(d);
  sd.eigenvectors = Matrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) {
    sd.eigenvalues[k] = m(order[static_cast<std::size_t>(k)],
                          order[static_cast<std::size_t>(k)])
                            .real();
    sd.eigenvectors(order[static_cast<std::size_t>(k)], k) = 1.0;
  }
  return sd;
}

}  // namespace

SpectralDecomposition eigh(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw NonHermitianInput("eigh: matrix is not square");
  }
  const double scale = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  if (hermiticity_gap(m) > 1e-12 * std::max(1.0, scale)) {
    throw NonHermitianInput("eigh: input exceeds Hermitian symmetry tolerance");
  }
  if (exactly_diagonal(m)) {
    return eigh_diagonal(m);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(m));
  if (solver.info() != Eigen::Success) {
    throw Error("eigh: eigensolver failed to converge");
  }
  // Eigen sorts ascending; flip to descending.
  SpectralDecomposition sd;
  sd.eigenvalues = solver.eigenvalues().reverse();
  sd.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return sd;
}

Matrix matrix_power(const Matrix& m, double t) {
  return matrix_power(eigh(m), t);
}

Matrix matrix_power(const SpectralDecomposition& sd, double t) {
  const double tol = sd.support_tol();
  if (sd.eigenvalues.size() > 0 && sd.eigenvalues.minCoeff() < -tol) {
    throw NegativeEigenvalue("matrix_power: input is not positive semi-definite");
  }
  RealVector mapped(sd.dim());
  for (Index i = 0; i < sd.dim(); ++i) {
    mapped[i] = scalar_power(sd.eigenvalues[i], t, tol);
  }
  return sd.apply(mapped);
}

Matrix positive_part(const Matrix& m) { return positive_part(eigh(m)); }

Matrix positive_part(const SpectralDecomposition& sd) {
  RealVector mapped = sd.eigenvalues.cwiseMax(0.0);
  return sd.apply(mapped);
}

Matrix range_projector(const Matrix& m) { return range_projector(eigh(m)); }

Matrix range_projector(const SpectralDecomposition& sd) {
  const double tol = sd.support_tol();
  RealVector mapped(sd.dim());
  for (Index i = 0; i < sd.dim(); ++i) {
    mapped[i] = sd.eigenvalues[i] > tol ? 1.0 : 0.0;
  }
  return sd.apply(mapped);
}

double trace_norm(const Matrix& m) {
  return eigh(m).eigenvalues.cwiseAbs().sum();
}

Matrix support_projection(const Matrix& m) {
  SpectralDecomposition sd = eigh(m);
  const double tol = sd.support_tol();
  if (sd.eigenvalues.size() > 0 && sd.eigenvalues.minCoeff() < -tol) {
    throw NegativeEigenvalue("support_projection: input is not positive semi-definite");
  }
  return range_projector(sd);
}

Matrix support_log(const SpectralDecomposition& sd) {
  const double tol = sd.support_tol();
  RealVector mapped(sd.dim());
  for (Index i = 0; i < sd.dim(); ++i) {
    mapped[i] = sd.eigenvalues[i] > tol ? std::log(sd.eigenvalues[i]) : 0.0;
  }
  return sd.apply(mapped);
}

std::size_t default_dim_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("QHT_DIM_CAP")) {
      const long parsed = std::strtol(env, nullptr, 10);
      if (parsed > 0) return static_cast<std::size_t>(parsed);
    }
    return std::size_t{4096};
  }();
  return cap;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Index ar = a.rows(), ac = a.cols();
  const Index br = b.rows(), bc = b.cols();
  Matrix out(ar * br, ac * bc);
  // Column-major fill; each output column belongs to one iteration.
  parallel_for(ac * bc, [&](std::size_t c) {
    const Index j = static_cast<Index>(c) / bc;
    const Index l = static_cast<Index>(c) % bc;
    for (Index i = 0; i < ar; ++i) {
      const Complex aij = a(i, j);
      for (Index k = 0; k < br; ++k) {
        out(i * br + k, static_cast<Index>(c)) = aij * b(k, l);
      }
    }
  });
  return out;
}

Matrix tensor_power(const Matrix& m, int n, std::size_t cap) {
  if (n < 1) throw Error("tensor_power: n must be positive");
  if (m.rows() != m.cols()) throw DimensionMismatch("tensor_power: matrix not square");
  std::size_t out_dim = 1;
  for (int k = 0; k < n; ++k) {
    out_dim *= static_cast<std::size_t>(m.rows());
    if (out_dim > cap) {
      throw DimensionCapExceeded("tensor_power: dim^" + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
    }
  }
  Matrix out = m;
  for (int k = 1; k < n; ++k) {
    out = kron(out, m);
  }
  return out;
}

Matrix partial_trace(const Matrix& m, Subsystem traced_out, Index dim_a, Index dim_b) {
  if (m.rows() != m.cols() || m.rows() != dim_a * dim_b) {
    throw DimensionMismatch("partial_trace: dims inconsistent with matrix size");
  }
  if (traced_out == Subsystem::Second) {
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (Index a = 0; a < dim_a; ++a) {
      for (Index a2 = 0; a2 < dim_a; ++a2) {
        Complex sum = 0.0;
        for (Index b = 0; b < dim_b; ++b) {
          sum += m(a * dim_b + b, a2 * dim_b + b);
        }
        out(a, a2) = sum;
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (Index b = 0; b < dim_b; ++b) {
    for (Index b2 = 0; b2 < dim_b; ++b2) {
      Complex sum = 0.0;
      for (Index a = 0; a < dim_a; ++a) {
        sum += m(a * dim_b + b, a * dim_b + b2);
      }
      out(b, b2) = sum;
    }
  }
  return out;
}

}  // namespace qht
