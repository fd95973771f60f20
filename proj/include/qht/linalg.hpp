#ifndef QHT_LINALG_HPP
#define QHT_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

#include "qht/errors.hpp"

namespace qht {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Probability-support threshold on the classical side; aligned with the
// matrix-side clamp so mapped supports agree with operator supports.
inline constexpr double kProbTol = 1e-12;

// Eigenvalues + orthonormal eigenvectors of a Hermitian matrix, eigenvalues
// sorted descending. Backbone of every matrix function in the toolkit.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Index dim() const { return eigenvalues.size(); }

  // Eigenvalue clamp threshold: dim * 1e-12 * max|eigenvalue|. Shared by
  // positive_part, range_projector and support_projection so that the
  // support logic is consistent everywhere.
  double support_tol() const;

  Matrix reconstruct() const;

  // V diag(f(lambda)) V^dagger.
  Matrix apply(const RealVector& mapped) const;
};

double hermiticity_gap(const Matrix& m);
Matrix hermitize(const Matrix& m);

// Spectral decomposition of a Hermitian matrix. The input is explicitly
// hermitized before solving; throws NonHermitianInput if the symmetry gap
// exceeds tolerance. Exactly diagonal inputs take a fast path (sort only).
SpectralDecomposition eigh(const Matrix& m);

// x^e for spectral formulas: eigenvalues within tol of zero count as zero,
// and e == 0 maps the support to 1 (so A^0 = supp A).
inline double scalar_power(double x, double e, double tol) {
  if (x <= tol) return 0.0;
  if (e == 0.0) return 1.0;
  return std::pow(x, e);
}

// m^t for PSD m and t in [0,1]; t = 0 yields the support projection.
// Throws NegativeEigenvalue if an eigenvalue is below -tol.
Matrix matrix_power(const Matrix& m, double t);
Matrix matrix_power(const SpectralDecomposition& sd, double t);

// Jordan positive part (|A| + A)/2.
Matrix positive_part(const Matrix& m);
Matrix positive_part(const SpectralDecomposition& sd);

// Projector onto the span of eigenvectors with eigenvalue > tol. Zero
// eigenvalues are excluded (strictly-positive rule).
Matrix range_projector(const Matrix& m);
Matrix range_projector(const SpectralDecomposition& sd);

// Sum of absolute eigenvalues (Hermitian input).
double trace_norm(const Matrix& m);

// Projector onto the support of a PSD matrix.
Matrix support_projection(const Matrix& m);

// Matrix log restricted to the support: sum over eigenvalues > tol of
// log(lambda) |x><x|.
Matrix support_log(const SpectralDecomposition& sd);

std::size_t default_dim_cap();

Matrix kron(const Matrix& a, const Matrix& b);
Matrix tensor_power(const Matrix& m, int n, std::size_t cap = default_dim_cap());

enum class Subsystem { First, Second };

// Partial trace over the named subsystem of a matrix on A (x) B.
Matrix partial_trace(const Matrix& m, Subsystem traced_out, Index dim_a, Index dim_b);

}  // namespace qht

#endif  // QHT_LINALG_HPP
