#ifndef QHT_REFERENCE_HPP
#define QHT_REFERENCE_HPP

#include <vector>

#include "qht/chernoff.hpp"

namespace qht {
namespace ref {

// Serial reference implementations of the parallel kernels. Kept for
// testing (the OpenMP paths must reproduce them) and for the benchmark
// target. Plain loops, no threading, no row blocking.

Matrix kron(const Matrix& a, const Matrix& b);

Matrix tensor_power(const Matrix& m, int n, std::size_t cap = default_dim_cap());

// Flat (i,j) accumulation of sum f_i g_j O_ij.
double weighted_overlap_sum(const Eigen::MatrixXd& overlap, const RealVector& f,
                            const RealVector& g);

double q_s(const SpectralPair& pair, double s);

std::vector<CurvePoint> qs_curve(const SpectralPair& pair, int points);

}  // namespace ref
}  // namespace qht

#endif  // QHT_REFERENCE_HPP
