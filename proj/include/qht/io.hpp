#ifndef QHT_IO_HPP
#define QHT_IO_HPP

#include <string>

#include "qht/states.hpp"

namespace qht {

// State files are JSON with explicit [re, im] entry pairs:
//   {"dim": 2, "matrix": [[[0.5, 0.0], [0.0, 0.0]], ...]}
// Numbers are written with 17 significant digits so a dump re-parses to the
// same doubles.

// Throws FileNotFound / ParseError; the parsed matrix is then validated as
// a density matrix (NotPSD / TraceNotOne / NonHermitianInput propagate).
DensityMatrix load_state(const std::string& path);

// Parses without density validation (any Hermitian matrix).
Matrix load_matrix(const std::string& path);

void save_state(const std::string& path, const Matrix& m);

std::string state_to_json(const Matrix& m);

// %.17g, with non-finite values rendered as "inf"/"-inf"/"nan".
std::string format_double(double x);

}  // namespace qht

#endif  // QHT_IO_HPP
