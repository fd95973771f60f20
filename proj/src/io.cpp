#include "qht/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qht {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileNotFound("cannot open state file: " + path);
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  try {
    const Index dim = doc.at("dim").get<Index>();
    const auto& rows = doc.at("matrix");
    if (dim < 1 || static_cast<Index>(rows.size()) != dim) {
      throw ParseError("state file " + path + ": matrix shape does not match dim");
    }
    Matrix m(dim, dim);
    for (Index i = 0; i < dim; ++i) {
      const auto& row = rows.at(static_cast<std::size_t>(i));
      if (static_cast<Index>(row.size()) != dim) {
        throw ParseError("state file " + path + ": ragged matrix row");
      }
      for (Index j = 0; j < dim; ++j) {
        const auto& entry = row.at(static_cast<std::size_t>(j));
        if (entry.size() != 2) {
          throw ParseError("state file " + path + ": entries must be [re, im]");
        }
        m(i, j) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("state file " + path + ": " + e.what());
  }
}

DensityMatrix load_state(const std::string& path) {
  return validate_density(load_matrix(path));
}

std::string state_to_json(const Matrix& m) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << m.rows() << ",\n  \"matrix\": [\n";
  for (Index i = 0; i < m.rows(); ++i) {
    out << "    [";
    for (Index j = 0; j < m.cols(); ++j) {
      out << "[" << format_double(m(i, j).real()) << ", "
          << format_double(m(i, j).imag()) << "]";
      if (j + 1 < m.cols()) out << ", ";
    }
    out << "]" << (i + 1 < m.rows() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

void save_state(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw FileNotFound("cannot write state file: " + path);
  }
  out << state_to_json(m);
}

}  // namespace qht
