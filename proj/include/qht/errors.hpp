#ifndef QHT_ERRORS_HPP
#define QHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qht {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonHermitianInput : Error {
  using Error::Error;
};
struct NegativeEigenvalue : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct DimensionCapExceeded : Error {
  using Error::Error;
};
struct NotPSD : Error {
  using Error::Error;
};
struct TraceNotOne : Error {
  using Error::Error;
};
struct ZeroVector : Error {
  using Error::Error;
};
struct NotNormalized : Error {
  using Error::Error;
};
struct OrthogonalHypotheses : Error {
  using Error::Error;
};
struct NotFaithful : Error {
  using Error::Error;
};
struct SOutOfRange : Error {
  using Error::Error;
};
struct SupportTooLarge : Error {
  using Error::Error;
};
struct InfiniteExponentRegion : Error {
  using Error::Error;
};
struct FileNotFound : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qht

#endif  // QHT_ERRORS_HPP
