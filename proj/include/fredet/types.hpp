#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace fredet {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Error taxonomy. The CLI maps anything derived from Error to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };      // bad call arguments
struct ConfigError : Error { using Error::Error; };      // bad configuration value
struct InvariantError : Error { using Error::Error; };   // violated data invariant
struct ParseError : Error { using Error::Error; };       // malformed input file
struct TruncationError : Error { using Error::Error; };  // read past a series truncation
struct SingularSeriesError : Error { using Error::Error; };

// Evaluation too close to a pole; carries the offending point.
struct PoleProximityError : Error {
  Complex at;
  PoleProximityError(const std::string& msg, Complex z) : Error(msg), at(z) {}
};

}  // namespace fredet
