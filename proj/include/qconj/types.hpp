#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qconj {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using Qubit = Eigen::Vector2cd;
using QubitOp = Eigen::Matrix2cd;
using BlochVector = Eigen::Vector3d;

// Numerical tolerances used across validation.
inline constexpr double kUnitTol = 1e-12;
inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;
inline constexpr double kProbSumTol = 1e-9;
inline constexpr double kProbNegClamp = -1e-12;

// Classification outcome of the five-projector rule.
enum class Label { Min = 0, Max = 1, Rising = 2, Falling = 3, Constant = 4 };

inline const char* to_string(Label l) {
  switch (l) {
    case Label::Min: return "MIN";
    case Label::Max: return "MAX";
    case Label::Rising: return "RISING";
    case Label::Falling: return "FALLING";
    case Label::Constant: return "CONSTANT";
  }
  return "?";
}

inline Label label_from_string(const std::string& s) {
  if (s == "MIN") return Label::Min;
  if (s == "MAX") return Label::Max;
  if (s == "RISING") return Label::Rising;
  if (s == "FALLING") return Label::Falling;
  if (s == "CONSTANT") return Label::Constant;
  throw std::invalid_argument("unknown label: " + s);
}

// Error categories mapped onto CLI exit codes.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DistributionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SignalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qconj
