#pragma once

// Quantum encoding of probability distributions with phase information,
// decoding via computational-basis projectors, and the Bloch-sphere
// representation of qubits and single-qubit density operators.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qconj/quantum.hpp"
#include "qconj/types.hpp"

namespace qconj {

// Validates a probability distribution in place: entries >= -1e-12 are
// clamped to zero, the sum must be 1 within 1e-9.
inline RVec validate_prob(RVec p) {
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < 0.0) {
      if (p(i) < kProbNegClamp)
        throw DistributionError("negative probability weight");
      p(i) = 0.0;
    }
  }
  double s = p.sum();
  if (std::abs(s - 1.0) > kProbSumTol)
    throw DistributionError("probabilities sum to " + std::to_string(s) +
                            ", expected 1");
  return p;
}

// E(p, C): amplitude at x is sqrt(p(x)) e^{i phi_x}. The result is
// normalized to exact unit norm.
inline CVec encode(const RVec& p, const RVec& phases) {
  if (p.size() != phases.size())
    throw std::invalid_argument("length mismatch between weights and phases");
  RVec pv = validate_prob(p);
  CVec psi(pv.size());
  for (Eigen::Index i = 0; i < pv.size(); ++i)
    psi(i) = std::sqrt(pv(i)) * std::exp(Complex(0.0, phases(i)));
  psi.normalize();
  return psi;
}

// Nonnegative-real encoding (all phases zero).
inline CVec encode_real(const RVec& p) {
  return encode(p, RVec::Zero(p.size()));
}

// Measurement in the computational basis: weights |alpha_x|^2.
inline RVec decode(const CVec& psi) {
  require_unit(psi);
  return psi.cwiseAbs2();
}

// Bloch vector of a pure qubit; invariant under global phase.
inline BlochVector bloch_from_qubit(const Qubit& psi) {
  require_unit(psi);
  double theta = 2.0 * std::atan2(std::abs(psi(1)), std::abs(psi(0)));
  double phi = 0.0;
  // phi is undefined at the poles; fix it to 0 there.
  if (std::abs(psi(0)) > 0.0 && std::abs(psi(1)) > 0.0) {
    phi = std::arg(psi(1)) - std::arg(psi(0));
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  }
  return {std::cos(phi) * std::sin(theta), std::sin(phi) * std::sin(theta),
          std::cos(theta)};
}

// Bloch vector read off rho = 1/2 [[1+z, x-iy], [x+iy, 1-z]].
inline BlochVector bloch_from_density(const QubitOp& rho) {
  require_density(rho);
  return {2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(),
          (rho(0, 0) - rho(1, 1)).real()};
}

// Closed form for qubit encodings:
// D^2 = 1 - px qx - py qy - 2 cos(dgamma) sqrt(px py qx qy).
inline double qubit_distance(double px, double qx, double dgamma) {
  double py = 1.0 - px, qy = 1.0 - qx;
  double d2 = 1.0 - px * qx - py * qy -
              2.0 * std::cos(dgamma) * std::sqrt(px * py * qx * qy);
  return std::sqrt(std::clamp(d2, 0.0, 1.0));
}

enum class SurfaceMode { FixP, FixPhase, PEqualsQ };

// Grid of D values for the three qubit surface plots. Axes sample
// probabilities uniformly on [0,1] and phase differences on [0,pi].
struct SurfaceGrid {
  std::string row_name, col_name;
  RVec row_axis, col_axis;
  RMat values;  // values(i,j) at (row_axis(i), col_axis(j))
};

inline SurfaceGrid qubit_distance_surface(SurfaceMode mode, double fixed,
                                          int resolution) {
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  auto lin = [resolution](double lo, double hi) {
    return RVec::LinSpaced(resolution, lo, hi);
  };
  const double pi = std::numbers::pi;
  SurfaceGrid g;
  switch (mode) {
    case SurfaceMode::FixP:
      if (fixed < 0.0 || fixed > 1.0)
        throw std::invalid_argument("fixed p(x) must lie in [0,1]");
      g.row_name = "dgamma";
      g.col_name = "qx";
      g.row_axis = lin(0.0, pi);
      g.col_axis = lin(0.0, 1.0);
      break;
    case SurfaceMode::FixPhase:
      g.row_name = "px";
      g.col_name = "qx";
      g.row_axis = lin(0.0, 1.0);
      g.col_axis = lin(0.0, 1.0);
      break;
    case SurfaceMode::PEqualsQ:
      g.row_name = "dgamma";
      g.col_name = "px";
      g.row_axis = lin(0.0, pi);
      g.col_axis = lin(0.0, 1.0);
      break;
  }
  g.values.resize(resolution, resolution);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      double d = 0.0;
      switch (mode) {
        case SurfaceMode::FixP:
          d = qubit_distance(fixed, g.col_axis(j), g.row_axis(i));
          break;
        case SurfaceMode::FixPhase:
          d = qubit_distance(g.row_axis(i), g.col_axis(j), fixed);
          break;
        case SurfaceMode::PEqualsQ:
          d = qubit_distance(g.col_axis(j), g.col_axis(j), g.row_axis(i));
          break;
      }
      g.values(i, j) = d;
    }
  }
  return g;
}

}  // namespace qconj
