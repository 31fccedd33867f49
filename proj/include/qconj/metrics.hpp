#pragma once

// Distance functions: the transition-probability distance
// D(rho,sigma) = sqrt(1 - tr(rho sigma)), Euclidean operator distance,
// Euclidean distance of the principal system, Bhattacharyya distance and
// fidelity, and the table of classical probability-distribution distances.

#include <algorithm>
#include <cmath>
#include <limits>

#include "qconj/quantum.hpp"
#include "qconj/types.hpp"

namespace qconj {

// D(rho, sigma) = sqrt(1 - tr(rho sigma)); triangle inequality on all
// density operators, metric on pure states.
template <class DA, class DB>
double no_name_distance(const Eigen::MatrixBase<DA>& rho,
                        const Eigen::MatrixBase<DB>& sigma) {
  require_density(rho);
  require_density(sigma);
  require_same_dim(rho, sigma);
  double t = (rho * sigma).trace().real();
  return std::sqrt(std::clamp(1.0 - t, 0.0, 1.0));
}

// D on pure states: sqrt(1 - |<psi|xi>|^2). Global-phase invariant.
template <class DA, class DB>
double no_name_distance_pure(const Eigen::MatrixBase<DA>& psi,
                             const Eigen::MatrixBase<DB>& xi) {
  require_unit(psi);
  require_unit(xi);
  double t = transition_probability(psi, xi);
  return std::sqrt(std::clamp(1.0 - t, 0.0, 1.0));
}

// Frobenius norm of A - B.
template <class DA, class DB>
double euclidean_operator_distance(const Eigen::MatrixBase<DA>& a,
                                   const Eigen::MatrixBase<DB>& b) {
  require_same_dim(a, b);
  return (a - b).norm();
}

// ||psi - xi|| = sqrt(2 (1 - Re<xi|psi>)) for unit vectors. Not phase
// invariant: distinguishes psi from -psi.
template <class DA, class DB>
double principal_euclidean_distance(const Eigen::MatrixBase<DA>& psi,
                                    const Eigen::MatrixBase<DB>& xi) {
  require_same_dim(psi, xi);
  require_unit(psi);
  require_unit(xi);
  double re = inner_product(xi, psi).real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - re)));
}

// Sum of Bhattacharyya coefficients, f(p,q) = sum sqrt(p(x) q(x)).
inline double fidelity(const RVec& p, const RVec& q) {
  if (p.size() != q.size()) throw std::invalid_argument("length mismatch");
  return p.cwiseMax(0.0).cwiseProduct(q.cwiseMax(0.0)).cwiseSqrt().sum();
}

// d(p,q) = sqrt(1 - sum sqrt(p(x) q(x)))
inline double bhattacharyya_distance(const RVec& p, const RVec& q) {
  return std::sqrt(std::clamp(1.0 - fidelity(p, q), 0.0, 1.0));
}

// Classical distance table. Entropy-based rows use base-2 logarithms.
struct DistanceReport {
  double euclidean_prob = 0.0;
  double trace_variational = 0.0;
  double rel_chi2 = 0.0;
  double kl_divergence = 0.0;  // may be +infinity
  double jensen_shannon = 0.0;
  double bhattacharyya_dist = 0.0;  // table form 1 - sum sqrt(pq)
  double fidelity = 0.0;
};

inline double shannon_entropy(const RVec& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) > 0.0) h -= p(i) * std::log2(p(i));
  return h;
}

inline DistanceReport classical_distances(const RVec& p, const RVec& q) {
  if (p.size() != q.size()) throw std::invalid_argument("length mismatch");
  DistanceReport r;
  r.euclidean_prob = (p - q).norm();
  r.trace_variational = (p - q).lpNorm<1>();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    double s = p(i) + q(i);
    if (s > 0.0) {
      double d = p(i) - q(i);
      r.rel_chi2 += d * d / (2.0 * s);
    }
    // KL conventions: 0 log(0/q) = 0, p log(p/0) = +inf.
    if (p(i) > 0.0) {
      if (q(i) > 0.0)
        r.kl_divergence += p(i) * std::log2(p(i) / q(i));
      else
        r.kl_divergence = std::numeric_limits<double>::infinity();
    }
  }
  r.jensen_shannon = shannon_entropy(0.5 * (p + q)) -
                     0.5 * (shannon_entropy(p) + shannon_entropy(q));
  r.fidelity = fidelity(p, q);
  r.bhattacharyya_dist = 1.0 - r.fidelity;
  return r;
}

// Angle omega between the real nonnegative encodings:
// cos(omega) = sum sqrt(pq), D = sin(omega), ||.|| = 2 sin(omega/2).
struct AngleRelations {
  double omega = 0.0;
  double sin_omega = 0.0;
  double two_sin_half = 0.0;
};

inline AngleRelations angle_relations(const RVec& p, const RVec& q) {
  double c = std::clamp(fidelity(p, q), -1.0, 1.0);
  AngleRelations r;
  r.omega = std::acos(c);
  r.sin_omega = std::sqrt(std::max(0.0, 1.0 - c * c));
  r.two_sin_half = 2.0 * std::sin(r.omega / 2.0);
  return r;
}

}  // namespace qconj
