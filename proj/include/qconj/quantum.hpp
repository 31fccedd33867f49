#pragma once

// Complex vector/operator algebra on quantum states: inner products,
// transition probabilities, projectors, traces, norms, commutators and a
// Hermitian eigendecomposition. Free functions over Eigen expressions.

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "qconj/types.hpp"

namespace qconj {

template <class DA, class DB>
inline void require_same_dim(const Eigen::MatrixBase<DA>& a,
                             const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("dimension mismatch");
}

template <class D>
inline void require_square(const Eigen::MatrixBase<D>& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("square matrix required");
}

template <class D>
bool is_unit(const Eigen::MatrixBase<D>& psi, double tol = kUnitTol) {
  return std::abs(psi.squaredNorm() - 1.0) <= tol;
}

template <class D>
void require_unit(const Eigen::MatrixBase<D>& psi, double tol = kUnitTol) {
  if (!is_unit(psi, tol))
    throw std::invalid_argument("state vector is not unit-norm");
}

template <class D>
bool is_hermitian(const Eigen::MatrixBase<D>& a, double tol = kHermTol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// <a|b> = sum conj(a_i) b_i
template <class DA, class DB>
Complex inner_product(const Eigen::MatrixBase<DA>& a,
                      const Eigen::MatrixBase<DB>& b) {
  require_same_dim(a, b);
  return (a.adjoint() * b).value();
}

// |<psi|chi>|^2
template <class DA, class DB>
double transition_probability(const Eigen::MatrixBase<DA>& chi,
                              const Eigen::MatrixBase<DB>& psi) {
  return std::norm(inner_product(psi, chi));
}

// |psi><psi|
template <class D>
CMat projector(const Eigen::MatrixBase<D>& psi) {
  return psi * psi.adjoint();
}

template <class D>
Complex trace(const Eigen::MatrixBase<D>& a) {
  require_square(a);
  return a.trace();
}

template <class D>
double frobenius_norm(const Eigen::MatrixBase<D>& a) {
  return a.norm();
}

// Largest singular value; for Hermitian input the largest |eigenvalue|.
template <class D>
double spectral_norm(const Eigen::MatrixBase<D>& a) {
  require_square(a);
  if (a.rows() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(a.template cast<Complex>());
  return svd.singularValues()(0);
}

template <class DA, class DB>
CMat commutator(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  require_square(a);
  require_same_dim(a, b);
  return a * b - b * a;
}

template <class D>
CVec global_phase_multiply(const Eigen::MatrixBase<D>& psi, double phi) {
  return std::exp(Complex(0.0, phi)) * psi.template cast<Complex>();
}

struct EigenDecomposition {
  RVec eigenvalues;   // ascending
  CMat eigenvectors;  // column i pairs with eigenvalues(i)
};

// Spectral decomposition of a Hermitian matrix.
template <class D>
EigenDecomposition eig_hermitian(const Eigen::MatrixBase<D>& a,
                                 double herm_tol = 1e-10) {
  require_square(a);
  if (!is_hermitian(a, herm_tol))
    throw std::invalid_argument("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMat> solver(a.template cast<Complex>());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Hermitian eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// Density operator validity: Hermitian, unit trace, PSD.
template <class D>
bool is_density(const Eigen::MatrixBase<D>& rho) {
  if (rho.rows() != rho.cols()) return false;
  if (!is_hermitian(rho, kHermTol)) return false;
  if (std::abs(rho.trace() - Complex(1.0)) > kTraceTol) return false;
  Eigen::SelfAdjointEigenSolver<CMat> solver(rho.template cast<Complex>());
  if (solver.info() != Eigen::Success) return false;
  return solver.eigenvalues().minCoeff() >= kPsdFloor;
}

template <class D>
void require_density(const Eigen::MatrixBase<D>& rho) {
  if (!is_density(rho))
    throw std::invalid_argument("not a valid density operator");
}

// p(rho -> chi) = <chi|rho|chi>
template <class DR, class DC>
double expectation(const Eigen::MatrixBase<DR>& rho,
                   const Eigen::MatrixBase<DC>& chi) {
  require_density(rho);
  if (rho.rows() != chi.rows())
    throw std::invalid_argument("dimension mismatch");
  return (chi.adjoint() * rho * chi).value().real();
}

// <chi|A|chi> without density validation; real part.
template <class DA, class DC>
double expectation_raw(const Eigen::MatrixBase<DA>& a,
                       const Eigen::MatrixBase<DC>& chi) {
  return (chi.adjoint() * a * chi).value().real();
}

// Transition probability of two encoded states expanded in the probability
// amplitudes and the per-symbol phase differences gamma:
// sum_x p(x)q(x) + sum_{x != y} cos(gamma_x - gamma_y) sqrt(p(x)p(y)q(x)q(y)).
inline double expand_transition_probability(const RVec& p, const RVec& q,
                                            const RVec& gamma) {
  if (p.size() != q.size() || p.size() != gamma.size())
    throw std::invalid_argument("dimension mismatch");
  const auto n = p.size();
  double acc = p.dot(q);
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = 0; y < n; ++y) {
      if (x == y) continue;
      acc += std::cos(gamma(x) - gamma(y)) *
             std::sqrt(p(x) * p(y) * q(x) * q(y));
    }
  }
  return acc;
}

}  // namespace qconj
