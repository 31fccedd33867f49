#include <doctest.h>

#include <cmath>

#include "qconj/quantum.hpp"
#include "test_helpers.hpp"

using namespace qconj;
using qconj::testing::Rng;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
CVec ket(int i, int dim) {
  CVec v = CVec::Zero(dim);
  v(i) = 1.0;
  return v;
}
CVec plus_state() {
  CVec v(2);
  v << kInvSqrt2, kInvSqrt2;
  return v;
}
}  // namespace

TEST_CASE("inner product on basis and superposition states") {
  CHECK(inner_product(ket(0, 2), ket(0, 2)) == Complex(1.0, 0.0));
  CHECK(inner_product(ket(0, 2), ket(1, 2)) == Complex(0.0, 0.0));
  CHECK(inner_product(plus_state(), ket(0, 2)).real() ==
        doctest::Approx(kInvSqrt2).epsilon(1e-14));
  CHECK_THROWS_AS(inner_product(ket(0, 2), ket(0, 3)), std::invalid_argument);
}

TEST_CASE("inner product is conjugate symmetric") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    CVec a = testing::random_pure_state(rng, 4);
    CVec b = testing::random_pure_state(rng, 4);
    Complex ab = inner_product(a, b);
    Complex ba = inner_product(b, a);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-14);
  }
}

TEST_CASE("transition probability") {
  CHECK(transition_probability(plus_state(), ket(0, 2)) ==
        doctest::Approx(0.5).epsilon(1e-14));
  Rng rng(12);
  CVec psi = testing::random_pure_state(rng, 5);
  CHECK(transition_probability(psi, psi) == doctest::Approx(1.0).epsilon(1e-13));
  // Symmetry and range.
  for (int i = 0; i < 100; ++i) {
    CVec a = testing::random_pure_state(rng, 3);
    CVec b = testing::random_pure_state(rng, 3);
    double t1 = transition_probability(a, b);
    double t2 = transition_probability(b, a);
    CHECK(std::abs(t1 - t2) < 1e-14);
    CHECK(t1 >= 0.0);
    CHECK(t1 <= 1.0 + 1e-14);
  }
}

TEST_CASE("expanded transition probability closed cases") {
  RVec half(2), gamma0(2), gamma_pi(2);
  half << 0.5, 0.5;
  gamma0 << 0.0, 0.0;
  gamma_pi << 0.0, 3.14159265358979323846;
  CHECK(expand_transition_probability(half, half, gamma0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(expand_transition_probability(half, half, gamma_pi) ==
        doctest::Approx(0.0).epsilon(1e-14));
  RVec p(2), q(2);
  p << 1.0, 0.0;
  q << 0.0, 1.0;
  CHECK(expand_transition_probability(p, q, gamma_pi) == 0.0);
}

TEST_CASE("expectation value") {
  CMat half_mixed = 0.5 * CMat::Identity(2, 2);
  CHECK(expectation(half_mixed, ket(0, 2)) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CMat plus_proj = projector(plus_state());
  CHECK(expectation(plus_proj, plus_state()) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(expectation(plus_proj, ket(0, 2)) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(expectation(CMat::Identity(2, 2), ket(0, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(expectation(half_mixed, ket(0, 3)), std::invalid_argument);
}

TEST_CASE("trace") {
  CHECK(trace(CMat::Identity(2, 2)) == Complex(2.0, 0.0));
  Rng rng(13);
  CVec psi = testing::random_pure_state(rng, 4);
  CHECK(trace(projector(psi)).real() == doctest::Approx(1.0).epsilon(1e-13));
  // Cyclic invariance.
  CMat a = testing::random_density(rng, 3);
  CMat b = testing::random_density(rng, 3);
  CHECK(std::abs(trace(a * b) - trace(b * a)) < 1e-13);
}

TEST_CASE("trace of density products stays in [0,1] and is real") {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    CMat rho = testing::random_density(rng, 3);
    CMat sigma = testing::random_density(rng, 3);
    Complex t = trace(rho * sigma);
    CHECK(t.real() >= -1e-12);
    CHECK(t.real() <= 1.0 + 1e-12);
    CHECK(std::abs(t.imag()) < 1e-12);
  }
}

TEST_CASE("frobenius norm") {
  CHECK(frobenius_norm(CMat::Zero(3, 3)) == 0.0);
  CHECK(frobenius_norm(CMat::Identity(4, 4)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  Rng rng(15);
  CVec psi = testing::random_pure_state(rng, 5);
  CMat p = projector(psi);
  CHECK(frobenius_norm(p) == doctest::Approx(1.0).epsilon(1e-13));
  CMat a = testing::random_density(rng, 4);
  CHECK(frobenius_norm(a) ==
        doctest::Approx(std::sqrt((a.adjoint() * a).trace().real()))
            .epsilon(1e-13));
}

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(CMat::Identity(3, 3)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CMat d = CMat::Zero(2, 2);
  d(0, 0) = 0.3;
  d(1, 1) = -0.7;
  CHECK(spectral_norm(d) == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("commutator") {
  Rng rng(16);
  CMat a = testing::random_density(rng, 3);
  CHECK(commutator(CMat::Identity(3, 3), a).norm() < 1e-15);
  CHECK(commutator(a, a).norm() < 1e-15);
  // [|x+><x+|, |z+><z+|] = 1/2 [[0,-1],[1,0]]
  CVec xp = plus_state();
  CMat c = commutator(projector(xp), projector(ket(0, 2)));
  CHECK(std::abs(c(0, 0)) < 1e-15);
  CHECK(std::abs(c(1, 1)) < 1e-15);
  CHECK(std::abs(c(0, 1) - Complex(-0.5)) < 1e-15);
  CHECK(std::abs(c(1, 0) - Complex(0.5)) < 1e-15);
  CHECK(spectral_norm(c) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("Hermitian eigendecomposition") {
  CMat d = CMat::Zero(2, 2);
  d(0, 0) = 0.2;
  d(1, 1) = 0.8;
  auto eig = eig_hermitian(d);
  CHECK(eig.eigenvalues(0) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(eig.eigenvalues(1) == doctest::Approx(0.8).epsilon(1e-14));

  auto eig_plus = eig_hermitian(projector(plus_state()));
  CHECK(eig_plus.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(eig_plus.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-13));

  Rng rng(17);
  CMat h = CMat::Random(4, 4);
  h = (0.5 * (h + h.adjoint())).eval();
  auto e = eig_hermitian(h);
  CMat rebuilt = CMat::Zero(4, 4);
  for (int i = 0; i < 4; ++i)
    rebuilt += e.eigenvalues(i) *
               (e.eigenvectors.col(i) * e.eigenvectors.col(i).adjoint());
  CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((e.eigenvectors.adjoint() * e.eigenvectors - CMat::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-9);

  CMat nh = CMat::Zero(2, 2);
  nh(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(nh), std::invalid_argument);
}

TEST_CASE("density operator spectra") {
  Rng rng(18);
  for (int i = 0; i < 100; ++i) {
    CMat rho = testing::random_density(rng, 4);
    REQUIRE(is_density(rho));
    auto e = eig_hermitian(rho);
    CHECK(e.eigenvalues.minCoeff() >= -1e-10);
    CHECK(e.eigenvalues.sum() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("global phase multiplication") {
  CVec zero = ket(0, 2);
  CHECK((global_phase_multiply(zero, 0.0) - zero).norm() < 1e-15);
  CVec flipped = global_phase_multiply(zero, 3.14159265358979323846);
  CHECK(std::abs(flipped(0) - Complex(-1.0)) < 1e-15);
  CHECK(expectation(projector(zero), flipped) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CVec rotated = global_phase_multiply(plus_state(), 3.14159265358979323846 / 3.0);
  CHECK(transition_probability(rotated, zero) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("computational-basis completeness") {
  Rng rng(19);
  CVec psi = testing::random_pure_state(rng, 6);
  double total = 0.0;
  for (int x = 0; x < 6; ++x)
    total += transition_probability(psi, ket(x, 6));
  CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("projector and its complement sum to one") {
  Rng rng(20);
  CVec psi = testing::random_pure_state(rng, 4);
  CVec chi = testing::random_pure_state(rng, 4);
  CMat p = projector(psi);
  CMat p_perp = CMat::Identity(4, 4) - p;
  double total = expectation_raw(p, chi) + expectation_raw(p_perp, chi);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
}
