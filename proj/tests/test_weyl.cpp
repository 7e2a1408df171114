#include "cliffsplit/weyl.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"

using namespace cliffsplit;

namespace {

double dist(const CMat& a, const CMat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Smallest distance from lambda to any power of tau(n); the composition
// scalars must always be 2N-th roots of the form tau^e.
double tau_power_distance(i64 n, Complex lambda) {
  double best = 1e300;
  Complex t = tau(n);
  Complex power = 1.0;
  for (i64 e = 0; e < 2 * n; ++e) {
    best = std::min(best, std::abs(lambda - power));
    power *= t;
  }
  return best;
}

}  // namespace

TEST_CASE("phases") {
  CHECK(std::abs(omega(4) - Complex(0.0, 1.0)) < 1e-12);
  CHECK(std::abs(omega(2) - Complex(-1.0, 0.0)) < 1e-12);
  for (i64 n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(std::abs(tau(n) - (-std::exp(Complex(0.0, M_PI / n)))) < 1e-12);
    // tau^2 = omega and tau^{2N} = 1.
    CHECK(std::abs(tau(n) * tau(n) - omega(n)) < 1e-12);
    CHECK(std::abs(std::pow(tau(n), 2 * n) - Complex(1.0, 0.0)) < 1e-10);
  }
}

TEST_CASE("shift and clock matrices") {
  CMat x = pauli_x(3);
  // X|j> = |j-1 mod 3>: column j has its 1 in row j-1.
  CHECK(std::abs(x(2, 0) - 1.0) < 1e-12);
  CHECK(std::abs(x(0, 1) - 1.0) < 1e-12);
  CHECK(std::abs(x(1, 2) - 1.0) < 1e-12);
  CHECK(std::abs(x(0, 0)) < 1e-12);

  CMat z = pauli_z(3);
  CHECK(std::abs(z(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(z(1, 1) - omega(3)) < 1e-12);
  CHECK(std::abs(z(2, 2) - omega(3) * omega(3)) < 1e-12);
  CHECK(std::abs(z(0, 1)) < 1e-12);

  for (i64 n = 2; n <= 8; ++n) {
    CAPTURE(n);
    auto [xx, zz] = pauli_matrices(n);
    CHECK(is_unitary(xx));
    CHECK(is_unitary(zz));
    // X Z = omega Z X.
    CHECK(dist(xx * zz, omega(n) * zz * xx) < kWeylTolerance);
    // X^N = Z^N = I.
    CMat xpow = CMat::Identity(n, n);
    CMat zpow = CMat::Identity(n, n);
    for (i64 i = 0; i < n; ++i) {
      xpow = xpow * xx;
      zpow = zpow * zz;
    }
    CHECK(dist(xpow, CMat::Identity(n, n)) < kWeylTolerance);
    CHECK(dist(zpow, CMat::Identity(n, n)) < kWeylTolerance);
  }
  CHECK_THROWS_AS(pauli_x(1), std::invalid_argument);
  CHECK_THROWS_AS(pauli_z(kWeylMaxDim + 1), std::invalid_argument);
}

TEST_CASE("Weyl operators") {
  for (i64 n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto [x, z] = pauli_matrices(n);
    for (i64 k = 0; k < n; ++k) {
      for (i64 ell = 0; ell < n; ++ell) {
        // W(k,l) = tau^{kl} X^k Z^l, compared entry-by-entry.
        CMat direct = CMat::Identity(n, n);
        for (i64 i = 0; i < k; ++i) direct = direct * x;
        for (i64 i = 0; i < ell; ++i) direct = direct * z;
        direct *= std::pow(tau(n), static_cast<double>(k * ell));
        CHECK(dist(weyl(n, k, ell), direct) < 1e-9);
        CHECK(is_unitary(weyl(n, k, ell)));
      }
    }
    CHECK(dist(weyl(n, 0, 0), CMat::Identity(n, n)) < kWeylTolerance);
    CHECK(dist(weyl(n, 1, 0), x) < kWeylTolerance);
    CHECK(dist(weyl(n, 0, 1), z) < kWeylTolerance);
  }
}

TEST_CASE("Weyl operators have order N") {
  for (i64 n = 2; n <= 8; ++n) {
    for (i64 k = 0; k < n; ++k) {
      for (i64 ell = 0; ell < n; ++ell) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(ell);
        CMat w = weyl(n, k, ell);
        CMat power = CMat::Identity(n, n);
        for (i64 i = 0; i < n; ++i) power = power * w;
        CHECK(dist(power, CMat::Identity(n, n)) < 1e-9);
      }
    }
  }
}

TEST_CASE("index shifts by N flip signs for even N") {
  for (i64 n : {2, 4, 6}) {
    for (i64 k = 0; k < n; ++k) {
      for (i64 ell = 0; ell < n; ++ell) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(ell);
        double sign_k = (k % 2 == 0) ? 1.0 : -1.0;
        double sign_l = (ell % 2 == 0) ? 1.0 : -1.0;
        CHECK(dist(weyl(n, k + n, ell), sign_l * weyl(n, k, ell)) < 1e-9);
        CHECK(dist(weyl(n, k, ell + n), sign_k * weyl(n, k, ell)) < 1e-9);
      }
    }
  }
  // Negative indices reduce modulo 2N consistently.
  CHECK(dist(weyl(4, -1, -1), weyl(4, 3, 3)) < 1e-10);
  CHECK(dist(weyl(4, -1, 0), weyl(4, 3, 0)) < 1e-10);
}

TEST_CASE("proportionality detection") {
  CMat f = fourier_matrix(4);
  Complex lambda;
  CHECK(approx_proportional(Complex(0.6, 0.8) * f, f, kWeylTolerance,
                            &lambda));
  CHECK(std::abs(lambda - Complex(0.6, 0.8)) < 1e-10);
  CHECK(approx_proportional(f, f));
  CHECK_FALSE(approx_proportional(f, pauli_x(4)));
  CHECK_FALSE(approx_proportional(pauli_x(4), pauli_z(4)));
}

TEST_CASE("composition scalars are powers of tau and obey the swap ratio") {
  for (i64 n : {2, 3, 4, 5, 6}) {
    for (i64 k = 0; k < n; ++k) {
      for (i64 ell = 0; ell < n; ++ell) {
        for (i64 p = 0; p < n; ++p) {
          for (i64 q = 0; q < n; ++q) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(ell);
            CAPTURE(p);
            CAPTURE(q);
            Complex fwd = weyl_compose_phase(n, {k, ell}, {p, q});
            CHECK(std::abs(std::abs(fwd) - 1.0) < 1e-10);
            CHECK(tau_power_distance(n, fwd) < 1e-9);
            // lambda(u,w) / lambda(w,u) = omega^{k q - l p}.
            Complex bwd = weyl_compose_phase(n, {p, q}, {k, ell});
            Complex expected =
                std::pow(omega(n), static_cast<double>(k * q - ell * p));
            CHECK(std::abs(fwd / bwd - expected) < 1e-9);
          }
        }
      }
    }
  }
  // An unsatisfiable tolerance exercises the rejection path.
  CHECK_THROWS_AS(
      weyl_compose_phase(4, {1, 0}, {0, 1}, -1.0),
      std::domain_error);
}

TEST_CASE("Fourier and diagonal gates") {
  for (i64 n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(is_unitary(fourier_matrix(n)));
    CHECK(is_unitary(diagonal_phase_gate(n)));
  }
  CHECK_FALSE(is_unitary(2.0 * fourier_matrix(4)));
}

TEST_CASE("projective actions of the Clifford generators") {
  // The Fourier transform acts as [[0,1],[N-1,0]].
  auto f3 = projective_action(fourier_matrix(3));
  REQUIRE(f3.has_value());
  CHECK(*f3 == Mat2(3, 0, 1, 2, 0));
  auto f4 = projective_action(fourier_matrix(4));
  REQUIRE(f4.has_value());
  CHECK(*f4 == Mat2(4, 0, 1, 3, 0));

  // The diagonal phase gate acts as [[1,0],[N-1,1]].
  auto d3 = projective_action(diagonal_phase_gate(3));
  REQUIRE(d3.has_value());
  CHECK(*d3 == Mat2(3, 1, 0, 2, 1));
  auto d4 = projective_action(diagonal_phase_gate(4));
  REQUIRE(d4.has_value());
  CHECK(*d4 == Mat2(4, 1, 0, 3, 1));

  // Weyl operators act trivially in the projective sense.
  for (i64 n : {3, 4}) {
    for (i64 k = 0; k < n; ++k) {
      for (i64 ell = 0; ell < n; ++ell) {
        auto act = projective_action(weyl(n, k, ell));
        REQUIRE(act.has_value());
        CHECK(*act == Mat2::identity(n));
      }
    }
  }

  // Products compose: the action of F*D is the product of the actions.
  auto fd = projective_action(fourier_matrix(4) * diagonal_phase_gate(4));
  REQUIRE(fd.has_value());
  CHECK(*fd == mat_mul(Mat2(4, 0, 1, 3, 0), Mat2(4, 1, 0, 3, 1)));
}

TEST_CASE("non-normalizers are rejected") {
  // A non-Clifford diagonal gate does not normalize the Weyl system.
  CMat g = CMat::Identity(2, 2);
  g(1, 1) = std::exp(Complex(0.0, M_PI / 7.0));
  CHECK_FALSE(projective_action(g).has_value());

  // A non-unitary matrix is rejected before any scanning.
  CHECK_FALSE(projective_action(2.0 * fourier_matrix(4)).has_value());

  CMat rect = CMat::Zero(2, 3);
  CHECK_THROWS_AS(projective_action(rect), std::invalid_argument);
  CHECK_THROWS_AS(weyl(1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(weyl(kWeylMaxDim + 2, 0, 0), std::invalid_argument);
}
