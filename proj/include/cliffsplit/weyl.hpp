#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>

#include "cliffsplit/modmat.hpp"

namespace cliffsplit {

// Numerical cross-check layer: dense complex matrices for the generalized
// Pauli operators X, Z, the Weyl operators W(k,l) = tau^{kl} X^k Z^l with
// tau = -exp(i*pi/N), and the projective action of Clifford unitaries on
// the phase space Z_N^2. Everything here is desk-scale (N <= 16) double
// precision with a default tolerance of 1e-10.

using CMat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline constexpr double kWeylTolerance = 1e-10;
inline constexpr i64 kWeylMaxDim = 16;

Complex omega(i64 n);  // exp(2*pi*i/N)
Complex tau(i64 n);    // -exp(pi*i/N)

// Z|j> = omega^j |j>, X|j> = |j-1 mod N>. Throws std::invalid_argument for
// N < 2 or N > kWeylMaxDim.
CMat pauli_x(i64 n);
CMat pauli_z(i64 n);
std::pair<CMat, CMat> pauli_matrices(i64 n);

// W(k,l) for any integer k, l (either sign); W(k,l)^N = I, and for even N
// the sign relations W(k+N,l) = (-1)^l W(k,l), W(k,l+N) = (-1)^k W(k,l)
// hold. Entries are built directly from integer phase exponents, so the
// only rounding is one complex exponential per entry.
CMat weyl(i64 n, i64 k, i64 ell);

// The discrete Fourier matrix F_{jk} = omega^{jk} / sqrt(N).
CMat fourier_matrix(i64 n);

// The diagonal Clifford gate diag(tau^{j^2}).
CMat diagonal_phase_gate(i64 n);

bool is_unitary(const CMat& u, double tol = kWeylTolerance);

// Proportionality test u ~ v (u = lambda*v for unit-modulus lambda): lambda
// is read off at the largest-modulus entry of v, then |u - lambda*v| is
// checked in max norm. When the test passes and lambda_out is non-null, the
// scalar is stored there.
bool approx_proportional(const CMat& u, const CMat& v,
                         double tol = kWeylTolerance,
                         Complex* lambda_out = nullptr);

// The scalar lambda with W(u) W(w) = lambda * W(u+w mod N). Existence is
// checked, not assumed: throws std::domain_error if the product is not
// proportional to W(u+w mod N) within tolerance.
Complex weyl_compose_phase(i64 n, std::pair<i64, i64> u,
                           std::pair<i64, i64> w,
                           double tol = kWeylTolerance);

// If the unitary U normalizes the projective Weyl system, returns the
// unique A in SL(2, Z_N) with U W(u) U^{-1} ~ W(A u); the two generator
// columns are solved by scanning the N^2 phase-space points, then the
// linear action is verified on every u and det(A) = 1 is checked. Returns
// nullopt when U is no projective normalizer. Throws std::invalid_argument
// for non-square input or dimensions outside [2, kWeylMaxDim].
std::optional<Mat2> projective_action(const CMat& u,
                                      double tol = kWeylTolerance);

}  // namespace cliffsplit
