#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffsplit/modmat.hpp"

namespace cliffsplit {

// The group G(N) = SL(2, Z_{2N}) x| Z_N^2 for even N, with multiplication
//   (C, w) * (D, x) = (C*D, w + [C]_N * x),
// where [.]_N is entrywise reduction from Z_{2N} to Z_N. The projective
// Clifford group in dimension N is isomorphic to the quotient of G(N) by
// the 8-element normal subgroup K(N) materialized by kernel_elements().

struct SdElement {
  i64 dim;      // even N >= 2
  Mat2 matrix;  // over Z_{2N}, det = 1 (mod 2N)
  Vec2 vector;  // over Z_N

  // Validates: dim even and within range, matrix modulus 2*dim, vector
  // modulus dim, det(matrix) = 1 (mod 2*dim). Throws std::invalid_argument
  // for a bad dimension and std::domain_error for modulus/det violations.
  SdElement(i64 n, Mat2 mat, Vec2 vec);

  static SdElement identity(i64 n);

  bool operator==(const SdElement&) const = default;
};

std::string to_string(const SdElement& p);
std::ostream& operator<<(std::ostream& os, const SdElement& p);

// Group operations. Binary operations require equal dims (std::domain_error).
SdElement sd_mul(const SdElement& s, const SdElement& p);

// (C, w)^{-1} = (C^{-1}, -[C^{-1}]_N * w).
SdElement sd_inverse(const SdElement& p);

// (C, w)^k = (C^k, [Sum_{i=0}^{k-1} C^i]_N * w), computed in O(log k); the
// geometric sum is accumulated directly over Z_N (reduction is a ring
// homomorphism, so this equals reducing the Z_{2N} sum). k >= 0.
SdElement sd_pow(const SdElement& p, i64 k);

// k-fold sd_mul, kept as an independent cross-check for sd_pow. k >= 0.
SdElement sd_pow_iterative(const SdElement& p, i64 k);

// The 8 elements (r,s,t in {0,1}):
//   ([[1+N*r, N*s], [N*t, 1+N*r]] over Z_{2N}, ((N/2)*s, (N/2)*t) over Z_N),
// ordered by (r,s,t) lexicographic, so index 0 is the identity. The list is
// cached per thread; the returned reference stays valid on that thread.
// Throws std::invalid_argument unless N is even and >= 2.
const std::vector<SdElement>& kernel_elements(i64 n);

// Membership is decided by direct comparison against the materialized
// 8-element list (immune to representative-normalization mistakes).
bool in_kernel(const SdElement& p);

// sigma(C, w) = [C]_N, the induced symplectic part over Z_N. Constant on
// K-cosets, so it descends to the quotient.
Mat2 sigma(const SdElement& p);

// True iff p and q lie in the same K-coset, i.e. p * q^{-1} is in K.
bool coset_equal(const SdElement& p, const SdElement& q);

// -- Parameterized generator lifts ------------------------------------------
//
// Candidate lifts of the SL(2, Z_N) generators t, r to SL(2, Z_{2N}) are
// parameterized by three bits per side:
//   side T: A = [[1,1],[0,1]] + N*[[a+c, a+b], [c,     a    ]]
//   side R: B = [[1,0],[-1,1]] + N*[[a',  b'  ], [c'-a', a'-b']]
// Every such matrix has det = 1 (mod 2N) and reduces to t (resp. r) mod N.

enum class GenSide { T, R };

struct LiftBits {
  int p1, p2, p3;  // (a, b, c) for side T; (a', b', c') for side R
};

// The base matrix A (side T) or B (side R) over Z_{2N}.
Mat2 lift_base_matrix(GenSide side, LiftBits bits, i64 n);

// A^k resp. B^l over Z_{2N} in closed form (valid for all k >= 0):
//   A^k = [[1,k],[0,1]] + N*[[k*a + C(k+1,2)*c, k^2*a + k*b + C(k+1,3)*c],
//                            [k*c,              k*a + C(k,2)*c        ]]
//   B^l = [[1,0],[-l,1]] + N*[[l*a' - C(l,2)*b',                l*b'],
//                             [-l^2*a' + C(l+1,3)*b' + l*c',
//                              l*a' - C(l+1,2)*b'                   ]]
// Must agree with mat_pow of the base matrix; the tests enforce this.
Mat2 closed_form_power_matrix(GenSide side, LiftBits bits, i64 n, i64 k);

// The same powers through the parity-reduced forms (binomials mod 2):
//   k even: A^k = [[1,k],[0,1]] + N*(k/2)*c*[[1,1],[0,1]]
//   k odd:  A^k = [[1,k],[0,1]] + N*[[a+((k+1)/2)c, a+b],[c, a+((k-1)/2)c]]
//   l even: B^l = [[1,0],[-l,1]] + N*(l/2)*b'*[[1,0],[1,1]]
//   l odd:  B^l = [[1,0],[-l,1]] + N*[[a'+((l-1)/2)b', b'],
//                                     [a'+c', a'+((l+1)/2)b']]
Mat2 closed_form_power_matrix_parity(GenSide side, LiftBits bits, i64 n,
                                     i64 k);

}  // namespace cliffsplit
