#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cliffsplit {

using i64 = std::int64_t;

// Largest supported modulus. Entries live in [0, M), so intermediate
// products stay below 2^32 and any 2x2 dot product below 2^33 -- far inside
// the int64 range, making every operation exact without wide arithmetic.
inline constexpr i64 kMaxModulus = i64{1} << 16;

// Canonical representative of x modulo m, in [0, m). Requires m >= 1.
i64 mod_reduce(i64 x, i64 m);

// Binomial coefficients C(n,2) and C(n,3) as exact integers (n >= 0).
i64 binom2(i64 n);
i64 binom3(i64 n);

// A 2x2 matrix over Z_M. The modulus is carried on the value and checked on
// every binary operation; entries are always canonically reduced to [0, M),
// so equality of values is exact structural equality.
struct Mat2 {
  i64 m;  // modulus, in [2, kMaxModulus]
  i64 a11, a12, a21, a22;

  Mat2(i64 modulus, i64 e11, i64 e12, i64 e21, i64 e22);

  static Mat2 identity(i64 modulus);
  static Mat2 zero(i64 modulus);

  i64 det() const;  // determinant reduced to [0, m)

  bool operator==(const Mat2&) const = default;
};

// A 2-vector over Z_M with the same canonical-representative convention.
struct Vec2 {
  i64 m;  // modulus, in [2, kMaxModulus]
  i64 x1, x2;

  Vec2(i64 modulus, i64 e1, i64 e2);

  static Vec2 zero(i64 modulus);

  bool operator==(const Vec2&) const = default;
};

// Matrix/vector arithmetic. All binary operations require equal moduli and
// throw std::domain_error on mismatch.
Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_add(const Mat2& a, const Mat2& b);
Mat2 mat_sub(const Mat2& a, const Mat2& b);
Mat2 mat_scale(i64 s, const Mat2& a);

// a^k by repeated squaring; a^0 = I. Throws std::invalid_argument for k < 0.
Mat2 mat_pow(const Mat2& a, i64 k);

// Sum_{i=0}^{k-1} a^i (the empty sum for k = 0), computed in O(log k)
// matrix multiplications. Throws std::invalid_argument for k < 0.
Mat2 geometric_sum(const Mat2& a, i64 k);

// Inverse of a matrix with det(a) = 1, via the adjugate [[d,-b],[-c,a]].
// Throws std::domain_error when det(a) != 1 (mod m).
Mat2 sl2_inverse(const Mat2& a);

// Entrywise reduction to the sub-modulus n; requires n | a.m (typical use:
// modulus 2N -> N). Throws std::domain_error otherwise.
Mat2 reduce_mod(const Mat2& a, i64 n);
Vec2 reduce_mod(const Vec2& w, i64 n);

Vec2 mat_vec(const Mat2& a, const Vec2& w);
Vec2 vec_add(const Vec2& w, const Vec2& x);
Vec2 vec_sub(const Vec2& w, const Vec2& x);
Vec2 vec_neg(const Vec2& w);
Vec2 vec_scale(i64 s, const Vec2& w);

// Rendering, with an explicit modulus annotation so values over Z_N and
// Z_{2N} can never be confused in output: "[[a,b],[c,d]] over Z_12".
std::string to_string(const Mat2& a);
std::string to_string(const Vec2& w);

std::ostream& operator<<(std::ostream& os, const Mat2& a);
std::ostream& operator<<(std::ostream& os, const Vec2& w);

}  // namespace cliffsplit
