#include "cliffsplit/modmat.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cliffsplit {

namespace {

void check_modulus(i64 m) {
  if (m < 2 || m > kMaxModulus) {
    throw std::invalid_argument("modulus must lie in [2, " +
                                std::to_string(kMaxModulus) + "], got " +
                                std::to_string(m));
  }
}

void check_same_modulus(i64 ma, i64 mb) {
  if (ma != mb) {
    throw std::domain_error("modulus mismatch: Z_" + std::to_string(ma) +
                            " vs Z_" + std::to_string(mb));
  }
}

}  // namespace

i64 mod_reduce(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

i64 binom2(i64 n) {
  if (n < 0) throw std::invalid_argument("binom2 requires n >= 0");
  return n * (n - 1) / 2;
}

i64 binom3(i64 n) {
  if (n < 0) throw std::invalid_argument("binom3 requires n >= 0");
  return n * (n - 1) * (n - 2) / 6;
}

Mat2::Mat2(i64 modulus, i64 e11, i64 e12, i64 e21, i64 e22) : m(modulus) {
  check_modulus(m);
  a11 = mod_reduce(e11, m);
  a12 = mod_reduce(e12, m);
  a21 = mod_reduce(e21, m);
  a22 = mod_reduce(e22, m);
}

Mat2 Mat2::identity(i64 modulus) { return Mat2(modulus, 1, 0, 0, 1); }

Mat2 Mat2::zero(i64 modulus) { return Mat2(modulus, 0, 0, 0, 0); }

i64 Mat2::det() const { return mod_reduce(a11 * a22 - a12 * a21, m); }

Vec2::Vec2(i64 modulus, i64 e1, i64 e2) : m(modulus) {
  check_modulus(m);
  x1 = mod_reduce(e1, m);
  x2 = mod_reduce(e2, m);
}

Vec2 Vec2::zero(i64 modulus) { return Vec2(modulus, 0, 0); }

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  check_same_modulus(a.m, b.m);
  return Mat2(a.m, a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
              a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22);
}

Mat2 mat_add(const Mat2& a, const Mat2& b) {
  check_same_modulus(a.m, b.m);
  return Mat2(a.m, a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21,
              a.a22 + b.a22);
}

Mat2 mat_sub(const Mat2& a, const Mat2& b) {
  check_same_modulus(a.m, b.m);
  return Mat2(a.m, a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21,
              a.a22 - b.a22);
}

Mat2 mat_scale(i64 s, const Mat2& a) {
  i64 t = mod_reduce(s, a.m);
  return Mat2(a.m, t * a.a11, t * a.a12, t * a.a21, t * a.a22);
}

Mat2 mat_pow(const Mat2& a, i64 k) {
  if (k < 0) throw std::invalid_argument("mat_pow requires k >= 0");
  Mat2 result = Mat2::identity(a.m);
  Mat2 base = a;
  while (k > 0) {
    if (k & 1) result = mat_mul(result, base);
    k >>= 1;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

Mat2 geometric_sum(const Mat2& a, i64 k) {
  if (k < 0) throw std::invalid_argument("geometric_sum requires k >= 0");
  // Process the bits of k from most significant to least, maintaining the
  // pair (P, S) = (a^j, Sum_{i<j} a^i) for the prefix j read so far:
  //   j -> 2j:   S <- S + P*S,  P <- P*P
  //   j -> j+1:  S <- S + P,    P <- P*a
  Mat2 p = Mat2::identity(a.m);
  Mat2 s = Mat2::zero(a.m);
  if (k == 0) return s;
  int top = 63;
  while (((k >> top) & 1) == 0) --top;
  for (int bit = top; bit >= 0; --bit) {
    if (bit != top) {
      s = mat_add(s, mat_mul(p, s));
      p = mat_mul(p, p);
    }
    if ((k >> bit) & 1) {
      s = mat_add(s, p);
      p = mat_mul(p, a);
    }
  }
  return s;
}

Mat2 sl2_inverse(const Mat2& a) {
  if (a.det() != 1) {
    throw std::domain_error("sl2_inverse requires det = 1 (mod " +
                            std::to_string(a.m) + "), got det = " +
                            std::to_string(a.det()));
  }
  return Mat2(a.m, a.a22, -a.a12, -a.a21, a.a11);
}

Mat2 reduce_mod(const Mat2& a, i64 n) {
  if (n < 2 || a.m % n != 0) {
    throw std::domain_error("reduce_mod requires the target modulus " +
                            std::to_string(n) + " to divide " +
                            std::to_string(a.m));
  }
  return Mat2(n, a.a11, a.a12, a.a21, a.a22);
}

Vec2 reduce_mod(const Vec2& w, i64 n) {
  if (n < 2 || w.m % n != 0) {
    throw std::domain_error("reduce_mod requires the target modulus " +
                            std::to_string(n) + " to divide " +
                            std::to_string(w.m));
  }
  return Vec2(n, w.x1, w.x2);
}

Vec2 mat_vec(const Mat2& a, const Vec2& w) {
  check_same_modulus(a.m, w.m);
  return Vec2(w.m, a.a11 * w.x1 + a.a12 * w.x2, a.a21 * w.x1 + a.a22 * w.x2);
}

Vec2 vec_add(const Vec2& w, const Vec2& x) {
  check_same_modulus(w.m, x.m);
  return Vec2(w.m, w.x1 + x.x1, w.x2 + x.x2);
}

Vec2 vec_sub(const Vec2& w, const Vec2& x) {
  check_same_modulus(w.m, x.m);
  return Vec2(w.m, w.x1 - x.x1, w.x2 - x.x2);
}

Vec2 vec_neg(const Vec2& w) { return Vec2(w.m, -w.x1, -w.x2); }

Vec2 vec_scale(i64 s, const Vec2& w) {
  i64 t = mod_reduce(s, w.m);
  return Vec2(w.m, t * w.x1, t * w.x2);
}

std::string to_string(const Mat2& a) {
  std::ostringstream os;
  os << "[[" << a.a11 << "," << a.a12 << "],[" << a.a21 << "," << a.a22
     << "]] over Z_" << a.m;
  return os.str();
}

std::string to_string(const Vec2& w) {
  std::ostringstream os;
  os << "(" << w.x1 << "," << w.x2 << ") over Z_" << w.m;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat2& a) {
  return os << to_string(a);
}

std::ostream& operator<<(std::ostream& os, const Vec2& w) {
  return os << to_string(w);
}

}  // namespace cliffsplit
