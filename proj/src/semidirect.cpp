#include "cliffsplit/semidirect.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cliffsplit {

namespace {

void check_even_dim(i64 n) {
  if (n < 2 || n % 2 != 0 || 2 * n > kMaxModulus) {
    throw std::invalid_argument(
        "dimension must be even and lie in [2, " +
        std::to_string(kMaxModulus / 2) + "], got " + std::to_string(n));
  }
}

void check_same_dim(const SdElement& p, const SdElement& q) {
  if (p.dim != q.dim) {
    throw std::domain_error("dimension mismatch: " + std::to_string(p.dim) +
                            " vs " + std::to_string(q.dim));
  }
}

void check_bits(LiftBits bits) {
  auto is_bit = [](int x) { return x == 0 || x == 1; };
  if (!is_bit(bits.p1) || !is_bit(bits.p2) || !is_bit(bits.p3)) {
    throw std::invalid_argument("lift bits must be 0 or 1");
  }
}

}  // namespace

SdElement::SdElement(i64 n, Mat2 mat, Vec2 vec)
    : dim(n), matrix(mat), vector(vec) {
  check_even_dim(n);
  if (matrix.m != 2 * n) {
    throw std::domain_error("matrix modulus must be 2N = " +
                            std::to_string(2 * n) + ", got " +
                            std::to_string(matrix.m));
  }
  if (vector.m != n) {
    throw std::domain_error("vector modulus must be N = " + std::to_string(n) +
                            ", got " + std::to_string(vector.m));
  }
  if (matrix.det() != 1) {
    throw std::domain_error("matrix must have det = 1 (mod 2N), got det = " +
                            std::to_string(matrix.det()));
  }
}

SdElement SdElement::identity(i64 n) {
  check_even_dim(n);
  return SdElement(n, Mat2::identity(2 * n), Vec2::zero(n));
}

std::string to_string(const SdElement& p) {
  std::ostringstream os;
  os << "(" << to_string(p.matrix) << ", " << to_string(p.vector) << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SdElement& p) {
  return os << to_string(p);
}

SdElement sd_mul(const SdElement& s, const SdElement& p) {
  check_same_dim(s, p);
  Mat2 mat = mat_mul(s.matrix, p.matrix);
  Vec2 vec = vec_add(s.vector, mat_vec(reduce_mod(s.matrix, s.dim), p.vector));
  return SdElement(s.dim, mat, vec);
}

SdElement sd_inverse(const SdElement& p) {
  Mat2 inv = sl2_inverse(p.matrix);
  Vec2 vec = vec_neg(mat_vec(reduce_mod(inv, p.dim), p.vector));
  return SdElement(p.dim, inv, vec);
}

SdElement sd_pow(const SdElement& p, i64 k) {
  if (k < 0) throw std::invalid_argument("sd_pow requires k >= 0");
  Mat2 mat = mat_pow(p.matrix, k);
  Mat2 geo = geometric_sum(reduce_mod(p.matrix, p.dim), k);
  return SdElement(p.dim, mat, mat_vec(geo, p.vector));
}

SdElement sd_pow_iterative(const SdElement& p, i64 k) {
  if (k < 0) throw std::invalid_argument("sd_pow_iterative requires k >= 0");
  SdElement acc = SdElement::identity(p.dim);
  for (i64 i = 0; i < k; ++i) acc = sd_mul(acc, p);
  return acc;
}

const std::vector<SdElement>& kernel_elements(i64 n) {
  check_even_dim(n);
  // Cached per thread: callers in hot loops and parallel search hit the
  // same dimension repeatedly and must not contend on a lock.
  thread_local std::map<i64, std::vector<SdElement>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<SdElement> elems;
    elems.reserve(8);
    for (int r = 0; r <= 1; ++r) {
      for (int s = 0; s <= 1; ++s) {
        for (int t = 0; t <= 1; ++t) {
          Mat2 mat(2 * n, 1 + n * r, n * s, n * t, 1 + n * r);
          Vec2 vec(n, (n / 2) * s, (n / 2) * t);
          elems.emplace_back(n, mat, vec);
        }
      }
    }
    it = cache.emplace(n, std::move(elems)).first;
  }
  return it->second;
}

bool in_kernel(const SdElement& p) {
  for (const SdElement& k : kernel_elements(p.dim)) {
    if (p == k) return true;
  }
  return false;
}

Mat2 sigma(const SdElement& p) { return reduce_mod(p.matrix, p.dim); }

bool coset_equal(const SdElement& p, const SdElement& q) {
  check_same_dim(p, q);
  return in_kernel(sd_mul(p, sd_inverse(q)));
}

Mat2 lift_base_matrix(GenSide side, LiftBits bits, i64 n) {
  check_even_dim(n);
  check_bits(bits);
  if (side == GenSide::T) {
    const i64 a = bits.p1, b = bits.p2, c = bits.p3;
    return Mat2(2 * n, 1 + n * (a + c), 1 + n * (a + b), n * c, 1 + n * a);
  }
  const i64 a1 = bits.p1, b1 = bits.p2, c1 = bits.p3;
  return Mat2(2 * n, 1 + n * a1, n * b1, -1 + n * (c1 - a1),
              1 + n * (a1 - b1));
}

Mat2 closed_form_power_matrix(GenSide side, LiftBits bits, i64 n, i64 k) {
  check_even_dim(n);
  check_bits(bits);
  if (k < 0) throw std::invalid_argument("power requires k >= 0");
  // binom3(k+1) must stay exact in 64 bits before reduction.
  if (k > 1'000'000) {
    throw std::invalid_argument("closed-form power supports k <= 1000000");
  }
  const i64 m = 2 * n;
  // Coefficients reduced mod 2N up front so every later product stays small.
  const i64 kr = mod_reduce(k, m);
  const i64 b2k = mod_reduce(binom2(k), m);
  const i64 b2k1 = mod_reduce(binom2(k + 1), m);
  const i64 b3k1 = mod_reduce(binom3(k + 1), m);
  if (side == GenSide::T) {
    const i64 a = bits.p1, b = bits.p2, c = bits.p3;
    return Mat2(m, 1 + n * (kr * a + b2k1 * c),
                k + n * (kr * kr * a + kr * b + b3k1 * c), n * (kr * c),
                1 + n * (kr * a + b2k * c));
  }
  const i64 a1 = bits.p1, b1 = bits.p2, c1 = bits.p3;
  return Mat2(m, 1 + n * (kr * a1 - b2k * b1), n * (kr * b1),
              -k + n * (-kr * kr * a1 + b3k1 * b1 + kr * c1),
              1 + n * (kr * a1 - b2k1 * b1));
}

Mat2 closed_form_power_matrix_parity(GenSide side, LiftBits bits, i64 n,
                                     i64 k) {
  check_even_dim(n);
  check_bits(bits);
  if (k < 0) throw std::invalid_argument("power requires k >= 0");
  if (k > 1'000'000) {
    throw std::invalid_argument("closed-form power supports k <= 1000000");
  }
  const i64 m = 2 * n;
  if (side == GenSide::T) {
    const i64 a = bits.p1, b = bits.p2, c = bits.p3;
    if (k % 2 == 0) {
      const i64 hc = (k / 2) * c;
      return Mat2(m, 1 + n * hc, k + n * hc, 0, 1 + n * hc);
    }
    return Mat2(m, 1 + n * (a + ((k + 1) / 2) * c), k + n * (a + b), n * c,
                1 + n * (a + ((k - 1) / 2) * c));
  }
  const i64 a1 = bits.p1, b1 = bits.p2, c1 = bits.p3;
  if (k % 2 == 0) {
    const i64 hb = (k / 2) * b1;
    return Mat2(m, 1 + n * hb, 0, -k + n * hb, 1 + n * hb);
  }
  return Mat2(m, 1 + n * (a1 + ((k - 1) / 2) * b1), n * b1,
              -k + n * (a1 + c1), 1 + n * (a1 + ((k + 1) / 2) * b1));
}

}  // namespace cliffsplit
