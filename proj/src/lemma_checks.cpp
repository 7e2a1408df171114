#include "cliffsplit/lemma_checks.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffsplit/semidirect.hpp"
#include "cliffsplit/sl2.hpp"

namespace cliffsplit {

namespace {

struct Tally {
  std::uint64_t cases = 0;
  bool ok = true;
  std::string detail;

  template <typename Describe>
  void expect(bool condition, Describe describe) {
    ++cases;
    if (!condition && ok) {
      ok = false;
      detail = describe();
    }
  }
};

struct BitTuple {
  LiftBits t;  // (a, b, c)
  LiftBits r;  // (a', b', c')
};

std::vector<BitTuple> all_bit_tuples() {
  std::vector<BitTuple> tuples;
  tuples.reserve(64);
  for (int bits = 0; bits < 64; ++bits) {
    tuples.push_back({{(bits >> 5) & 1, (bits >> 4) & 1, (bits >> 3) & 1},
                      {(bits >> 2) & 1, (bits >> 1) & 1, bits & 1}});
  }
  return tuples;
}

// (h, h') sample pairs: exhaustive when the vector space is tiny, otherwise
// the zero pair plus seeded random pairs.
std::vector<std::pair<Vec2, Vec2>> vector_samples(i64 n,
                                                  std::mt19937_64& rng) {
  std::vector<std::pair<Vec2, Vec2>> samples;
  if (n <= 2) {
    for (i64 u = 0; u < n; ++u)
      for (i64 v = 0; v < n; ++v)
        for (i64 u1 = 0; u1 < n; ++u1)
          for (i64 v1 = 0; v1 < n; ++v1)
            samples.push_back({Vec2(n, u, v), Vec2(n, u1, v1)});
    return samples;
  }
  samples.push_back({Vec2::zero(n), Vec2::zero(n)});
  std::uniform_int_distribution<i64> dist(0, n - 1);
  for (int i = 0; i < 3; ++i) {
    samples.push_back({Vec2(n, dist(rng), dist(rng)),
                       Vec2(n, dist(rng), dist(rng))});
  }
  return samples;
}

std::vector<std::pair<i64, i64>> commute_pairs(i64 n) {
  std::vector<std::pair<i64, i64>> pairs;
  for (const RelationInstance& rel : enumerate_relations(n)) {
    if (rel.family == RelationFamily::Commute) {
      pairs.emplace_back(rel.k, rel.ell);
    }
  }
  return pairs;
}

std::vector<std::pair<i64, i64>> unit_pairs(i64 n) {
  std::vector<std::pair<i64, i64>> pairs;
  for (const RelationInstance& rel : enumerate_relations(n)) {
    if (rel.family == RelationFamily::Square) {
      pairs.emplace_back(rel.k, rel.ell);
    }
  }
  return pairs;
}

std::string describe_context(i64 n, const BitTuple& bits, i64 k, i64 ell) {
  std::ostringstream os;
  os << "N=" << n << " a=" << bits.t.p1 << " b=" << bits.t.p2
     << " c=" << bits.t.p3 << " a'=" << bits.r.p1 << " b'=" << bits.r.p2
     << " c'=" << bits.r.p3 << " k=" << k << " l=" << ell;
  return os.str();
}

// Powers of p for exponents 0..max_exp via repeated multiplication; the
// literal side of every comparison.
std::vector<SdElement> iterated_powers(const SdElement& p, i64 max_exp) {
  std::vector<SdElement> powers;
  powers.reserve(static_cast<std::size_t>(max_exp) + 1);
  powers.push_back(SdElement::identity(p.dim));
  for (i64 k = 1; k <= max_exp; ++k) {
    powers.push_back(sd_mul(powers.back(), p));
  }
  return powers;
}

std::vector<Mat2> iterated_matrix_powers(const Mat2& a, i64 max_exp) {
  std::vector<Mat2> powers;
  powers.reserve(static_cast<std::size_t>(max_exp) + 1);
  powers.push_back(Mat2::identity(a.m));
  for (i64 k = 1; k <= max_exp; ++k) {
    powers.push_back(mat_mul(powers.back(), a));
  }
  return powers;
}

using CheckFn = std::function<void(i64, i64, std::mt19937_64&, Tally&)>;

// 1. Group powers: the closed-form power (geometric-sum vector formula)
// equals repeated multiplication, for generator lifts and for random words.
void check_group_power(i64 n, i64 max_exp, std::mt19937_64& rng, Tally& t) {
  std::uniform_int_distribution<i64> dist(0, n - 1);
  for (const BitTuple& bits : all_bit_tuples()) {
    Mat2 a = lift_base_matrix(GenSide::T, bits.t, n);
    Mat2 b = lift_base_matrix(GenSide::R, bits.r, n);
    SdElement tt(n, a, Vec2(n, dist(rng), dist(rng)));
    SdElement rr(n, b, Vec2(n, dist(rng), dist(rng)));
    SdElement word = sd_mul(sd_mul(tt, rr), sd_mul(sd_inverse(tt), rr));
    for (const SdElement& p : {tt, rr, word}) {
      std::vector<SdElement> lit = iterated_powers(p, max_exp);
      for (i64 k = 0; k <= max_exp; ++k) {
        t.expect(sd_pow(p, k) == lit[static_cast<std::size_t>(k)], [&] {
          return "power mismatch at k=" + std::to_string(k) + " for " +
                 to_string(p);
        });
      }
    }
  }
}

// 2. Perturbation powers: (U + N*G)^k = U^k + N * Sum U^{i-1} G U^{k-i}
// over Z_{2N}, for arbitrary U, G (N^2 vanishes mod 2N).
void check_perturbation_power(i64 n, i64 max_exp, std::mt19937_64& rng,
                              Tally& t) {
  const i64 m = 2 * n;
  std::uniform_int_distribution<i64> dist(0, m - 1);
  for (int trial = 0; trial < 40; ++trial) {
    Mat2 u(m, dist(rng), dist(rng), dist(rng), dist(rng));
    Mat2 g(m, dist(rng), dist(rng), dist(rng), dist(rng));
    Mat2 perturbed = mat_add(u, mat_scale(n, g));
    std::vector<Mat2> u_pow = iterated_matrix_powers(u, max_exp);
    std::vector<Mat2> lit = iterated_matrix_powers(perturbed, max_exp);
    for (i64 k = 0; k <= max_exp; ++k) {
      Mat2 sum = Mat2::zero(m);
      for (i64 i = 1; i <= k; ++i) {
        sum = mat_add(sum, mat_mul(mat_mul(u_pow[static_cast<std::size_t>(
                                               i - 1)],
                                           g),
                                   u_pow[static_cast<std::size_t>(k - i)]));
      }
      Mat2 closed =
          mat_add(u_pow[static_cast<std::size_t>(k)], mat_scale(n, sum));
      t.expect(closed == lit[static_cast<std::size_t>(k)], [&] {
        return "perturbation power mismatch at k=" + std::to_string(k) +
               " for U=" + to_string(u) + " G=" + to_string(g);
      });
    }
  }
}

// 3. Binomial parities: C(n,2) and C(n,3) mod 2 follow the half-index case
// split used throughout the parity reductions.
void check_binomial_parity(i64 n, i64 /*max_exp*/, std::mt19937_64&,
                           Tally& t) {
  for (i64 j = 0; j <= 4 * n; ++j) {
    i64 expected2 = (j % 2 == 0) ? (j / 2) % 2 : ((j - 1) / 2) % 2;
    i64 expected3 = (j % 2 == 0) ? 0 : ((j - 1) / 2) % 2;
    t.expect(mod_reduce(binom2(j), 2) == expected2, [&] {
      return "C(n,2) parity mismatch at n=" + std::to_string(j);
    });
    t.expect(mod_reduce(binom3(j), 2) == expected3, [&] {
      return "C(n,3) parity mismatch at n=" + std::to_string(j);
    });
  }
}

// 4. Power matrices: both closed forms (general and parity-reduced) equal
// literal matrix powers for every lift.
void check_power_matrix(i64 n, i64 max_exp, std::mt19937_64&, Tally& t) {
  for (const BitTuple& bits : all_bit_tuples()) {
    for (GenSide side : {GenSide::T, GenSide::R}) {
      LiftBits lb = (side == GenSide::T) ? bits.t : bits.r;
      Mat2 base = lift_base_matrix(side, lb, n);
      std::vector<Mat2> lit = iterated_matrix_powers(base, max_exp);
      for (i64 k = 0; k <= max_exp; ++k) {
        const Mat2& expected = lit[static_cast<std::size_t>(k)];
        t.expect(closed_form_power_matrix(side, lb, n, k) == expected, [&] {
          return "general power form mismatch, " +
                 describe_context(n, bits, k, 0);
        });
        t.expect(closed_form_power_matrix_parity(side, lb, n, k) == expected,
                 [&] {
                   return "parity power form mismatch, " +
                          describe_context(n, bits, k, 0);
                 });
      }
    }
  }
}

// 5. Power/product vectors: v(T^k), v(R^l), v(T^k R^l), v(R^l T^k) via the
// binomial-coefficient matrices over Z_N.
void check_power_vectors(i64 n, i64 max_exp, std::mt19937_64& rng, Tally& t) {
  const i64 cap = std::min<i64>(max_exp, 2 * n + 2);
  for (const BitTuple& bits : all_bit_tuples()) {
    Mat2 a = lift_base_matrix(GenSide::T, bits.t, n);
    Mat2 b = lift_base_matrix(GenSide::R, bits.r, n);
    for (const auto& [h, h1] : vector_samples(n, rng)) {
      SdElement tt(n, a, h);
      SdElement rr(n, b, h1);
      std::vector<SdElement> tp = iterated_powers(tt, cap);
      std::vector<SdElement> rp = iterated_powers(rr, cap);
      for (i64 k = 0; k <= cap; ++k) {
        Mat2 mt(n, k, binom2(k), 0, k);
        t.expect(mat_vec(mt, h) == tp[static_cast<std::size_t>(k)].vector,
                 [&] {
                   return "v(T^k) mismatch, " + describe_context(n, bits, k, 0);
                 });
        Mat2 mr(n, k, 0, -binom2(k), k);
        t.expect(mat_vec(mr, h1) == rp[static_cast<std::size_t>(k)].vector,
                 [&] {
                   return "v(R^l) mismatch, " + describe_context(n, bits, 0, k);
                 });
      }
      for (i64 k = 0; k <= cap; ++k) {
        for (i64 ell = 0; ell <= cap; ++ell) {
          const SdElement& tk = tp[static_cast<std::size_t>(k)];
          const SdElement& rl = rp[static_cast<std::size_t>(ell)];
          Vec2 tr_lit = sd_mul(tk, rl).vector;
          Vec2 rt_lit = sd_mul(rl, tk).vector;
          Mat2 m1(n, k, binom2(k), 0, k);
          Mat2 m2(n, ell - k * binom2(ell), k * ell, -binom2(ell), ell);
          Vec2 tr_closed = vec_add(mat_vec(m1, h), mat_vec(m2, h1));
          t.expect(tr_closed == tr_lit, [&] {
            return "v(T^k R^l) mismatch, " + describe_context(n, bits, k, ell);
          });
          Mat2 m3(n, k, binom2(k), -k * ell, k - ell * binom2(k));
          Mat2 m4(n, ell, 0, -binom2(ell), ell);
          Vec2 rt_closed = vec_add(mat_vec(m3, h), mat_vec(m4, h1));
          t.expect(rt_closed == rt_lit, [&] {
            return "v(R^l T^k) mismatch, " + describe_context(n, bits, k, ell);
          });
        }
      }
    }
  }
}

// 6. Order powers: T^N and R^N in closed form (matrix and vector).
void check_order_power(i64 n, i64 /*max_exp*/, std::mt19937_64& rng,
                       Tally& t) {
  const i64 half = n / 2;
  for (const BitTuple& bits : all_bit_tuples()) {
    Mat2 a = lift_base_matrix(GenSide::T, bits.t, n);
    Mat2 b = lift_base_matrix(GenSide::R, bits.r, n);
    for (const auto& [h, h1] : vector_samples(n, rng)) {
      SdElement tt(n, a, h);
      SdElement rr(n, b, h1);
      const i64 c = bits.t.p3, b1 = bits.r.p2;
      SdElement t_expected(
          n,
          Mat2(2 * n, 1 + n * half * c, n * (1 + half * c), 0,
               1 + n * half * c),
          Vec2(n, half * h.x2, 0));
      SdElement r_expected(
          n,
          Mat2(2 * n, 1 + n * half * b1, 0, n * (1 + half * b1),
               1 + n * half * b1),
          Vec2(n, 0, half * h1.x1));
      t.expect(sd_pow_iterative(tt, n) == t_expected, [&] {
        return "T^N closed form mismatch, " + describe_context(n, bits, n, 0);
      });
      t.expect(sd_pow_iterative(rr, n) == r_expected, [&] {
        return "R^N closed form mismatch, " + describe_context(n, bits, 0, n);
      });
    }
  }
}

// 7. Commute-family commutator vectors: v(T^k R^l (R^l T^k)^{-1}) for the
// coprime factorizations N = k*l.
void check_commutator_vector(i64 n, i64 /*max_exp*/, std::mt19937_64& rng,
                             Tally& t) {
  const i64 half = n / 2;
  for (const BitTuple& bits : all_bit_tuples()) {
    Mat2 a = lift_base_matrix(GenSide::T, bits.t, n);
    Mat2 b = lift_base_matrix(GenSide::R, bits.r, n);
    for (const auto& [h, h1] : vector_samples(n, rng)) {
      SdElement tt(n, a, h);
      SdElement rr(n, b, h1);
      for (auto [k, ell] : commute_pairs(n)) {
        SdElement tk = sd_pow(tt, k);
        SdElement rl = sd_pow(rr, ell);
        SdElement comm =
            sd_mul(sd_mul(tk, rl), sd_inverse(sd_mul(rl, tk)));
        Vec2 expected(n, half * (ell - 1) * h1.x1, half * (k - 1) * h.x2);
        t.expect(comm.vector == expected, [&] {
          return "commutator vector mismatch, " +
                 describe_context(n, bits, k, ell);
        });
      }
    }
  }
}

// 8. Commute-family commutator matrices: the parity-split closed forms for
// A^k B^l (B^l A^k)^{-1}; the perturbation has equal diagonal entries in
// both parity cases.
void check_commutator_matrix(i64 n, i64 /*max_exp*/, std::mt19937_64&,
                             Tally& t) {
  for (const BitTuple& bits : all_bit_tuples()) {
    Mat2 a = lift_base_matrix(GenSide::T, bits.t, n);
    Mat2 b = lift_base_matrix(GenSide::R, bits.r, n);
    for (auto [k, ell] : commute_pairs(n)) {
      Mat2 ak = mat_pow(a, k);
      Mat2 bl = mat_pow(b, ell);
      Mat2 comm =
          mat_mul(mat_mul(ak, bl), sl2_inverse(mat_mul(bl, ak)));
      const i64 c = bits.t.p3, b1 = bits.r.p2;
      Mat2 expected = Mat2::identity(2 * n);
      if (k % 2 == 0) {
        const i64 s = 1 + (k / 2) * c;
        expected = Mat2(2 * n, 1 + n * s, 0, n * s, 1 + n * s);
      } else {
        const i64 s = 1 + (ell / 2) * b1;
        expected = Mat2(2 * n, 1 + n * s, n * s, 0, 1 + n * s);
      }
      t.expect(comm == expected, [&] {
        return "commutator matrix mismatch, " +
               describe_context(n, bits, k, ell);
      });
    }
  }
}

// 9. Square-family vectors: v(T^k R^l T^k), its square, and the quotient
// against (T R T)^2, for the unit pairs k*l = 1 (mod N).
void check_square_vectors(i64 n, i64 /*max_exp*/, std::mt19937_64& rng,
                          Tally& t) {
  for (const BitTuple& bits : all_bit_tuples()) {
    Mat2 a = lift_base_matrix(GenSide::T, bits.t, n);
    Mat2 b = lift_base_matrix(GenSide::R, bits.r, n);
    for (const auto& [h, h1] : vector_samples(n, rng)) {
      SdElement tt(n, a, h);
      SdElement rr(n, b, h1);
      SdElement trt =
          sd_mul(sd_mul(sd_pow(tt, 1), sd_pow(rr, 1)), sd_pow(tt, 1));
      SdElement trt2 = sd_mul(trt, trt);
      {
        Mat2 m1(n, 0, 3, -2, 1);
        Mat2 m2(n, 1, 2, -1, 0);
        Vec2 expected = vec_add(mat_vec(m1, h), mat_vec(m2, h1));
        t.expect(trt2.vector == expected, [&] {
          return "v((TRT)^2) mismatch, " + describe_context(n, bits, 1, 1);
        });
      }
      for (auto [k, ell] : unit_pairs(n)) {
        SdElement sandwich =
            sd_mul(sd_mul(sd_pow(tt, k), sd_pow(rr, ell)), sd_pow(tt, k));
        {
          Mat2 m1(n, k, k * (3 * k - 1) / 2, -1, (3 * k + 1) / 2);
          Mat2 m2(n, (ell + 1) / 2, 1, -binom2(ell), ell);
          Vec2 expected = vec_add(mat_vec(m1, h), mat_vec(m2, h1));
          t.expect(sandwich.vector == expected, [&] {
            return "v(T^k R^l T^k) mismatch, " +
                   describe_context(n, bits, k, ell);
          });
        }
        SdElement sandwich2 = sd_mul(sandwich, sandwich);
        {
          Mat2 m1(n, 0, 3 * k * k, -2, 1);
          Mat2 m2(n, 1, 2, -ell * ell, 0);
          Vec2 expected = vec_add(mat_vec(m1, h), mat_vec(m2, h1));
          t.expect(sandwich2.vector == expected, [&] {
            return "v((T^k R^l T^k)^2) mismatch, " +
                   describe_context(n, bits, k, ell);
          });
        }
        SdElement quotient = sd_mul(sandwich2, sd_inverse(trt2));
        {
          Vec2 expected(n, 3 * (k * k - 1) * h.x2,
                        -(ell * ell - 1) * h1.x1);
          t.expect(quotient.vector == expected, [&] {
            return "v((T^k R^l T^k)^2 (TRT)^-2) mismatch, " +
                   describe_context(n, bits, k, ell);
          });
        }
      }
    }
  }
}

// 10. Square-family matrices: A^k B^l, A^k B^l A^k, the square, and the
// quotient against (A B A)^2, with eps = (k*l - 1)/N.
void check_square_matrices(i64 n, i64 /*max_exp*/, std::mt19937_64&,
                           Tally& t) {
  const i64 m = 2 * n;
  for (const BitTuple& bits : all_bit_tuples()) {
    const i64 a = bits.t.p1, b = bits.t.p2, c = bits.t.p3;
    const i64 a1 = bits.r.p1, b1 = bits.r.p2, c1 = bits.r.p3;
    Mat2 am = lift_base_matrix(GenSide::T, bits.t, n);
    Mat2 bm = lift_base_matrix(GenSide::R, bits.r, n);
    Mat2 aba = mat_mul(mat_mul(am, bm), am);
    Mat2 aba2 = mat_mul(aba, aba);
    for (auto [k, ell] : unit_pairs(n)) {
      const i64 eps = (k * ell - 1) / n;
      Mat2 ak = mat_pow(am, k);
      Mat2 bl = mat_pow(bm, ell);
      Mat2 akbl = mat_mul(ak, bl);
      {
        Mat2 expected(
            m, n * (b + ((k + 1) / 2) * c + ((ell - 1) / 2) * b1 + c1 + eps),
            k + n * (a + b + a1 + ((ell - 1) / 2) * b1),
            -ell + n * (a + ((k + 1) / 2) * c + a1 + c1),
            1 + n * (a + ((k - 1) / 2) * c + a1 + ((ell + 1) / 2) * b1));
        t.expect(akbl == expected, [&] {
          return "A^k B^l closed form mismatch, " +
                 describe_context(n, bits, k, ell);
        });
      }
      Mat2 akblak = mat_mul(akbl, ak);
      {
        Mat2 expected(
            m, n * (b + ((k - 1) / 2) * c + ((ell - 1) / 2) * b1 + c1 + eps),
            k + n * (c + a1 + c1 + eps), -ell + n * (c + a1 + c1),
            n * (b + ((k + 1) / 2) * c + ((ell + 1) / 2) * b1 + c1 + eps));
        t.expect(akblak == expected, [&] {
          return "A^k B^l A^k closed form mismatch, " +
                 describe_context(n, bits, k, ell);
        });
      }
      Mat2 sq = mat_mul(akblak, akblak);
      {
        Mat2 expected(m, -1, n * (c + b1), n * (c + b1), -1);
        t.expect(sq == expected, [&] {
          return "(A^k B^l A^k)^2 closed form mismatch, " +
                 describe_context(n, bits, k, ell);
        });
        t.expect(sq == aba2, [&] {
          return "(A^k B^l A^k)^2 != (A B A)^2, " +
                 describe_context(n, bits, k, ell);
        });
      }
      t.expect(mat_mul(sq, sl2_inverse(aba2)) == Mat2::identity(m), [&] {
        return "(A^k B^l A^k)^2 (A B A)^-2 != I, " +
               describe_context(n, bits, k, ell);
      });
    }
  }
}

// 11. Half-residue membership: e = (N/2)s (mod N) with N*s = 0 (mod 2N) for
// some bit s iff e = 0 (mod N).
void check_half_residue(i64 n, i64 /*max_exp*/, std::mt19937_64&, Tally& t) {
  const i64 half = n / 2;
  for (i64 e = 0; e <= 2 * n; ++e) {
    bool exists = false;
    for (i64 s = 0; s <= 1; ++s) {
      if (mod_reduce(e - half * s, n) == 0 && mod_reduce(n * s, 2 * n) == 0) {
        exists = true;
      }
    }
    bool rhs = mod_reduce(e, n) == 0;
    t.expect(exists == rhs, [&] {
      return "half-residue equivalence mismatch at e=" + std::to_string(e);
    });
  }
}

// 12. Braid-family vectors: v(R^l T^k R^l) and the braid quotient vector.
void check_braid_vectors(i64 n, i64 /*max_exp*/, std::mt19937_64& rng,
                         Tally& t) {
  for (const BitTuple& bits : all_bit_tuples()) {
    Mat2 a = lift_base_matrix(GenSide::T, bits.t, n);
    Mat2 b = lift_base_matrix(GenSide::R, bits.r, n);
    for (const auto& [h, h1] : vector_samples(n, rng)) {
      SdElement tt(n, a, h);
      SdElement rr(n, b, h1);
      for (auto [k, ell] : unit_pairs(n)) {
        SdElement tk = sd_pow(tt, k);
        SdElement rl = sd_pow(rr, ell);
        SdElement rtr = sd_mul(sd_mul(rl, tk), rl);
        {
          Mat2 m1(n, k, binom2(k), -1, (k + 1) / 2);
          Mat2 m2(n, (3 * ell + 1) / 2, 1, -ell * (3 * ell - 1) / 2, ell);
          Vec2 expected = vec_add(mat_vec(m1, h), mat_vec(m2, h1));
          t.expect(rtr.vector == expected, [&] {
            return "v(R^l T^k R^l) mismatch, " +
                   describe_context(n, bits, k, ell);
          });
        }
        SdElement trt = sd_mul(sd_mul(tk, rl), tk);
        SdElement quotient = sd_mul(trt, sd_inverse(rtr));
        {
          Vec2 expected(n, k * k * h.x2 - ell * h1.x1,
                        k * h.x2 + ell * ell * h1.x1);
          t.expect(quotient.vector == expected, [&] {
            return "braid quotient vector mismatch, " +
                   describe_context(n, bits, k, ell);
          });
        }
      }
    }
  }
}

// 13. Braid-family matrix: A^k B^l A^k (B^l A^k B^l)^{-1} = I + N*[[r, c+b'],
// [c+b', r]] with r = a+b+c+a'+b'+c'+eps.
void check_braid_matrix(i64 n, i64 /*max_exp*/, std::mt19937_64&, Tally& t) {
  const i64 m = 2 * n;
  for (const BitTuple& bits : all_bit_tuples()) {
    const i64 a = bits.t.p1, b = bits.t.p2, c = bits.t.p3;
    const i64 a1 = bits.r.p1, b1 = bits.r.p2, c1 = bits.r.p3;
    Mat2 am = lift_base_matrix(GenSide::T, bits.t, n);
    Mat2 bm = lift_base_matrix(GenSide::R, bits.r, n);
    for (auto [k, ell] : unit_pairs(n)) {
      const i64 eps = (k * ell - 1) / n;
      Mat2 ak = mat_pow(am, k);
      Mat2 bl = mat_pow(bm, ell);
      Mat2 lhs = mat_mul(mat_mul(ak, bl), ak);
      Mat2 rhs = mat_mul(mat_mul(bl, ak), bl);
      Mat2 quotient = mat_mul(lhs, sl2_inverse(rhs));
      const i64 r = a + b + c + a1 + b1 + c1 + eps;
      Mat2 expected(m, 1 + n * r, n * (c + b1), n * (c + b1), 1 + n * r);
      t.expect(quotient == expected, [&] {
        return "braid quotient matrix mismatch, " +
               describe_context(n, bits, k, ell);
      });
    }
  }
}

}  // namespace

std::vector<CheckResult> run_identity_checks(i64 dim, i64 max_exp,
                                             std::uint64_t seed) {
  if (dim < 2 || dim % 2 != 0 || 2 * dim > kMaxModulus) {
    throw std::invalid_argument(
        "identity checks require an even dimension in [2, " +
        std::to_string(kMaxModulus / 2) + "], got " + std::to_string(dim));
  }
  if (max_exp < 1 || max_exp > 4096) {
    throw std::invalid_argument("max_exp must lie in [1, 4096]");
  }
  const i64 exp_cap = std::max(max_exp, dim);
  const std::pair<const char*, CheckFn> checks[] = {
      {"group-power-vs-iteration", check_group_power},
      {"matrix-perturbation-power", check_perturbation_power},
      {"binomial-parity", check_binomial_parity},
      {"power-matrix-closed-form", check_power_matrix},
      {"power-vector-closed-form", check_power_vectors},
      {"order-power-form", check_order_power},
      {"split-commutator-vector", check_commutator_vector},
      {"split-commutator-matrix", check_commutator_matrix},
      {"square-relation-vectors", check_square_vectors},
      {"square-relation-matrices", check_square_matrices},
      {"half-residue-membership", check_half_residue},
      {"braid-relation-vectors", check_braid_vectors},
      {"braid-relation-matrix", check_braid_matrix},
  };
  std::vector<CheckResult> results;
  results.reserve(std::size(checks));
  for (const auto& [name, fn] : checks) {
    std::mt19937_64 rng(seed ^ std::hash<std::string_view>{}(name));
    Tally tally;
    fn(dim, exp_cap, rng, tally);
    results.push_back({name, tally.ok, tally.cases, tally.detail});
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace cliffsplit
