#include "cliffsplit/sl2.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cliffsplit {

namespace {

void check_dim(i64 n) {
  if (n < 2 || n > kMaxModulus) {
    throw std::invalid_argument("dimension must lie in [2, " +
                                std::to_string(kMaxModulus) + "], got " +
                                std::to_string(n));
  }
}

// Inverse of k modulo n for gcd(k, n) = 1, via extended Euclid.
i64 mod_inverse(i64 k, i64 n) {
  i64 old_r = k, r = n;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return mod_reduce(old_s, n);
}

}  // namespace

std::string to_string(RelationFamily family) {
  switch (family) {
    case RelationFamily::OrderT:
      return "order-t";
    case RelationFamily::OrderR:
      return "order-r";
    case RelationFamily::Commute:
      return "commute";
    case RelationFamily::Square:
      return "square";
    case RelationFamily::Braid:
      return "braid";
  }
  return "unknown";
}

std::string to_string(const RelationInstance& rel) {
  std::ostringstream os;
  os << to_string(rel.family);
  switch (rel.family) {
    case RelationFamily::OrderT:
      os << " t^" << rel.k << " = 1";
      break;
    case RelationFamily::OrderR:
      os << " r^" << rel.ell << " = 1";
      break;
    case RelationFamily::Commute:
      os << " t^" << rel.k << " r^" << rel.ell << " = r^" << rel.ell << " t^"
         << rel.k;
      break;
    case RelationFamily::Square:
      os << " (t^" << rel.k << " r^" << rel.ell << " t^" << rel.k
         << ")^2 = (t r t)^2";
      break;
    case RelationFamily::Braid:
      os << " t^" << rel.k << " r^" << rel.ell << " t^" << rel.k << " = r^"
         << rel.ell << " t^" << rel.k << " r^" << rel.ell;
      break;
  }
  return os.str();
}

std::pair<Mat2, Mat2> sl2_generators(i64 n) {
  check_dim(n);
  return {Mat2(n, 1, 1, 0, 1), Mat2(n, 1, 0, -1, 1)};
}

std::vector<RelationInstance> enumerate_relations(i64 n) {
  check_dim(n);
  std::vector<RelationInstance> rels;
  rels.push_back({RelationFamily::OrderT, n, 0});
  rels.push_back({RelationFamily::OrderR, 0, n});
  for (i64 k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    i64 ell = n / k;
    if (std::gcd(k, ell) != 1) continue;
    rels.push_back({RelationFamily::Commute, k, ell});
  }
  for (i64 k = 1; k <= n - 1; ++k) {
    if (std::gcd(k, n) != 1) continue;
    rels.push_back({RelationFamily::Square, k, mod_inverse(k, n)});
  }
  const std::size_t square_begin = rels.size();
  for (std::size_t i = 0; i < square_begin; ++i) {
    if (rels[i].family == RelationFamily::Square) {
      rels.push_back({RelationFamily::Braid, rels[i].k, rels[i].ell});
    }
  }
  return rels;
}

std::pair<Word, Word> relation_words(const RelationInstance& rel) {
  switch (rel.family) {
    case RelationFamily::OrderT:
      return {Word{{GenSymbol::T, rel.k}}, Word{}};
    case RelationFamily::OrderR:
      return {Word{{GenSymbol::R, rel.ell}}, Word{}};
    case RelationFamily::Commute:
      return {Word{{GenSymbol::T, rel.k}, {GenSymbol::R, rel.ell}},
              Word{{GenSymbol::R, rel.ell}, {GenSymbol::T, rel.k}}};
    case RelationFamily::Square:
      return {Word{{GenSymbol::T, rel.k},
                   {GenSymbol::R, rel.ell},
                   {GenSymbol::T, 2 * rel.k},
                   {GenSymbol::R, rel.ell},
                   {GenSymbol::T, rel.k}},
              Word{{GenSymbol::T, 1},
                   {GenSymbol::R, 1},
                   {GenSymbol::T, 2},
                   {GenSymbol::R, 1},
                   {GenSymbol::T, 1}}};
    case RelationFamily::Braid:
      return {Word{{GenSymbol::T, rel.k},
                   {GenSymbol::R, rel.ell},
                   {GenSymbol::T, rel.k}},
              Word{{GenSymbol::R, rel.ell},
                   {GenSymbol::T, rel.k},
                   {GenSymbol::R, rel.ell}}};
  }
  throw std::invalid_argument("unknown relation family");
}

bool verify_presentation(i64 n) {
  auto [t, r] = sl2_generators(n);
  const Mat2 id = Mat2::identity(n);
  auto mul = [](const Mat2& x, const Mat2& y) { return mat_mul(x, y); };
  auto pow = [](const Mat2& x, i64 k) { return mat_pow(x, k); };
  for (const RelationInstance& rel : enumerate_relations(n)) {
    auto [lhs, rhs] = relation_words(rel);
    Mat2 left = evaluate_word(lhs, t, r, id, mul, pow);
    Mat2 right = evaluate_word(rhs, t, r, id, mul, pow);
    if (!(left == right)) return false;
  }
  return true;
}

}  // namespace cliffsplit
