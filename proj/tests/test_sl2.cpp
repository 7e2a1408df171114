#include "cliffsplit/sl2.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"

using namespace cliffsplit;

namespace {

std::vector<std::pair<i64, i64>> pairs_of(const std::vector<RelationInstance>& rels,
                                          RelationFamily family) {
  std::vector<std::pair<i64, i64>> out;
  for (const RelationInstance& rel : rels) {
    if (rel.family == family) out.emplace_back(rel.k, rel.ell);
  }
  return out;
}

Mat2 eval_mat(const Word& word, const Mat2& t, const Mat2& r) {
  return evaluate_word(
      word, t, r, Mat2::identity(t.m),
      [](const Mat2& x, const Mat2& y) { return mat_mul(x, y); },
      [](const Mat2& x, i64 k) { return mat_pow(x, k); });
}

}  // namespace

TEST_CASE("generators of SL(2, Z_N)") {
  auto [t, r] = sl2_generators(6);
  CHECK(t == Mat2(6, 1, 1, 0, 1));
  CHECK(r == Mat2(6, 1, 0, 5, 1));
  CHECK(t.det() == 1);
  CHECK(r.det() == 1);
  CHECK_THROWS_AS(sl2_generators(1), std::invalid_argument);
}

TEST_CASE("relation enumeration for N = 6") {
  auto rels = enumerate_relations(6);
  // 2 order + 4 commute + 2 square + 2 braid.
  CHECK(rels.size() == 10);

  CHECK(rels[0] == RelationInstance{RelationFamily::OrderT, 6, 0});
  CHECK(rels[1] == RelationInstance{RelationFamily::OrderR, 0, 6});

  auto commute = pairs_of(rels, RelationFamily::Commute);
  CHECK(commute == std::vector<std::pair<i64, i64>>{
                       {1, 6}, {2, 3}, {3, 2}, {6, 1}});
  auto square = pairs_of(rels, RelationFamily::Square);
  CHECK(square == std::vector<std::pair<i64, i64>>{{1, 1}, {5, 5}});
  auto braid = pairs_of(rels, RelationFamily::Braid);
  CHECK(braid == square);

  // Family blocks appear in enumeration order: order, commute, square, braid.
  CHECK(rels[2].family == RelationFamily::Commute);
  CHECK(rels[6].family == RelationFamily::Square);
  CHECK(rels[8].family == RelationFamily::Braid);
}

TEST_CASE("relation enumeration for N = 4 and N = 2") {
  auto rels4 = enumerate_relations(4);
  CHECK(pairs_of(rels4, RelationFamily::Commute) ==
        std::vector<std::pair<i64, i64>>{{1, 4}, {4, 1}});
  CHECK(pairs_of(rels4, RelationFamily::Square) ==
        std::vector<std::pair<i64, i64>>{{1, 1}, {3, 3}});
  CHECK(pairs_of(rels4, RelationFamily::Braid) ==
        std::vector<std::pair<i64, i64>>{{1, 1}, {3, 3}});

  auto rels2 = enumerate_relations(2);
  CHECK(pairs_of(rels2, RelationFamily::Commute) ==
        std::vector<std::pair<i64, i64>>{{1, 2}, {2, 1}});
  CHECK(pairs_of(rels2, RelationFamily::Square) ==
        std::vector<std::pair<i64, i64>>{{1, 1}});
  CHECK(rels2.size() == 2 + 2 + 1 + 1);
}

TEST_CASE("commute pairs are the coprime ordered factorizations") {
  for (i64 n : {2, 4, 6, 8, 10, 12, 30}) {
    std::set<std::pair<i64, i64>> expected;
    for (i64 k = 1; k <= n; ++k) {
      if (n % k == 0 && std::gcd(k, n / k) == 1) expected.insert({k, n / k});
    }
    auto listed = pairs_of(enumerate_relations(n), RelationFamily::Commute);
    CHECK(std::set<std::pair<i64, i64>>(listed.begin(), listed.end()) ==
          expected);
    CHECK(listed.size() == expected.size());
  }
}

TEST_CASE("square and braid pairs are the units of Z_N") {
  for (i64 n : {2, 4, 6, 8, 12}) {
    auto square = pairs_of(enumerate_relations(n), RelationFamily::Square);
    std::size_t units = 0;
    for (i64 k = 1; k < n; ++k) {
      if (std::gcd(k, n) == 1) ++units;
    }
    CHECK(square.size() == units);
    for (auto [k, ell] : square) {
      CHECK(((k * ell) % n) == 1);
      CHECK(1 <= k);
      CHECK(k < n);
      CHECK(1 <= ell);
      CHECK(ell < n);
    }
  }
}

TEST_CASE("presentation relations hold in the matrix group") {
  for (i64 n = 2; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(verify_presentation(n));
  }
}

TEST_CASE("relation words") {
  auto [order_lhs, order_rhs] =
      relation_words({RelationFamily::OrderT, 6, 0});
  CHECK(order_lhs == Word{{GenSymbol::T, 6}});
  CHECK(order_rhs.empty());

  auto [braid_lhs, braid_rhs] = relation_words({RelationFamily::Braid, 5, 5});
  CHECK(braid_lhs == Word{{GenSymbol::T, 5}, {GenSymbol::R, 5},
                          {GenSymbol::T, 5}});
  CHECK(braid_rhs == Word{{GenSymbol::R, 5}, {GenSymbol::T, 5},
                          {GenSymbol::R, 5}});

  auto [square_lhs, square_rhs] =
      relation_words({RelationFamily::Square, 5, 5});
  CHECK(square_lhs == Word{{GenSymbol::T, 5},
                           {GenSymbol::R, 5},
                           {GenSymbol::T, 10},
                           {GenSymbol::R, 5},
                           {GenSymbol::T, 5}});
  CHECK(square_rhs == Word{{GenSymbol::T, 1},
                           {GenSymbol::R, 1},
                           {GenSymbol::T, 2},
                           {GenSymbol::R, 1},
                           {GenSymbol::T, 1}});
}

TEST_CASE("word evaluation reproduces the relations in matrices") {
  auto [t, r] = sl2_generators(6);
  for (const RelationInstance& rel : enumerate_relations(6)) {
    CAPTURE(to_string(rel));
    auto [lhs, rhs] = relation_words(rel);
    CHECK(eval_mat(lhs, t, r) == eval_mat(rhs, t, r));
  }
  // And a non-relation does not hold: t r != r t in SL(2, Z_6).
  CHECK(mat_mul(t, r) != mat_mul(r, t));
}

TEST_CASE("relation rendering") {
  CHECK(to_string(RelationFamily::Commute) == "commute");
  CHECK(to_string(RelationInstance{RelationFamily::Braid, 2, 3}) ==
        "braid t^2 r^3 t^2 = r^3 t^2 r^3");
  CHECK(to_string(RelationInstance{RelationFamily::OrderT, 6, 0}) ==
        "order-t t^6 = 1");
}
