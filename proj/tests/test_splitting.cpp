#include "cliffsplit/splitting.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"

using namespace cliffsplit;

TEST_CASE("parameter validation and rendering") {
  GenParams p = canonical_witness_params(6);
  CHECK(p.dim == 6);
  CHECK(p.a == 0);
  CHECK(p.b == 0);
  CHECK(p.c == 1);
  CHECK(p.a1 == 0);
  CHECK(p.b1 == 1);
  CHECK(p.c1 == 0);
  CHECK(p.u == 0);
  CHECK(p.v == 0);
  CHECK(p.u1 == 0);
  CHECK(p.v1 == 0);
  CHECK(to_string(p) ==
        "a=0 b=0 c=1 a'=0 b'=1 c'=0 u=0 v=0 u'=0 v'=0");

  GenParams bad_bit = p;
  bad_bit.c = 2;
  CHECK_THROWS_AS(validate_params(bad_bit), std::invalid_argument);
  GenParams bad_res = p;
  bad_res.v = 6;
  CHECK_THROWS_AS(validate_params(bad_res), std::invalid_argument);
  GenParams bad_dim = p;
  bad_dim.dim = 7;
  CHECK_THROWS_AS(validate_params(bad_dim), std::invalid_argument);
  CHECK_THROWS_AS(canonical_witness_params(5), std::invalid_argument);
}

TEST_CASE("generator construction from parameters") {
  auto [t, r] = build_generators(canonical_witness_params(6));
  CHECK(t.matrix == Mat2(12, 7, 1, 6, 1));
  CHECK(t.vector == Vec2::zero(6));
  CHECK(r.matrix == Mat2(12, 1, 6, 11, 7));
  CHECK(r.vector == Vec2::zero(6));
  CHECK(sigma(t) == Mat2(6, 1, 1, 0, 1));
  CHECK(sigma(r) == Mat2(6, 1, 0, 5, 1));

  // sigma(T) = t and sigma(R) = r hold for every parameter tuple.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::uint64_t> dist(
        0, total_candidates(6) - 1);
    GenParams q = params_at_index(6, dist(rng));
    auto [tt, rr] = build_generators(q);
    CHECK(sigma(tt) == Mat2(6, 1, 1, 0, 1));
    CHECK(sigma(rr) == Mat2(6, 1, 0, 5, 1));
  }
}

TEST_CASE("literal condition checks on the canonical parameters") {
  for (i64 n : {2, 6, 10}) {
    CAPTURE(n);
    ConditionReport report = check_conditions_direct(canonical_witness_params(n));
    CHECK(report.order_ok);
    CHECK(report.commute_ok);
    CHECK(report.square_ok);
    CHECK(report.braid_ok);
    CHECK(report.all_ok);
    CHECK(report.failing.empty());
    CHECK(report.instances.size() == enumerate_relations(n).size());
    CHECK(passes_direct(canonical_witness_params(n)));
  }
  for (i64 n : {4, 8, 12}) {
    CAPTURE(n);
    ConditionReport report = check_conditions_direct(canonical_witness_params(n));
    CHECK_FALSE(report.all_ok);
    CHECK_FALSE(report.failing.empty());
    CHECK_FALSE(passes_direct(canonical_witness_params(n)));
  }
}

TEST_CASE("per-family criteria match the literal evaluation at N = 2") {
  // The whole tuple space at N = 2 has 64 * 2^4 = 1024 elements.
  for (std::uint64_t idx = 0; idx < total_candidates(2); ++idx) {
    GenParams p = params_at_index(2, idx);
    CAPTURE(to_string(p));
    bool order_direct = direct_condition(p, RelationFamily::OrderT) &&
                        direct_condition(p, RelationFamily::OrderR);
    CHECK(criterion_orders(p) == order_direct);
    CHECK(criterion_commute(p) == direct_condition(p, RelationFamily::Commute));
    CHECK(criterion_square(p) == direct_condition(p, RelationFamily::Square));
    CHECK(criterion_braid(p) == direct_condition(p, RelationFamily::Braid));
    CHECK(criteria_all(p) == passes_direct(p));
    CHECK(criteria_all(p) == criterion_combined_mod4_2(p));
  }
}

TEST_CASE("per-family criteria match the literal evaluation on samples") {
  for (i64 n : {4, 6, 8}) {
    const std::uint64_t total = total_candidates(n);
    for (std::uint64_t idx = 0; idx < total; idx += 97) {
      GenParams p = params_at_index(n, idx);
      CAPTURE(to_string(p));
      bool order_direct = direct_condition(p, RelationFamily::OrderT) &&
                          direct_condition(p, RelationFamily::OrderR);
      CHECK(criterion_orders(p) == order_direct);
      CHECK(criterion_commute(p) ==
            direct_condition(p, RelationFamily::Commute));
      CHECK(criterion_square(p) == direct_condition(p, RelationFamily::Square));
      CHECK(criterion_braid(p) == direct_condition(p, RelationFamily::Braid));
      CHECK(criteria_all(p) == passes_direct(p));
    }
  }
}

TEST_CASE("the combined criterion is restricted to N = 2 (mod 4)") {
  CHECK(criterion_combined_mod4_2(canonical_witness_params(6)));
  GenParams p = canonical_witness_params(4);
  CHECK_THROWS_AS(criterion_combined_mod4_2(p), std::domain_error);

  // Where defined, it coincides with the conjunction of all four criteria.
  for (std::uint64_t idx = 0; idx < total_candidates(6); idx += 131) {
    GenParams q = params_at_index(6, idx);
    CAPTURE(to_string(q));
    CHECK(criterion_combined_mod4_2(q) == criteria_all(q));
  }
}

TEST_CASE("candidate indexing") {
  CHECK(total_candidates(2) == 1024);
  CHECK(total_candidates(4) == 16384);
  CHECK(total_candidates(6) == 82944);

  GenParams zero = params_at_index(6, 0);
  CHECK(zero == GenParams{6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  // v' is the innermost coordinate of the lexicographic order.
  GenParams one = params_at_index(6, 1);
  CHECK(one.v1 == 1);
  CHECK(index_of_params(one) == 1);

  for (std::uint64_t idx = 0; idx < total_candidates(2); ++idx) {
    CHECK(index_of_params(params_at_index(2, idx)) == idx);
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(0,
                                                    total_candidates(6) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t idx = dist(rng);
    CHECK(index_of_params(params_at_index(6, idx)) == idx);
  }
  CHECK_THROWS_AS(params_at_index(2, 1024), std::invalid_argument);
}

TEST_CASE("witness search at N = 2") {
  SplitVerdict fast = search_witness(2);
  CHECK(fast.dim == 2);
  CHECK(fast.splits);
  CHECK(fast.mode == SearchMode::Direct);
  CHECK(fast.candidates_checked == 1024);
  REQUIRE(fast.witness_count.has_value());
  CHECK(*fast.witness_count == 256);
  REQUIRE(fast.witness.has_value());
  CHECK(*fast.witness == GenParams{2, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0});

  SplitVerdict full = search_witness(2, {.exhaustive = true});
  CHECK(full.mode == SearchMode::Exhaustive);
  CHECK(full.splits);
  CHECK(full.candidates_checked == 1024);
  CHECK(*full.witness_count == 256);
  CHECK(*full.witness == *fast.witness);
}

TEST_CASE("witness search at N = 4 finds nothing") {
  SplitVerdict fast = search_witness(4);
  CHECK_FALSE(fast.splits);
  CHECK_FALSE(fast.witness.has_value());
  REQUIRE(fast.witness_count.has_value());
  CHECK(*fast.witness_count == 0);
  CHECK(fast.candidates_checked == 16384);

  SplitVerdict full = search_witness(4, {.exhaustive = true});
  CHECK_FALSE(full.splits);
  CHECK_FALSE(full.witness.has_value());
  CHECK(*full.witness_count == 0);
  CHECK(full.candidates_checked == 16384);
}

TEST_CASE("witness search at N = 6 and N = 10") {
  SplitVerdict six = search_witness(6);
  CHECK(six.splits);
  CHECK(*six.witness == GenParams{6, 0, 0, 0, 0, 0, 0, 0, 3, 3, 0});
  CHECK(*six.witness_count == 2304);
  CHECK(six.candidates_checked == 82944);

  SplitVerdict ten = search_witness(10);
  CHECK(ten.splits);
  CHECK(*ten.witness == GenParams{10, 0, 0, 0, 0, 0, 0, 0, 5, 5, 0});
  CHECK(*ten.witness_count == 6400);
}

TEST_CASE("exhaustive search is independent of the worker count") {
  SplitVerdict one = search_witness(6, {.exhaustive = true, .jobs = 1});
  SplitVerdict three = search_witness(6, {.exhaustive = true, .jobs = 3});
  CHECK(one.splits == three.splits);
  CHECK(*one.witness == *three.witness);
  CHECK(*one.witness_count == *three.witness_count);
  CHECK(one.candidates_checked == three.candidates_checked);
  CHECK(one.note == three.note);

  // And the exhaustive run agrees with the fast path.
  SplitVerdict fast = search_witness(6);
  CHECK(one.splits == fast.splits);
  CHECK(*one.witness == *fast.witness);
  CHECK(*one.witness_count == *fast.witness_count);
}

TEST_CASE("search guards") {
  CHECK_THROWS_AS(search_witness(5), std::invalid_argument);
  CHECK_THROWS_AS(search_witness(0), std::invalid_argument);
  // Default bounds: 64 for the fast scan, 12 for the exhaustive scan.
  CHECK_THROWS_AS(search_witness(66), std::invalid_argument);
  CHECK_THROWS_AS(search_witness(14, {.exhaustive = true}),
                  std::invalid_argument);
  // Raising the bound admits the dimension (fast path stays cheap).
  SplitVerdict wide = search_witness(68, {.bound = 70});
  CHECK_FALSE(wide.splits);
  CHECK(*wide.witness_count == 0);
  SplitVerdict fourteen = search_witness(14);
  CHECK(fourteen.splits);
  CHECK(*fourteen.witness == GenParams{14, 0, 0, 0, 0, 0, 0, 0, 7, 7, 0});
}

TEST_CASE("closed-form verdicts") {
  for (i64 n = 2; n <= 24; n += 2) {
    CAPTURE(n);
    SplitVerdict v = verdict(n);
    CHECK(v.dim == n);
    CHECK(v.splits == (n % 4 == 2));
    CHECK(v.mode == SearchMode::ClosedForm);
    CHECK(v.candidates_checked == 0);
    CHECK_FALSE(v.note.empty());
    if (n % 4 == 2) {
      REQUIRE(v.witness.has_value());
      CHECK(*v.witness == canonical_witness_params(n));
    } else {
      CHECK_FALSE(v.witness.has_value());
    }
  }

  CHECK_THROWS_AS(verdict(7), std::invalid_argument);
  try {
    verdict(7);
    FAIL("expected an exception for an odd dimension");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("even dimensions only") !=
          std::string::npos);
    CHECK(std::string(e.what()).find("odd dimensions are known to admit") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(verdict(0), std::invalid_argument);
}

TEST_CASE("search modes render distinctly") {
  CHECK(to_string(SearchMode::ClosedForm) == "closed-form");
  CHECK(to_string(SearchMode::Direct) == "direct");
  CHECK(to_string(SearchMode::Exhaustive) == "exhaustive");
}
