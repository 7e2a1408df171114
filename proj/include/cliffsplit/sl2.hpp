#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliffsplit/modmat.hpp"

namespace cliffsplit {

// The group SL(2, Z_N) is generated by
//   t = [[1,1],[0,1]]  and  r = [[1,0],[-1,1]]  (entries mod N),
// subject to four relation families:
//   ORDER    t^N = 1 and r^N = 1
//   COMMUTE  t^k r^l = r^l t^k           for N = k*l with gcd(k,l) = 1
//   SQUARE   (t^k r^l t^k)^2 = (t r t)^2 for k*l = 1 (mod N), 1 <= k,l < N
//   BRAID    t^k r^l t^k = r^l t^k r^l   for k*l = 1 (mod N), 1 <= k,l < N
// This module enumerates the relation instances, verifies them in the
// matrix group, and provides generic word evaluation so the same words can
// be evaluated in other groups.

enum class RelationFamily { OrderT, OrderR, Commute, Square, Braid };

std::string to_string(RelationFamily family);

struct RelationInstance {
  RelationFamily family;
  i64 k;    // OrderT: k = N. OrderR: k = 0.
  i64 ell;  // OrderT: ell = 0. OrderR: ell = N.

  bool operator==(const RelationInstance&) const = default;
};

std::string to_string(const RelationInstance& rel);

// Generators t, r over Z_N. Throws std::invalid_argument for N < 2.
std::pair<Mat2, Mat2> sl2_generators(i64 n);

// Deterministic enumeration of every relation instance for Z_N, ordered by
// family (OrderT, OrderR, Commute, Square, Braid) and then by k ascending.
// COMMUTE runs over all ordered factorizations N = k*l with gcd(k,l) = 1
// (both (k,l) and (l,k), including (1,N) and (N,1)); SQUARE and BRAID run
// over all ordered pairs (k, l) with 1 <= k,l <= N-1 and k*l = 1 (mod N),
// i.e. one instance per unit k of Z_N. Instances are intentionally not
// deduplicated when families overlap for special N.
std::vector<RelationInstance> enumerate_relations(i64 n);

// True iff t, r satisfy every enumerated relation in SL(2, Z_N).
bool verify_presentation(i64 n);

// -- Generic words over the two generator symbols ---------------------------

enum class GenSymbol { T, R };

struct WordFactor {
  GenSymbol sym;
  i64 exp;  // >= 0

  bool operator==(const WordFactor&) const = default;
};

using Word = std::vector<WordFactor>;

// The two sides (lhs, rhs) of a relation instance as words; a relation
// holds in a group iff both sides evaluate to the same element (or, in a
// quotient, to the same coset).
std::pair<Word, Word> relation_words(const RelationInstance& rel);

// Evaluates a word left-to-right through injected group operations, so the
// same word can be evaluated in the matrix group, the semidirect product,
// or any other monoid: mul(G, G) -> G and pow(G, i64) -> G with pow(g, 0)
// equal to the group identity.
template <typename G, typename Mul, typename Pow>
G evaluate_word(const Word& word, const G& image_t, const G& image_r,
                const G& identity, Mul mul, Pow pow) {
  G acc = identity;
  for (const WordFactor& f : word) {
    const G& base = (f.sym == GenSymbol::T) ? image_t : image_r;
    acc = mul(acc, pow(base, f.exp));
  }
  return acc;
}

}  // namespace cliffsplit
