#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffsplit/semidirect.hpp"
#include "cliffsplit/sl2.hpp"

namespace cliffsplit {

// The decision engine. A candidate splitting homomorphism
// SL(2, Z_N) -> G(N)/K is determined by lifts T, R of the generators t, r;
// the lifts are parameterized by ten values (six bits, four residues). The
// homomorphism exists iff the images satisfy every presentation relation in
// the quotient, which this module checks both literally (word evaluation in
// G(N), K-membership) and through closed-form parity criteria proven
// equivalent to the literal check (and re-verified here by the test suite).

struct GenParams {
  i64 dim;                   // even N >= 2
  int a, b, c, a1, b1, c1;   // bits in {0,1}; a1,b1,c1 are a',b',c'
  i64 u, v, u1, v1;          // residues in [0,N); u1,v1 are u',v'

  bool operator==(const GenParams&) const = default;
};

std::string to_string(const GenParams& p);
std::ostream& operator<<(std::ostream& os, const GenParams& p);

// Throws std::invalid_argument unless dim is even, 2 <= dim <= kMaxModulus/2,
// bits are in {0,1} and residues are in [0, dim).
void validate_params(const GenParams& p);

// T = (A, (u,v)), R = (B, (u',v')) with A, B from lift_base_matrix. The
// construction guarantees sigma(T) = t and sigma(R) = r.
std::pair<SdElement, SdElement> build_generators(const GenParams& p);

// The distinguished witness parameters c = b' = 1, all other parameters 0,
// giving T = ([[1+N,1],[N,1]], 0) and R = ([[1,N],[-1,1+N]], 0). It passes
// all splitting conditions exactly when N = 2 (mod 4).
GenParams canonical_witness_params(i64 n);

// -- Literal condition evaluation --------------------------------------------

struct InstanceResult {
  RelationInstance instance;
  bool holds;  // relation words land in the same K-coset
};

struct ConditionReport {
  bool order_ok = false;    // T^N in K and R^N in K
  bool commute_ok = false;  // all COMMUTE instances
  bool square_ok = false;   // all SQUARE instances
  bool braid_ok = false;    // all BRAID instances
  bool all_ok = false;
  std::vector<InstanceResult> instances;  // one entry per relation instance
  std::vector<RelationInstance> failing;
};

// Evaluates every relation instance literally: both sides of the relation
// word are evaluated in G(N) via sd_pow/sd_mul and compared with
// coset_equal. (Condition sigma(T) = t, sigma(R) = r holds by construction.)
ConditionReport check_conditions_direct(const GenParams& p);

// Same literal evaluation, restricted to one relation family.
bool direct_condition(const GenParams& p, RelationFamily family);

// Early-exit literal evaluation of all families (cheapest first); equal to
// check_conditions_direct(p).all_ok.
bool passes_direct(const GenParams& p);

// -- Closed-form criteria ----------------------------------------------------
// Each criterion is equivalent to the literal check of its relation family
// for every parameter tuple; the equivalence is enforced by the acceptance
// suite over the full tuple space for small N.

// Order relations:  v = (N/2)c + 1 (mod 2)  and  u' = (N/2)b' + 1 (mod 2).
bool criterion_orders(const GenParams& p);

// Commute relations: for N = 2 (mod 4): v = 1 + c and u' = 1 + b' (mod 2);
// for N = 0 (mod 4): v = 1 and u' = 1 (mod 2).
bool criterion_commute(const GenParams& p);

// Square relations: 3(k^2-1)v = 0 and (l^2-1)u' = 0 (mod N) for every unit
// pair (k, l).
bool criterion_square(const GenParams& p);

// Braid relations: v, u' in {0, N/2} and 2v/N + 2u'/N = c + b' (mod 2).
bool criterion_braid(const GenParams& p);

// Combined criterion for N = 2 (mod 4) only (throws std::domain_error
// otherwise): v = (N/2)(c+1) (mod N) and u' = (N/2)(b'+1) (mod N);
// equivalent to the conjunction of all four families for such N.
bool criterion_combined_mod4_2(const GenParams& p);

// Conjunction of the four family criteria (any even N).
bool criteria_all(const GenParams& p);

// -- Search and verdict --------------------------------------------------

enum class SearchMode { ClosedForm, Direct, Exhaustive };

std::string to_string(SearchMode mode);

struct SplitVerdict {
  i64 dim = 0;
  bool splits = false;
  std::optional<GenParams> witness;            // lexicographically smallest
  std::optional<std::uint64_t> witness_count;  // exact number of passing tuples
  SearchMode mode = SearchMode::ClosedForm;
  std::uint64_t candidates_checked = 0;  // 0 for the closed-form verdict
  std::string note;
};

// Size of the candidate space: 64 * N^4.
std::uint64_t total_candidates(i64 n);

// The tuple at a given lexicographic index (order a,b,c,a',b',c',u,v,u',v')
// and its inverse; index ranges over [0, total_candidates(n)).
GenParams params_at_index(i64 n, std::uint64_t index);
std::uint64_t index_of_params(const GenParams& p);

struct SearchOptions {
  bool exhaustive = false;  // literal evaluation of every tuple
  int jobs = 0;             // worker threads; 0 = env CLIFFORD_SPLIT_JOBS or 1
  i64 bound = 0;            // max dim; 0 = default (64 fast, 12 exhaustive)
};

inline constexpr i64 kDefaultFastBound = 64;
inline constexpr i64 kDefaultExhaustiveBound = 12;
inline constexpr const char* kJobsEnvVar = "CLIFFORD_SPLIT_JOBS";

// Searches the 64 * N^4 tuple space. Fast mode decides every tuple through
// the closed-form criteria (which do not involve u, v', so the scan runs
// over 64 * N^2 combinations and multiplies the count by N^2) and
// re-confirms any reported witness literally; exhaustive mode evaluates
// every tuple literally. Both modes return the lexicographically smallest
// witness and the exact count of passing tuples, independent of the worker
// count. Throws std::invalid_argument for odd, undersized or over-bound N.
SplitVerdict search_witness(i64 n, const SearchOptions& options = {});

// The closed-form verdict: splits iff N = 2 (mod 4), with the validated
// canonical witness attached when it splits. Throws std::invalid_argument
// for odd N (odd dimensions always split and are outside this machinery).
SplitVerdict verdict(i64 n);

}  // namespace cliffsplit
