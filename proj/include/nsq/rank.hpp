#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nsq/quotient.hpp"
#include "nsq/semigroup.hpp"

namespace nsq {

/// Budgets shared by the bounded searches.  Zero means "use the default
/// derived from the input" where noted.
struct SearchBudgets {
  i64 d_max = 8;
  i64 gen_bound = 0;        // 0 → 8 · max(min_gens)
  i64 pool_limit = 40;      // witness-tuple candidate pool cap
  i64 max_nodes = 4'000'000;  // per-search DFS/tuple budget
  i64 budget_ms = 0;        // 0 → no wall-clock cap
  bool witness_search = true;  // let quotient_rank_bounds raise the lower bound
  bool rep_search = true;      // let quotient_rank_bounds lower the upper bound
  bool med_search = true;      // let quotient_rank_bounds decompose MED inputs
};

// ---- machine-checkable certificates -------------------------------------

/// One row of the even-subset obstruction table: for index set I (bitmask
/// over the generator list), is a_I an element of ⟨a_j : j ∉ I⟩?
struct SubsetCheck {
  std::uint32_t mask = 0;
  i64 sum = 0;
  bool member = false;
};

/// Every proper nonempty subset refuted: quotient rank equals the embedding
/// dimension.
struct FullRankCert {
  std::vector<i64> gens;
  std::vector<SubsetCheck> table;
};

/// One row of the halving table for a witness tuple: is s_I even with
/// s_I/2 ∈ S?
struct HalvingCheck {
  std::uint32_t mask = 0;
  i64 sum = 0;
  bool even = false;
  bool half_member = false;
};

/// A (k+1)-tuple of elements with no nonempty subset halving back into S:
/// S is not a k-quotient.
struct NotKQuotientCert {
  int k = 0;
  std::vector<i64> tuple;
  std::vector<HalvingCheck> table;
};

/// Ordering of the minimal generators with consecutive gcds equal to the
/// content and each interior generator dividing the sum of its neighbours:
/// quotient rank ≤ 2.
struct PMOrderingCert {
  std::vector<i64> ordering;
};

/// An explicit verified representation: upper bound by exhibition.
struct RepresentationCert {
  QuotientRep rep;
};

struct InconclusiveCert {
  InconclusiveCert() = default;
  explicit InconclusiveCert(std::string why) : reason(std::move(why)) {}

  std::string reason;
  bool has_witness = false;
  std::uint32_t witness_mask = 0;
  i64 witness_sum = 0;
  std::vector<SubsetCheck> table;  // rows checked before stopping
};

using RankCertificate =
    std::variant<FullRankCert, NotKQuotientCert, PMOrderingCert, RepresentationCert, InconclusiveCert>;

struct RankBounds {
  int lower = 1;
  int upper = 1;
  bool exact = false;
  std::string lower_reason;
  std::string upper_reason;
  std::optional<RankCertificate> lower_cert;
  std::optional<RankCertificate> upper_cert;
};

// ---- operations ----------------------------------------------------------

/// First proper nonempty index subset I with a_I ∈ ⟨a_j : j ∉ I⟩, scanning by
/// cardinality then numerically; nullopt when every subset is refuted.  Works
/// on a raw generator list (duplicates allowed), as sampled by the box model.
std::optional<std::uint32_t> subset_obstruction(std::span<const i64> gens);

/// Exhaustive even-subset certificate for full quotient rank, or Inconclusive
/// with the subset that fired.  A fired subset does NOT decide non-full rank.
RankCertificate full_rank_certificate(const NumericalSemigroup& s);

/// First nonempty I ⊆ [p] with s_I even and s_I/2 ∈ S (bitmask ascending);
/// nullopt when none exists.  Elements must belong to S.
std::optional<std::uint32_t> subset_halving_search(const NumericalSemigroup& s,
                                                   std::span<const i64> elems);

/// Search (k+1)-tuples of distinct elements of S ∩ [1, element_bound] for one
/// with no halving subset; such a tuple certifies S is not a k-quotient.
/// Tuples with a repeated element always halve, so only distinct tuples are
/// scanned.  Throws errc::input_too_large when the pool exceeds
/// budgets.pool_limit.
RankCertificate not_k_quotient_search(const NumericalSemigroup& s, int k, i64 element_bound,
                                      const SearchBudgets& budgets = {});

/// Lexicographically smallest ordering of min_gens(S) satisfying the rank-2
/// criterion, or nullopt (then rank ≥ 3 whenever e(S) ≥ 3).
std::optional<std::vector<i64>> pm_ordering(const NumericalSemigroup& s);

/// Bounded search for a verified representation with ≤ k numerator
/// generators, numerators ≤ gen_bound and denominator ≤ d_max.  nullopt means
/// "none within bounds", never a proof of non-existence.  For non-primitive
/// inputs the content moves into the rep's scale.
std::optional<QuotientRep> k_quotient_rep_search(const NumericalSemigroup& s, int k, i64 d_max,
                                                 i64 gen_bound, const SearchBudgets& budgets = {});

/// Construct a verified two-generator representation of a primitive
/// rank-≤-2 semigroup from a defining rational interval: the runs of S below
/// the Frobenius number pin p and q into narrow windows, and any interval
/// [a/b, c/d] inside them with S([a/b, c/d]) = S gives S = ⟨a,c⟩/(bc−ad).
/// Candidate endpoints are tried by ascending denominator (up to max_den) and
/// checked with verify_rep, so a returned rep is always exact.  nullopt when
/// no candidate verifies (in particular when S is not proportionally
/// modular).
std::optional<QuotientRep> pm_two_gen_rep(const NumericalSemigroup& s, i64 max_den = 64);

enum class MedStatus { Verified, SearchExhausted };

struct MedDecomposition {
  MedStatus status = MedStatus::SearchExhausted;
  std::vector<i64> s1_gens;  // ⟨m, c₁, c_{m−1}⟩, a 2-quotient by the ±1 lemma
  std::vector<i64> s2_gens;  // the remaining generators, a trivial quotient
  std::optional<QuotientRep> s1_rep;
  std::optional<QuotientRep> rep;  // composed and verified against S
};

/// Split a maximal-embedding-dimension semigroup as S₁ + S₂ and compose a
/// verified (m−1)-generator representation.  Requires content 1, e(S) = m and
/// m ≥ 3: for m ≤ 2 the (m−1)-quotient conclusion breaks down (a 1-quotient
/// is cyclic), so those inputs are rejected as errc::not_med.
MedDecomposition med_decomposition(const NumericalSemigroup& s, const SearchBudgets& budgets = {});

/// Combine the certificates and bounded searches into rank bounds.
RankBounds quotient_rank_bounds(const NumericalSemigroup& s, const SearchBudgets& budgets = {});

/// Re-validate a certificate against S using only core membership.
bool recheck_certificate(const NumericalSemigroup& s, const RankCertificate& cert);

/// Indices (1-based) of the set bits of a subset mask.
std::vector<int> mask_indices(std::uint32_t mask);

/// Membership of v in ⟨g, h⟩ in O(log) time via the modular inverse.
bool two_gen_member(i64 g, i64 h, i64 v);

}  // namespace nsq
