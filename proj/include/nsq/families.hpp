#pragma once

#include <string>
#include <vector>

#include "nsq/semigroup.hpp"

namespace nsq {

/// Number of ones in the binary representation.
int popcount(i64 j);

enum class FamilyKind { NoQuotient, NoIntersection };

/// Parameters and derived data of a counterexample-family instance:
/// generators aᵢ = 2a + 2ⁱ, witnesses b_j = ω(j)·a + j and the threshold
/// N = (2k+1)·a used by the intersection family.
struct FamilyInstance {
  FamilyKind kind;
  int k;
  i64 a;
  std::vector<i64> base_gens;  // a₀ … a_k
  std::vector<i64> witnesses;  // b₁ … b_{2ᵏ−1}
  i64 threshold;               // N
  std::vector<i64> gens;       // generating set of the instance semigroup
  NumericalSemigroup semigroup;
};

/// One membership refutation; `member` must come back false.
struct RefutationRow {
  std::string label;
  i64 value;
  bool member;
};

struct FamilyProof {
  std::vector<RefutationRow> rows;
};

/// S = ⟨2a+1, 2a+2, …, 2a+2ᵏ⟩, not a k-quotient for a ≥ 2ᵏ.
FamilyInstance noquotient_family(int k, i64 a);

/// Check b_j ∉ S for every j; with the pigeonhole argument this certifies the
/// instance is not a k-quotient.  Throws errc::verification_failed on any hit
/// (which would mean a construction bug).
FamilyProof verify_noquotient_instance(const FamilyInstance& inst);

/// S = ⟨a₀,…,a_k, N−b₁,…,N−b_{2ᵏ−1}⟩, not an intersection of k-quotients.
/// The proof's final case needs a > k·2ᵏ strictly; the stated boundary
/// a = k·2ᵏ admits N = 2·a_k ∈ S and is reachable only via allow_boundary
/// (kept for the regression test documenting that failure).
FamilyInstance nointersection_family(int k, i64 a, bool allow_boundary = false);

/// Check N ∉ S and b_j ∉ ⟨a₀,…,a_k⟩ for all j.
FamilyProof verify_nointersection_instance(const FamilyInstance& inst);

/// ⟨a, a+d, …, a+kd⟩ with gcd(a, d) = 1, minimalized.
NumericalSemigroup arithmetical_family(i64 a, i64 d, int k);

/// ⟨a, ah+d, …, ah+kd⟩, minimalized.
NumericalSemigroup generalized_arithmetical_family(i64 a, i64 h, i64 d, int k);

}  // namespace nsq
