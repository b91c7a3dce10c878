#include "nsq/families.hpp"

#include <bit>
#include <numeric>

namespace nsq {

namespace {

constexpr int kMaxFamilyK = 20;  // 2ᵏ−1 witnesses; beyond this the tables explode

i64 pow2(int k) { return i64{1} << k; }

}  // namespace

int popcount(i64 j) {
  if (j < 0) fail(errc::non_positive_generator, "popcount of a negative number");
  return std::popcount(static_cast<std::uint64_t>(j));
}

FamilyInstance noquotient_family(int k, i64 a) {
  if (k < 1) fail(errc::parameter_too_small, "k must be >= 1");
  if (k > kMaxFamilyK) fail(errc::input_too_large, "k > 20");
  if (a < pow2(k))
    fail(errc::parameter_too_small,
         "a = " + std::to_string(a) + " < 2^k = " + std::to_string(pow2(k)));

  std::vector<i64> gens;
  for (int i = 0; i <= k; ++i) gens.push_back(checked_add(checked_mul(2, a), pow2(i)));
  std::vector<i64> witnesses;
  for (i64 j = 1; j < pow2(k); ++j)
    witnesses.push_back(checked_add(checked_mul(popcount(j), a), j));

  return FamilyInstance{FamilyKind::NoQuotient,
                        k,
                        a,
                        gens,
                        witnesses,
                        checked_mul(2 * k + 1, a),
                        gens,
                        NumericalSemigroup::from_generators(gens)};
}

FamilyProof verify_noquotient_instance(const FamilyInstance& inst) {
  if (inst.kind != FamilyKind::NoQuotient)
    fail(errc::verification_failed, "instance is not from noquotient_family");
  FamilyProof proof;
  for (std::size_t j = 0; j < inst.witnesses.size(); ++j) {
    const i64 b = inst.witnesses[j];
    const bool member = inst.semigroup.contains(b);
    proof.rows.push_back({"b_" + std::to_string(j + 1) + " in S", b, member});
    if (member)
      fail(errc::verification_failed,
           "b_" + std::to_string(j + 1) + " = " + std::to_string(b) + " lies in S");
  }
  return proof;
}

FamilyInstance nointersection_family(int k, i64 a, bool allow_boundary) {
  if (k < 2) fail(errc::parameter_too_small, "k must be >= 2");
  if (k > kMaxFamilyK) fail(errc::input_too_large, "k > 20");
  const i64 min_a = checked_mul(k, pow2(k));
  if (a < min_a || (a == min_a && !allow_boundary))
    fail(errc::parameter_too_small,
         "a = " + std::to_string(a) + " must exceed k*2^k = " + std::to_string(min_a) +
             (a == min_a ? " (boundary instance fails; pass allow_boundary to construct it anyway)"
                         : ""));

  std::vector<i64> base;
  for (int i = 0; i <= k; ++i) base.push_back(checked_add(checked_mul(2, a), pow2(i)));
  const i64 n = checked_mul(2 * k + 1, a);
  std::vector<i64> witnesses;
  std::vector<i64> gens = base;
  for (i64 j = 1; j < pow2(k); ++j) {
    const i64 b = checked_add(checked_mul(popcount(j), a), j);
    witnesses.push_back(b);
    gens.push_back(n - b);
  }

  return FamilyInstance{FamilyKind::NoIntersection,
                        k,
                        a,
                        base,
                        witnesses,
                        n,
                        gens,
                        NumericalSemigroup::from_generators(gens)};
}

FamilyProof verify_nointersection_instance(const FamilyInstance& inst) {
  if (inst.kind != FamilyKind::NoIntersection)
    fail(errc::verification_failed, "instance is not from nointersection_family");
  FamilyProof proof;
  const bool n_member = inst.semigroup.contains(inst.threshold);
  proof.rows.push_back({"N in S", inst.threshold, n_member});
  if (n_member)
    fail(errc::verification_failed, "N = " + std::to_string(inst.threshold) + " lies in S");

  const auto base = NumericalSemigroup::from_generators(inst.base_gens);
  for (std::size_t j = 0; j < inst.witnesses.size(); ++j) {
    const i64 b = inst.witnesses[j];
    const bool member = base.contains(b);
    proof.rows.push_back({"b_" + std::to_string(j + 1) + " in <a_0..a_k>", b, member});
    if (member)
      fail(errc::verification_failed,
           "b_" + std::to_string(j + 1) + " = " + std::to_string(b) + " lies in <a_0..a_k>");
  }
  return proof;
}

NumericalSemigroup arithmetical_family(i64 a, i64 d, int k) {
  if (a < 1 || d < 1 || k < 1) fail(errc::parameter_too_small, "a, d, k must be positive");
  if (std::gcd(a, d) != 1) fail(errc::not_coprime, "gcd(a, d) must be 1");
  std::vector<i64> gens;
  for (int i = 0; i <= k; ++i) gens.push_back(checked_add(a, checked_mul(i, d)));
  return NumericalSemigroup::from_generators(gens);
}

NumericalSemigroup generalized_arithmetical_family(i64 a, i64 h, i64 d, int k) {
  if (a < 1 || h < 1 || d < 1 || k < 1) fail(errc::parameter_too_small, "a, h, d, k must be positive");
  std::vector<i64> gens{a};
  const i64 ah = checked_mul(a, h);
  for (int i = 1; i <= k; ++i) gens.push_back(checked_add(ah, checked_mul(i, d)));
  return NumericalSemigroup::from_generators(gens);
}

}  // namespace nsq
