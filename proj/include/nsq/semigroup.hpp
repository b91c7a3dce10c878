#pragma once

#include <span>
#include <vector>

#include "nsq/checked.hpp"
#include "nsq/errors.hpp"

namespace nsq {

/// A numerical semigroup in canonical form.
///
/// The value is stored as the content D = gcd(generators) together with the
/// Apéry table of the primitive part S/D taken at its multiplicity m'.  Every
/// query (membership, gaps, Frobenius number) reduces to one table lookup, so
/// semigroups with a handful of million-scale generators stay cheap to probe
/// even when their Frobenius number is astronomically large.
///
/// Values are immutable after construction and safe to share across threads.
class NumericalSemigroup {
 public:
  /// Canonicalize ⟨gens⟩.  Duplicates and redundant generators are dropped.
  static NumericalSemigroup from_generators(std::span<const i64> gens);
  static NumericalSemigroup from_generators(std::initializer_list<i64> gens) {
    return from_generators(std::span<const i64>(gens.begin(), gens.end()));
  }

  /// ℕ itself, i.e. ⟨1⟩.
  static NumericalSemigroup naturals() { return from_generators({1}); }

  i64 content() const { return content_; }

  /// Smallest nonzero element of S (content included).
  i64 multiplicity() const { return multiplicity_; }

  /// Multiplicity of the primitive part S/content.
  i64 primitive_multiplicity() const { return static_cast<i64>(apery_.size()); }

  /// The unique minimal generating set, ascending.
  const std::vector<i64>& min_gens() const { return min_gens_; }

  i64 embedding_dim() const { return static_cast<i64>(min_gens_.size()); }

  /// Apéry table of the primitive part at its multiplicity: entry r is the
  /// least element of S/content congruent to r.
  const std::vector<i64>& apery() const { return apery_; }

  /// Frobenius number of the primitive part; -1 when the primitive part is ℕ.
  i64 frobenius() const { return frobenius_; }

  /// Number of gaps of the primitive part.
  i64 genus() const { return genus_; }

  bool contains(i64 t) const {
    if (t < 0) return false;
    if (t % content_ != 0) return false;
    return contains_primitive(t / content_);
  }

  /// Membership in the primitive part S/content.
  bool contains_primitive(i64 u) const {
    if (u < 0) return false;
    return u >= apery_[static_cast<std::size_t>(u % primitive_multiplicity())];
  }

  /// Apéry set of S with respect to an arbitrary nonzero element n.
  /// Throws errc::not_an_element when n ∉ S or n = 0, and
  /// errc::infinite_complement when content > 1 (classes outside Dℕ are empty).
  std::vector<i64> apery_set(i64 n) const;

  /// Sorted gaps.  Requires content = 1.
  std::vector<i64> gaps() const;

  bool is_naturals() const { return content_ == 1 && frobenius_ < 0; }

  /// e(S) = m with content 1 (maximal embedding dimension).
  bool is_med() const { return content_ == 1 && embedding_dim() == multiplicity_; }

  /// Set equality.  Content plus the Apéry table determine the set.
  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.content_ == b.content_ && a.apery_ == b.apery_;
  }

 private:
  NumericalSemigroup() = default;

  i64 content_ = 1;
  i64 multiplicity_ = 1;
  std::vector<i64> min_gens_;
  std::vector<i64> apery_;
  i64 frobenius_ = -1;
  i64 genus_ = 0;
};

/// Least element of ⟨gens⟩ in each residue class mod n, by Dijkstra on the
/// residue graph (arc r → r+g mod n of weight g per generator).  gens must be
/// positive with gcd(gens ∪ {n}) = 1 so that every class is reachable.
std::vector<i64> apery_by_shortest_path(std::span<const i64> gens, i64 n);

inline bool equals(const NumericalSemigroup& a, const NumericalSemigroup& b) { return a == b; }

}  // namespace nsq
