#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nsq/rank.hpp"
#include "nsq/semigroup.hpp"

namespace nsq {

// ---- deterministic RNG ----------------------------------------------------

/// Counter-based generator: every draw is the SplitMix64 finalizer applied to
/// a key derived from (seed, stream, counter).  Trials own disjoint streams,
/// so results do not depend on how work is scheduled across threads.
inline constexpr const char* kRngName = "splitmix64-counter";

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();

  /// Uniform on [1, bound] by rejection (no modulo bias).
  i64 uniform(i64 bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// ---- box model -------------------------------------------------------------

struct BoxModelParams {
  int n = 2;
  i64 m_bound = 10;  // generators drawn uniformly from [1, m_bound]
  i64 trials = 1;
  std::uint64_t seed = 0;
  bool coprime_filter = false;  // condition on gcd(a_1..a_n) = 1
};

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

/// 95% Wilson score interval.
WilsonInterval wilson95(i64 successes, i64 trials);

struct ExperimentRecord {
  BoxModelParams params;
  i64 count_a = 0;          // samples where the subset event fired
  i64 count_full_rank = 0;  // complement: subset test certified full rank
  double p_a = 0.0;
  WilsonInterval wilson;
  std::string rng = kRngName;
};

/// Generators of the trial_index-th sample, reproducible bit-for-bit.
std::vector<i64> sample_box(const BoxModelParams& params, i64 trial_index);

/// Run the trials, evaluating the even-subset event on each raw sample.
ExperimentRecord run_box_trials(const BoxModelParams& params, int threads = 1);

/// One record per bound in m_values.
std::vector<ExperimentRecord> box_experiment(const BoxModelParams& base,
                                             std::span<const i64> m_values, int threads = 1);

/// Evaluate the event on every one of the M^n ordered tuples instead of
/// sampling.  Practical for n = 2 at desk scale.
ExperimentRecord box_exhaustive(int n, i64 m_bound);

// ---- genus tree ------------------------------------------------------------

inline constexpr int kGenusTreeWindow = 128;
inline constexpr int kDefaultGenusCeiling = 22;
inline constexpr int kHardGenusCeiling = 40;  // keeps F + m inside the window

/// A node of the removal tree: membership bitmap over [0, 128), which covers
/// every semigroup of genus ≤ 40 (F ≤ 2g−1 and candidate generators stay
/// below F + m).  Children remove one minimal generator above the Frobenius
/// number, raising the genus by exactly one.
struct TreeNode {
  std::array<std::uint64_t, 2> bits{~std::uint64_t{0}, ~std::uint64_t{0}};
  int genus = 0;
  int frobenius = -1;
  int multiplicity = 1;

  bool member(int x) const {
    return (bits[static_cast<std::size_t>(x) / 64] >> (static_cast<std::size_t>(x) % 64)) & 1;
  }

  std::vector<i64> min_gens() const;
  NumericalSemigroup to_semigroup() const;
};

/// Depth-first walk over all semigroups of genus ≤ g_max (root ℕ first,
/// children by ascending removed generator).  mult_cap > 0 prunes subtrees
/// whose multiplicity exceeds it.  Throws errc::budget_exceeded when g_max
/// exceeds the ceiling.
void walk_genus_tree(int g_max, int mult_cap, const std::function<void(const TreeNode&)>& visit,
                     int ceiling = kDefaultGenusCeiling);

/// Counts per genus 0..g_max.
std::vector<i64> genus_counts(int g_max, int ceiling = kDefaultGenusCeiling);

/// All semigroups with multiplicity exactly m and genus exactly g.
std::vector<NumericalSemigroup> enumerate_fixed(int m, int g, int ceiling = kDefaultGenusCeiling);

// ---- rank census -----------------------------------------------------------

struct CensusRow {
  std::vector<i64> gens;
  i64 multiplicity = 0;
  i64 genus = 0;
  int embedding_dim = 0;
  bool med = false;
  int lower = 0;
  int upper = 0;
  bool exact = false;
  bool full_rank_certified = false;
  bool rank_le_2 = false;
  std::string med_status;  // "verified", "search_exhausted" or "" when not MED
  int med_rep_size = 0;
  std::string error;  // per-item budget failures leave the row in place
};

struct CensusTable {
  std::vector<CensusRow> rows;
  double frac_med = 0.0;
  double frac_full_rank = 0.0;
  double frac_rank_le_2 = 0.0;
};

CensusTable rank_census(std::span<const NumericalSemigroup> population,
                        const SearchBudgets& budgets = {}, int threads = 1);

/// Run fn(i) for i in [0, count) across the given number of threads.
void parallel_for(i64 count, int threads, const std::function<void(i64)>& fn);

}  // namespace nsq
