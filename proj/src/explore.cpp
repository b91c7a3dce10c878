#include "nsq/explore.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace nsq {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix_finalize(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix_finalize(seed ^ splitmix_finalize(stream * kGolden + kGolden))) {}

std::uint64_t CounterRng::next() { return splitmix_finalize(key_ + (++counter_) * kGolden); }

i64 CounterRng::uniform(i64 bound) {
  const auto b = static_cast<std::uint64_t>(bound);
  const std::uint64_t threshold = b * (~std::uint64_t{0} / b);  // largest multiple of b
  std::uint64_t r;
  do {
    r = next();
  } while (r >= threshold);
  return static_cast<i64>(r % b) + 1;
}

WilsonInterval wilson95(i64 successes, i64 trials) {
  if (trials <= 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double radius = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - radius), std::min(1.0, center + radius)};
}

std::vector<i64> sample_box(const BoxModelParams& params, i64 trial_index) {
  if (params.n < 2 || params.m_bound < 1) fail(errc::parameter_too_small, "need n >= 2 and M >= 1");
  CounterRng rng(params.seed, static_cast<std::uint64_t>(trial_index));
  std::vector<i64> gens(static_cast<std::size_t>(params.n));
  while (true) {
    for (auto& g : gens) g = rng.uniform(params.m_bound);
    if (!params.coprime_filter) return gens;
    i64 g = 0;
    for (i64 x : gens) g = std::gcd(g, x);
    if (g == 1) return gens;
  }
}

void parallel_for(i64 count, int threads, const std::function<void(i64)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (i64 i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<i64> cursor{0};
  auto worker = [&] {
    while (true) {
      const i64 i = cursor.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min<i64>(threads, count);
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

ExperimentRecord run_box_trials(const BoxModelParams& params, int threads) {
  if (params.trials < 1) fail(errc::parameter_too_small, "trials must be >= 1");
  std::vector<char> fired(static_cast<std::size_t>(params.trials), 0);
  parallel_for(params.trials, threads, [&](i64 i) {
    const auto gens = sample_box(params, i);
    fired[static_cast<std::size_t>(i)] = subset_obstruction(gens).has_value() ? 1 : 0;
  });
  ExperimentRecord rec;
  rec.params = params;
  rec.count_a = std::count(fired.begin(), fired.end(), 1);
  rec.count_full_rank = params.trials - rec.count_a;
  rec.p_a = static_cast<double>(rec.count_a) / static_cast<double>(params.trials);
  rec.wilson = wilson95(rec.count_a, params.trials);
  return rec;
}

std::vector<ExperimentRecord> box_experiment(const BoxModelParams& base,
                                             std::span<const i64> m_values, int threads) {
  std::vector<ExperimentRecord> out;
  out.reserve(m_values.size());
  for (i64 m : m_values) {
    BoxModelParams p = base;
    p.m_bound = m;
    out.push_back(run_box_trials(p, threads));
  }
  return out;
}

ExperimentRecord box_exhaustive(int n, i64 m_bound) {
  if (n < 2 || m_bound < 1) fail(errc::parameter_too_small, "need n >= 2 and M >= 1");
  i64 total = 1;
  for (int i = 0; i < n; ++i) total = checked_mul(total, m_bound);
  if (total > 4'000'000) fail(errc::budget_exceeded, "M^n too large for exhaustive mode");

  std::vector<i64> gens(static_cast<std::size_t>(n), 1);
  i64 fired = 0;
  for (i64 idx = 0; idx < total; ++idx) {
    i64 rem = idx;
    for (auto& g : gens) {
      g = rem % m_bound + 1;
      rem /= m_bound;
    }
    if (subset_obstruction(gens)) ++fired;
  }
  ExperimentRecord rec;
  rec.params = BoxModelParams{n, m_bound, total, 0, false};
  rec.count_a = fired;
  rec.count_full_rank = total - fired;
  rec.p_a = static_cast<double>(fired) / static_cast<double>(total);
  rec.wilson = wilson95(fired, total);
  return rec;
}

// ---- genus tree ------------------------------------------------------------

namespace {

void clear_bit(TreeNode& node, int x) {
  node.bits[static_cast<std::size_t>(x) / 64] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(x) % 64));
}

// x ∈ S* is a minimal generator iff it is not a sum of two nonzero elements.
bool minimal_in(const TreeNode& node, int x) {
  for (int z = node.multiplicity; z + z <= x; ++z)
    if (node.member(z) && node.member(x - z)) return false;
  return true;
}

}  // namespace

std::vector<i64> TreeNode::min_gens() const {
  if (genus == 0) return {1};
  std::vector<i64> gens;
  for (int x = multiplicity; x <= frobenius + multiplicity; ++x)
    if (member(x) && minimal_in(*this, x)) gens.push_back(x);
  return gens;
}

NumericalSemigroup TreeNode::to_semigroup() const {
  const auto gens = min_gens();
  return NumericalSemigroup::from_generators(gens);
}

void walk_genus_tree(int g_max, int mult_cap, const std::function<void(const TreeNode&)>& visit,
                     int ceiling) {
  if (ceiling > kHardGenusCeiling) fail(errc::input_too_large, "genus ceiling above 40");
  if (g_max < 0) fail(errc::parameter_too_small, "genus must be >= 0");
  if (g_max > ceiling)
    fail(errc::budget_exceeded,
         "genus " + std::to_string(g_max) + " above the ceiling " + std::to_string(ceiling));

  std::vector<TreeNode> stack{TreeNode{}};
  while (!stack.empty()) {
    const TreeNode node = stack.back();
    stack.pop_back();
    if (mult_cap <= 0 || node.multiplicity <= mult_cap) visit(node);
    if (node.genus >= g_max) continue;

    // Minimal generators above F live in (F, F+m], except that ℕ's only
    // generator is 1 = F + m + 1.  Children in descending order so the DFS
    // pops them ascending.
    const int hi = std::max(node.frobenius + node.multiplicity, node.multiplicity);
    for (int x = hi; x > node.frobenius; --x) {
      if (x < 1 || !node.member(x) || !minimal_in(node, x)) continue;
      TreeNode child = node;
      clear_bit(child, x);
      child.genus = node.genus + 1;
      child.frobenius = x;
      if (x == node.multiplicity) {
        int m = x + 1;
        while (!child.member(m)) ++m;
        child.multiplicity = m;
      }
      if (mult_cap > 0 && child.multiplicity > mult_cap) continue;
      stack.push_back(child);
    }
  }
}

std::vector<i64> genus_counts(int g_max, int ceiling) {
  std::vector<i64> counts(static_cast<std::size_t>(g_max) + 1, 0);
  walk_genus_tree(g_max, 0, [&](const TreeNode& n) { ++counts[static_cast<std::size_t>(n.genus)]; },
                  ceiling);
  return counts;
}

std::vector<NumericalSemigroup> enumerate_fixed(int m, int g, int ceiling) {
  if (m < 2) fail(errc::parameter_too_small, "multiplicity must be >= 2");
  std::vector<NumericalSemigroup> out;
  if (g < m - 1) return out;  // genus of a multiplicity-m semigroup is at least m−1
  walk_genus_tree(g, m, [&](const TreeNode& node) {
    if (node.genus == g && node.multiplicity == m) out.push_back(node.to_semigroup());
  }, ceiling);
  return out;
}

// ---- census ----------------------------------------------------------------

CensusTable rank_census(std::span<const NumericalSemigroup> population,
                        const SearchBudgets& budgets, int threads) {
  CensusTable table;
  table.rows.resize(population.size());
  parallel_for(static_cast<i64>(population.size()), threads, [&](i64 i) {
    const auto& s = population[static_cast<std::size_t>(i)];
    CensusRow& row = table.rows[static_cast<std::size_t>(i)];
    row.gens = s.min_gens();
    row.multiplicity = s.multiplicity();
    row.genus = s.genus();
    row.embedding_dim = static_cast<int>(s.embedding_dim());
    row.med = s.is_med();
    try {
      SearchBudgets cheap = budgets;
      cheap.med_search = false;  // run the MED split once, below, and merge
      const RankBounds b = quotient_rank_bounds(s, cheap);
      row.lower = b.lower;
      row.upper = b.upper;
      row.full_rank_certified =
          b.lower_cert && std::holds_alternative<FullRankCert>(*b.lower_cert);
      if (row.med && s.multiplicity() >= 3 && budgets.med_search) {
        const auto med = med_decomposition(s, budgets);
        row.med_status = med.status == MedStatus::Verified ? "verified" : "search_exhausted";
        if (med.rep) {
          row.med_rep_size = static_cast<int>(med.rep->num_gens.size());
          row.upper = std::min(row.upper, row.med_rep_size);
        } else {
          row.upper = std::min<int>(row.upper, static_cast<int>(s.multiplicity()) - 1);
        }
      }
      row.exact = row.lower == row.upper;
      row.rank_le_2 = row.upper <= 2;
    } catch (const Error& e) {
      row.error = e.what();
    }
  });

  const auto n = static_cast<double>(table.rows.size());
  if (!table.rows.empty()) {
    i64 med = 0, full = 0, le2 = 0;
    for (const auto& r : table.rows) {
      med += r.med;
      full += r.full_rank_certified;
      le2 += r.rank_le_2;
    }
    table.frac_med = static_cast<double>(med) / n;
    table.frac_full_rank = static_cast<double>(full) / n;
    table.frac_rank_le_2 = static_cast<double>(le2) / n;
  }
  return table;
}

}  // namespace nsq
