#include "nsq/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

namespace nsq {

namespace {

// Residue tables are dense, so cap the table length rather than let a stray
// huge generator exhaust memory.  2^26 entries ≈ 0.5 GB of i64.
constexpr i64 kMaxAperyLength = i64{1} << 26;

constexpr i64 kInf = std::numeric_limits<i64>::max();

}  // namespace

std::vector<i64> apery_by_shortest_path(std::span<const i64> gens, i64 n) {
  if (n <= 0) fail(errc::not_an_element, "Apéry index must be positive");
  if (n > kMaxAperyLength) fail(errc::input_too_large, "Apéry table longer than 2^26");

  const auto nn = static_cast<std::size_t>(n);

  // One arc per residue step; parallel generators keep only the cheapest.
  std::vector<std::pair<i64, i64>> arcs;  // (step, cost)
  {
    std::vector<std::pair<i64, i64>> raw;
    for (i64 g : gens) {
      const i64 s = g % n;
      if (s == 0) continue;  // returns to the same class, never useful
      raw.emplace_back(s, g);
    }
    std::sort(raw.begin(), raw.end());
    for (const auto& [s, c] : raw)
      if (arcs.empty() || arcs.back().first != s) arcs.emplace_back(s, c);
  }

  std::vector<i64> dist(nn, kInf);
  dist[0] = 0;
  using Item = std::pair<i64, i64>;  // (dist, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [d, r] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (const auto& [s, c] : arcs) {
      const i64 nd = checked_add(d, c);
      const auto to = static_cast<std::size_t>((r + s) % n);
      if (nd < dist[to]) {
        dist[to] = nd;
        heap.emplace(nd, static_cast<i64>(to));
      }
    }
  }

  for (i64 d : dist)
    if (d == kInf) fail(errc::infinite_complement, "residue class with no element");
  return dist;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const i64> gens) {
  if (gens.empty()) fail(errc::empty_input, "generator list is empty");
  for (i64 g : gens)
    if (g < 1) fail(errc::non_positive_generator, "generator " + std::to_string(g));

  i64 content = 0;
  for (i64 g : gens) content = std::gcd(content, g);

  std::vector<i64> prim(gens.begin(), gens.end());
  for (i64& g : prim) g /= content;
  std::sort(prim.begin(), prim.end());
  prim.erase(std::unique(prim.begin(), prim.end()), prim.end());

  NumericalSemigroup s;
  s.content_ = content;
  const i64 m = prim.front();
  s.multiplicity_ = checked_mul(content, m);
  s.apery_ = apery_by_shortest_path(prim, m);
  s.frobenius_ = *std::max_element(s.apery_.begin(), s.apery_.end()) - m;

  i64 genus = 0;
  for (i64 w : s.apery_) genus += w / m;  // gaps below w in its class
  s.genus_ = genus;

  // A generator is minimal iff subtracting no smaller minimal generator lands
  // in S.  Scanning ascending keeps the witness set complete as we go.
  std::vector<i64> mins;
  for (i64 g : prim) {
    bool redundant = false;
    for (i64 h : mins) {
      const i64 rest = g - h;
      if (rest <= 0) break;  // mins ascending
      if (s.contains_primitive(rest)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) mins.push_back(g);
  }
  s.min_gens_.reserve(mins.size());
  for (i64 g : mins) s.min_gens_.push_back(checked_mul(g, content));
  return s;
}

std::vector<i64> NumericalSemigroup::apery_set(i64 n) const {
  if (n <= 0 || !contains(n)) fail(errc::not_an_element, std::to_string(n) + " is not a nonzero element");
  if (content_ > 1)
    fail(errc::infinite_complement, "classes not divisible by the content have no least element");
  return apery_by_shortest_path(min_gens_, n);
}

std::vector<i64> NumericalSemigroup::gaps() const {
  if (content_ > 1) fail(errc::infinite_complement, "content > 1 has infinitely many gaps");
  const i64 m = primitive_multiplicity();
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (i64 w : apery_)
    for (i64 v = w - m; v >= 0; v -= m) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nsq
