#include <doctest.h>

#include <random>

#include "nsq/semigroup.hpp"
#include "oracle.hpp"

using nsq::i64;
using nsq::NumericalSemigroup;

TEST_SUITE_BEGIN("semigroup");

TEST_CASE("canonical data of <3,5>") {
  const auto s = NumericalSemigroup::from_generators({3, 5});
  CHECK(s.min_gens() == std::vector<i64>{3, 5});
  CHECK(s.content() == 1);
  CHECK(s.multiplicity() == 3);
  CHECK(s.frobenius() == 7);  // oracle::frobenius({3,5})
  CHECK(s.genus() == 4);      // oracle::genus({3,5})
  CHECK(s.frobenius() == oracle::frobenius({3, 5}));
  CHECK(s.genus() == oracle::genus({3, 5}));
}

TEST_CASE("the naturals") {
  const auto n = NumericalSemigroup::from_generators({1});
  CHECK(n.min_gens() == std::vector<i64>{1});
  CHECK(n.frobenius() == -1);
  CHECK(n.genus() == 0);
  CHECK(n.is_naturals());
  CHECK(n.gaps().empty());
  CHECK(n.apery_set(1) == std::vector<i64>{0});
}

TEST_CASE("content factors out") {
  const auto s = NumericalSemigroup::from_generators({6, 10});
  CHECK(s.content() == 2);
  CHECK(s.multiplicity() == 6);
  CHECK(s.min_gens() == std::vector<i64>{6, 10});
  // primitive part is <3,5>
  CHECK(s.frobenius() == 7);
  CHECK(s.genus() == 4);
  CHECK(s.contains(6));
  CHECK(s.contains(16));
  CHECK(!s.contains(8));   // 4 not in <3,5>
  CHECK(!s.contains(15));  // odd
}

TEST_CASE("redundant generators are dropped") {
  const auto s = NumericalSemigroup::from_generators({3, 4, 5, 6, 7, 8});
  CHECK(s.min_gens() == std::vector<i64>{3, 4, 5});
  CHECK(oracle::min_gens({3, 4, 5, 6, 7, 8}) == std::vector<i64>{3, 4, 5});
  const auto dup = NumericalSemigroup::from_generators({5, 3, 3, 5, 8});
  CHECK(dup.min_gens() == std::vector<i64>{3, 5});
}

TEST_CASE("membership against the sieve oracle") {
  const auto s = NumericalSemigroup::from_generators({3, 5});
  CHECK(!s.contains(7));
  CHECK(s.contains(8));
  CHECK(s.contains(0));
  CHECK(!s.contains(-3));
}

TEST_CASE("apery sets") {
  const auto s35 = NumericalSemigroup::from_generators({3, 5});
  CHECK(s35.apery_set(3) == std::vector<i64>{0, 10, 5});
  const auto s345 = NumericalSemigroup::from_generators({3, 4, 5});
  CHECK(s345.apery_set(3) == std::vector<i64>{0, 4, 5});
  CHECK_THROWS_AS((void)s35.apery_set(4), nsq::Error);  // 4 not an element
  CHECK_THROWS_AS((void)s35.apery_set(0), nsq::Error);
  const auto even = NumericalSemigroup::from_generators({6, 10});
  CHECK_THROWS_AS((void)even.apery_set(6), nsq::Error);  // infinite complement
}

TEST_CASE("gaps") {
  CHECK(NumericalSemigroup::from_generators({3, 5}).gaps() == std::vector<i64>{1, 2, 4, 7});
  CHECK(NumericalSemigroup::from_generators({2, 3}).gaps() == std::vector<i64>{1});
  CHECK_THROWS_AS((void)NumericalSemigroup::from_generators({6, 10}).gaps(), nsq::Error);
}

TEST_CASE("equality is set equality") {
  const auto a = NumericalSemigroup::from_generators({3, 4, 5});
  const auto b = NumericalSemigroup::from_generators({3, 4, 5, 6, 7});
  CHECK(a == b);
  CHECK(NumericalSemigroup::from_generators({3, 5}) ==
        NumericalSemigroup::from_generators({3, 5}));
  CHECK(!(NumericalSemigroup::from_generators({3, 5}) ==
          NumericalSemigroup::from_generators({3, 7})));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS((void)NumericalSemigroup::from_generators(std::vector<i64>{}), nsq::Error);
  CHECK_THROWS_AS((void)NumericalSemigroup::from_generators({3, 0}), nsq::Error);
  CHECK_THROWS_AS((void)NumericalSemigroup::from_generators({-2}), nsq::Error);
}

TEST_CASE("single generator") {
  const auto s = NumericalSemigroup::from_generators({7});
  CHECK(s.content() == 7);
  CHECK(s.min_gens() == std::vector<i64>{7});
  CHECK(s.contains(14));
  CHECK(!s.contains(10));
}

namespace {

std::vector<i64> random_gens(std::mt19937_64& rng, int max_count = 4, i64 max_gen = 60) {
  std::uniform_int_distribution<int> count(1, max_count);
  std::uniform_int_distribution<i64> gen(1, max_gen);
  std::vector<i64> gens(static_cast<std::size_t>(count(rng)));
  for (auto& g : gens) g = gen(rng);
  return gens;
}

}  // namespace

TEST_CASE("property: membership agrees with the sieve oracle") {
  std::mt19937_64 rng(20260811);
  for (int iter = 0; iter < 300; ++iter) {
    const auto gens = random_gens(rng);
    const auto s = NumericalSemigroup::from_generators(gens);
    if (s.content() != 1) continue;
    const i64 bound = s.frobenius() + s.multiplicity() + 1;
    const auto in = oracle::sieve(gens, std::max<i64>(bound, 1));
    for (i64 t = 0; t <= bound; ++t)
      REQUIRE(s.contains(t) == static_cast<bool>(in[static_cast<std::size_t>(t)]));
  }
}

TEST_CASE("property: apery-genus identity and apery structure") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const auto gens = random_gens(rng);
    const auto s = NumericalSemigroup::from_generators(gens);
    const i64 m = s.primitive_multiplicity();
    i64 acc = 0;
    for (i64 r = 0; r < m; ++r) {
      const i64 w = s.apery()[static_cast<std::size_t>(r)];
      REQUIRE(w % m == r % m);
      REQUIRE(s.contains_primitive(w));
      if (w >= m) REQUIRE(!s.contains_primitive(w - m));  // least in its class
      acc += w / m;
    }
    REQUIRE(s.apery()[0] == 0);
    REQUIRE(acc == s.genus());
    REQUIRE(s.frobenius() == *std::max_element(s.apery().begin(), s.apery().end()) - m);
    REQUIRE(s.embedding_dim() <= s.primitive_multiplicity());
  }
}

TEST_CASE("property: min_gens is minimal and idempotent") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 150; ++iter) {
    const auto gens = random_gens(rng);
    const auto s = NumericalSemigroup::from_generators(gens);
    const auto again = NumericalSemigroup::from_generators(s.min_gens());
    REQUIRE(s == again);
    REQUIRE(s.min_gens() == again.min_gens());
    if (s.min_gens().size() > 1) {
      for (std::size_t drop = 0; drop < s.min_gens().size(); ++drop) {
        std::vector<i64> rest;
        for (std::size_t j = 0; j < s.min_gens().size(); ++j)
          if (j != drop) rest.push_back(s.min_gens()[j]);
        REQUIRE(!(NumericalSemigroup::from_generators(rest) == s));
      }
    }
  }
}

TEST_CASE("property: scaling the generators scales the content") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 100; ++iter) {
    const auto gens = random_gens(rng);
    const auto s = NumericalSemigroup::from_generators(gens);
    for (i64 c : {2, 3, 5}) {
      auto scaled = gens;
      for (auto& g : scaled) g *= c;
      const auto t = NumericalSemigroup::from_generators(scaled);
      REQUIRE(t.content() == c * s.content());
      REQUIRE(t.apery() == s.apery());  // same primitive part
      REQUIRE(t.frobenius() == s.frobenius());
    }
  }
}

TEST_SUITE_END();
