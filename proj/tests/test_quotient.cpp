#include <doctest.h>

#include <numeric>
#include <random>

#include "nsq/quotient.hpp"
#include "oracle.hpp"

using nsq::i64;
using nsq::NumericalSemigroup;
using nsq::QuotientRep;

TEST_SUITE_BEGIN("quotient");

TEST_CASE("the worked quotients") {
  const auto s35 = NumericalSemigroup::from_generators({3, 5});
  CHECK(nsq::quotient(s35, 2) == NumericalSemigroup::from_generators({3, 4, 5}));
  CHECK(nsq::quotient(s35, 2).min_gens() == std::vector<i64>{3, 4, 5});

  const auto s1113 = NumericalSemigroup::from_generators({11, 13});
  CHECK(nsq::quotient(s1113, 2).min_gens() == std::vector<i64>{11, 12, 13});

  const auto s1720 = NumericalSemigroup::from_generators({17, 20});
  CHECK(nsq::quotient(s1720, 3).min_gens() == std::vector<i64>{17, 18, 19, 20});

  CHECK(nsq::quotient(s35, 1) == s35);
}

TEST_CASE("quotient of a non-primitive semigroup") {
  const auto s = NumericalSemigroup::from_generators({6, 10});
  CHECK(nsq::quotient(s, 2) == NumericalSemigroup::from_generators({3, 5}));
  CHECK(nsq::quotient(s, 4) == NumericalSemigroup::from_generators({3, 4, 5}));
  // {t : 3t in 2<3,5>} = 2*(<3,5>/3) = 2*N
  CHECK(nsq::quotient(s, 3).min_gens() == std::vector<i64>{2});
}

TEST_CASE("scale") {
  const auto s35 = NumericalSemigroup::from_generators({3, 5});
  CHECK(nsq::scale(s35, 2).min_gens() == std::vector<i64>{6, 10});
  const auto n5 = nsq::scale(NumericalSemigroup::naturals(), 5);
  CHECK(n5.min_gens() == std::vector<i64>{5});
  CHECK(n5.content() == 5);
  CHECK(nsq::scale(NumericalSemigroup::from_generators({3, 4, 5}), 3).min_gens() ==
        std::vector<i64>{9, 12, 15});
  CHECK_THROWS_AS((void)nsq::scale(s35, 0), nsq::Error);
}

TEST_CASE("sumset") {
  const auto a = NumericalSemigroup::from_generators({11, 12, 13});
  const auto b = NumericalSemigroup::from_generators({17, 18, 19, 20});
  CHECK(nsq::add(a, b).min_gens() == std::vector<i64>{11, 12, 13, 17, 18, 19, 20});
  CHECK(nsq::add(a, NumericalSemigroup::from_generators({17})) ==
        NumericalSemigroup::from_generators({11, 12, 13, 17}));
  CHECK(nsq::add(NumericalSemigroup::from_generators({4, 5, 7}),
                 NumericalSemigroup::from_generators({6}))
            .min_gens() == std::vector<i64>{4, 5, 6, 7});
}

TEST_CASE("coprime quotient sum") {
  const QuotientRep a{1, {11, 13}, 2};
  const QuotientRep b{1, {17, 20}, 3};
  const auto sum = nsq::quotient_sum_coprime(a, b);
  CHECK(sum.num_gens == std::vector<i64>{33, 34, 39, 40});
  CHECK(sum.den == 6);
  CHECK(sum.scale == 1);

  const auto trivial = nsq::quotient_sum_coprime(QuotientRep{1, {3, 5}, 1}, QuotientRep{1, {7}, 1});
  CHECK(trivial.num_gens == std::vector<i64>{3, 5, 7});
  CHECK(trivial.den == 1);

  CHECK_THROWS_AS((void)nsq::quotient_sum_coprime(QuotientRep{1, {3}, 2}, QuotientRep{1, {5}, 2}),
                  nsq::Error);

  // (<4,7>,2) + (<5>,3) evaluates to the same semigroup on both routes
  const auto lhs = nsq::add(nsq::quotient(NumericalSemigroup::from_generators({4, 7}), 2),
                            nsq::quotient(NumericalSemigroup::from_generators({5}), 3));
  const auto rep = nsq::quotient_sum_coprime(QuotientRep{1, {4, 7}, 2}, QuotientRep{1, {5}, 3});
  CHECK(rep.num_gens == std::vector<i64>{10, 12, 21});
  CHECK(rep.den == 6);
  CHECK(nsq::evaluate(rep) == lhs);
  CHECK(nsq::verify_rep(lhs, rep));
}

TEST_CASE("normalize_rep") {
  CHECK(nsq::normalize_rep(QuotientRep{6, {3, 5}, 4}) == QuotientRep{3, {3, 5}, 2});
  CHECK(nsq::normalize_rep(QuotientRep{1, {9, 10}, 7}) == QuotientRep{1, {9, 10}, 7});
  CHECK(nsq::normalize_rep(QuotientRep{4, {3, 5}, 2}) == QuotientRep{2, {3, 5}, 1});
  // the denoted semigroup is unchanged
  CHECK(nsq::evaluate(QuotientRep{6, {3, 5}, 4}) == nsq::evaluate(QuotientRep{3, {3, 5}, 2}));
  CHECK(nsq::evaluate(QuotientRep{4, {3, 5}, 2}) == nsq::evaluate(QuotientRep{2, {3, 5}, 1}));
}

TEST_CASE("verify_rep on the worked examples") {
  const auto s345 = NumericalSemigroup::from_generators({3, 4, 5});
  CHECK(nsq::verify_rep(s345, QuotientRep{1, {3, 5}, 2}));
  CHECK(!nsq::verify_rep(s345, QuotientRep{1, {3, 5}, 3}));

  const auto big = NumericalSemigroup::from_generators({11, 12, 13, 17, 18, 19, 20});
  CHECK(nsq::verify_rep(big, QuotientRep{1, {33, 34, 39, 40}, 6}));
  CHECK(!nsq::verify_rep(big, QuotientRep{1, {33, 34, 39, 40}, 5}));

  // scaled rep: <6,8,10> = 2*<3,4,5>
  const auto scaled = NumericalSemigroup::from_generators({6, 8, 10});
  CHECK(nsq::verify_rep(scaled, QuotientRep{2, {3, 4, 5}, 1}));
  CHECK(nsq::verify_rep(scaled, QuotientRep{2, {3, 5}, 2}) == false);  // (2,B,2) ~ (1,B,1)
  // non-primitive numerator: <4,6>/1 denotes <4,6>
  CHECK(nsq::verify_rep(NumericalSemigroup::from_generators({4, 6}), QuotientRep{1, {4, 6}, 1}));
}

TEST_CASE("quotient rejects a non-positive denominator") {
  const auto s = NumericalSemigroup::from_generators({3, 5});
  CHECK_THROWS_AS((void)nsq::quotient(s, 0), nsq::Error);
  CHECK_THROWS_AS((void)nsq::quotient(s, -2), nsq::Error);
}

namespace {

std::vector<i64> random_gens(std::mt19937_64& rng, int max_count = 4, i64 max_gen = 40) {
  std::uniform_int_distribution<int> count(1, max_count);
  std::uniform_int_distribution<i64> gen(1, max_gen);
  std::vector<i64> gens(static_cast<std::size_t>(count(rng)));
  for (auto& g : gens) g = gen(rng);
  return gens;
}

}  // namespace

TEST_CASE("property: monotone chain S ⊆ S/d ⊆ N and composition") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 120; ++iter) {
    const auto s = NumericalSemigroup::from_generators(random_gens(rng));
    for (i64 d : {1, 2, 3, 4}) {
      const auto q = nsq::quotient(s, d);
      for (i64 a : s.min_gens()) REQUIRE(q.contains(a));
      REQUIRE(nsq::quotient(s, 1) == s);
      for (i64 c : {2, 3}) {
        REQUIRE(nsq::quotient(nsq::quotient(s, c), d) == nsq::quotient(s, c * d));
      }
    }
  }
}

TEST_CASE("property: coprime sum formula agrees with evaluation") {
  std::mt19937_64 rng(4242);
  const std::pair<i64, i64> cds[] = {{2, 3}, {3, 4}, {2, 5}};
  for (int iter = 0; iter < 200; ++iter) {
    const auto gs = random_gens(rng, 3, 30);
    const auto gt = random_gens(rng, 3, 30);
    const auto s = NumericalSemigroup::from_generators(gs);
    const auto t = NumericalSemigroup::from_generators(gt);
    const auto [c, d] = cds[iter % 3];
    const auto direct = nsq::add(nsq::quotient(s, c), nsq::quotient(t, d));
    const auto rep = nsq::quotient_sum_coprime(QuotientRep{1, s.min_gens(), c},
                                               QuotientRep{1, t.min_gens(), d});
    REQUIRE(nsq::evaluate(rep) == direct);
    REQUIRE(nsq::verify_rep(direct, rep));
  }
}

TEST_CASE("property: one-directional containment without coprimality") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 60; ++iter) {
    const auto s = NumericalSemigroup::from_generators(random_gens(rng, 3, 25));
    const auto t = NumericalSemigroup::from_generators(random_gens(rng, 3, 25));
    const auto lhs = nsq::add(nsq::quotient(s, 2), nsq::quotient(t, 2));  // S/2 + T/2
    const auto rhs = nsq::quotient(nsq::add(nsq::scale(s, 2), nsq::scale(t, 2)), 4);
    const i64 bound = lhs.content() * (lhs.frobenius() + lhs.primitive_multiplicity() + 1);
    for (i64 x = 0; x <= bound; ++x)
      if (lhs.contains(x)) REQUIRE(rhs.contains(x));
  }
}

TEST_CASE("property: verify_rep accepts evaluated reps") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<i64> dd(1, 5);
  for (int iter = 0; iter < 150; ++iter) {
    QuotientRep rep{1, random_gens(rng, 3, 30), dd(rng)};
    const auto denoted = nsq::evaluate(rep);
    REQUIRE(nsq::verify_rep(denoted, rep));
  }
}

TEST_SUITE_END();
