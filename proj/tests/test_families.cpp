#include <doctest.h>

#include "nsq/families.hpp"
#include "nsq/rank.hpp"
#include "oracle.hpp"

using nsq::i64;
using nsq::NumericalSemigroup;

TEST_SUITE_BEGIN("families");

TEST_CASE("popcount") {
  CHECK(nsq::popcount(0) == 0);
  CHECK(nsq::popcount(3) == 2);
  CHECK(nsq::popcount(5) == 2);
  CHECK(nsq::popcount(255) == 8);
}

TEST_CASE("noquotient family construction") {
  const auto f24 = nsq::noquotient_family(2, 4);
  CHECK(f24.gens == std::vector<i64>{9, 10, 12});
  CHECK(f24.witnesses == std::vector<i64>{5, 6, 11});

  const auto f38 = nsq::noquotient_family(3, 8);
  CHECK(f38.gens == std::vector<i64>{17, 18, 20, 24});
  CHECK(f38.witnesses == std::vector<i64>{9, 10, 19, 12, 21, 22, 31});

  CHECK_THROWS_AS((void)nsq::noquotient_family(2, 3), nsq::Error);  // 3 < 2^2
}

TEST_CASE("noquotient verification") {
  const auto f24 = nsq::noquotient_family(2, 4);
  const auto proof = nsq::verify_noquotient_instance(f24);
  CHECK(proof.rows.size() == 3);
  for (const auto& row : proof.rows) {
    CHECK(!row.member);
    CHECK(!oracle::contains({9, 10, 12}, row.value));
  }

  const auto f12 = nsq::noquotient_family(1, 2);  // S = <5,6>, witness 3
  CHECK(f12.gens == std::vector<i64>{5, 6});
  CHECK(nsq::verify_noquotient_instance(f12).rows.size() == 1);
  CHECK(!f12.semigroup.contains(3));

  CHECK(nsq::verify_noquotient_instance(nsq::noquotient_family(3, 8)).rows.size() == 7);
}

TEST_CASE("nointersection family construction") {
  const auto f = nsq::nointersection_family(2, 17);
  CHECK(f.threshold == 85);
  CHECK(f.base_gens == std::vector<i64>{35, 36, 38});
  std::vector<i64> sorted = f.gens;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<i64>{35, 36, 38, 48, 66, 67});

  const auto f3 = nsq::nointersection_family(3, 25);
  CHECK(f3.gens.size() == 11);  // 4 + 7
  CHECK(f3.threshold == 175);

  CHECK_THROWS_AS((void)nsq::nointersection_family(2, 8), nsq::Error);   // boundary
  CHECK_THROWS_AS((void)nsq::nointersection_family(2, 5), nsq::Error);   // below
  CHECK_THROWS_AS((void)nsq::nointersection_family(1, 100), nsq::Error); // k >= 2
}

TEST_CASE("nointersection verification and the boundary erratum") {
  const auto ok = nsq::nointersection_family(2, 17);
  const auto proof = nsq::verify_nointersection_instance(ok);
  CHECK(proof.rows.size() == 1 + 3);
  CHECK(!ok.semigroup.contains(85));

  CHECK(nsq::verify_nointersection_instance(nsq::nointersection_family(2, 20)).rows.size() == 4);

  // a = k*2^k = 8: N = 40 = 20 + 20 = 2*a_2 lies in S, voiding the instance
  const auto boundary = nsq::nointersection_family(2, 8, /*allow_boundary=*/true);
  CHECK(boundary.threshold == 40);
  CHECK(boundary.semigroup.contains(40));
  CHECK_THROWS_AS((void)nsq::verify_nointersection_instance(boundary), nsq::Error);
}

TEST_CASE("arithmetical families") {
  CHECK(nsq::arithmetical_family(5, 3, 2).min_gens() == std::vector<i64>{5, 8, 11});
  CHECK(nsq::generalized_arithmetical_family(4, 2, 1, 3).min_gens() ==
        std::vector<i64>{4, 9, 10, 11});
  CHECK_THROWS_AS((void)nsq::arithmetical_family(4, 2, 1), nsq::Error);  // gcd 2
  CHECK_THROWS_AS((void)nsq::arithmetical_family(0, 1, 1), nsq::Error);
}

TEST_CASE("property: family instances verify and have full rank") {
  for (int k = 1; k <= 5; ++k) {
    const i64 base = i64{1} << k;
    for (i64 a = base; a < base + 50; a += 5) {
      const auto inst = nsq::noquotient_family(k, a);
      CHECK(inst.semigroup.embedding_dim() == k + 1);
      // generators pairwise distinct and already minimal
      CHECK(inst.semigroup.min_gens() == inst.gens);
      CHECK(nsq::verify_noquotient_instance(inst).rows.size() ==
            static_cast<std::size_t>((i64{1} << k) - 1));
      const auto cert = nsq::full_rank_certificate(inst.semigroup);
      CHECK(std::holds_alternative<nsq::FullRankCert>(cert));
    }
  }
}

TEST_CASE("k=5, a=33: the witness table breaks down (documented erratum)") {
  // 5a + 31 = 2(2a + 32) exactly at a = 33, so b_31 = 196 = 2*a_5 lies in S
  // and neither certificate route applies to this instance.
  const auto inst = nsq::noquotient_family(5, 33);
  CHECK(inst.witnesses.back() == 196);
  CHECK(inst.semigroup.contains(196));
  CHECK_THROWS_AS((void)nsq::verify_noquotient_instance(inst), nsq::Error);
  CHECK(!std::holds_alternative<nsq::FullRankCert>(nsq::full_rank_certificate(inst.semigroup)));
  // isolated: every other a in [2^5, 2^5 + 50] verifies
  for (i64 a = 32; a <= 82; ++a) {
    if (a == 33) continue;
    CHECK(nsq::verify_noquotient_instance(nsq::noquotient_family(5, a)).rows.size() == 31);
  }
}

TEST_CASE("property: generic search rediscovers small family witnesses") {
  for (int k = 1; k <= 3; ++k) {
    const i64 a = (i64{1} << k) + 1;
    const auto inst = nsq::noquotient_family(k, a);
    nsq::SearchBudgets budgets;
    budgets.pool_limit = 200;
    const i64 bound = inst.semigroup.frobenius() + 2 * inst.semigroup.multiplicity();
    const auto cert = nsq::not_k_quotient_search(inst.semigroup, k, bound, budgets);
    CHECK(std::holds_alternative<nsq::NotKQuotientCert>(cert));
    CHECK(nsq::recheck_certificate(inst.semigroup, cert));
  }
}

TEST_CASE("property: nointersection instances verify for k in {2,3}") {
  for (int k : {2, 3}) {
    const i64 base = k * (i64{1} << k);
    for (i64 a : {base + 1, base + 2, base + 7, base + 15, base + 30}) {
      const auto inst = nsq::nointersection_family(k, a);
      const auto proof = nsq::verify_nointersection_instance(inst);
      CHECK(proof.rows.size() == (std::size_t{1} << k));  // N row + 2^k - 1 witness rows
    }
  }
}

TEST_SUITE_END();
