#include <doctest.h>

#include "dkh/error.hpp"
#include "dkh/fixtures.hpp"
#include "dkh/homology.hpp"
#include "oracles.hpp"

using namespace dkh;

namespace {

BidegreeGroup free_group(std::size_t r) { return {r, {}}; }
BidegreeGroup z2() { return {0, {mpz_class(2)}}; }

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("two-crossing virtual trefoil") {
  BigradedAbelianGroup h = dkh::dkh(fixture("K21"));
  CHECK(h.groups.size() == 7);
  CHECK(h.at(0, -3) == z2());
  CHECK(h.at(-2, -7) == free_group(1));
  CHECK(h.at(-1, -5) == free_group(1));
  CHECK(h.at(0, -1) == free_group(1));
  CHECK(h.at(0, -2).is_zero());
  CHECK(h.total_free_rank() == 6);

  BigradedAbelianGroup q = dkh::dkh(fixture("K21"), Ring::Rationals);
  CHECK(q.at(0, -3).is_zero());
  CHECK(q.total_free_rank() == 6);
}

TEST_CASE("unknot and virtual Hopf link") {
  BigradedAbelianGroup u = dkh::dkh(fixture("U0"));
  for (int j : {1, 0, -1, -2}) CHECK(u.at(0, j) == free_group(1));
  CHECK(u.groups.size() == 4);
  CHECK(dkh::dkh(fixture("VH")).groups.size() == 3);
}

TEST_CASE("Euler characteristic recovers the Jones polynomial") {
  for (const auto& f : fixtures()) {
    Diagram d = fixture(f.name);
    if (d.num_crossings() > 10) continue;
    CHECK_MESSAGE(jones(d) == oracle::state_sum_jones(d), f.name);
    CHECK_MESSAGE(jones(d) == bracket_oracle(d), f.name);
  }
  LaurentPolynomial unknot;
  unknot.add(1, 1);
  unknot.add(-1, 1);
  CHECK(jones(fixture("U0")) == unknot);
  CHECK(jones(fixture("TRP")).str() == "-q^9 + q^5 + q^3 + q");
}

TEST_CASE("division by one plus inverse q") {
  LaurentPolynomial a, f;
  a.add(3, 2);
  a.add(-1, -1);
  f.add(0, 1);
  f.add(-1, 1);
  CHECK(divide_by_one_plus_inverse_q(a * f) == a);
  LaurentPolynomial one;
  one.add(0, 1);
  CHECK_THROWS_AS(divide_by_one_plus_inverse_q(one), NotDivisible);
}

TEST_CASE("Lee homology") {
  LeeSummary k = lee_summary(fixture("K21"));
  CHECK(k.total_rank() == 4);
  CHECK(k.rank_by_degree.at(-2) == 4);
  CHECK(lee_summary(fixture("TRP")).total_rank() == 4);
  CHECK(lee_summary(fixture("HOPFP")).total_rank() == 8);
  CHECK(lee_summary(fixture("VH")).total_rank() == 0);
  std::size_t graded = 0;
  for (const auto& [level, r] : k.levels) graded += r;
  CHECK(graded == k.total_rank());
}

TEST_CASE("doubled Rasmussen invariant") {
  CHECK(rasmussen(fixture("U0")) == RasmussenPair{0, 0});
  CHECK(rasmussen(fixture("K21")) == RasmussenPair{-5, -2});
  CHECK(rasmussen(fixture("TRP")) == RasmussenPair{2, 0});
  CHECK(rasmussen(fixture("TRN")) == RasmussenPair{-2, 0});
  CHECK(rasmussen(fixture("TRP")).s1 == oracle::classical_rasmussen(fixture("TRP")));
  CHECK(rasmussen(fixture("TRN")).s1 == oracle::classical_rasmussen(fixture("TRN")));
  CHECK_THROWS_AS(rasmussen(fixture("HOPFP")), NotAKnot);

  RasmussenDetail d = rasmussen_detail(fixture("K21"));
  CHECK(d.support_degree == -2);
  CHECK(d.odd_writhe == -2);
  CHECK(d.upper_levels.size() == 2);
  CHECK(d.lower_levels.size() == 2);
}

TEST_CASE("leftmost chain-level evaluation") {
  for (const char* name : {"U0", "K21", "TRP", "T43V"}) CHECK(rasmussen_leftmost(fixture(name)) == rasmussen(fixture(name)));
  CHECK_THROWS_AS(rasmussen_leftmost(fixture("TRN")), NotLeftmost);
}

}
