#include <doctest.h>

#include "dkh/diagram.hpp"
#include "dkh/error.hpp"
#include "dkh/fixtures.hpp"

using namespace dkh;

TEST_SUITE("diagram") {

TEST_CASE("parse and print round trip") {
  Diagram d = Diagram::parse("O1- O2- U1- U2-");
  CHECK(d.num_components() == 1);
  CHECK(d.num_crossings() == 2);
  CHECK(d.writhe() == -2);
  CHECK(d.num_arcs() == 4);
  CHECK(Diagram::parse(d.str()) == d);

  for (const auto& f : fixtures()) {
    Diagram e = fixture(f.name);
    CHECK_MESSAGE(Diagram::parse(e.str()) == e, f.name);
  }
}

TEST_CASE("crossingless unknot") {
  Diagram u = Diagram::parse("");
  CHECK(u.num_components() == 1);
  CHECK(u.num_crossings() == 0);
  CHECK(u.num_arcs() == 1);
  CHECK(u == Diagram());
}

TEST_CASE("malformed codes") {
  CHECK_THROWS_AS(Diagram::parse("O1+"), UnmatchedCrossing);
  CHECK_THROWS_AS(Diagram::parse("O1+ U1-"), SignMismatch);
  CHECK_THROWS_AS(Diagram::parse("X1+ U1+"), SyntaxError);
  CHECK_THROWS_AS(Diagram::parse("O1 U1"), SyntaxError);
  CHECK_THROWS_AS(fixture("nope"), UnknownFixture);
}

TEST_CASE("arc indexing is component-major") {
  Diagram h = fixture("HOPFP");
  CHECK(h.arc_count(0) == 2);
  CHECK(h.arc_index({1, 0}) == 2);
  CHECK(h.arc_position(3) == ArcPosition{1, 1});
  CHECK_THROWS_AS(h.arc_index({2, 0}), BadArc);
  CHECK_THROWS_AS(h.arc_position(4), BadArc);
}

TEST_CASE("crossing ends") {
  Diagram d = fixture("TRP");
  for (const auto& c : d.crossings()) {
    CHECK(c.sign == 1);
    CHECK(c.over_out == (c.over_in + 1) % d.num_arcs());
    CHECK(c.under_out == (c.under_in + 1) % d.num_arcs());
  }
}

TEST_CASE("mirror, union and connected sum") {
  Diagram k = fixture("K21");
  CHECK(mirror(k).writhe() == 2);
  CHECK(mirror(mirror(k)) == k);
  Diagram u = disjoint_union(k, fixture("TRP"));
  CHECK(u.num_components() == 2);
  CHECK(u.num_crossings() == 5);
  Diagram s = connect_sum(k, 1, fixture("TRP"), 0);
  CHECK(s.num_components() == 1);
  CHECK(s.num_crossings() == 5);
  CHECK(s.writhe() == 1);
  CHECK_THROWS_AS(connect_sum(fixture("VH"), 0, k, 0), NotAKnot);
}

TEST_CASE("virtualize and flank") {
  Diagram t = fixture("TRP");
  Diagram v = virtualize(t, {1});
  CHECK(v.num_crossings() == 2);
  CHECK_FALSE(v.has_crossing(1));
  CHECK_THROWS_AS(virtualize(t, {9}), UnknownCrossing);
  Diagram f = flank(t, 2);
  CHECK(f.num_crossings() == 3);
  CHECK(f.over(2).position == t.under(2).position);
  CHECK(flank(f, 2) == t);
}

TEST_CASE("parity and odd writhe") {
  CHECK(odd_writhe(fixture("K21")) == -2);
  CHECK(odd_writhe(fixture("TRP")) == 0);
  CHECK(crossing_parity(fixture("K21"), 1) == Parity::Odd);
  CHECK(crossing_parity(fixture("TRP"), 1) == Parity::Even);
  CHECK_THROWS_AS(odd_writhe(fixture("HOPFP")), NotAKnot);
  CHECK(is_leftmost(fixture("TRP")));
  CHECK(is_leftmost(fixture("K21")));
  CHECK_FALSE(is_leftmost(fixture("TRN")));
}

TEST_CASE("degenerate circles") {
  CHECK(degenerate_circles(gauss_diagram(fixture("VH"))).size() == 2);
  CHECK(degenerate_circles(gauss_diagram(fixture("HOPFP"))).empty());
  CHECK(degenerate_circles(gauss_diagram(fixture("K21"))).empty());
}

TEST_CASE("canonical relabelling keeps the diagram") {
  Diagram d = Diagram::parse("O7+ U3- O3- U7+");
  Diagram r = relabel_canonical(d);
  CHECK(r.num_crossings() == 2);
  CHECK(r.writhe() == d.writhe());
  CHECK(r.max_crossing_id() == 2);
}

}
