#include <doctest.h>

#include "neu/error.hpp"
#include "neu/sweep.hpp"
#include "neu/topology.hpp"

using namespace neu;

TEST_CASE("interval construction")
{
  CHECK(TopoSet::interval(0) == TopoSet::empty());
  CHECK(TopoSet::interval(0.3).kind() == TopoSet::Kind::Open);
  CHECK(TopoSet::interval(1).kind() == TopoSet::Kind::Open);
  CHECK(TopoSet::interval(1).same_parameter(TopoSet::whole()));
  CHECK_FALSE(TopoSet::interval(1) == TopoSet::whole());
  CHECK_THROWS_AS(TopoSet::interval(1.5), Error);
  CHECK_THROWS_AS(TopoSet::interval(-0.1), Error);
}

TEST_CASE("union, intersection and complement examples")
{
  CHECK(topo_union(TopoSet::interval(0.5), TopoSet::interval(0.5)).parameter() == 0.75);
  CHECK(topo_intersect(TopoSet::interval(0.5), TopoSet::interval(0.5)).parameter() == 0.25);
  const TopoSet c = topo_complement(TopoSet::interval(0.3));
  CHECK(c.parameter() == doctest::Approx(0.7));
  CHECK(c.closed());
  CHECK_FALSE(topo_complement(c).closed());
  CHECK(topo_complement(TopoSet::empty()) == TopoSet::whole());
  CHECK(topo_complement(TopoSet::whole()) == TopoSet::empty());
  CHECK(describe(c) == "(0,0.700000) closed");
  CHECK(describe(TopoSet::whole()) == "[0,1]");
}

TEST_CASE("identity and absorbing elements")
{
  const TopoSet a = TopoSet::interval(0.4);
  CHECK(topo_union(a, TopoSet::empty()) == a);
  CHECK(topo_union(TopoSet::empty(), a) == a);
  CHECK(topo_union(a, TopoSet::whole()) == TopoSet::whole());
  CHECK(topo_intersect(a, TopoSet::whole()) == a);
  CHECK(topo_intersect(TopoSet::whole(), a) == a);
  CHECK(topo_intersect(a, TopoSet::empty()) == TopoSet::empty());
}

TEST_CASE("iso_check on the full grid")
{
  const auto grid = sweep_grid(0.01);
  double worst = 0.0;
  for (double p : grid) {
    for (double q : grid) {
      const IsoReport r = iso_check(p, q);
      REQUIRE(r.identities.size() == 3);
      worst = std::max(worst, r.max_deviation);
      for (const auto& s : {topo_union(TopoSet::interval(p), TopoSet::interval(q)),
                            topo_intersect(TopoSet::interval(p), TopoSet::interval(q))}) {
        CHECK(s.parameter() >= 0.0);
        CHECK(s.parameter() <= 1.0);
      }
    }
  }
  CHECK(worst < 1e-12);
}
