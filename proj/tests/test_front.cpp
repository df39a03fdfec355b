#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "legknot/front.hpp"

using namespace legknot;

TEST_CASE("parse and serialize round-trip") {
  const char* words[] = {"L1 R1", "L1 L3 X2 X2 X2 R1 R1",
                         "L1 L2 R1 R1", "L1 L2 X1 R2 R1"};
  for (const char* w : words) {
    FrontDiagram f = FrontDiagram::parse(w);
    CHECK(f.serialize() == w);
    CHECK(FrontDiagram::parse(f.serialize()).events() == f.events());
  }
}

TEST_CASE("parser accepts comments and whitespace") {
  FrontDiagram f = FrontDiagram::parse("# a trefoil\nL1  L3\tX2 X2 X2\nR1 R1\n");
  CHECK(f.size() == 7);
  CHECK(f.crossings() == 3);
}

TEST_CASE("invalid words are rejected with positions") {
  CHECK_THROWS_AS(FrontDiagram::parse("L1"), FrontError);        // open strands
  CHECK_THROWS_AS(FrontDiagram::parse("R1"), FrontError);        // death on empty
  CHECK_THROWS_AS(FrontDiagram::parse("L1 X2 R1"), FrontError);  // crossing gap
  CHECK_THROWS_AS(FrontDiagram::parse("L4 R1"), FrontError);     // birth gap
  CHECK_THROWS_AS(FrontDiagram::parse("L1 Q2 R1"), FrontError);  // bad token
}

TEST_CASE("strand bookkeeping") {
  FrontDiagram f = FrontDiagram::parse("L1 L3 X2 X2 X2 R1 R1");
  CHECK(f.max_strands() == 4);
  CHECK(f.strands_before(0) == 0);
  CHECK(f.strands_before(1) == 2);
  CHECK(f.strands_before(2) == 4);
  CHECK(f.strands_before(7) == 0);
  CHECK(f.births() == 2);
  CHECK(f.deaths() == 2);
  CHECK(f.cusps() == 4);
}

TEST_CASE("component counts") {
  CHECK(component_count(FrontDiagram::parse("L1 R1")) == 1);
  CHECK(component_count(FrontDiagram::parse("L1 L3 R1 R1")) == 2);
  CHECK(component_count(FrontDiagram::parse("L1 L2 R2 R1")) == 2);
  CHECK(component_count(FrontDiagram::parse("L1 L2 R1 R1")) == 1);
}

TEST_CASE("unknot invariants") {
  FrontDiagram u = FrontDiagram::parse("L1 R1");
  CHECK(tb(u) == -1);
  CHECK(rot(u) == 0);
}

TEST_CASE("right trefoil invariants pin the sign conventions") {
  FrontDiagram t = FrontDiagram::parse("L1 L3 X2 X2 X2 R1 R1");
  FrontTrace trace(t);
  CHECK(trace.writhe() == 3);
  CHECK(tb(t) == 1);
  CHECK(rot(t) == 0);
}

TEST_CASE("zigzags shift the rotation number") {
  // Down zigzag on the rightward top strand of the unknot.
  FrontDiagram s = FrontDiagram::parse("L1 L2 R1 R1");
  CHECK(tb(s) == -2);
  CHECK(rot(s) == 1);
  CHECK(rot(s, Orientation{}.reversed()) == -1);
}

TEST_CASE("multi-component fronts refuse tb and rot") {
  FrontDiagram f = FrontDiagram::parse("L1 L3 R1 R1");
  CHECK_THROWS_AS(tb(f), FrontError);
  CHECK_THROWS_AS(rot(f), FrontError);
}

TEST_CASE("maslov potential separates cusp-adjacent arcs by one") {
  FrontDiagram t = FrontDiagram::parse("L1 L3 X2 X2 X2 R1 R1");
  MaslovPotential pot = maslov_potential(t);
  CHECK(pot.modulus == 0);  // rot = 0: integer potential
  FrontTrace trace(t);
  CHECK(pot.value(trace.base_arc()) == 0);
}

TEST_CASE("trefoil crossing degrees are zero") {
  FrontDiagram t = FrontDiagram::parse("L1 L3 X2 X2 X2 R1 R1");
  std::vector<int> deg = crossing_degrees(t);
  for (std::size_t pos = 2; pos <= 4; ++pos) CHECK(deg[pos] == 0);
}

TEST_CASE("kinked unknot has a degree-one crossing pair") {
  // One Reidemeister-I kink: the crossing has Maslov degree 0 mod nothing,
  // but the front stays tb = -1.
  FrontDiagram f = FrontDiagram::parse("L1 L2 X1 R2 R1");
  CHECK(tb(f) == -1);
  CHECK(rot(f) == 0);
}
