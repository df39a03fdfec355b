#include <doctest.h>

#include "legknot/rulings.hpp"
#include "legknot/twist.hpp"
#include "util.hpp"

using namespace legknot;

TEST_CASE("unknot has the empty ruling only") {
  FrontDiagram u = FrontDiagram::parse("L1 R1");
  for (int rho : {0, 1, 2}) {
    auto rs = enumerate_rulings(u, rho);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].switches.empty());
    CHECK(count_rulings(u, rho) == 1);
  }
}

TEST_CASE("trefoil rulings") {
  FrontDiagram t = FrontDiagram::parse("L1 L3 X2 X2 X2 R1 R1");
  auto rs = enumerate_rulings(t, 1);
  REQUIRE(rs.size() == 3);
  CHECK(count_rulings(t, 1) == 3);
  CHECK(brute_force_rulings(t, 1) == 3);
  // Sorted lexicographically by switch positions.
  CHECK(rs[0].switches == std::vector<std::size_t>{2});
  CHECK(rs[1].switches == std::vector<std::size_t>{2, 3, 4});
  CHECK(rs[2].switches == std::vector<std::size_t>{4});
}

TEST_CASE("stabilized fronts have no ungraded ruling") {
  for (const char* w : {"L1 L2 R1 R1", "L1 L2 R3 R1"}) {
    FrontDiagram f = FrontDiagram::parse(w);
    CHECK(count_rulings(f, 1) == 0);
    CHECK(brute_force_rulings(f, 1) == 0);
  }
}

TEST_CASE("signature rho list follows the crossing degrees") {
  // Clasp degree -4: rho ranges over {0, 1} plus divisors of 4.
  FrontDiagram f = generate_front(parse_word(-6, "S+ S- S+ S-"));
  RulingSignature sig = ruling_signature(f);
  REQUIRE(sig.counts.size() == 4);
  CHECK(sig.counts.at(0) == 1);
  CHECK(sig.counts.at(1) == 2);
  CHECK(sig.counts.at(2) == 2);
  CHECK(sig.counts.at(4) == 2);
}

TEST_CASE("counting matches the brute-force oracle on random fronts") {
  std::mt19937_64 rng(20260826);
  for (int i = 0; i < 60; ++i) {
    FrontDiagram f = testutil::random_front(rng, 22, 10);
    for (const auto& [rho, count] : ruling_signature(f).counts) {
      INFO("front ", f.serialize(), " rho ", rho);
      CHECK(brute_force_rulings(f, rho) == count);
      CHECK(static_cast<long long>(enumerate_rulings(f, rho).size()) == count);
    }
  }
}

TEST_CASE("count is monotone under grading refinement") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    FrontDiagram f = testutil::random_front(rng, 20, 8);
    long long ungraded = count_rulings(f, 1);
    for (const auto& [rho, count] : ruling_signature(f).counts)
      CHECK(count <= ungraded);
  }
}

TEST_CASE("brute force guard") {
  // 26 crossings exceeds the oracle's 2^k replay budget.
  std::vector<Event> ev = {birth(1), birth(3)};
  for (int i = 0; i < 26; ++i) ev.push_back(crossing(2));
  ev.push_back(death(2));
  ev.push_back(death(1));
  FrontDiagram f(ev);
  CHECK_THROWS_AS(brute_force_rulings(f, 1), FrontError);
}
