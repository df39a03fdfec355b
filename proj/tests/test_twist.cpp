#include <doctest.h>

#include "legknot/moves.hpp"
#include "legknot/render.hpp"
#include "legknot/twist.hpp"

#include <set>

using namespace legknot;

TEST_CASE("word parsing and validation") {
  TwistWord w = parse_word(-6, "Z+ S- S+ Z-");
  CHECK(word_text(w) == "Z+ S- S+ Z-");
  LetterCounts c = letter_counts(w);
  CHECK(c.z_plus == 1);
  CHECK(c.z_minus == 1);
  CHECK(c.s_plus == 1);
  CHECK(c.s_minus == 1);

  CHECK_THROWS_AS(parse_word(-6, "Z+ Z+ S- S-"), WordError);  // signs
  CHECK_THROWS_AS(parse_word(-6, "Z+ S-"), WordError);        // length
  CHECK_THROWS_AS(parse_word(-5, "Z- Z+ Z-"), WordError);     // odd ends +
  CHECK_THROWS_AS(parse_word(-1, ""), WordError);             // unknot
  CHECK_THROWS_AS(parse_word(2, "Z+ Z- Z+ Z-"), WordError);   // X only
  CHECK_THROWS_AS(parse_word(0, "X"), WordError);             // m+2 letters
  CHECK_THROWS_AS(parse_word(-4, "Y+ Z-"), WordError);        // unknown
}

TEST_CASE("maximal tb table") {
  CHECK(max_tb(4) == -5);
  CHECK(max_tb(-5) == -3);
  CHECK(max_tb(-1) == -1);
  CHECK(max_tb(0) == -1);
  CHECK(max_tb(1) == -6);
  CHECK(max_tb(-2) == 1);
  CHECK(max_tb(-8) == 1);
}

TEST_CASE("normal forms quotient by the rotation symmetry") {
  // (z+, z-) = (2, 1) and its image (0, 1) name the same class for n = 3.
  TwistWord a = parse_word(-6, "Z+ Z- Z+ S-");
  TwistWord b = parse_word(-6, "S+ Z- S+ S-");
  CHECK(normal_form(a) == normal_form(b));
  CHECK(normal_form(a).z_plus == 0);
  CHECK(normal_form(a).z_minus == 1);
  // Idempotence through the canonical word.
  CHECK(normal_form(canonical_word(normal_form(a))) == normal_form(a));
}

TEST_CASE("class counts at maximal tb") {
  CHECK(classes_at_max_tb(-8).size() == 8);   // ceil(16/2)
  CHECK(classes_at_max_tb(-7).size() == 3);
  CHECK(classes_at_max_tb(-4).size() == 2);
  CHECK(classes_at_max_tb(-2).size() == 1);
  CHECK(classes_at_max_tb(0).size() == 1);
  auto odd_pos = classes_at_max_tb(5);
  REQUIRE(odd_pos.size() == 2);
  CHECK(odd_pos[0].rot + odd_pos[1].rot == 0);
  CHECK_THROWS_AS(classes_at_max_tb(-1), WordError);
}

TEST_CASE("generated fronts carry the peak invariants") {
  for (int m : {-8, -6, -4, -2, -7, -5, -3, 0, 2, 1, 3}) {
    for (const ClassRep& rep : classes_at_max_tb(m)) {
      FrontDiagram f = generate_front(rep.word);
      INFO("m ", m, " word '", word_text(rep.word), "'");
      CHECK(component_count(f) == 1);
      CHECK(tb(f) == max_tb(m));
      CHECK(std::abs(rot(f)) == std::abs(rep.rot));
    }
  }
}

TEST_CASE("predicted signatures match the computed rulings") {
  for (int m : {-4, -6, -3, -5, -7}) {
    for (const ClassRep& rep : classes_at_max_tb(m)) {
      FrontDiagram f = generate_front(rep.word);
      for (const auto& [rho, count] :
           predicted_signature(m, letter_counts(rep.word)).counts) {
        INFO("m ", m, " word '", word_text(rep.word), "' rho ", rho);
        CHECK(count_rulings(f, rho) == count);
      }
    }
  }
  CHECK_THROWS_AS(predicted_signature(0, {}), WordError);
}

TEST_CASE("stabilization class counts") {
  CHECK(stab_classes(-8, 0, 0) == 8);
  CHECK(stab_classes(-8, 1, 0) == 2);
  CHECK(stab_classes(-8, 0, 3) == 2);
  CHECK(stab_classes(-8, 1, 1) == 1);
  CHECK(stab_classes(-7, 0, 0) == 3);
  CHECK(stab_classes(-7, 2, 0) == 1);
  CHECK(stab_classes(1, 0, 0) == 1);
}

TEST_CASE("mountain ranges") {
  MountainRange mr = mountain_range(-8, 3);
  CHECK(mr.peaks == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(mr.counts.at({0, 1}) == 8);
  CHECK(mr.counts.at({1, 0}) == 2);
  CHECK(mr.counts.at({-1, 0}) == 2);
  CHECK(mr.counts.at({0, -1}) == 1);
  CHECK(mr.counts.at({3, -2}) == 2);
  CHECK(mr.counts.count({1, 1}) == 0);

  MountainRange one = mountain_range(1, 2);
  CHECK(one.peaks.size() == 2);
  CHECK(one.counts.at({1, -6}) == 1);
  CHECK(one.counts.at({0, -7}) == 1);
  CHECK(one.counts.count({0, -6}) == 0);

  CHECK_THROWS_AS(mountain_range(-1), WordError);
}

TEST_CASE("transverse classification table") {
  TransverseClassification a = transverse_classes(-6);
  CHECK(a.max_sl == 1);
  CHECK(a.classes_at_max == 2);
  CHECK_FALSE(a.simple);
  CHECK_FALSE(a.n2_edge);

  TransverseClassification b = transverse_classes(7);
  CHECK(b.max_sl == -11);
  CHECK(b.simple);

  TransverseClassification c = transverse_classes(-4);
  CHECK(c.max_sl == 1);
  CHECK(c.classes_at_max == 1);
  CHECK(c.simple);
  CHECK(c.n2_edge);

  CHECK(transverse_classes(-1).max_sl == -1);
  CHECK(transverse_classes(-5).max_sl == -3);
  CHECK(transverse_classes(0).max_sl == -1);
}

TEST_CASE("word moves preserve counts and normal forms") {
  TwistWord w = parse_word(-8, "Z+ S- S+ Z- S+ S-");
  auto closure = word_moves(w);
  CHECK(closure.size() > 1);
  for (const TwistWord& v : closure) {
    CHECK(letter_counts(v) == letter_counts(w));
    CHECK(normal_form(v) == normal_form(w));
  }
  // Both starting signs appear: cycling connects them.
  bool plus_start = false, minus_start = false;
  for (const TwistWord& v : closure) {
    if (v.letters.front() == Letter::ZPlus || v.letters.front() == Letter::SPlus)
      plus_start = true;
    else
      minus_start = true;
  }
  CHECK(plus_start);
  CHECK(minus_start);
}

TEST_CASE("rotating a generated front lands in the conjugate class") {
  // Rotation by 180 degrees swaps Z and S letters; the image front has
  // the signature of the complementary counts.
  TwistWord w = parse_word(-6, "Z+ Z- Z+ S-");
  TwistWord swapped = parse_word(-6, "S+ S- S+ Z-");
  CHECK(normal_form(w) == normal_form(swapped));
  FrontDiagram img = rotate180(generate_front(w));
  FrontDiagram conj = generate_front(swapped);
  for (const auto& [rho, count] : ruling_signature(conj).counts)
    CHECK(count_rulings(img, rho) == count);
}

TEST_CASE("renders are deterministic") {
  FrontDiagram f = generate_front(parse_word(-4, "Z+ Z-"));
  CHECK(render_ascii(f) == render_ascii(f));
  CHECK(render_svg(f) == render_svg(f));
  CHECK(render_svg(f).find("<svg") == 0);
  CHECK(render_ascii(FrontDiagram::parse("L1 R1")).find('(') != std::string::npos);
}
