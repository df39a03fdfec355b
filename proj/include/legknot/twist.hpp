#pragma once

// Word calculus and classification tables for the twist-knot family K_m.
// A twisted clasp closure carries a word of letters describing the twist
// region: Z+/Z-/S+/S- blocks for m <= -2, X half-twist blocks for m >= 0.
// Words map to front diagrams via fixed event templates, and the tables
// below give maximal tb/sl values and isotopy-class counts.

#include "legknot/front.hpp"
#include "legknot/rulings.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace legknot {

enum class Letter { ZPlus, ZMinus, SPlus, SMinus, X };

class WordError : public std::runtime_error {
public:
  explicit WordError(const std::string& msg) : std::runtime_error(msg) {}
};

struct LetterCounts {
  int z_plus = 0, z_minus = 0, s_plus = 0, s_minus = 0;
  bool operator==(const LetterCounts&) const = default;
};

struct TwistWord {
  int m = 0;
  std::vector<Letter> letters;

  bool operator==(const TwistWord&) const = default;
  auto operator<=>(const TwistWord&) const = default;
};

// Text format: space-separated tokens "Z+ Z- S+ S- X".
TwistWord parse_word(int m, const std::string& text);
std::string word_text(const TwistWord& w);

// Throws WordError unless w is a well-formed word for its parameter:
//   m = -2n <= -2:   2n-2 letters in {Z,S}x{+,-}, signs strictly alternate;
//   m = -2n-1 <= -3: 2n-1 such letters, alternating, first and last +;
//   m >= 0:          exactly m+2 letters X;
//   m = -1:          no words (unknot, out of family).
void validate_word(const TwistWord& w);

LetterCounts letter_counts(const TwistWord& w);

// Canonical class label.  Even m: the pair (z+, z-) reduced to the
// lexicographic minimum of itself and its 180-degree rotation image
// (n-1-z+, n-1-z-).  Odd m <= -3: z+ normalized to n, then z- reduced to
// the larger of z- and its rotation image; stored range 0..n-1.  m >= 0:
// zeros (single word).
struct NormalForm {
  int m = 0;
  int z_plus = 0, z_minus = 0;

  bool operator==(const NormalForm&) const = default;
  auto operator<=>(const NormalForm&) const = default;
};

NormalForm normal_form(const TwistWord& w);
TwistWord canonical_word(const NormalForm& nf);

// Maximal Thurston-Bennequin number of K_m (the m = -1 row is the unknot).
int max_tb(int m);

// One entry per Legendrian isotopy class at maximal tb.  rot is 0 except
// for odd m >= 1, where the unique word splits into two classes with
// rotation number +1 and -1.
struct ClassRep {
  NormalForm form;
  int rot = 0;
  TwistWord word;
};

// Throws WordError for m = -1.
std::vector<ClassRep> classes_at_max_tb(int m);

// Front diagram of the maximal representative encoded by w: a clasp
// closure template with one event block per letter.  The result is a
// valid single-component front with tb = max_tb(m).
FrontDiagram generate_front(const TwistWord& w);

// Ruling counts predicted for the maximal representative with the given
// letter counts (m <= -2 only): 2 when rho divides the clasp degree
// (2(z+ + z- + 1 - n) even case, 2z- + 1 odd case after normalization),
// else 1.  Reported for rho in {0, 1} plus the divisors of the degree.
RulingSignature predicted_signature(int m, const LetterCounts& counts);

// Number of Legendrian isotopy classes surviving after p positive and q
// negative stabilizations of the maximal-tb classes.
long long stab_classes(int m, int p, int q);

struct MountainRange {
  int m = 0;
  int radius = 4;
  std::vector<std::pair<int, int>> peaks;          // (rot, tb)
  std::map<std::pair<int, int>, long long> counts; // (rot, tb) -> classes
};

// Class counts on the (rot, tb) lattice down to tb >= max_tb - radius.
// Throws WordError for m = -1.
MountainRange mountain_range(int m, int radius = 4);

struct TransverseClassification {
  int max_sl = 0;
  long long classes_at_max = 1;
  bool simple = true;
  // The class-count formula gives 1 at n = 2 (m = -4) even though the
  // family is classified as transversely nonsimple from n = 2 on; the
  // table reports the formula value and raises this flag.
  bool n2_edge = false;
};

TransverseClassification transverse_classes(int m);

// Closure of w under the word moves: transposition of consecutive
// same-sign letters, plus cyclic rotation by one letter in the even case.
// Every member shares letter_counts(w); sorted and duplicate-free.
std::vector<TwistWord> word_moves(const TwistWord& w);

} // namespace legknot
