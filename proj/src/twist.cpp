#include "legknot/twist.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace legknot {

namespace {

bool is_plus(Letter l) { return l == Letter::ZPlus || l == Letter::SPlus; }
bool is_z(Letter l) { return l == Letter::ZPlus || l == Letter::ZMinus; }

// n parameter of the negative rows: m = -2n (even) or m = -2n-1 (odd).
int family_n(int m) { return m % 2 == 0 ? -m / 2 : (-m - 1) / 2; }

const char* letter_token(Letter l) {
  switch (l) {
    case Letter::ZPlus: return "Z+";
    case Letter::ZMinus: return "Z-";
    case Letter::SPlus: return "S+";
    case Letter::SMinus: return "S-";
    case Letter::X: return "X";
  }
  return "?";
}

long long ceil_half(long long v) { return (v + 1) / 2; }

std::vector<int> divisor_rhos(int degree) {
  std::vector<int> rhos = {0, 1};
  for (int d = 2; d <= std::abs(degree); ++d)
    if (std::abs(degree) % d == 0) rhos.push_back(d);
  return rhos;
}

// Canonical z- of an odd-family word: slide letters until z+ = n (each
// slide trades a Z+ for an S+ and a S- for a Z-, preserving z+ + z-),
// then take the larger of the result and its rotation image.
int odd_canonical_z_minus(int n, const LetterCounts& c) {
  int z = c.z_plus + c.z_minus;
  return std::max(z, 2 * n - 1 - z) - n;
}

void append_events(std::vector<Event>& out, std::initializer_list<Event> block) {
  out.insert(out.end(), block.begin(), block.end());
}

} // namespace

std::string word_text(const TwistWord& w) {
  std::string out;
  for (Letter l : w.letters) {
    if (!out.empty()) out += ' ';
    out += letter_token(l);
  }
  return out;
}

TwistWord parse_word(int m, const std::string& text) {
  TwistWord w{m, {}};
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "Z+") w.letters.push_back(Letter::ZPlus);
    else if (tok == "Z-") w.letters.push_back(Letter::ZMinus);
    else if (tok == "S+") w.letters.push_back(Letter::SPlus);
    else if (tok == "S-") w.letters.push_back(Letter::SMinus);
    else if (tok == "X") w.letters.push_back(Letter::X);
    else throw WordError("unknown letter '" + tok + "'");
  }
  validate_word(w);
  return w;
}

void validate_word(const TwistWord& w) {
  auto fail = [&](const std::string& why) {
    throw WordError("word '" + word_text(w) + "' for m = " +
                    std::to_string(w.m) + ": " + why);
  };
  if (w.m == -1) fail("m = -1 is the unknot; no twist words");
  if (w.m >= 0) {
    if (static_cast<int>(w.letters.size()) != w.m + 2)
      fail("expected " + std::to_string(w.m + 2) + " letters");
    for (Letter l : w.letters)
      if (l != Letter::X) fail("only X letters are allowed for m >= 0");
    return;
  }
  int n = family_n(w.m);
  std::size_t want = w.m % 2 == 0 ? 2 * n - 2 : 2 * n - 1;
  if (w.letters.size() != want)
    fail("expected " + std::to_string(want) + " letters");
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (w.letters[i] == Letter::X) fail("X letters are only allowed for m >= 0");
    if (i > 0 && is_plus(w.letters[i]) == is_plus(w.letters[i - 1]))
      fail("signs must alternate");
  }
  if (w.m % 2 != 0 && !w.letters.empty() &&
      (!is_plus(w.letters.front()) || !is_plus(w.letters.back())))
    fail("odd words start and end with a + letter");
}

LetterCounts letter_counts(const TwistWord& w) {
  LetterCounts c;
  for (Letter l : w.letters) {
    if (l == Letter::ZPlus) ++c.z_plus;
    else if (l == Letter::ZMinus) ++c.z_minus;
    else if (l == Letter::SPlus) ++c.s_plus;
    else if (l == Letter::SMinus) ++c.s_minus;
  }
  return c;
}

NormalForm normal_form(const TwistWord& w) {
  validate_word(w);
  if (w.m >= 0) return {w.m, 0, 0};
  int n = family_n(w.m);
  LetterCounts c = letter_counts(w);
  if (w.m % 2 == 0) {
    std::pair<int, int> a{c.z_plus, c.z_minus};
    std::pair<int, int> b{n - 1 - c.z_plus, n - 1 - c.z_minus};
    auto [zp, zm] = std::min(a, b);
    return {w.m, zp, zm};
  }
  return {w.m, n, odd_canonical_z_minus(n, c)};
}

TwistWord canonical_word(const NormalForm& nf) {
  TwistWord w{nf.m, {}};
  if (nf.m == -1) throw WordError("m = -1 is the unknot; no twist words");
  if (nf.m >= 0) {
    w.letters.assign(nf.m + 2, Letter::X);
    return w;
  }
  int n = family_n(nf.m);
  bool odd = nf.m % 2 != 0;
  int plus_total = odd ? n : n - 1;
  int minus_total = n - 1;
  for (int i = 0; i < plus_total + minus_total; ++i) {
    int slot = i / 2;
    if (i % 2 == 0)
      w.letters.push_back(slot < nf.z_plus ? Letter::ZPlus : Letter::SPlus);
    else
      w.letters.push_back(slot < nf.z_minus ? Letter::ZMinus : Letter::SMinus);
  }
  validate_word(w);
  return w;
}

int max_tb(int m) {
  if (m == -1) return -1;
  if (m >= 0) return m % 2 == 0 ? -m - 1 : -m - 5;
  return m % 2 == 0 ? 1 : -3;
}

std::vector<ClassRep> classes_at_max_tb(int m) {
  if (m == -1) throw WordError("m = -1 is the unknot; no class list");
  std::vector<ClassRep> out;
  if (m >= 0) {
    NormalForm nf{m, 0, 0};
    if (m % 2 == 0) {
      out.push_back({nf, 0, canonical_word(nf)});
    } else {
      out.push_back({nf, +1, canonical_word(nf)});
      out.push_back({nf, -1, canonical_word(nf)});
    }
    return out;
  }
  int n = family_n(m);
  if (m % 2 == 0) {
    for (int zp = 0; zp < n; ++zp)
      for (int zm = 0; zm < n; ++zm) {
        NormalForm nf{m, zp, zm};
        if (std::pair{zp, zm} <= std::pair{n - 1 - zp, n - 1 - zm})
          out.push_back({nf, 0, canonical_word(nf)});
      }
  } else {
    for (int zm = 0; zm < n; ++zm) {
      NormalForm nf{m, n, zm};
      out.push_back({nf, 0, canonical_word(nf)});
    }
  }
  return out;
}

FrontDiagram generate_front(const TwistWord& w) {
  validate_word(w);
  std::vector<Event> ev;
  // Clasp closure: the empty word gives the maximal right trefoil front.
  append_events(ev, {birth(1), birth(3), crossing(2)});
  for (Letter l : w.letters) {
    switch (l) {
      case Letter::ZPlus:
        append_events(ev, {birth(1), crossing(2), death(3)});
        break;
      case Letter::ZMinus:
        append_events(ev, {birth(5), crossing(4), death(3)});
        break;
      case Letter::SPlus:
        append_events(ev, {birth(3), crossing(2), death(1)});
        break;
      case Letter::SMinus:
        append_events(ev, {birth(3), crossing(4), death(5)});
        break;
      case Letter::X:
        append_events(ev, {birth(1), crossing(2), crossing(3), death(1)});
        break;
    }
  }
  append_events(ev, {crossing(2), crossing(2), death(1), death(1)});
  return FrontDiagram(std::move(ev));
}

RulingSignature predicted_signature(int m, const LetterCounts& counts) {
  if (m > -2) throw WordError("predicted signature requires m <= -2");
  int n = family_n(m);
  int degree = m % 2 == 0
                   ? 2 * (counts.z_plus + counts.z_minus + 1 - n)
                   : 2 * odd_canonical_z_minus(n, counts) + 1;
  RulingSignature sig;
  for (int rho : divisor_rhos(degree)) {
    bool divides = rho == 0 ? degree == 0 : degree % rho == 0;
    sig.counts[rho] = divides ? 2 : 1;
  }
  return sig;
}

long long stab_classes(int m, int p, int q) {
  if (p < 0 || q < 0) throw WordError("stabilization counts must be >= 0");
  if (m >= -1) return 1;
  int n = family_n(m);
  if (m % 2 != 0) return (p == 0 && q == 0) ? n : 1;
  if (p == 0 && q == 0) return ceil_half(static_cast<long long>(n) * n);
  if (p > 0 && q > 0) return 1;
  return ceil_half(n);
}

MountainRange mountain_range(int m, int radius) {
  if (m == -1) throw WordError("m = -1 is the unknot; no mountain range");
  if (radius < 0) throw WordError("radius must be >= 0");
  MountainRange mr;
  mr.m = m;
  mr.radius = radius;
  int top = max_tb(m);
  bool split_peaks = m >= 1 && m % 2 != 0;
  if (split_peaks) {
    mr.peaks = {{+1, top}, {-1, top}};
  } else {
    mr.peaks = {{0, top}};
  }
  for (int t = top; t >= top - radius; --t) {
    int s = top - t;
    int spread = split_peaks ? s + 1 : s;
    for (int r = -spread; r <= spread; ++r) {
      if (split_peaks) {
        // Reachable from a peak at rotation e with p - q = r - e.
        bool ok = false;
        for (int e : {+1, -1}) {
          int p2 = s + r - e, q2 = s - r + e; // twice the stab counts
          if (p2 >= 0 && q2 >= 0 && p2 % 2 == 0) ok = true;
        }
        if (ok) mr.counts[{r, t}] = 1;
      } else {
        if ((s + r) % 2 != 0) continue;
        mr.counts[{r, t}] = stab_classes(m, (s + r) / 2, (s - r) / 2);
      }
    }
  }
  return mr;
}

TransverseClassification transverse_classes(int m) {
  TransverseClassification tc;
  if (m == -1) {
    tc.max_sl = -1;
  } else if (m >= 0) {
    tc.max_sl = m % 2 == 0 ? -m - 1 : -m - 4;
  } else if (m % 2 != 0) {
    tc.max_sl = -3;
  } else {
    tc.max_sl = 1;
    int n = family_n(m);
    tc.classes_at_max = ceil_half(n);
    tc.n2_edge = n == 2;
  }
  tc.simple = tc.classes_at_max == 1;
  return tc;
}

std::vector<TwistWord> word_moves(const TwistWord& w) {
  validate_word(w);
  std::set<std::vector<Letter>> seen = {w.letters};
  std::vector<std::vector<Letter>> queue = {w.letters};
  bool cycles = w.m <= -2 && w.m % 2 == 0 && w.letters.size() >= 2;
  while (!queue.empty()) {
    std::vector<Letter> cur = queue.back();
    queue.pop_back();
    std::vector<std::vector<Letter>> next;
    for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
      std::vector<Letter> t = cur;
      std::swap(t[i], t[i + 2]);
      next.push_back(std::move(t));
    }
    if (cycles) {
      std::vector<Letter> left(cur.begin() + 1, cur.end());
      left.push_back(cur.front());
      next.push_back(std::move(left));
      std::vector<Letter> right(cur.end() - 1, cur.end());
      right.insert(right.end(), cur.begin(), cur.end() - 1);
      next.push_back(std::move(right));
    }
    for (auto& cand : next)
      if (seen.insert(cand).second) queue.push_back(cand);
  }
  std::vector<TwistWord> out;
  for (const auto& letters : seen) out.push_back({w.m, letters});
  return out;
}

} // namespace legknot
