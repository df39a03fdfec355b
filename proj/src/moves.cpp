#include "legknot/moves.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace legknot {

namespace {

using Events = std::vector<Event>;

// Swapped pair (B', A') when events A, B at consecutive positions have
// disjoint supports, with level indices adjusted for the exchange.  Events
// that touch adjacent or overlapping levels do not commute.
std::optional<std::pair<Event, Event>> commuted(const Event& a, const Event& b) {
  int i = a.index, j = b.index;
  switch (a.kind) {
    case EventKind::Birth:
      switch (b.kind) {
        case EventKind::Birth:
          if (j <= i) return {{birth(j), birth(i + 2)}};
          if (j >= i + 2) return {{birth(j - 2), birth(i)}};
          return std::nullopt;
        case EventKind::Death:
          if (j >= i + 2) return {{death(j - 2), birth(i)}};
          if (j <= i - 2) return {{death(j), birth(i - 2)}};
          return std::nullopt;
        case EventKind::Crossing:
          if (j >= i + 2) return {{crossing(j - 2), birth(i)}};
          if (j <= i - 2) return {{crossing(j), birth(i)}};
          return std::nullopt;
      }
      break;
    case EventKind::Death:
      switch (b.kind) {
        case EventKind::Birth:
          if (j >= i) return {{birth(j + 2), death(i)}};
          return {{birth(j), death(i + 2)}};
        case EventKind::Death:
          if (j >= i) return {{death(j + 2), death(i)}};
          if (j <= i - 2) return {{death(j), death(i - 2)}};
          return std::nullopt;
        case EventKind::Crossing:
          if (j >= i) return {{crossing(j + 2), death(i)}};
          if (j <= i - 2) return {{crossing(j), death(i)}};
          return std::nullopt;
      }
      break;
    case EventKind::Crossing:
      switch (b.kind) {
        case EventKind::Birth:
          if (j <= i) return {{birth(j), crossing(i + 2)}};
          if (j >= i + 2) return {{birth(j), crossing(i)}};
          return std::nullopt;
        case EventKind::Death:
          if (j >= i + 2) return {{death(j), crossing(i)}};
          if (j <= i - 2) return {{death(j), crossing(i - 2)}};
          return std::nullopt;
        case EventKind::Crossing:
          if (j >= i + 2 || j <= i - 2) return {{crossing(j), crossing(i)}};
          return std::nullopt;
      }
      break;
  }
  return std::nullopt;
}

// Cusp slides (Reidemeister II): a strand adjacent to a cusp passes
// through it, crossing both branches.  Variants 0-3 expand one cusp event
// into a cusp plus two crossings; variants 4-7 contract the mirror-image
// window back.  The expanded window for variant v, given the cusp level i:
//   0: [B(i)]  -> [B(i-1), X(i), X(i-1)]   strand above the new cusp
//   1: [B(i)]  -> [B(i+1), X(i), X(i+1)]   strand below the new cusp
//   2: [D(i)]  -> [X(i-1), X(i), D(i-1)]   strand above the dying pair
//   3: [D(i)]  -> [X(i+1), X(i), D(i+1)]   strand below the dying pair
std::optional<Events> cusp_slid_forward(const Event& a, int variant, int strands) {
  int i = a.index;
  switch (variant) {
    case 0:
      if (a.kind == EventKind::Birth && i >= 2)
        return Events{birth(i - 1), crossing(i), crossing(i - 1)};
      break;
    case 1:
      if (a.kind == EventKind::Birth && i <= strands)
        return Events{birth(i + 1), crossing(i), crossing(i + 1)};
      break;
    case 2:
      if (a.kind == EventKind::Death && i >= 2)
        return Events{crossing(i - 1), crossing(i), death(i - 1)};
      break;
    case 3:
      if (a.kind == EventKind::Death && i + 2 <= strands)
        return Events{crossing(i + 1), crossing(i), death(i + 1)};
      break;
  }
  return std::nullopt;
}

// Contracted single event when the 3-event window at `p` matches the
// expanded shape of variant v-4, or nullopt.
std::optional<Event> cusp_slid_backward(const Events& ev, std::size_t p,
                                        int variant) {
  if (p + 3 > ev.size()) return std::nullopt;
  const Event &a = ev[p], &b = ev[p + 1], &c = ev[p + 2];
  switch (variant) {
    case 4:
      if (a.kind == EventKind::Birth && b == crossing(a.index + 1) &&
          c == crossing(a.index))
        return birth(a.index + 1);
      break;
    case 5:
      if (a.kind == EventKind::Birth && a.index >= 2 &&
          b == crossing(a.index - 1) && c == crossing(a.index))
        return birth(a.index - 1);
      break;
    case 6:
      if (c.kind == EventKind::Death && a == crossing(c.index) &&
          b == crossing(c.index + 1))
        return death(c.index + 1);
      break;
    case 7:
      if (c.kind == EventKind::Death && c.index >= 2 &&
          a == crossing(c.index) && b == crossing(c.index - 1))
        return death(c.index - 1);
      break;
  }
  return std::nullopt;
}

// The two tb-preserving kink shapes on the strand at level q.
Events kink_events(int q, int variant) {
  if (variant == 0) return {birth(q + 1), crossing(q), death(q + 1)};
  return {birth(q), crossing(q + 1), death(q)};
}

std::optional<std::pair<int, int>> match_kink(const Events& ev, std::size_t p) {
  if (p + 3 > ev.size()) return std::nullopt;
  for (int variant = 0; variant < 2; ++variant) {
    // Recover q from the birth index per variant and compare the window.
    int q = variant == 0 ? ev[p].index - 1 : ev[p].index;
    if (q < 1) continue;
    Events want = kink_events(q, variant);
    if (ev[p] == want[0] && ev[p + 1] == want[1] && ev[p + 2] == want[2])
      return {{q, variant}};
  }
  return std::nullopt;
}

// Zigzag insertion on the strand at level q.  `down` selects the zigzag
// whose two new cusps are traversed downward under the strand's canonical
// direction (+1 rightward); down zigzags raise rot by one.
Events zigzag_events(int q, int dir, bool down) {
  bool lower_first = (dir > 0) == down;
  if (lower_first) return {birth(q + 1), death(q)};
  return {birth(q), death(q + 1)};
}

FrontDiagram rebuilt(Events ev) { return FrontDiagram(std::move(ev)); }

FrontDiagram with_window(const FrontDiagram& f, std::size_t pos,
                         std::size_t removed, const Events& insert) {
  Events ev = f.events();
  ev.erase(ev.begin() + pos, ev.begin() + pos + removed);
  ev.insert(ev.begin() + pos, insert.begin(), insert.end());
  return rebuilt(std::move(ev));
}

bool is_isotopy(MoveKind k) {
  return k == MoveKind::Commute || k == MoveKind::CuspSlide ||
         k == MoveKind::TriplePoint || k == MoveKind::KinkBirth ||
         k == MoveKind::KinkDeath;
}

}  // namespace

std::string move_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::Commute: return "commute";
    case MoveKind::CuspSlide: return "cusp-slide";
    case MoveKind::TriplePoint: return "triple-point";
    case MoveKind::KinkBirth: return "kink-birth";
    case MoveKind::KinkDeath: return "kink-death";
    case MoveKind::Rotate180: return "rotate-180";
    case MoveKind::ReverseOrientation: return "reverse-orientation";
    case MoveKind::StabilizePlus: return "stabilize-plus";
    case MoveKind::StabilizeMinus: return "stabilize-minus";
  }
  return "?";
}

std::vector<Move> applicable_moves(const FrontDiagram& f) {
  std::vector<Move> out;
  const Events& ev = f.events();
  // Commuting starts at position 1: the first birth pins the canonical
  // orientation's base arc, and exchanging it with another birth can flip
  // the computed rotation number even though the fronts are isotopic.
  for (std::size_t p = 1; p + 1 < ev.size(); ++p) {
    if (commuted(ev[p], ev[p + 1]))
      out.push_back({MoveKind::Commute, p, 0, 0});
  }
  for (std::size_t p = 0; p < ev.size(); ++p) {
    int k = f.strands_before(p);
    for (int v = 0; v < 4; ++v)
      if (cusp_slid_forward(ev[p], v, k))
        out.push_back({MoveKind::CuspSlide, p, 0, v});
    for (int v = 4; v < 8; ++v)
      if (cusp_slid_backward(ev, p, v))
        out.push_back({MoveKind::CuspSlide, p, 0, v});
  }
  for (std::size_t p = 0; p + 2 < ev.size(); ++p) {
    if (ev[p].kind == EventKind::Crossing &&
        ev[p + 1].kind == EventKind::Crossing &&
        ev[p + 2].kind == EventKind::Crossing && ev[p + 2] == ev[p] &&
        (ev[p + 1].index == ev[p].index + 1 ||
         ev[p + 1].index == ev[p].index - 1))
      out.push_back({MoveKind::TriplePoint, p, 0, 0});
    if (auto m = match_kink(ev, p))
      out.push_back({MoveKind::KinkDeath, p, m->first, m->second});
  }
  for (std::size_t p = 1; p < ev.size(); ++p) {
    int k = f.strands_before(p);
    for (int q = 1; q <= k; ++q) {
      out.push_back({MoveKind::KinkBirth, p, q, 0});
      out.push_back({MoveKind::KinkBirth, p, q, 1});
      out.push_back({MoveKind::StabilizePlus, p, q, 0});
      out.push_back({MoveKind::StabilizeMinus, p, q, 0});
    }
  }
  out.push_back({MoveKind::Rotate180, 0, 0, 0});
  out.push_back({MoveKind::ReverseOrientation, 0, 0, 0});
  return out;
}

FrontDiagram apply_move(const FrontDiagram& f, const Move& mv) {
  const Events& ev = f.events();
  auto fail = [&](const std::string& why) -> FrontDiagram {
    throw FrontError(move_name(mv.kind) + " at position " +
                     std::to_string(mv.pos) + ": " + why);
  };
  switch (mv.kind) {
    case MoveKind::Commute: {
      if (mv.pos < 1 || mv.pos + 1 >= ev.size()) return fail("out of range");
      auto sw = commuted(ev[mv.pos], ev[mv.pos + 1]);
      if (!sw) return fail("events do not commute");
      return with_window(f, mv.pos, 2, {sw->first, sw->second});
    }
    case MoveKind::CuspSlide: {
      if (mv.pos >= ev.size()) return fail("out of range");
      if (mv.variant < 4) {
        auto w = cusp_slid_forward(ev[mv.pos], mv.variant,
                                   f.strands_before(mv.pos));
        if (!w) return fail("window does not match the slide pattern");
        return with_window(f, mv.pos, 1, *w);
      }
      auto e = cusp_slid_backward(ev, mv.pos, mv.variant);
      if (!e) return fail("window does not match the slide pattern");
      return with_window(f, mv.pos, 3, {*e});
    }
    case MoveKind::TriplePoint: {
      if (mv.pos + 2 >= ev.size()) return fail("out of range");
      const Event &a = ev[mv.pos], &b = ev[mv.pos + 1];
      if (a.kind != EventKind::Crossing || b.kind != EventKind::Crossing ||
          ev[mv.pos + 2] != a ||
          (b.index != a.index + 1 && b.index != a.index - 1))
        return fail("window is not a braid-relation triple");
      return with_window(f, mv.pos, 3, {b, a, b});
    }
    case MoveKind::KinkBirth: {
      if (mv.pos > ev.size()) return fail("out of range");
      if (mv.level < 1 || mv.level > f.strands_before(mv.pos))
        return fail("no strand at that level");
      return with_window(f, mv.pos, 0, kink_events(mv.level, mv.variant));
    }
    case MoveKind::KinkDeath: {
      auto m = match_kink(ev, mv.pos);
      if (!m) return fail("window is not a kink");
      return with_window(f, mv.pos, 3, {});
    }
    case MoveKind::Rotate180:
      return rotate180(f);
    case MoveKind::ReverseOrientation:
      return f;
    case MoveKind::StabilizePlus:
    case MoveKind::StabilizeMinus: {
      if (mv.pos < 1 || mv.pos >= ev.size()) return fail("out of range");
      if (mv.level < 1 || mv.level > f.strands_before(mv.pos))
        return fail("no strand at that level");
      FrontTrace trace(f);
      int dir = trace.direction(trace.segment(mv.pos, mv.level));
      bool down = mv.kind == MoveKind::StabilizePlus;
      return with_window(f, mv.pos, 0, zigzag_events(mv.level, dir, down));
    }
  }
  return fail("unknown move kind");
}

FrontDiagram rotate180(const FrontDiagram& f) {
  Events out;
  out.reserve(f.size());
  const Events& ev = f.events();
  for (std::size_t t = ev.size(); t-- > 0;) {
    int k = f.strands_before(t);
    const Event& e = ev[t];
    switch (e.kind) {
      case EventKind::Birth: out.push_back(death(k + 2 - e.index)); break;
      case EventKind::Death: out.push_back(birth(k - e.index)); break;
      case EventKind::Crossing: out.push_back(crossing(k - e.index)); break;
    }
  }
  return rebuilt(std::move(out));
}

FrontDiagram random_move_walk(const FrontDiagram& f, int steps,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FrontDiagram cur = f;
  // Growth cap keeps long walks from inflating the word without bound:
  // once the word is this much longer than the input, kink births are
  // withheld until kink deaths shrink it again.
  std::size_t cap = f.size() + 12;
  for (int s = 0; s < steps; ++s) {
    std::vector<Move> options;
    for (const Move& mv : applicable_moves(cur)) {
      if (!is_isotopy(mv.kind)) continue;
      bool grows = mv.kind == MoveKind::KinkBirth ||
                   (mv.kind == MoveKind::CuspSlide && mv.variant < 4);
      if (grows && cur.size() >= cap) continue;
      options.push_back(mv);
    }
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    cur = apply_move(cur, options[pick(rng)]);
  }
  return cur;
}

}  // namespace legknot
