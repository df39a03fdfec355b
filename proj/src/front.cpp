#include "legknot/front.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace legknot {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw FrontError(msg); }

std::string event_token(const Event& e) {
  char c = e.kind == EventKind::Birth ? 'L' : e.kind == EventKind::Death ? 'R' : 'X';
  return c + std::to_string(e.index);
}

}  // namespace

FrontDiagram::FrontDiagram(std::vector<Event> events) : events_(std::move(events)) {
  int k = 0;
  for (std::size_t t = 0; t < events_.size(); ++t) {
    const Event& e = events_[t];
    std::string where = "event " + std::to_string(t + 1) + " (" + event_token(e) + ")";
    if (e.index < 1) fail(where + ": index must be >= 1");
    switch (e.kind) {
      case EventKind::Birth:
        if (e.index > k + 1) fail(where + ": birth index exceeds strand count + 1");
        k += 2;
        ++births_;
        break;
      case EventKind::Death:
        if (e.index + 1 > k) fail(where + ": death needs two strands at its level");
        k -= 2;
        ++deaths_;
        break;
      case EventKind::Crossing:
        if (e.index + 1 > k) fail(where + ": crossing needs two strands at its level");
        ++crossings_;
        break;
    }
    max_strands_ = std::max(max_strands_, k);
  }
  if (k != 0) fail("strand count is " + std::to_string(k) + " after the last event");
}

FrontDiagram FrontDiagram::parse(const std::string& text) {
  std::vector<Event> events;
  std::size_t i = 0, ordinal = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string tok = text.substr(i, j - i);
    ++ordinal;
    auto bad = [&](const std::string& why) {
      fail("token " + std::to_string(ordinal) + " ('" + tok + "'): " + why);
    };
    if (tok.size() < 2) bad("expected L<i>, R<i> or X<i>");
    EventKind kind;
    switch (tok[0]) {
      case 'L': kind = EventKind::Birth; break;
      case 'R': kind = EventKind::Death; break;
      case 'X': kind = EventKind::Crossing; break;
      default: bad("unknown event letter"); std::abort();
    }
    int idx = 0;
    for (std::size_t p = 1; p < tok.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(tok[p]))) bad("index is not a number");
      idx = idx * 10 + (tok[p] - '0');
      if (idx > 1000000) bad("index out of range");
    }
    if (idx < 1) bad("index must be >= 1");
    events.push_back({kind, idx});
    i = j;
  }
  return FrontDiagram(std::move(events));
}

std::string FrontDiagram::serialize() const {
  std::ostringstream out;
  for (std::size_t t = 0; t < events_.size(); ++t) {
    if (t) out << ' ';
    out << event_token(events_[t]);
  }
  return out.str();
}

int FrontDiagram::strands_before(std::size_t pos) const {
  int k = 0;
  for (std::size_t t = 0; t < pos && t < events_.size(); ++t) {
    switch (events_[t].kind) {
      case EventKind::Birth: k += 2; break;
      case EventKind::Death: k -= 2; break;
      case EventKind::Crossing: break;
    }
  }
  return k;
}

FrontTrace::FrontTrace(const FrontDiagram& f) : front_(&f) {
  const auto& ev = f.events();
  const std::size_t E = ev.size();
  seg_at_.assign(E + 1, {});

  auto new_seg = [&]() {
    left_.push_back({});
    right_.push_back({});
    return static_cast<int>(left_.size()) - 1;
  };
  auto connect = [&](int a, int b, bool cusp_link, bool a_right, bool b_left) {
    // a_right: link attaches at a's right end; b_left: at b's left end.
    (a_right ? right_[a] : left_[a]) = {b, cusp_link};
    (b_left ? left_[b] : right_[b]) = {a, cusp_link};
  };

  // Build segments gap by gap.
  for (std::size_t t = 0; t < E; ++t) {
    const auto& cur = seg_at_[t];
    auto& nxt = seg_at_[t + 1];
    const Event& e = ev[t];
    const int k = static_cast<int>(cur.size());
    const int i = e.index;  // 1-based
    switch (e.kind) {
      case EventKind::Birth: {
        nxt.resize(k + 2);
        for (int l = 0; l < i - 1; ++l) {
          nxt[l] = new_seg();
          connect(cur[l], nxt[l], false, true, true);
        }
        int u = new_seg(), d = new_seg();
        nxt[i - 1] = u;
        nxt[i] = d;
        connect(u, d, true, false, true);  // left ends meet at the cusp
        for (int l = i - 1; l < k; ++l) {
          nxt[l + 2] = new_seg();
          connect(cur[l], nxt[l + 2], false, true, true);
        }
        break;
      }
      case EventKind::Death: {
        nxt.resize(k - 2);
        for (int l = 0; l < i - 1; ++l) {
          nxt[l] = new_seg();
          connect(cur[l], nxt[l], false, true, true);
        }
        // right ends of the dying pair meet at the cusp
        right_[cur[i - 1]] = {cur[i], true};
        right_[cur[i]] = {cur[i - 1], true};
        for (int l = i + 1; l < k; ++l) {
          nxt[l - 2] = new_seg();
          connect(cur[l], nxt[l - 2], false, true, true);
        }
        break;
      }
      case EventKind::Crossing: {
        nxt.resize(k);
        for (int l = 0; l < k; ++l) {
          nxt[l] = new_seg();
          int src = l;
          if (l == i - 1) src = i;        // new upper comes from old lower
          else if (l == i) src = i - 1;   // new lower from old upper
          connect(cur[src], nxt[l], false, true, true);
        }
        break;
      }
    }
  }

  const int n = segment_count();
  comp_.assign(n, -1);
  dir_.assign(n, 0);
  arc_.assign(n, -1);

  // Trace components; orient each starting from its lowest-id segment
  // moving rightward.  The canonical base is the upper newborn of the
  // first event, which has segment id 0 when the diagram is nonempty.
  for (int s0 = 0; s0 < n; ++s0) {
    if (comp_[s0] >= 0) continue;
    int c = component_count_++;
    int s = s0, moving = +1;  // +1: toward the right end
    do {
      comp_[s] = c;
      dir_[s] = moving;
      const Link& ln = moving > 0 ? right_[s] : left_[s];
      // Through a cusp link we enter the partner at the same-side end and
      // reverse x-direction; otherwise we continue in the same direction.
      s = ln.other;
      if (ln.cusp) moving = -moving;
    } while (s != s0);
  }

  // Arcs: cut at cusp links.
  for (int s0 = 0; s0 < n; ++s0) {
    if (arc_[s0] >= 0) continue;
    int a = arc_count_++;
    int s = s0;
    // walk left to the start of the arc
    while (!left_[s].cusp) {
      s = left_[s].other;
      if (s == s0) break;  // cusp-free cycle cannot happen in a valid front
    }
    int t = s;
    do {
      arc_[t] = a;
      if (right_[t].cusp) break;
      t = right_[t].other;
    } while (t != s);
  }
  base_arc_ = n > 0 ? arc_[0] : -1;

  // Cusp traversal directions.
  for (std::size_t t = 0; t < E; ++t) {
    if (ev[t].kind == EventKind::Crossing) continue;
    int d = cusp_direction(t);
    if (d > 0) ++down_cusps_; else ++up_cusps_;
  }
}

int FrontTrace::segment(std::size_t gap, int level) const {
  return seg_at_[gap][level - 1];
}

int FrontTrace::crossing_sign(std::size_t pos) const {
  const Event& e = front_->events()[pos];
  if (e.kind != EventKind::Crossing) fail("crossing_sign: not a crossing event");
  int over = segment(pos, e.index);       // descending strand
  int under = segment(pos, e.index + 1);  // ascending strand
  // over velocity (d, -d), under (u, u): det = 2du.
  return dir_[over] * dir_[under];
}

int FrontTrace::writhe() const {
  int w = 0;
  for (std::size_t t = 0; t < front_->size(); ++t)
    if (front_->events()[t].kind == EventKind::Crossing) w += crossing_sign(t);
  return w;
}

int FrontTrace::cusp_direction(std::size_t pos) const {
  const Event& e = front_->events()[pos];
  if (e.kind == EventKind::Birth) {
    // Left cusp: traversal enters on the leftward side and exits on the
    // rightward one; it moves upward exactly when the upper arc exits.
    int upper = segment(pos + 1, e.index);
    return dir_[upper] > 0 ? -1 : +1;
  }
  if (e.kind == EventKind::Death) {
    // Right cusp: traversal enters on the rightward side.
    int upper = segment(pos, e.index);
    return dir_[upper] > 0 ? +1 : -1;
  }
  fail("cusp_direction: not a cusp event");
}

int component_count(const FrontDiagram& f) {
  if (f.empty()) return 0;
  return FrontTrace(f).component_count();
}

int tb(const FrontDiagram& f) {
  FrontTrace tr(f);
  if (tr.component_count() != 1) fail("tb: front has more than one component");
  return tr.writhe() - f.deaths();
}

int rot(const FrontDiagram& f, Orientation o) {
  FrontTrace tr(f);
  if (tr.component_count() != 1) fail("rot: front has more than one component");
  return o.sign * (tr.down_cusps() - tr.up_cusps()) / 2;
}

MaslovPotential maslov_potential(const FrontDiagram& f, Orientation o) {
  FrontTrace tr(f);
  if (tr.component_count() != 1) fail("maslov_potential: front has more than one component");
  int r = o.sign * (tr.down_cusps() - tr.up_cusps()) / 2;
  MaslovPotential pot;
  pot.modulus = 2 * (r < 0 ? -r : r);
  pot.arc_value.assign(tr.arc_count(), 0);

  std::vector<char> known(tr.arc_count(), 0);
  known[tr.base_arc()] = 1;
  // Propagate the cusp relation value(upper) = value(lower) + 1 until all
  // arcs are labeled; the constraint cycle sums to 2 rot, so it closes.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t t = 0; t < f.size(); ++t) {
      const Event& e = f.events()[t];
      int up, lo;
      if (e.kind == EventKind::Birth) {
        up = tr.arc_at(t + 1, e.index);
        lo = tr.arc_at(t + 1, e.index + 1);
      } else if (e.kind == EventKind::Death) {
        up = tr.arc_at(t, e.index);
        lo = tr.arc_at(t, e.index + 1);
      } else {
        continue;
      }
      if (known[up] && !known[lo]) {
        pot.arc_value[lo] = pot.reduce(pot.arc_value[up] - 1);
        known[lo] = 1;
        progress = true;
      } else if (known[lo] && !known[up]) {
        pot.arc_value[up] = pot.reduce(pot.arc_value[lo] + 1);
        known[up] = 1;
        progress = true;
      } else if (known[up] && known[lo]) {
        if (pot.reduce(pot.arc_value[lo] + 1) != pot.arc_value[up])
          fail("maslov_potential: inconsistent cusp relations (internal error)");
      }
    }
  }
  for (char k : known)
    if (!k) fail("maslov_potential: unreached arc (internal error)");
  return pot;
}

int crossing_degree(const FrontDiagram& f, const FrontTrace& trace,
                    const MaslovPotential& pot, std::size_t pos) {
  const Event& e = f.events()[pos];
  if (e.kind != EventKind::Crossing) fail("crossing_degree: position is not a crossing");
  int desc = trace.arc_at(pos, e.index);
  int asc = trace.arc_at(pos, e.index + 1);
  return pot.reduce(pot.value(desc) - pot.value(asc));
}

std::vector<int> crossing_degrees(const FrontDiagram& f, Orientation o) {
  FrontTrace tr(f);
  MaslovPotential pot = maslov_potential(f, o);
  std::vector<int> deg(f.size(), 0);
  for (std::size_t t = 0; t < f.size(); ++t)
    if (f.events()[t].kind == EventKind::Crossing)
      deg[t] = crossing_degree(f, tr, pot, t);
  return deg;
}

}  // namespace legknot
