#include "legknot/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace legknot {

namespace {

// Row of strand level l (1-based) on the doubled grid: even rows carry
// strands, odd rows carry crossing points and vertical jogs.
int row_of(int level) { return 2 * (level - 1); }

// Level of the strand at `level` in the gap before the event, after the
// event has been applied (births push lower strands down, deaths pull
// them up, crossings swap the pair).
int level_after(const Event& e, int level) {
  switch (e.kind) {
    case EventKind::Birth:
      return level >= e.index ? level + 2 : level;
    case EventKind::Death:
      return level >= e.index + 2 ? level - 2 : level;
    case EventKind::Crossing:
      if (level == e.index) return e.index + 1;
      if (level == e.index + 1) return e.index;
      return level;
  }
  return level;
}

struct Grid {
  std::vector<std::string> rows;

  void put(int r, int c, char ch) {
    if (r < 0) return;
    if (r >= static_cast<int>(rows.size())) rows.resize(r + 1);
    if (c >= static_cast<int>(rows[r].size())) rows[r].resize(c + 1, ' ');
    rows[r][c] = ch;
  }

  std::string str() const {
    std::string out;
    for (std::string row : rows) {
      while (!row.empty() && row.back() == ' ') row.pop_back();
      out += row;
      out += '\n';
    }
    return out;
  }
};

} // namespace

std::string render_ascii(const FrontDiagram& f) {
  constexpr int kGap = 2, kCell = 3;
  Grid g;
  int x = 0;
  for (std::size_t t = 0; t <= f.size(); ++t) {
    int k = f.strands_before(t);
    for (int l = 1; l <= k; ++l)
      for (int c = 0; c < kGap; ++c) g.put(row_of(l), x + c, '-');
    x += kGap;
    if (t == f.size()) break;
    const Event& e = f.events()[t];
    // Pass-through strands, with vertical jogs where the level shifts.
    for (int l = 1; l <= k; ++l) {
      if (e.kind == EventKind::Death && (l == e.index || l == e.index + 1))
        continue;
      if (e.kind == EventKind::Crossing && (l == e.index || l == e.index + 1))
        continue;
      int l2 = level_after(e, l);
      int r1 = row_of(l), r2 = row_of(l2);
      g.put(r1, x, '-');
      for (int r = std::min(r1, r2) + 1; r < std::max(r1, r2); ++r)
        g.put(r, x + 1, '|');
      if (r1 == r2) g.put(r1, x + 1, '-');
      g.put(r2, x + 2, '-');
    }
    int r = row_of(e.index);
    switch (e.kind) {
      case EventKind::Birth:
        g.put(r, x + 1, ',');
        g.put(r, x + 2, '-');
        g.put(r + 1, x, '(');
        g.put(r + 2, x + 1, '`');
        g.put(r + 2, x + 2, '-');
        break;
      case EventKind::Death:
        g.put(r, x, '-');
        g.put(r, x + 1, '.');
        g.put(r + 1, x + 2, ')');
        g.put(r + 2, x, '-');
        g.put(r + 2, x + 1, '\'');
        break;
      case EventKind::Crossing:
        g.put(r, x, '\\');
        g.put(r, x + 2, '/');
        g.put(r + 1, x + 1, 'X');
        g.put(r + 2, x, '/');
        g.put(r + 2, x + 2, '\\');
        break;
    }
    x += kCell;
  }
  return g.str();
}

std::string render_svg(const FrontDiagram& f) {
  constexpr int kStep = 36;   // x-advance per event
  constexpr int kCell = 24;   // width of the event column
  constexpr int kLevel = 24;  // y-distance between strand levels
  constexpr int kMargin = 12;
  auto y_of = [&](int level) { return kMargin + kLevel * level; };
  int width = kMargin * 2 + kStep * static_cast<int>(f.size()) + kCell;
  int height = kMargin * 2 + kLevel * (f.max_strands() + 1);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n"
      << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
         "stroke-linecap=\"round\">\n";
  auto line = [&](int x1, int y1, int x2, int y2) {
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
        << "\" y2=\"" << y2 << "\"/>\n";
  };
  int x = kMargin;
  int lead = kStep - kCell;  // horizontal run before each event column
  for (std::size_t t = 0; t <= f.size(); ++t) {
    int k = f.strands_before(t);
    for (int l = 1; l <= k; ++l) line(x, y_of(l), x + lead, y_of(l));
    x += lead;
    if (t == f.size()) break;
    const Event& e = f.events()[t];
    int x2 = x + kCell;
    for (int l = 1; l <= k; ++l) {
      if ((e.kind == EventKind::Death || e.kind == EventKind::Crossing) &&
          (l == e.index || l == e.index + 1))
        continue;
      line(x, y_of(l), x2, y_of(level_after(e, l)));
    }
    int yi = y_of(e.index), yj = y_of(e.index + 1);
    switch (e.kind) {
      case EventKind::Birth:
        out << "<path d=\"M " << x2 << " " << yi << " A " << kLevel / 2 << " "
            << kLevel / 2 << " 0 0 0 " << x2 << " " << yj << "\"/>\n";
        break;
      case EventKind::Death:
        out << "<path d=\"M " << x << " " << yi << " A " << kLevel / 2 << " "
            << kLevel / 2 << " 0 0 1 " << x << " " << yj << "\"/>\n";
        break;
      case EventKind::Crossing: {
        // Descending strand (upper-left to lower-right) unbroken; the
        // ascending strand is split around the crossing point.
        line(x, yi, x2, yj);
        int mx = (x + x2) / 2, my = (yi + yj) / 2;
        int dx = (x2 - x) / 6, dy = (yj - yi) / 6;
        line(x, yj, mx - dx, my + dy);
        line(mx + dx, my - dy, x2, yi);
        break;
      }
    }
    x = x2;
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

} // namespace legknot
