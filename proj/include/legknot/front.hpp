#pragma once

// Legendrian front diagrams as words of Morse events on horizontal strand
// levels (level 1 is the topmost strand).  A diagram is valid when every
// event is legal at its position and the strand count returns to zero.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace legknot {

enum class EventKind { Birth, Death, Crossing };

struct Event {
  EventKind kind;
  int index;  // 1-based strand level
  bool operator==(const Event&) const = default;
};

inline Event birth(int i) { return {EventKind::Birth, i}; }
inline Event death(int i) { return {EventKind::Death, i}; }
inline Event crossing(int i) { return {EventKind::Crossing, i}; }

class FrontError : public std::runtime_error {
public:
  explicit FrontError(const std::string& msg) : std::runtime_error(msg) {}
};

class FrontDiagram {
public:
  FrontDiagram() = default;
  explicit FrontDiagram(std::vector<Event> events);  // throws FrontError

  // Text format: whitespace-separated tokens L<i> R<i> X<i>, '#' comments.
  static FrontDiagram parse(const std::string& text);
  std::string serialize() const;

  const std::vector<Event>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

  int births() const { return births_; }
  int deaths() const { return deaths_; }
  int crossings() const { return crossings_; }
  int cusps() const { return births_ + deaths_; }
  int max_strands() const { return max_strands_; }

  // Strand count in the gap before event `pos` (pos == size() gives 0).
  int strands_before(std::size_t pos) const;

private:
  std::vector<Event> events_;
  int births_ = 0, deaths_ = 0, crossings_ = 0, max_strands_ = 0;
};

// Global orientation choice: +1 keeps the canonical traversal (the first
// strand created by the first birth runs rightward), -1 reverses it.
struct Orientation {
  int sign = +1;
  Orientation reversed() const { return {-sign}; }
};

// Sweep-derived structure shared by the invariant computations: strand
// segments per (gap, level), their closed-curve components, the canonical
// traversal direction of each segment, and the arc decomposition obtained
// by cutting at cusps.
class FrontTrace {
public:
  explicit FrontTrace(const FrontDiagram& f);

  int component_count() const { return component_count_; }
  int segment_count() const { return static_cast<int>(left_.size()); }

  // Segment occupying `level` in the gap before event `gap` (gap ranges
  // over 0..size(); gaps 0 and size() are empty).
  int segment(std::size_t gap, int level) const;

  // +1 when the segment is traversed rightward under the canonical
  // orientation of its component.
  int direction(int seg) const { return dir_[seg]; }
  int component(int seg) const { return comp_[seg]; }

  int arc_count() const { return arc_count_; }
  int arc(int seg) const { return arc_[seg]; }
  int arc_at(std::size_t gap, int level) const { return arc_[segment(gap, level)]; }
  int base_arc() const { return base_arc_; }

  // Signed crossing data under the canonical orientation.  The over strand
  // is the one entering from the upper level (descending slope).
  int crossing_sign(std::size_t pos) const;
  int writhe() const;

  // Cusp traversal: +1 downward, -1 upward, under canonical orientation.
  int cusp_direction(std::size_t pos) const;
  int down_cusps() const { return down_cusps_; }
  int up_cusps() const { return up_cusps_; }

  const FrontDiagram& diagram() const { return *front_; }

private:
  const FrontDiagram* front_;
  std::vector<std::vector<int>> seg_at_;  // seg_at_[gap][level-1]
  struct Link {
    int other = -1;
    bool cusp = false;
  };
  std::vector<Link> left_, right_;
  std::vector<int> comp_, dir_, arc_;
  int component_count_ = 0, arc_count_ = 0, base_arc_ = -1;
  int down_cusps_ = 0, up_cusps_ = 0;
};

int component_count(const FrontDiagram& f);

// Thurston-Bennequin number: writhe minus right cusps.  Single component.
int tb(const FrontDiagram& f);

// Rotation number: (down cusps - up cusps)/2 under orientation o.
int rot(const FrontDiagram& f, Orientation o = {});

struct MaslovPotential {
  int modulus = 0;              // 2|rot|; 0 means integer-valued
  std::vector<int> arc_value;   // residue per arc id

  int value(int arc) const { return arc_value[arc]; }
  // Normalize an integer to a representative residue.
  int reduce(long long v) const {
    if (modulus == 0) return static_cast<int>(v);
    long long r = v % modulus;
    return static_cast<int>(r < 0 ? r + modulus : r);
  }
};

// Potential with value 0 on the base arc (the arc containing the first
// strand created by the first birth).  Single component only.
MaslovPotential maslov_potential(const FrontDiagram& f, Orientation o = {});

// Maslov degree of the crossing at event `pos`: value on the descending
// strand minus value on the ascending strand, as a residue.
int crossing_degree(const FrontDiagram& f, const FrontTrace& trace,
                    const MaslovPotential& pot, std::size_t pos);

// Degrees of every crossing event, indexed by event position (non-crossing
// positions hold 0).  Convenience for the ruling engine.
std::vector<int> crossing_degrees(const FrontDiagram& f, Orientation o = {});

}  // namespace legknot
