#include "legknot/rulings.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace legknot {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw FrontError(msg); }

void require_single_component(const FrontDiagram& f) {
  if (component_count(f) != 1) fail("rulings: front must have exactly one component");
}

// Does the grading rho admit a switch at a crossing of the given degree?
// The degree is an integer when modulus == 0 and a residue otherwise.
bool degree_admits(int degree, int modulus, int rho) {
  if (rho == 1) return true;
  if (rho == 0) return degree == 0;
  long long d = degree % rho;
  (void)modulus;
  return d == 0;
}

// Pairing on 0-based levels; p[l] is the partner of level l.
using Pairing = std::vector<int>;

bool apply_birth(Pairing& p, int i1) {
  int at = i1 - 1;
  for (int& q : p)
    if (q >= at) q += 2;
  p.insert(p.begin() + at, {at + 1, at});
  return true;
}

bool apply_death(Pairing& p, int i1) {
  int at = i1 - 1;
  if (p[at] != at + 1) return false;
  p.erase(p.begin() + at, p.begin() + at + 2);
  for (int& q : p)
    if (q > at) q -= 2;
  return true;
}

// The crossing strands pass through each other: conjugate by (i, i+1).
bool apply_pass(Pairing& p, int i1) {
  int at = i1 - 1;
  if (p[at] == at + 1) return false;
  std::swap(p[at], p[at + 1]);
  for (int& q : p) {
    if (q == at) q = at + 1;
    else if (q == at + 1) q = at;
  }
  return true;
}

// Keep the pairing; the crossing strands each turn back.  Normality: with
// a = partner of the upper strand and b = partner of the lower one, the
// two ruling disks must be nested or disjoint, not interleaved.
bool switch_allowed(const Pairing& p, int i1) {
  int at = i1 - 1;
  int a = p[at], b = p[at + 1];
  if (a == at + 1) return false;
  return (b < a && a < at) || (a < at && b > at + 1) || (at + 1 < b && b < a);
}

std::vector<int> to_one_based(const Pairing& p) {
  std::vector<int> out(p.size());
  for (std::size_t l = 0; l < p.size(); ++l) out[l] = p[l] + 1;
  return out;
}

}  // namespace

std::vector<Ruling> enumerate_rulings(const FrontDiagram& f, int rho) {
  require_single_component(f);
  std::vector<int> degrees;
  int modulus = 0;
  if (rho != 1) {
    degrees = crossing_degrees(f);
    modulus = maslov_potential(f).modulus;
  }

  std::vector<Ruling> out;
  std::vector<std::size_t> switches;
  std::vector<std::vector<int>> trace;

  auto rec = [&](auto&& self, std::size_t t, Pairing p) -> void {
    if (t == f.size()) {
      out.push_back({switches, trace});
      return;
    }
    const Event& e = f.events()[t];
    switch (e.kind) {
      case EventKind::Birth: {
        apply_birth(p, e.index);
        trace.push_back(to_one_based(p));
        self(self, t + 1, std::move(p));
        trace.pop_back();
        break;
      }
      case EventKind::Death: {
        if (!apply_death(p, e.index)) return;
        trace.push_back(to_one_based(p));
        self(self, t + 1, std::move(p));
        trace.pop_back();
        break;
      }
      case EventKind::Crossing: {
        Pairing passed = p;
        if (apply_pass(passed, e.index)) {
          trace.push_back(to_one_based(passed));
          self(self, t + 1, std::move(passed));
          trace.pop_back();
        }
        bool graded_ok = rho == 1 || degree_admits(degrees[t], modulus, rho);
        if (graded_ok && switch_allowed(p, e.index)) {
          switches.push_back(t);
          trace.push_back(to_one_based(p));
          self(self, t + 1, std::move(p));
          trace.pop_back();
          switches.pop_back();
        }
        break;
      }
    }
  };
  rec(rec, 0, {});

  std::sort(out.begin(), out.end(),
            [](const Ruling& a, const Ruling& b) { return a.switches < b.switches; });
  return out;
}

long long count_rulings(const FrontDiagram& f, int rho) {
  require_single_component(f);
  std::vector<int> degrees;
  int modulus = 0;
  if (rho != 1) {
    degrees = crossing_degrees(f);
    modulus = maslov_potential(f).modulus;
  }

  std::map<Pairing, long long> states;
  states[{}] = 1;
  for (std::size_t t = 0; t < f.size(); ++t) {
    const Event& e = f.events()[t];
    std::map<Pairing, long long> next;
    for (auto& [p, w] : states) {
      switch (e.kind) {
        case EventKind::Birth: {
          Pairing q = p;
          apply_birth(q, e.index);
          next[std::move(q)] += w;
          break;
        }
        case EventKind::Death: {
          Pairing q = p;
          if (apply_death(q, e.index)) next[std::move(q)] += w;
          break;
        }
        case EventKind::Crossing: {
          Pairing q = p;
          if (apply_pass(q, e.index)) next[std::move(q)] += w;
          bool graded_ok = rho == 1 || degree_admits(degrees[t], modulus, rho);
          if (graded_ok && switch_allowed(p, e.index)) next[p] += w;
          break;
        }
      }
    }
    states = std::move(next);
  }
  auto it = states.find(Pairing{});
  return it == states.end() ? 0 : it->second;
}

long long brute_force_rulings(const FrontDiagram& f, int rho) {
  require_single_component(f);
  if (f.crossings() > 24) fail("brute_force_rulings: more than 24 crossings");
  std::vector<int> degrees;
  int modulus = 0;
  if (rho != 1) {
    degrees = crossing_degrees(f);
    modulus = maslov_potential(f).modulus;
  }

  long long total = 0;
  const std::uint32_t masks = 1u << f.crossings();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    Pairing p;
    int c = 0;
    bool ok = true;
    for (std::size_t t = 0; t < f.size() && ok; ++t) {
      const Event& e = f.events()[t];
      switch (e.kind) {
        case EventKind::Birth:
          apply_birth(p, e.index);
          break;
        case EventKind::Death:
          ok = apply_death(p, e.index);
          break;
        case EventKind::Crossing: {
          bool sw = (mask >> c) & 1u;
          ++c;
          if (sw) {
            ok = switch_allowed(p, e.index) &&
                 (rho == 1 || degree_admits(degrees[t], modulus, rho));
          } else {
            ok = apply_pass(p, e.index);
          }
          break;
        }
      }
    }
    if (ok && p.empty()) ++total;
  }
  return total;
}

RulingSignature ruling_signature(const FrontDiagram& f) {
  require_single_component(f);
  int r = std::abs(rot(f));
  std::set<int> rhos = {0, 1};
  if (r != 0) {
    for (int d = 1; d <= 2 * r; ++d)
      if ((2 * r) % d == 0) rhos.insert(d);
  } else {
    for (int deg : crossing_degrees(f)) {
      int a = std::abs(deg);
      for (int d = 1; d <= a; ++d)
        if (a % d == 0) rhos.insert(d);
    }
  }
  RulingSignature sig;
  for (int rho : rhos) sig.counts[rho] = count_rulings(f, rho);
  return sig;
}

}  // namespace legknot
