#pragma once

#include "legknot/front.hpp"
#include "legknot/rulings.hpp"

#include <random>
#include <vector>

namespace legknot::testutil {

// Random valid single-component front with at most `max_crossings`
// crossings.  Deterministic for a given generator state.
inline FrontDiagram random_front(std::mt19937_64& rng, int max_events = 26,
                                 int max_crossings = 14) {
  for (;;) {
    std::vector<Event> ev;
    int k = 0, crossings = 0;
    while (true) {
      if (k == 0) {
        if (!ev.empty()) break;
        ev.push_back(birth(1));
        k = 2;
        continue;
      }
      bool budget = static_cast<int>(ev.size()) < max_events;
      int kind = budget ? static_cast<int>(rng() % 6) : 0;
      if (kind <= 1 || k < 2) {  // death (forced once over budget)
        std::uniform_int_distribution<int> pick(1, k - 1);
        ev.push_back(death(pick(rng)));
        k -= 2;
      } else if (kind <= 3 && crossings < max_crossings && k >= 2) {
        std::uniform_int_distribution<int> pick(1, k - 1);
        ev.push_back(crossing(pick(rng)));
        ++crossings;
      } else if (k < 8) {
        std::uniform_int_distribution<int> pick(1, k + 1);
        ev.push_back(birth(pick(rng)));
        k += 2;
      }
    }
    FrontDiagram f(ev);
    if (component_count(f) == 1) return f;
  }
}

// Signature comparison robust to the rho-list depending on the crossing
// degrees present: counts are compared at every rho either side reports.
inline bool same_signature(const FrontDiagram& a, const FrontDiagram& b) {
  for (const auto& [rho, count] : ruling_signature(a).counts)
    if (count_rulings(b, rho) != count) return false;
  for (const auto& [rho, count] : ruling_signature(b).counts)
    if (count_rulings(a, rho) != count) return false;
  return true;
}

}  // namespace legknot::testutil
