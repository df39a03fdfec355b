#pragma once

// Normal rulings of a front: decompositions of the diagram into pairs of
// paths joining left cusps to right cusps, encoded as a pairing (fixed
// point free involution) on strand levels that is swept across the front.
// At each crossing the pairing either follows the strands (the crossing
// strands pass through each other) or is switched; switches are subject
// to a normality condition and, for graded rulings, a degree condition.

#include <cstdint>
#include <map>
#include <vector>

#include "legknot/front.hpp"

namespace legknot {

struct Ruling {
  // Event positions of the switched crossings, increasing.
  std::vector<std::size_t> switches;
  // Pairing after each event: trace[t][l] is the 1-based partner level of
  // level l+1 in the gap following event t.
  std::vector<std::vector<int>> trace;
};

struct RulingSignature {
  std::map<int, long long> counts;  // grading rho -> number of rulings
};

// All rulings of f whose switches sit at crossings of degree divisible by
// rho (rho = 1 admits every crossing; rho = 0 demands degree exactly zero).
// Sorted lexicographically by switch set.
std::vector<Ruling> enumerate_rulings(const FrontDiagram& f, int rho);

// Number of rho-graded rulings, computed by a sweep that merges branches
// with identical pairings (no per-ruling data is kept).
long long count_rulings(const FrontDiagram& f, int rho);

// Independent check: tries every subset of crossings as a switch set and
// replays the sweep from scratch.  Refuses fronts with more than 24
// crossings.
long long brute_force_rulings(const FrontDiagram& f, int rho);

// Ruling counts for the standard gradings: rho in {0, 1} together with the
// positive divisors of 2|rot|.  When rot = 0 every positive integer
// divides 2 rot, so the list is cut down to the divisors of the nonzero
// crossing degrees actually present in the front.
RulingSignature ruling_signature(const FrontDiagram& f);

}  // namespace legknot
