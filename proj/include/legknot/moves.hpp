#pragma once

#include "legknot/front.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace legknot {

// Local rewrites on event words.  Each move names a position in the word
// (and, where needed, a strand level and a pattern variant) and rewrites a
// small window of events.  Isotopy moves preserve tb, rot and the ruling
// signature; stabilizations trade tb for rot.
enum class MoveKind {
    Commute,            // swap two events with disjoint supports
    CuspSlide,          // slide a cusp past an adjacent crossing (RII)
    TriplePoint,        // braid relation on three crossings (RIII)
    KinkBirth,          // insert a cusp pair + crossing (RI, tb-neutral)
    KinkDeath,          // remove such a kink
    Rotate180,          // rotate the whole front by 180 degrees
    ReverseOrientation, // flip the traversal orientation (front unchanged)
    StabilizePlus,      // insert a zigzag, rot += 1, tb -= 1
    StabilizeMinus,     // insert a zigzag, rot -= 1, tb -= 1
};

struct Move {
    MoveKind kind = MoveKind::Commute;
    // First event position of the affected window; for KinkBirth and the
    // stabilizations this is the gap (0..size) where new events are inserted.
    std::size_t pos = 0;
    // Strand level parameter for KinkBirth and the stabilizations.
    int level = 0;
    // Pattern variant where a kind has several local shapes (see moves.cpp).
    int variant = 0;
};

std::string move_name(MoveKind kind);

// Every returned move applies cleanly and yields a valid front.
std::vector<Move> applicable_moves(const FrontDiagram &f);

// Throws FrontError if the move does not apply to f.
FrontDiagram apply_move(const FrontDiagram &f, const Move &mv);

// Rotating the plane by 180 degrees: events reversed, births and deaths
// exchanged, levels reflected.  An involution on event words.
FrontDiagram rotate180(const FrontDiagram &f);

// Applies `steps` uniformly chosen isotopy moves (no stabilizations,
// no rotation / orientation moves).  Deterministic for a given seed.
FrontDiagram random_move_walk(const FrontDiagram &f, int steps, std::uint64_t seed);

} // namespace legknot
