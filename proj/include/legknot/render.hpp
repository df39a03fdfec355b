#pragma once

#include "legknot/front.hpp"

#include <string>

namespace legknot {

// Deterministic schematic of the front: events at equal x-spacing, strand
// levels on fixed rows, cusp glyphs at births/deaths, X at crossings.
std::string render_ascii(const FrontDiagram& f);

// Deterministic SVG: strands as polyline segments, cusps as semicircular
// turns, crossings drawn with the descending (over) strand unbroken.
std::string render_svg(const FrontDiagram& f);

} // namespace legknot
