#pragma once

#include <array>
#include <string>
#include <vector>

#include "khtor/errors.hpp"

namespace khtor {

// Planar diagram code: one 4-tuple of arc labels per crossing, read
// counterclockwise starting from the incoming under-strand. The textual order
// of the tuples is the crossing order used everywhere downstream.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    int free_loops = 0;  // crossingless unknot components (the "U1" sentinel)

    bool operator==(const PDCode&) const = default;
};

// "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", or "U1" for the 0-crossing unknot.
PDCode parse_pd(const std::string& text);
std::string render_pd(const PDCode& pd);

struct DiagramCrossing {
    std::array<int, 4> arcs;  // counterclockwise from the incoming under-strand
    int sign;                 // +1 right-handed, -1 left-handed
};

struct LinkDiagram {
    std::vector<DiagramCrossing> crossings;
    int n_plus = 0;
    int n_minus = 0;
    int arc_count = 0;  // number of distinct edge labels
    int free_loops = 0;

    int n() const { return int(crossings.size()); }
    int writhe() const { return n_plus - n_minus; }
    std::vector<int> arc_labels() const;  // sorted distinct labels
    PDCode pd() const;
};

// Traces arc orientations through the diagram and derives each crossing's
// handedness. A right-handed (+1) crossing is one whose over-strand runs from
// the d position to the b position of the tuple. Throws input_error when no
// consistent orientation exists.
LinkDiagram orient_and_sign(const PDCode& pd);

// Bundled diagram table (Rolfsen-style knot names, Thistlethwaite-style link
// names, plus a few aliases and move-variant diagrams used by the tests).
PDCode builtin_table(const std::string& name);
std::vector<std::string> builtin_names();

// Inserts a Reidemeister-I kink on the given arc. New arcs get fresh labels
// above the current maximum; the new crossing is appended to the order.
LinkDiagram r1_variant(const LinkDiagram& d, int arc, int kink_sign);

}  // namespace khtor
