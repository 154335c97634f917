#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "khtor/pd.hpp"

namespace khtor {

// A vertex of the resolution cube. Bit i of alpha is the smoothing chosen at
// crossing i: the 0-smoothing joins tuple positions (a,b) and (c,d), the
// 1-smoothing joins (a,d) and (b,c). Circles are numbered canonically by
// their minimal arc label.
struct ResolutionState {
    std::uint32_t alpha = 0;
    int n = 0;
    int height = 0;                 // popcount of alpha
    int num_circles = 0;            // k
    std::map<int, int> circle_of;   // arc label -> canonical circle index
    std::vector<int> min_arc;       // circle index -> its minimal arc label

    int circle_of_arc(int arc) const { return circle_of.at(arc); }
};

ResolutionState resolve(const LinkDiagram& d, std::uint32_t alpha);

// One edge of the cube: the tail's bit at the changed crossing flips 0 -> 1,
// merging two circles into one or splitting one in two.
struct CubeEdge {
    ResolutionState tail, head;
    int changed_crossing = 0;
    bool is_merge = false;
    int tail_a = -1, tail_b = -1;  // merge inputs; for a split both equal the splitting circle
    int head_a = -1, head_b = -1;  // split outputs; for a merge both equal the merged circle
    int sign = 0;                  // (-1)^(number of 1-bits below the changed crossing)

    // tail circle -> head circle; -1 at the splitting circle
    std::vector<int> circle_map;
};

CubeEdge edge(const LinkDiagram& d, std::uint32_t tail_alpha, int j);

// Classification reusing already-resolved endpoint states (the complex
// builder resolves each vertex once and classifies all edges from the cache).
CubeEdge classify_edge(const LinkDiagram& d, const ResolutionState& tail, const ResolutionState& head, int j);

}  // namespace khtor
