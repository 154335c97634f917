#include "khtor/cube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace khtor {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ResolutionState resolve(const LinkDiagram& d, std::uint32_t alpha) {
    ResolutionState s;
    s.alpha = alpha;
    s.n = d.n();
    require(s.n < 31, "resolve: too many crossings");
    require(alpha < (std::uint32_t(1) << s.n) || s.n == 0, "resolve: alpha out of range");
    s.height = std::popcount(alpha);

    std::vector<int> labels = d.arc_labels();
    const int m = int(labels.size());
    std::map<int, int> idx;
    for (int i = 0; i < m; ++i) idx[labels[i]] = i;

    UnionFind uf(m);
    for (int i = 0; i < d.n(); ++i) {
        const auto& t = d.crossings[i].arcs;
        if ((alpha >> i) & 1u) {
            uf.unite(idx[t[0]], idx[t[3]]);
            uf.unite(idx[t[1]], idx[t[2]]);
        } else {
            uf.unite(idx[t[0]], idx[t[1]]);
            uf.unite(idx[t[2]], idx[t[3]]);
        }
    }

    // canonical order: circles sorted by minimal arc label
    std::map<int, int> root_min;
    for (int i = 0; i < m; ++i) {
        int r = uf.find(i);
        auto it = root_min.find(r);
        if (it == root_min.end() || labels[i] < it->second) root_min[r] = labels[i];
    }
    std::vector<std::pair<int, int>> order;  // (min label, root)
    for (const auto& [r, ml] : root_min) order.push_back({ml, r});
    std::sort(order.begin(), order.end());
    std::map<int, int> circle_idx;
    for (int c = 0; c < int(order.size()); ++c) {
        circle_idx[order[c].second] = c;
        s.min_arc.push_back(order[c].first);
    }
    for (int i = 0; i < m; ++i) s.circle_of[labels[i]] = circle_idx[uf.find(i)];
    s.num_circles = int(order.size()) + d.free_loops;
    for (int l = 0; l < d.free_loops; ++l) s.min_arc.push_back(0);
    return s;
}

CubeEdge classify_edge(const LinkDiagram& d, const ResolutionState& tail, const ResolutionState& head, int j) {
    CubeEdge e;
    e.tail = tail;
    e.head = head;
    e.changed_crossing = j;

    int below = 0;
    for (int i = 0; i < j; ++i) below += int((tail.alpha >> i) & 1u);
    e.sign = (below % 2 == 0) ? +1 : -1;

    const auto& t = d.crossings[j].arcs;
    // tail has the 0-smoothing at j: circles through (a,b) and (c,d)
    int ca = tail.circle_of_arc(t[0]);
    int cc = tail.circle_of_arc(t[2]);
    e.circle_map.assign(tail.num_circles, -1);
    for (const auto& [arc, c] : tail.circle_of) {
        if (e.circle_map[c] == -1) e.circle_map[c] = head.circle_of_arc(arc);
    }
    if (ca != cc) {
        e.is_merge = true;
        e.tail_a = ca;
        e.tail_b = cc;
        e.head_a = e.head_b = head.circle_of_arc(t[0]);
        require(head.circle_of_arc(t[2]) == e.head_a, "edge: merge endpoints disagree");
        require(head.num_circles == tail.num_circles - 1, "edge: merge must drop one circle");
    } else {
        e.is_merge = false;
        e.tail_a = e.tail_b = ca;
        // head has the 1-smoothing: (a,d) and (b,c)
        e.head_a = head.circle_of_arc(t[0]);
        e.head_b = head.circle_of_arc(t[1]);
        require(e.head_a != e.head_b, "edge: split endpoints coincide");
        require(head.num_circles == tail.num_circles + 1, "edge: split must add one circle");
        e.circle_map[ca] = -1;  // the splitting circle has no single image
    }
    return e;
}

CubeEdge edge(const LinkDiagram& d, std::uint32_t tail_alpha, int j) {
    if (j < 0 || j >= d.n()) throw input_error("edge: crossing index out of range");
    if ((tail_alpha >> j) & 1u) throw input_error("edge: bit already set at changed crossing");
    ResolutionState tail = resolve(d, tail_alpha);
    ResolutionState head = resolve(d, tail_alpha | (std::uint32_t(1) << j));
    return classify_edge(d, tail, head, j);
}

}  // namespace khtor
