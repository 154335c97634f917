#include "khtor/complex.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

namespace khtor {

std::optional<Label> apply_m(Label a, Label b) {
    if (a == Label::x && b == Label::x) return std::nullopt;
    if (a == Label::x || b == Label::x) return Label::x;
    return Label::one;
}

std::vector<std::pair<Label, Label>> apply_delta(Label a) {
    if (a == Label::x) return {{Label::x, Label::x}};
    return {{Label::one, Label::x}, {Label::x, Label::one}};
}

std::vector<std::uint32_t> distinguished_basis(const ResolutionState& state) {
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t(1) << state.num_circles);
    for (std::uint32_t t = 0; t < (std::uint32_t(1) << state.num_circles); ++t) out.push_back(t);
    return out;
}

const BasedCochainComplex::QPart* BasedCochainComplex::part(int q) const {
    for (const auto& p : parts)
        if (p.q == q) return &p;
    return nullptr;
}

std::vector<int> BasedCochainComplex::q_degrees() const {
    std::vector<int> qs;
    for (const auto& p : parts) qs.push_back(p.q);
    return qs;
}

int BasedCochainComplex::dim(int r, int q) const {
    const QPart* p = part(q);
    if (!p || r < r_min || r > r_max) return 0;
    return int(p->groups[r - r_min].size());
}

namespace {

// Vertices within a height sorted lexicographically as bit strings with
// crossing 0 first.
bool lex_less(std::uint32_t a, std::uint32_t b, int n) {
    for (int i = 0; i < n; ++i) {
        unsigned x = (a >> i) & 1u, y = (b >> i) & 1u;
        if (x != y) return x < y;
    }
    return false;
}

}  // namespace

BasedCochainComplex build_complex(const LinkDiagram& d) {
    const int n = d.n();
    require(n <= 24, "build_complex: diagram too large");

    BasedCochainComplex c;
    c.n_plus = d.n_plus;
    c.n_minus = d.n_minus;
    c.r_min = -d.n_minus;
    c.r_max = d.n_plus;
    const int window = c.r_max - c.r_min + 1;

    std::vector<ResolutionState> states(std::size_t(1) << n);
    for (std::uint32_t a = 0; a < (std::uint32_t(1) << n); ++a) states[a] = resolve(d, a);

    std::vector<std::vector<std::uint32_t>> verts_at(n + 1);
    for (std::uint32_t a = 0; a < (std::uint32_t(1) << n); ++a) verts_at[states[a].height].push_back(a);
    for (auto& vs : verts_at)
        std::sort(vs.begin(), vs.end(), [&](std::uint32_t a, std::uint32_t b) { return lex_less(a, b, n); });

    const int shift = d.n_plus - 2 * d.n_minus;

    // Distribute basis elements into q parts, preserving the global order.
    std::map<int, BasedCochainComplex::QPart, std::greater<int>> parts;
    // (vertex, labels) -> position within its (r, q) block
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> pos;

    for (int h = 0; h <= n; ++h) {
        for (std::uint32_t a : verts_at[h]) {
            const ResolutionState& s = states[a];
            for (std::uint32_t t : distinguished_basis(s)) {
                GradedBasisElement e;
                e.vertex = a;
                e.labels = t;
                e.k = s.num_circles;
                e.r = h - d.n_minus;
                e.q = (s.num_circles - 2 * std::popcount(t)) + h + shift;
                auto& part = parts[e.q];
                if (part.groups.empty()) {
                    part.q = e.q;
                    part.groups.resize(window);
                }
                auto& grp = part.groups[e.r - c.r_min];
                pos[{a, t}] = int(grp.size());
                grp.push_back(e);
            }
        }
    }

    for (auto& [q, part] : parts) {
        part.diffs.resize(window - 1);
        for (int i = 0; i + 1 < window; ++i)
            part.diffs[i] = IntMatrix(int(part.groups[i + 1].size()), int(part.groups[i].size()));
    }

    // Sum the signed edge maps into the coboundaries.
    for (std::uint32_t a = 0; a < (std::uint32_t(1) << n); ++a) {
        const ResolutionState& tail = states[a];
        for (int j = 0; j < n; ++j) {
            if ((a >> j) & 1u) continue;
            const std::uint32_t b = a | (std::uint32_t(1) << j);
            CubeEdge e = classify_edge(d, tail, states[b], j);
            const int i = tail.height - d.n_minus - c.r_min;  // window index of the tail degree

            for (std::uint32_t t = 0; t < (std::uint32_t(1) << tail.num_circles); ++t) {
                // image label masks on the head vertex
                std::vector<std::uint32_t> images;
                if (e.is_merge) {
                    auto prod = apply_m(((t >> e.tail_a) & 1u) ? Label::x : Label::one,
                                        ((t >> e.tail_b) & 1u) ? Label::x : Label::one);
                    if (prod) {
                        std::uint32_t out = 0;
                        for (int tc = 0; tc < tail.num_circles; ++tc) {
                            if (tc == e.tail_a || tc == e.tail_b) continue;
                            if ((t >> tc) & 1u) out |= std::uint32_t(1) << e.circle_map[tc];
                        }
                        if (*prod == Label::x) out |= std::uint32_t(1) << e.head_a;
                        images.push_back(out);
                    }
                } else {
                    std::uint32_t spect = 0;
                    for (int tc = 0; tc < tail.num_circles; ++tc) {
                        if (tc == e.tail_a) continue;
                        if ((t >> tc) & 1u) spect |= std::uint32_t(1) << e.circle_map[tc];
                    }
                    for (auto [la, lb] : apply_delta(((t >> e.tail_a) & 1u) ? Label::x : Label::one)) {
                        std::uint32_t out = spect;
                        if (la == Label::x) out |= std::uint32_t(1) << e.head_a;
                        if (lb == Label::x) out |= std::uint32_t(1) << e.head_b;
                        images.push_back(out);
                    }
                }

                const int q = (tail.num_circles - 2 * std::popcount(t)) + tail.height + shift;
                auto& part = parts.at(q);
                IntMatrix& mat = part.diffs[i];
                const int col = pos.at({a, t});
                const ResolutionState& head = states[b];
                for (std::uint32_t out : images) {
                    const int qh = (head.num_circles - 2 * std::popcount(out)) + head.height + shift;
                    require(qh == q, "build_complex: differential does not preserve q");
                    mat.at(pos.at({b, out}), col) += e.sign;
                }
            }
        }
    }

    for (auto& [q, part] : parts) c.parts.push_back(std::move(part));

    // d^2 = 0, exactly, on every q part
    for (const auto& part : c.parts)
        for (int i = 0; i + 2 < window; ++i)
            require(mul(part.diffs[i + 1], part.diffs[i]).is_zero(), "build_complex: d^2 != 0");

    return c;
}

std::map<std::pair<int, int>, int> graded_dims(const BasedCochainComplex& c) {
    std::map<std::pair<int, int>, int> dims;
    for (const auto& p : c.parts)
        for (int i = 0; i < int(p.groups.size()); ++i)
            if (!p.groups[i].empty()) dims[{c.r_min + i, p.q}] = int(p.groups[i].size());
    return dims;
}

void dump_blocks(const BasedCochainComplex& c, std::ostream& os) {
    for (const auto& p : c.parts)
        for (int i = 0; i + 1 < int(p.groups.size()); ++i) {
            const IntMatrix& m = p.diffs[i];
            if (m.rows() == 0 && m.cols() == 0) continue;
            os << c.r_min + i << ' ' << p.q << ' ' << m.rows() << ' ' << m.cols() << '\n';
            for (int r = 0; r < m.rows(); ++r) {
                for (int cix = 0; cix < m.cols(); ++cix) {
                    if (cix) os << ' ';
                    os << m.at(r, cix);
                }
                os << '\n';
            }
        }
}

}  // namespace khtor
