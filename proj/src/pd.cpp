#include "khtor/pd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace khtor {

PDCode parse_pd(const std::string& text) {
    PDCode pd;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_sep = [&] {
        while (i < n && (std::isspace((unsigned char)text[i]) || text[i] == ',' || text[i] == ';')) ++i;
    };
    skip_sep();
    size_t tail = (text.compare(i, 2, "U1") == 0) ? i + 2 : std::string::npos;
    while (tail != std::string::npos && tail < n && std::isspace((unsigned char)text[tail])) ++tail;
    if (tail == n) {
        pd.free_loops = 1;
        return pd;
    }
    while (i < n) {
        skip_sep();
        if (i >= n) break;
        if (text[i] != 'X') throw input_error("PD parse: expected 'X' at position " + std::to_string(i));
        ++i;
        if (i >= n || text[i] != '[') throw input_error("PD parse: expected '[' after X");
        ++i;
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            skip_sep();
            size_t start = i;
            while (i < n && std::isdigit((unsigned char)text[i])) ++i;
            if (i == start) throw input_error("PD parse: expected arc label");
            t[k] = std::stoi(text.substr(start, i - start));
            if (t[k] <= 0) throw input_error("PD parse: arc labels are positive integers");
        }
        skip_sep();
        if (i >= n || text[i] != ']') throw input_error("PD parse: expected ']'");
        ++i;
        pd.crossings.push_back(t);
        skip_sep();
    }
    if (pd.crossings.empty() && pd.free_loops == 0) throw input_error("PD parse: empty input");

    std::map<int, int> count;
    for (const auto& c : pd.crossings)
        for (int a : c) ++count[a];
    std::string bad;
    for (const auto& [label, cnt] : count)
        if (cnt != 2) bad += (bad.empty() ? "" : ",") + std::to_string(label);
    if (!bad.empty()) throw input_error("PD parse: labels not appearing exactly twice: " + bad);
    return pd;
}

std::string render_pd(const PDCode& pd) {
    if (pd.crossings.empty() && pd.free_loops == 1) return "U1";
    std::ostringstream os;
    for (size_t i = 0; i < pd.crossings.size(); ++i) {
        const auto& c = pd.crossings[i];
        if (i) os << ' ';
        os << "X[" << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ']';
    }
    return os.str();
}

std::vector<int> LinkDiagram::arc_labels() const {
    std::set<int> s;
    for (const auto& c : crossings)
        for (int a : c.arcs) s.insert(a);
    return {s.begin(), s.end()};
}

PDCode LinkDiagram::pd() const {
    PDCode p;
    p.free_loops = free_loops;
    for (const auto& c : crossings) p.crossings.push_back(c.arcs);
    return p;
}

namespace {

// Occurrence of an arc label at (crossing, tuple slot). Slots 0 and 2 are the
// under-strand (in/out fixed by convention); slots 1 and 3 are the over-strand
// whose direction is the unknown to solve for.
struct Occurrence {
    int crossing;
    int slot;
};

// over_flow[i] = +1 means the over-strand runs d->b at crossing i (right-
// handed), -1 means b->d. Returns whether slot is an incoming endpoint under
// a given flow.
bool slot_incoming(int slot, int flow) {
    switch (slot) {
        case 0: return true;   // under in
        case 2: return false;  // under out
        case 1: return flow < 0;
        default: return flow > 0;  // slot 3
    }
}

}  // namespace

LinkDiagram orient_and_sign(const PDCode& pd) {
    LinkDiagram d;
    d.free_loops = pd.free_loops;
    if (pd.crossings.empty()) {
        if (pd.free_loops == 0) throw input_error("orient_and_sign: empty diagram");
        return d;
    }

    const int n = int(pd.crossings.size());
    std::map<int, std::vector<Occurrence>> occ;
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 4; ++s) occ[pd.crossings[i][s]].push_back({i, s});
    for (const auto& [label, os] : occ)
        if (os.size() != 2)
            throw input_error("orient_and_sign: label " + std::to_string(label) + " not used exactly twice");

    // Propagate over-strand directions so every label is incoming exactly once
    // and outgoing exactly once. Constraints between two over-occurrences of
    // the same label relate the flows of their crossings.
    std::vector<int> flow(n, 0);
    auto set_flow = [&](int i, int f) {
        if (flow[i] == 0) {
            flow[i] = f;
            return true;
        }
        if (flow[i] != f) throw input_error("orient_and_sign: inconsistent orientation");
        return false;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& [label, os] : occ) {
            const auto& p = os[0];
            const auto& q = os[1];
            bool p_under = (p.slot % 2 == 0), q_under = (q.slot % 2 == 0);
            if (p_under && q_under) {
                if (p.slot == q.slot) throw input_error("orient_and_sign: inconsistent orientation");
                continue;
            }
            if (p_under != q_under) {
                const auto& under = p_under ? p : q;
                const auto& over = p_under ? q : p;
                bool under_in = (under.slot == 0);
                // the over occurrence must have the opposite direction
                int f = (over.slot == 1) ? (under_in ? +1 : -1) : (under_in ? -1 : +1);
                if (flow[over.crossing] == 0) {
                    set_flow(over.crossing, f);
                    progress = true;
                } else {
                    set_flow(over.crossing, f);
                }
                continue;
            }
            // both over: same slots force opposite flows, mixed slots equal flows
            if (p.crossing == q.crossing) continue;  // a clasp strand; no constraint
            int rel = (p.slot == q.slot) ? -1 : +1;
            if (flow[p.crossing] != 0 && flow[q.crossing] == 0) {
                set_flow(q.crossing, rel * flow[p.crossing]);
                progress = true;
            } else if (flow[q.crossing] != 0 && flow[p.crossing] == 0) {
                set_flow(p.crossing, rel * flow[q.crossing]);
                progress = true;
            } else if (flow[p.crossing] != 0 && flow[q.crossing] != 0) {
                if (flow[p.crossing] != rel * flow[q.crossing])
                    throw input_error("orient_and_sign: inconsistent orientation");
            }
        }
        if (!progress) {
            // Components that never pass under anchor nowhere; orient them by
            // label arithmetic the way the tables do (flow from u to u+1).
            for (int i = 0; i < n && !progress; ++i) {
                if (flow[i] != 0) continue;
                int b = pd.crossings[i][1], dd = pd.crossings[i][3];
                set_flow(i, (b == dd + 1 || dd > b + 1) ? +1 : -1);
                progress = true;
            }
        }
    }

    // Final consistency sweep: every label exactly one in and one out.
    for (const auto& [label, os] : occ) {
        int in = 0;
        for (const auto& o : os) in += slot_incoming(o.slot, flow[o.crossing]) ? 1 : 0;
        if (in != 1) throw input_error("orient_and_sign: inconsistent orientation");
    }

    for (int i = 0; i < n; ++i) {
        DiagramCrossing c;
        c.arcs = pd.crossings[i];
        c.sign = flow[i];  // over-strand d->b is exactly the right-handed case
        d.crossings.push_back(c);
        (c.sign > 0 ? d.n_plus : d.n_minus)++;
    }
    d.arc_count = int(occ.size());
    return d;
}

LinkDiagram r1_variant(const LinkDiagram& d, int arc, int kink_sign) {
    if (kink_sign != 1 && kink_sign != -1) throw input_error("r1_variant: kink_sign must be +-1");
    PDCode pd = d.pd();

    if (d.crossings.empty()) {
        if (d.free_loops != 1 || arc != 1) throw input_error("r1_variant: arc not present");
        pd.free_loops = 0;
        pd.crossings.push_back(kink_sign > 0 ? std::array<int, 4>{1, 1, 2, 2}
                                             : std::array<int, 4>{1, 2, 2, 1});
        return orient_and_sign(pd);
    }

    // Locate the single incoming occurrence of the arc and reroute it through
    // the kink: ... -> arc -> (kink) -> v -> old destination.
    int max_label = 0;
    for (const auto& c : d.crossings)
        for (int a : c.arcs) max_label = std::max(max_label, a);
    const int u = max_label + 1, v = max_label + 2;

    int ci = -1, cs = -1;
    for (int i = 0; i < d.n() && ci < 0; ++i) {
        const auto& c = d.crossings[i];
        if (c.arcs[0] == arc) {
            ci = i;
            cs = 0;
        } else if (c.arcs[c.sign > 0 ? 3 : 1] == arc) {
            ci = i;
            cs = c.sign > 0 ? 3 : 1;
        }
    }
    if (ci < 0) throw input_error("r1_variant: arc not present");
    pd.crossings[ci][cs] = v;
    pd.crossings.push_back(kink_sign > 0 ? std::array<int, 4>{arc, v, u, u}
                                         : std::array<int, 4>{arc, u, u, v});
    return orient_and_sign(pd);
}

}  // namespace khtor
