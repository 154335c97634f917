#include "khtor/homology.hpp"

#include <bit>
#include <sstream>

#include "khtor/cube.hpp"

namespace khtor {

void Laurent::add(int exp, const Int& c) {
    if (c == 0) return;
    Int& slot = coeff[exp];
    slot += c;
    if (slot == 0) coeff.erase(exp);
}

std::string to_string(const Laurent& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.coeff) {
        if (!first) os << ' ';
        os << e << ':' << c;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

const IntegralCohomology::Group* IntegralCohomology::group(int r, int q) const {
    if (r < r_min || r > r_max) return nullptr;
    for (const auto& [qq, groups] : by_q)
        if (qq == q) return &groups[r - r_min];
    return nullptr;
}

bool IntegralCohomology::q_acyclic_over_q(int q) const {
    for (const auto& [qq, groups] : by_q)
        if (qq == q) {
            for (const auto& g : groups)
                if (g.free_rank != 0) return false;
            return true;
        }
    return true;  // no chain groups at all
}

IntegralCohomology integral_cohomology(const BasedCochainComplex& c) {
    IntegralCohomology h;
    h.r_min = c.r_min;
    h.r_max = c.r_max;
    const int window = c.r_max - c.r_min + 1;
    for (const auto& part : c.parts) {
        std::vector<IntegralCohomology::Group> groups(window);
        std::vector<int> ranks(window, 0);        // rank of the coboundary leaving degree i
        std::vector<SNFResult> forms(window - 1);
        for (int i = 0; i + 1 < window; ++i) {
            forms[i] = snf(part.diffs[i]);
            ranks[i] = forms[i].rank;
        }
        for (int i = 0; i < window; ++i) {
            const int dim = int(part.groups[i].size());
            const int out = (i + 1 < window) ? ranks[i] : 0;
            const int in = (i > 0) ? ranks[i - 1] : 0;
            groups[i].free_rank = dim - out - in;
            require(groups[i].free_rank >= 0, "integral_cohomology: negative rank");
            if (i > 0) groups[i].torsion = forms[i - 1].invariant_factors();
        }
        h.by_q.push_back({part.q, std::move(groups)});
    }
    return h;
}

Laurent KhovanovPolynomial::at_t_minus_one() const {
    Laurent p;
    for (const auto& [rq, rank] : coeff) {
        const auto& [r, q] = rq;
        p.add(q, (((r % 2) + 2) % 2 == 0) ? Int(rank) : Int(-rank));
    }
    return p;
}

KhovanovPolynomial khovanov_polynomial(const BasedCochainComplex& c) {
    KhovanovPolynomial kh;
    const int window = c.r_max - c.r_min + 1;
    for (const auto& part : c.parts) {
        for (int i = 0; i < window; ++i) {
            const int dim = int(part.groups[i].size());
            if (dim == 0) continue;
            const int out = (i + 1 < window) ? rank_q(part.diffs[i]) : 0;
            const int in = (i > 0) ? rank_q(part.diffs[i - 1]) : 0;
            const int rank = dim - out - in;
            if (rank != 0) kh.coeff[{c.r_min + i, part.q}] = rank;
        }
    }
    return kh;
}

Laurent kauffman_bracket_jones(const LinkDiagram& d) {
    const int n = d.n();
    Laurent sum;
    // binomial row per circle count: (q + 1/q)^k
    for (std::uint32_t a = 0; a < (std::uint32_t(1) << n); ++a) {
        ResolutionState s = resolve(d, a);
        const int h = s.height;
        const int base = h + d.n_plus - 2 * d.n_minus;
        const bool neg = ((h - d.n_minus) % 2 + 2) % 2 == 1;
        Int binom = 1;
        for (int i = 0; i <= s.num_circles; ++i) {
            sum.add(base + s.num_circles - 2 * i, neg ? -binom : binom);
            binom = binom * (s.num_circles - i) / (i + 1);
        }
    }
    return sum;
}

}  // namespace khtor
