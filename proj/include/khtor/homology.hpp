#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khtor/complex.hpp"

namespace khtor {

// Integer Laurent polynomial in q.
struct Laurent {
    std::map<int, Int> coeff;  // exponent -> nonzero coefficient

    void add(int exp, const Int& c);
    bool operator==(const Laurent&) const = default;
};

// "exponent:coefficient" pairs, ascending exponent.
std::string to_string(const Laurent& p);

// Free rank and invariant factors of H^{r,q}(Z).
struct IntegralCohomology {
    struct Group {
        int free_rank = 0;
        std::vector<Int> torsion;  // invariant factors > 1
        bool trivial() const { return free_rank == 0 && torsion.empty(); }
    };

    int r_min = 0, r_max = 0;
    // decreasing q; groups indexed by r - r_min over the full window
    std::vector<std::pair<int, std::vector<Group>>> by_q;

    const Group* group(int r, int q) const;
    bool q_acyclic_over_q(int q) const;  // all free ranks vanish at this q
};

IntegralCohomology integral_cohomology(const BasedCochainComplex& c);

// Graded dimensions of rational cohomology: coefficient of t^r q^j.
struct KhovanovPolynomial {
    std::map<std::pair<int, int>, int> coeff;  // (r, q) -> rank

    Laurent at_t_minus_one() const;
};

KhovanovPolynomial khovanov_polynomial(const BasedCochainComplex& c);

// Independent state-sum oracle: sum over all resolutions of
// (-1)^(|a| - n_minus) q^(|a| + n_plus - 2 n_minus) (q + 1/q)^(circles).
Laurent kauffman_bracket_jones(const LinkDiagram& d);

}  // namespace khtor
