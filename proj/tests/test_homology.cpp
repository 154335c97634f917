#include "khtor/homology.hpp"

#include <doctest.h>

#include "khtor/report.hpp"

using namespace khtor;

namespace {
LinkDiagram hopf() { return orient_and_sign(parse_pd("X[4,1,3,2] X[2,3,1,4]")); }
LinkDiagram trefoil() { return orient_and_sign(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")); }

std::vector<Int> all_torsion_at_q(const IntegralCohomology& h, int q) {
    std::vector<Int> out;
    for (const auto& [qq, groups] : h.by_q)
        if (qq == q)
            for (const auto& g : groups) out.insert(out.end(), g.torsion.begin(), g.torsion.end());
    return out;
}
}  // namespace

TEST_CASE("unknot cohomology") {
    IntegralCohomology h = integral_cohomology(build_complex(orient_and_sign(parse_pd("U1"))));
    REQUIRE(h.group(0, 1) != nullptr);
    CHECK(h.group(0, 1)->free_rank == 1);
    CHECK(h.group(0, -1)->free_rank == 1);
    for (const auto& [q, groups] : h.by_q)
        for (const auto& g : groups) CHECK(g.torsion.empty());
}

TEST_CASE("trefoil integral cohomology table") {
    IntegralCohomology h = integral_cohomology(build_complex(trefoil()));

    CHECK(h.group(0, -1)->free_rank == 1);
    CHECK(h.group(0, -3)->free_rank == 1);
    CHECK(h.group(-2, -5)->free_rank == 1);

    // per-q summary: Z, Z, Z, Z_2, Z at q = -1,-3,-5,-7,-9
    auto rank_at_q = [&](int q) {
        int rank = 0;
        for (const auto& [qq, groups] : h.by_q)
            if (qq == q)
                for (const auto& g : groups) rank += g.free_rank;
        return rank;
    };
    CHECK(rank_at_q(-1) == 1);
    CHECK(rank_at_q(-3) == 1);
    CHECK(rank_at_q(-5) == 1);
    CHECK(rank_at_q(-7) == 0);
    CHECK(rank_at_q(-9) == 1);
    CHECK(all_torsion_at_q(h, -7) == std::vector<Int>{2});
    CHECK(all_torsion_at_q(h, -1).empty());
    CHECK(all_torsion_at_q(h, -9).empty());

    CHECK(h.q_acyclic_over_q(-7));
    CHECK(!h.q_acyclic_over_q(-1));
}

TEST_CASE("hopf cohomology: free ranks in degrees -2, -1, 0") {
    IntegralCohomology h = integral_cohomology(build_complex(hopf()));
    CHECK(h.group(0, 0)->free_rank == 1);
    CHECK(h.group(0, -2)->free_rank == 1);
    CHECK(h.group(-2, -4)->free_rank == 1);
    CHECK(h.group(-2, -6)->free_rank == 1);
    int total = 0;
    for (const auto& [q, groups] : h.by_q)
        for (const auto& g : groups) {
            total += g.free_rank;
            CHECK(g.torsion.empty());
        }
    CHECK(total == 4);
    // none of the four subcomplexes is acyclic
    for (int q : {0, -2, -4, -6}) CHECK(!h.q_acyclic_over_q(q));
}

TEST_CASE("Jones polynomial: unknot and trefoil") {
    Laurent u = kauffman_bracket_jones(orient_and_sign(parse_pd("U1")));
    Laurent expected;
    expected.add(1, 1);
    expected.add(-1, 1);
    CHECK(u == expected);

    // left trefoil, unnormalized: q^-1 + q^-3 + q^-5 - q^-9
    Laurent t = kauffman_bracket_jones(trefoil());
    Laurent t_expected;
    t_expected.add(-1, 1);
    t_expected.add(-3, 1);
    t_expected.add(-5, 1);
    t_expected.add(-9, -1);
    CHECK(t == t_expected);
}

TEST_CASE("state sum equals graded cohomology at t = -1") {
    for (LinkDiagram d : {hopf(), trefoil(), orient_and_sign(parse_pd("X[1,1,2,2]"))}) {
        BasedCochainComplex c = build_complex(d);
        CHECK(khovanov_polynomial(c).at_t_minus_one() == kauffman_bracket_jones(d));
    }
}

TEST_CASE("graded Euler characteristic at the chain level") {
    for (LinkDiagram d : {hopf(), trefoil()}) {
        BasedCochainComplex c = build_complex(d);
        Laurent chain;
        for (const auto& [rq, dim] : graded_dims(c)) {
            const auto& [r, q] = rq;
            chain.add(q, (((r % 2) + 2) % 2 == 0) ? Int(dim) : Int(-dim));
        }
        CHECK(chain == khovanov_polynomial(c).at_t_minus_one());
    }
}

TEST_CASE("free rank equals rank of H(Z)/torsion at every (r,q)") {
    for (LinkDiagram d : {hopf(), trefoil()}) {
        BasedCochainComplex c = build_complex(d);
        IntegralCohomology h = integral_cohomology(c);
        KhovanovPolynomial kh = khovanov_polynomial(c);
        for (const auto& [q, groups] : h.by_q)
            for (int i = 0; i < int(groups.size()); ++i) {
                auto it = kh.coeff.find({h.r_min + i, q});
                int rational = (it == kh.coeff.end()) ? 0 : it->second;
                CHECK(groups[i].free_rank == rational);
            }
    }
}

TEST_CASE("laurent serialization") {
    Laurent p;
    p.add(-9, -1);
    p.add(-1, 1);
    CHECK(to_string(p) == "-9:-1 -1:1");
    CHECK(to_string(Laurent{}) == "0");
}
