#include "khtor/exact.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"

using namespace khtor;
using khtest::cofactor_det;
using khtest::minor_gcd_diagonal;
using khtest::random_int_matrix;

namespace {

IntMatrix from_rows(std::vector<std::vector<int>> rows) {
    int m = int(rows.size());
    int n = m ? int(rows[0].size()) : 0;
    IntMatrix a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = rows[i][j];
    return a;
}

void check_snf_invariants(const IntMatrix& a, const SNFResult& s) {
    CHECK(mul(mul(s.u, a), s.v) == s.d);
    CHECK(abs(cofactor_det(s.u)) == 1);
    CHECK(abs(cofactor_det(s.v)) == 1);
    CHECK(mul(s.u, s.u_inv) == IntMatrix::identity(a.rows()));
    CHECK(mul(s.v, s.v_inv) == IntMatrix::identity(a.cols()));
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    for (int t = 0; t < s.rank; ++t) {
        CHECK(s.d.at(t, t) > 0);
        if (t + 1 < s.rank) CHECK(s.d.at(t + 1, t + 1) % s.d.at(t, t) == 0);
    }
    for (int t = s.rank; t < std::min(s.d.rows(), s.d.cols()); ++t) CHECK(s.d.at(t, t) == 0);
}

}  // namespace

TEST_CASE("snf of diag(2,3) has invariant factors 1,6") {
    // Oracle first: gcd of entries is 1, gcd of 2x2 minors is 6.
    IntMatrix a = from_rows({{2, 0}, {0, 3}});
    auto oracle = minor_gcd_diagonal(a);
    REQUIRE(oracle.size() == 2);
    CHECK(oracle[0] == 1);
    CHECK(oracle[1] == 6);

    SNFResult s = snf(a);
    check_snf_invariants(a, s);
    REQUIRE(s.rank == 2);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
}

TEST_CASE("snf trivial cases") {
    SNFResult s = snf(IntMatrix::identity(3));
    check_snf_invariants(IntMatrix::identity(3), s);
    CHECK(s.rank == 3);
    for (int i = 0; i < 3; ++i) CHECK(s.d.at(i, i) == 1);

    IntMatrix one = from_rows({{2}});
    s = snf(one);
    CHECK(s.rank == 1);
    CHECK(s.d.at(0, 0) == 2);

    s = snf(IntMatrix(0, 0));
    CHECK(s.rank == 0);
    s = snf(IntMatrix(0, 3));
    CHECK(s.rank == 0);
    CHECK(s.v.rows() == 3);
}

TEST_CASE("snf matches minor-gcd oracle on random matrices") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 60; ++it) {
        int m = 1 + int(rng() % 4), n = 1 + int(rng() % 4);
        IntMatrix a = random_int_matrix(rng, m, n, -6, 6);
        SNFResult s = snf(a);
        check_snf_invariants(a, s);
        auto oracle = minor_gcd_diagonal(a);
        REQUIRE(int(oracle.size()) == s.rank);
        for (int t = 0; t < s.rank; ++t) CHECK(s.d.at(t, t) == oracle[t]);
    }
}

TEST_CASE("kernel_lattice basics") {
    auto k = kernel_lattice(IntMatrix(1, 2));  // zero map
    REQUIRE(k.size() == 2);
    IntMatrix km = IntMatrix::from_columns(k, 2);
    CHECK(abs(cofactor_det(km)) == 1);  // spans all of Z^2

    k = kernel_lattice(from_rows({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(((k[0] == IntVec{1, -1}) || (k[0] == IntVec{-1, 1})));

    k = kernel_lattice(from_rows({{2, 4}}));
    REQUIRE(k.size() == 1);
    CHECK(((k[0] == IntVec{2, -1}) || (k[0] == IntVec{-2, 1})));
    Int g;
    mpz_gcd(g.get_mpz_t(), k[0][0].get_mpz_t(), k[0][1].get_mpz_t());
    CHECK(g == 1);  // primitive
}

TEST_CASE("image_basis basics") {
    auto b = image_basis(IntMatrix::identity(2));
    REQUIRE(b.size() == 2);
    CHECK(abs(cofactor_det(IntMatrix::from_columns(b, 2))) == 1);

    b = image_basis(from_rows({{1}, {1}}));
    REQUIRE(b.size() == 1);
    CHECK(((b[0] == IntVec{1, 1}) || (b[0] == IntVec{-1, -1})));

    b = image_basis(from_rows({{2, 2}, {0, 0}}));
    REQUIRE(b.size() == 1);
    CHECK(b[0][1] == 0);
    CHECK(abs(b[0][0]) == 2);
}

TEST_CASE("kernel and image lattices on random matrices") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 60; ++it) {
        int m = 1 + int(rng() % 5), n = 1 + int(rng() % 5);
        IntMatrix a = random_int_matrix(rng, m, n);
        int r = rank_q(a);
        auto ker = kernel_lattice(a);
        CHECK(int(ker.size()) + r == n);
        for (const auto& v : ker) {
            IntVec av = mul(a, v);
            for (const auto& x : av) CHECK(x == 0);
        }
        // Saturation: the kernel basis has trivial invariant factors.
        if (!ker.empty()) {
            SNFResult ks = snf(IntMatrix::from_columns(ker, n));
            CHECK(ks.invariant_factors().empty());
        }
        auto img = image_basis(a);
        CHECK(int(img.size()) == r);
        // Lattice equality oracle: every column of A is an integral
        // combination of img, and the gcds of maximal minors agree.
        if (!img.empty()) {
            IntMatrix bm = IntMatrix::from_columns(img, m);
            auto da = minor_gcd_diagonal(a);
            auto db = minor_gcd_diagonal(bm);
            REQUIRE(da.size() == db.size());
            Int pa = 1, pb = 1;
            for (const auto& x : da) pa *= x;
            for (const auto& x : db) pb *= x;
            CHECK(pa == pb);
        }
        if (!img.empty()) {
            RatMatrix coords = express_in(
                [&] {
                    std::vector<IntVec> cols;
                    for (int j = 0; j < n; ++j) cols.push_back(a.column(j));
                    return cols;
                }(),
                img);
            for (int i = 0; i < coords.rows(); ++i)
                for (int j = 0; j < coords.cols(); ++j) CHECK(coords.at(i, j).get_den() == 1);
        }
    }
}

TEST_CASE("express_in examples") {
    RatMatrix c = express_in(std::vector<IntVec>{{2, 0}}, std::vector<IntVec>{{1, 0}, {0, 1}});
    CHECK(c.at(0, 0) == 2);
    CHECK(c.at(1, 0) == 0);

    c = express_in(std::vector<IntVec>{{1, 1}}, std::vector<IntVec>{{1, 1}});
    CHECK(c.at(0, 0) == 1);

    CHECK_THROWS_AS(express_in(std::vector<IntVec>{{1, 0}}, std::vector<IntVec>{{0, 1}}), input_error);
}

TEST_CASE("determinants: frozen values") {
    CHECK(det(IntMatrix::identity(4)) == 1);
    CHECK(det(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det(IntMatrix(0, 0)) == 1);

    // A 4x4 change-of-basis block between a kink subcomplex basis and the
    // distinguished basis; must be a basis change, i.e. determinant +-1.
    IntMatrix block = from_rows({{0, 0, 1, 0}, {-1, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(abs(det(block)) == 1);
    CHECK(det(block) == cofactor_det(block));
}

TEST_CASE("Bareiss determinant equals cofactor expansion") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 80; ++it) {
        int n = int(rng() % 6);  // up to 5x5
        IntMatrix a = random_int_matrix(rng, n, n);
        CHECK(det(a) == cofactor_det(a));
    }
    // Rational version against its own oracle.
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    for (int it = 0; it < 40; ++it) {
        int n = int(rng() % 5);
        RatMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = make_rat(num(rng), den(rng));
        CHECK(det(a) == cofactor_det(a));
    }
}

TEST_CASE("det of permutation matrices is +-1") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        int n = 1 + int(rng() % 6);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        IntMatrix p(n, n);
        for (int i = 0; i < n; ++i) p.at(perm[i], i) = 1;
        CHECK(abs(det(p)) == 1);
    }
}

TEST_CASE("solve_preimage") {
    RatVec x = solve_preimage(IntMatrix::identity(2), {3, 4});
    CHECK(x[0] == 3);
    CHECK(x[1] == 4);

    x = solve_preimage(from_rows({{2}}), {1});
    CHECK(x[0] == make_rat(1, 2));

    CHECK_THROWS_AS(solve_preimage(from_rows({{1}, {1}}), {1, 0}), input_error);

    std::mt19937_64 rng(99);
    for (int it = 0; it < 40; ++it) {
        int m = 1 + int(rng() % 4), n = 1 + int(rng() % 4);
        IntMatrix a = random_int_matrix(rng, m, n);
        IntVec v(n);
        for (auto& e : v) e = int(rng() % 7) - 3;
        IntVec b = mul(a, v);
        RatVec sol = solve_preimage(a, b);
        RatVec back = mul(a, sol);
        for (int i = 0; i < m; ++i) CHECK(back[i] == b[i]);
    }
}

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(make_rat(1, 2)) == "1/2");
    CHECK(rat_to_string(make_rat(-4, 2)) == "-2");
    CHECK(rat_from_string("3/6") == make_rat(1, 2));
    CHECK_THROWS_AS(rat_from_string("x"), input_error);
}
