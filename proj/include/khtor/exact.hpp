#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "khtor/errors.hpp"

// Exact integer and rational matrix algebra: Smith normal form with unimodular
// transforms, kernel/image lattice bases, basis-expression solving and exact
// determinants. Scalars are GMP arbitrary-precision numbers, so nothing here
// can overflow; everything is exact.

namespace khtor {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Rat make_rat(const Int& num, const Int& den);
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static IntMatrix identity(int n);
    static IntMatrix from_columns(const std::vector<IntVec>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IntVec column(int j) const;
    bool is_zero() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    explicit RatMatrix(const IntMatrix& m);

    static RatMatrix from_columns(const std::vector<RatVec>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    RatVec column(int j) const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntVec mul(const IntMatrix& a, const IntVec& v);
RatVec mul(const IntMatrix& a, const RatVec& v);

// U * A * V = D with U, V unimodular and D diagonal, diagonal entries positive
// and forming a divisibility chain d1 | d2 | ... | d_rank. u_inv and v_inv are
// the exact inverses, tracked during the reduction.
struct SNFResult {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;
    int rank = 0;

    std::vector<Int> invariant_factors() const;  // the d_i > 1
};

SNFResult snf(const IntMatrix& a);

// Z-basis of {v integral : A v = 0}; saturated (primitive) lattice basis,
// size cols - rank.
std::vector<IntVec> kernel_lattice(const IntMatrix& a);

// Z-basis of the column lattice {A x : x integral}; rank vectors.
std::vector<IntVec> image_basis(const IntMatrix& a);

// Coefficient matrix expressing each vector over the given basis; column j
// holds the coordinates of vectors[j]. Throws input_error when some vector is
// outside the span.
RatMatrix express_in(const std::vector<IntVec>& vectors, const std::vector<IntVec>& basis);
RatMatrix express_in(const std::vector<RatVec>& vectors, const std::vector<RatVec>& basis);

// Exact determinant; integer version is fraction-free (Bareiss), the rational
// version clears denominators row-wise and divides back.
Int det(const IntMatrix& a);
Rat det(const RatMatrix& a);

// Any rational x with A x = b; throws input_error on an inconsistent system.
RatVec solve_preimage(const IntMatrix& a, const IntVec& b);

int rank_q(const IntMatrix& a);  // rank over the rationals

}  // namespace khtor
