#include "khtor/exact.hpp"

#include <algorithm>
#include <utility>

namespace khtor {

Rat make_rat(const Int& num, const Int& den) {
    require(den != 0, "make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw input_error("bad rational: '" + s + "'");
    r.canonicalize();
    return r;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols, int rows) {
    IntMatrix m(rows, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
        require(int(cols[j].size()) == rows, "from_columns: ragged column");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntMatrix::column(int j) const {
    IntVec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols, int rows) {
    RatMatrix m(rows, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
        require(int(cols[j].size()) == rows, "from_columns: ragged column");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RatVec RatMatrix::column(int j) const {
    RatVec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    require(a.cols() == b.rows(), "mul: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

IntVec mul(const IntMatrix& a, const IntVec& v) {
    require(a.cols() == int(v.size()), "mul: dimension mismatch");
    IntVec r(a.rows(), 0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

RatVec mul(const IntMatrix& a, const RatVec& v) {
    require(a.cols() == int(v.size()), "mul: dimension mismatch");
    RatVec r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r[i] += Rat(a.at(i, j)) * v[j];
    return r;
}

std::vector<Int> SNFResult::invariant_factors() const {
    std::vector<Int> f;
    for (int t = 0; t < rank; ++t)
        if (d.at(t, t) > 1) f.push_back(d.at(t, t));
    return f;
}

namespace {

// Row/column eliminations on D mirrored into the transforms, keeping
// U*A*V = D and the tracked inverses exact at every step.
struct SnfWork {
    IntMatrix d, u, v, u_inv, v_inv;

    explicit SnfWork(const IntMatrix& a)
        : d(a),
          u(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          u_inv(IntMatrix::identity(a.rows())),
          v_inv(IntMatrix::identity(a.cols())) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < d.cols(); ++k) std::swap(d.at(i, k), d.at(j, k));
        for (int k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
        for (int k = 0; k < u_inv.rows(); ++k) std::swap(u_inv.at(k, i), u_inv.at(k, j));
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < d.rows(); ++k) std::swap(d.at(k, i), d.at(k, j));
        for (int k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
        for (int k = 0; k < v_inv.cols(); ++k) std::swap(v_inv.at(i, k), v_inv.at(j, k));
    }

    // row i += c * row t
    void add_row(int i, int t, const Int& c) {
        for (int k = 0; k < d.cols(); ++k) d.at(i, k) += c * d.at(t, k);
        for (int k = 0; k < u.cols(); ++k) u.at(i, k) += c * u.at(t, k);
        for (int k = 0; k < u_inv.rows(); ++k) u_inv.at(k, t) -= c * u_inv.at(k, i);
    }

    // col j += c * col t
    void add_col(int j, int t, const Int& c) {
        for (int k = 0; k < d.rows(); ++k) d.at(k, j) += c * d.at(k, t);
        for (int k = 0; k < v.rows(); ++k) v.at(k, j) += c * v.at(k, t);
        for (int k = 0; k < v_inv.cols(); ++k) v_inv.at(t, k) -= c * v_inv.at(j, k);
    }

    void negate_row(int i) {
        for (int k = 0; k < d.cols(); ++k) d.at(i, k) = -d.at(i, k);
        for (int k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
        for (int k = 0; k < u_inv.rows(); ++k) u_inv.at(k, i) = -u_inv.at(k, i);
    }
};

}  // namespace

SNFResult snf(const IntMatrix& a) {
    SnfWork w(a);
    const int m = a.rows(), n = a.cols();
    int t = 0;
    while (t < std::min(m, n)) {
        // Minimal-absolute-value pivot in the trailing block, to bound growth.
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (w.d.at(i, j) == 0) continue;
                if (pi < 0 || cmp(abs(w.d.at(i, j)), abs(w.d.at(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing block is zero
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool clean = true;
        for (int i = t + 1; i < m; ++i) {
            if (w.d.at(i, t) == 0) continue;
            Int q;
            mpz_tdiv_q(q.get_mpz_t(), w.d.at(i, t).get_mpz_t(), w.d.at(t, t).get_mpz_t());
            w.add_row(i, t, -q);
            if (w.d.at(i, t) != 0) clean = false;  // remainder became a smaller pivot
        }
        for (int j = t + 1; j < n; ++j) {
            if (w.d.at(t, j) == 0) continue;
            Int q;
            mpz_tdiv_q(q.get_mpz_t(), w.d.at(t, j).get_mpz_t(), w.d.at(t, t).get_mpz_t());
            w.add_col(j, t, -q);
            if (w.d.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // Pivot must divide the whole trailing block for the divisibility
        // chain; pulling a bad row up strictly shrinks the eventual pivot.
        bool bad = false;
        for (int i = t + 1; i < m && !bad; ++i)
            for (int j = t + 1; j < n && !bad; ++j)
                if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                    w.add_row(t, i, 1);
                    bad = true;
                }
        if (bad) continue;

        if (w.d.at(t, t) < 0) w.negate_row(t);
        ++t;
    }

    SNFResult r;
    r.u = std::move(w.u);
    r.d = std::move(w.d);
    r.v = std::move(w.v);
    r.u_inv = std::move(w.u_inv);
    r.v_inv = std::move(w.v_inv);
    r.rank = t;
    return r;
}

std::vector<IntVec> kernel_lattice(const IntMatrix& a) {
    SNFResult s = snf(a);
    std::vector<IntVec> basis;
    for (int j = s.rank; j < a.cols(); ++j) basis.push_back(s.v.column(j));
    return basis;
}

std::vector<IntVec> image_basis(const IntMatrix& a) {
    // A*V = U^-1 * D, so the nonzero columns d_t * u_inv[:,t] span the
    // column lattice.
    SNFResult s = snf(a);
    std::vector<IntVec> basis;
    for (int t = 0; t < s.rank; ++t) {
        IntVec w = s.u_inv.column(t);
        for (Int& x : w) x *= s.d.at(t, t);
        basis.push_back(std::move(w));
    }
    return basis;
}

namespace {

// Gaussian elimination over Q on [B | W]; returns X with B X = W.
RatMatrix solve_rational(RatMatrix b, RatMatrix w) {
    const int m = b.rows(), k = b.cols(), l = w.cols();
    std::vector<int> pivot_col_of_row(m, -1);
    int row = 0;
    for (int col = 0; col < k && row < m; ++col) {
        int p = -1;
        for (int i = row; i < m; ++i)
            if (b.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row) {
            for (int j = 0; j < k; ++j) std::swap(b.at(p, j), b.at(row, j));
            for (int j = 0; j < l; ++j) std::swap(w.at(p, j), w.at(row, j));
        }
        Rat inv = 1 / b.at(row, col);
        for (int j = 0; j < k; ++j) b.at(row, j) *= inv;
        for (int j = 0; j < l; ++j) w.at(row, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || b.at(i, col) == 0) continue;
            Rat f = b.at(i, col);
            for (int j = 0; j < k; ++j) b.at(i, j) -= f * b.at(row, j);
            for (int j = 0; j < l; ++j) w.at(i, j) -= f * w.at(row, j);
        }
        pivot_col_of_row[row] = col;
        ++row;
    }
    // Rows of B that eliminated to zero must have zero right-hand side.
    for (int i = row; i < m; ++i)
        for (int j = 0; j < l; ++j)
            if (w.at(i, j) != 0) throw input_error("express_in/solve: vector not in span");
    RatMatrix x(k, l);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < l; ++j) x.at(pivot_col_of_row[i], j) = w.at(i, j);
    return x;
}

}  // namespace

RatMatrix express_in(const std::vector<RatVec>& vectors, const std::vector<RatVec>& basis) {
    int dim = basis.empty() ? (vectors.empty() ? 0 : int(vectors[0].size())) : int(basis[0].size());
    if (!vectors.empty()) dim = int(vectors[0].size());
    return solve_rational(RatMatrix::from_columns(basis, dim), RatMatrix::from_columns(vectors, dim));
}

RatMatrix express_in(const std::vector<IntVec>& vectors, const std::vector<IntVec>& basis) {
    auto lift = [](const std::vector<IntVec>& vs) {
        std::vector<RatVec> out;
        out.reserve(vs.size());
        for (const IntVec& v : vs) out.emplace_back(v.begin(), v.end());
        return out;
    };
    return express_in(lift(vectors), lift(basis));
}

Int det(const IntMatrix& a) {
    require(a.rows() == a.cols(), "det: matrix not square");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

Rat det(const RatMatrix& a) {
    require(a.rows() == a.cols(), "det: matrix not square");
    const int n = a.rows();
    if (n == 0) return Rat(1);
    IntMatrix m(n, n);
    Int scale = 1;
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j) {
            Int den = a.at(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (int j = 0; j < n; ++j) {
            Rat x = a.at(i, j) * Rat(l);
            require(x.get_den() == 1, "det: row scaling failed");
            m.at(i, j) = x.get_num();
        }
        scale *= l;
    }
    return make_rat(det(m), scale);
}

RatVec solve_preimage(const IntMatrix& a, const IntVec& b) {
    require(int(b.size()) == a.rows(), "solve_preimage: size mismatch");
    RatMatrix rhs(a.rows(), 1);
    for (int i = 0; i < a.rows(); ++i) rhs.at(i, 0) = Rat(b[i]);
    RatMatrix x = solve_rational(RatMatrix(a), rhs);
    return x.column(0);
}

int rank_q(const IntMatrix& a) {
    // Fraction-free elimination; only the rank is needed.
    IntMatrix m = a;
    const int rows = m.rows(), cols = m.cols();
    Int prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols; ++j) std::swap(m.at(row, j), m.at(p, j));
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Int num = m.at(i, j) * m.at(row, col) - m.at(i, col) * m.at(row, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, col) = 0;
        }
        prev = m.at(row, col);
        ++row;
    }
    return row;
}

}  // namespace khtor
