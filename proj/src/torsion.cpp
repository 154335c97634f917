#include "khtor/torsion.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace khtor {

int BasedZComplex::dim(int r) const {
    if (r < r_lo || r > r_hi()) return 0;
    return dims[r - r_lo];
}

IntMatrix BasedZComplex::diff_out(int r) const {
    if (r < r_lo || r > r_hi()) return IntMatrix(0, 0);
    int i = r - r_lo;
    if (i + 1 >= length()) return IntMatrix(0, dims[i]);
    return diffs[i];
}

void BasedZComplex::validate() const {
    require(diffs.size() + 1 == dims.size() || (dims.size() <= 1 && diffs.empty()),
            "BasedZComplex: diffs/dims size mismatch");
    for (int i = 0; i + 1 < length(); ++i) {
        require(diffs[i].rows() == dims[i + 1] && diffs[i].cols() == dims[i],
                "BasedZComplex: differential shape mismatch");
        if (i + 2 < length())
            require(mul(diffs[i + 1], diffs[i]).is_zero(), "BasedZComplex: d^2 != 0");
    }
}

BasedZComplex q_subcomplex(const BasedCochainComplex& c, int q) {
    BasedZComplex z;
    z.r_lo = c.r_min;
    const int window = c.r_max - c.r_min + 1;
    z.dims.assign(window, 0);
    z.diffs.assign(window - 1, IntMatrix());
    const BasedCochainComplex::QPart* p = c.part(q);
    for (int i = 0; i < window; ++i) z.dims[i] = p ? int(p->groups[i].size()) : 0;
    for (int i = 0; i + 1 < window; ++i)
        z.diffs[i] = p ? p->diffs[i] : IntMatrix(0, 0);
    return z;
}

namespace {

// Right-multiply a list of lattice vectors by a random unimodular matrix:
// same lattice, different basis.
std::vector<IntVec> shuffle_lattice_basis(const std::vector<IntVec>& basis, std::mt19937_64& rng) {
    const int k = int(basis.size());
    if (k == 0) return basis;
    std::vector<IntVec> out = basis;
    std::uniform_int_distribution<int> pick(0, k - 1), coef(-2, 2);
    for (int step = 0; step < 3 * k; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Int c = coef(rng);
        for (size_t t = 0; t < out[i].size(); ++t) out[i][t] += c * out[j][t];
    }
    if (k >= 2) std::swap(out[0], out[k - 1]);
    return out;
}

}  // namespace

std::vector<IntVec> homology_basis(const BasedZComplex& cx, int r) {
    if (cx.dim(r) == 0) return {};
    std::vector<IntVec> kernel = kernel_lattice(cx.diff_out(r));
    std::vector<IntVec> image =
        (r - 1 >= cx.r_lo) ? image_basis(cx.diff_out(r - 1)) : std::vector<IntVec>{};

    const int k = int(kernel.size());
    RatMatrix coords = express_in(image, kernel);
    IntMatrix x(k, int(image.size()));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < int(image.size()); ++j) {
            require(coords.at(i, j).get_den() == 1, "homology_basis: image not integral over kernel");
            x.at(i, j) = coords.at(i, j).get_num();
        }

    SNFResult s = snf(x);
    // New kernel basis Z * U^-1; its vectors at the zero rows of D descend to
    // a basis of the free part of H^r.
    std::vector<IntVec> out;
    for (int row = s.rank; row < k; ++row) {
        IntVec v(cx.dim(r), 0);
        for (int t = 0; t < k; ++t) {
            const Int& c = s.u_inv.at(t, row);
            if (c == 0) continue;
            for (int e = 0; e < cx.dim(r); ++e) v[e] += c * kernel[t][e];
        }
        out.push_back(std::move(v));
    }
    return out;
}

SubcomplexBases choose_bases(const BasedZComplex& cx, const TorsionOptions& opts) {
    const int len = cx.length();
    SubcomplexBases sb;
    sb.image.resize(len);
    sb.pullback.resize(len);
    sb.homology.resize(len);

    std::optional<std::mt19937_64> rng;
    if (opts.shuffle_seed) rng.emplace(*opts.shuffle_seed);

    // One Smith form per coboundary delivers everything at once: the kernel
    // lattice (trailing columns of V), the image lattice (d_t * u_inv columns)
    // and integral pullbacks (leading columns of V, since A*V e_t = d_t u_inv e_t).
    std::vector<SNFResult> forms(len);
    std::vector<std::vector<IntVec>> kernels(len);
    for (int i = 0; i < len; ++i) {
        const int r = cx.r_lo + i;
        if (cx.dim(r) == 0) continue;
        forms[i] = snf(cx.diff_out(r));
        const SNFResult& s = forms[i];
        for (int j = s.rank; j < cx.dim(r); ++j) kernels[i].push_back(s.v.column(j));
        for (int t = 0; t < s.rank; ++t) {
            IntVec w = s.u_inv.column(t);
            for (Int& e : w) e *= s.d.at(t, t);
            sb.image[i].push_back(std::move(w));
            IntVec p = s.v.column(t);
            sb.pullback[i].emplace_back(p.begin(), p.end());
        }
        if (rng) {
            kernels[i] = shuffle_lattice_basis(kernels[i], *rng);
            sb.image[i] = shuffle_lattice_basis(sb.image[i], *rng);
        }
    }

    for (int i = 0; i < len; ++i) {
        const int r = cx.r_lo + i;
        if (cx.dim(r) == 0) continue;

        // homology representatives through the kernel basis (SNF route)
        static const std::vector<IntVec> kEmpty;
        const std::vector<IntVec>& image_below = (i > 0) ? sb.image[i - 1] : kEmpty;
        const int k = int(kernels[i].size());
        const int l = int(image_below.size());
        IntMatrix x(k, l);
        if (rng) {
            RatMatrix coords = express_in(image_below, kernels[i]);
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < l; ++b) {
                    require(coords.at(a, b).get_den() == 1,
                            "choose_bases: image not integral over kernel");
                    x.at(a, b) = coords.at(a, b).get_num();
                }
        } else if (l > 0) {
            // canonical kernel basis = trailing columns of V, so coordinates
            // are the trailing rows of v_inv * B (the leading ones vanish)
            const SNFResult& s = forms[i];
            IntMatrix b = IntMatrix::from_columns(image_below, cx.dim(r));
            IntMatrix w = mul(s.v_inv, b);
            for (int a = 0; a < k; ++a)
                for (int bj = 0; bj < l; ++bj) x.at(a, bj) = w.at(s.rank + a, bj);
            for (int a = 0; a < s.rank; ++a)
                for (int bj = 0; bj < l; ++bj)
                    require(w.at(a, bj) == 0, "choose_bases: image not inside the kernel");
        }
        SNFResult hs = snf(x);
        for (int row = hs.rank; row < k; ++row) {
            IntVec v(cx.dim(r), 0);
            for (int t = 0; t < k; ++t) {
                const Int& c = hs.u_inv.at(t, row);
                if (c == 0) continue;
                for (int e = 0; e < cx.dim(r); ++e) v[e] += c * kernels[i][t][e];
            }
            sb.homology[i].push_back(std::move(v));
        }

        // pullback shuffles: re-solve against the shuffled image, then blur
        // with kernel elements; torsion must not see any of it
        if (rng) {
            sb.pullback[i].clear();
            std::uniform_int_distribution<int> coef(-2, 2);
            for (const IntVec& b : sb.image[i]) {
                RatVec x0 = solve_preimage(cx.diff_out(r), b);
                for (const IntVec& z : kernels[i]) {
                    Int c = coef(*rng);
                    for (size_t e = 0; e < x0.size(); ++e) x0[e] += Rat(c) * Rat(z[e]);
                }
                sb.pullback[i].push_back(std::move(x0));
            }
        }
    }
    return sb;
}

std::pair<std::vector<Rat>, Rat> subcomplex_torsion(const BasedZComplex& cx, const TorsionOptions& opts) {
    SubcomplexBases sb = choose_bases(cx, opts);
    const int len = cx.length();

    std::vector<Rat> contributions(len, Rat(1));
    for (int i = 0; i < len; ++i) {
        const int d = cx.dims[i];
        if (d == 0) continue;  // empty group contributes 1
        std::vector<RatVec> cols;
        if (i > 0)
            for (const IntVec& v : sb.image[i - 1]) cols.emplace_back(v.begin(), v.end());
        for (const IntVec& v : sb.homology[i]) cols.emplace_back(v.begin(), v.end());
        for (const RatVec& v : sb.pullback[i]) cols.push_back(v);
        require(int(cols.size()) == d, "subcomplex_torsion: basis count mismatch at a degree");
        Rat c = det(RatMatrix::from_columns(cols, d));
        require(c != 0, "subcomplex_torsion: degenerate transition matrix");
        contributions[i] = c;
    }

    Rat torsion(1);
    for (int i = 0; i < len; ++i) {
        const int r = cx.r_lo + i;
        const bool numerator = ((r % 2) + 2) % 2 == 1;  // exponent (-1)^(r+1)
        if (numerator)
            torsion *= contributions[i];
        else
            torsion /= contributions[i];
    }
    torsion = abs(torsion);
    return {std::move(contributions), std::move(torsion)};
}

const TorsionRow* TorsionReport::row(int q) const {
    for (const auto& r : rows)
        if (r.q == q) return &r;
    return nullptr;
}

TorsionReport link_torsion(const LinkDiagram& d, const TorsionOptions& opts) {
    BasedCochainComplex c = build_complex(d);
    std::vector<int> qs = c.q_degrees();

    TorsionReport report;
    report.r_lo = c.r_min;
    report.rows.resize(qs.size());

    int threads = opts.threads > 0 ? opts.threads : int(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, int(qs.size())));

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < qs.size(); i = next.fetch_add(1)) {
            // Per-row shuffle seeds keep parallel runs deterministic.
            TorsionOptions row_opts = opts;
            if (opts.shuffle_seed) row_opts.shuffle_seed = *opts.shuffle_seed + 0x9e3779b97f4a7c15ull * i;
            auto [contribs, tors] = subcomplex_torsion(q_subcomplex(c, qs[i]), row_opts);
            report.rows[i] = TorsionRow{qs[i], std::move(contribs), std::move(tors)};
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return report;
}

MappingCone mapping_cone(const std::vector<IntMatrix>& phi, const BasedZComplex& c, const BasedZComplex& d) {
    require(c.r_lo == d.r_lo && c.length() == d.length(),
            "mapping_cone: complexes must share a degree window");
    if (int(phi.size()) != c.length()) throw input_error("mapping_cone: one phi block per degree required");
    for (int i = 0; i < c.length(); ++i)
        if (phi[i].rows() != d.dims[i] || phi[i].cols() != c.dims[i])
            throw input_error("mapping_cone: phi block shape mismatch");
    // cochain map: phi d_C = d_D phi
    for (int i = 0; i + 1 < c.length(); ++i)
        if (!(mul(phi[i + 1], c.diffs[i]) == mul(d.diffs[i], phi[i])))
            throw input_error("mapping_cone: phi is not a cochain map");

    MappingCone m;
    m.cone.r_lo = c.r_lo;
    const int len = c.length() + 1;
    m.cone.dims.assign(len, 0);
    for (int i = 0; i < len; ++i)
        m.cone.dims[i] = (i < c.length() ? c.dims[i] : 0) + (i > 0 ? d.dims[i - 1] : 0);

    m.cone.diffs.assign(len - 1, IntMatrix());
    for (int i = 0; i + 1 < len; ++i) {
        const int r = c.r_lo + i;
        const int c_rows = (i + 1 < c.length()) ? c.dims[i + 1] : 0;
        const int c_cols = (i < c.length()) ? c.dims[i] : 0;
        const int d_rows = d.dims[i];
        const int d_cols = (i > 0) ? d.dims[i - 1] : 0;
        IntMatrix delta(c_rows + d_rows, c_cols + d_cols);
        if (i + 1 < c.length())
            for (int a = 0; a < c_rows; ++a)
                for (int b = 0; b < c_cols; ++b) delta.at(a, b) = c.diffs[i].at(a, b);
        const int sgn = (((r % 2) + 2) % 2 == 0) ? +1 : -1;  // (-1)^r
        for (int a = 0; a < d_rows; ++a)
            for (int b = 0; b < c_cols; ++b) delta.at(c_rows + a, b) = sgn * phi[i].at(a, b);
        if (i > 0)
            for (int a = 0; a < d_rows; ++a)
                for (int b = 0; b < d_cols; ++b) delta.at(c_rows + a, c_cols + b) = d.diffs[i - 1].at(a, b);
        m.cone.diffs[i] = std::move(delta);
    }
    m.cone.validate();
    return m;
}

Rat quasi_iso_torsion(const std::vector<IntMatrix>& phi, const BasedZComplex& c, const BasedZComplex& d) {
    MappingCone m = mapping_cone(phi, c, d);
    // acyclic over Q <=> rank(delta^{r-1}) + rank(delta^r) = dim E^r everywhere
    for (int i = 0; i < m.cone.length(); ++i) {
        int below = (i > 0) ? rank_q(m.cone.diffs[i - 1]) : 0;
        int here = (i + 1 < m.cone.length()) ? rank_q(m.cone.diffs[i]) : 0;
        if (below + here != m.cone.dims[i])
            throw input_error("quasi_iso_torsion: phi is not a quasi-isomorphism");
    }
    return subcomplex_torsion(m.cone).second;
}

}  // namespace khtor
