#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khtor/complex.hpp"
#include "khtor/exact.hpp"
#include "khtor/pd.hpp"

namespace khtor {

// A finite based cochain complex over Z on a degree window. The coordinate
// basis of each group is its distinguished basis.
struct BasedZComplex {
    int r_lo = 0;
    std::vector<int> dims;
    std::vector<IntMatrix> diffs;  // diffs[i] : C^{r_lo+i} -> C^{r_lo+i+1}, one fewer than dims

    int length() const { return int(dims.size()); }
    int r_hi() const { return r_lo + length() - 1; }
    int dim(int r) const;
    // Coboundary leaving degree r; zero-sized outside the window.
    IntMatrix diff_out(int r) const;
    void validate() const;  // shape and d^2 = 0
};

BasedZComplex q_subcomplex(const BasedCochainComplex& c, int q);

// b^r (image bases), their pullbacks, and homology representatives, indexed
// by window position. image[i] lives in degree r_lo+i+1; pullback[i] and
// homology[i] live in degree r_lo+i.
struct SubcomplexBases {
    std::vector<std::vector<IntVec>> image;
    std::vector<std::vector<RatVec>> pullback;
    std::vector<std::vector<IntVec>> homology;
};

struct TorsionOptions {
    // When set, image bases, kernel bases and pullbacks are perturbed by
    // seeded unimodular shuffles; the torsion column must not change.
    std::optional<std::uint64_t> shuffle_seed;
    int threads = 0;  // 0 = hardware concurrency (per-q parallelism)
};

// Z-basis of H^r modulo torsion, represented by cocycles: kernel lattice,
// image coordinates, Smith normal form, zero rows of D pushed back through
// the kernel basis.
std::vector<IntVec> homology_basis(const BasedZComplex& cx, int r);

SubcomplexBases choose_bases(const BasedZComplex& cx, const TorsionOptions& opts = {});

// Per-degree transition determinants [b^{r-1} h^r b~^r / c^r] and the
// torsion |prod contributions^((-1)^(r+1))|.
std::pair<std::vector<Rat>, Rat> subcomplex_torsion(const BasedZComplex& cx, const TorsionOptions& opts = {});

struct TorsionRow {
    int q = 0;
    std::vector<Rat> contributions;  // by increasing r over the full window
    Rat torsion;                     // positive
};

struct TorsionReport {
    std::string name;
    int r_lo = 0;
    std::vector<TorsionRow> rows;  // decreasing q

    const TorsionRow* row(int q) const;
};

TorsionReport link_torsion(const LinkDiagram& d, const TorsionOptions& opts = {});

// E^r = C^r (+) D^{r-1} with the usual block coboundary; distinguished bases
// concatenate. phi[i] : C^{r_lo+i} -> D^{r_lo+i} must be a cochain map.
struct MappingCone {
    BasedZComplex cone;
};

MappingCone mapping_cone(const std::vector<IntMatrix>& phi, const BasedZComplex& c, const BasedZComplex& d);

// Torsion of the acyclic mapping cone; throws input_error when phi is not a
// quasi-isomorphism.
Rat quasi_iso_torsion(const std::vector<IntMatrix>& phi, const BasedZComplex& c, const BasedZComplex& d);

}  // namespace khtor
