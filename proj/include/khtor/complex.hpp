#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "khtor/cube.hpp"
#include "khtor/exact.hpp"

namespace khtor {

// The Frobenius algebra V = span{1, x} with deg(1) = +1, deg(x) = -1.
enum class Label : std::uint8_t { one = 0, x = 1 };

inline int label_degree(Label l) { return l == Label::one ? +1 : -1; }

// m : V (x) V -> V. Returns nothing for x (x) x, which maps to zero.
std::optional<Label> apply_m(Label a, Label b);

// Delta : V -> V (x) V as a formal sum of pure tensors.
std::vector<std::pair<Label, Label>> apply_delta(Label a);

// Basis vector of the cochain group: a cube vertex plus a {1,x} assignment to
// each of its circles. Bit i of labels set means circle i carries x.
struct GradedBasisElement {
    std::uint32_t vertex = 0;
    std::uint32_t labels = 0;
    int k = 0;  // circles at this vertex
    int r = 0;  // homological degree, height - n_minus
    int q = 0;  // polynomial degree

    Label label_of(int circle) const { return ((labels >> circle) & 1u) ? Label::x : Label::one; }
    bool operator==(const GradedBasisElement&) const = default;
};

// Reverse-lexicographic tensor basis of V^(x)k: all-1 first, x varying
// fastest in the first factor. Returned as label masks in order.
std::vector<std::uint32_t> distinguished_basis(const ResolutionState& state);

// The whole based complex, split by polynomial degree. Each q part carries
// ordered distinguished bases and integer coboundaries over the full
// homological window [-n_minus, n_plus], padded with zero groups so that
// contribution columns line up across q rows.
class BasedCochainComplex {
public:
    struct QPart {
        int q = 0;
        std::vector<std::vector<GradedBasisElement>> groups;  // index r - r_min
        std::vector<IntMatrix> diffs;                         // diffs[i] : C^{r_min+i} -> C^{r_min+i+1}
    };

    int n_plus = 0, n_minus = 0;
    int r_min = 0, r_max = 0;
    std::vector<QPart> parts;  // decreasing q

    const QPart* part(int q) const;
    std::vector<int> q_degrees() const;  // decreasing
    int dim(int r, int q) const;
};

BasedCochainComplex build_complex(const LinkDiagram& d);

std::map<std::pair<int, int>, int> graded_dims(const BasedCochainComplex& c);

// Plain text dump of every nonempty block: header "r q rows cols", one matrix
// row per line.
void dump_blocks(const BasedCochainComplex& c, std::ostream& os);

}  // namespace khtor
