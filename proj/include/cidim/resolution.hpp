#pragma once

#include <map>
#include <string>
#include <vector>

#include "cidim/complex.hpp"

namespace cidim {

// Extended-integer answer for a homological dimension: minus-infinity for
// exact inputs, an exact finite value, or a lower bound when a homological
// cutoff was reached before the computation could close off.
struct DimensionVerdict {
    enum class Kind { kMinusInfinity, kFinite, kAtLeast };

    Kind kind = Kind::kFinite;
    int value = 0;             // the value (kFinite) or the bound (kAtLeast)
    bool certified = true;     // internal-degree scans were exhaustive
    std::string certificate;   // how the value was obtained

    static DimensionVerdict minus_infinity(std::string why = "");
    static DimensionVerdict finite(int v, std::string why = "");
    static DimensionVerdict at_least(int bound, std::string why = "");

    bool is_finite() const { return kind == Kind::kFinite; }
    bool is_minus_infinity() const { return kind == Kind::kMinusInfinity; }
    bool is_at_least() const { return kind == Kind::kAtLeast; }
    bool determinate() const { return kind != Kind::kAtLeast; }

    // Same verdict for the complex shifted up by n levels.
    DimensionVerdict shifted(int n) const;

    std::string str() const;  // "-inf", "3", ">= 10"

    // Compares kind and value; certificates are ignored.
    bool operator==(const DimensionVerdict& o) const {
        return kind == o.kind && (kind == Kind::kMinusInfinity || value == o.value);
    }
};

// A free complex p together with a quasi-isomorphism sigma : p -> target.
// `minimal` certifies every differential entry of p has positive degree.
// `complete` says an empty stage past the top of homology was witnessed, so
// p is the whole resolution and not just its bottom part.
struct ResolutionResult {
    Complex p;
    Morphism sigma;
    bool minimal = false;
    bool complete = false;
    int cutoff = 0;
    int degree_cap = 0;
    bool certified = true;

    int betti(int n) const { return p.at(n).gens.rank(); }
    std::vector<int> betti_row() const;  // ranks for levels p.lo()..p.hi()
    // level -> internal degree -> number of generators
    std::map<int, std::map<int, int>> graded_betti() const;

    // Reads pd off a minimal resolution: top nonzero level when complete,
    // "at least cutoff" otherwise, minus-infinity for the zero resolution.
    DimensionVerdict pd() const;
};

// Minimal free resolution built level by level: each new level kills the
// cycles of the previous one that map to boundaries and covers the homology
// classes not already reachable, choosing minimal homogeneous generators for
// both. Components of x may be free or presented. Levels are built through
// `cutoff`; construction stops early when a stage contributes nothing and
// homology is exhausted. Throws if the degree cap is too small to keep the
// output minimal.
ResolutionResult minimal_free_resolution(const Complex& x, int cutoff, int degree_cap);
ResolutionResult minimal_free_resolution(const GradedModule& m, int cutoff, int degree_cap);

// Levelwise-surjective quasi-isomorphism from a free complex: the minimal
// resolution direct-summed with split two-term pieces that cover the levels
// where the minimal map is not already onto. Not minimal in general.
ResolutionResult strict_resolution(const Complex& x, int cutoff, int degree_cap);

// True when f is surjective in every level and every internal degree up to
// the cap.
bool levelwise_surjective(const Morphism& f, int degree_cap);

DimensionVerdict projective_dimension(const Complex& x, int cutoff, int degree_cap);
DimensionVerdict projective_dimension(const GradedModule& m, int cutoff, int degree_cap);

// Cokernel of the differential into level n of r.p, presented on the level-n
// generators. For a minimal resolution and n at or above the top of homology
// this is the n-th syzygy of the resolved object. Throws when n is at or
// beyond the top of an incomplete resolution.
GradedModule syzygy_module(const ResolutionResult& r, int n);

// Checks degreewise exactness of 0 -> x -> y -> z -> 0 within the cap:
// composite zero, incl injective, proj surjective, dims additive.
bool ses_exact(const Morphism& incl, const Morphism& proj, int degree_cap);

// Free resolutions of the three terms of a degreewise exact sequence
// 0 -> x -> y -> z -> 0, assembled so that the resolution row
// 0 -> rx.p -> ry.p -> rz.p -> 0 is degreewise split exact and each vertical
// map is a quasi-isomorphism. rx.p is a strict resolution; ry.p is rx.p (+)
// rz.p levelwise with a twisted differential.
struct SesResolution {
    ResolutionResult rx, ry, rz;
    Morphism row_incl;  // rx.p -> ry.p
    Morphism row_proj;  // ry.p -> rz.p
};
SesResolution ses_resolution(const Morphism& incl, const Morphism& proj, int cutoff,
                             int degree_cap);

}  // namespace cidim
