#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cidim/module.hpp"

namespace cidim {

// Bounded complex of graded modules, indexed homologically:
//
//   X_hi -> ... -> X_{lo+1} -> X_lo
//
// comps[k] holds X_{lo+k}; diffs[k] is the differential X_{lo+k+1} -> X_{lo+k}.
// Construction checks exactly that differentials are degree-0 maps, kill the
// relations of their source, and compose to zero (membership in the target's
// relation span, degree by degree, when components are not free).
class Complex {
public:
    static Complex make(AlgebraPtr alg, int lo, std::vector<GradedModule> comps,
                        std::vector<RingMatrix> diffs);
    static Complex zero_complex(AlgebraPtr alg);
    static Complex of_module(GradedModule m, int at = 0);

    const AlgebraPtr& algebra() const { return alg_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(comps_.size()) - 1; }
    int length() const { return static_cast<int>(comps_.size()); }
    bool empty() const { return comps_.empty(); }

    bool in_range(int i) const { return i >= lo_ && i <= hi(); }
    const GradedModule& at(int i) const;  // zero module outside [lo, hi]
    RingMatrix diff(int i) const;         // d_i : X_i -> X_{i-1}; zero-shaped outside

    bool all_free() const;
    bool is_zero_object() const;  // every component has rank zero

    // Smallest internal degree in which any component can be nonzero.
    int min_internal_degree() const;
    int max_gen_degree() const;

    // Drop rank-zero components at both ends.
    Complex normalized() const;

private:
    AlgebraPtr alg_;
    int lo_ = 0;
    std::vector<GradedModule> comps_;
    std::vector<RingMatrix> diffs_;
    GradedModule zero_;
};

Complex direct_sum(const Complex& a, const Complex& b);

// Shift: (suspend(X, n))_i = X_{i-n}, differentials scaled by (-1)^n.
Complex suspend(const Complex& x, int n);

// -------------------------------------------------------------------------
// Degreewise linear algebra over a whole complex.

class ComplexPieces {
public:
    explicit ComplexPieces(Complex x);

    const Complex& complex() const { return x_; }
    Pieces& at(int i);        // pieces of X_i (valid for any i; rank 0 outside)
    int dim(int i, int d);
    Mat diff_matrix(int i, int d);   // d_i at internal degree d
    Mat cycle_space(int i, int d);   // columns: basis of ker d_i in degree d
    Mat boundary_space(int i, int d);  // columns: image of d_{i+1} in degree d

private:
    Complex x_;
    std::map<int, std::unique_ptr<Pieces>> ps_;
    std::unique_ptr<Pieces> zero_;
};

// -------------------------------------------------------------------------
// Homology.

// dims[i][d] = dim_k H_i(X)_d for dims found in the scan window; absent keys
// are zero within the window.
struct HomologyTable {
    std::map<int, std::map<int, int>> dims;
    ScanWindow window;
};
HomologyTable homology_dims(const Complex& x, int degree_cap);

// H_i(X) as a presented module (minimal generators of cycles modulo
// boundaries, then their relations). The window says through which internal
// degree the scan is exhaustive.
struct HomologyModule {
    GradedModule mod;
    ScanWindow window;
};
HomologyModule homology_module(const Complex& x, int i, int degree_cap);

// Largest/smallest homological degree carrying homology. Empty optionals
// mean none was found (the exact complex); `certified` reports whether the
// internal-degree scan was exhaustive.
struct HomologySpread {
    std::optional<int> sup, inf;
    bool certified = true;
};
HomologySpread homology_spread(const Complex& x, int degree_cap);

// -------------------------------------------------------------------------
// Morphisms.

// Degree-0 chain map f : X -> Y. maps[k] acts on level lo+k; levels outside
// the stored range are zero. Construction checks degrees, relation
// compatibility and commutation with the differentials exactly.
class Morphism {
public:
    static Morphism make(Complex src, Complex dst, int lo, std::vector<RingMatrix> maps);
    static Morphism zero(Complex src, Complex dst);
    static Morphism identity(const Complex& x);

    const Complex& src() const { return src_; }
    const Complex& dst() const { return dst_; }
    RingMatrix map_at(int i) const;

private:
    Complex src_, dst_;
    int lo_ = 0;
    std::vector<RingMatrix> maps_;
};

Morphism compose(const Morphism& g, const Morphism& f);  // g after f

// Mapping cone: cone(f)_i = Y_i (+) X_{i-1}, d(y, x) = (dy + fx, -dx).
Complex cone(const Morphism& f);

// -------------------------------------------------------------------------
// Truncations.

Complex truncate_hard_above(const Complex& x, int n);  // keep levels <= n
Complex truncate_hard_below(const Complex& x, int n);  // keep levels >= n

// Soft truncation keeping homology in levels <= n: replaces X_n by
// coker(d_{n+1}) and drops higher levels. The projection X -> soft_above is
// the natural quotient map.
Complex truncate_soft_above(const Complex& x, int n);
Morphism soft_above_projection(const Complex& x, int n);

// Soft truncation keeping homology in levels >= n: replaces X_n by
// ker(d_n) (presented on its minimal generators) and drops lower levels.
// The inclusion soft_below -> X embeds the kernel. degree_cap bounds the
// generator scan on rings of infinite k-dimension.
Complex truncate_soft_below(const Complex& x, int n, int degree_cap);
Morphism soft_below_inclusion(const Complex& x, int n, int degree_cap);

// -------------------------------------------------------------------------
// Tensor and Hom (components must be free).

// X (x) Y with the sign rule d(a (x) b) = da (x) b + (-1)^|a| a (x) db.
// Level n is the sum of X_i (x) Y_{n-i}, blocks in ascending i; generator
// pairs within a block in row-major (a, b) order.
struct TensorGen {
    int i;  // homological level of the left factor
    int a;  // generator index in X_i
    int b;  // generator index in Y_{n-i}
};
struct TensorComplex {
    Complex cx;
    std::vector<std::vector<TensorGen>> gens;  // per level, cx.lo() first

    const std::vector<TensorGen>& gens_at(int n) const;
    int gen_index(int n, int i, int a, int b) const;
};
TensorComplex tensor(const Complex& x, const Complex& y);

// Hom(X, Y) with Hom(X, Y)_n = prod_i Hom(X_i, Y_{i+n}) and
// d(f) = d_Y f - (-1)^n f d_X. Generator (i, a, b) is the map sending
// generator a of X_i to generator b of Y_{i+n}; its internal degree is
// deg(b) - deg(a). Blocks in ascending i, then row-major (a, b).
struct HomGen {
    int i;  // level of the source component
    int a;  // generator index in X_i
    int b;  // generator index in Y_{i+n}
};
struct HomComplex {
    Complex cx;
    std::vector<std::vector<HomGen>> gens;

    const std::vector<HomGen>& gens_at(int n) const;
    int gen_index(int n, int i, int a, int b) const;
};
HomComplex hom_complex(const Complex& x, const Complex& y);

// Reassemble an element of Hom(X, Y)_n of internal degree d, given its
// coordinates in the free pieces of level n, into one matrix per level of X.
std::vector<RingMatrix> hom_element_maps(const HomComplex& h, const Complex& x,
                                         const Complex& y, int n, int d, const Vec& coords);

// Basis of the space of degree-0 chain maps X -> Y (cycles of internal
// degree 0 in Hom(X, Y)_0).
std::vector<Morphism> chain_map_basis(const Complex& x, const Complex& y);

// -------------------------------------------------------------------------
// Quasi-isomorphism test: H_i(f) bijective for all i, checked degree by
// degree inside the scan window.
struct QuasiIsoFailure {
    int level;
    int degree;
    std::string reason;
};
struct QuasiIsoReport {
    bool yes = false;
    bool certified = true;
    std::vector<QuasiIsoFailure> failures;
};
QuasiIsoReport is_quasi_iso(const Morphism& f, int degree_cap);

}  // namespace cidim
