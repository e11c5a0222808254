#pragma once

#include <map>
#include <string>
#include <vector>

#include "cidim/resolution.hpp"

namespace cidim {

// Total k-dimension of the homology in each level, summed over the internal
// degrees inside the scan window.
std::map<int, int> homology_totals(const Complex& x, int degree_cap);

// Exterior-algebra complex on a sequence of homogeneous positive-degree
// elements; level i is free of rank C(n, i) on the i-subsets of the
// sequence, in ascending index order.
struct KoszulData {
    std::vector<RingElem> seq;
    Complex cx;
};
KoszulData koszul_complex(const AlgebraPtr& a);  // on the variables
KoszulData koszul_complex(const AlgebraPtr& a, std::vector<RingElem> seq);

// depth = nvars - sup(X (x) K) with K the Koszul complex on the variables.
// The zero complex has infinite depth.
struct DepthValue {
    bool infinite = false;
    int value = 0;
    bool certified = true;

    std::string str() const;
    bool operator==(const DepthValue& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};
DepthValue depth(const Complex& x, int cutoff, int degree_cap);
DepthValue depth(const GradedModule& m, int cutoff, int degree_cap);

// Resolves the non-free factors, then tensors. Homology levels at or above
// cutoff + min(0, inf) are resolution-truncation artifacts for inputs that
// do not resolve finitely; everything below is exact.
Complex derived_tensor(const Complex& x, const Complex& y, int cutoff, int degree_cap);

// Hom(resolution of x, y); y must be a bounded free complex. Cohomology in
// level -i is the i-th right-derived module when x and y are modules.
Complex derived_hom(const Complex& x, const Complex& y, int cutoff, int degree_cap);

// Betti coefficients of the minimal resolution: coeff(n) for n from `base`
// upward; zero outside the stored range. `complete` mirrors the resolution.
struct PoincareData {
    int base = 0;
    std::vector<int> coeffs;
    int cutoff = 0;
    bool complete = false;
    bool certified = true;

    int coeff(int n) const {
        int k = n - base;
        return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : 0;
    }
    int top() const { return base + static_cast<int>(coeffs.size()) - 1; }
};
PoincareData poincare_series(const Complex& x, int cutoff, int degree_cap);
PoincareData poincare_series(const GradedModule& m, int cutoff, int degree_cap);

// Coefficientwise comparison of the series of x (x)-derived y against the
// product of the series of x and y, through level `cutoff`.
struct ProductCheckRow {
    int level;
    int tensor_coeff;
    int product_coeff;
};
struct ProductCheck {
    bool ok = true;
    std::vector<ProductCheckRow> rows;
};
ProductCheck poincare_product_check(const Complex& x, const Complex& y, int cutoff,
                                    int degree_cap);

// Growth classification of a Betti sequence. Polynomial growth is detected
// by successive finite differences of the trailing half-window; failing
// that, a persistent ratio step of at least 1.1 marks superpolynomial
// evidence. Only the terminating case is a certificate.
struct ComplexityVerdict {
    enum class Kind { kExact, kAtLeast, kSuperEvidence };
    Kind kind = Kind::kExact;
    int value = 0;           // cx (kExact) or a lower bound (kAtLeast)
    int fitted_degree = -1;  // polynomial degree matched by the tail
    int window = 0;          // tail length examined
    bool certified = false;
    std::string note;

    bool is_exact(int v) const { return kind == Kind::kExact && value == v; }
    bool finite_evidence() const { return kind != Kind::kSuperEvidence; }
    std::string str() const;
};
ComplexityVerdict complexity_estimate(const PoincareData& p);

}  // namespace cidim
