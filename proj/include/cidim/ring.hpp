#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cidim/gf.hpp"

namespace cidim {

// Exponent vector of a monomial in a fixed variable list.
struct Monomial {
    std::vector<int> e;

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_constant() const { return degree() == 0; }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Lexicographic order: first differing exponent decides.
bool lex_less(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
std::vector<int> mono_support(const Monomial& m);
bool supports_disjoint(const Monomial& a, const Monomial& b);

// Standard-graded quotient k[x_1..x_n]/I with I generated by monomials,
// k = GF(p). The maximal ideal is the positive-degree part. Construction
// minimalizes the relation list (drops multiples of other relations).
class GradedAlgebra {
public:
    GradedAlgebra(Scalar p, std::vector<std::string> vars, std::vector<Monomial> relations);

    const PrimeField& field() const { return fld_; }
    Scalar characteristic() const { return fld_.characteristic(); }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Monomial>& relations() const { return rels_; }

    bool in_ideal(const Monomial& m) const;

    // k-basis of the degree-d piece: monomials of degree d outside the
    // ideal, in descending lex order. Empty for d < 0.
    std::vector<Monomial> basis(int d) const;
    int piece_dim(int d) const { return static_cast<int>(basis(d).size()); }

    // Finite k-dimension iff every variable has a pure-power relation.
    bool artinian() const { return artinian_; }
    // Largest degree with a nonzero piece (only when artinian).
    int top_degree() const;

    // All minimal monomial relations have pairwise disjoint supports.
    bool is_complete_intersection() const;

    bool same_as(const GradedAlgebra& o) const;

    std::string describe() const;  // e.g. "GF(101)[s,t]/(s^2, s*t, t^2)"

private:
    PrimeField fld_;
    std::vector<std::string> vars_;
    std::vector<Monomial> rels_;
    bool artinian_;
    int top_degree_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

AlgebraPtr make_algebra(Scalar p, std::vector<std::string> vars, std::vector<Monomial> relations);

struct Term {
    Monomial m;
    Scalar c;
};

// Element of a GradedAlgebra in normal form: ideal monomials deleted,
// like terms combined, terms sorted in descending lex order.
class RingElem {
public:
    RingElem() = default;
    explicit RingElem(AlgebraPtr a) : alg_(std::move(a)) {}

    // Normal form of an arbitrary term list.
    static RingElem normal_form(AlgebraPtr a, std::vector<Term> raw);
    static RingElem zero(AlgebraPtr a) { return RingElem(std::move(a)); }
    static RingElem unit(AlgebraPtr a);
    static RingElem variable(AlgebraPtr a, int i);
    static RingElem monomial(AlgebraPtr a, const Monomial& m, Scalar c = 1);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Degree when homogeneous (zero counts as homogeneous of any degree).
    bool is_homogeneous() const;
    int degree_or(int dflt) const;  // degree of leading term, dflt if zero

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator-() const;
    RingElem operator*(const RingElem& o) const;
    RingElem scale(Scalar c) const;
    RingElem times_mono(const Monomial& m) const;
    bool operator==(const RingElem& o) const;

    // Coefficient of the degree-0 monomial; nonzero iff the element has a
    // unit (scalar) part.
    Scalar constant_coeff() const;

private:
    AlgebraPtr alg_;
    std::vector<Term> terms_;
};

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// A sequence of monomials is regular over the polynomial ring in
// ambient_nvars variables iff the supports are pairwise disjoint.
// Constant monomials are rejected.
bool is_monomial_regular_sequence(int ambient_nvars, const std::vector<Monomial>& seq);

// Same criterion over a monomial quotient: additionally every member's
// support must avoid the supports of the quotient's relations (a monomial
// meeting a relation's support is a zerodivisor).
bool is_monomial_regular_sequence(const GradedAlgebra& q, const std::vector<Monomial>& seq);

}  // namespace cidim
