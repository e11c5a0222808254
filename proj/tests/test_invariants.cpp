#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cidim/invariants.hpp"

using namespace cidim;

namespace {

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

AlgebraPtr ring_st() {
    return make_algebra(101, {"s", "t"}, {mono({2, 0}), mono({1, 1}), mono({0, 2})});
}

AlgebraPtr ring_xy() { return make_algebra(101, {"x", "y"}, {}); }

AlgebraPtr ring_x2() { return make_algebra(101, {"x"}, {mono({2})}); }

// 0 -> R(-1) --s--> R -> 0 in levels 1, 0
Complex two_term_s(const AlgebraPtr& a) {
    RingMatrix d(a, 1, 1);
    d.at(0, 0) = RingElem::variable(a, 0);
    return Complex::make(a, 0,
                         {GradedModule::free_module({a, {0}}),
                          GradedModule::free_module({a, {1}})},
                         {d});
}

Complex free_point(const AlgebraPtr& a) {
    return Complex::of_module(GradedModule::free_module({a, {0}}));
}

Complex k_complex(const AlgebraPtr& a) { return Complex::of_module(residue_field(a)); }

GradedModule quotient_by_var(const AlgebraPtr& a, int v) {
    RingMatrix rel(a, 1, 1);
    rel.at(0, 0) = RingElem::variable(a, v);
    return GradedModule::make({a, {0}}, rel);
}

}  // namespace

TEST_CASE("koszul complex has binomial ranks and subset degrees") {
    AlgebraPtr a = ring_st();
    KoszulData k = koszul_complex(a);
    REQUIRE(k.cx.lo() == 0);
    REQUIRE(k.cx.hi() == 2);
    CHECK(k.cx.at(0).gens.rank() == 1);
    CHECK(k.cx.at(1).gens.rank() == 2);
    CHECK(k.cx.at(2).gens.rank() == 1);
    CHECK(k.cx.at(1).gens.degs == std::vector<int>{1, 1});
    CHECK(k.cx.at(2).gens.degs == std::vector<int>{2});
    CHECK(k.seq.size() == 2);
    CHECK(k.seq[0] == RingElem::variable(a, 0));

    AlgebraPtr b = ring_x2();
    KoszulData kb = koszul_complex(b);
    CHECK(kb.cx.hi() == 1);
    CHECK(kb.cx.at(1).gens.degs == std::vector<int>{1});
}

TEST_CASE("koszul complex on the polynomial ring is exact in positive levels") {
    AlgebraPtr a = ring_xy();
    Complex k = koszul_complex(a).cx;
    std::map<int, int> h = homology_totals(k, 20);
    REQUIRE(h.size() == 1);
    CHECK(h.at(0) == 1);
}

TEST_CASE("koszul rejects inhomogeneous or constant entries") {
    AlgebraPtr a = ring_xy();
    RingElem bad = RingElem::variable(a, 0) + RingElem::monomial(a, mono({0, 2}));
    CHECK_THROWS_AS(koszul_complex(a, {bad}), std::invalid_argument);
    CHECK_THROWS_AS(koszul_complex(a, {RingElem::unit(a)}), std::invalid_argument);
}

TEST_CASE("depth is insensitive to the order of the sequence") {
    AlgebraPtr a = ring_st();
    Complex x = two_term_s(a);
    Complex k1 = koszul_complex(a).cx;
    Complex k2 = koszul_complex(
                     a, {RingElem::variable(a, 1), RingElem::variable(a, 0)})
                     .cx;
    std::map<int, int> h1 = homology_totals(tensor(x, k1).cx, 20);
    std::map<int, int> h2 = homology_totals(tensor(x, k2).cx, 20);
    REQUIRE(!h1.empty());
    REQUIRE(!h2.empty());
    CHECK(h1.rbegin()->first == h2.rbegin()->first);
}

TEST_CASE("depth of standard examples") {
    CHECK(depth(free_point(ring_xy()), 10, 20) == DepthValue{false, 2});
    CHECK(depth(free_point(ring_st()), 10, 20) == DepthValue{false, 0});
    CHECK(depth(residue_field(ring_x2()), 10, 20) == DepthValue{false, 0});
    CHECK(depth(residue_field(ring_xy()), 10, 20) == DepthValue{false, 0});
    CHECK(depth(quotient_by_var(ring_xy(), 0), 10, 20) == DepthValue{false, 1});

    AlgebraPtr a = ring_st();
    DepthValue dz = depth(cone(Morphism::identity(free_point(a))), 10, 20);
    CHECK(dz.infinite);
    CHECK(dz.str() == "+inf");
    CHECK(depth(free_point(a), 10, 20).str() == "0");
}

TEST_CASE("derived tensor with the ring itself changes nothing") {
    AlgebraPtr a = ring_st();
    Complex x = two_term_s(a);
    Complex t = derived_tensor(x, free_point(a), 10, 20);
    CHECK(homology_totals(t, 20) == homology_totals(x, 20));
}

TEST_CASE("tor of the residue field with itself over the short ring is one-dimensional") {
    AlgebraPtr a = ring_x2();
    Complex t = derived_tensor(k_complex(a), k_complex(a), 12, 20);
    std::map<int, int> h = homology_totals(t, 20);
    for (int n = 0; n <= 8; ++n) {
        REQUIRE(h.count(n) == 1);
        CHECK(h.at(n) == 1);
    }
}

TEST_CASE("betti numbers equal the dimensions of the derived tensor with k") {
    AlgebraPtr a = ring_st();

    Complex x = two_term_s(a);
    ResolutionResult rx = minimal_free_resolution(x, 8, 20);
    std::map<int, int> hx = homology_totals(derived_tensor(x, k_complex(a), 8, 20), 20);
    for (int n = 0; n <= 1; ++n) CHECK(rx.betti(n) == (hx.count(n) ? hx.at(n) : 0));

    std::map<int, int> hk =
        homology_totals(derived_tensor(k_complex(a), k_complex(a), 3, 20), 20);
    for (int n = 0; n <= 2; ++n) CHECK(hk.at(n) == (1 << n));
}

TEST_CASE("derived hom from the ring recovers the target") {
    AlgebraPtr a = ring_st();
    Complex x = two_term_s(a);
    Complex h = derived_hom(free_point(a), x, 10, 20);
    CHECK(homology_totals(h, 20) == homology_totals(x, 20));
    CHECK_THROWS_AS(derived_hom(x, k_complex(a), 10, 20), std::invalid_argument);
}

TEST_CASE("derived hom of k into the ring locates the socle") {
    // over k[x]/(x^2): one class in level 0, nothing through the window
    AlgebraPtr a = ring_x2();
    Complex h = derived_hom(k_complex(a), free_point(a), 10, 20);
    std::map<int, int> ht = homology_totals(h, 20);
    for (int i = -8; i <= 0; ++i) {
        if (i == 0) {
            REQUIRE(ht.count(0) == 1);
            CHECK(ht.at(0) == 1);
        } else {
            CHECK(ht.count(i) == 0);
        }
    }

    // over k[x,y]: a single class in level -2
    AlgebraPtr b = ring_xy();
    Complex hb = derived_hom(k_complex(b), free_point(b), 10, 20);
    std::map<int, int> htb = homology_totals(hb, 20);
    REQUIRE(htb.size() == 1);
    CHECK(htb.at(-2) == 1);
}

TEST_CASE("poincare coefficients follow the minimal resolution") {
    PoincareData p = poincare_series(residue_field(ring_x2()), 10, 20);
    CHECK(p.base == 0);
    CHECK(!p.complete);
    REQUIRE(p.coeffs.size() == 11);
    for (int n = 0; n <= 10; ++n) CHECK(p.coeff(n) == 1);
    CHECK(p.coeff(11) == 0);
    CHECK(p.coeff(-1) == 0);

    PoincareData q = poincare_series(residue_field(ring_xy()), 10, 20);
    CHECK(q.complete);
    CHECK(q.coeffs == std::vector<int>{1, 2, 1});
    CHECK(q.top() == 2);

    PoincareData z =
        poincare_series(cone(Morphism::identity(free_point(ring_xy()))), 10, 20);
    CHECK(z.complete);
    CHECK(z.coeffs.empty());
}

TEST_CASE("poincare series of a derived tensor is the product of the series") {
    AlgebraPtr a = ring_x2();
    ProductCheck pc = poincare_product_check(k_complex(a), k_complex(a), 8, 20);
    CHECK(pc.ok);
    REQUIRE(pc.rows.size() == 9);
    for (int n = 0; n <= 8; ++n) {
        CHECK(pc.rows[n].level == n);
        CHECK(pc.rows[n].tensor_coeff == n + 1);
        CHECK(pc.rows[n].product_coeff == n + 1);
    }

    AlgebraPtr b = ring_st();
    CHECK(poincare_product_check(two_term_s(b), k_complex(b), 4, 20).ok);
    CHECK(poincare_product_check(two_term_s(b), free_point(b), 6, 20).ok);
}

TEST_CASE("complexity classification of the basic growth shapes") {
    // terminating resolution: certified zero
    ComplexityVerdict v0 = complexity_estimate(poincare_series(residue_field(ring_xy()), 10, 20));
    CHECK(v0.is_exact(0));
    CHECK(v0.certified);
    CHECK(v0.str() == "exactly 0 (certified)");

    // constant betti numbers: complexity one
    ComplexityVerdict v1 = complexity_estimate(poincare_series(residue_field(ring_x2()), 10, 20));
    CHECK(v1.is_exact(1));
    CHECK(v1.fitted_degree == 0);
    CHECK(!v1.certified);

    // doubling betti numbers: superpolynomial evidence
    ComplexityVerdict v2 = complexity_estimate(poincare_series(residue_field(ring_st()), 8, 20));
    CHECK(v2.kind == ComplexityVerdict::Kind::kSuperEvidence);
    CHECK(!v2.finite_evidence());
    CHECK(v2.str() == "superpolynomial-evidence");

    // linear growth from the tensor square over the short ring
    AlgebraPtr a = ring_x2();
    Complex t = derived_tensor(k_complex(a), k_complex(a), 12, 20);
    ComplexityVerdict v3 = complexity_estimate(poincare_series(t, 10, 20));
    CHECK(v3.is_exact(2));
    CHECK(v3.fitted_degree == 1);

    // quadratic tail fed in directly
    PoincareData quad;
    quad.coeffs = {1, 4, 9, 16, 25, 36, 49, 64};
    quad.cutoff = 7;
    ComplexityVerdict v4 = complexity_estimate(quad);
    CHECK(v4.is_exact(3));
    CHECK(v4.fitted_degree == 2);

    PoincareData tiny;
    tiny.coeffs = {3, 3, 3};
    CHECK_THROWS_AS(complexity_estimate(tiny), std::invalid_argument);
}

TEST_CASE("complexity agrees between a complex and its syzygies") {
    AlgebraPtr a = ring_st();
    ResolutionResult r = minimal_free_resolution(residue_field(a), 8, 20);
    GradedModule c2 = syzygy_module(r, 2);
    ComplexityVerdict v = complexity_estimate(poincare_series(c2, 5, 20));
    CHECK(v.kind == ComplexityVerdict::Kind::kSuperEvidence);

    AlgebraPtr b = ring_xy();
    ResolutionResult rb = minimal_free_resolution(residue_field(b), 10, 20);
    GradedModule c1 = syzygy_module(rb, 1);
    CHECK(complexity_estimate(poincare_series(c1, 10, 20)).is_exact(0));
}

TEST_CASE("depth drops by projective dimension for terminating resolutions") {
    AlgebraPtr a = ring_xy();
    DepthValue dr = depth(free_point(a), 10, 20);
    REQUIRE(!dr.infinite);

    GradedModule k = residue_field(a);
    CHECK(projective_dimension(k, 10, 20) == DimensionVerdict::finite(2));
    CHECK(depth(k, 10, 20).value == dr.value - 2);

    GradedModule q = quotient_by_var(a, 0);
    CHECK(projective_dimension(q, 10, 20) == DimensionVerdict::finite(1));
    CHECK(depth(q, 10, 20).value == dr.value - 1);
}
