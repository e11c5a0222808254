#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cidim/ring.hpp"

using namespace cidim;

namespace {

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

AlgebraPtr dual_numbers_pair() {  // GF(101)[s,t]/(s^2, s*t, t^2)
    return make_algebra(101, {"s", "t"},
                        {mono({2, 0}), mono({1, 1}), mono({0, 2})});
}

}  // namespace

TEST_CASE("monomial basics") {
    Monomial a = mono({2, 1});
    CHECK(a.degree() == 3);
    CHECK_FALSE(a.is_constant());
    CHECK(mono({0, 0}).is_constant());
    CHECK(lex_less(mono({1, 2}), mono({2, 0})));
    CHECK(lex_less(mono({2, 0}), mono({2, 1})));
    CHECK_FALSE(lex_less(a, a));
    CHECK(mono_mul(mono({1, 0}), mono({1, 2})) == mono({2, 2}));
    CHECK(mono_divides(mono({1, 1}), mono({2, 1})));
    CHECK_FALSE(mono_divides(mono({2, 1}), mono({1, 1})));
    CHECK(supports_disjoint(mono({2, 0, 0}), mono({0, 1, 1})));
    CHECK_FALSE(supports_disjoint(mono({1, 1, 0}), mono({0, 1, 1})));
}

TEST_CASE("quotient algebra pieces") {
    AlgebraPtr r = dual_numbers_pair();
    CHECK(r->nvars() == 2);
    CHECK(r->piece_dim(0) == 1);
    CHECK(r->piece_dim(1) == 2);
    CHECK(r->piece_dim(2) == 0);
    CHECK(r->piece_dim(-1) == 0);
    CHECK(r->artinian());
    CHECK(r->top_degree() == 1);
    CHECK_FALSE(r->is_complete_intersection());
    CHECK(r->describe() == "GF(101)[s,t]/(s^2, s*t, t^2)");

    auto b1 = r->basis(1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == mono({1, 0}));  // descending lex: s before t
    CHECK(b1[1] == mono({0, 1}));

    CHECK(r->in_ideal(mono({2, 1})));
    CHECK_FALSE(r->in_ideal(mono({0, 1})));
}

TEST_CASE("standard examples") {
    AlgebraPtr dual = make_algebra(101, {"x"}, {mono({2})});
    CHECK(dual->artinian());
    CHECK(dual->top_degree() == 1);
    CHECK(dual->is_complete_intersection());
    CHECK(dual->piece_dim(5) == 0);

    AlgebraPtr two_squares = make_algebra(101, {"x", "y"}, {mono({2, 0}), mono({0, 2})});
    CHECK(two_squares->artinian());
    CHECK(two_squares->top_degree() == 2);
    CHECK(two_squares->is_complete_intersection());
    CHECK(two_squares->piece_dim(2) == 1);  // xy

    AlgebraPtr axes = make_algebra(101, {"x", "y"}, {mono({1, 1})});
    CHECK_FALSE(axes->artinian());
    CHECK(axes->is_complete_intersection());
    CHECK(axes->piece_dim(1) == 2);
    CHECK(axes->piece_dim(7) == 2);  // x^7, y^7

    AlgebraPtr poly = make_algebra(101, {"x", "y", "z"}, {});
    CHECK_FALSE(poly->artinian());
    CHECK(poly->is_complete_intersection());
    CHECK(poly->piece_dim(3) == 10);
}

TEST_CASE("relation minimalization") {
    AlgebraPtr r = make_algebra(101, {"x", "y"},
                                {mono({2, 0}), mono({2, 1}), mono({0, 3}), mono({0, 3})});
    REQUIRE(r->relations().size() == 2);
    CHECK(r->relations()[0] == mono({2, 0}));
    CHECK(r->relations()[1] == mono({0, 3}));
}

TEST_CASE("ring element normal form") {
    AlgebraPtr r = dual_numbers_pair();
    RingElem s = RingElem::variable(r, 0);
    RingElem t = RingElem::variable(r, 1);
    RingElem sum = s + t;
    CHECK((sum * sum).is_zero());  // s^2 + 2st + t^2 = 0

    AlgebraPtr q = make_algebra(101, {"x", "y"}, {mono({2, 0}), mono({0, 2})});
    RingElem x = RingElem::variable(q, 0);
    RingElem y = RingElem::variable(q, 1);
    RingElem sq = (x + y) * (x + y);
    REQUIRE(sq.terms().size() == 1);
    CHECK(sq.terms()[0].m == mono({1, 1}));
    CHECK(sq.terms()[0].c == 2);
    CHECK(sq.is_homogeneous());
    CHECK(sq.degree_or(-7) == 2);
    CHECK(RingElem::zero(q).degree_or(-7) == -7);
    CHECK_FALSE((RingElem::unit(q) + x).is_homogeneous());

    CHECK((x - x).is_zero());
    CHECK((-x + x).is_zero());
    CHECK(x.scale(0).is_zero());
    CHECK(x.times_mono(mono({1, 0})).is_zero());
    CHECK(x.times_mono(mono({0, 1})) == RingElem::monomial(q, mono({1, 1})));
    CHECK(RingElem::unit(q).constant_coeff() == 1);
    CHECK(x.constant_coeff() == 0);
}

TEST_CASE("like terms combine and cancel") {
    AlgebraPtr q = make_algebra(101, {"x", "y"}, {});
    RingElem e = RingElem::normal_form(
        q, {{mono({1, 0}), 50}, {mono({1, 0}), 51}, {mono({0, 1}), 3}});
    REQUIRE(e.terms().size() == 1);  // 50x + 51x = 101x = 0
    CHECK(e.terms()[0].m == mono({0, 1}));
}

TEST_CASE("monomial regular sequences over the polynomial ring") {
    CHECK(is_monomial_regular_sequence(2, {mono({2, 0}), mono({0, 2})}));
    CHECK(is_monomial_regular_sequence(3, {mono({1, 0, 0}), mono({0, 3, 2})}));
    CHECK_FALSE(is_monomial_regular_sequence(2, {mono({1, 1}), mono({0, 2})}));
    CHECK(is_monomial_regular_sequence(2, {}));
    CHECK_THROWS(is_monomial_regular_sequence(2, {mono({0, 0})}));
}

TEST_CASE("monomial regular sequences over a quotient") {
    GradedAlgebra q(101, {"x", "y", "z"}, {mono({2, 0, 0})});
    CHECK(is_monomial_regular_sequence(q, {mono({0, 2, 0})}));
    CHECK(is_monomial_regular_sequence(q, {mono({0, 2, 0}), mono({0, 0, 3})}));
    CHECK_FALSE(is_monomial_regular_sequence(q, {mono({0, 1, 0}), mono({0, 1, 1})}));
    CHECK_FALSE(is_monomial_regular_sequence(q, {mono({1, 0, 0})}));  // x kills x
    CHECK_FALSE(is_monomial_regular_sequence(q, {mono({0, 0, 1}), mono({1, 0, 0})}));
}

TEST_CASE("algebra identity") {
    AlgebraPtr a = dual_numbers_pair();
    AlgebraPtr b = dual_numbers_pair();
    CHECK(a->same_as(*b));
    AlgebraPtr c = make_algebra(101, {"s", "t"}, {mono({2, 0}), mono({0, 2})});
    CHECK_FALSE(a->same_as(*c));
    RingElem s = RingElem::variable(a, 0);
    RingElem u = RingElem::variable(c, 0);
    CHECK_THROWS(require_same_algebra(s.algebra(), u.algebra()));
}
