#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cidim/verify.hpp"

using namespace cidim;

namespace {

constexpr uint64_t kSeed = 0xC1D1F0;

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

std::string joined_notes(const CaseResult& r) {
    std::ostringstream out;
    for (const auto& n : r.notes) out << n << "; ";
    return out.str();
}

}  // namespace

TEST_CASE("generators produce valid objects") {
    Rng rng(kSeed);
    for (const auto& a : algebra_pool(101)) {
        for (int t = 0; t < 4; ++t) {
            GradedModule m = random_module(a, rng, 2);
            CHECK(m.gens.rank() >= 1);
            CHECK(m.rels.rows() == m.gens.rank());
            Complex x = random_complex(a, rng, 20);
            CHECK(x.hi() - x.lo() <= 2);
            SesInstance ses = random_ses(a, rng, 20);
            CHECK(ses_exact(ses.incl, ses.proj, 20));
        }
    }
}

TEST_CASE("generators are deterministic for a fixed seed") {
    auto r1 = criterion_poincare_identities(kSeed);
    auto r2 = criterion_poincare_identities(kSeed);
    CHECK(r1.pass == r2.pass);
    CHECK(r1.notes == r2.notes);
}

TEST_CASE("finite gdim and pci verdicts satisfy the depth difference formula") {
    Rng rng(kSeed + 1);
    auto pool = algebra_pool(101);
    int finite_seen = 0;
    for (int t = 0; t < 10; ++t) {
        const auto& a = pool[t % pool.size()];
        bool socle = a->nvars() == 2 && a->artinian() && a->top_degree() == 1;
        Complex x = Complex::of_module(random_module(a, rng, socle ? 1 : 2));
        for (auto v : {g_dimension(x, 6, 20, 4), pci_dimension(x, 6, 20, 4)}) {
            if (!v.is_finite()) continue;
            CAPTURE(a->describe());
            CHECK(ab_consistent(x, v, 6, 20));
            ++finite_seen;
        }
    }
    CHECK(finite_seen >= 5);
}

TEST_CASE("pci adds across a derived tensor with a finite free factor") {
    Rng rng(kSeed + 2);
    auto pool = algebra_pool(101);
    int checked = 0;
    for (int t = 0; t < 8; ++t) {
        const auto& a = pool[t % pool.size()];
        bool socle = a->nvars() == 2 && a->artinian() && a->top_degree() == 1;
        Complex x = Complex::of_module(random_module(a, rng, socle ? 1 : 2));
        int s = static_cast<int>(rng() % 3);
        int tw = static_cast<int>(rng() % 2);
        Complex p = suspend(
            Complex::of_module(GradedModule::free_module({a, {tw, tw + 1}})), s);

        auto px = pci_dimension(x, 6, 20, 4);
        auto pp = pci_dimension(p, 6, 20, 4);
        if (!px.is_finite() || !pp.is_finite()) continue;

        Complex tensor = derived_tensor(x, p, 8, 20);
        // the honest homology of the product lives at or below sup(X)+sup(P);
        // everything above is resolution-truncation noise
        Complex tt = truncate_soft_above(tensor, s);
        auto pt = pci_dimension(tt, 8, 20, 4);
        CAPTURE(a->describe());
        CHECK(pt == DimensionVerdict::finite(px.value + pp.value));
        ++checked;
    }
    CHECK(checked >= 4);
}

TEST_CASE("pci drops by inf of the source across derived hom") {
    Rng rng(kSeed + 3);
    auto pool = algebra_pool(101);
    int checked = 0;
    for (int t = 0; t < 8; ++t) {
        const auto& a = pool[t % pool.size()];
        Complex x = random_complex(a, rng, 20);
        while (!x.all_free()) x = random_complex(a, rng, 20);
        int s = static_cast<int>(rng() % 3);
        Complex p =
            suspend(Complex::of_module(GradedModule::free_module({a, {0}})), s);

        auto px = pci_dimension(x, 6, 20, 4);
        auto hs = homology_spread(p, 20);
        if (!px.is_finite() || !hs.inf) continue;

        Complex hom = derived_hom(p, x, 6, 20);
        auto ph = pci_dimension(hom, 6, 20, 4);
        CAPTURE(a->describe());
        CHECK(ph == DimensionVerdict::finite(px.value - *hs.inf));
        ++checked;
    }
    CHECK(checked >= 4);
}

TEST_CASE("dimensions are invariant under truncation quasi-isomorphisms") {
    Rng rng(kSeed + 4);
    auto pool = algebra_pool(101);
    int compared = 0;
    for (int t = 0; t < 8; ++t) {
        const auto& a = pool[t % pool.size()];
        bool socle = a->nvars() == 2 && a->artinian() && a->top_degree() == 1;
        Complex x = random_complex(a, rng, 20);
        if (socle) continue;
        auto hs = homology_spread(x, 20);
        if (!hs.sup) continue;

        // soft truncation at the top of homology is a quasi-isomorph
        Complex y = truncate_soft_above(x, *hs.sup);
        CAPTURE(a->describe());
        CHECK(projective_dimension(y, 6, 20) == projective_dimension(x, 6, 20));
        CHECK(g_dimension(y, 6, 20, 4) == g_dimension(x, 6, 20, 4));
        CHECK(pci_dimension(y, 6, 20, 4) == pci_dimension(x, 6, 20, 4));
        CHECK(ci_dim_upper(y, {}, 6, 20).dim == ci_dim_upper(x, {}, 6, 20).dim);

        // a complete resolution is a free quasi-isomorph
        auto r = minimal_free_resolution(x, 6, 20);
        if (r.complete) {
            CHECK(projective_dimension(r.p, 6, 20) == projective_dimension(x, 6, 20));
            CHECK(pci_dimension(r.p, 6, 20, 4) == pci_dimension(x, 6, 20, 4));
        }
        ++compared;
    }
    CHECK(compared >= 4);
}

TEST_CASE("acceptance case names and ids are stable") {
    auto rs = run_acceptance(kSeed);
    REQUIRE(rs.size() == 8);
    for (size_t i = 0; i < rs.size(); ++i) CHECK(rs[i].id == static_cast<int>(i) + 1);
    for (const auto& r : rs) {
        CAPTURE(r.name);
        INFO(joined_notes(r));
        CHECK(r.pass);
    }
}
