#include "cidim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>

namespace cidim {

namespace {

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

// Deterministic across platforms, unlike the distribution adaptors.
int pick(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

Scalar pick_coeff(Rng& rng, const PrimeField& f) {
    return 1 + static_cast<Scalar>(rng() % (f.characteristic() - 1));
}

RingElem random_homog(const AlgebraPtr& a, Rng& rng, int deg) {
    if (deg < 0) return RingElem::zero(a);
    std::vector<Term> ts;
    for (const Monomial& m : a->basis(deg))
        if (rng() % 2) ts.push_back({m, pick_coeff(rng, a->field())});
    return RingElem::normal_form(a, std::move(ts));
}

bool is_socle_ring(const GradedAlgebra& a) {
    return a.nvars() == 2 && a.artinian() && a.top_degree() == 1;
}

Complex ring_complex(const AlgebraPtr& a) {
    return Complex::of_module(GradedModule::free_module({a, {0}}));
}

struct Checker {
    bool ok = true;
    std::vector<std::string> notes;
    void check(bool c, const std::string& what) {
        if (!c) {
            ok = false;
            notes.push_back(what);
        }
    }
};

CaseResult finish(int id, std::string name, Checker& c,
                  std::chrono::steady_clock::time_point t0, double budget) {
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget > 0 && secs > budget)
        c.check(false, "over the " + std::to_string(budget) + "s time budget");
    return CaseResult{id, std::move(name), c.ok, secs, std::move(c.notes)};
}

// A truncated resolution is only exact below its cutoff, so the cone of
// sigma may carry homology at the top; a complete one must be a genuine
// quasi-iso everywhere.
bool resolves_through(const ResolutionResult& r, const Morphism& sigma, int degree_cap) {
    if (r.complete) return is_quasi_iso(sigma, degree_cap).yes;
    for (const auto& [level, total] : homology_totals(cone(sigma), degree_cap))
        if (level < r.cutoff) return false;
    return true;
}

// First-membership scan over the syzygies of a strict (non-minimal)
// resolution; oracles recompute from scratch on each cokernel.
DimensionVerdict strict_class_dim(const Complex& x, const ResolvingClassOracle& cls,
                                  int cutoff, int degree_cap) {
    auto hs = homology_spread(x, degree_cap);
    if (!hs.sup) return DimensionVerdict::minus_infinity();
    auto s = strict_resolution(x, cutoff, degree_cap);
    int hi = s.complete ? s.p.hi() : cutoff - 1;
    for (int n = *hs.sup; n <= hi; ++n)
        if (cls.test(syzygy_module(s, n), nullptr).member)
            return DimensionVerdict::finite(n);
    return DimensionVerdict::at_least(hi + 1);
}

}  // namespace

// ---- seeded generators --------------------------------------------------

std::vector<AlgebraPtr> headline_algebras(Scalar p) {
    return {make_algebra(p, {"x"}, {mono({2})}),
            make_algebra(p, {"x", "y"}, {}),
            make_algebra(p, {"s", "t"}, {mono({2, 0}), mono({1, 1}), mono({0, 2})})};
}

std::vector<AlgebraPtr> algebra_pool(Scalar p) {
    auto v = headline_algebras(p);
    v.push_back(make_algebra(p, {"x", "y"}, {mono({2, 0}), mono({0, 3})}));
    v.push_back(make_algebra(p, {"x"}, {mono({3})}));
    return v;
}

GradedModule random_module(const AlgebraPtr& a, Rng& rng, int max_gens) {
    int g = pick(rng, 1, max_gens);
    std::vector<int> degs;
    for (int i = 0; i < g; ++i) degs.push_back(pick(rng, 0, 2));
    std::sort(degs.begin(), degs.end());
    FreeModule f{a, degs};

    int nrel = pick(rng, 0, max_gens);
    RingMatrix rels(a, g, nrel);
    for (int j = 0; j < nrel; ++j) {
        int d = degs[pick(rng, 0, g - 1)] + pick(rng, 1, 2);
        for (int i = 0; i < g; ++i) rels.at(i, j) = random_homog(a, rng, d - degs[i]);
    }
    return GradedModule::make(std::move(f), std::move(rels));
}

Complex random_complex(const AlgebraPtr& a, Rng& rng, int degree_cap) {
    int kind = pick(rng, 0, 3);
    if (kind == 0) return Complex::of_module(random_module(a, rng, 2));
    if (kind == 1)
        return suspend(Complex::of_module(random_module(a, rng, 2)),
                       pick(rng, 0, 1) ? 1 : -1);
    if (kind == 2) {
        int r0 = pick(rng, 1, 2), r1 = pick(rng, 1, 2);
        std::vector<int> d0, d1;
        for (int i = 0; i < r0; ++i) d0.push_back(pick(rng, 0, 1));
        for (int i = 0; i < r1; ++i) d1.push_back(pick(rng, 1, 2));
        RingMatrix d(a, r0, r1);
        for (int i = 0; i < r0; ++i)
            for (int j = 0; j < r1; ++j) d.at(i, j) = random_homog(a, rng, d1[j] - d0[i]);
        return Complex::make(a, 0,
                             {GradedModule::free_module({a, d0}),
                              GradedModule::free_module({a, d1})},
                             {d});
    }
    int gens = is_socle_ring(*a) ? 1 : 2;
    return minimal_free_resolution(random_module(a, rng, gens), 2, degree_cap).p;
}

Morphism random_chain_map(const Complex& x, const Complex& y, Rng& rng) {
    auto basis = chain_map_basis(x, y);
    if (basis.empty()) return Morphism::zero(x, y);
    std::vector<Scalar> cs;
    for (size_t k = 0; k < basis.size(); ++k)
        cs.push_back(static_cast<Scalar>(rng() % x.algebra()->characteristic()));
    std::vector<RingMatrix> maps;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        RingMatrix m(x.algebra(), y.at(i).gens.rank(), x.at(i).gens.rank());
        for (size_t k = 0; k < basis.size(); ++k) {
            if (cs[k] == 0) continue;
            RingMatrix piece = basis[k].map_at(i).scaled(cs[k]);
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) m.at(r, c) = m.at(r, c) + piece.at(r, c);
        }
        maps.push_back(std::move(m));
    }
    return Morphism::make(x, y, x.lo(), std::move(maps));
}

SesInstance random_ses(const AlgebraPtr& a, Rng& rng, int degree_cap) {
    int shift = pick(rng, 0, 2) == 0 ? 1 : 0;
    int max_gens = is_socle_ring(*a) ? 1 : 2;
    Morphism incl = Morphism::zero(Complex::zero_complex(a), Complex::zero_complex(a));
    Morphism proj = incl;
    if (pick(rng, 0, 1)) {
        // split: 0 -> A -> A (+) C -> C -> 0
        GradedModule ma = random_module(a, rng, max_gens);
        GradedModule mc = random_module(a, rng, max_gens);
        GradedModule mb = direct_sum(ma, mc);
        RingMatrix mi(a, mb.gens.rank(), ma.gens.rank());
        for (int i = 0; i < ma.gens.rank(); ++i) mi.at(i, i) = RingElem::unit(a);
        RingMatrix mp(a, mc.gens.rank(), mb.gens.rank());
        for (int i = 0; i < mc.gens.rank(); ++i)
            mp.at(i, ma.gens.rank() + i) = RingElem::unit(a);
        incl = Morphism::make(Complex::of_module(ma), Complex::of_module(mb), 0, {mi});
        proj = Morphism::make(Complex::of_module(mb), Complex::of_module(mc), 0, {mp});
    } else {
        // syzygy sequence: 0 -> C_1 -> F_0 -> M -> 0
        GradedModule m = random_module(a, rng, max_gens);
        auto r = minimal_free_resolution(m, 2, degree_cap);
        GradedModule c1 = syzygy_module(r, 1);
        Complex f0 = Complex::of_module(GradedModule::free_module({a, r.p.at(0).gens.degs}));
        incl = Morphism::make(Complex::of_module(c1), f0, 0, {r.p.diff(1)});
        proj = Morphism::make(f0, Complex::of_module(m), 0, {r.sigma.map_at(0)});
    }
    if (shift) {
        auto lift = [&](const Morphism& f) {
            std::vector<RingMatrix> maps;
            for (int i = f.src().lo(); i <= f.src().hi(); ++i) maps.push_back(f.map_at(i));
            return Morphism::make(suspend(f.src(), shift), suspend(f.dst(), shift),
                                  f.src().lo() + shift, std::move(maps));
        };
        incl = lift(incl);
        proj = lift(proj);
    }
    return SesInstance{std::move(incl), std::move(proj)};
}

// ---- criterion 1 --------------------------------------------------------

CaseResult criterion_socle_example() {
    auto t0 = std::chrono::steady_clock::now();
    Checker c;
    auto a = headline_algebras(101)[2];  // GF(101)[s,t]/(s^2,st,t^2)
    RingMatrix d(a, 1, 1);
    d.at(0, 0) = RingElem::variable(a, 0);
    Complex x = Complex::make(
        a, 0,
        {GradedModule::free_module({a, {0}}), GradedModule::free_module({a, {1}})}, {d});

    auto pd = projective_dimension(x, 10, 20);
    c.check(pd == DimensionVerdict::finite(1) && pd.certified,
            "pd of the two-term complex should be exactly 1, got " + pd.str());

    auto h0 = homology_module(x, 0, 20);
    auto t_h0 = dim_table(h0.mod, 3);
    c.check(t_h0 == std::map<int, int>{{0, 1}, {1, 1}},
            "H0 should have k-dimensions 1,1 in degrees 0,1");

    auto h1 = homology_module(x, 1, 20);
    auto t_h1 = dim_table(h1.mod, 3);
    c.check(t_h1 == std::map<int, int>{{2, 2}},
            "H1 should have k-dimensions 0,2 in degrees 1,2");

    auto r1 = minimal_free_resolution(h1.mod, 8, 20);
    for (int n = 0; n <= 8; ++n)
        c.check(r1.betti(n) == (1 << (n + 1)),
                "H1 Betti number at level " + std::to_string(n) + " should be " +
                    std::to_string(1 << (n + 1)) + ", got " + std::to_string(r1.betti(n)));

    GradedModule k = residue_field(a);
    const GradedModule* mods[3] = {&h0.mod, &h1.mod, &k};
    const char* names[3] = {"H0", "H1", "k"};
    for (int i = 0; i < 3; ++i) {
        auto cx = complexity_estimate(poincare_series(*mods[i], 8, 20));
        c.check(cx.kind == ComplexityVerdict::Kind::kSuperEvidence,
                std::string(names[i]) + " complexity should read superpolynomial-evidence, got " +
                    cx.str());
    }
    for (int i = 0; i < 2; ++i) {
        auto v = ci_star_membership(*mods[i], 6, 6, 20);
        c.check(!v.member, std::string(names[i]) + " should fail the bounded-growth class test");
    }
    return finish(1, "socle ring two-term complex: homology, doubling Betti numbers", c, t0,
                  5.0);
}

// ---- criterion 2 --------------------------------------------------------

CaseResult criterion_hypersurface_residue_field() {
    auto t0 = std::chrono::steady_clock::now();
    Checker c;
    auto a = headline_algebras(101)[0];  // GF(101)[x]/(x^2)
    GradedModule k = residue_field(a);

    auto r = minimal_free_resolution(k, 10, 20);
    c.check(r.betti_row() == std::vector<int>(11, 1), "Betti row of k should be all ones");

    auto cx = complexity_estimate(poincare_series(k, 10, 20));
    c.check(cx.is_exact(1), "complexity of k should be exactly 1, got " + cx.str());

    auto gd = g_dimension(k, 8, 20, 6);
    c.check(gd == DimensionVerdict::finite(0) && gd.certified,
            "gdim of k should be 0, got " + gd.str());
    auto pc = pci_dimension(k, 8, 20, 6);
    c.check(pc == DimensionVerdict::finite(0), "pci of k should be 0, got " + pc.str());

    DeformationSpec hyp{{"x"}, {}, {mono({2})}};
    auto cb = ci_dim_upper(k, {hyp}, 8, 20);
    c.check(cb.dim == DimensionVerdict::finite(0),
            "ci upper bound for k should be 0, got " + cb.dim.str());

    auto dk = depth(k, 8, 20);
    auto dr = depth(ring_complex(a), 8, 20);
    c.check(!dk.infinite && dk.value == 0 && !dr.infinite && dr.value == 0,
            "depths of R and k should both be 0");
    Complex kx = Complex::of_module(k);
    c.check(ab_consistent(kx, gd, 8, 20) && ab_consistent(kx, pc, 8, 20) &&
                ab_consistent(kx, cb.dim, 8, 20),
            "finite verdicts should match depth R - depth k = 0");

    auto h = hierarchy_check(k, {}, 10, 20, 6);
    c.check(h.render() == "gdim 0 = pci 0 = ci 0 <= pd >= 10",
            "hierarchy chain mismatch: " + h.render());
    c.check(h.chain_ok && h.equality_ok, "hierarchy consistency flags");
    return finish(2, "hypersurface residue field: unit Betti row and dimension chain", c, t0,
                  5.0);
}

// ---- criterion 3 --------------------------------------------------------

CaseResult criterion_polynomial_residue_field() {
    auto t0 = std::chrono::steady_clock::now();
    Checker c;
    auto a = headline_algebras(101)[1];  // GF(101)[x,y]
    GradedModule k = residue_field(a);

    auto r = minimal_free_resolution(k, 8, 20);
    c.check(r.complete && r.betti_row() == std::vector<int>{1, 2, 1},
            "Betti row of k should be 1,2,1");

    auto pd = projective_dimension(k, 8, 20);
    auto gd = g_dimension(k, 8, 20, 6);
    auto pc = pci_dimension(k, 8, 20, 6);
    auto cb = ci_dim_upper(k, {}, 8, 20);
    for (const auto* v : {&pd, &gd, &pc, &cb.dim})
        c.check(*v == DimensionVerdict::finite(2),
                "all four dimensions of k should be 2, got " + v->str());

    auto dr = depth(ring_complex(a), 8, 20);
    c.check(!dr.infinite && dr.value == 2, "depth of the polynomial ring should be 2");

    auto kz = koszul_complex(a);
    auto totals = homology_totals(kz.cx, 20);
    c.check(totals == std::map<int, int>{{0, 1}},
            "Koszul complex on x,y should be exact in positive levels with H0 = k");
    return finish(3, "polynomial ring residue field: Koszul data and dimensions", c, t0, 5.0);
}

// ---- criterion 4 --------------------------------------------------------

CaseResult criterion_poincare_identities(uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    Checker c;
    Rng rng(seed);
    auto rings = headline_algebras(101);

    // products: P_{X (x) Y} = P_X * P_Y coefficientwise through level 8
    for (int t = 0; t < 21; ++t) {
        const auto& a = rings[t % 3];
        Complex x = ring_complex(a), y = x;
        if (is_socle_ring(*a)) {
            // keep one factor of finite projective dimension: the doubling
            // ring makes unrestricted pairs blow past the level-8 window
            x = random_complex(a, rng, 20);
            while (!x.all_free()) x = random_complex(a, rng, 20);
            y = Complex::of_module(random_module(a, rng, 1));
        } else {
            x = random_complex(a, rng, 20);
            y = Complex::of_module(random_module(a, rng, 2));
        }
        auto pcheck = poincare_product_check(x, y, 8, 20);
        c.check(pcheck.ok, "product series mismatch on pair " + std::to_string(t) + " over " +
                               a->describe());
    }

    // syzygy shift: the Betti tail of X restarts as the Betti row of C_n
    for (int t = 0; t < 9; ++t) {
        const auto& a = rings[t % 3];
        GradedModule m = random_module(a, rng, is_socle_ring(*a) ? 1 : 3);
        auto r = minimal_free_resolution(m, 7, 20);
        int top = r.complete ? r.p.hi() : 6;
        for (int n = 0; n <= std::min(2, top); ++n) {
            GradedModule cn = syzygy_module(r, n);
            auto rn = minimal_free_resolution(cn, 7 - n, 20);
            int jhi = std::min(rn.complete ? rn.p.hi() : 7 - n, top - n);
            for (int j = 0; j <= jhi; ++j)
                c.check(rn.betti(j) == r.betti(n + j),
                        "shift identity fails on instance " + std::to_string(t) + " at n=" +
                            std::to_string(n) + ", j=" + std::to_string(j));
            if (rn.complete && r.complete)
                c.check(rn.p.hi() == std::max(top - n, 0),
                        "syzygy resolution length mismatch on instance " + std::to_string(t));
        }
    }
    return finish(4, "Poincare series: product rule and syzygy shift identity", c, t0, 0);
}

// ---- criterion 5 --------------------------------------------------------

CaseResult criterion_syzygy_formulas(uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    Checker c;
    Rng rng(seed);
    auto pool = algebra_pool(101);

    int instances = 0;
    for (int t = 0; t < 22; ++t) {
        const auto& a = pool[t % pool.size()];
        bool socle = is_socle_ring(*a);
        Complex x = (t % 4 == 3) ? random_complex(a, rng, 20)
                                 : Complex::of_module(random_module(a, rng, socle ? 1 : 2));
        ++instances;
        std::string tag = "instance " + std::to_string(t) + " over " + a->describe();

        auto fo = free_oracle(5, 20);
        auto ci = ci_star_oracle(4, 6, 20);

        // the free class reproduces pd, the reflexive class reproduces gdim
        auto bf = b_dimension(x, fo, 6, 20);
        auto pd = projective_dimension(x, 6, 20);
        c.check(bf == pd, "free-class dimension disagrees with pd on " + tag);
        auto bc = b_dimension(x, ci, 6, 20);
        auto pc = pci_dimension(x, 6, 20, 4);
        c.check(bc == pc, "bounded-growth class disagrees with pci on " + tag);
        DimensionVerdict gd = DimensionVerdict::at_least(0);
        if (!socle) {
            auto tr = totally_reflexive_oracle(4, 20);
            auto bt = b_dimension(x, tr, 6, 20);
            gd = g_dimension(x, 6, 20, 4);
            c.check(bt == gd, "reflexive-class dimension disagrees with gdim on " + tag);
        }

        // verdict agreement when the scan runs over a strict resolution
        auto sf = strict_class_dim(x, fo, 6, 20);
        c.check(sf == pd, "strict-resolution free scan disagrees with pd on " + tag);
        if (!socle) {
            auto st = strict_class_dim(x, totally_reflexive_oracle(4, 20), 6, 20);
            c.check(st == gd, "strict-resolution reflexive scan disagrees with gdim on " + tag);
        }

        // max-formula on syzygies, wherever both sides are determinate
        auto hs = homology_spread(x, 20);
        if (!hs.sup) continue;
        auto r = minimal_free_resolution(x, 6, 20);
        int top = r.complete ? r.p.hi() : 5;
        for (int n = *hs.sup + 1; n <= std::min(*hs.sup + 2, top); ++n) {
            GradedModule cn = syzygy_module(r, n);
            Complex cnx = Complex::of_module(cn);
            struct Row {
                const char* label;
                DimensionVerdict whole;
                DimensionVerdict part;
            };
            std::vector<Row> rows;
            rows.push_back({"free", pd, b_dimension(cnx, fo, 6 - n, 20)});
            rows.push_back({"bounded-growth", pc, b_dimension(cnx, ci, 6 - n, 20)});
            if (!socle)
                rows.push_back(
                    {"reflexive", gd,
                     b_dimension(cnx, totally_reflexive_oracle(4, 20), 6 - n, 20)});
            for (const auto& row : rows) {
                if (!row.whole.is_finite() || !row.part.determinate()) continue;
                int want = std::max(0, row.whole.value - n);
                c.check(row.part == DimensionVerdict::finite(want),
                        std::string(row.label) + " max-formula fails at n=" +
                            std::to_string(n) + " on " + tag + ": got " + row.part.str() +
                            ", want " + std::to_string(want));
            }
        }
    }
    c.check(instances >= 20, "need at least 20 seeded instances");
    return finish(5, "class dimensions: oracle agreement and the syzygy max-formula", c, t0, 0);
}

// ---- criterion 6 --------------------------------------------------------

CaseResult criterion_structural_suite(uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    Checker c;
    Rng rng(seed);
    auto pool = algebra_pool(101);

    // differentials square to zero on everything we can build
    std::vector<Complex> built;
    for (int t = 0; t < 12; ++t) {
        const auto& a = pool[t % pool.size()];
        Complex x = random_complex(a, rng, 20);
        for (int i = x.lo(); i <= x.hi() + 1; ++i) {
            if (x.all_free())
                c.check(x.diff(i).times(x.diff(i + 1)).is_zero(),
                        "differential square nonzero at level " + std::to_string(i));
        }
        std::vector<GradedModule> comps;
        std::vector<RingMatrix> diffs;
        for (int i = x.lo(); i <= x.hi(); ++i) comps.push_back(x.at(i));
        for (int i = x.lo() + 1; i <= x.hi(); ++i) diffs.push_back(x.diff(i));
        try {
            Complex::make(x.algebra(), x.lo(), std::move(comps), std::move(diffs));
        } catch (const std::exception& e) {
            c.check(false, std::string("rebuild validation failed: ") + e.what());
        }
        built.push_back(std::move(x));
    }

    // soft truncations against the homology window are quasi-isomorphisms
    int truncations = 0;
    for (const Complex& x : built) {
        if (!x.algebra()->artinian()) continue;
        auto hs = homology_spread(x, 20);
        if (!hs.sup) continue;
        auto prj = soft_above_projection(x, *hs.sup);
        auto qp = is_quasi_iso(prj, 20);
        c.check(qp.yes && qp.certified, "soft upper truncation should be a certified quasi-iso");
        if (*hs.inf > x.lo()) {
            auto inc = soft_below_inclusion(x, *hs.inf, 20);
            auto qi = is_quasi_iso(inc, 20);
            c.check(qi.yes && qi.certified,
                    "soft lower truncation should be a certified quasi-iso");
        }
        ++truncations;
    }
    c.check(truncations >= 4, "too few truncation instances");

    // cone acyclic exactly when the map is a quasi-isomorphism
    int cones = 0;
    for (int t = 0; cones < 50; ++t) {
        const auto& a = pool[t % pool.size()];
        Complex x = random_complex(a, rng, 20);
        auto r = minimal_free_resolution(x, 4, 20);
        std::vector<Morphism> maps;
        maps.push_back(Morphism::identity(x));
        maps.push_back(r.sigma);
        maps.push_back(Morphism::zero(x, x));
        maps.push_back(random_chain_map(r.p, r.p, rng));
        maps.push_back(compose(r.sigma, random_chain_map(r.p, r.p, rng)));
        for (const Morphism& f : maps) {
            bool qis = is_quasi_iso(f, 20).yes;
            bool acyclic = homology_totals(cone(f), 20).empty();
            c.check(qis == acyclic, std::string("cone acyclicity vs quasi-iso mismatch (") +
                                        (qis ? "qis" : "not qis") + ") over " + a->describe());
            ++cones;
        }
    }

    // strict resolutions stay surjective in every internal degree
    for (int t = 0; t < 8; ++t) {
        const auto& a = pool[t % pool.size()];
        Complex x = random_complex(a, rng, 20);
        auto s = strict_resolution(x, 4, 20);
        c.check(levelwise_surjective(s.sigma, 20), "strict resolution is not levelwise onto");
        c.check(resolves_through(s, s.sigma, 20),
                "strict resolution is not exact below its cutoff");
    }

    // resolved short exact sequences keep exact rows and quasi-iso verticals
    for (int t = 0; t < 10; ++t) {
        const auto& a = pool[t % pool.size()];
        SesInstance ses = random_ses(a, rng, 20);
        c.check(ses_exact(ses.incl, ses.proj, 20),
                "generated sequence is not degreewise exact");
        auto sr = ses_resolution(ses.incl, ses.proj, 4, 20);
        c.check(ses_exact(sr.row_incl, sr.row_proj, 20),
                "resolved row is not degreewise exact");
        c.check(resolves_through(sr.rx, sr.rx.sigma, 20) &&
                    resolves_through(sr.ry, sr.ry.sigma, 20) &&
                    resolves_through(sr.rz, sr.rz.sigma, 20),
                "a vertical of the resolved diagram is not exact below the cutoff");
    }

    // suspension adds n to every dimension
    for (int t = 0; t < 6; ++t) {
        const auto& a = pool[t % 3 == 1 ? 1 : t % pool.size()];
        GradedModule m = random_module(a, rng, is_socle_ring(*a) ? 1 : 2);
        Complex x = Complex::of_module(m);
        Complex sx = suspend(x, 2);
        struct Pair {
            const char* label;
            DimensionVerdict base, lifted;
        };
        std::vector<Pair> pairs;
        pairs.push_back({"pd", projective_dimension(x, 6, 20), projective_dimension(sx, 8, 20)});
        pairs.push_back({"gdim", g_dimension(x, 6, 20, 4), g_dimension(sx, 8, 20, 4)});
        pairs.push_back({"pci", pci_dimension(x, 6, 20, 4), pci_dimension(sx, 8, 20, 4)});
        pairs.push_back({"ci", ci_dim_upper(x, {}, 6, 20).dim, ci_dim_upper(sx, {}, 8, 20).dim});
        for (const auto& pr : pairs) {
            if (!pr.base.is_finite()) continue;
            c.check(pr.lifted == pr.base.shifted(2),
                    std::string(pr.label) + " does not shift by 2 under suspension: " +
                        pr.base.str() + " vs " + pr.lifted.str());
        }
    }
    // and the zero complex stays at minus infinity
    Complex z = Complex::zero_complex(pool[0]);
    c.check(projective_dimension(suspend(z, 3), 4, 20).is_minus_infinity(),
            "suspended zero complex should keep pd = -inf");

    return finish(6, "structural suite: squares, truncations, cones, strict rows, suspension",
                  c, t0, 60.0);
}

// ---- criterion 7 --------------------------------------------------------

CaseResult criterion_two_of_three(uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    Checker c;
    Rng rng(seed);
    auto a = headline_algebras(101)[0];  // GF(101)[x]/(x^2)

    int usable = 0;
    for (int t = 0; t < 12; ++t) {
        SesInstance ses = random_ses(a, rng, 20);
        c.check(ses_exact(ses.incl, ses.proj, 20), "sequence " + std::to_string(t) +
                                                       " is not degreewise exact");
        DimensionVerdict v[3] = {pci_dimension(ses.incl.src(), 8, 20, 5),
                                 pci_dimension(ses.incl.dst(), 8, 20, 5),
                                 pci_dimension(ses.proj.dst(), 8, 20, 5)};
        for (int third = 0; third < 3; ++third) {
            const DimensionVerdict& u = v[(third + 1) % 3];
            const DimensionVerdict& w = v[(third + 2) % 3];
            if (!u.is_finite() || !w.is_finite()) continue;
            int bound = std::max(u.value, w.value) + 1;
            bool fits = v[third].is_minus_infinity() ||
                        (v[third].is_finite() && v[third].value <= bound);
            c.check(fits, "third term of sequence " + std::to_string(t) +
                              " exceeds max+1: " + v[third].str() + " vs bound " +
                              std::to_string(bound));
            ++usable;
        }
    }
    c.check(usable >= 10, "need at least 10 usable short exact sequences");
    return finish(7, "two-of-three bound for pci along short exact sequences", c, t0, 0);
}

// ---- criterion 8 --------------------------------------------------------

CaseResult criterion_ci_detection() {
    auto t0 = std::chrono::steady_clock::now();
    Checker c;
    struct Row {
        AlgebraPtr a;
        bool ci;
    };
    std::vector<Row> rows;
    rows.push_back({make_algebra(101, {"x"}, {mono({2})}), true});
    rows.push_back({make_algebra(101, {"x", "y"}, {}), true});
    rows.push_back({make_algebra(101, {"x", "y"}, {mono({2, 0}), mono({0, 3})}), true});
    rows.push_back(
        {make_algebra(101, {"s", "t"}, {mono({2, 0}), mono({1, 1}), mono({0, 2})}), false});

    for (const Row& row : rows) {
        c.check(row.a->is_complete_intersection() == row.ci,
                "intersection detection wrong for " + row.a->describe());
        auto pc = pci_dimension(residue_field(row.a), 6, 20, 4);
        if (row.ci)
            c.check(pc.is_finite(), "pci of k should be finite over " + row.a->describe() +
                                        ", got " + pc.str());
        else
            c.check(pc == DimensionVerdict::at_least(6),
                    "pci of k should be >= cutoff over " + row.a->describe() + ", got " +
                        pc.str());
    }
    return finish(8, "complete intersection detection against residue field verdicts", c, t0,
                  0);
}

// ---- driver -------------------------------------------------------------

std::vector<CaseResult> run_acceptance(uint64_t seed) {
    std::vector<CaseResult> out;
    out.push_back(criterion_socle_example());
    out.push_back(criterion_hypersurface_residue_field());
    out.push_back(criterion_polynomial_residue_field());
    out.push_back(criterion_poincare_identities(seed + 4 * 7919));
    out.push_back(criterion_syzygy_formulas(seed + 5 * 7919));
    out.push_back(criterion_structural_suite(seed + 6 * 7919));
    out.push_back(criterion_two_of_three(seed + 7 * 7919));
    out.push_back(criterion_ci_detection());
    return out;
}

std::string render_results(const std::vector<CaseResult>& results) {
    std::ostringstream out;
    size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    int passed = 0;
    for (const auto& r : results) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << std::left
            << std::setw(static_cast<int>(width)) << r.name << "  (" << secs << ")\n";
        if (!r.pass)
            for (const auto& n : r.notes) out << "      - " << n << "\n";
        passed += r.pass ? 1 : 0;
    }
    out << passed << "/" << results.size() << " criteria passed\n";
    return out.str();
}

}  // namespace cidim
