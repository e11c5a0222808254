#include "cidim/dimensions.hpp"

#include <algorithm>
#include <stdexcept>

namespace cidim {

namespace {

Mat mat_from_cols(int rows, const std::vector<Vec>& cols, const PrimeField& f) {
    Mat m(rows, static_cast<int>(cols.size()), f);
    for (size_t j = 0; j < cols.size(); ++j) m.set_col(static_cast<int>(j), cols[j]);
    return m;
}

Complex ring_complex(const AlgebraPtr& a) {
    return Complex::of_module(GradedModule::free_module({a, {0}}));
}

}  // namespace

// ---- duals --------------------------------------------------------------

DualData dual_module_data(const GradedModule& m, int degree_cap) {
    const AlgebraPtr& a = m.gens.alg;
    std::vector<int> dual_degs;
    for (int e : m.gens.degs) dual_degs.push_back(-e);
    FreeModule fstar{a, dual_degs};
    std::vector<int> dual_rel_degs;
    for (int d : m.rel_degs) dual_rel_degs.push_back(-d);
    FreeModule gstar{a, dual_rel_degs};

    RingMatrix at = m.rels.transpose();  // fstar -> gstar
    FreePieces fp(fstar), gp(gstar);
    auto kerfn = [&](int d) {
        return mat_from_cols(fp.dim(d), matrix_of(at, gp, fp, d).kernel(), a->field());
    };
    ScanWindow w = scan_window(*a, fstar.max_deg(), degree_cap);
    std::vector<SubmoduleGen> gens = minimal_generators(fp, kerfn, fstar.min_deg(), w.hi);
    GradedModule mod = presentation_of(fp, gens, degree_cap);
    return DualData{std::move(mod), std::move(fstar), std::move(gens), w.certified};
}

GradedModule dual_module(const GradedModule& m, int degree_cap) {
    return dual_module_data(m, degree_cap).mod;
}

// ---- total reflexivity --------------------------------------------------

namespace {

// First i in [1, w] with nonvanishing i-th derived Hom into the ring, if
// any. Cheap low levels are checked before resolving out to the full
// window, so common failures return quickly.
std::optional<int> first_nonvanishing_ext(const GradedModule& m, int w, int degree_cap,
                                          bool* certified) {
    const AlgebraPtr& a = m.gens.alg;
    int w1 = std::min(w, 2);
    for (int phase = 0; phase < 2; ++phase) {
        int lo = (phase == 0) ? 1 : w1 + 1;
        int hi = (phase == 0) ? w1 : w;
        if (lo > hi) continue;
        ResolutionResult r = minimal_free_resolution(m, hi + 1, degree_cap);
        if (certified) *certified = *certified && r.certified;
        std::map<int, int> t = homology_totals(hom_complex(r.p, ring_complex(a)).cx, degree_cap);
        int top_check = r.complete ? w : hi;
        for (int i = lo; i <= top_check; ++i)
            if (t.count(-i)) return i;
        if (r.complete) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

ReflexivityReport totally_reflexive_test(const GradedModule& m, int window, int degree_cap) {
    if (window < 1) throw std::invalid_argument("reflexivity: window must be positive");
    const AlgebraPtr& a = m.gens.alg;
    ReflexivityReport rep;
    rep.window = window;

    auto e1 = first_nonvanishing_ext(m, window, degree_cap, &rep.certified);
    if (e1) {
        rep.failure = "derived hom into the ring is nonzero in level -" + std::to_string(*e1);
        return rep;
    }
    rep.ext_vanishes = true;

    DualData d1 = dual_module_data(m, degree_cap);
    DualData d2 = dual_module_data(d1.mod, degree_cap);
    rep.certified = rep.certified && d1.certified && d2.certified;

    // natural comparison map, generator by generator
    RingMatrix b(a, d2.mod.gens.rank(), m.gens.rank());
    FreePieces fp2(d2.ambient);
    bool expressed = true;
    for (int j = 0; j < m.gens.rank(); ++j) {
        std::vector<RingElem> ev;
        for (const auto& g : d1.gens) ev.push_back(g.col[j]);
        auto c = express_in_generators(fp2, d2.gens, ev, m.gens.degs[j]);
        if (!c) {
            expressed = false;
            break;
        }
        b.set_col(j, *c);
    }
    if (!expressed) {
        rep.certified = false;
        rep.failure = "bidual image not expressible within the degree window";
        return rep;
    }
    ModulePieces pm(m), pb(d2.mod);
    int dmin = std::min(m.gens.min_deg(), d2.mod.gens.min_deg());
    ScanWindow w = scan_window(*a, std::max(m.gens.max_deg(), d2.mod.gens.max_deg()), degree_cap);
    rep.certified = rep.certified && w.certified;
    for (int d = dmin; d <= w.hi; ++d) {
        int da = pm.dim(d), db = pb.dim(d);
        if (da != db || (da > 0 && matrix_of(b, pb, pm, d).rank() != da)) {
            rep.failure = "bidual comparison fails in degree " + std::to_string(d);
            return rep;
        }
    }
    rep.bidual_iso = true;

    auto e2 = first_nonvanishing_ext(d1.mod, window, degree_cap, &rep.certified);
    if (e2) {
        rep.failure = "dual has nonzero derived hom into the ring in level -" + std::to_string(*e2);
        return rep;
    }
    rep.dual_ext_vanishes = true;
    return rep;
}

std::optional<int> ext_top(const Complex& x, int cutoff, int degree_cap) {
    Complex h = derived_hom(x, ring_complex(x.algebra()), cutoff, degree_cap);
    std::map<int, int> t = homology_totals(h, degree_cap);
    bool truncated = !x.all_free();
    std::optional<int> best;
    for (const auto& [lvl, v] : t) {
        int i = -lvl;
        if (truncated && i > cutoff - 2) continue;  // resolution edge effects
        if (!best || i > *best) best = i;
    }
    return best;
}

// ---- resolving-class oracles -------------------------------------------

ResolvingClassOracle free_oracle(int cutoff, int degree_cap) {
    (void)cutoff;
    return {"free", [degree_cap](const GradedModule& m, const PoincareData* tail) {
                OracleVerdict v;
                if (tail) {
                    v.member = tail->coeff(tail->base + 1) == 0;
                    v.certified = tail->certified;
                } else {
                    ResolutionResult r = minimal_free_resolution(m, 2, degree_cap);
                    v.member = r.betti(1) == 0;
                    v.certified = r.certified;
                }
                v.evidence = v.member ? "no relations in the minimal presentation"
                                      : "minimal relations exist";
                return v;
            }};
}

ResolvingClassOracle totally_reflexive_oracle(int window, int degree_cap) {
    return {"totally-reflexive",
            [window, degree_cap](const GradedModule& m, const PoincareData*) {
                ReflexivityReport rep = totally_reflexive_test(m, window, degree_cap);
                return OracleVerdict{rep.ok(), rep.certified,
                                     rep.ok() ? "totally reflexive" : rep.failure};
            }};
}

ResolvingClassOracle ci_star_oracle(int window, int cutoff, int degree_cap) {
    return {"ci-star",
            [window, cutoff, degree_cap](const GradedModule& m, const PoincareData* tail) {
                PoincareData s = tail ? *tail : poincare_series(m, cutoff, degree_cap);
                if (!s.complete && static_cast<int>(s.coeffs.size()) < 4)
                    return OracleVerdict{false, false,
                                         "betti window too short for a growth estimate"};
                ComplexityVerdict cx = complexity_estimate(s);
                if (cx.kind == ComplexityVerdict::Kind::kSuperEvidence)
                    return OracleVerdict{false, false, "superpolynomial-evidence"};
                ReflexivityReport tr = totally_reflexive_test(m, window, degree_cap);
                OracleVerdict v;
                v.member = tr.ok();
                v.certified = tr.certified && cx.certified;
                v.evidence = v.member ? "growth " + cx.str() + ", totally reflexive"
                                      : tr.failure;
                return v;
            }};
}

OracleVerdict ci_star_membership(const GradedModule& m, int window, int cutoff,
                                 int degree_cap) {
    return ci_star_oracle(window, cutoff, degree_cap).test(m, nullptr);
}

DimensionVerdict b_dimension(const Complex& x, const ResolvingClassOracle& cls, int cutoff,
                             int degree_cap) {
    HomologySpread hs = homology_spread(x, degree_cap);
    if (!hs.sup) {
        DimensionVerdict v = DimensionVerdict::minus_infinity("input is exact");
        v.certified = hs.certified;
        return v;
    }
    ResolutionResult r = minimal_free_resolution(x, cutoff, degree_cap);
    bool cert = hs.certified && r.certified;
    int top = r.complete ? r.p.hi() : cutoff - 1;
    for (int n = *hs.sup; n <= top; ++n) {
        GradedModule c = syzygy_module(r, n);
        PoincareData tail;
        tail.cutoff = cutoff - n;
        tail.complete = r.complete;
        tail.certified = r.certified;
        for (int i = n; i <= r.p.hi(); ++i) tail.coeffs.push_back(r.betti(i));
        OracleVerdict v = cls.test(c, &tail);
        if (v.member) {
            DimensionVerdict out =
                DimensionVerdict::finite(n, "syzygy " + std::to_string(n) + " is " +
                                                cls.name + " (" + v.evidence + ")");
            out.certified = cert && v.certified;
            return out;
        }
        cert = cert && v.certified;
    }
    DimensionVerdict out =
        DimensionVerdict::at_least(top + 1, "no " + cls.name + " syzygy within the cutoff");
    out.certified = cert;
    return out;
}

DimensionVerdict g_dimension(const Complex& x, int cutoff, int degree_cap, int window) {
    return b_dimension(x, totally_reflexive_oracle(window, degree_cap), cutoff, degree_cap);
}

DimensionVerdict g_dimension(const GradedModule& m, int cutoff, int degree_cap, int window) {
    return g_dimension(Complex::of_module(m), cutoff, degree_cap, window);
}

DimensionVerdict pci_dimension(const Complex& x, int cutoff, int degree_cap, int window) {
    return b_dimension(x, ci_star_oracle(window, cutoff, degree_cap), cutoff, degree_cap);
}

DimensionVerdict pci_dimension(const GradedModule& m, int cutoff, int degree_cap, int window) {
    return pci_dimension(Complex::of_module(m), cutoff, degree_cap, window);
}

bool ab_consistent(const Complex& x, const DimensionVerdict& v, int cutoff, int degree_cap) {
    if (!v.is_finite()) return true;
    DepthValue dr = depth(ring_complex(x.algebra()), cutoff, degree_cap);
    DepthValue dx = depth(x, cutoff, degree_cap);
    if (dr.infinite || dx.infinite) return false;
    return v.value == dr.value - dx.value;
}

// ---- deformations -------------------------------------------------------

void validate_deformation(const GradedAlgebra& r, const DeformationSpec& s) {
    if (s.ambient_vars != r.vars())
        throw std::invalid_argument("deformation: ambient variables must match the ring");
    size_t n = s.ambient_vars.size();
    for (const auto& m : s.q_relations)
        if (m.e.size() != n)
            throw std::invalid_argument("deformation: relation has wrong variable count");
    for (const auto& m : s.regular_sequence)
        if (m.e.size() != n)
            throw std::invalid_argument("deformation: sequence entry has wrong variable count");
    AlgebraPtr q = make_algebra(r.characteristic(), s.ambient_vars, s.q_relations);
    if (!is_monomial_regular_sequence(*q, s.regular_sequence))
        throw std::invalid_argument("deformation: sequence is not regular on the ambient ring");
    std::vector<Monomial> all = s.q_relations;
    all.insert(all.end(), s.regular_sequence.begin(), s.regular_sequence.end());
    AlgebraPtr rq = make_algebra(r.characteristic(), s.ambient_vars, all);
    if (!rq->same_as(r))
        throw std::invalid_argument("deformation: quotient does not reproduce the ring");
}

AlgebraPtr deformation_algebra(const DeformationSpec& s, Scalar p) {
    return make_algebra(p, s.ambient_vars, s.q_relations);
}

std::vector<DeformationSpec> standard_deformations(const GradedAlgebra& r) {
    std::vector<DeformationSpec> out;
    out.push_back({r.vars(), r.relations(), {}});
    if (!r.relations().empty() && r.is_complete_intersection())
        out.push_back({r.vars(), {}, r.relations()});
    return out;
}

namespace {

RingElem port_elem(const AlgebraPtr& q, const RingElem& e) {
    RingElem out = RingElem::zero(q);
    for (const auto& t : e.terms()) out = out + RingElem::monomial(q, t.m, t.c);
    return out;
}

}  // namespace

Complex restrict_scalars(const Complex& x, const AlgebraPtr& q,
                         const std::vector<Monomial>& regular_sequence) {
    const AlgebraPtr& a = x.algebra();
    if (q->nvars() != a->nvars())
        throw std::invalid_argument("restrict_scalars: variable count mismatch");
    if (x.empty()) return Complex::zero_complex(q);
    std::vector<GradedModule> comps;
    std::vector<RingMatrix> diffs;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        const GradedModule& mi = x.at(i);
        FreeModule gens{q, mi.gens.degs};
        int rk = gens.rank();
        int extra = static_cast<int>(regular_sequence.size()) * rk;
        RingMatrix rels(q, rk, mi.rels.cols() + extra);
        for (int j = 0; j < mi.rels.cols(); ++j)
            for (int t = 0; t < rk; ++t) rels.at(t, j) = port_elem(q, mi.rels.at(t, j));
        int c0 = mi.rels.cols();
        for (size_t s = 0; s < regular_sequence.size(); ++s)
            for (int g = 0; g < rk; ++g)
                rels.at(g, c0 + static_cast<int>(s) * rk + g) =
                    RingElem::monomial(q, regular_sequence[s]);
        comps.push_back(GradedModule::make(std::move(gens), std::move(rels)));
        if (i > x.lo()) {
            const RingMatrix& d = x.diff(i);
            RingMatrix dq(q, d.rows(), d.cols());
            for (int rr = 0; rr < d.rows(); ++rr)
                for (int cc = 0; cc < d.cols(); ++cc) dq.at(rr, cc) = port_elem(q, d.at(rr, cc));
            diffs.push_back(std::move(dq));
        }
    }
    return Complex::make(q, x.lo(), comps, diffs);
}

CiBound ci_dim_upper(const Complex& x, const std::vector<DeformationSpec>& extra, int cutoff,
                     int degree_cap) {
    const AlgebraPtr& a = x.algebra();
    HomologySpread hs = homology_spread(x, degree_cap);
    if (!hs.sup) {
        CiBound b{DimensionVerdict::minus_infinity("input is exact"), "zero object", {}};
        b.dim.certified = hs.certified;
        return b;
    }
    std::vector<DeformationSpec> specs = standard_deformations(*a);
    for (const auto& s : extra) {
        validate_deformation(*a, s);
        specs.push_back(s);
    }
    CiBound b{DimensionVerdict::at_least(0, "no finite bound in the family"), "none", {}};
    bool have = false;
    std::optional<int> best_lower;
    for (const auto& s : specs) {
        int c = static_cast<int>(s.regular_sequence.size());
        AlgebraPtr q = deformation_algebra(s, a->characteristic());
        DimensionVerdict pdq =
            (c == 0 && q->same_as(*a))
                ? projective_dimension(x, cutoff, degree_cap)
                : projective_dimension(restrict_scalars(x, q, s.regular_sequence), cutoff,
                                       degree_cap);
        std::string label = "Q = " + q->describe() + ", codim " + std::to_string(c);
        b.rows.push_back({label, c, pdq});
        if (pdq.is_finite()) {
            int cand = pdq.value - c;
            if (!have || cand < b.dim.value) {
                b.dim = DimensionVerdict::finite(cand, "via " + label);
                b.dim.certified = pdq.certified;
                b.witness = label;
                have = true;
            }
        } else if (pdq.is_at_least()) {
            int lv = pdq.value - c;
            if (!best_lower || lv < *best_lower) best_lower = lv;
        }
    }
    if (!have) {
        b.dim = DimensionVerdict::at_least(best_lower ? *best_lower : 0,
                                           "no finite bound in the family");
        b.dim.certified = false;
    }
    return b;
}

CiBound ci_dim_upper(const GradedModule& m, const std::vector<DeformationSpec>& extra,
                     int cutoff, int degree_cap) {
    return ci_dim_upper(Complex::of_module(m), extra, cutoff, degree_cap);
}

SyzygyReduction ci_syzygy_reduce(const Complex& x, int n,
                                 const std::vector<DeformationSpec>& extra, int cutoff,
                                 int degree_cap) {
    ResolutionResult r = minimal_free_resolution(x, cutoff, degree_cap);
    if (!r.complete && n >= r.p.hi())
        throw std::invalid_argument("syzygy reduction: level beyond the computed resolution");
    GradedModule c = syzygy_module(r, n);
    if (c.gens.rank() == 0) {
        SyzygyReduction out{n, true, DimensionVerdict::minus_infinity("syzygy vanishes"),
                            r.pd()};
        out.x_bound.certificate = "resolution ended before the syzygy level";
        return out;
    }
    CiBound cb = ci_dim_upper(c, extra, cutoff, degree_cap);
    return SyzygyReduction{n, false, cb.dim, cb.dim.shifted(n)};
}

// ---- pushout ------------------------------------------------------------

PushoutData es_pushout(const GradedModule& l, const GradedModule& m, const GradedModule& n,
                       const RingMatrix& mu, const RingMatrix& pi, const FreeModule& p,
                       const RingMatrix& rho, int degree_cap) {
    const AlgebraPtr& a = m.gens.alg;
    validate_map_degrees(mu, m.gens, l.gens, "pushout left map");
    validate_map_degrees(pi, n.gens, m.gens, "pushout right map");
    validate_map_degrees(rho, n.gens, p, "pushout cover");

    ModulePieces mp(m), np(n);
    RingMatrix gamma(a, m.gens.rank(), p.rank());
    for (int j = 0; j < p.rank(); ++j) {
        int d = p.degs[j];
        auto sol = matrix_of(pi, np, mp, d).solve(np.coords_of(d, rho.col(j)));
        if (!sol)
            throw std::invalid_argument("pushout: the right map misses part of the cover image");
        gamma.set_col(j, mp.rep(d, *sol));
    }

    GradedModule middle = direct_sum(GradedModule::free_module(p), l);
    RingMatrix phi(a, m.gens.rank(), p.rank() + l.gens.rank());
    for (int j = 0; j < p.rank(); ++j) phi.set_col(j, gamma.col(j));
    for (int j = 0; j < l.gens.rank(); ++j) phi.set_col(p.rank() + j, mu.col(j));

    ModulePieces midp(middle);
    ScanWindow w =
        scan_window(*a, std::max(middle.gens.max_deg(), m.gens.max_deg()), degree_cap);
    auto kerfn = [&](int d) {
        return mat_from_cols(midp.dim(d), matrix_of(phi, mp, midp, d).kernel(), a->field());
    };
    std::vector<SubmoduleGen> kg =
        minimal_generators(midp, kerfn, middle.gens.min_deg(), w.hi);
    GradedModule kernel = presentation_of(midp, kg, degree_cap);
    RingMatrix incl(a, middle.gens.rank(), static_cast<int>(kg.size()));
    for (size_t k = 0; k < kg.size(); ++k) incl.set_col(static_cast<int>(k), kg[k].col);

    ModulePieces kp(kernel);
    bool exact = true;
    for (int d = middle.gens.min_deg(); d <= w.hi && exact; ++d) {
        int dmid = midp.dim(d), dm = mp.dim(d), dk = kp.dim(d);
        if (matrix_of(phi, mp, midp, d).rank() != dm) exact = false;
        int rg = matrix_of(incl, midp, kp, d).rank();
        if (rg != dk || rg != dmid - dm) exact = false;
    }
    return PushoutData{std::move(kernel), std::move(middle), std::move(incl), std::move(phi),
                       std::move(gamma),  exact,             w.certified};
}

// ---- hierarchy ----------------------------------------------------------

std::string HierarchyReport::render() const {
    auto eq = [](const DimensionVerdict& a, const DimensionVerdict& b) {
        return (a.is_finite() && b.is_finite() && a.value == b.value) ||
               (a.is_minus_infinity() && b.is_minus_infinity());
    };
    std::string s = "gdim " + gdim.str();
    s += eq(gdim, pci) ? " = " : " <= ";
    s += "pci " + pci.str();
    s += eq(pci, ci) ? " = " : " <= ";
    s += "ci " + ci.str();
    s += eq(ci, pd) ? " = " : " <= ";
    s += "pd " + pd.str();
    return s;
}

HierarchyReport hierarchy_check(const Complex& x, const std::vector<DeformationSpec>& extra,
                                int cutoff, int degree_cap, int window) {
    HierarchyReport h{g_dimension(x, cutoff, degree_cap, window),
                      pci_dimension(x, cutoff, degree_cap, window),
                      ci_dim_upper(x, extra, cutoff, degree_cap).dim,
                      projective_dimension(x, cutoff, degree_cap)};
    const DimensionVerdict* chain[4] = {&h.gdim, &h.pci, &h.ci, &h.pd};
    for (int i = 0; i + 1 < 4; ++i) {
        const DimensionVerdict& lft = *chain[i];
        const DimensionVerdict& rgt = *chain[i + 1];
        if (rgt.is_minus_infinity()) {
            if (!lft.is_minus_infinity()) {
                h.chain_ok = false;
                h.equality_ok = false;
            }
            continue;
        }
        if (rgt.is_finite()) {
            if (lft.is_finite() && lft.value > rgt.value) h.chain_ok = false;
            if (lft.is_at_least() && lft.value > rgt.value) h.chain_ok = false;
            if (!(lft.is_finite() && lft.value == rgt.value)) h.equality_ok = false;
        }
    }
    return h;
}

HierarchyReport hierarchy_check(const GradedModule& m,
                                const std::vector<DeformationSpec>& extra, int cutoff,
                                int degree_cap, int window) {
    return hierarchy_check(Complex::of_module(m), extra, cutoff, degree_cap, window);
}

}  // namespace cidim
