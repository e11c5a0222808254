#include "cidim/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace cidim {

std::map<int, int> homology_totals(const Complex& x, int degree_cap) {
    HomologyTable t = homology_dims(x, degree_cap);
    std::map<int, int> out;
    for (const auto& [i, row] : t.dims) {
        int s = 0;
        for (const auto& [d, v] : row) s += v;
        if (s > 0) out[i] = s;
    }
    return out;
}

namespace {

void gen_subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int j = start; j < n; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

int subset_index(const std::vector<std::vector<int>>& subs, const std::vector<int>& s) {
    auto it = std::find(subs.begin(), subs.end(), s);
    if (it == subs.end()) throw std::logic_error("koszul: missing subset");
    return static_cast<int>(it - subs.begin());
}

}  // namespace

KoszulData koszul_complex(const AlgebraPtr& a) {
    std::vector<RingElem> seq;
    for (int v = 0; v < a->nvars(); ++v) seq.push_back(RingElem::variable(a, v));
    return koszul_complex(a, std::move(seq));
}

KoszulData koszul_complex(const AlgebraPtr& a, std::vector<RingElem> seq) {
    std::vector<int> fdeg;
    for (const auto& f : seq) {
        require_same_algebra(a, f.algebra());
        if (f.is_zero() || !f.is_homogeneous() || f.degree_or(0) <= 0)
            throw std::invalid_argument(
                "koszul: sequence entries must be homogeneous of positive degree");
        fdeg.push_back(f.degree_or(0));
    }
    int n = static_cast<int>(seq.size());

    std::vector<std::vector<std::vector<int>>> subs(n + 1);
    for (int i = 0; i <= n; ++i) gen_subsets(n, i, subs[i]);

    std::vector<GradedModule> comps;
    for (int i = 0; i <= n; ++i) {
        std::vector<int> degs;
        for (const auto& s : subs[i]) {
            int d = 0;
            for (int j : s) d += fdeg[j];
            degs.push_back(d);
        }
        comps.push_back(GradedModule::free_module({a, degs}));
    }

    std::vector<RingMatrix> diffs;
    for (int i = 1; i <= n; ++i) {
        RingMatrix m(a, comps[i - 1].gens.rank(), comps[i].gens.rank());
        for (int c = 0; c < comps[i].gens.rank(); ++c) {
            const auto& s = subs[i][c];
            for (int k = 0; k < i; ++k) {
                std::vector<int> t = s;
                t.erase(t.begin() + k);
                int r = subset_index(subs[i - 1], t);
                m.at(r, c) = (k % 2) ? -seq[s[k]] : seq[s[k]];
            }
        }
        diffs.push_back(std::move(m));
    }

    KoszulData kd{std::move(seq), Complex::make(a, 0, comps, diffs)};
    return kd;
}

std::string DepthValue::str() const {
    return infinite ? "+inf" : std::to_string(value);
}

DepthValue depth(const Complex& x, int cutoff, int degree_cap) {
    const AlgebraPtr& a = x.algebra();
    HomologySpread hs = homology_spread(x, degree_cap);
    DepthValue out;
    out.certified = hs.certified;
    if (!hs.sup) {
        out.infinite = true;
        return out;
    }
    int n = a->nvars();
    int bound = *hs.sup + n;  // homology of X (x) K vanishes above this

    Complex xf = x;
    if (!x.all_free()) {
        ResolutionResult r =
            minimal_free_resolution(x, std::max(cutoff, bound + 2), degree_cap);
        xf = r.p;
        out.certified = out.certified && r.certified;
    }
    Complex t = tensor(xf, koszul_complex(a).cx).cx;
    std::map<int, int> ht = homology_totals(t, degree_cap);
    int sup_t = bound + 1;
    for (auto it = ht.rbegin(); it != ht.rend(); ++it) {
        if (it->first <= bound) {
            sup_t = it->first;
            break;
        }
    }
    if (sup_t > bound)
        throw std::logic_error("depth: Koszul homology unexpectedly vanished");
    out.value = n - sup_t;
    return out;
}

DepthValue depth(const GradedModule& m, int cutoff, int degree_cap) {
    return depth(Complex::of_module(m), cutoff, degree_cap);
}

namespace {

Complex free_model(const Complex& x, int cutoff, int degree_cap, bool* certified) {
    if (x.all_free()) return x;
    ResolutionResult r = minimal_free_resolution(x, cutoff, degree_cap);
    if (certified) *certified = *certified && r.certified;
    return r.p;
}

}  // namespace

Complex derived_tensor(const Complex& x, const Complex& y, int cutoff, int degree_cap) {
    Complex fx = free_model(x, cutoff, degree_cap, nullptr);
    Complex fy = free_model(y, cutoff, degree_cap, nullptr);
    return tensor(fx, fy).cx;
}

Complex derived_hom(const Complex& x, const Complex& y, int cutoff, int degree_cap) {
    if (!y.all_free())
        throw std::invalid_argument("derived_hom: target must be a free complex");
    Complex fx = free_model(x, cutoff, degree_cap, nullptr);
    return hom_complex(fx, y).cx;
}

PoincareData poincare_series(const Complex& x, int cutoff, int degree_cap) {
    ResolutionResult r = minimal_free_resolution(x, cutoff, degree_cap);
    PoincareData p;
    p.cutoff = cutoff;
    p.complete = r.complete;
    p.certified = r.certified;
    if (r.p.empty()) return p;
    p.base = r.p.lo();
    p.coeffs = r.betti_row();
    return p;
}

PoincareData poincare_series(const GradedModule& m, int cutoff, int degree_cap) {
    return poincare_series(Complex::of_module(m), cutoff, degree_cap);
}

ProductCheck poincare_product_check(const Complex& x, const Complex& y, int cutoff,
                                    int degree_cap) {
    PoincareData px = poincare_series(x, cutoff + 1, degree_cap);
    PoincareData py = poincare_series(y, cutoff + 1, degree_cap);
    Complex t = derived_tensor(x, y, cutoff + 1, degree_cap);
    PoincareData pt = poincare_series(t, cutoff, degree_cap);

    ProductCheck pc;
    if (px.coeffs.empty() || py.coeffs.empty()) {
        pc.ok = pt.coeffs.empty();
        return pc;
    }
    int lo = px.base + py.base;
    for (int n = lo; n <= cutoff; ++n) {
        int prod = 0;
        for (int i = px.base; i <= px.top(); ++i) prod += px.coeff(i) * py.coeff(n - i);
        int lhs = pt.coeff(n);
        pc.rows.push_back({n, lhs, prod});
        if (lhs != prod) pc.ok = false;
    }
    return pc;
}

std::string ComplexityVerdict::str() const {
    switch (kind) {
        case Kind::kExact:
            return "exactly " + std::to_string(value) + (certified ? " (certified)" : "");
        case Kind::kAtLeast:
            return ">= " + std::to_string(value);
        default:
            return "superpolynomial-evidence";
    }
}

ComplexityVerdict complexity_estimate(const PoincareData& p) {
    ComplexityVerdict v;
    if (p.complete) {
        v.kind = ComplexityVerdict::Kind::kExact;
        v.value = 0;
        v.window = static_cast<int>(p.coeffs.size());
        v.certified = true;
        v.note = "resolution terminates";
        return v;
    }
    int len = static_cast<int>(p.coeffs.size());
    if (len < 4)
        throw std::invalid_argument("complexity: need at least four Betti coefficients");
    int half = (len + 1) / 2;
    std::vector<long long> tail(p.coeffs.end() - half, p.coeffs.end());
    v.window = half;

    std::vector<long long> cur = tail;
    int steps = 0;
    auto all_zero = [](const std::vector<long long>& s) {
        return std::all_of(s.begin(), s.end(), [](long long a) { return a == 0; });
    };
    while (!all_zero(cur) && cur.size() >= 2) {
        std::vector<long long> nxt;
        for (size_t i = 0; i + 1 < cur.size(); ++i) nxt.push_back(cur[i + 1] - cur[i]);
        cur = std::move(nxt);
        ++steps;
    }
    if (all_zero(cur)) {
        if (steps == 0) {
            v.kind = ComplexityVerdict::Kind::kAtLeast;
            v.value = 0;
            v.note = "betti numbers vanish in the window without termination";
        } else {
            v.kind = ComplexityVerdict::Kind::kExact;
            v.value = steps;
            v.fitted_degree = steps - 1;
            v.note = "polynomial fit by finite differences";
        }
        return v;
    }

    bool growing = true;
    for (size_t i = 0; i + 1 < tail.size(); ++i) {
        if (!(tail[i] > 0 && 10 * tail[i + 1] >= 11 * tail[i])) {
            growing = false;
            break;
        }
    }
    if (growing) {
        v.kind = ComplexityVerdict::Kind::kSuperEvidence;
        v.note = "persistent growth ratio above 1.1";
    } else {
        v.kind = ComplexityVerdict::Kind::kAtLeast;
        v.value = steps;
        v.note = "differences exhausted the window";
    }
    return v;
}

}  // namespace cidim
