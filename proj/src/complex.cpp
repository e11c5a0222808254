#include "cidim/complex.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cidim {

namespace {

bool odd(int n) { return ((n % 2) + 2) % 2 == 1; }

bool col_is_zero(const std::vector<RingElem>& col) {
    for (const RingElem& e : col)
        if (!e.is_zero()) return false;
    return true;
}

// Membership of a homogeneous column in the relation span of tgt, exact at
// the column's degree. mp caches the relation spans per degree.
void require_in_relations(const GradedModule& tgt, std::unique_ptr<ModulePieces>& mp,
                          const std::vector<RingElem>& col, int deg, const std::string& what) {
    if (col_is_zero(col)) return;
    if (tgt.presented_free()) throw std::invalid_argument(what);
    if (!mp) mp = std::make_unique<ModulePieces>(tgt);
    Vec v = mp->coords_of(deg, col);
    for (Scalar s : v)
        if (s != 0) throw std::invalid_argument(what);
}

RingMatrix hcat(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows() != b.rows()) throw std::logic_error("hcat: row mismatch");
    RingMatrix out(a.algebra(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

RingMatrix blocks2(const AlgebraPtr& alg, const RingMatrix& a, const RingMatrix& b,
                   const RingMatrix& c, const RingMatrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
        b.cols() != d.cols())
        throw std::logic_error("blocks2: shape mismatch");
    RingMatrix out(alg, a.rows() + c.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) out.at(a.rows() + i, j) = c.at(i, j);
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = d.at(i, j);
    return out;
}

}  // namespace

Complex Complex::make(AlgebraPtr alg, int lo, std::vector<GradedModule> comps,
                      std::vector<RingMatrix> diffs) {
    if (!alg) throw std::invalid_argument("complex: missing algebra");
    if (comps.empty()) {
        if (!diffs.empty()) throw std::invalid_argument("complex: differentials without components");
    } else if (diffs.size() + 1 != comps.size()) {
        throw std::invalid_argument("complex: expected one differential per adjacent pair");
    }
    for (const GradedModule& c : comps) require_same_algebra(alg, c.algebra());

    std::vector<std::unique_ptr<ModulePieces>> mps(comps.size());
    for (size_t k = 0; k < diffs.size(); ++k) {
        require_same_algebra(alg, diffs[k].algebra());
        validate_map_degrees(diffs[k], comps[k].gens, comps[k + 1].gens, "complex differential");
        // The differential must kill the relations of its source.
        for (int j = 0; j < comps[k + 1].rels.cols(); ++j)
            require_in_relations(comps[k], mps[k], diffs[k].apply(comps[k + 1].rels.col(j)),
                                 comps[k + 1].rel_degs[j],
                                 "complex differential not defined on the presented source");
    }
    for (size_t k = 0; k + 1 < diffs.size(); ++k) {
        RingMatrix sq = diffs[k].times(diffs[k + 1]);
        for (int j = 0; j < sq.cols(); ++j)
            require_in_relations(comps[k], mps[k], sq.col(j), comps[k + 2].gens.degs[j],
                                 "complex differential does not square to zero");
    }

    Complex x;
    x.alg_ = alg;
    x.lo_ = lo;
    x.comps_ = std::move(comps);
    x.diffs_ = std::move(diffs);
    x.zero_ = GradedModule::zero(std::move(alg));
    return x;
}

Complex Complex::zero_complex(AlgebraPtr alg) { return make(std::move(alg), 0, {}, {}); }

Complex Complex::of_module(GradedModule m, int at) {
    AlgebraPtr a = m.algebra();
    std::vector<GradedModule> comps;
    comps.push_back(std::move(m));
    return make(std::move(a), at, std::move(comps), {});
}

const GradedModule& Complex::at(int i) const {
    if (in_range(i)) return comps_[i - lo_];
    return zero_;
}

RingMatrix Complex::diff(int i) const {
    if (i > lo_ && i <= hi()) return diffs_[i - 1 - lo_];
    return RingMatrix(alg_, at(i - 1).gens.rank(), at(i).gens.rank());
}

bool Complex::all_free() const {
    for (const GradedModule& c : comps_)
        if (!c.presented_free()) return false;
    return true;
}

bool Complex::is_zero_object() const {
    for (const GradedModule& c : comps_)
        if (c.gens.rank() > 0) return false;
    return true;
}

int Complex::min_internal_degree() const {
    int d = 0;
    bool first = true;
    for (const GradedModule& c : comps_) {
        if (c.gens.rank() == 0) continue;
        d = first ? c.gens.min_deg() : std::min(d, c.gens.min_deg());
        first = false;
    }
    return d;
}

int Complex::max_gen_degree() const {
    int d = 0;
    bool first = true;
    for (const GradedModule& c : comps_) {
        if (c.gens.rank() == 0) continue;
        d = first ? c.gens.max_deg() : std::max(d, c.gens.max_deg());
        first = false;
    }
    return d;
}

Complex Complex::normalized() const {
    int k0 = 0, k1 = static_cast<int>(comps_.size()) - 1;
    while (k0 <= k1 && comps_[k0].gens.rank() == 0) ++k0;
    while (k1 >= k0 && comps_[k1].gens.rank() == 0) --k1;
    if (k0 > k1) return zero_complex(alg_);
    std::vector<GradedModule> comps(comps_.begin() + k0, comps_.begin() + k1 + 1);
    std::vector<RingMatrix> diffs(diffs_.begin() + k0, diffs_.begin() + k1);
    return make(alg_, lo_ + k0, std::move(comps), std::move(diffs));
}

Complex direct_sum(const Complex& a, const Complex& b) {
    require_same_algebra(a.algebra(), b.algebra());
    if (a.empty()) return b;
    if (b.empty()) return a;
    int lo = std::min(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    std::vector<GradedModule> comps;
    std::vector<RingMatrix> diffs;
    for (int i = lo; i <= hi; ++i) comps.push_back(direct_sum(a.at(i), b.at(i)));
    for (int i = lo + 1; i <= hi; ++i) {
        RingMatrix da = a.diff(i), db = b.diff(i);
        RingMatrix z01(a.algebra(), da.rows(), db.cols());
        RingMatrix z10(a.algebra(), db.rows(), da.cols());
        diffs.push_back(blocks2(a.algebra(), da, z01, z10, db));
    }
    return Complex::make(a.algebra(), lo, std::move(comps), std::move(diffs));
}

Complex suspend(const Complex& x, int n) {
    if (x.empty()) return x;
    std::vector<GradedModule> comps;
    std::vector<RingMatrix> diffs;
    for (int i = x.lo(); i <= x.hi(); ++i) comps.push_back(x.at(i));
    for (int i = x.lo() + 1; i <= x.hi(); ++i) {
        RingMatrix d = x.diff(i);
        if (odd(n)) d = d.scaled(x.algebra()->field().neg(1));
        diffs.push_back(std::move(d));
    }
    return Complex::make(x.algebra(), x.lo() + n, std::move(comps), std::move(diffs));
}

ComplexPieces::ComplexPieces(Complex x) : x_(std::move(x)) {
    zero_ = make_pieces(GradedModule::zero(x_.algebra()));
}

Pieces& ComplexPieces::at(int i) {
    if (!x_.in_range(i)) return *zero_;
    auto it = ps_.find(i);
    if (it != ps_.end()) return *it->second;
    return *ps_.emplace(i, make_pieces(x_.at(i))).first->second;
}

int ComplexPieces::dim(int i, int d) { return at(i).dim(d); }

Mat ComplexPieces::diff_matrix(int i, int d) {
    return matrix_of(x_.diff(i), at(i - 1), at(i), d);
}

Mat ComplexPieces::cycle_space(int i, int d) {
    Mat m = diff_matrix(i, d);
    std::vector<Vec> ker = m.kernel();
    Mat out(at(i).dim(d), static_cast<int>(ker.size()), x_.algebra()->field());
    for (size_t j = 0; j < ker.size(); ++j) out.set_col(static_cast<int>(j), ker[j]);
    return out;
}

Mat ComplexPieces::boundary_space(int i, int d) { return diff_matrix(i + 1, d); }

HomologyTable homology_dims(const Complex& x, int degree_cap) {
    HomologyTable t;
    t.window = scan_window(*x.algebra(), x.max_gen_degree(), degree_cap);
    if (x.empty()) return t;
    ComplexPieces cp(x);
    int dmin = x.min_internal_degree();
    for (int i = x.lo(); i <= x.hi(); ++i)
        for (int d = dmin; d <= t.window.hi; ++d) {
            int n = cp.dim(i, d);
            if (n == 0) continue;
            int z = n - cp.diff_matrix(i, d).rank();
            int b = cp.diff_matrix(i + 1, d).rank();
            if (z - b > 0) t.dims[i][d] = z - b;
        }
    return t;
}

HomologyModule homology_module(const Complex& x, int i, int degree_cap) {
    HomologyModule hm;
    hm.window = scan_window(*x.algebra(), x.at(i).gens.max_deg(), degree_cap);
    ComplexPieces cp(x);
    auto piece = [&](int d) { return cp.cycle_space(i, d); };
    auto mod_space = [&](int d) { return cp.boundary_space(i, d); };
    std::vector<SubmoduleGen> gens =
        minimal_generators(cp.at(i), piece, x.at(i).gens.min_deg(), hm.window.hi, mod_space);
    hm.mod = presentation_of(cp.at(i), gens, degree_cap, mod_space);
    return hm;
}

HomologySpread homology_spread(const Complex& x, int degree_cap) {
    HomologyTable t = homology_dims(x, degree_cap);
    HomologySpread s;
    s.certified = t.window.certified;
    for (const auto& [i, row] : t.dims) {
        if (row.empty()) continue;
        if (!s.inf) s.inf = i;
        s.sup = i;
    }
    return s;
}

Morphism Morphism::make(Complex src, Complex dst, int lo, std::vector<RingMatrix> maps) {
    require_same_algebra(src.algebra(), dst.algebra());
    Morphism f;
    f.src_ = std::move(src);
    f.dst_ = std::move(dst);
    f.lo_ = lo;
    f.maps_ = std::move(maps);

    std::map<int, std::unique_ptr<ModulePieces>> mps;
    auto check_col = [&](int level, const std::vector<RingElem>& col, int deg,
                         const std::string& what) {
        if (col_is_zero(col)) return;
        const GradedModule& tgt = f.dst_.at(level);
        if (tgt.presented_free()) throw std::invalid_argument(what);
        auto& mp = mps[level];
        if (!mp) mp = std::make_unique<ModulePieces>(tgt);
        Vec v = mp->coords_of(deg, col);
        for (Scalar s : v)
            if (s != 0) throw std::invalid_argument(what);
    };

    for (size_t k = 0; k < f.maps_.size(); ++k) {
        int i = f.lo_ + static_cast<int>(k);
        validate_map_degrees(f.maps_[k], f.dst_.at(i).gens, f.src_.at(i).gens, "chain map");
        const GradedModule& s = f.src_.at(i);
        for (int j = 0; j < s.rels.cols(); ++j)
            check_col(i, f.maps_[k].apply(s.rels.col(j)), s.rel_degs[j],
                      "chain map not defined on the presented source");
    }

    int ilo = std::min(f.src_.empty() ? 0 : f.src_.lo(), f.dst_.empty() ? 0 : f.dst_.lo());
    int ihi = std::max(f.src_.empty() ? 0 : f.src_.hi(), f.dst_.empty() ? 0 : f.dst_.hi()) + 1;
    for (int i = ilo; i <= ihi; ++i) {
        RingMatrix lhs = f.map_at(i - 1).times(f.src_.diff(i));
        RingMatrix rhs = f.dst_.diff(i).times(f.map_at(i));
        RingMatrix delta = lhs.minus(rhs);
        for (int j = 0; j < delta.cols(); ++j)
            check_col(i - 1, delta.col(j), f.src_.at(i).gens.degs[j],
                      "chain map does not commute with the differentials");
    }
    return f;
}

Morphism Morphism::zero(Complex src, Complex dst) {
    std::vector<RingMatrix> maps;
    int lo = src.empty() ? 0 : src.lo();
    for (int i = lo; !src.empty() && i <= src.hi(); ++i)
        maps.emplace_back(src.algebra(), dst.at(i).gens.rank(), src.at(i).gens.rank());
    return make(std::move(src), std::move(dst), lo, std::move(maps));
}

Morphism Morphism::identity(const Complex& x) {
    std::vector<RingMatrix> maps;
    int lo = x.empty() ? 0 : x.lo();
    for (int i = lo; !x.empty() && i <= x.hi(); ++i) {
        int r = x.at(i).gens.rank();
        RingMatrix m(x.algebra(), r, r);
        for (int j = 0; j < r; ++j) m.at(j, j) = RingElem::unit(x.algebra());
        maps.push_back(std::move(m));
    }
    return make(x, x, lo, std::move(maps));
}

RingMatrix Morphism::map_at(int i) const {
    int k = i - lo_;
    if (k >= 0 && k < static_cast<int>(maps_.size())) return maps_[k];
    return RingMatrix(src_.algebra(), dst_.at(i).gens.rank(), src_.at(i).gens.rank());
}

Morphism compose(const Morphism& g, const Morphism& f) {
    require_same_algebra(f.dst().algebra(), g.src().algebra());
    int mlo = std::min(f.dst().empty() ? 0 : f.dst().lo(), g.src().empty() ? 0 : g.src().lo());
    int mhi = std::max(f.dst().empty() ? 0 : f.dst().hi(), g.src().empty() ? 0 : g.src().hi());
    for (int i = mlo; i <= mhi; ++i)
        if (f.dst().at(i).gens.degs != g.src().at(i).gens.degs)
            throw std::invalid_argument("compose: middle complexes differ");
    std::vector<RingMatrix> maps;
    int lo = f.src().empty() ? 0 : f.src().lo();
    for (int i = lo; !f.src().empty() && i <= f.src().hi(); ++i)
        maps.push_back(g.map_at(i).times(f.map_at(i)));
    return Morphism::make(f.src(), g.dst(), lo, std::move(maps));
}

Complex cone(const Morphism& f) {
    const Complex& x = f.src();
    const Complex& y = f.dst();
    AlgebraPtr alg = y.algebra();
    if (x.empty() && y.empty()) return Complex::zero_complex(alg);
    int clo = std::numeric_limits<int>::max();
    int chi = std::numeric_limits<int>::min();
    if (!y.empty()) {
        clo = std::min(clo, y.lo());
        chi = std::max(chi, y.hi());
    }
    if (!x.empty()) {
        clo = std::min(clo, x.lo() + 1);
        chi = std::max(chi, x.hi() + 1);
    }
    Scalar minus1 = alg->field().neg(1);
    std::vector<GradedModule> comps;
    std::vector<RingMatrix> diffs;
    for (int i = clo; i <= chi; ++i) comps.push_back(direct_sum(y.at(i), x.at(i - 1)));
    for (int i = clo + 1; i <= chi; ++i) {
        RingMatrix dy = y.diff(i);
        RingMatrix fx = f.map_at(i - 1);
        RingMatrix z(alg, x.at(i - 2).gens.rank(), y.at(i).gens.rank());
        RingMatrix dx = x.diff(i - 1).scaled(minus1);
        diffs.push_back(blocks2(alg, dy, fx, z, dx));
    }
    return Complex::make(alg, clo, std::move(comps), std::move(diffs));
}

Complex truncate_hard_above(const Complex& x, int n) {
    if (x.empty() || n >= x.hi()) return x;
    if (n < x.lo()) return Complex::zero_complex(x.algebra());
    std::vector<GradedModule> comps;
    std::vector<RingMatrix> diffs;
    for (int i = x.lo(); i <= n; ++i) comps.push_back(x.at(i));
    for (int i = x.lo() + 1; i <= n; ++i) diffs.push_back(x.diff(i));
    return Complex::make(x.algebra(), x.lo(), std::move(comps), std::move(diffs));
}

Complex truncate_hard_below(const Complex& x, int n) {
    if (x.empty() || n <= x.lo()) return x;
    if (n > x.hi()) return Complex::zero_complex(x.algebra());
    std::vector<GradedModule> comps;
    std::vector<RingMatrix> diffs;
    for (int i = n; i <= x.hi(); ++i) comps.push_back(x.at(i));
    for (int i = n + 1; i <= x.hi(); ++i) diffs.push_back(x.diff(i));
    return Complex::make(x.algebra(), n, std::move(comps), std::move(diffs));
}

Complex truncate_soft_above(const Complex& x, int n) {
    if (x.empty() || n >= x.hi()) return x;
    if (n < x.lo()) return Complex::zero_complex(x.algebra());
    std::vector<GradedModule> comps;
    std::vector<RingMatrix> diffs;
    for (int i = x.lo(); i < n; ++i) comps.push_back(x.at(i));
    for (int i = x.lo() + 1; i <= n; ++i) diffs.push_back(x.diff(i));
    // Replace X_n by coker(d_{n+1}): same generators, extra relations.
    comps.push_back(
        GradedModule::make(x.at(n).gens, hcat(x.at(n).rels, x.diff(n + 1))));
    return Complex::make(x.algebra(), x.lo(), std::move(comps), std::move(diffs));
}

Morphism soft_above_projection(const Complex& x, int n) {
    Complex t = truncate_soft_above(x, n);
    std::vector<RingMatrix> maps;
    int lo = x.empty() ? 0 : x.lo();
    int top = std::min(n, x.empty() ? lo - 1 : x.hi());
    for (int i = lo; i <= top; ++i) {
        int r = x.at(i).gens.rank();
        RingMatrix m(x.algebra(), r, r);
        for (int j = 0; j < r; ++j) m.at(j, j) = RingElem::unit(x.algebra());
        maps.push_back(std::move(m));
    }
    return Morphism::make(x, std::move(t), lo, std::move(maps));
}

namespace {

struct KernelPresentation {
    std::vector<SubmoduleGen> gens;
    GradedModule mod;
};

KernelPresentation kernel_at(ComplexPieces& cp, const Complex& x, int n, int degree_cap) {
    ScanWindow w = scan_window(*x.algebra(), x.at(n).gens.max_deg(), degree_cap);
    int dhi = std::max(w.hi, x.at(n + 1).gens.max_deg());
    auto piece = [&](int d) { return cp.cycle_space(n, d); };
    KernelPresentation kp;
    kp.gens = minimal_generators(cp.at(n), piece, x.at(n).gens.min_deg(), dhi);
    kp.mod = presentation_of(cp.at(n), kp.gens, degree_cap);
    return kp;
}

}  // namespace

Complex truncate_soft_below(const Complex& x, int n, int degree_cap) {
    if (x.empty() || n <= x.lo()) return x;
    if (n > x.hi()) return Complex::zero_complex(x.algebra());
    ComplexPieces cp(x);
    KernelPresentation kp = kernel_at(cp, x, n, degree_cap);
    std::vector<GradedModule> comps;
    std::vector<RingMatrix> diffs;
    comps.push_back(kp.mod);
    if (n < x.hi()) {
        RingMatrix nd(x.algebra(), kp.mod.gens.rank(), x.at(n + 1).gens.rank());
        for (int j = 0; j < nd.cols(); ++j) {
            auto coeffs = express_in_generators(cp.at(n), kp.gens, x.diff(n + 1).col(j),
                                                x.at(n + 1).gens.degs[j]);
            if (!coeffs) throw std::logic_error("soft truncation: boundary is not a cycle");
            nd.set_col(j, *coeffs);
        }
        diffs.push_back(std::move(nd));
        for (int i = n + 1; i <= x.hi(); ++i) comps.push_back(x.at(i));
        for (int i = n + 2; i <= x.hi(); ++i) diffs.push_back(x.diff(i));
    }
    return Complex::make(x.algebra(), n, std::move(comps), std::move(diffs));
}

Morphism soft_below_inclusion(const Complex& x, int n, int degree_cap) {
    if (x.empty() || n <= x.lo()) return Morphism::identity(x);
    if (n > x.hi()) return Morphism::zero(Complex::zero_complex(x.algebra()), x);
    ComplexPieces cp(x);
    KernelPresentation kp = kernel_at(cp, x, n, degree_cap);
    Complex t = truncate_soft_below(x, n, degree_cap);
    std::vector<RingMatrix> maps;
    RingMatrix incl(x.algebra(), x.at(n).gens.rank(), static_cast<int>(kp.gens.size()));
    for (size_t j = 0; j < kp.gens.size(); ++j) incl.set_col(static_cast<int>(j), kp.gens[j].col);
    maps.push_back(std::move(incl));
    for (int i = n + 1; i <= x.hi(); ++i) {
        int r = x.at(i).gens.rank();
        RingMatrix m(x.algebra(), r, r);
        for (int j = 0; j < r; ++j) m.at(j, j) = RingElem::unit(x.algebra());
        maps.push_back(std::move(m));
    }
    return Morphism::make(std::move(t), x, n, std::move(maps));
}

const std::vector<TensorGen>& TensorComplex::gens_at(int n) const {
    if (!cx.in_range(n)) throw std::out_of_range("tensor level out of range");
    return gens[n - cx.lo()];
}

int TensorComplex::gen_index(int n, int i, int a, int b) const {
    const auto& g = gens_at(n);
    for (size_t k = 0; k < g.size(); ++k)
        if (g[k].i == i && g[k].a == a && g[k].b == b) return static_cast<int>(k);
    throw std::out_of_range("tensor generator not present");
}

TensorComplex tensor(const Complex& x, const Complex& y) {
    require_same_algebra(x.algebra(), y.algebra());
    if (!x.all_free() || !y.all_free())
        throw std::invalid_argument("tensor: components must be free");
    AlgebraPtr alg = x.algebra();
    TensorComplex t;
    if (x.empty() || y.empty()) {
        t.cx = Complex::zero_complex(alg);
        return t;
    }
    int nlo = x.lo() + y.lo();
    int nhi = x.hi() + y.hi();
    int levels = nhi - nlo + 1;
    t.gens.resize(levels);
    std::vector<std::map<int, int>> off(levels);  // level -> left factor -> start index
    std::vector<GradedModule> comps;
    for (int n = nlo; n <= nhi; ++n) {
        FreeModule f{alg, {}};
        for (int i = std::max(x.lo(), n - y.hi()); i <= std::min(x.hi(), n - y.lo()); ++i) {
            int j = n - i;
            off[n - nlo][i] = static_cast<int>(f.degs.size());
            const FreeModule& xf = x.at(i).gens;
            const FreeModule& yf = y.at(j).gens;
            for (int a = 0; a < xf.rank(); ++a)
                for (int b = 0; b < yf.rank(); ++b) {
                    t.gens[n - nlo].push_back(TensorGen{i, a, b});
                    f.degs.push_back(xf.degs[a] + yf.degs[b]);
                }
        }
        comps.push_back(GradedModule::free_module(std::move(f)));
    }
    Scalar minus1 = alg->field().neg(1);
    std::vector<RingMatrix> diffs;
    for (int n = nlo + 1; n <= nhi; ++n) {
        RingMatrix m(alg, comps[n - 1 - nlo].gens.rank(), comps[n - nlo].gens.rank());
        const auto& src = t.gens[n - nlo];
        for (size_t s = 0; s < src.size(); ++s) {
            int i = src[s].i, a = src[s].a, b = src[s].b;
            int j = n - i;
            RingMatrix dx = x.diff(i);
            for (int a2 = 0; a2 < dx.rows(); ++a2) {
                const RingElem& e = dx.at(a2, a);
                if (e.is_zero()) continue;
                int row = off[n - 1 - nlo].at(i - 1) + a2 * y.at(j).gens.rank() + b;
                m.at(row, static_cast<int>(s)) = m.at(row, static_cast<int>(s)) + e;
            }
            RingMatrix dy = y.diff(j);
            for (int b2 = 0; b2 < dy.rows(); ++b2) {
                RingElem e = dy.at(b2, b);
                if (e.is_zero()) continue;
                if (odd(i)) e = e.scale(minus1);
                int row = off[n - 1 - nlo].at(i) + a * y.at(j - 1).gens.rank() + b2;
                m.at(row, static_cast<int>(s)) = m.at(row, static_cast<int>(s)) + e;
            }
        }
        diffs.push_back(std::move(m));
    }
    t.cx = Complex::make(alg, nlo, std::move(comps), std::move(diffs));
    return t;
}

const std::vector<HomGen>& HomComplex::gens_at(int n) const {
    if (!cx.in_range(n)) throw std::out_of_range("hom level out of range");
    return gens[n - cx.lo()];
}

int HomComplex::gen_index(int n, int i, int a, int b) const {
    const auto& g = gens_at(n);
    for (size_t k = 0; k < g.size(); ++k)
        if (g[k].i == i && g[k].a == a && g[k].b == b) return static_cast<int>(k);
    throw std::out_of_range("hom generator not present");
}

HomComplex hom_complex(const Complex& x, const Complex& y) {
    require_same_algebra(x.algebra(), y.algebra());
    if (!x.all_free() || !y.all_free())
        throw std::invalid_argument("hom: components must be free");
    AlgebraPtr alg = x.algebra();
    HomComplex h;
    if (x.empty() || y.empty()) {
        h.cx = Complex::zero_complex(alg);
        return h;
    }
    int nlo = y.lo() - x.hi();
    int nhi = y.hi() - x.lo();
    int levels = nhi - nlo + 1;
    h.gens.resize(levels);
    std::vector<std::map<int, int>> off(levels);
    std::vector<GradedModule> comps;
    for (int n = nlo; n <= nhi; ++n) {
        FreeModule f{alg, {}};
        for (int i = std::max(x.lo(), y.lo() - n); i <= std::min(x.hi(), y.hi() - n); ++i) {
            off[n - nlo][i] = static_cast<int>(f.degs.size());
            const FreeModule& xf = x.at(i).gens;
            const FreeModule& yf = y.at(i + n).gens;
            for (int a = 0; a < xf.rank(); ++a)
                for (int b = 0; b < yf.rank(); ++b) {
                    h.gens[n - nlo].push_back(HomGen{i, a, b});
                    f.degs.push_back(yf.degs[b] - xf.degs[a]);
                }
        }
        comps.push_back(GradedModule::free_module(std::move(f)));
    }
    Scalar minus1 = alg->field().neg(1);
    std::vector<RingMatrix> diffs;
    for (int n = nlo + 1; n <= nhi; ++n) {
        RingMatrix m(alg, comps[n - 1 - nlo].gens.rank(), comps[n - nlo].gens.rank());
        const auto& src = h.gens[n - nlo];
        for (size_t s = 0; s < src.size(); ++s) {
            int i = src[s].i, a = src[s].a, b = src[s].b;
            // d_Y composed with the generator: lands in Hom(X_i, Y_{i+n-1}).
            RingMatrix dy = y.diff(i + n);
            for (int b2 = 0; b2 < dy.rows(); ++b2) {
                const RingElem& e = dy.at(b2, b);
                if (e.is_zero()) continue;
                int row = off[n - 1 - nlo].at(i) + a * y.at(i + n - 1).gens.rank() + b2;
                m.at(row, static_cast<int>(s)) = m.at(row, static_cast<int>(s)) + e;
            }
            // Generator composed with d_X: lands in Hom(X_{i+1}, Y_{i+n}),
            // with sign -(-1)^n.
            RingMatrix dx = x.diff(i + 1);
            for (int c = 0; c < dx.cols(); ++c) {
                RingElem e = dx.at(a, c);
                if (e.is_zero()) continue;
                if (!odd(n)) e = e.scale(minus1);
                int row = off[n - 1 - nlo].at(i + 1) + c * y.at(i + n).gens.rank() + b;
                m.at(row, static_cast<int>(s)) = m.at(row, static_cast<int>(s)) + e;
            }
        }
        diffs.push_back(std::move(m));
    }
    h.cx = Complex::make(alg, nlo, std::move(comps), std::move(diffs));
    return h;
}

std::vector<RingMatrix> hom_element_maps(const HomComplex& h, const Complex& x,
                                         const Complex& y, int n, int d, const Vec& coords) {
    AlgebraPtr alg = x.algebra();
    std::vector<RingMatrix> maps;
    int lo = x.empty() ? 0 : x.lo();
    for (int i = lo; !x.empty() && i <= x.hi(); ++i)
        maps.emplace_back(alg, y.at(i + n).gens.rank(), x.at(i).gens.rank());
    if (!h.cx.in_range(n)) return maps;
    FreePieces fp(h.cx.at(n).gens);
    const auto& gl = h.gens_at(n);
    size_t idx = 0;
    for (size_t g = 0; g < gl.size(); ++g)
        for (const Monomial& mo : fp.block_basis(static_cast<int>(g), d)) {
            if (idx >= coords.size()) throw std::logic_error("hom element: coordinate mismatch");
            Scalar c = coords[idx++];
            if (c != 0) {
                RingMatrix& m = maps[gl[g].i - lo];
                m.at(gl[g].b, gl[g].a) =
                    m.at(gl[g].b, gl[g].a) + RingElem::monomial(alg, mo, c);
            }
        }
    if (idx != coords.size()) throw std::logic_error("hom element: coordinate mismatch");
    return maps;
}

std::vector<Morphism> chain_map_basis(const Complex& x, const Complex& y) {
    std::vector<Morphism> out;
    HomComplex h = hom_complex(x, y);
    if (!h.cx.in_range(0)) return out;
    ComplexPieces hp(h.cx);
    Mat dm = hp.diff_matrix(0, 0);
    for (const Vec& v : dm.kernel()) {
        std::vector<RingMatrix> maps = hom_element_maps(h, x, y, 0, 0, v);
        out.push_back(Morphism::make(x, y, x.lo(), std::move(maps)));
    }
    return out;
}

QuasiIsoReport is_quasi_iso(const Morphism& f, int degree_cap) {
    const Complex& x = f.src();
    const Complex& y = f.dst();
    AlgebraPtr alg = x.algebra();
    QuasiIsoReport r;
    ScanWindow w = scan_window(*alg, std::max(x.max_gen_degree(), y.max_gen_degree()), degree_cap);
    r.certified = w.certified;
    if (x.empty() && y.empty()) {
        r.yes = true;
        return r;
    }
    ComplexPieces xp(x), yp(y);
    int ilo = std::min(x.empty() ? y.lo() : x.lo(), y.empty() ? x.lo() : y.lo());
    int ihi = std::max(x.empty() ? y.hi() : x.hi(), y.empty() ? x.hi() : y.hi());
    int dmin = std::min(x.min_internal_degree(), y.min_internal_degree());
    for (int i = ilo; i <= ihi; ++i)
        for (int d = dmin; d <= w.hi; ++d) {
            int hx = 0, hy = 0;
            if (xp.dim(i, d) > 0)
                hx = xp.dim(i, d) - xp.diff_matrix(i, d).rank() - xp.diff_matrix(i + 1, d).rank();
            if (yp.dim(i, d) > 0)
                hy = yp.dim(i, d) - yp.diff_matrix(i, d).rank() - yp.diff_matrix(i + 1, d).rank();
            if (hx != hy) {
                r.failures.push_back({i, d, "homology dimensions differ"});
                continue;
            }
            if (hx == 0) continue;
            EchelonSpace sp(yp.dim(i, d), alg->field());
            sp.insert_cols(yp.boundary_space(i, d));
            int base = sp.dim();
            Mat fm = matrix_of(f.map_at(i), yp.at(i), xp.at(i), d);
            Mat zx = xp.cycle_space(i, d);
            for (int j = 0; j < zx.cols(); ++j) sp.insert(fm.apply(zx.col(j)));
            if (sp.dim() - base != hy)
                r.failures.push_back({i, d, "induced map on homology is not bijective"});
        }
    r.yes = r.failures.empty();
    return r;
}

}  // namespace cidim
