#include "cidim/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace cidim {

int FreeModule::min_deg() const {
    int d = 0;
    for (size_t i = 0; i < degs.size(); ++i) d = i == 0 ? degs[i] : std::min(d, degs[i]);
    return d;
}

int FreeModule::max_deg() const {
    int d = 0;
    for (size_t i = 0; i < degs.size(); ++i) d = i == 0 ? degs[i] : std::max(d, degs[i]);
    return d;
}

FreeModule direct_sum(const FreeModule& a, const FreeModule& b) {
    require_same_algebra(a.alg, b.alg);
    FreeModule r{a.alg, a.degs};
    r.degs.insert(r.degs.end(), b.degs.begin(), b.degs.end());
    return r;
}

RingMatrix::RingMatrix(AlgebraPtr a, int rows, int cols)
    : alg_(std::move(a)), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, RingElem::zero(alg_)) {}

std::vector<RingElem> RingMatrix::col(int j) const {
    std::vector<RingElem> v;
    v.reserve(rows_);
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

void RingMatrix::set_col(int j, const std::vector<RingElem>& v) {
    if (static_cast<int>(v.size()) != rows_) throw std::logic_error("set_col: size mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

RingMatrix RingMatrix::times(const RingMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::logic_error("RingMatrix::times: shape mismatch");
    RingMatrix out(alg_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + at(i, k) * rhs.at(k, j);
            }
        }
    return out;
}

std::vector<RingElem> RingMatrix::apply(const std::vector<RingElem>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::logic_error("RingMatrix::apply: shape");
    std::vector<RingElem> out(rows_, RingElem::zero(alg_));
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            if (!at(i, k).is_zero() && !x[k].is_zero()) out[i] = out[i] + at(i, k) * x[k];
    return out;
}

bool RingMatrix::is_zero() const {
    for (const RingElem& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

RingMatrix RingMatrix::scaled(Scalar c) const {
    RingMatrix out(alg_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].scale(c);
    return out;
}

RingMatrix RingMatrix::minus(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("RingMatrix::minus: shape");
    RingMatrix out(alg_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix out(alg_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

void validate_map_degrees(const RingMatrix& m, const FreeModule& tgt, const FreeModule& src,
                          const std::string& what) {
    if (m.rows() != tgt.rank() || m.cols() != src.rank())
        throw std::invalid_argument(what + ": matrix shape does not match modules");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const RingElem& e = m.at(i, j);
            if (e.is_zero()) continue;
            if (!e.is_homogeneous())
                throw std::invalid_argument(what + ": inhomogeneous entry");
            if (e.degree_or(0) != src.degs[j] - tgt.degs[i])
                throw std::invalid_argument(what + ": entry degree breaks degree-0 grading");
        }
}

GradedModule GradedModule::free_module(FreeModule f) {
    GradedModule m;
    m.rels = RingMatrix(f.alg, f.rank(), 0);
    m.gens = std::move(f);
    return m;
}

GradedModule GradedModule::zero(AlgebraPtr a) {
    return free_module(FreeModule{std::move(a), {}});
}

GradedModule GradedModule::make(FreeModule gens, RingMatrix rels) {
    if (rels.rows() != gens.rank())
        throw std::invalid_argument("presentation: relation rows must match generators");
    GradedModule m;
    m.gens = std::move(gens);
    m.rels = RingMatrix(m.gens.alg, m.gens.rank(), 0);
    std::vector<std::vector<RingElem>> keep;
    std::vector<int> keep_degs;
    for (int j = 0; j < rels.cols(); ++j) {
        int deg = 0;
        bool seen = false;
        for (int i = 0; i < rels.rows(); ++i) {
            const RingElem& e = rels.at(i, j);
            if (e.is_zero()) continue;
            if (!e.is_homogeneous())
                throw std::invalid_argument("presentation: inhomogeneous relation entry");
            int d = e.degree_or(0) + m.gens.degs[i];
            if (seen && d != deg)
                throw std::invalid_argument("presentation: relation column is not homogeneous");
            deg = d;
            seen = true;
        }
        if (seen) {
            keep.push_back(rels.col(j));
            keep_degs.push_back(deg);
        }
    }
    m.rels = RingMatrix(m.gens.alg, m.gens.rank(), static_cast<int>(keep.size()));
    for (size_t j = 0; j < keep.size(); ++j) m.rels.set_col(static_cast<int>(j), keep[j]);
    m.rel_degs = std::move(keep_degs);
    return m;
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
    require_same_algebra(a.algebra(), b.algebra());
    FreeModule gens = direct_sum(a.gens, b.gens);
    RingMatrix rels(a.algebra(), gens.rank(), a.rels.cols() + b.rels.cols());
    for (int j = 0; j < a.rels.cols(); ++j)
        for (int i = 0; i < a.rels.rows(); ++i) rels.at(i, j) = a.rels.at(i, j);
    for (int j = 0; j < b.rels.cols(); ++j)
        for (int i = 0; i < b.rels.rows(); ++i)
            rels.at(a.gens.rank() + i, a.rels.cols() + j) = b.rels.at(i, j);
    return GradedModule::make(std::move(gens), std::move(rels));
}

GradedModule shift_degrees(const GradedModule& m, int by) {
    GradedModule out = m;
    for (int& d : out.gens.degs) d += by;
    for (int& d : out.rel_degs) d += by;
    return out;
}

GradedModule residue_field(const AlgebraPtr& a) {
    FreeModule gens{a, {0}};
    RingMatrix rels(a, 1, a->nvars());
    for (int v = 0; v < a->nvars(); ++v) rels.at(0, v) = RingElem::variable(a, v);
    return GradedModule::make(std::move(gens), std::move(rels));
}

const std::vector<std::vector<Monomial>>& FreePieces::blocks(int d) {
    auto it = blocks_.find(d);
    if (it != blocks_.end()) return it->second;
    std::vector<std::vector<Monomial>> bs;
    bs.reserve(f_.degs.size());
    for (int dg : f_.degs) bs.push_back(f_.alg->basis(d - dg));
    return blocks_.emplace(d, std::move(bs)).first->second;
}

int FreePieces::dim(int d) {
    int n = 0;
    for (const auto& b : blocks(d)) n += static_cast<int>(b.size());
    return n;
}

int FreePieces::block_offset(int j, int d) {
    const auto& bs = blocks(d);
    int n = 0;
    for (int i = 0; i < j; ++i) n += static_cast<int>(bs[i].size());
    return n;
}

const std::vector<Monomial>& FreePieces::block_basis(int j, int d) { return blocks(d)[j]; }

int FreePieces::index_of(int d, int j, const Monomial& m) {
    const auto& b = blocks(d)[j];
    auto it = std::lower_bound(b.begin(), b.end(), m,
                               [](const Monomial& x, const Monomial& y) { return lex_less(y, x); });
    if (it == b.end() || !(*it == m))
        throw std::logic_error("FreePieces::index_of: monomial not in piece basis");
    return block_offset(j, d) + static_cast<int>(it - b.begin());
}

Vec FreePieces::coords_of(int d, const std::vector<RingElem>& col) {
    if (static_cast<int>(col.size()) != f_.rank())
        throw std::logic_error("coords_of: column size mismatch");
    Vec v(dim(d), 0);
    const PrimeField& fld = f_.alg->field();
    for (int i = 0; i < f_.rank(); ++i)
        for (const Term& t : col[i].terms()) {
            if (t.m.degree() + f_.degs[i] != d)
                throw std::logic_error("coords_of: inhomogeneous column");
            v[index_of(d, i, t.m)] = fld.add(v[index_of(d, i, t.m)], t.c);
        }
    return v;
}

std::vector<RingElem> FreePieces::rep(int d, const Vec& v) {
    std::vector<std::vector<Term>> raw(f_.rank());
    int idx = 0;
    for (int j = 0; j < f_.rank(); ++j)
        for (const Monomial& m : block_basis(j, d)) {
            if (v[idx]) raw[j].push_back(Term{m, v[idx]});
            ++idx;
        }
    std::vector<RingElem> col;
    col.reserve(f_.rank());
    for (int j = 0; j < f_.rank(); ++j)
        col.push_back(RingElem::normal_form(f_.alg, std::move(raw[j])));
    return col;
}

Mat FreePieces::mult_var(int var, int d) {
    Mat out(dim(d + 1), dim(d), f_.alg->field());
    int idx = 0;
    for (int j = 0; j < f_.rank(); ++j)
        for (const Monomial& m : block_basis(j, d)) {
            Monomial mm = m;
            mm.e[var] += 1;
            if (!f_.alg->in_ideal(mm)) out.at(index_of(d + 1, j, mm), idx) = 1;
            ++idx;
        }
    return out;
}

static Mat matrix_of_free(const RingMatrix& m, FreePieces& tgt, FreePieces& src, int d) {
    Mat out(tgt.dim(d), src.dim(d), tgt.algebra()->field());
    const PrimeField& fld = tgt.algebra()->field();
    const GradedAlgebra& alg = *tgt.algebra();
    int col = 0;
    for (int j = 0; j < src.module().rank(); ++j)
        for (const Monomial& mon : src.block_basis(j, d)) {
            for (int i = 0; i < m.rows(); ++i)
                for (const Term& t : m.at(i, j).terms()) {
                    Monomial mm = mono_mul(t.m, mon);
                    if (alg.in_ideal(mm)) continue;
                    int row = tgt.index_of(d, i, mm);
                    out.at(row, col) = fld.add(out.at(row, col), t.c);
                }
            ++col;
        }
    return out;
}

Mat matrix_of(const RingMatrix& m, Pieces& tgt, Pieces& src, int d);

Mat span_cols(Pieces& amb, const std::vector<std::vector<RingElem>>& gens,
              const std::vector<int>& gen_degs, int d) {
    std::vector<Vec> cols;
    for (size_t l = 0; l < gens.size(); ++l) {
        for (const Monomial& m : amb.algebra()->basis(d - gen_degs[l])) {
            std::vector<RingElem> prod;
            prod.reserve(gens[l].size());
            for (const RingElem& e : gens[l]) prod.push_back(e.times_mono(m));
            cols.push_back(amb.coords_of(d, prod));
        }
    }
    Mat out(amb.dim(d), static_cast<int>(cols.size()), amb.algebra()->field());
    for (size_t j = 0; j < cols.size(); ++j) out.set_col(static_cast<int>(j), cols[j]);
    return out;
}

ScanWindow scan_window(const GradedAlgebra& a, int max_gen_deg, int cap) {
    if (a.artinian()) {
        int bound = max_gen_deg + a.top_degree();
        return ScanWindow{std::min(cap, bound), bound <= cap};
    }
    return ScanWindow{cap, false};
}

std::vector<SubmoduleGen> minimal_generators(Pieces& amb, const std::function<Mat(int)>& piece,
                                             int dlo, int dhi,
                                             const std::function<Mat(int)>& mod_space) {
    std::vector<SubmoduleGen> out;
    Mat prev;  // columns spanning the previous degree's piece
    const PrimeField& fld = amb.algebra()->field();
    for (int d = dlo; d <= dhi; ++d) {
        int n = amb.dim(d);
        Mat cur = piece(d);
        if (n == 0) { prev = cur; continue; }
        EchelonSpace sp(n, fld);
        if (mod_space) sp.insert_cols(mod_space(d));
        if (prev.cols() > 0 && prev.rows() > 0)
            for (int v = 0; v < amb.algebra()->nvars(); ++v) {
                Mat shift = amb.mult_var(v, d - 1).times(prev);
                sp.insert_cols(shift);
            }
        for (int j = 0; j < cur.cols(); ++j) {
            Vec c = cur.col(j);
            if (sp.insert(c)) out.push_back(SubmoduleGen{amb.rep(d, c), d});
        }
        prev = cur;
    }
    return out;
}

GradedModule presentation_of(Pieces& amb, const std::vector<SubmoduleGen>& gens, int degree_cap,
                             const std::function<Mat(int)>& mod_space) {
    AlgebraPtr a = amb.algebra();
    FreeModule e{a, {}};
    for (const SubmoduleGen& g : gens) e.degs.push_back(g.degree);
    int dhi = std::max(scan_window(*a, e.max_deg(), degree_cap).hi, e.max_deg());
    FreePieces ep(e);
    const PrimeField& fld = a->field();

    auto kernel_piece = [&](int d) -> Mat {
        int en = ep.dim(d);
        Mat phi(amb.dim(d), en, fld);
        int col = 0;
        for (int l = 0; l < e.rank(); ++l)
            for (const Monomial& m : ep.block_basis(l, d)) {
                std::vector<RingElem> prod;
                prod.reserve(gens[l].col.size());
                for (const RingElem& x : gens[l].col) prod.push_back(x.times_mono(m));
                phi.set_col(col, amb.coords_of(d, prod));
                ++col;
            }
        if (mod_space) {
            EchelonSpace bs(amb.dim(d), fld);
            bs.insert_cols(mod_space(d));
            for (int j = 0; j < phi.cols(); ++j) phi.set_col(j, bs.residual(phi.col(j)));
        }
        std::vector<Vec> ker = phi.kernel();
        Mat out(en, static_cast<int>(ker.size()), fld);
        for (size_t j = 0; j < ker.size(); ++j) out.set_col(static_cast<int>(j), ker[j]);
        return out;
    };

    std::vector<SubmoduleGen> rels = minimal_generators(ep, kernel_piece, e.min_deg(), dhi);
    RingMatrix rm(a, e.rank(), static_cast<int>(rels.size()));
    for (size_t j = 0; j < rels.size(); ++j) rm.set_col(static_cast<int>(j), rels[j].col);
    return GradedModule::make(std::move(e), std::move(rm));
}

ModulePieces::ModulePieces(GradedModule m) : m_(std::move(m)), fp_(m_.gens) {}

ModulePieces::DegreeData& ModulePieces::at(int d) {
    auto it = data_.find(d);
    if (it != data_.end()) return it->second;
    DegreeData dd{EchelonSpace(fp_.dim(d), m_.algebra()->field()), {}};
    std::vector<std::vector<RingElem>> rel_cols;
    for (int j = 0; j < m_.rels.cols(); ++j) rel_cols.push_back(m_.rels.col(j));
    dd.rel.insert_cols(span_cols(fp_, rel_cols, m_.rel_degs, d));
    // Coset representatives: ambient coordinates away from the relation
    // span's pivots (residuals are supported exactly there).
    std::vector<bool> is_piv(fp_.dim(d), false);
    for (int p : dd.rel.pivots()) is_piv[p] = true;
    for (int i = 0; i < fp_.dim(d); ++i)
        if (!is_piv[i]) dd.coset.push_back(i);
    return data_.emplace(d, std::move(dd)).first->second;
}

int ModulePieces::dim(int d) { return static_cast<int>(at(d).coset.size()); }

Vec ModulePieces::project(int d, const Vec& free_coords) {
    DegreeData& dd = at(d);
    Vec r = dd.rel.residual(free_coords);
    Vec out(dd.coset.size(), 0);
    for (size_t i = 0; i < dd.coset.size(); ++i) out[i] = r[dd.coset[i]];
    return out;
}

Vec ModulePieces::lift(int d, const Vec& coords) {
    DegreeData& dd = at(d);
    Vec out(fp_.dim(d), 0);
    for (size_t i = 0; i < dd.coset.size(); ++i) out[dd.coset[i]] = coords[i];
    return out;
}

Vec ModulePieces::coords_of(int d, const std::vector<RingElem>& col) {
    return project(d, fp_.coords_of(d, col));
}

std::vector<RingElem> ModulePieces::rep(int d, const Vec& coords) {
    return fp_.rep(d, lift(d, coords));
}

Mat ModulePieces::mult_var(int var, int d) {
    Mat free_mult = fp_.mult_var(var, d);
    Mat out(dim(d + 1), dim(d), m_.algebra()->field());
    DegreeData& dd = at(d);
    for (size_t j = 0; j < dd.coset.size(); ++j) {
        Vec e(fp_.dim(d), 0);
        e[dd.coset[j]] = 1;
        out.set_col(static_cast<int>(j), project(d + 1, free_mult.apply(e)));
    }
    return out;
}

Mat matrix_of(const RingMatrix& m, Pieces& tgt, Pieces& src, int d) {
    auto* ft = dynamic_cast<FreePieces*>(&tgt);
    auto* fs = dynamic_cast<FreePieces*>(&src);
    if (ft && fs) return matrix_of_free(m, *ft, *fs, d);
    auto* mt = dynamic_cast<ModulePieces*>(&tgt);
    auto* ms = dynamic_cast<ModulePieces*>(&src);
    FreePieces& tf = ft ? *ft : mt->free_pieces();
    FreePieces& sf = fs ? *fs : ms->free_pieces();
    Mat free_mat = matrix_of_free(m, tf, sf, d);
    Mat out(tgt.dim(d), src.dim(d), tgt.algebra()->field());
    for (int j = 0; j < src.dim(d); ++j) {
        Vec e(src.dim(d), 0);
        e[j] = 1;
        Vec img = free_mat.apply(ms ? ms->lift(d, e) : e);
        out.set_col(j, mt ? mt->project(d, img) : img);
    }
    return out;
}

std::unique_ptr<Pieces> make_pieces(const GradedModule& m) {
    if (m.presented_free()) return std::make_unique<FreePieces>(m.gens);
    return std::make_unique<ModulePieces>(m);
}

std::optional<std::vector<RingElem>> express_in_generators(Pieces& amb,
                                                           const std::vector<SubmoduleGen>& gens,
                                                           const std::vector<RingElem>& elem,
                                                           int degree) {
    AlgebraPtr a = amb.algebra();
    const PrimeField& fld = a->field();
    Vec target = amb.coords_of(degree, elem);
    // Assemble all monomial multiples of the generators landing in this degree,
    // remembering which generator and monomial produced each column.
    struct ColSrc {
        int gen;
        Monomial mono;
    };
    std::vector<ColSrc> srcs;
    std::vector<Vec> cols;
    for (size_t l = 0; l < gens.size(); ++l)
        for (const Monomial& mo : a->basis(degree - gens[l].degree)) {
            std::vector<RingElem> prod;
            prod.reserve(gens[l].col.size());
            for (const RingElem& x : gens[l].col) prod.push_back(x.times_mono(mo));
            cols.push_back(amb.coords_of(degree, prod));
            srcs.push_back(ColSrc{static_cast<int>(l), mo});
        }
    Mat phi(amb.dim(degree), static_cast<int>(cols.size()), fld);
    for (size_t j = 0; j < cols.size(); ++j) phi.set_col(static_cast<int>(j), cols[j]);
    std::optional<Vec> sol = phi.solve(target);
    if (!sol) return std::nullopt;
    std::vector<RingElem> coeffs(gens.size(), RingElem::zero(a));
    for (size_t j = 0; j < srcs.size(); ++j)
        if ((*sol)[j] != 0)
            coeffs[srcs[j].gen] =
                coeffs[srcs[j].gen] + RingElem::monomial(a, srcs[j].mono, (*sol)[j]);
    return coeffs;
}

std::map<int, int> dim_table(const GradedModule& m, int dhi) {
    std::unique_ptr<Pieces> mp = make_pieces(m);
    std::map<int, int> out;
    int dlo = mp->min_degree();
    for (int d = dlo; d <= dhi; ++d) {
        int n = mp->dim(d);
        if (n) out[d] = n;
    }
    return out;
}

}  // namespace cidim
