#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cidim/ring.hpp"

namespace cidim {

// Graded free module given by its generator degrees.
struct FreeModule {
    AlgebraPtr alg;
    std::vector<int> degs;

    int rank() const { return static_cast<int>(degs.size()); }
    int min_deg() const;  // 0 for the zero module
    int max_deg() const;
};

FreeModule direct_sum(const FreeModule& a, const FreeModule& b);

// Matrix over the algebra. Columns index source generators, rows target
// generators; a degree-0 map has entry(i,j) homogeneous of degree
// src.degs[j] - tgt.degs[i].
class RingMatrix {
public:
    RingMatrix() : rows_(0), cols_(0) {}
    RingMatrix(AlgebraPtr a, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const AlgebraPtr& algebra() const { return alg_; }

    RingElem& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const RingElem& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<RingElem> col(int j) const;
    void set_col(int j, const std::vector<RingElem>& v);

    RingMatrix times(const RingMatrix& rhs) const;
    std::vector<RingElem> apply(const std::vector<RingElem>& x) const;
    bool is_zero() const;
    RingMatrix transpose() const;
    RingMatrix scaled(Scalar c) const;
    RingMatrix minus(const RingMatrix& o) const;

private:
    AlgebraPtr alg_;
    int rows_, cols_;
    std::vector<RingElem> a_;
};

// Throws unless every entry of m is zero or homogeneous of degree
// src.degs[j] - tgt.degs[i] (so m is a degree-0 map src -> tgt).
void validate_map_degrees(const RingMatrix& m, const FreeModule& tgt, const FreeModule& src,
                          const std::string& what);

// Finitely presented graded module: cokernel of rels : (free) -> gens.
// Relation columns must be homogeneous; zero columns are dropped. An
// empty relation list presents a free module.
struct GradedModule {
    FreeModule gens;
    RingMatrix rels;
    std::vector<int> rel_degs;  // degree of each relation column

    static GradedModule free_module(FreeModule f);
    static GradedModule make(FreeModule gens, RingMatrix rels);
    static GradedModule zero(AlgebraPtr a);

    bool presented_free() const { return rels.cols() == 0; }
    const AlgebraPtr& algebra() const { return gens.alg; }
};

GradedModule direct_sum(const GradedModule& a, const GradedModule& b);
GradedModule shift_degrees(const GradedModule& m, int by);  // internal degree shift

// Residue field k = R/m as a presented module.
GradedModule residue_field(const AlgebraPtr& a);

// ---- graded piece machinery -------------------------------------------
//
// Exact k-linear views of the graded pieces of a module. Elements are
// spoken of in two forms: a coordinate vector in a chosen basis of the
// degree-d piece, and a generator-level representative (a column of ring
// elements over the module's generators).

class Pieces {
public:
    virtual ~Pieces() = default;
    virtual const AlgebraPtr& algebra() const = 0;
    virtual int gen_rank() const = 0;
    virtual int min_degree() const = 0;
    virtual int max_gen_degree() const = 0;
    virtual int dim(int d) = 0;
    // Matrix of multiplication by variable v : piece(d) -> piece(d+1).
    virtual Mat mult_var(int var, int d) = 0;
    virtual Vec coords_of(int d, const std::vector<RingElem>& col) = 0;
    virtual std::vector<RingElem> rep(int d, const Vec& v) = 0;
};

// The degree-d piece of a free module has k-basis {(gen j, monomial m)}
// with m a normal monomial of degree d - degs[j]; ordered by generator
// index, then monomials in descending lex order.
class FreePieces : public Pieces {
public:
    explicit FreePieces(FreeModule f) : f_(std::move(f)) {}

    const FreeModule& module() const { return f_; }
    const AlgebraPtr& algebra() const override { return f_.alg; }
    int gen_rank() const override { return f_.rank(); }
    int min_degree() const override { return f_.min_deg(); }
    int max_gen_degree() const override { return f_.max_deg(); }

    int dim(int d) override;
    int block_offset(int j, int d);
    const std::vector<Monomial>& block_basis(int j, int d);  // algebra basis in degree d-degs[j]
    int index_of(int d, int j, const Monomial& m);

    Vec coords_of(int d, const std::vector<RingElem>& col) override;
    std::vector<RingElem> rep(int d, const Vec& v) override;

    Mat mult_var(int var, int d) override;

private:
    FreeModule f_;
    std::map<int, std::vector<std::vector<Monomial>>> blocks_;  // degree -> per-gen basis
    const std::vector<std::vector<Monomial>>& blocks(int d);
};

// Matrix of a degree-0 map (given by a RingMatrix on generators) on the
// degree-d pieces. Dispatches to a fast path when both sides are free.
Mat matrix_of(const RingMatrix& m, Pieces& tgt, Pieces& src, int d);

// Columns spanning, in degree d, the submodule generated by the given
// homogeneous columns (all monomial multiples of the right degree).
Mat span_cols(Pieces& amb, const std::vector<std::vector<RingElem>>& gens,
              const std::vector<int>& gen_degs, int d);

// ---- scan windows ------------------------------------------------------
//
// Internal-degree scans stop at a cap. Over an artinian algebra the pieces
// of a free module vanish above max generator degree + top degree, which
// certifies exhaustive scans; otherwise results are valid up to the cap.
struct ScanWindow {
    int hi;
    bool certified;
};
ScanWindow scan_window(const GradedAlgebra& a, int max_gen_deg, int cap);

// ---- submodules of a free module --------------------------------------

struct SubmoduleGen {
    std::vector<RingElem> col;  // element of the ambient free module
    int degree;
};

// Minimal homogeneous generators of a submodule S of the ambient module,
// where piece(d) returns columns spanning S_d in piece coords. Candidates
// already inside mod_space(d) + m*S are skipped, so passing a boundary
// space computes generators of the subquotient S/(S cap B).
std::vector<SubmoduleGen> minimal_generators(Pieces& amb, const std::function<Mat(int)>& piece,
                                             int dlo, int dhi,
                                             const std::function<Mat(int)>& mod_space = {});

// Presentation of the module generated by gens inside amb (or the image
// of that module in amb/mod_space): generators = gens, relations = minimal
// syzygies. The syzygy scan picks its own window from the generator
// degrees; degree_cap bounds it on rings of infinite k-dimension.
GradedModule presentation_of(Pieces& amb, const std::vector<SubmoduleGen>& gens, int degree_cap,
                             const std::function<Mat(int)>& mod_space = {});

// Coefficients expressing a homogeneous element of amb (given at its
// degree) as a combination of the listed generators, or nullopt.
std::optional<std::vector<RingElem>> express_in_generators(Pieces& amb,
                                                           const std::vector<SubmoduleGen>& gens,
                                                           const std::vector<RingElem>& elem,
                                                           int degree);

// ---- presented module pieces -------------------------------------------

class ModulePieces : public Pieces {
public:
    explicit ModulePieces(GradedModule m);

    const GradedModule& module() const { return m_; }
    const AlgebraPtr& algebra() const override { return m_.gens.alg; }
    int gen_rank() const override { return m_.gens.rank(); }
    int min_degree() const override { return m_.gens.min_deg(); }
    int max_gen_degree() const override { return m_.gens.max_deg(); }

    int dim(int d) override;
    // Quotient coordinates of a free-level coordinate vector.
    Vec project(int d, const Vec& free_coords);
    // Canonical representative in free-level coordinates.
    Vec lift(int d, const Vec& coords);

    Vec coords_of(int d, const std::vector<RingElem>& col) override;
    std::vector<RingElem> rep(int d, const Vec& coords) override;

    Mat mult_var(int var, int d) override;

    FreePieces& free_pieces() { return fp_; }

private:
    GradedModule m_;
    FreePieces fp_;
    struct DegreeData {
        EchelonSpace rel;
        std::vector<int> coset;  // ambient indices forming the quotient basis
    };
    std::map<int, DegreeData> data_;
    DegreeData& at(int d);
};

// Pieces view of a presented module: FreePieces when the presentation has
// no relations, ModulePieces otherwise.
std::unique_ptr<Pieces> make_pieces(const GradedModule& m);

std::map<int, int> dim_table(const GradedModule& m, int dhi);

}  // namespace cidim
