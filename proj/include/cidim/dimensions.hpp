#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cidim/invariants.hpp"

namespace cidim {

// ---- duals --------------------------------------------------------------

// Hom(M, R): the kernel of the transposed presentation map inside the dual
// free module, with a chosen minimal generating set and its presentation.
struct DualData {
    GradedModule mod;
    FreeModule ambient;              // dual of the free cover of M
    std::vector<SubmoduleGen> gens;  // generators as columns in `ambient`
    bool certified = true;
};
DualData dual_module_data(const GradedModule& m, int degree_cap);
GradedModule dual_module(const GradedModule& m, int degree_cap);

// ---- total reflexivity --------------------------------------------------

struct ReflexivityReport {
    bool bidual_iso = false;
    bool ext_vanishes = false;       // derived Hom(M, R) in levels -1..-window
    bool dual_ext_vanishes = false;  // same for the dual module
    int window = 0;
    bool certified = true;
    std::string failure;

    bool ok() const { return bidual_iso && ext_vanishes && dual_ext_vanishes; }
};
ReflexivityReport totally_reflexive_test(const GradedModule& m, int window, int degree_cap);

// Largest i <= cutoff - 2 with nonvanishing i-th right-derived Hom into the
// ring, or nullopt when everything in that range vanishes.
std::optional<int> ext_top(const Complex& x, int cutoff, int degree_cap);

// ---- resolving-class dimensions ----------------------------------------

struct OracleVerdict {
    bool member = false;
    bool certified = true;
    std::string evidence;
};

// Membership test for a class closed under syzygies. The optional series
// is the Betti tail of the module as read off an ambient resolution; when
// absent the oracle computes its own.
struct ResolvingClassOracle {
    std::string name;
    std::function<OracleVerdict(const GradedModule&, const PoincareData*)> test;
};

ResolvingClassOracle free_oracle(int cutoff, int degree_cap);
ResolvingClassOracle totally_reflexive_oracle(int window, int degree_cap);
ResolvingClassOracle ci_star_oracle(int window, int cutoff, int degree_cap);

// Least n at or above the homology sup whose n-th syzygy lies in the class.
DimensionVerdict b_dimension(const Complex& x, const ResolvingClassOracle& cls, int cutoff,
                             int degree_cap);

DimensionVerdict g_dimension(const Complex& x, int cutoff, int degree_cap, int window);
DimensionVerdict g_dimension(const GradedModule& m, int cutoff, int degree_cap, int window);

// Totally reflexive with a Betti sequence of at most polynomial growth.
// Superpolynomial growth evidence yields non-membership marked uncertified.
OracleVerdict ci_star_membership(const GradedModule& m, int window, int cutoff,
                                 int degree_cap);

DimensionVerdict pci_dimension(const Complex& x, int cutoff, int degree_cap, int window);
DimensionVerdict pci_dimension(const GradedModule& m, int cutoff, int degree_cap, int window);

// A finite homological dimension of x must equal depth(R) - depth(x).
bool ab_consistent(const Complex& x, const DimensionVerdict& v, int cutoff, int degree_cap);

// ---- deformations -------------------------------------------------------

// Presents the base ring as Q/(f) for Q = k[vars]/(q_relations) and f a
// monomial sequence that is regular on Q.
struct DeformationSpec {
    std::vector<std::string> ambient_vars;
    std::vector<Monomial> q_relations;
    std::vector<Monomial> regular_sequence;
};

void validate_deformation(const GradedAlgebra& r, const DeformationSpec& spec);
AlgebraPtr deformation_algebra(const DeformationSpec& spec, Scalar p);

// The trivial presentation Q = R, plus the polynomial ambient when the
// defining relations form a regular sequence.
std::vector<DeformationSpec> standard_deformations(const GradedAlgebra& r);

// The same complex viewed over Q: components gain the relations f * gen,
// differential entries are carried across unchanged.
Complex restrict_scalars(const Complex& x, const AlgebraPtr& q,
                         const std::vector<Monomial>& regular_sequence);

struct CiBoundRow {
    std::string label;
    int codim;
    DimensionVerdict pd_q;
};

// Best value of pd_Q(x) - codim over the deformation family. An at-least
// verdict means no member of the family produced a finite bound within the
// cutoff; it bounds the family minimum, not the dimension itself.
struct CiBound {
    DimensionVerdict dim;
    std::string witness;
    std::vector<CiBoundRow> rows;
};
CiBound ci_dim_upper(const Complex& x, const std::vector<DeformationSpec>& extra, int cutoff,
                     int degree_cap);
CiBound ci_dim_upper(const GradedModule& m, const std::vector<DeformationSpec>& extra,
                     int cutoff, int degree_cap);

// Bound transfer along the n-th syzygy; a vanishing syzygy certifies the
// dimension as the projective dimension.
struct SyzygyReduction {
    int n = 0;
    bool syzygy_vanishes = false;
    DimensionVerdict c_bound;  // bound computed for the syzygy
    DimensionVerdict x_bound;  // induced bound for the input
};
SyzygyReduction ci_syzygy_reduce(const Complex& x, int n,
                                 const std::vector<DeformationSpec>& extra, int cutoff,
                                 int degree_cap);

// ---- pushout along a free cover ----------------------------------------

// From maps L -> M -> N with exact rows and a free cover P ->> N, builds
// 0 -> K -> P (+) L -> M -> 0 with the lifted surjection [gamma | mu].
struct PushoutData {
    GradedModule kernel;
    GradedModule middle;  // P (+) L
    RingMatrix incl;      // kernel generators inside `middle`
    RingMatrix surj;      // middle -> M
    RingMatrix gamma;     // P -> M lift of rho through pi
    bool exact = false;
    bool certified = true;
};
PushoutData es_pushout(const GradedModule& l, const GradedModule& m, const GradedModule& n,
                       const RingMatrix& mu, const RingMatrix& pi, const FreeModule& p,
                       const RingMatrix& rho, int degree_cap);

// ---- the dimension hierarchy -------------------------------------------

struct HierarchyReport {
    DimensionVerdict gdim, pci, ci, pd;
    bool chain_ok = true;     // no detectable violation of gdim<=pci<=ci<=pd
    bool equality_ok = true;  // finite right value forces equality to its left
    std::string render() const;
};
HierarchyReport hierarchy_check(const Complex& x, const std::vector<DeformationSpec>& extra,
                                int cutoff, int degree_cap, int window);
HierarchyReport hierarchy_check(const GradedModule& m,
                                const std::vector<DeformationSpec>& extra, int cutoff,
                                int degree_cap, int window);

}  // namespace cidim
