#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cidim/dimensions.hpp"
#include "cidim/invariants.hpp"
#include "cidim/resolution.hpp"

namespace cidim {

using Rng = std::mt19937_64;

// ---- seeded generators --------------------------------------------------
//
// Shapes are kept small on purpose: at most three variables, at most three
// homological degrees, generator degrees at most three. Everything drawn
// from the same Rng state is reproducible bit for bit.

// The three headline rings: GF(p)[x]/(x^2), GF(p)[x,y],
// GF(p)[s,t]/(s^2,st,t^2).
std::vector<AlgebraPtr> headline_algebras(Scalar p);

// Headline rings plus GF(p)[x,y]/(x^2,y^3) and GF(p)[x]/(x^3).
std::vector<AlgebraPtr> algebra_pool(Scalar p);

// Random presented module: up to max_gens generators in degrees <= 3 with a
// few random homogeneous relation columns. Betti growth over the doubling
// socle ring is tamed by keeping max_gens small there.
GradedModule random_module(const AlgebraPtr& a, Rng& rng, int max_gens);

// Random complex: a module in level 0, a suspension of one, a two-term free
// complex, or a short piece of a resolution. At most three levels.
Complex random_complex(const AlgebraPtr& a, Rng& rng, int degree_cap);

// Random chain map between free complexes: GF(p) combination of a basis of
// the degree-zero chain maps, or the zero map when the basis is empty.
Morphism random_chain_map(const Complex& x, const Complex& y, Rng& rng);

// Degreewise exact 0 -> A -> B -> C -> 0 of complexes. Either a split sum
// or a syzygy sequence 0 -> C_1 -> F_0 -> M -> 0, optionally suspended.
struct SesInstance {
    Morphism incl, proj;
};
SesInstance random_ses(const AlgebraPtr& a, Rng& rng, int degree_cap);

// ---- verification cases -------------------------------------------------

struct CaseResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> notes;  // failure details and key readings
};

CaseResult criterion_socle_example();                 // 1
CaseResult criterion_hypersurface_residue_field();    // 2
CaseResult criterion_polynomial_residue_field();      // 3
CaseResult criterion_poincare_identities(uint64_t seed);  // 4
CaseResult criterion_syzygy_formulas(uint64_t seed);      // 5
CaseResult criterion_structural_suite(uint64_t seed);     // 6
CaseResult criterion_two_of_three(uint64_t seed);         // 7
CaseResult criterion_ci_detection();                      // 8

std::vector<CaseResult> run_acceptance(uint64_t seed);

// One line per case: "PASS  3  <name>  (0.42s)", notes indented below
// failures, then a summary line.
std::string render_results(const std::vector<CaseResult>& results);

}  // namespace cidim
