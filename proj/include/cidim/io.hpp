#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "cidim/dimensions.hpp"

namespace cidim {

using json = nlohmann::ordered_json;

// Raised for malformed element text or malformed object json; offset points
// at the offending character of the parsed string when known.
struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& what, size_t off)
        : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"),
          offset(off) {}
};

// ---- element text -------------------------------------------------------
//
// Grammar: sum of terms joined by + or -, each term an optional integer
// coefficient and variable powers joined by *, e.g. "3*s + 2*t", "s^2",
// "x^2*y - 5". Printing is canonical: normalized coefficients, descending
// monomial order, " + " separators.
std::string monomial_str(const GradedAlgebra& a, const Monomial& m);
std::string elem_str(const RingElem& e);
RingElem parse_elem(const AlgebraPtr& a, const std::string& text);
Monomial parse_monomial_text(const AlgebraPtr& a, const std::string& text);

// ---- objects as json ----------------------------------------------------

AlgebraPtr ring_from_json(const json& j);
json ring_to_json(const GradedAlgebra& a);

RingMatrix matrix_from_json(const AlgebraPtr& a, const json& j);
json matrix_to_json(const RingMatrix& m);

GradedModule module_from_json(const AlgebraPtr& a, const json& j);
json module_to_json(const GradedModule& m);

Complex complex_from_json(const AlgebraPtr& a, const json& j);
json complex_to_json(const Complex& x);

// Accepts {"kind":"module"} or {"kind":"complex"}; modules are placed in
// level zero.
Complex object_from_json(const AlgebraPtr& a, const json& j);

std::vector<DeformationSpec> registry_from_json(const GradedAlgebra& r, const json& j);
json registry_to_json(const GradedAlgebra& r, const std::vector<DeformationSpec>& specs);

// ---- report fragments ---------------------------------------------------

json verdict_to_json(const DimensionVerdict& v);
json depth_to_json(const DepthValue& d);
json complexity_to_json(const ComplexityVerdict& v);
json homology_to_json(const HomologyTable& t);
json betti_to_json(const ResolutionResult& r);
json poincare_to_json(const PoincareData& p);
json ci_bound_to_json(const CiBound& b);
json hierarchy_to_json(const HierarchyReport& h);

// First row is the header; columns are padded to equal width.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace cidim
