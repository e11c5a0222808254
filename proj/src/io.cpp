#include "cidim/io.hpp"

#include <cctype>
#include <sstream>

namespace cidim {

namespace {

// ---- json access with uniform errors -----------------------------------

const json& need(const json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + key + "'", 0);
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'", 0);
    return *it;
}

long long need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer", 0);
    return v.get<long long>();
}

std::vector<std::string> need_string_array(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array", 0);
    std::vector<std::string> out;
    for (const auto& x : v) {
        if (!x.is_string()) throw ParseError(std::string("field '") + key + "' must contain strings", 0);
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::vector<int> need_int_array(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array", 0);
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw ParseError(std::string("field '") + key + "' must contain integers", 0);
        out.push_back(x.get<int>());
    }
    return out;
}

// ---- element text -------------------------------------------------------

struct ElemParser {
    const AlgebraPtr& alg;
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    long long integer() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        if (pos - start > 15) { pos = start; fail("number too long"); }
        return std::stoll(s.substr(start, pos - start));
    }

    int variable() {
        size_t start = pos;
        if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail("expected a variable or a number");
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        std::string name = s.substr(start, pos - start);
        const auto& vars = alg->vars();
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        pos = start;
        fail("unknown variable '" + name + "'");
    }

    // factor := variable ('^' exponent)?
    void factor(Monomial& m) {
        int idx = variable();
        ws();
        int e = 1;
        if (!done() && peek() == '^') {
            ++pos;
            ws();
            long long x = integer();
            if (x > 1000) fail("exponent too large");
            e = static_cast<int>(x);
        }
        m.e[idx] += e;
    }

    // term := (number | factor) ('*' (number | factor))*
    Term term() {
        const PrimeField& f = alg->field();
        Monomial m;
        m.e.assign(alg->nvars(), 0);
        Scalar c = 1;
        auto piece = [&] {
            ws();
            if (done()) fail("unexpected end of input");
            if (std::isdigit(static_cast<unsigned char>(peek())))
                c = f.mul(c, f.reduce(integer()));
            else
                factor(m);
        };
        piece();
        ws();
        while (!done() && peek() == '*') {
            ++pos;
            piece();
            ws();
        }
        return Term{std::move(m), c};
    }

    RingElem parse() {
        std::vector<Term> raw;
        const PrimeField& f = alg->field();
        ws();
        if (done()) fail("empty element");
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos;
        }
        while (true) {
            Term t = term();
            if (negate) t.c = f.neg(t.c);
            raw.push_back(std::move(t));
            ws();
            if (done()) break;
            if (peek() == '+') negate = false;
            else if (peek() == '-') negate = true;
            else fail("expected '+', '-' or end of element");
            ++pos;
        }
        return RingElem::normal_form(alg, std::move(raw));
    }
};

GradedModule component_from_json(const AlgebraPtr& a, const json& j) {
    FreeModule f{a, need_int_array(j, "generator_degrees")};
    auto it = j.find("relations");
    if (it == j.end() || it->is_null()) return GradedModule::free_module(std::move(f));
    RingMatrix rels = matrix_from_json(a, *it);
    if (rels.rows() != f.rank())
        throw ParseError("relation matrix rows must match the generator count", 0);
    return GradedModule::make(std::move(f), std::move(rels));
}

json component_to_json(const GradedModule& m) {
    json j = json::object();
    j["generator_degrees"] = m.gens.degs;
    if (!m.presented_free()) j["relations"] = matrix_to_json(m.rels);
    return j;
}

json dims_object(const std::map<int, int>& by_degree) {
    json o = json::object();
    for (const auto& [d, n] : by_degree) o[std::to_string(d)] = n;
    return o;
}

}  // namespace

// ---- element text -------------------------------------------------------

std::string monomial_str(const GradedAlgebra& a, const Monomial& m) {
    std::string out;
    for (int i = 0; i < a.nvars(); ++i) {
        int e = i < static_cast<int>(m.e.size()) ? m.e[i] : 0;
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += a.vars()[i];
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::string elem_str(const RingElem& e) {
    if (e.is_zero()) return "0";
    const GradedAlgebra& a = *e.algebra();
    std::string out;
    for (const Term& t : e.terms()) {
        if (!out.empty()) out += " + ";
        if (t.m.is_constant()) {
            out += std::to_string(t.c);
        } else if (t.c == 1) {
            out += monomial_str(a, t.m);
        } else {
            out += std::to_string(t.c) + "*" + monomial_str(a, t.m);
        }
    }
    return out;
}

RingElem parse_elem(const AlgebraPtr& a, const std::string& text) {
    ElemParser p{a, text};
    return p.parse();
}

Monomial parse_monomial_text(const AlgebraPtr& a, const std::string& text) {
    RingElem e = parse_elem(a, text);
    if (e.terms().size() != 1 || e.terms()[0].c != 1)
        throw ParseError("expected a plain monomial, got '" + text + "'", 0);
    return e.terms()[0].m;
}

// ---- objects as json ----------------------------------------------------

AlgebraPtr ring_from_json(const json& j) {
    long long p = need_int(j, "characteristic");
    if (p < 2) throw ParseError("characteristic must be at least 2", 0);
    std::vector<std::string> vars = need_string_array(j, "variables");
    if (vars.empty()) throw ParseError("a ring needs at least one variable", 0);
    AlgebraPtr ambient = make_algebra(static_cast<Scalar>(p), vars, {});
    std::vector<Monomial> rels;
    if (j.contains("relations"))
        for (const std::string& r : need_string_array(j, "relations"))
            rels.push_back(parse_monomial_text(ambient, r));
    return make_algebra(static_cast<Scalar>(p), std::move(vars), std::move(rels));
}

json ring_to_json(const GradedAlgebra& a) {
    json j = json::object();
    j["characteristic"] = a.characteristic();
    j["variables"] = a.vars();
    json rels = json::array();
    for (const Monomial& m : a.relations()) rels.push_back(monomial_str(a, m));
    j["relations"] = rels;
    return j;
}

RingMatrix matrix_from_json(const AlgebraPtr& a, const json& j) {
    int rows = static_cast<int>(need_int(j, "rows"));
    int cols = static_cast<int>(need_int(j, "cols"));
    if (rows < 0 || cols < 0) throw ParseError("matrix shape must be nonnegative", 0);
    const json& entries = need(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw ParseError("matrix needs one entries row per row", 0);
    RingMatrix m(a, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix row " + std::to_string(i) + " has the wrong length", 0);
        for (int k = 0; k < cols; ++k) {
            if (!row[k].is_string())
                throw ParseError("matrix entries must be element strings", 0);
            m.at(i, k) = parse_elem(a, row[k].get<std::string>());
        }
    }
    return m;
}

json matrix_to_json(const RingMatrix& m) {
    json j = json::object();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(elem_str(m.at(i, k)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

GradedModule module_from_json(const AlgebraPtr& a, const json& j) {
    if (j.contains("kind") && j.at("kind") != "module")
        throw ParseError("expected an object of kind 'module'", 0);
    return component_from_json(a, j);
}

json module_to_json(const GradedModule& m) {
    json j = json::object();
    j["kind"] = "module";
    json body = component_to_json(m);
    for (auto& [k, v] : body.items()) j[k] = v;
    return j;
}

Complex complex_from_json(const AlgebraPtr& a, const json& j) {
    if (j.contains("kind") && j.at("kind") != "complex")
        throw ParseError("expected an object of kind 'complex'", 0);
    int lo = static_cast<int>(need_int(j, "lo"));
    const json& comps_j = need(j, "components");
    if (!comps_j.is_array()) throw ParseError("field 'components' must be an array", 0);
    std::vector<GradedModule> comps;
    for (const auto& c : comps_j) comps.push_back(component_from_json(a, c));
    if (comps.empty()) return Complex::zero_complex(a);

    std::vector<RingMatrix> diffs;
    if (j.contains("differentials")) {
        const json& ds = j.at("differentials");
        if (!ds.is_array()) throw ParseError("field 'differentials' must be an array", 0);
        for (const auto& d : ds) diffs.push_back(matrix_from_json(a, d));
    }
    if (diffs.size() + 1 != comps.size())
        throw ParseError("a complex with n components needs n-1 differentials", 0);
    return Complex::make(a, lo, std::move(comps), std::move(diffs));
}

json complex_to_json(const Complex& x) {
    json j = json::object();
    j["kind"] = "complex";
    j["lo"] = x.lo();
    json comps = json::array();
    for (int i = x.lo(); i <= x.hi(); ++i) comps.push_back(component_to_json(x.at(i)));
    j["components"] = std::move(comps);
    json diffs = json::array();
    for (int i = x.lo() + 1; i <= x.hi(); ++i) diffs.push_back(matrix_to_json(x.diff(i)));
    j["differentials"] = std::move(diffs);
    return j;
}

Complex object_from_json(const AlgebraPtr& a, const json& j) {
    const json& kind = need(j, "kind");
    if (kind == "module") return Complex::of_module(module_from_json(a, j));
    if (kind == "complex") return complex_from_json(a, j);
    throw ParseError("field 'kind' must be 'module' or 'complex'", 0);
}

std::vector<DeformationSpec> registry_from_json(const GradedAlgebra& r, const json& j) {
    const json& list = need(j, "deformations");
    if (!list.is_array()) throw ParseError("field 'deformations' must be an array", 0);
    std::vector<DeformationSpec> out;
    for (const auto& entry : list) {
        DeformationSpec spec;
        spec.ambient_vars = need_string_array(entry, "ambient_vars");
        AlgebraPtr ambient = make_algebra(r.characteristic(), spec.ambient_vars, {});
        for (const std::string& s : need_string_array(entry, "Q_relations"))
            spec.q_relations.push_back(parse_monomial_text(ambient, s));
        for (const std::string& s : need_string_array(entry, "regular_sequence"))
            spec.regular_sequence.push_back(parse_monomial_text(ambient, s));
        validate_deformation(r, spec);
        out.push_back(std::move(spec));
    }
    return out;
}

json registry_to_json(const GradedAlgebra& r, const std::vector<DeformationSpec>& specs) {
    json j = json::object();
    json list = json::array();
    for (const DeformationSpec& spec : specs) {
        AlgebraPtr ambient = make_algebra(r.characteristic(), spec.ambient_vars, {});
        json e = json::object();
        e["ambient_vars"] = spec.ambient_vars;
        json qr = json::array();
        for (const Monomial& m : spec.q_relations) qr.push_back(monomial_str(*ambient, m));
        e["Q_relations"] = std::move(qr);
        json rs = json::array();
        for (const Monomial& m : spec.regular_sequence) rs.push_back(monomial_str(*ambient, m));
        e["regular_sequence"] = std::move(rs);
        list.push_back(std::move(e));
    }
    j["deformations"] = std::move(list);
    return j;
}

// ---- report fragments ---------------------------------------------------

json verdict_to_json(const DimensionVerdict& v) {
    json j = json::object();
    j["kind"] = v.is_finite() ? "finite" : v.is_minus_infinity() ? "minus-infinity" : "at-least";
    if (!v.is_minus_infinity()) j["value"] = v.value;
    j["display"] = v.str();
    j["certified"] = v.certified;
    if (!v.certificate.empty()) j["certificate"] = v.certificate;
    return j;
}

json depth_to_json(const DepthValue& d) {
    json j = json::object();
    j["infinite"] = d.infinite;
    if (!d.infinite) j["value"] = d.value;
    j["display"] = d.str();
    j["certified"] = d.certified;
    return j;
}

json complexity_to_json(const ComplexityVerdict& v) {
    json j = json::object();
    switch (v.kind) {
        case ComplexityVerdict::Kind::kExact: j["kind"] = "exact"; break;
        case ComplexityVerdict::Kind::kAtLeast: j["kind"] = "at-least"; break;
        case ComplexityVerdict::Kind::kSuperEvidence: j["kind"] = "superpolynomial-evidence"; break;
    }
    if (v.kind != ComplexityVerdict::Kind::kSuperEvidence) j["value"] = v.value;
    j["fitted_degree"] = v.fitted_degree;
    j["window"] = v.window;
    j["certified"] = v.certified;
    j["display"] = v.str();
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json homology_to_json(const HomologyTable& t) {
    json j = json::object();
    json levels = json::array();
    for (const auto& [level, by_degree] : t.dims) {
        json row = json::object();
        row["level"] = level;
        int total = 0;
        for (const auto& [d, n] : by_degree) total += n;
        row["total"] = total;
        row["by_degree"] = dims_object(by_degree);
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    j["window"] = {{"hi", t.window.hi}, {"certified", t.window.certified}};
    return j;
}

json betti_to_json(const ResolutionResult& r) {
    json j = json::object();
    j["minimal"] = r.minimal;
    j["complete"] = r.complete;
    j["cutoff"] = r.cutoff;
    j["certified"] = r.certified;
    json levels = json::array();
    auto graded = r.graded_betti();
    for (int n = r.p.lo(); n <= r.p.hi(); ++n) {
        json row = json::object();
        row["level"] = n;
        row["total"] = r.betti(n);
        auto it = graded.find(n);
        row["by_degree"] = dims_object(it == graded.end() ? std::map<int, int>{} : it->second);
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    if (r.minimal) j["pd"] = verdict_to_json(r.pd());
    return j;
}

json poincare_to_json(const PoincareData& p) {
    json j = json::object();
    j["base"] = p.base;
    j["coefficients"] = p.coeffs;
    j["cutoff"] = p.cutoff;
    j["complete"] = p.complete;
    j["certified"] = p.certified;
    return j;
}

json ci_bound_to_json(const CiBound& b) {
    json j = json::object();
    j["dim"] = verdict_to_json(b.dim);
    j["witness"] = b.witness;
    json rows = json::array();
    for (const CiBoundRow& r : b.rows) {
        json row = json::object();
        row["label"] = r.label;
        row["codim"] = r.codim;
        row["pd_q"] = verdict_to_json(r.pd_q);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

json hierarchy_to_json(const HierarchyReport& h) {
    json j = json::object();
    j["gdim"] = verdict_to_json(h.gdim);
    j["pci"] = verdict_to_json(h.pci);
    j["ci"] = verdict_to_json(h.ci);
    j["pd"] = verdict_to_json(h.pd);
    j["chain_ok"] = h.chain_ok;
    j["equality_ok"] = h.equality_ok;
    j["display"] = h.render();
    return j;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& r : rows) {
        if (r.size() > width.size()) width.resize(r.size(), 0);
        for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line.append(width[i] - r[i].size() + 2, ' ');
        }
        out += line;
        out += "\n";
    }
    return out;
}

}  // namespace cidim
