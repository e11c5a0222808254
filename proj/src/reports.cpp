#include "cidim/reports.hpp"

namespace cidim {

namespace {

Complex ring_complex(const AlgebraPtr& a) {
    return Complex::of_module(GradedModule::free_module({a, {0}}));
}

}  // namespace

json ring_info_report(const AlgebraPtr& a, int cutoff, int degree_cap) {
    json j = ring_to_json(*a);
    j["display"] = a->describe();
    j["artinian"] = a->artinian();
    if (a->artinian()) j["top_degree"] = a->top_degree();
    j["complete_intersection"] = a->is_complete_intersection();
    j["depth"] = depth_to_json(depth(ring_complex(a), cutoff, degree_cap));
    return j;
}

json homology_report(const Complex& x, int degree_cap) {
    return homology_to_json(homology_dims(x, degree_cap));
}

json resolution_report(const Complex& x, int cutoff, int degree_cap, bool include_complex) {
    auto r = minimal_free_resolution(x, cutoff, degree_cap);
    json j = betti_to_json(r);
    if (include_complex) j["resolution"] = complex_to_json(r.p);
    return j;
}

json poincare_report(const Complex& x, int cutoff, int degree_cap) {
    auto p = poincare_series(x, cutoff, degree_cap);
    json j;
    j["series"] = poincare_to_json(p);
    if (static_cast<int>(p.coeffs.size()) >= 4)
        j["complexity"] = complexity_to_json(complexity_estimate(p));
    else
        j["complexity"] = nullptr;
    return j;
}

json depth_report(const Complex& x, int cutoff, int degree_cap) {
    return depth_to_json(depth(x, cutoff, degree_cap));
}

json pd_report(const Complex& x, int cutoff, int degree_cap) {
    return verdict_to_json(projective_dimension(x, cutoff, degree_cap));
}

json gdim_report(const Complex& x, int cutoff, int degree_cap, int window) {
    return verdict_to_json(g_dimension(x, cutoff, degree_cap, window));
}

json pci_report(const Complex& x, int cutoff, int degree_cap, int window) {
    return verdict_to_json(pci_dimension(x, cutoff, degree_cap, window));
}

json ci_bound_report(const Complex& x, const std::vector<DeformationSpec>& extra, int cutoff,
                     int degree_cap) {
    return ci_bound_to_json(ci_dim_upper(x, extra, cutoff, degree_cap));
}

json hierarchy_report(const Complex& x, const std::vector<DeformationSpec>& extra, int cutoff,
                      int degree_cap, int window) {
    return hierarchy_to_json(hierarchy_check(x, extra, cutoff, degree_cap, window));
}

json verify_report(uint64_t seed, const std::string& suite) {
    auto results = run_acceptance(seed);
    json cases = json::array();
    int passed = 0;
    for (const auto& r : results) {
        json c;
        c["id"] = r.id;
        c["name"] = r.name;
        c["pass"] = r.pass;
        c["notes"] = r.notes;
        cases.push_back(std::move(c));
        passed += r.pass ? 1 : 0;
    }
    json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["cases"] = std::move(cases);
    j["passed"] = passed;
    j["total"] = static_cast<int>(results.size());
    return j;
}

}  // namespace cidim
