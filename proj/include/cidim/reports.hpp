#pragma once

#include "cidim/io.hpp"
#include "cidim/verify.hpp"

namespace cidim {

// Self-contained json reports consumed by both the command line front end
// and the python bindings. Deterministic for fixed inputs and seed.

json ring_info_report(const AlgebraPtr& a, int cutoff, int degree_cap);
json homology_report(const Complex& x, int degree_cap);
json resolution_report(const Complex& x, int cutoff, int degree_cap, bool include_complex);
json poincare_report(const Complex& x, int cutoff, int degree_cap);
json depth_report(const Complex& x, int cutoff, int degree_cap);
json pd_report(const Complex& x, int cutoff, int degree_cap);
json gdim_report(const Complex& x, int cutoff, int degree_cap, int window);
json pci_report(const Complex& x, int cutoff, int degree_cap, int window);
json ci_bound_report(const Complex& x, const std::vector<DeformationSpec>& extra, int cutoff,
                     int degree_cap);
json hierarchy_report(const Complex& x, const std::vector<DeformationSpec>& extra, int cutoff,
                      int degree_cap, int window);
json verify_report(uint64_t seed, const std::string& suite);

}  // namespace cidim
