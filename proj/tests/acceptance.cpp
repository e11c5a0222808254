#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "cidim/verify.hpp"

int main(int argc, char** argv) {
    uint64_t seed = 20260823;
    int only = 0;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);
        if (std::strcmp(argv[i], "--only") == 0) only = std::atoi(argv[i + 1]);
    }

    std::vector<cidim::CaseResult> results;
    if (only == 0) {
        results = cidim::run_acceptance(seed);
    } else {
        switch (only) {
            case 1: results.push_back(cidim::criterion_socle_example()); break;
            case 2: results.push_back(cidim::criterion_hypersurface_residue_field()); break;
            case 3: results.push_back(cidim::criterion_polynomial_residue_field()); break;
            case 4: results.push_back(cidim::criterion_poincare_identities(seed)); break;
            case 5: results.push_back(cidim::criterion_syzygy_formulas(seed)); break;
            case 6: results.push_back(cidim::criterion_structural_suite(seed)); break;
            case 7: results.push_back(cidim::criterion_two_of_three(seed)); break;
            case 8: results.push_back(cidim::criterion_ci_detection()); break;
        }
    }
    std::fputs(cidim::render_results(results).c_str(), stdout);

    int failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    return failed == 0 ? 0 : 1;
}
