#ifndef OPDC_VERIFY_SUITES_HPP
#define OPDC_VERIFY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace opdc {

/// Outcome of one randomized/exact verification suite. `detail` carries
/// the first counterexample (exact inputs) on failure, or a short
/// summary on success.
struct SuiteResult {
    std::string name;
    int trials = 0;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Exact-identity suites (rational arithmetic throughout).
SuiteResult suite_bi_reflection_consistency(std::uint64_t seed, int trials, int depth, int bound);
SuiteResult suite_companion_identity(std::uint64_t seed, int trials, int depth, int bound);
SuiteResult suite_sdg_structure(std::uint64_t seed, int trials, int depth, int bound);
SuiteResult suite_rw_bridge(std::uint64_t seed, int trials, int depth, int bound);
SuiteResult suite_q_identification(std::uint64_t seed, int trials, int depth, int bound);
SuiteResult suite_seed_identity(std::uint64_t seed, int trials, int bound);
SuiteResult suite_sdg_closure(std::uint64_t seed, int trials, int depth, int bound);
SuiteResult suite_roundtrip(std::uint64_t seed, int trials, int depth, int bound);
SuiteResult suite_chihara_check(std::uint64_t seed, int trials, int depth, int bound);

// Float suites.
SuiteResult suite_matrix_identities(std::uint64_t seed, int n);
SuiteResult suite_darboux(std::uint64_t seed, int trials, int n);
SuiteResult suite_quad_algebra(std::uint64_t seed, int n);
SuiteResult suite_chain_report(std::uint64_t seed, int triples, int n);

std::vector<SuiteResult> bi_chain_suites(std::uint64_t seed, int trials, int depth, int bound);

} // namespace opdc

#endif
