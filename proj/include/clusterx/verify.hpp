// The property suite: every acceptance-level check, shared by the
// acceptance test binary and the `clusterx verify` subcommand. Checks are
// deterministic in (rng_seed, size_cap) and independent of the thread count.
#pragma once

#include <clusterx/parallel.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace clusterx {

struct VerifyOptions {
    std::uint64_t rng_seed = 20260808;
    int size_cap = 7;  // largest polygon size the sweeps touch
    par::Mode mode = par::Mode::parallel;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

CheckResult check_mutation_involution(const VerifyOptions& o);   // 1
CheckResult check_exchange_counts(const VerifyOptions& o);       // 2
CheckResult check_flip_mutation_bridge(const VerifyOptions& o);  // 3
CheckResult check_tropical_duality(const VerifyOptions& o);      // 4
CheckResult check_tropical_limit(const VerifyOptions& o);        // 5
CheckResult check_positivity_sweep(const VerifyOptions& o);      // 6
CheckResult check_canonical_consistency(const VerifyOptions& o); // 7
CheckResult check_basis_rank(const VerifyOptions& o);            // 8
CheckResult check_strata_counts(const VerifyOptions& o);         // 9
CheckResult check_stasheff(const VerifyOptions& o);              // 10
CheckResult check_torus_action(const VerifyOptions& o);          // 11

/// Suites: all, seed, tropical, laurent, polygon, lamination, completion,
/// torus. "all" additionally runs the reproducibility check (the report is
/// built twice and compared byte for byte).
std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const VerifyOptions& o);

/// Deterministic text report, one pass/fail line per property.
std::string verify_report(const std::string& suite, const VerifyOptions& o);

}  // namespace clusterx
