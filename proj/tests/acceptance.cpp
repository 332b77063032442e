// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <clusterx/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

using namespace clusterx;

int main() {
    VerifyOptions opts;  // fixed seed, full size caps, parallel sweeps

    struct Criterion {
        const char* label;
        std::function<CheckResult(const VerifyOptions&)> run;
    };
    const std::vector<Criterion> criteria{
        {" 1 mutation involution + pentagon", check_mutation_involution},
        {" 2 exchange-graph counts vs Catalan", check_exchange_counts},
        {" 3 flip/mutation bridge", check_flip_mutation_bridge},
        {" 4 tropical duality + frozen coords", check_tropical_duality},
        {" 5 tropical limit at C=60", check_tropical_limit},
        {" 6 canonical basis positivity", check_positivity_sweep},
        {" 7 canonical basis consistency", check_canonical_consistency},
        {" 8 basis independence (rank)", check_basis_rank},
        {" 9 completion strata counts", check_strata_counts},
        {"10 Stasheff divisor test", check_stasheff},
        {"11 torus PL action", check_torus_action},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = c.run(opts);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  criterion %s  [%6.2fs]  %s\n", r.pass ? "PASS" : "FAIL", c.label,
                    secs, r.detail.c_str());
        std::fflush(stdout);
        failures += !r.pass;
    }

    // criterion 12: the full report is byte-identical across two runs with
    // the same seed, regardless of sweep parallelism
    {
        auto t0 = std::chrono::steady_clock::now();
        VerifyOptions quick = opts;
        quick.size_cap = 5;
        std::string first = verify_report("all", quick);
        VerifyOptions serial = quick;
        serial.mode = par::Mode::serial;
        std::string second = verify_report("all", serial);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = first == second && !first.empty();
        std::printf("%s  criterion 12 reproducibility       [%6.2fs]  %s\n",
                    ok ? "PASS" : "FAIL", secs,
                    ok ? "parallel and serial reports are byte-identical"
                       : "reports differ between runs");
        failures += !ok;
    }

    std::printf("acceptance: %d of 12 criteria failed\n", failures);
    return failures;
}
