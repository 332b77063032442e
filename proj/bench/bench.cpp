// Benchmark: the parallel sweep kernels against their serial references.
#include <clusterx/verify.hpp>

#include <chrono>
#include <cstdio>

using namespace clusterx;

namespace {

double timed(const char* label, par::Mode mode,
             CheckResult (*check)(const VerifyOptions&), const VerifyOptions& base) {
    VerifyOptions o = base;
    o.mode = mode;
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r = check(o);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("  %-28s %-8s %8.3fs   %s\n", label,
                mode == par::Mode::serial ? "serial" : "parallel", secs,
                r.pass ? "ok" : "FAILED");
    return secs;
}

}  // namespace

int main(int argc, char** argv) {
    VerifyOptions opts;
    if (argc > 1) opts.size_cap = std::atoi(argv[1]);
    std::printf("sweep benchmark (size_cap=%d, threads=%d)\n", opts.size_cap,
                par::max_threads());
    struct Entry {
        const char* label;
        CheckResult (*check)(const VerifyOptions&);
    };
    const Entry entries[] = {
        {"canonical positivity sweep", check_positivity_sweep},
        {"canonical consistency sweep", check_canonical_consistency},
        {"flip/mutation bridge sweep", check_flip_mutation_bridge},
        {"tropical duality sweep", check_tropical_duality},
    };
    for (const Entry& e : entries) {
        double serial = timed(e.label, par::Mode::serial, e.check, opts);
        double parallel = timed(e.label, par::Mode::parallel, e.check, opts);
        std::printf("  %-28s speedup  %8.2fx\n", "", serial / std::max(1e-9, parallel));
    }
    return 0;
}
