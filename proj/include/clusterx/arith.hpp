// Exact integer/rational scalars and a small deterministic RNG shared by all
// modules. Arbitrary precision is provided by GMP; everything downstream
// treats Int/Rat as opaque exact value types.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterx {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }

// "p" or "p/q", canonicalized.
inline std::string to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline double to_double(const Rat& q) { return q.get_d(); }

// splitmix64: tiny, seedable, and identical across platforms and thread
// counts (each work item derives its own stream from (seed, index)).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], inclusive
    long uniform(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    bool coin() { return (next_u64() & 1) != 0; }

    // positive rational with numerator/denominator in [1, cap]
    Rat positive_rat(long cap = 20) {
        return rat(uniform(1, cap), uniform(1, cap));
    }

    // derive an independent stream, deterministic in (seed, index)
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
        r.next_u64();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace clusterx
