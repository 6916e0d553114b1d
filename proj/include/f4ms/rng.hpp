#ifndef F4MS_RNG_HPP
#define F4MS_RNG_HPP

#include <cstdint>
#include <string_view>

namespace f4ms {

// splitmix64; deterministic across platforms, which the report
// reproducibility contract depends on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); modulo bias is irrelevant for sampling test inputs
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    bool coin() { return next() & 1; }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_name(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// per-suite seed = hash(master seed, suite name); per-trial seeds derive
// from it so sharding never changes the sample stream
inline std::uint64_t suite_seed(std::uint64_t master, std::string_view name) {
    return mix_seed(master, hash_name(name));
}

inline std::uint64_t trial_seed(std::uint64_t suite, std::uint64_t trial) {
    return mix_seed(suite, 0x51ed270b0a1c2ef3ULL ^ trial);
}

} // namespace f4ms

#endif
