// Shared error types, deterministic RNG helpers and float formatting.
#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mck {

// Raised when a topology generator cannot produce a connected sample
// within its retry budget.
struct GenerationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation's structural precondition does not hold
// (e.g. disconnected induced subgraph where a connected one is required).
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the augmentation rounds when the host graph cannot support
// the requested connectivity target.
struct UnachievableConnectivity : std::runtime_error {
    int target_m;
    explicit UnachievableConnectivity(int m)
        : std::runtime_error("unachievable-connectivity: m=" + std::to_string(m)),
          target_m(m) {}
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stable seed derivation for sweep points / trials.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = base;
    splitmix64(s);
    s ^= 0x9e3779b97f4a7c15ULL * (a + 1);
    splitmix64(s);
    s ^= 0xc2b2ae3d27d4eb4fULL * (b + 1);
    return splitmix64(s);
}

// Deterministic generator; draws are identical on every platform, which the
// byte-identical output requirements depend on.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x853c49e6748fea9bULL) {}

    std::uint64_t next() { return splitmix64(state_); }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  private:
    std::uint64_t state_;
};

// Shortest decimal form that round-trips the exact double.
inline std::string fmt_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace mck
