#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace sgb {

// SplitMix64 step, used to mix seeds into independent stream keys.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// A seeded random stream with platform-independent draws. std::mt19937_64
// sequences are pinned by the standard; the transforms below are our own so
// the distributions are reproducible everywhere (std::normal_distribution
// et al. are implementation-defined).
class RngStream {
  public:
    explicit RngStream(std::uint64_t key) : engine_(key) {}

    // Derive an independent stream for (seed, purpose, a, b). Used for
    // replicate k of round r, bootstrap replicate b, etc., so that parallel
    // and serial execution produce identical draws.
    static RngStream derive(std::uint64_t seed, std::uint64_t purpose,
                            std::uint64_t a = 0, std::uint64_t b = 0) {
        std::uint64_t key = splitmix64(seed ^ splitmix64(purpose));
        key = splitmix64(key ^ splitmix64(a + 0x51ed270b7a65c1a5ull));
        key = splitmix64(key ^ splitmix64(b + 0x2545f4914f6cdd1dull));
        return RngStream(key);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform in (0, 1]; safe as a log argument.
    double uniform01_open0() { return 1.0 - uniform01(); }

    // Box-Muller; consumes two uniforms per draw (no caching, so streams stay
    // position-independent).
    double normal() {
        const double u1 = uniform01_open0();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double exponential() { return -std::log(uniform01_open0()); }

    // Integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection-free bounded draw via 128-bit multiply would be nicer;
        // modulo bias is < 2^-50 for the n used here (n <= a few thousand).
        return engine_() % n;
    }

    Eigen::VectorXd normal_vector(Eigen::Index n) {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
        return v;
    }

  private:
    std::mt19937_64 engine_;
};

// Tags for stream purposes, so different consumers never collide.
namespace stream_purpose {
constexpr std::uint64_t kBalanceReplicate = 0xb41a;
constexpr std::uint64_t kBalanceEvaluate = 0xe7a1;
constexpr std::uint64_t kResampling = 0xc0de;
constexpr std::uint64_t kSimDesign = 0x51de;
constexpr std::uint64_t kSimOutcome = 0x07c0;
}  // namespace stream_purpose

}  // namespace sgb
