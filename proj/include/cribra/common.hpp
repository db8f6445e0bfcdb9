#ifndef CRIBRA_COMMON_HPP
#define CRIBRA_COMMON_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cribra {

// Base for all toolkit errors; subclasses carry the contract name in what().
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnreadableFile : Error { using Error::Error; };
struct UnsupportedPixelFormat : Error { using Error::Error; };
struct NonSquareTile : Error { using Error::Error; };
struct UpscaleRequested : Error { using Error::Error; };
struct InvalidTheta : Error { using Error::Error; };
struct DegenerateImage : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct TooFewPoints : Error { using Error::Error; };
struct DegenerateCollinear : Error { using Error::Error; };
struct SingleClassInput : Error { using Error::Error; };
struct NonFiniteFeature : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct MissingEmbedding : Error { using Error::Error; };
struct WidthMismatch : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };
struct PatientOverlap : Error { using Error::Error; };
struct UnassignedPatient : Error { using Error::Error; };
struct InsufficientTiles : Error { using Error::Error; };
struct InfeasibleGeometry : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

inline int max_threads() {
    if (const char* env = std::getenv("CRIBRA_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Index-sharded parallel map. Each index is processed exactly once and
// writes only to its own slot, so results are deterministic regardless of
// thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    int threads = max_threads();
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = static_cast<std::size_t>(t); i < n;
                     i += static_cast<std::size_t>(threads))
                    fn(i);
            } catch (...) {
                errs[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

// Stable 64-bit stream splitter so sub-RNGs derived from (seed, tags...) are
// decoupled and reproducible across platforms.
inline std::uint64_t mix_seed(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

template <typename... Rest>
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t next, Rest... rest) {
    return mix_seed(mix_seed(seed) ^ next, rest...);
}

} // namespace cribra

#endif
