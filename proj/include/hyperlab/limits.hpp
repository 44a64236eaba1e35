#ifndef HYPERLAB_LIMITS_HPP
#define HYPERLAB_LIMITS_HPP

#include <cstdint>

namespace hyperlab {

// Desk-scale guards shared by constructors and solvers.
struct SearchLimits {
    int max_vertices = 64;         // exact search, sigma construction
    int oracle_max_vertices = 10;  // exhaustive set-partition oracle
    std::uint64_t max_edges = 5'000'000;
};

inline constexpr int kMaskVertexLimit = 64;

}  // namespace hyperlab

#endif  // HYPERLAB_LIMITS_HPP
