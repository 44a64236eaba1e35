#ifndef HYPERLAB_COMBINATIONS_HPP
#define HYPERLAB_COMBINATIONS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace hyperlab {

/* Visits every k-subset of `pool` in lexicographic order of positions.
 * The callback receives the chosen elements as a span that is only valid
 * for the duration of the call. Returning false from the callback stops
 * the walk; for_each_combination then returns false as well.
 */
template <typename T, typename F>
bool for_each_combination(std::span<const T> pool, std::size_t k, F&& visit) {
    const std::size_t n = pool.size();
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    std::vector<T> chosen(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
        if (!visit(std::span<const T>(chosen))) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Binomial coefficient; saturates at UINT64_MAX instead of wrapping.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace hyperlab

#endif  // HYPERLAB_COMBINATIONS_HPP
