#include <hyperlab/colouring.hpp>

#include <hyperlab/error.hpp>

namespace hyperlab {

// Walks every restricted growth string of length n (one per set partition of
// the vertices) and keeps the first valid colouring seen for each k.
Spectrum oracle_spectrum(const Hypergraph& h, int alpha, int beta, const SearchLimits& limits) {
    const int n = h.vertex_count();
    if (n > limits.oracle_max_vertices)
        throw Error(ErrorCode::SizeGuardExceeded, std::to_string(n) + " vertices exceeds the oracle guard of " +
                                                      std::to_string(limits.oracle_max_vertices));
    if (alpha < 1 || alpha > beta || beta > h.r())
        throw Error(ErrorCode::BadAlphaBeta, "need 1 <= alpha <= beta <= r");

    std::map<int, Colouring> witnesses;
    if (n == 0) return make_spectrum(alpha, beta, {});

    std::vector<int> labels(static_cast<std::size_t>(n), 1);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 1);
    for (;;) {
        const int k = prefix_max.back();
        if (!witnesses.contains(k)) {
            Colouring c(labels);
            if (check_ab(h, c, alpha, beta)) witnesses.emplace(k, std::move(c));
        }
        // Next restricted growth string in lexicographic order.
        int i = n - 1;
        while (i > 0 && labels[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
        if (i == 0) break;
        ++labels[static_cast<std::size_t>(i)];
        prefix_max[static_cast<std::size_t>(i)] =
            std::max(prefix_max[static_cast<std::size_t>(i - 1)], labels[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            labels[static_cast<std::size_t>(j)] = 1;
            prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
        }
    }
    return make_spectrum(alpha, beta, std::move(witnesses));
}

}  // namespace hyperlab
