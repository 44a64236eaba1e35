#include <hyperlab/generators.hpp>

#include <hyperlab/combinations.hpp>

#include <array>

namespace hyperlab {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int r, int vertex_count, double density) {
    std::vector<Vertex> pool(static_cast<std::size_t>(vertex_count));
    for (int i = 0; i < vertex_count; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<Edge> edges;
    for_each_combination<Vertex>(pool, static_cast<std::size_t>(r), [&](std::span<const Vertex> c) {
        if (unit_real(rng) < density) edges.emplace_back(c.begin(), c.end());
        return true;
    });
    return Hypergraph(r, vertex_count, std::move(edges),
                      {"random r=" + std::to_string(r) + " n=" + std::to_string(vertex_count) +
                       " density=" + std::to_string(density)});
}

Hypergraph sample_hypergraph(std::mt19937_64& rng, const SampleShape& shape) {
    static constexpr std::array<double, 3> kDensities{0.2, 0.5, 0.8};
    for (;;) {
        const int r = shape.r_choices[uniform_below(rng, shape.r_choices.size())];
        const int n = uniform_int(rng, r, std::max(r, shape.max_vertices));
        const double density = kDensities[uniform_below(rng, kDensities.size())];
        Hypergraph h = random_hypergraph(rng, r, n, density);
        if (!shape.reject_edgeless || h.edge_count() > 0) return h;
    }
}

namespace {

std::set<int> random_nonempty_subset(std::mt19937_64& rng, int upto) {
    const std::uint64_t mask = 1 + uniform_below(rng, (std::uint64_t{1} << upto) - 1);
    std::set<int> out;
    for (int i = 0; i < upto; ++i)
        if (mask >> i & 1) out.insert(i + 1);
    return out;
}

}  // namespace

ExtensionParams sample_extension_params(std::mt19937_64& rng, const Hypergraph& h, int p_max, int q_max) {
    const int r = h.r();
    ExtensionParams params;
    params.edge_index = static_cast<std::size_t>(uniform_below(rng, h.edge_count()));
    params.p = uniform_int(rng, 1, p_max);
    params.q_ext = r >= 3 ? uniform_int(rng, 0, q_max) : 0;
    params.T = random_nonempty_subset(rng, std::min(params.p, (r - 1) / 2));
    if (params.q_ext > 0) {
        do {
            params.P = random_nonempty_subset(rng, std::min(params.p, r - 2));
            params.Q = random_nonempty_subset(rng, std::min(params.q_ext, r - 2));
        } while (*params.P.begin() + *params.Q.begin() > r - 1);
    }
    return params;
}

}  // namespace hyperlab
