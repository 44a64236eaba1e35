#ifndef HYPERLAB_GENERATORS_HPP
#define HYPERLAB_GENERATORS_HPP

#include <hyperlab/constructors.hpp>
#include <hyperlab/hypergraph.hpp>

#include <cstdint>
#include <random>
#include <span>

namespace hyperlab {

// Portable helpers on top of mt19937_64; the standard distributions are
// implementation defined, these are not.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
int uniform_int(std::mt19937_64& rng, int lo, int hi);  // inclusive
double unit_real(std::mt19937_64& rng);

// Independent stream for trial `trial` of a run seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

// Includes each r-subset of [0, vertex_count) independently with
// probability `density`.
Hypergraph random_hypergraph(std::mt19937_64& rng, int r, int vertex_count, double density);

struct SampleShape {
    std::span<const int> r_choices;
    int max_vertices = 8;
    bool reject_edgeless = true;
};

// r from the choices, vertex_count in [r, max_vertices], density from
// {0.2, 0.5, 0.8}.
Hypergraph sample_hypergraph(std::mt19937_64& rng, const SampleShape& shape);

// Random valid extension parameters over h with p in [1, p_max] and
// q_ext in [0, q_max].
ExtensionParams sample_extension_params(std::mt19937_64& rng, const Hypergraph& h, int p_max = 3, int q_max = 2);

}  // namespace hyperlab

#endif  // HYPERLAB_GENERATORS_HPP
