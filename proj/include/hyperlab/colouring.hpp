#ifndef HYPERLAB_COLOURING_HPP
#define HYPERLAB_COLOURING_HPP

#include <hyperlab/hypergraph.hpp>
#include <hyperlab/limits.hpp>

#include <map>
#include <optional>
#include <vector>

namespace hyperlab {

/* Total map vertex -> colour in {1..k}. Construction relabels the input so
 * that colours appear in increasing order of first use (vertex 0 has colour
 * 1, colour c+1 never appears before colour c). Two colourings inducing the
 * same partition of the vertices are therefore equal.
 */
class Colouring {
public:
    Colouring() = default;
    explicit Colouring(const std::vector<int>& labels);

    const std::vector<int>& colours() const noexcept { return colours_; }
    int operator[](Vertex v) const { return colours_[static_cast<std::size_t>(v)]; }
    std::size_t size() const noexcept { return colours_.size(); }
    int k() const noexcept { return k_; }

    bool operator==(const Colouring&) const = default;

private:
    std::vector<int> colours_;
    int k_ = 0;
};

struct Spectrum {
    int alpha = 0;
    int beta = 0;
    std::vector<int> feasible;
    std::map<int, Colouring> witnesses;
    std::vector<int> gaps;

    bool broken() const noexcept { return !gaps.empty(); }
};

// Builds feasible and gaps from the witness map.
Spectrum make_spectrum(int alpha, int beta, std::map<int, Colouring> witnesses);

int distinct_colours(const Edge& edge, const Colouring& c);

bool check_classical(const Hypergraph& h, const Colouring& c);
bool check_ab(const Hypergraph& h, const Colouring& c, int alpha, int beta);

struct ChromaticResult {
    int chi = 0;
    Colouring witness;
};

// Exact classical chromatic number; 1 for an edgeless hypergraph.
ChromaticResult chromatic_number(const Hypergraph& h, const SearchLimits& limits = {});

// Lexicographically least canonical colouring using exactly k colours with
// every edge carrying between alpha and beta colours, if one exists.
std::optional<Colouring> ab_colourable(const Hypergraph& h, int k, int alpha, int beta,
                                       const SearchLimits& limits = {});

Spectrum ab_spectrum(const Hypergraph& h, int alpha, int beta, const SearchLimits& limits = {});

struct CliqueResult {
    int omega = 0;
    VertexSet witness;
};

// Largest clique of size >= r; r-1 with an empty witness when h has no edge.
CliqueResult clique_number(const Hypergraph& h, const SearchLimits& limits = {});

// Exhaustive reference for ab_spectrum over every set partition of V(h).
Spectrum oracle_spectrum(const Hypergraph& h, int alpha, int beta, const SearchLimits& limits = {});

}  // namespace hyperlab

#endif  // HYPERLAB_COLOURING_HPP
