#ifndef HYPERLAB_CONSTRUCTORS_HPP
#define HYPERLAB_CONSTRUCTORS_HPP

#include <hyperlab/colouring.hpp>
#include <hyperlab/hypergraph.hpp>
#include <hyperlab/limits.hpp>
#include <hyperlab/partition.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace hyperlab {

// Class structure of a sigma-hypergraph: class i is the block [i*q, (i+1)*q).
struct SigmaMeta {
    int n = 0;
    int q = 0;
    Partition sigma;
    std::vector<std::vector<Vertex>> classes;
};

struct SigmaHypergraph {
    Hypergraph graph;
    SigmaMeta meta;
};

std::vector<std::vector<Vertex>> contiguous_classes(int n, int q);

/* H(n, r, q | sigma): an r-subset is an edge iff the non-zero sizes of its
 * intersections with the classes form sigma. A class size smaller than the
 * largest part gives an edgeless hypergraph; that case is recorded in the
 * provenance as a warning rather than rejected.
 */
SigmaHypergraph build_sigma_hypergraph(int n, int r, int q, const Partition& sigma,
                                       const SearchLimits& limits = {});

// Closed-form |E(H(n, r, q | sigma))|; saturates at UINT64_MAX.
std::uint64_t sigma_edge_count(int n, int q, const Partition& sigma);

// Extension of H over the edge E* = edges()[edge_index], adding W (p new
// vertices) and U (q_ext new vertices) after the existing ones, W first.
struct ExtensionParams {
    std::size_t edge_index = 0;
    int p = 1;
    int q_ext = 0;
    std::set<int> T;
    std::set<int> P;
    std::set<int> Q;
};

// Throws InvalidT / InvalidPQ / EdgeIndexOutOfRange.
void validate(const ExtensionParams& params, const Hypergraph& h);

Hypergraph extend_pq(const Hypergraph& h, const ExtensionParams& params);

ExtensionParams star_params(std::size_t edge_index, int t);

Hypergraph star_extend(const Hypergraph& h, std::size_t edge_index, int t);

enum class EdgeRule { First, Last, Random };

EdgeRule parse_edge_rule(const std::string& name);
std::string to_string(EdgeRule rule);

// Applies star_extend `steps` times, choosing the base edge of each step by
// `rule` (Random draws from a generator seeded with `seed`).
Hypergraph iterate_star(const Hypergraph& h, int t, int steps, EdgeRule rule = EdgeRule::First,
                        std::uint64_t seed = 0);

// Extends a proper classical colouring of h to extend_pq(h, params) without
// new colours: W takes a least frequent colour of E*, U another colour of E*.
Colouring extend_classical_colouring(const Hypergraph& h, const ExtensionParams& params,
                                     const Colouring& c);

// Extends a (2,2)-colouring of h: W takes the minority colour of E*, U the
// other one. On a tie W takes the colour of the lowest vertex of E*.
Colouring extend_22_colouring(const Hypergraph& h, const ExtensionParams& params, const Colouring& c);

}  // namespace hyperlab

#endif  // HYPERLAB_CONSTRUCTORS_HPP
