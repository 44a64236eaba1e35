#ifndef HYPERLAB_HYPERGRAPH_HPP
#define HYPERLAB_HYPERGRAPH_HPP

#include <bitset>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperlab {

using Vertex = int;
using Edge = std::vector<Vertex>;
using VertexMask = std::bitset<128>;

// Sorted, duplicate-free set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    const std::vector<Vertex>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<Vertex> members_;
};

/* An r-uniform hypergraph on the dense vertex range [0, vertex_count).
 *
 * Edges are stored sorted ascending and the edge list is kept in
 * lexicographic order without duplicates, so two hypergraphs with the same
 * edge set compare equal and serialize identically. Instances are immutable;
 * all "modifications" build a new value.
 */
class Hypergraph {
public:
    // Validates and canonicalizes; throws NonUniformEdge, VertexOutOfRange
    // or DuplicateVertexInEdge.
    Hypergraph(int r, int vertex_count, std::vector<Edge> edges,
               std::vector<std::string> provenance = {});

    int r() const noexcept { return r_; }
    int vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::string>& provenance() const noexcept { return provenance_; }

    // Bitmask view of the edges, same order as edges(). Empty when
    // vertex_count exceeds 128.
    const std::vector<VertexMask>& edge_masks() const noexcept { return masks_; }

    // Index of `edge` in canonical order, or -1.
    long find_edge(const Edge& edge) const;

    std::vector<std::vector<std::size_t>> incidence() const;

    Hypergraph with_provenance(std::string step) const;

    bool operator==(const Hypergraph& other) const {
        return r_ == other.r_ && vertex_count_ == other.vertex_count_ &&
               edges_ == other.edges_ && provenance_ == other.provenance_;
    }

private:
    int r_;
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::string> provenance_;
    std::vector<VertexMask> masks_;
};

Hypergraph new_hypergraph(int r, int vertex_count, std::vector<Edge> edges);

// Complete r-uniform hypergraph on n vertices.
Hypergraph complete_hypergraph(int r, int n);

bool is_edge(const Hypergraph& h, const VertexSet& k);

// True iff every r-subset of s is an edge; vacuously true when |s| < r.
bool is_clique(const Hypergraph& h, const VertexSet& s);

// Edges of h inside s, relabelled order-preservingly onto [0, |s|).
Hypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& s);

std::string to_string(const Edge& edge);

}  // namespace hyperlab

#endif  // HYPERLAB_HYPERGRAPH_HPP
