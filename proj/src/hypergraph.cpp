#include <hyperlab/hypergraph.hpp>

#include <hyperlab/combinations.hpp>
#include <hyperlab/error.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace hyperlab {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Hypergraph::Hypergraph(int r, int vertex_count, std::vector<Edge> edges,
                       std::vector<std::string> provenance)
    : r_(r), vertex_count_(vertex_count), edges_(std::move(edges)),
      provenance_(std::move(provenance)) {
    if (r < 2) throw Error(ErrorCode::ROutOfRange, "uniformity r must be >= 2, got " + std::to_string(r));
    if (vertex_count < 0)
        throw Error(ErrorCode::VertexOutOfRange, "negative vertex_count");
    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != r)
            throw Error(ErrorCode::NonUniformEdge,
                        "edge " + to_string(e) + " has size " + std::to_string(e.size()) +
                            ", expected " + std::to_string(r));
        std::sort(e.begin(), e.end());
        for (Vertex v : e)
            if (v < 0 || v >= vertex_count)
                throw Error(ErrorCode::VertexOutOfRange,
                            "vertex " + std::to_string(v) + " in edge " + to_string(e) +
                                " not in [0, " + std::to_string(vertex_count) + ")");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw Error(ErrorCode::DuplicateVertexInEdge, "edge " + to_string(e));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    if (vertex_count_ <= 128) {
        masks_.reserve(edges_.size());
        for (const auto& e : edges_) {
            VertexMask m;
            for (Vertex v : e) m.set(static_cast<std::size_t>(v));
            masks_.push_back(m);
        }
    }
}

long Hypergraph::find_edge(const Edge& edge) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
    if (it == edges_.end() || *it != edge) return -1;
    return static_cast<long>(it - edges_.begin());
}

std::vector<std::vector<std::size_t>> Hypergraph::incidence() const {
    std::vector<std::vector<std::size_t>> inc(static_cast<std::size_t>(vertex_count_));
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (Vertex v : edges_[i]) inc[static_cast<std::size_t>(v)].push_back(i);
    return inc;
}

Hypergraph Hypergraph::with_provenance(std::string step) const {
    Hypergraph copy = *this;
    copy.provenance_.push_back(std::move(step));
    return copy;
}

Hypergraph new_hypergraph(int r, int vertex_count, std::vector<Edge> edges) {
    return Hypergraph(r, vertex_count, std::move(edges));
}

Hypergraph complete_hypergraph(int r, int n) {
    std::vector<Vertex> pool(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<Edge> edges;
    for_each_combination<Vertex>(pool, static_cast<std::size_t>(r), [&](std::span<const Vertex> c) {
        edges.emplace_back(c.begin(), c.end());
        return true;
    });
    return Hypergraph(r, n, std::move(edges), {"complete r=" + std::to_string(r) + " n=" + std::to_string(n)});
}

bool is_edge(const Hypergraph& h, const VertexSet& k) {
    if (static_cast<int>(k.size()) != h.r()) return false;
    return h.find_edge(k.members()) >= 0;
}

bool is_clique(const Hypergraph& h, const VertexSet& s) {
    if (static_cast<int>(s.size()) < h.r()) return true;
    return for_each_combination<Vertex>(s.members(), static_cast<std::size_t>(h.r()),
                                        [&](std::span<const Vertex> c) {
                                            return h.find_edge(Edge(c.begin(), c.end())) >= 0;
                                        });
}

Hypergraph induced_subhypergraph(const Hypergraph& h, const VertexSet& s) {
    std::vector<int> relabel(static_cast<std::size_t>(h.vertex_count()), -1);
    int next = 0;
    for (Vertex v : s) {
        if (v < 0 || v >= h.vertex_count())
            throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in hypergraph");
        relabel[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<Edge> edges;
    for (const auto& e : h.edges()) {
        Edge mapped;
        mapped.reserve(e.size());
        for (Vertex v : e) {
            int m = relabel[static_cast<std::size_t>(v)];
            if (m < 0) break;
            mapped.push_back(m);
        }
        if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
    }
    auto prov = h.provenance();
    std::ostringstream step;
    step << "induced " << to_string(s.members());
    prov.push_back(step.str());
    return Hypergraph(h.r(), next, std::move(edges), std::move(prov));
}

std::string to_string(const Edge& edge) {
    std::string out = "[";
    for (std::size_t i = 0; i < edge.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(edge[i]);
    }
    return out + "]";
}

}  // namespace hyperlab
