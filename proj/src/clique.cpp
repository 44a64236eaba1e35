#include <hyperlab/colouring.hpp>

#include <hyperlab/combinations.hpp>
#include <hyperlab/error.hpp>

#include <cstdint>
#include <unordered_set>

namespace hyperlab {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << static_cast<unsigned>(v); }

/* Cliques are grown in increasing vertex order. The first r vertices of any
 * clique form an edge, so every clique is reached from exactly one seed
 * edge. A candidate w may follow the partial clique C only if S + {w} is an
 * edge for every (r-1)-subset S of C; adding v to C then only needs the new
 * subsets that contain v to be checked against the remaining candidates.
 */
class CliqueSearch {
public:
    explicit CliqueSearch(const Hypergraph& h) : h_(h), r_(h.r()) {
        edges_.reserve(h.edge_count() * 2);
        for (const auto& e : h.edges()) {
            Mask m = 0;
            for (Vertex v : e) m |= bit(v);
            edges_.insert(m);
        }
    }

    CliqueResult run() {
        best_ = r_ - 1;
        for (const auto& e : h_.edges()) {
            std::vector<Vertex> clique(e.begin(), e.end());
            std::vector<Mask> frontier;
            for_each_combination<Vertex>(clique, static_cast<std::size_t>(r_ - 1), [&](std::span<const Vertex> s) {
                Mask m = 0;
                for (Vertex v : s) m |= bit(v);
                frontier.push_back(m);
                return true;
            });
            std::vector<Vertex> candidates;
            for (Vertex w = clique.back() + 1; w < h_.vertex_count(); ++w)
                if (extends(frontier, w)) candidates.push_back(w);
            expand(clique, candidates);
        }
        return {best_, VertexSet(best_clique_)};
    }

private:
    bool extends(const std::vector<Mask>& subsets, Vertex w) const {
        for (Mask m : subsets)
            if (!edges_.contains(m | bit(w))) return false;
        return true;
    }

    void expand(std::vector<Vertex>& clique, const std::vector<Vertex>& candidates) {
        if (static_cast<int>(clique.size()) > best_) {
            best_ = static_cast<int>(clique.size());
            best_clique_ = clique;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (static_cast<int>(clique.size() + candidates.size() - i) <= best_) return;
            const Vertex v = candidates[i];
            // (r-1)-subsets of clique + {v} that contain v.
            std::vector<Mask> fresh;
            for_each_combination<Vertex>(clique, static_cast<std::size_t>(r_ - 2), [&](std::span<const Vertex> s) {
                Mask m = bit(v);
                for (Vertex u : s) m |= bit(u);
                fresh.push_back(m);
                return true;
            });
            std::vector<Vertex> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (extends(fresh, candidates[j])) next.push_back(candidates[j]);
            clique.push_back(v);
            expand(clique, next);
            clique.pop_back();
        }
    }

    const Hypergraph& h_;
    int r_;
    std::unordered_set<Mask> edges_;
    int best_ = 0;
    std::vector<Vertex> best_clique_;
};

}  // namespace

CliqueResult clique_number(const Hypergraph& h, const SearchLimits& limits) {
    const int cap = std::min(limits.max_vertices, kMaskVertexLimit);
    if (h.vertex_count() > cap)
        throw Error(ErrorCode::SizeGuardExceeded, std::to_string(h.vertex_count()) +
                                                      " vertices exceeds the search guard of " +
                                                      std::to_string(cap));
    return CliqueSearch(h).run();
}

}  // namespace hyperlab
