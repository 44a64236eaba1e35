#include <hyperlab/colouring.hpp>

#include <hyperlab/error.hpp>

#include <algorithm>
#include <unordered_map>

namespace hyperlab {

Colouring::Colouring(const std::vector<int>& labels) {
    std::unordered_map<int, int> relabel;
    colours_.reserve(labels.size());
    for (int label : labels) {
        auto [it, inserted] = relabel.emplace(label, static_cast<int>(relabel.size()) + 1);
        colours_.push_back(it->second);
    }
    k_ = static_cast<int>(relabel.size());
}

Spectrum make_spectrum(int alpha, int beta, std::map<int, Colouring> witnesses) {
    Spectrum s;
    s.alpha = alpha;
    s.beta = beta;
    s.witnesses = std::move(witnesses);
    for (const auto& [k, w] : s.witnesses) s.feasible.push_back(k);
    if (!s.feasible.empty())
        for (int k = s.feasible.front() + 1; k < s.feasible.back(); ++k)
            if (!s.witnesses.contains(k)) s.gaps.push_back(k);
    return s;
}

namespace {

void require_total(const Hypergraph& h, const Colouring& c) {
    if (static_cast<int>(c.size()) != h.vertex_count())
        throw Error(ErrorCode::PartialColouring, "colouring covers " + std::to_string(c.size()) +
                                                     " vertices, hypergraph has " +
                                                     std::to_string(h.vertex_count()));
}

void require_alpha_beta(const Hypergraph& h, int alpha, int beta) {
    if (alpha < 1 || alpha > beta || beta > h.r())
        throw Error(ErrorCode::BadAlphaBeta, "need 1 <= alpha <= beta <= r, got alpha=" + std::to_string(alpha) +
                                                 " beta=" + std::to_string(beta) + " r=" + std::to_string(h.r()));
}

void require_guard(const Hypergraph& h, const SearchLimits& limits) {
    const int cap = std::min(limits.max_vertices, kMaskVertexLimit);
    if (h.vertex_count() > cap)
        throw Error(ErrorCode::SizeGuardExceeded, std::to_string(h.vertex_count()) +
                                                      " vertices exceeds the search guard of " +
                                                      std::to_string(cap));
}

/* Depth-first search over canonical colourings in vertex order 0, 1, ....
 * Colours are tried in increasing order, so the first complete colouring
 * reached is the lexicographically least one satisfying the constraints.
 *
 * After vertex v is coloured only the edges through v change state. For
 * such an edge with d distinct colours among its coloured vertices and u
 * uncoloured ones, the final count lies in [max(d,1), min(d+u, k)], and the
 * branch dies if that range misses [alpha, beta].
 */
class ColouringSearch {
public:
    ColouringSearch(const Hypergraph& h, int k, int alpha, int beta, bool exact)
        : h_(h), k_(k), alpha_(alpha), beta_(beta), exact_(exact),
          n_(h.vertex_count()), incidence_(h.incidence()),
          colour_(static_cast<std::size_t>(n_), 0) {}

    std::optional<Colouring> run() {
        if (n_ == 0) return exact_ && k_ > 0 ? std::nullopt : std::optional<Colouring>(Colouring{});
        if (exact_ && (k_ < 1 || k_ > n_)) return std::nullopt;
        if (dfs(0, 0)) return Colouring(colour_);
        return std::nullopt;
    }

private:
    bool edges_ok(Vertex v) const {
        int seen[kMaskVertexLimit + 1];
        for (std::size_t ei : incidence_[static_cast<std::size_t>(v)]) {
            const Edge& e = h_.edges()[ei];
            int distinct = 0;
            int uncoloured = 0;
            for (Vertex w : e) {
                if (w > v) {
                    ++uncoloured;
                    continue;
                }
                int c = colour_[static_cast<std::size_t>(w)];
                bool fresh = true;
                for (int i = 0; i < distinct; ++i)
                    if (seen[i] == c) { fresh = false; break; }
                if (fresh) seen[distinct++] = c;
            }
            if (distinct > beta_) return false;
            if (std::min(distinct + uncoloured, k_) < alpha_) return false;
        }
        return true;
    }

    bool dfs(Vertex v, int used) {
        if (v == n_) return !exact_ || used == k_;
        const int top = std::min(used + 1, k_);
        for (int c = 1; c <= top; ++c) {
            const int now_used = std::max(used, c);
            if (exact_ && now_used + (n_ - 1 - v) < k_) continue;
            colour_[static_cast<std::size_t>(v)] = c;
            if (edges_ok(v) && dfs(v + 1, now_used)) return true;
        }
        colour_[static_cast<std::size_t>(v)] = 0;
        return false;
    }

    const Hypergraph& h_;
    int k_, alpha_, beta_;
    bool exact_;
    int n_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::vector<int> colour_;
};

}  // namespace

int distinct_colours(const Edge& edge, const Colouring& c) {
    std::vector<int> seen;
    for (Vertex v : edge) {
        int col = c[v];
        if (std::find(seen.begin(), seen.end(), col) == seen.end()) seen.push_back(col);
    }
    return static_cast<int>(seen.size());
}

bool check_classical(const Hypergraph& h, const Colouring& c) {
    require_total(h, c);
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [&](const Edge& e) { return distinct_colours(e, c) >= 2; });
}

bool check_ab(const Hypergraph& h, const Colouring& c, int alpha, int beta) {
    require_total(h, c);
    require_alpha_beta(h, alpha, beta);
    return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
        int d = distinct_colours(e, c);
        return d >= alpha && d <= beta;
    });
}

ChromaticResult chromatic_number(const Hypergraph& h, const SearchLimits& limits) {
    require_guard(h, limits);
    if (h.edge_count() == 0)
        return {1, Colouring(std::vector<int>(static_cast<std::size_t>(h.vertex_count()), 1))};
    for (int k = 2;; ++k) {
        if (auto w = ColouringSearch(h, k, 2, h.r(), false).run()) return {k, *w};
    }
}

std::optional<Colouring> ab_colourable(const Hypergraph& h, int k, int alpha, int beta,
                                       const SearchLimits& limits) {
    require_guard(h, limits);
    require_alpha_beta(h, alpha, beta);
    return ColouringSearch(h, k, alpha, beta, true).run();
}

Spectrum ab_spectrum(const Hypergraph& h, int alpha, int beta, const SearchLimits& limits) {
    require_guard(h, limits);
    require_alpha_beta(h, alpha, beta);
    std::map<int, Colouring> witnesses;
    for (int k = 1; k <= h.vertex_count(); ++k)
        if (auto w = ColouringSearch(h, k, alpha, beta, true).run()) witnesses.emplace(k, std::move(*w));
    return make_spectrum(alpha, beta, std::move(witnesses));
}

}  // namespace hyperlab
