#include <hyperlab/constructors.hpp>

#include <hyperlab/combinations.hpp>
#include <hyperlab/error.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hyperlab {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
    return out;
}

std::string join(const std::set<int>& values) {
    std::string out;
    for (int v : values) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

std::vector<Vertex> iota_vertices(int first, int count) {
    std::vector<Vertex> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = first + i;
    return out;
}

// Emits all r-sets built from `pieces` of (pool, size) pairs, one
// combination per pool.
void product_of_combinations(const std::vector<std::pair<std::span<const Vertex>, int>>& pieces,
                             std::size_t depth, Edge& partial, std::vector<Edge>& out) {
    if (depth == pieces.size()) {
        out.push_back(partial);
        return;
    }
    const auto& [pool, size] = pieces[depth];
    for_each_combination<Vertex>(pool, static_cast<std::size_t>(size), [&](std::span<const Vertex> c) {
        const std::size_t mark = partial.size();
        partial.insert(partial.end(), c.begin(), c.end());
        product_of_combinations(pieces, depth + 1, partial, out);
        partial.resize(mark);
        return true;
    });
}

void generate_sigma_edges(const SigmaMeta& meta, std::size_t cls, std::map<int, int>& remaining,
                          int parts_left, Edge& partial, std::vector<Edge>& out) {
    if (parts_left == 0) {
        out.push_back(partial);
        return;
    }
    const std::size_t classes_left = meta.classes.size() - cls;
    if (static_cast<std::size_t>(parts_left) > classes_left) return;

    // Class `cls` carries no part.
    generate_sigma_edges(meta, cls + 1, remaining, parts_left, partial, out);

    for (auto& [size, count] : remaining) {
        if (count == 0 || size > meta.q) continue;
        --count;
        for_each_combination<Vertex>(meta.classes[cls], static_cast<std::size_t>(size),
                                     [&](std::span<const Vertex> c) {
                                         const std::size_t mark = partial.size();
                                         partial.insert(partial.end(), c.begin(), c.end());
                                         generate_sigma_edges(meta, cls + 1, remaining, parts_left - 1, partial, out);
                                         partial.resize(mark);
                                         return true;
                                     });
        ++count;
    }
}

void check_edge_index(const Hypergraph& h, std::size_t edge_index) {
    if (edge_index >= h.edge_count())
        throw Error(ErrorCode::EdgeIndexOutOfRange, "edge index " + std::to_string(edge_index) +
                                                        " with " + std::to_string(h.edge_count()) + " edges");
}

Hypergraph extend_impl(const Hypergraph& h, const ExtensionParams& params, const std::string& label) {
    validate(params, h);
    const int r = h.r();
    const int base = h.vertex_count();
    const Edge& star = h.edges()[params.edge_index];
    const std::vector<Vertex> w_pool = iota_vertices(base, params.p);
    const std::vector<Vertex> u_pool = iota_vertices(base + params.p, params.q_ext);

    std::vector<Edge> edges = h.edges();
    std::vector<Edge> fresh;
    Edge partial;
    for (int w : params.T) {
        if (r - w < 2) throw std::logic_error("type 1 edge with fewer than two base vertices");
        product_of_combinations({{w_pool, w}, {star, r - w}}, 0, partial, fresh);
    }
    for (int x : params.P)
        for (int y : params.Q) {
            if (x + y > r - 1) continue;
            if (x < 1 || y < 1 || r - x - y < 1) throw std::logic_error("type 2 edge missing a part");
            product_of_combinations({{w_pool, x}, {u_pool, y}, {star, r - x - y}}, 0, partial, fresh);
        }
    edges.insert(edges.end(), fresh.begin(), fresh.end());

    std::ostringstream step;
    step << label << " edge=" << params.edge_index << " E*=" << to_string(star) << " p=" << params.p
         << " q_ext=" << params.q_ext << " T={" << join(params.T) << "} P={" << join(params.P) << "} Q={"
         << join(params.Q) << "}";
    auto prov = h.provenance();
    prov.push_back(step.str());
    return Hypergraph(r, base + params.p + params.q_ext, std::move(edges), std::move(prov));
}

}  // namespace

std::vector<std::vector<Vertex>> contiguous_classes(int n, int q) {
    std::vector<std::vector<Vertex>> classes;
    for (int i = 0; i < n; ++i) classes.push_back(iota_vertices(i * q, q));
    return classes;
}

std::uint64_t sigma_edge_count(int n, int q, const Partition& sigma) {
    const int s = sigma.part_count();
    if (n < s) return 0;
    // Classes for each group of equal part sizes: C(n, m1) * C(n - m1, m2) * ...
    std::map<int, int> multiplicity;
    for (int a : sigma.parts()) ++multiplicity[a];
    std::uint64_t placements = 1;
    std::uint64_t free_classes = static_cast<std::uint64_t>(n);
    for (const auto& [size, m] : multiplicity) {
        placements = saturating_mul(placements, binomial(free_classes, static_cast<std::uint64_t>(m)));
        free_classes -= static_cast<std::uint64_t>(m);
    }
    for (int a : sigma.parts())
        placements = saturating_mul(placements, binomial(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(a)));
    return placements;
}

SigmaHypergraph build_sigma_hypergraph(int n, int r, int q, const Partition& sigma, const SearchLimits& limits) {
    if (sigma.total() != r)
        throw Error(ErrorCode::SigmaTotalMismatch,
                    "sigma (" + to_string(sigma) + ") sums to " + std::to_string(sigma.total()) + ", r is " +
                        std::to_string(r));
    if (n < sigma.part_count())
        throw Error(ErrorCode::TooFewClasses, "n=" + std::to_string(n) + " classes cannot host " +
                                                  std::to_string(sigma.part_count()) + " parts");
    if (q < 1) throw Error(ErrorCode::IndexOutOfRange, "class size q must be >= 1");
    if (static_cast<long long>(n) * q > limits.max_vertices)
        throw Error(ErrorCode::SizeGuardExceeded, "n*q=" + std::to_string(static_cast<long long>(n) * q) +
                                                      " exceeds the vertex guard of " +
                                                      std::to_string(limits.max_vertices));
    const std::uint64_t expected = sigma_edge_count(n, q, sigma);
    if (expected > limits.max_edges)
        throw Error(ErrorCode::SizeGuardExceeded,
                    std::to_string(expected) + " edges exceeds the edge guard of " + std::to_string(limits.max_edges));

    SigmaMeta meta{n, q, sigma, contiguous_classes(n, q)};
    std::map<int, int> remaining;
    for (int a : sigma.parts()) ++remaining[a];
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(expected));
    Edge partial;
    generate_sigma_edges(meta, 0, remaining, sigma.part_count(), partial, edges);

    std::vector<std::string> prov{"sigma n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                  " q=" + std::to_string(q) + " sigma=" + to_string(sigma)};
    if (q < sigma.largest())
        prov.push_back("warning: q=" + std::to_string(q) + " is below the largest part " +
                       std::to_string(sigma.largest()) + "; hypergraph is edgeless");
    Hypergraph graph(r, n * q, std::move(edges), std::move(prov));
    return {std::move(graph), std::move(meta)};
}

void validate(const ExtensionParams& params, const Hypergraph& h) {
    check_edge_index(h, params.edge_index);
    const int r = h.r();
    if (params.p < 1) throw Error(ErrorCode::InvalidPQ, "p must be >= 1");
    if (params.q_ext < 0) throw Error(ErrorCode::InvalidPQ, "q_ext must be >= 0");

    const int t_cap = std::min(params.p, (r - 1) / 2);
    if (params.T.empty()) throw Error(ErrorCode::InvalidT, "T is empty");
    for (int v : params.T)
        if (v < 1 || v > t_cap)
            throw Error(ErrorCode::InvalidT, "T={" + join(params.T) + "} not within [1, " + std::to_string(t_cap) + "]");

    if (params.q_ext == 0) {
        if (!params.P.empty() || !params.Q.empty())
            throw Error(ErrorCode::InvalidPQ, "P and Q must be empty when q_ext = 0");
        return;
    }
    const int p_cap = std::min(params.p, r - 2);
    const int q_cap = std::min(params.q_ext, r - 2);
    if (params.P.empty() || params.Q.empty()) throw Error(ErrorCode::InvalidPQ, "P and Q must be non-empty when q_ext >= 1");
    for (int v : params.P)
        if (v < 1 || v > p_cap)
            throw Error(ErrorCode::InvalidPQ, "P={" + join(params.P) + "} not within [1, " + std::to_string(p_cap) + "]");
    for (int v : params.Q)
        if (v < 1 || v > q_cap)
            throw Error(ErrorCode::InvalidPQ, "Q={" + join(params.Q) + "} not within [1, " + std::to_string(q_cap) + "]");
    // Both sets are sorted, so the smallest elements decide the x + y <= r-1 witness.
    if (*params.P.begin() + *params.Q.begin() > r - 1)
        throw Error(ErrorCode::InvalidPQ, "no x in P, y in Q with x + y <= r - 1");
}

Hypergraph extend_pq(const Hypergraph& h, const ExtensionParams& params) {
    return extend_impl(h, params, "extend_pq");
}

ExtensionParams star_params(std::size_t edge_index, int t) {
    ExtensionParams params;
    params.edge_index = edge_index;
    params.p = t;
    params.q_ext = 0;
    for (int i = 1; i <= t; ++i) params.T.insert(i);
    return params;
}

Hypergraph star_extend(const Hypergraph& h, std::size_t edge_index, int t) {
    if (t < 1 || t > (h.r() - 1) / 2)
        throw Error(ErrorCode::TOutOfRange,
                    "t=" + std::to_string(t) + " not within [1, " + std::to_string((h.r() - 1) / 2) + "]");
    check_edge_index(h, edge_index);
    return extend_impl(h, star_params(edge_index, t), "star t=" + std::to_string(t));
}

EdgeRule parse_edge_rule(const std::string& name) {
    if (name == "first") return EdgeRule::First;
    if (name == "last") return EdgeRule::Last;
    if (name == "random") return EdgeRule::Random;
    throw Error(ErrorCode::ParseError, "unknown edge rule '" + name + "'");
}

std::string to_string(EdgeRule rule) {
    switch (rule) {
    case EdgeRule::First: return "first";
    case EdgeRule::Last: return "last";
    case EdgeRule::Random: return "random";
    }
    return "first";
}

Hypergraph iterate_star(const Hypergraph& h, int t, int steps, EdgeRule rule, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Hypergraph current = h;
    for (int step = 0; step < steps; ++step) {
        if (current.edge_count() == 0) throw Error(ErrorCode::EdgeIndexOutOfRange, "no edge to extend");
        std::size_t idx = 0;
        switch (rule) {
        case EdgeRule::First: idx = 0; break;
        case EdgeRule::Last: idx = current.edge_count() - 1; break;
        case EdgeRule::Random: idx = static_cast<std::size_t>(rng() % current.edge_count()); break;
        }
        current = star_extend(current, idx, t);
    }
    return current;
}

namespace {

std::vector<int> with_new_vertices(const Colouring& c, const ExtensionParams& params, int w_colour, int u_colour) {
    std::vector<int> labels = c.colours();
    labels.insert(labels.end(), static_cast<std::size_t>(params.p), w_colour);
    labels.insert(labels.end(), static_cast<std::size_t>(params.q_ext), u_colour);
    return labels;
}

}  // namespace

Colouring extend_classical_colouring(const Hypergraph& h, const ExtensionParams& params, const Colouring& c) {
    validate(params, h);
    if (!check_classical(h, c)) throw Error(ErrorCode::ImproperInput, "colouring is not a proper classical colouring");
    const Edge& star = h.edges()[params.edge_index];

    // Colours of E* ordered by multiplicity, ties by first appearance on E*.
    std::vector<std::pair<int, int>> order;  // (count, colour)
    std::vector<int> first_seen;
    for (Vertex v : star) {
        int col = c[v];
        auto it = std::find(first_seen.begin(), first_seen.end(), col);
        if (it == first_seen.end()) {
            first_seen.push_back(col);
            order.emplace_back(1, col);
        } else {
            ++order[static_cast<std::size_t>(it - first_seen.begin())].first;
        }
    }
    std::stable_sort(order.begin(), order.end(), [](auto a, auto b) { return a.first < b.first; });
    return Colouring(with_new_vertices(c, params, order[0].second, order[1].second));
}

Colouring extend_22_colouring(const Hypergraph& h, const ExtensionParams& params, const Colouring& c) {
    validate(params, h);
    if (!check_ab(h, c, 2, 2)) throw Error(ErrorCode::ImproperInput, "colouring is not a (2,2)-colouring");
    const Edge& star = h.edges()[params.edge_index];
    const int a = c[star.front()];
    int b = a;
    int count_a = 0;
    for (Vertex v : star) {
        if (c[v] == a) ++count_a;
        else b = c[v];
    }
    const int count_b = static_cast<int>(star.size()) - count_a;
    const int minority = count_b < count_a ? b : a;
    const int majority = minority == a ? b : a;
    return Colouring(with_new_vertices(c, params, minority, majority));
}

}  // namespace hyperlab
