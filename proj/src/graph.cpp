#include "lpiso/graph.hpp"

#include <algorithm>
#include <numeric>

namespace lpiso {

Graph Graph::from_edges(std::uint32_t vertex_count,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    Graph g(vertex_count);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u == v) raise(ErrorCode::LoopDetected, "loop at vertex " + std::to_string(u));
    if (u >= vertex_count_ || v >= vertex_count_)
        raise(ErrorCode::BadInput, "edge endpoint out of range");
    edges_.emplace(std::min(u, v), std::max(u, v));
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

GraphMetricSpace encode(const Graph& g) {
    std::uint32_t n = g.vertex_count();
    if (n == 0) raise(ErrorCode::BadInput, "empty graph has no metric space");
    std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n, Rational(0)));
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v) {
            if (u == v) continue;
            table[u][v] = g.has_edge(u, v) ? Rational(1) : Rational(2);
        }
    return {Presentation::finite_metric(std::move(table)), n};
}

namespace {

std::optional<std::pair<std::uint32_t, std::uint32_t>> first_distance_mismatch(
    const std::vector<std::uint32_t>& map, const Graph& g0, const Graph& g1) {
    for (std::uint32_t u = 0; u < g0.vertex_count(); ++u)
        for (std::uint32_t v = u + 1; v < g0.vertex_count(); ++v) {
            int d0 = g0.has_edge(u, v) ? 1 : 2;
            int d1 = map[u] == map[v] ? 0 : (g1.has_edge(map[u], map[v]) ? 1 : 2);
            if (d0 != d1) return std::make_pair(u, v);
        }
    return std::nullopt;
}

} // namespace

TransferResult isometry_to_isomorphism(const std::vector<std::uint32_t>& point_map, const Graph& g0,
                                       const Graph& g1) {
    TransferResult result;
    result.map = point_map;
    if (point_map.size() != g0.vertex_count()) {
        result.detail = "map must cover every vertex of the source graph";
        return result;
    }
    if (g0.vertex_count() != g1.vertex_count()) {
        result.detail = "vertex counts differ";
        return result;
    }
    for (std::uint32_t v : point_map)
        if (v >= g1.vertex_count()) {
            result.detail = "image vertex out of range";
            return result;
        }
    if (auto bad = first_distance_mismatch(point_map, g0, g1)) {
        result.witness = bad;
        result.detail = "distance changes on pair (" + std::to_string(bad->first) + "," +
                        std::to_string(bad->second) + ")";
        return result;
    }
    // Distances in {1,2} force injectivity; equal counts give a bijection,
    // and edge relations transfer pairwise.
    result.ok = true;
    result.detail = "graph isomorphism";
    return result;
}

TransferResult isomorphism_to_isometry(const std::vector<std::uint32_t>& vertex_map, const Graph& g0,
                                       const Graph& g1) {
    TransferResult result;
    result.map = vertex_map;
    if (vertex_map.size() != g0.vertex_count() || g0.vertex_count() != g1.vertex_count()) {
        result.detail = "NotIsomorphism: vertex counts differ";
        return result;
    }
    std::vector<bool> seen(g1.vertex_count(), false);
    for (std::uint32_t v : vertex_map) {
        if (v >= g1.vertex_count() || seen[v]) {
            result.detail = "NotIsomorphism: not a bijection";
            return result;
        }
        seen[v] = true;
    }
    if (auto bad = first_distance_mismatch(vertex_map, g0, g1)) {
        result.witness = bad;
        result.detail = "NotIsomorphism: edge relation differs on (" + std::to_string(bad->first) +
                        "," + std::to_string(bad->second) + ")";
        return result;
    }
    result.ok = true;
    result.detail = "certified distance-preserving on all pairs";
    return result;
}

std::vector<std::vector<std::uint32_t>> all_isomorphisms(const Graph& g0, const Graph& g1) {
    std::vector<std::vector<std::uint32_t>> found;
    if (g0.vertex_count() != g1.vertex_count()) return found;
    std::vector<std::uint32_t> perm(g0.vertex_count());
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        bool ok = true;
        for (std::uint32_t u = 0; u < g0.vertex_count() && ok; ++u)
            for (std::uint32_t v = u + 1; v < g0.vertex_count() && ok; ++v)
                if (g0.has_edge(u, v) != g1.has_edge(perm[u], perm[v])) ok = false;
        if (ok) found.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

std::vector<std::vector<std::uint32_t>> all_isometries(const Graph& g0, const Graph& g1) {
    std::vector<std::vector<std::uint32_t>> found;
    if (g0.vertex_count() != g1.vertex_count()) return found;
    auto m0 = encode(g0), m1 = encode(g1);
    const auto& t0 = m0.presentation.distance_table();
    const auto& t1 = m1.presentation.distance_table();
    std::vector<std::uint32_t> perm(g0.vertex_count());
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        bool ok = true;
        for (std::uint32_t u = 0; u < g0.vertex_count() && ok; ++u)
            for (std::uint32_t v = u + 1; v < g0.vertex_count() && ok; ++v)
                if (t0[u][v] != t1[perm[u]][perm[v]]) ok = false;
        if (ok) found.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

} // namespace lpiso
