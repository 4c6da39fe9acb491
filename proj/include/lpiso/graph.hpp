#pragma once

#include <set>

#include "lpiso/presentation.hpp"

namespace lpiso {

// Loop-free undirected graph on vertices 0..vertex_count-1.
class Graph {
public:
    explicit Graph(std::uint32_t vertex_count) : vertex_count_(vertex_count) {}

    static Graph from_edges(std::uint32_t vertex_count,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

    std::uint32_t vertex_count() const { return vertex_count_; }
    const std::set<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }

    void add_edge(std::uint32_t u, std::uint32_t v);
    bool has_edge(std::uint32_t u, std::uint32_t v) const;

private:
    std::uint32_t vertex_count_;
    std::set<std::pair<std::uint32_t, std::uint32_t>> edges_;  // stored with u < v
};

// M(G): the metric space on the vertices with d(u,v) = 0, 1 or 2 according
// to equality, adjacency, or neither.
struct GraphMetricSpace {
    Presentation presentation;
    std::uint32_t point_count;
};

GraphMetricSpace encode(const Graph& g);

struct TransferResult {
    bool ok = false;
    std::vector<std::uint32_t> map;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
    std::string detail;
};

// Distance-preserving point map -> graph isomorphism (exact {0,1,2}
// distances), or a violation report naming the offending pair.
TransferResult isometry_to_isomorphism(const std::vector<std::uint32_t>& point_map, const Graph& g0,
                                       const Graph& g1);

// Graph isomorphism -> the same map certified distance-preserving on all
// pairs; NotIsomorphism details the first mismatched pair.
TransferResult isomorphism_to_isometry(const std::vector<std::uint32_t>& vertex_map, const Graph& g0,
                                       const Graph& g1);

// Brute-force enumerations for the small-graph harness.
std::vector<std::vector<std::uint32_t>> all_isomorphisms(const Graph& g0, const Graph& g1);
std::vector<std::vector<std::uint32_t>> all_isometries(const Graph& g0, const Graph& g1);

} // namespace lpiso
