#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace topo {

// AS numbers; 16-bit in 2004-era data but stored as 32 bits.
using NodeId = std::uint32_t;

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

struct BuildReport {
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicate_edges_dropped = 0;
};

// Immutable undirected simple graph over AS identifiers. Node ids are kept
// as-is; algorithms run on a dense index space (position in the sorted node
// array) that is never serialized.
class Graph {
public:
    Graph() = default;

    // Builds a simple graph from raw edges: self-loops dropped, duplicates
    // collapsed, node set = endpoints plus `extra_nodes` (which may be empty).
    static Graph build(EdgeList edges, BuildReport* report = nullptr,
                       std::span<const NodeId> extra_nodes = {});

    std::size_t node_count() const { return nodes_.size(); }
    std::uint64_t edge_count() const { return m_; }

    // Node ids in ascending order; dense index i <-> nodes()[i].
    std::span<const NodeId> nodes() const { return nodes_; }
    NodeId id_of(std::uint32_t idx) const { return nodes_[idx]; }
    std::optional<std::uint32_t> index_of(NodeId id) const;

    std::uint32_t degree(std::uint32_t idx) const {
        return static_cast<std::uint32_t>(offsets_[idx + 1] - offsets_[idx]);
    }
    // Neighbors as dense indices, ascending.
    std::span<const std::uint32_t> neighbors(std::uint32_t idx) const {
        return {adj_.data() + offsets_[idx], adj_.data() + offsets_[idx + 1]};
    }
    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    // Calls f(u, v) once per edge with u < v (dense indices, sorted order).
    template <typename F>
    void for_each_edge(F&& f) const {
        for (std::uint32_t u = 0; u < nodes_.size(); ++u) {
            for (std::uint32_t v : neighbors(u)) {
                if (v > u) f(u, v);
            }
        }
    }

    // Edges as id pairs, u < v numerically, sorted; the canonical order.
    EdgeList edge_list() const;

    bool operator==(const Graph& other) const {
        return nodes_ == other.nodes_ && offsets_ == other.offsets_ && adj_ == other.adj_;
    }

private:
    std::vector<NodeId> nodes_;            // sorted ascending
    std::vector<std::uint64_t> offsets_;   // size n+1
    std::vector<std::uint32_t> adj_;       // size 2m, dense indices
    std::uint64_t m_ = 0;
};

struct ComponentLabeling {
    std::vector<std::uint32_t> component_of;  // per dense index
    std::vector<std::uint64_t> sizes;         // per component
    std::uint32_t largest = 0;                // max size, ties -> smallest contained id
};

// (node id, degree) pairs in ascending id order; degrees sum to 2m.
std::vector<std::pair<NodeId, std::uint32_t>> degree_sequence(const Graph& g);

ComponentLabeling connected_components(const Graph& g);

// Unweighted hop counts from `source`; unreachable nodes are absent.
std::map<NodeId, std::uint32_t> bfs_distances(const Graph& g, NodeId source);

// Internal array form used by the metric cores; kUnreached marks unreachable.
inline constexpr std::uint32_t kUnreached = UINT32_MAX;
std::vector<std::uint32_t> bfs_distances_from(const Graph& g, std::uint32_t source_idx);

// Subgraph on keep ∩ nodes(g) with every edge of g whose endpoints are kept.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

// Subgraph on the largest connected component; coverage = |component| / n.
Graph largest_component_subgraph(const Graph& g, double* coverage = nullptr);

// Canonical serialized form: '#' header comments, then one "u\tv" line per
// edge with u < v, lines sorted. Nodes with no edges are recorded on
// "# isolated:" header lines so that round-trips are exact.
void save_graph(const Graph& g, std::ostream& out);
void save_graph_file(const Graph& g, const std::string& path);
std::string graph_to_string(const Graph& g);
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

}  // namespace topo
