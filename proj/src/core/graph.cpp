#include "core/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <queue>
#include <sstream>

#include "core/error.hpp"

namespace topo {

Graph Graph::build(EdgeList edges, BuildReport* report, std::span<const NodeId> extra_nodes) {
    BuildReport local;

    // Normalize to u < v and drop self-loops (their endpoint still counts
    // as a node).
    EdgeList kept;
    kept.reserve(edges.size());
    std::vector<NodeId> loop_nodes;
    for (auto [u, v] : edges) {
        if (u == v) {
            ++local.self_loops_dropped;
            loop_nodes.push_back(u);
            continue;
        }
        if (u > v) std::swap(u, v);
        kept.emplace_back(u, v);
    }
    std::sort(kept.begin(), kept.end());
    auto last = std::unique(kept.begin(), kept.end());
    local.duplicate_edges_dropped = static_cast<std::uint64_t>(kept.end() - last);
    kept.erase(last, kept.end());

    Graph g;
    g.nodes_.reserve(kept.size() * 2 + extra_nodes.size());
    for (auto [u, v] : kept) {
        g.nodes_.push_back(u);
        g.nodes_.push_back(v);
    }
    g.nodes_.insert(g.nodes_.end(), extra_nodes.begin(), extra_nodes.end());
    g.nodes_.insert(g.nodes_.end(), loop_nodes.begin(), loop_nodes.end());
    std::sort(g.nodes_.begin(), g.nodes_.end());
    g.nodes_.erase(std::unique(g.nodes_.begin(), g.nodes_.end()), g.nodes_.end());

    const std::size_t n = g.nodes_.size();
    g.m_ = kept.size();

    std::vector<std::uint32_t> deg(n, 0);
    auto index = [&](NodeId id) {
        return static_cast<std::uint32_t>(
            std::lower_bound(g.nodes_.begin(), g.nodes_.end(), id) - g.nodes_.begin());
    };
    std::vector<std::pair<std::uint32_t, std::uint32_t>> idx_edges;
    idx_edges.reserve(kept.size());
    for (auto [u, v] : kept) {
        const std::uint32_t ui = index(u), vi = index(v);
        idx_edges.emplace_back(ui, vi);
        ++deg[ui];
        ++deg[vi];
    }

    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.adj_.resize(g.offsets_[n]);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [ui, vi] : idx_edges) {
        g.adj_[cursor[ui]++] = vi;
        g.adj_[cursor[vi]++] = ui;
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(g.adj_.begin() + g.offsets_[i], g.adj_.begin() + g.offsets_[i + 1]);

    if (report) *report = local;
    return g;
}

std::optional<std::uint32_t> Graph::index_of(NodeId id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
    if (it == nodes_.end() || *it != id) return std::nullopt;
    return static_cast<std::uint32_t>(it - nodes_.begin());
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

EdgeList Graph::edge_list() const {
    EdgeList out;
    out.reserve(m_);
    for_each_edge([&](std::uint32_t u, std::uint32_t v) { out.emplace_back(nodes_[u], nodes_[v]); });
    return out;
}

std::vector<std::pair<NodeId, std::uint32_t>> degree_sequence(const Graph& g) {
    std::vector<std::pair<NodeId, std::uint32_t>> out;
    out.reserve(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i) out.emplace_back(g.id_of(i), g.degree(i));
    return out;
}

ComponentLabeling connected_components(const Graph& g) {
    const std::size_t n = g.node_count();
    ComponentLabeling out;
    out.component_of.assign(n, UINT32_MAX);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t start = 0; start < n; ++start) {
        if (out.component_of[start] != UINT32_MAX) continue;
        const auto label = static_cast<std::uint32_t>(out.sizes.size());
        std::uint64_t size = 0;
        queue.assign(1, start);
        out.component_of[start] = label;
        while (!queue.empty()) {
            const std::uint32_t v = queue.back();
            queue.pop_back();
            ++size;
            for (std::uint32_t w : g.neighbors(v)) {
                if (out.component_of[w] == UINT32_MAX) {
                    out.component_of[w] = label;
                    queue.push_back(w);
                }
            }
        }
        out.sizes.push_back(size);
    }
    // Components are discovered in ascending order of their smallest node id,
    // so the first maximum is the required tie-break.
    out.largest = 0;
    for (std::uint32_t c = 1; c < out.sizes.size(); ++c) {
        if (out.sizes[c] > out.sizes[out.largest]) out.largest = c;
    }
    return out;
}

std::vector<std::uint32_t> bfs_distances_from(const Graph& g, std::uint32_t source_idx) {
    std::vector<std::uint32_t> dist(g.node_count(), kUnreached);
    std::vector<std::uint32_t> frontier{source_idx}, next;
    dist[source_idx] = 0;
    std::uint32_t hops = 0;
    while (!frontier.empty()) {
        ++hops;
        next.clear();
        for (std::uint32_t v : frontier) {
            for (std::uint32_t w : g.neighbors(v)) {
                if (dist[w] == kUnreached) {
                    dist[w] = hops;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

std::map<NodeId, std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
    auto src = g.index_of(source);
    if (!src) fail(ErrorKind::invalid_argument, "bfs_distances: unknown node id " + std::to_string(source));
    auto dist = bfs_distances_from(g, *src);
    std::map<NodeId, std::uint32_t> out;
    for (std::uint32_t i = 0; i < dist.size(); ++i) {
        if (dist[i] != kUnreached) out.emplace(g.id_of(i), dist[i]);
    }
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
    std::vector<NodeId> kept_nodes;
    kept_nodes.reserve(keep.size());
    for (NodeId id : keep) {
        if (g.index_of(id)) kept_nodes.push_back(id);
    }
    std::sort(kept_nodes.begin(), kept_nodes.end());
    kept_nodes.erase(std::unique(kept_nodes.begin(), kept_nodes.end()), kept_nodes.end());

    std::vector<char> in_keep(g.node_count(), 0);
    for (NodeId id : kept_nodes) in_keep[*g.index_of(id)] = 1;

    EdgeList edges;
    g.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
        if (in_keep[u] && in_keep[v]) edges.emplace_back(g.id_of(u), g.id_of(v));
    });
    return Graph::build(std::move(edges), nullptr, kept_nodes);
}

Graph largest_component_subgraph(const Graph& g, double* coverage) {
    if (g.node_count() == 0) {
        if (coverage) *coverage = 0.0;
        return g;
    }
    auto labels = connected_components(g);
    std::vector<NodeId> keep;
    keep.reserve(labels.sizes[labels.largest]);
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        if (labels.component_of[i] == labels.largest) keep.push_back(g.id_of(i));
    }
    if (coverage) *coverage = static_cast<double>(keep.size()) / static_cast<double>(g.node_count());
    return induced_subgraph(g, keep);
}

void save_graph(const Graph& g, std::ostream& out) {
    out << "# topo graph n=" << g.node_count() << " m=" << g.edge_count() << "\n";
    std::vector<NodeId> isolated;
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        if (g.degree(i) == 0) isolated.push_back(g.id_of(i));
    }
    // One "# isolated:" line per 64 ids keeps lines short.
    for (std::size_t i = 0; i < isolated.size(); i += 64) {
        out << "# isolated:";
        for (std::size_t j = i; j < std::min(isolated.size(), i + 64); ++j) out << ' ' << isolated[j];
        out << "\n";
    }
    g.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
        out << g.id_of(u) << '\t' << g.id_of(v) << '\n';
    });
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::io, "cannot open for writing: " + path);
    save_graph(g, out);
    if (!out.good()) fail(ErrorKind::io, "write failed: " + path);
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream ss;
    save_graph(g, ss);
    return ss.str();
}

namespace {

bool parse_u32(std::string_view tok, std::uint32_t& out) {
    if (tok.empty()) return false;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return res.ec == std::errc{} && res.ptr == tok.data() + tok.size();
}

}  // namespace

Graph load_graph(std::istream& in) {
    EdgeList edges;
    std::vector<NodeId> isolated;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' || sv.front() == '\r')) sv.remove_prefix(1);
        while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r')) sv.remove_suffix(1);
        if (sv.empty()) continue;
        if (sv.front() == '#') {
            constexpr std::string_view tag = "# isolated:";
            if (std::string_view(line).substr(0, tag.size()) == tag) {
                std::istringstream rest{std::string(std::string_view(line).substr(tag.size()))};
                NodeId id;
                while (rest >> id) isolated.push_back(id);
            }
            continue;
        }
        std::istringstream fields{std::string(sv)};
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra)) {
            fail(ErrorKind::parse, "graph file line " + std::to_string(lineno) + ": expected two columns");
        }
        std::uint32_t u, v;
        if (!parse_u32(a, u) || !parse_u32(b, v)) {
            fail(ErrorKind::parse, "graph file line " + std::to_string(lineno) + ": bad node id");
        }
        edges.emplace_back(u, v);
    }
    return Graph::build(std::move(edges), nullptr, isolated);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot open: " + path);
    return load_graph(in);
}

}  // namespace topo
