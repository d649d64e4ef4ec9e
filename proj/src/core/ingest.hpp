#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace topo {

// Filtering rules applied while building graphs from raw source files.
struct FilterPolicy {
    bool drop_private = true;
    NodeId private_lo = 64512;  // RFC-reserved private AS range, inclusive
    NodeId private_hi = 65535;
    bool drop_ambiguous = true;  // AS-set / multi-origin tokens void the line
    bool drop_indirect = true;   // three-column lines not marked direct are voided
    std::vector<std::string> direct_tokens = {"d", "direct"};

    bool is_private(NodeId asn) const { return drop_private && asn >= private_lo && asn <= private_hi; }
    bool is_direct_marker(std::string_view tok) const;
};

// Ingestion is lossy by design; every drop is counted so runs are auditable.
struct RejectionCounts {
    std::uint64_t malformed = 0;
    std::uint64_t ambiguous_token = 0;
    std::uint64_t private_asn = 0;
    std::uint64_t indirect_link = 0;
    std::uint64_t self_loops = 0;
    std::uint64_t duplicate_edges = 0;
    // WHOIS/RPSL-specific
    std::uint64_t orphan_attributes = 0;   // attribute lines before any aut-num
    std::uint64_t bad_peer_clause = 0;     // unparsable AS token after from/to
    std::uint64_t unregistered_peer = 0;   // peer with no aut-num object of its own
    std::uint64_t bad_aut_num = 0;         // aut-num value not a plain AS number
    std::vector<std::uint64_t> malformed_lines;  // 1-based line numbers

    std::string to_tsv() const;  // "reason\tcount" rows, fixed order
};

struct ParseResult {
    Graph graph;
    RejectionCounts rejects;
};

// Two- or three-column whitespace-separated edge lines, '#' comments.
// Tokens are decimal AS numbers with an optional "AS" prefix; tokens
// containing '{', '}', ',' or '_' are AS-set / multi-origin notation.
ParseResult parse_edge_list(std::istream& in, const FilterPolicy& policy);
ParseResult parse_edge_list_file(const std::string& path, const FilterPolicy& policy);

// RPSL dump: objects separated by blank lines, "key: value" attributes,
// continuation lines start with whitespace. Pass 1 collects the ASes owning
// an aut-num object; pass 2 extracts "import: from ASy" / "export: to ASz"
// peerings, keeping edges only when both ends own an aut-num object.
ParseResult parse_whois_rpsl(std::istream& in, const FilterPolicy& policy);
ParseResult parse_whois_rpsl_file(const std::string& path, const FilterPolicy& policy);

// Node and edge set union.
Graph merge_graphs(std::span<const Graph> graphs);

struct OverlapStats {
    std::uint64_t nodes_both = 0, nodes_only_a = 0, nodes_only_b = 0;
    std::uint64_t edges_both = 0, edges_only_a = 0, edges_only_b = 0;
    // Mean degree, within A, of the nodes A has and B lacks (0 if none).
    double avg_degree_only_a_in_a = 0.0;

    std::string to_tsv(const std::string& label_a, const std::string& label_b) const;
};

OverlapStats overlap_stats(const Graph& a, const Graph& b);

}  // namespace topo
