#include "core/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace topo {

namespace {

std::string_view trim(std::string_view sv) {
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' || sv.front() == '\r')) sv.remove_prefix(1);
    while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r')) sv.remove_suffix(1);
    return sv;
}

std::vector<std::string_view> split_ws(std::string_view sv) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < sv.size()) {
        while (i < sv.size() && (sv[i] == ' ' || sv[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < sv.size() && sv[i] != ' ' && sv[i] != '\t') ++i;
        if (i > start) out.push_back(sv.substr(start, i - start));
    }
    return out;
}

bool has_ambiguity_marker(std::string_view tok) {
    return tok.find_first_of("{},_") != std::string_view::npos;
}

// "AS1234" / "as1234" / "1234" -> 1234. Whole token must match.
bool parse_asn(std::string_view tok, NodeId& out) {
    if (tok.size() >= 2 && (tok[0] == 'A' || tok[0] == 'a') && (tok[1] == 'S' || tok[1] == 's'))
        tok.remove_prefix(2);
    if (tok.empty()) return false;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return res.ec == std::errc{} && res.ptr == tok.data() + tok.size();
}

std::string lower(std::string_view sv) {
    std::string out(sv);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

bool FilterPolicy::is_direct_marker(std::string_view tok) const {
    for (const auto& t : direct_tokens) {
        if (tok == t) return true;
    }
    return false;
}

std::string RejectionCounts::to_tsv() const {
    std::ostringstream out;
    out << "malformed\t" << malformed << '\n'
        << "ambiguous_token\t" << ambiguous_token << '\n'
        << "private_asn\t" << private_asn << '\n'
        << "indirect_link\t" << indirect_link << '\n'
        << "self_loops\t" << self_loops << '\n'
        << "duplicate_edges\t" << duplicate_edges << '\n'
        << "orphan_attributes\t" << orphan_attributes << '\n'
        << "bad_peer_clause\t" << bad_peer_clause << '\n'
        << "unregistered_peer\t" << unregistered_peer << '\n'
        << "bad_aut_num\t" << bad_aut_num << '\n';
    return out.str();
}

ParseResult parse_edge_list(std::istream& in, const FilterPolicy& policy) {
    ParseResult result;
    EdgeList edges;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        auto tokens = split_ws(sv);
        if (tokens.size() < 2 || tokens.size() > 3) {
            ++result.rejects.malformed;
            result.rejects.malformed_lines.push_back(lineno);
            continue;
        }
        if (policy.drop_ambiguous &&
            (has_ambiguity_marker(tokens[0]) || has_ambiguity_marker(tokens[1]))) {
            ++result.rejects.ambiguous_token;
            continue;
        }
        NodeId u, v;
        if (!parse_asn(tokens[0], u) || !parse_asn(tokens[1], v)) {
            ++result.rejects.malformed;
            result.rejects.malformed_lines.push_back(lineno);
            continue;
        }
        if (tokens.size() == 3 && policy.drop_indirect && !policy.is_direct_marker(tokens[2])) {
            ++result.rejects.indirect_link;
            continue;
        }
        if (policy.is_private(u) || policy.is_private(v)) {
            ++result.rejects.private_asn;
            continue;
        }
        edges.emplace_back(u, v);
    }
    BuildReport report;
    result.graph = Graph::build(std::move(edges), &report);
    result.rejects.self_loops = report.self_loops_dropped;
    result.rejects.duplicate_edges = report.duplicate_edges_dropped;
    return result;
}

ParseResult parse_edge_list_file(const std::string& path, const FilterPolicy& policy) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot open: " + path);
    return parse_edge_list(in, policy);
}

namespace {

struct RpslAttribute {
    std::string key;                       // lowercased
    std::vector<std::string> value_lines;  // first line + continuations
};

struct RpslObject {
    std::vector<RpslAttribute> attributes;
};

// Splits the stream into blank-line-separated objects. Attribute lines are
// "key: value"; lines starting with whitespace extend the previous value.
// Lines with no previous attribute to extend (or no colon) are orphans.
std::vector<RpslObject> read_rpsl_objects(std::istream& in, RejectionCounts& rejects) {
    std::vector<RpslObject> objects;
    RpslObject current;
    bool in_object = false;
    std::string line;
    auto flush = [&] {
        if (in_object && !current.attributes.empty()) objects.push_back(std::move(current));
        current = RpslObject{};
        in_object = false;
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) {
            flush();
            continue;
        }
        if (line[0] == ' ' || line[0] == '\t') {
            if (in_object && !current.attributes.empty()) {
                current.attributes.back().value_lines.emplace_back(trim(line));
            } else {
                ++rejects.orphan_attributes;
            }
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            ++rejects.orphan_attributes;
            continue;
        }
        in_object = true;
        RpslAttribute attr;
        attr.key = lower(trim(std::string_view(line).substr(0, colon)));
        attr.value_lines.emplace_back(trim(std::string_view(line).substr(colon + 1)));
        current.attributes.push_back(std::move(attr));
    }
    flush();
    return objects;
}

// First "<keyword> AS<digits>" clause on one value line, e.g. "from AS3356".
bool extract_peer(std::string_view value_line, std::string_view keyword, NodeId& peer,
                  bool& saw_clause) {
    auto tokens = split_ws(value_line);
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        if (lower(tokens[i]) == keyword) {
            saw_clause = true;
            return parse_asn(tokens[i + 1], peer);
        }
    }
    saw_clause = false;
    return false;
}

}  // namespace

ParseResult parse_whois_rpsl(std::istream& in, const FilterPolicy& policy) {
    ParseResult result;
    auto objects = read_rpsl_objects(in, result.rejects);

    // Pass 1: the set of ASes that own an aut-num object. Peerings involving
    // ASes outside this set are external to the database and dropped.
    std::vector<NodeId> registered;
    std::vector<std::optional<NodeId>> owner_of(objects.size());
    std::vector<std::size_t> autnum_pos(objects.size(), SIZE_MAX);
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const auto& attrs = objects[i].attributes;
        for (std::size_t ai = 0; ai < attrs.size(); ++ai) {
            if (attrs[ai].key != "aut-num") continue;
            NodeId asn;
            const auto tokens =
                attrs[ai].value_lines.empty() ? std::vector<std::string_view>{}
                                              : split_ws(attrs[ai].value_lines[0]);
            if (!tokens.empty() && parse_asn(tokens[0], asn)) {
                owner_of[i] = asn;
                autnum_pos[i] = ai;
                registered.push_back(asn);
            } else {
                ++result.rejects.bad_aut_num;
            }
            break;  // only the first aut-num attribute names the object
        }
    }
    std::sort(registered.begin(), registered.end());
    registered.erase(std::unique(registered.begin(), registered.end()), registered.end());
    auto is_registered = [&](NodeId asn) {
        return std::binary_search(registered.begin(), registered.end(), asn);
    };

    // Pass 2: candidate edges from import/export clauses. Peering attributes
    // not preceded by their object's aut-num are orphans.
    EdgeList edges;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const auto& attrs = objects[i].attributes;
        for (std::size_t ai = 0; ai < attrs.size(); ++ai) {
            std::string_view keyword;
            if (attrs[ai].key == "import") {
                keyword = "from";
            } else if (attrs[ai].key == "export") {
                keyword = "to";
            } else {
                continue;
            }
            if (!owner_of[i] || ai < autnum_pos[i]) {
                ++result.rejects.orphan_attributes;
                continue;
            }
            const NodeId owner = *owner_of[i];
            for (const auto& value_line : attrs[ai].value_lines) {
                NodeId peer;
                bool saw_clause = false;
                if (!extract_peer(value_line, keyword, peer, saw_clause)) {
                    if (saw_clause) ++result.rejects.bad_peer_clause;
                    continue;
                }
                if (!is_registered(peer)) {
                    ++result.rejects.unregistered_peer;
                    continue;
                }
                if (policy.is_private(owner) || policy.is_private(peer)) {
                    ++result.rejects.private_asn;
                    continue;
                }
                edges.emplace_back(owner, peer);
            }
        }
    }

    BuildReport report;
    result.graph = Graph::build(std::move(edges), &report);
    result.rejects.self_loops = report.self_loops_dropped;
    result.rejects.duplicate_edges = report.duplicate_edges_dropped;
    return result;
}

ParseResult parse_whois_rpsl_file(const std::string& path, const FilterPolicy& policy) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot open: " + path);
    return parse_whois_rpsl(in, policy);
}

Graph merge_graphs(std::span<const Graph> graphs) {
    EdgeList edges;
    std::vector<NodeId> nodes;
    for (const Graph& g : graphs) {
        auto el = g.edge_list();
        edges.insert(edges.end(), el.begin(), el.end());
        nodes.insert(nodes.end(), g.nodes().begin(), g.nodes().end());
    }
    return Graph::build(std::move(edges), nullptr, nodes);
}

OverlapStats overlap_stats(const Graph& a, const Graph& b) {
    OverlapStats s;
    std::uint64_t degree_sum_only_a = 0, n_only_a = 0;
    for (std::uint32_t i = 0; i < a.node_count(); ++i) {
        if (b.index_of(a.id_of(i))) {
            ++s.nodes_both;
        } else {
            ++n_only_a;
            degree_sum_only_a += a.degree(i);
        }
    }
    s.nodes_only_a = n_only_a;
    s.nodes_only_b = b.node_count() - s.nodes_both;
    s.avg_degree_only_a_in_a =
        n_only_a == 0 ? 0.0 : static_cast<double>(degree_sum_only_a) / static_cast<double>(n_only_a);

    const auto edges_a = a.edge_list();
    const auto edges_b = b.edge_list();
    std::uint64_t both = 0;
    // Both lists are sorted (canonical order).
    std::size_t i = 0, j = 0;
    while (i < edges_a.size() && j < edges_b.size()) {
        if (edges_a[i] == edges_b[j]) {
            ++both, ++i, ++j;
        } else if (edges_a[i] < edges_b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    s.edges_both = both;
    s.edges_only_a = edges_a.size() - both;
    s.edges_only_b = edges_b.size() - both;
    return s;
}

std::string OverlapStats::to_tsv(const std::string& label_a, const std::string& label_b) const {
    std::ostringstream out;
    out << "# overlap of A=" << label_a << " B=" << label_b << '\n';
    out << "nodes_both\t" << nodes_both << '\n'
        << "nodes_only_a\t" << nodes_only_a << '\n'
        << "nodes_only_b\t" << nodes_only_b << '\n'
        << "edges_both\t" << edges_both << '\n'
        << "edges_only_a\t" << edges_only_a << '\n'
        << "edges_only_b\t" << edges_only_b << '\n'
        << "avg_degree_only_a_in_a\t" << avg_degree_only_a_in_a << '\n';
    return out.str();
}

}  // namespace topo
