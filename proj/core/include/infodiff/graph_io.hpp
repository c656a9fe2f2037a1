#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "infodiff/graph.hpp"

namespace infodiff {

/// Either a static graph (all lines `u v`) or a timed stream (all lines `u v t`).
using EdgeListContent = std::variant<Graph, EventStream>;

/// Parse `u v [t]` lines; `#` starts a comment line, LF or CRLF endings.
/// With `one_based`, 1 is subtracted from every node id.
EdgeListContent parse_edge_list(std::string_view text, bool one_based = false);

/// Like parse_edge_list but always yields a static graph; a timed file is
/// collapsed to its contact graph.
Graph parse_graph(std::string_view text, bool one_based = false);

enum class CommunityFormat {
    per_line,   ///< each line lists the members of one community
    node_label, ///< each line is `node label` (LFR community.dat)
};

/// `node_count` of 0 means "largest member id + 1".
CommunityCover parse_communities(std::string_view text, CommunityFormat format,
                                 bool one_based = false, std::size_t node_count = 0);

std::string write_edge_list(const Graph& graph, bool one_based = false);
std::string write_event_stream(const EventStream& stream, bool one_based = false);
std::string write_communities(const CommunityCover& cover, bool one_based = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace infodiff
