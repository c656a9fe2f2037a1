#include "infodiff/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "infodiff/errors.hpp"

namespace infodiff {
namespace {

struct Line {
    std::size_t number;
    std::vector<std::int64_t> tokens;
};

std::int64_t parse_integer(std::string_view token, std::size_t line_number)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_number) + ": '" + std::string(token) +
                         "' is not an integer");
    }
    return value;
}

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
        }
        auto first = raw.find_first_not_of(" \t");
        if (first == std::string_view::npos || raw[first] == '#') {
            continue;
        }
        Line line{number, {}};
        std::size_t pos = first;
        while (pos < raw.size()) {
            auto end = raw.find_first_of(" \t", pos);
            if (end == std::string_view::npos) {
                end = raw.size();
            }
            line.tokens.push_back(parse_integer(raw.substr(pos, end - pos), number));
            pos = raw.find_first_not_of(" \t", end);
            if (pos == std::string_view::npos) {
                break;
            }
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

NodeId to_node(std::int64_t raw, bool one_based, std::size_t line_number)
{
    const std::int64_t id = one_based ? raw - 1 : raw;
    if (id < 0 || id > std::int64_t{UINT32_MAX - 1}) {
        throw RangeError("line " + std::to_string(line_number) + ": node id " +
                         std::to_string(raw) + " out of range");
    }
    return static_cast<NodeId>(id);
}

} // namespace

EdgeListContent parse_edge_list(std::string_view text, bool one_based)
{
    const auto lines = tokenize(text);
    std::size_t width = 0;
    for (const auto& line : lines) {
        const std::size_t w = line.tokens.size();
        if (w != 2 && w != 3) {
            throw FormatError("line " + std::to_string(line.number) + ": expected 2 or 3 tokens, got " +
                              std::to_string(w));
        }
        if (width != 0 && w != width) {
            throw FormatError("line " + std::to_string(line.number) +
                              ": mixed static and timed edge lines");
        }
        width = w;
    }

    std::size_t n = 0;
    if (width == 3) {
        std::vector<Event> events;
        events.reserve(lines.size());
        for (const auto& line : lines) {
            Event e{to_node(line.tokens[0], one_based, line.number),
                    to_node(line.tokens[1], one_based, line.number), 0};
            if (line.tokens[2] < 0) {
                throw RangeError("line " + std::to_string(line.number) + ": negative time");
            }
            e.t = static_cast<std::uint64_t>(line.tokens[2]);
            n = std::max<std::size_t>({n, std::size_t{e.u} + 1, std::size_t{e.v} + 1});
            events.push_back(e);
        }
        return EventStream(std::move(events), n, StreamSource::dynamic);
    }

    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(lines.size());
    for (const auto& line : lines) {
        NodeId u = to_node(line.tokens[0], one_based, line.number);
        NodeId v = to_node(line.tokens[1], one_based, line.number);
        n = std::max<std::size_t>({n, std::size_t{u} + 1, std::size_t{v} + 1});
        pairs.emplace_back(u, v);
    }
    return Graph(n, pairs);
}

Graph parse_graph(std::string_view text, bool one_based)
{
    auto content = parse_edge_list(text, one_based);
    if (auto* g = std::get_if<Graph>(&content)) {
        return std::move(*g);
    }
    return contact_graph(std::get<EventStream>(content));
}

CommunityCover parse_communities(std::string_view text, CommunityFormat format, bool one_based,
                                 std::size_t node_count)
{
    const auto lines = tokenize(text);
    if (lines.empty()) {
        throw FormatError("community file is empty");
    }
    std::size_t n = node_count;
    std::vector<std::vector<NodeId>> groups;

    if (format == CommunityFormat::per_line) {
        for (const auto& line : lines) {
            auto& group = groups.emplace_back();
            for (auto raw : line.tokens) {
                NodeId v = to_node(raw, one_based, line.number);
                n = std::max<std::size_t>(n, std::size_t{v} + 1);
                group.push_back(v);
            }
        }
    } else {
        std::map<NodeId, std::int64_t> label_of;
        std::map<std::int64_t, std::vector<NodeId>> by_label;
        for (const auto& line : lines) {
            if (line.tokens.size() != 2) {
                throw FormatError("line " + std::to_string(line.number) +
                                  ": expected `node label`");
            }
            NodeId v = to_node(line.tokens[0], one_based, line.number);
            const std::int64_t label = line.tokens[1];
            auto [it, inserted] = label_of.emplace(v, label);
            if (!inserted) {
                if (it->second != label) {
                    throw FormatError("line " + std::to_string(line.number) + ": node " +
                                      std::to_string(line.tokens[0]) + " has two labels");
                }
                continue;
            }
            n = std::max<std::size_t>(n, std::size_t{v} + 1);
            by_label[label].push_back(v);
        }
        for (auto& [label, members] : by_label) {
            groups.push_back(std::move(members));
        }
    }
    return CommunityCover(std::move(groups), n);
}

std::string write_edge_list(const Graph& graph, bool one_based)
{
    const NodeId off = one_based ? 1 : 0;
    std::ostringstream out;
    for (const Edge& e : graph.edges()) {
        out << e.u + off << ' ' << e.v + off << '\n';
    }
    return out.str();
}

std::string write_event_stream(const EventStream& stream, bool one_based)
{
    const NodeId off = one_based ? 1 : 0;
    std::ostringstream out;
    for (const Event& e : stream.events()) {
        out << e.u + off << ' ' << e.v + off << ' ' << e.t << '\n';
    }
    return out.str();
}

std::string write_communities(const CommunityCover& cover, bool one_based)
{
    const NodeId off = one_based ? 1 : 0;
    std::ostringstream out;
    for (const auto& c : cover.communities()) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            out << (i ? " " : "") << c[i] + off;
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

} // namespace infodiff
