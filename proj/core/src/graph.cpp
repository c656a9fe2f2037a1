#include "infodiff/graph.hpp"

#include <algorithm>
#include <numeric>

#include "infodiff/errors.hpp"
#include "infodiff/random.hpp"

namespace infodiff {

Graph::Graph(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> pairs)
    : node_count_(node_count)
{
    edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a >= node_count || b >= node_count) {
            throw RangeError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") references a node outside [0, " + std::to_string(node_count) + ")");
        }
        if (a == b) {
            ++self_loops_dropped_;
            continue;
        }
        edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges_.begin(), edges_.end());
    auto last = std::unique(edges_.begin(), edges_.end());
    duplicates_dropped_ = static_cast<std::size_t>(edges_.end() - last);
    edges_.erase(last, edges_.end());

    std::vector<std::size_t> degree(node_count_, 0);
    for (const Edge& e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    offsets_.assign(node_count_ + 1, 0);
    std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[cursor[e.u]++] = e.v;
        adjacency_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < node_count_; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

bool Graph::has_edge(NodeId u, NodeId v) const
{
    if (u >= node_count_ || v >= node_count_) {
        return false;
    }
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

EventStream::EventStream(std::vector<Event> events, std::size_t node_count, StreamSource source,
                         std::size_t epoch_size)
    : node_count_(node_count), source_(source)
{
    events_.reserve(events.size());
    for (const Event& e : events) {
        if (e.u >= node_count || e.v >= node_count) {
            throw RangeError("event references a node outside [0, " + std::to_string(node_count) +
                             ")");
        }
        if (e.u == e.v) {
            ++self_loops_dropped_;
            continue;
        }
        events_.push_back(e);
    }
    std::stable_sort(events_.begin(), events_.end(),
                     [](const Event& a, const Event& b) { return a.t < b.t; });
    epoch_size_ = (epoch_size == 0 || epoch_size > events_.size()) ? events_.size() : epoch_size;
}

Graph contact_graph(const EventStream& stream)
{
    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(stream.size());
    for (const Event& e : stream.events()) {
        pairs.emplace_back(e.u, e.v);
    }
    return Graph(stream.node_count(), pairs);
}

EventStream build_event_stream(const Graph& graph, std::size_t epochs, std::uint64_t seed)
{
    if (epochs == 0) {
        throw ArgumentError("build_event_stream: epochs must be positive");
    }
    if (graph.edge_count() == 0) {
        throw ArgumentError("build_event_stream: graph has no edges");
    }
    const std::size_t m = graph.edge_count();
    Rng rng(seed);
    std::vector<Edge> order(graph.edges().begin(), graph.edges().end());
    std::vector<Event> events;
    events.reserve(epochs * m);
    std::uint64_t t = 0;
    for (std::size_t k = 0; k < epochs; ++k) {
        std::shuffle(order.begin(), order.end(), rng.engine());
        for (const Edge& e : order) {
            events.push_back(Event{e.u, e.v, t++});
        }
    }
    return EventStream(std::move(events), graph.node_count(), StreamSource::static_graph, m);
}

CommunityCover::CommunityCover(std::vector<std::vector<NodeId>> communities,
                               std::size_t node_count)
    : node_count_(node_count)
{
    for (auto& c : communities) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (!c.empty() && c.back() >= node_count) {
            throw RangeError("community member " + std::to_string(c.back()) +
                             " outside [0, " + std::to_string(node_count) + ")");
        }
    }
    std::erase_if(communities, [](const auto& c) { return c.empty(); });
    std::sort(communities.begin(), communities.end());
    communities.erase(std::unique(communities.begin(), communities.end()), communities.end());
    communities_ = std::move(communities);

    std::vector<std::uint32_t> hits(node_count_, 0);
    for (const auto& c : communities_) {
        for (NodeId v : c) {
            ++hits[v];
        }
    }
    is_partition_ = std::all_of(hits.begin(), hits.end(), [](auto h) { return h == 1; });
}

std::vector<std::vector<std::size_t>> CommunityCover::memberships() const
{
    std::vector<std::vector<std::size_t>> out(node_count_);
    for (std::size_t k = 0; k < communities_.size(); ++k) {
        for (NodeId v : communities_[k]) {
            out[v].push_back(k);
        }
    }
    return out;
}

std::size_t CommunityCover::largest_size() const
{
    std::size_t best = 0;
    for (const auto& c : communities_) {
        best = std::max(best, c.size());
    }
    return best;
}

} // namespace infodiff
