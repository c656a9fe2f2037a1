#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace infodiff {

using NodeId = std::uint32_t;

/// Undirected edge, stored with u < v.
struct Edge {
    NodeId u;
    NodeId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Static undirected simple graph with dense 0-based node ids.
///
/// Self-loops are dropped (and counted) and duplicate edges are merged at
/// construction. Adjacency is stored CSR-style with each neighbor list sorted.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> pairs);

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const NodeId> neighbors(NodeId v) const
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(NodeId u, NodeId v) const;

    std::size_t self_loops_dropped() const { return self_loops_dropped_; }
    std::size_t duplicates_dropped() const { return duplicates_dropped_; }

private:
    std::size_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacency_;
    std::size_t self_loops_dropped_ = 0;
    std::size_t duplicates_dropped_ = 0;
};

/// A timed contact between two nodes.
struct Event {
    NodeId u;
    NodeId v;
    std::uint64_t t;

    friend bool operator==(const Event&, const Event&) = default;
};

enum class StreamSource { static_graph, dynamic };

/// Time-ordered multiset of contacts. Duplicate (u, v, t) entries are kept.
///
/// `epoch_size` is the number of consecutive events forming one pass; streams
/// built from a static graph use |E|, parsed dynamic streams are one epoch.
class EventStream {
public:
    EventStream() = default;
    EventStream(std::vector<Event> events, std::size_t node_count, StreamSource source,
                std::size_t epoch_size = 0);

    std::span<const Event> events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }
    std::size_t node_count() const { return node_count_; }
    StreamSource source() const { return source_; }
    std::size_t epoch_size() const { return epoch_size_; }
    std::size_t self_loops_dropped() const { return self_loops_dropped_; }

private:
    std::vector<Event> events_;
    std::size_t node_count_ = 0;
    StreamSource source_ = StreamSource::dynamic;
    std::size_t epoch_size_ = 0;
    std::size_t self_loops_dropped_ = 0;
};

/// Static graph of all distinct pairs that ever interact in `stream`.
Graph contact_graph(const EventStream& stream);

/// `epochs` independent uniform permutations of the edge set, concatenated;
/// event times are consecutive integers starting at 0.
EventStream build_event_stream(const Graph& graph, std::size_t epochs, std::uint64_t seed);

/// A set of node-sets over nodes [0, n).
///
/// Construction canonicalizes: members are sorted and deduplicated, empty
/// communities dropped, communities sorted and identical ones merged. The cover
/// is a partition when communities are pairwise disjoint and cover every node.
class CommunityCover {
public:
    enum class Mode { disjoint, overlapping };

    CommunityCover() = default;
    CommunityCover(std::vector<std::vector<NodeId>> communities, std::size_t node_count);

    /// One community per distinct label; labels[v] is the label of node v.
    template <class Label>
    static CommunityCover from_labels(std::span<const Label> labels);

    std::size_t size() const { return communities_.size(); }
    bool empty() const { return communities_.empty(); }
    std::size_t node_count() const { return node_count_; }
    const std::vector<std::vector<NodeId>>& communities() const { return communities_; }
    const std::vector<NodeId>& operator[](std::size_t k) const { return communities_[k]; }

    Mode mode() const { return is_partition_ ? Mode::disjoint : Mode::overlapping; }
    bool is_partition() const { return is_partition_; }

    /// Community indices containing each node.
    std::vector<std::vector<std::size_t>> memberships() const;
    std::size_t largest_size() const;

    friend bool operator==(const CommunityCover&, const CommunityCover&) = default;

private:
    std::vector<std::vector<NodeId>> communities_;
    std::size_t node_count_ = 0;
    bool is_partition_ = false;
};

template <class Label>
CommunityCover CommunityCover::from_labels(std::span<const Label> labels)
{
    std::vector<std::pair<Label, NodeId>> keyed;
    keyed.reserve(labels.size());
    for (std::size_t v = 0; v < labels.size(); ++v) {
        keyed.emplace_back(labels[v], static_cast<NodeId>(v));
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::vector<NodeId>> groups;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) {
            groups.emplace_back();
        }
        groups.back().push_back(keyed[i].second);
    }
    return CommunityCover(std::move(groups), labels.size());
}

} // namespace infodiff
