#pragma once

#include <cstddef>

#include "infodiff/graph.hpp"

namespace infodiff {

/// Overlapping NMI between two covers of the same n nodes, in [0, 1].
///
/// Each community is a binary indicator over nodes. H(X_k|Y) is the smallest
/// H(X_k|Y_l) over the communities of Y, restricted (when `lfk_constraint`)
/// to pairs with h(p11) + h(p00) >= h(p01) + h(p10); with no admissible l it
/// falls back to H(X_k). Logarithms are base 2.
///
/// A community covering every node has zero entropy. Its normalized
/// conditional entropy is taken as 0 when the other cover holds the same
/// node set and 1 otherwise.
double nmi_overlapping(const CommunityCover& x, const CommunityCover& y, std::size_t n,
                       bool lfk_constraint = true);

/// Fraction of correctly classified nodes: greedy one-to-one matching of
/// detected to true communities by largest overlap (ties: lower detected
/// index, then lower truth index); matched overlaps summed and divided by n.
double fccn(const CommunityCover& detected, const CommunityCover& truth, std::size_t n);

/// Newman-Girvan modularity sum_s [l_s / L - (d_s / 2L)^2] of a partition.
/// Throws ModeError when `partition` is not a partition of the graph's nodes.
double modularity(const Graph& graph, const CommunityCover& partition);

} // namespace infodiff
