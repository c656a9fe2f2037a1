#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infodiff/graph.hpp"

namespace infodiff {

/// Sparse n x n matrix of accumulated information-transfer amounts.
///
/// Entry (i, j) is the fitness node i gained through interactions with j.
/// Per-run matrices are merged by summation and then finalized, which divides
/// by the number of runs. The diagonal is always zero and all entries are
/// nonnegative.
class InfoMatrix {
public:
    struct Entry {
        NodeId column;
        double value;
    };

    InfoMatrix() = default;
    explicit InfoMatrix(std::size_t node_count);

    std::size_t node_count() const { return rows_.size(); }

    /// Accumulate `amount` (must be >= 0) onto (i, j), i != j.
    void add(NodeId i, NodeId j, double amount);

    double at(NodeId i, NodeId j) const;
    /// Nonzero entries of row i, sorted by column.
    std::span<const Entry> row(NodeId i) const { return rows_[i]; }
    double row_sum(NodeId i) const;
    double total() const;
    std::size_t nonzero_count() const;

    /// Sum another run's matrix into this one. Both must be unfinalized.
    void merge(const InfoMatrix& other, std::size_t runs_in_other = 1);

    /// Divide by the number of merged runs. Idempotent guard: throws if
    /// called twice.
    void finalize();
    bool finalized() const { return finalized_; }
    std::size_t run_count() const { return run_count_; }

    /// Mean of all nonzero entries (0 when empty).
    double mean_nonzero() const;

    /// Tab-separated rows: `i<TAB>j:value<TAB>...`, or `i<TAB>-` when empty.
    std::string to_tsv() const;
    /// Parses to_tsv output; the result is finalized.
    static InfoMatrix from_tsv(std::string_view text);

private:
    std::vector<std::vector<Entry>> rows_;
    std::size_t run_count_ = 1;
    bool finalized_ = false;
};

} // namespace infodiff
