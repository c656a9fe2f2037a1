#include "infodiff/info_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "infodiff/errors.hpp"
#include "number_format.hpp"

namespace infodiff {

InfoMatrix::InfoMatrix(std::size_t node_count) : rows_(node_count) {}

void InfoMatrix::add(NodeId i, NodeId j, double amount)
{
    if (finalized_) {
        throw StateError("InfoMatrix::add on a finalized matrix");
    }
    if (i >= rows_.size() || j >= rows_.size()) {
        throw RangeError("InfoMatrix::add index out of range");
    }
    if (i == j) {
        throw ArgumentError("InfoMatrix::add on the diagonal");
    }
    if (!(amount >= 0.0)) {
        throw ArgumentError("InfoMatrix::add with a negative amount");
    }
    if (amount == 0.0) {
        return;
    }
    auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const Entry& e, NodeId c) { return e.column < c; });
    if (it != row.end() && it->column == j) {
        it->value += amount;
    } else {
        row.insert(it, Entry{j, amount});
    }
}

double InfoMatrix::at(NodeId i, NodeId j) const
{
    const auto& row = rows_.at(i);
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const Entry& e, NodeId c) { return e.column < c; });
    return (it != row.end() && it->column == j) ? it->value : 0.0;
}

double InfoMatrix::row_sum(NodeId i) const
{
    double s = 0.0;
    for (const Entry& e : rows_.at(i)) {
        s += e.value;
    }
    return s;
}

double InfoMatrix::total() const
{
    double s = 0.0;
    for (NodeId i = 0; i < rows_.size(); ++i) {
        s += row_sum(i);
    }
    return s;
}

std::size_t InfoMatrix::nonzero_count() const
{
    std::size_t c = 0;
    for (const auto& row : rows_) {
        c += row.size();
    }
    return c;
}

void InfoMatrix::merge(const InfoMatrix& other, std::size_t runs_in_other)
{
    if (finalized_ || other.finalized_) {
        throw StateError("InfoMatrix::merge requires unfinalized matrices");
    }
    if (other.node_count() != node_count()) {
        throw ArgumentError("InfoMatrix::merge dimension mismatch");
    }
    for (NodeId i = 0; i < rows_.size(); ++i) {
        for (const Entry& e : other.rows_[i]) {
            add(i, e.column, e.value);
        }
    }
    run_count_ += runs_in_other;
}

void InfoMatrix::finalize()
{
    if (finalized_) {
        throw StateError("InfoMatrix already finalized");
    }
    const double scale = 1.0 / static_cast<double>(run_count_);
    if (run_count_ != 1) {
        for (auto& row : rows_) {
            for (Entry& e : row) {
                e.value *= scale;
            }
        }
    }
    finalized_ = true;
}

double InfoMatrix::mean_nonzero() const
{
    const std::size_t nnz = nonzero_count();
    return nnz == 0 ? 0.0 : total() / static_cast<double>(nnz);
}

std::string InfoMatrix::to_tsv() const
{
    std::ostringstream out;
    out << "# info-matrix n=" << rows_.size() << " runs=" << run_count_ << '\n';
    for (NodeId i = 0; i < rows_.size(); ++i) {
        out << i;
        if (rows_[i].empty()) {
            out << "\t-";
        }
        for (const Entry& e : rows_[i]) {
            out << '\t' << e.column << ':' << detail::shortest_decimal(e.value);
        }
        out << '\n';
    }
    return out.str();
}

InfoMatrix InfoMatrix::from_tsv(std::string_view text)
{
    struct Parsed {
        NodeId row;
        std::vector<Entry> entries;
    };
    std::vector<Parsed> rows;
    std::size_t runs = 1;
    std::size_t max_id = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    auto fail = [&](const std::string& what) {
        throw FormatError("info matrix line " + std::to_string(number) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            auto pos = line.find("runs=");
            if (pos != std::string::npos) {
                runs = std::stoul(line.substr(pos + 5));
            }
            continue;
        }
        std::istringstream fields(line);
        std::string token;
        fields >> token;
        Parsed p;
        unsigned long row = 0;
        auto [rp, rec] = std::from_chars(token.data(), token.data() + token.size(), row);
        if (rec != std::errc() || rp != token.data() + token.size()) {
            fail("bad row id '" + token + "'");
        }
        p.row = static_cast<NodeId>(row);
        max_id = std::max<std::size_t>(max_id, row);
        while (fields >> token) {
            if (token == "-") {
                continue;
            }
            auto colon = token.find(':');
            if (colon == std::string::npos) {
                fail("expected column:value, got '" + token + "'");
            }
            unsigned long col = 0;
            double value = 0.0;
            auto [cp, cec] = std::from_chars(token.data(), token.data() + colon, col);
            auto [vp, vec] = std::from_chars(token.data() + colon + 1, token.data() + token.size(), value);
            if (cec != std::errc() || cp != token.data() + colon || vec != std::errc() ||
                vp != token.data() + token.size()) {
                fail("bad entry '" + token + "'");
            }
            max_id = std::max<std::size_t>(max_id, col);
            p.entries.push_back(Entry{static_cast<NodeId>(col), value});
        }
        rows.push_back(std::move(p));
    }
    InfoMatrix m(rows.empty() ? 0 : max_id + 1);
    for (const auto& p : rows) {
        for (const Entry& e : p.entries) {
            m.add(p.row, e.column, e.value);
        }
    }
    m.run_count_ = runs;
    m.finalized_ = true;
    return m;
}

} // namespace infodiff
