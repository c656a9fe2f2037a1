#include <gtest/gtest.h>

#include "infodiff/errors.hpp"
#include "infodiff/info_matrix.hpp"

using namespace infodiff;

TEST(InfoMatrix, AccumulatesSparseSortedRows)
{
    InfoMatrix m(4);
    m.add(0, 3, 1.5);
    m.add(0, 1, 2.0);
    m.add(0, 3, 0.5);
    m.add(2, 1, 0.0);
    EXPECT_EQ(m.at(0, 3), 2.0);
    EXPECT_EQ(m.at(0, 1), 2.0);
    EXPECT_EQ(m.at(3, 0), 0.0);
    EXPECT_EQ(m.nonzero_count(), 2u);
    ASSERT_EQ(m.row(0).size(), 2u);
    EXPECT_EQ(m.row(0)[0].column, 1u);
    EXPECT_EQ(m.row_sum(0), 4.0);
    EXPECT_EQ(m.total(), 4.0);
    EXPECT_TRUE(m.row(2).empty());
}

TEST(InfoMatrix, RejectsInvalidUpdates)
{
    InfoMatrix m(3);
    EXPECT_THROW(m.add(1, 1, 1.0), ArgumentError);
    EXPECT_THROW(m.add(0, 1, -1.0), ArgumentError);
    EXPECT_THROW(m.add(0, 3, 1.0), RangeError);
    m.finalize();
    EXPECT_THROW(m.add(0, 1, 1.0), StateError);
    EXPECT_THROW(m.finalize(), StateError);
}

TEST(InfoMatrix, MergeThenFinalizeAverages)
{
    InfoMatrix a(3), b(3), c(3);
    a.add(0, 1, 3.0);
    b.add(0, 1, 1.0);
    b.add(2, 0, 6.0);
    a.merge(b);
    a.merge(c);
    EXPECT_EQ(a.run_count(), 3u);
    a.finalize();
    EXPECT_DOUBLE_EQ(a.at(0, 1), 4.0 / 3.0);
    EXPECT_DOUBLE_EQ(a.at(2, 0), 2.0);
    EXPECT_DOUBLE_EQ(a.mean_nonzero(), (4.0 / 3.0 + 2.0) / 2.0);
    EXPECT_THROW(a.merge(b), StateError);
    InfoMatrix d(2);
    EXPECT_THROW(b.merge(d), ArgumentError);
}

TEST(InfoMatrix, TsvRoundTrip)
{
    InfoMatrix m(3);
    m.add(0, 2, 0.1);
    m.add(2, 0, 1.0 / 3.0);
    m.finalize();
    const std::string tsv = m.to_tsv();
    EXPECT_NE(tsv.find("1\t-"), std::string::npos);
    const InfoMatrix back = InfoMatrix::from_tsv(tsv);
    EXPECT_TRUE(back.finalized());
    EXPECT_EQ(back.node_count(), 3u);
    EXPECT_EQ(back.at(0, 2), m.at(0, 2));
    EXPECT_EQ(back.at(2, 0), m.at(2, 0));
    EXPECT_EQ(back.to_tsv(), tsv);
    EXPECT_THROW(InfoMatrix::from_tsv("0\t1:x\n"), FormatError);
}
