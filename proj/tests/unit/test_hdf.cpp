#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "infodiff/errors.hpp"
#include "infodiff/hdf.hpp"

using namespace infodiff;

namespace {

std::vector<std::uint8_t> bits_of(std::string_view s)
{
    std::vector<std::uint8_t> out;
    for (char c : s) out.push_back(c == '1' ? 1 : 0);
    return out;
}

// Independent scorer over the textual dump: sum of the scores of every
// pattern whose fixed characters agree with the vector.
double oracle_score(const std::string& dump, std::string_view bits)
{
    double total = 0.0;
    std::istringstream in(dump);
    std::string pattern;
    double score = 0.0;
    while (in >> pattern >> score) {
        bool ok = true;
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            if (pattern[i] != '*' && pattern[i] != bits[i]) ok = false;
        }
        if (ok) total += score;
    }
    return total;
}

} // namespace

TEST(Hdf, WorkedExampleScores)
{
    const HdfFunction f = example_hdf();
    EXPECT_EQ(f.beta(), 10u);
    EXPECT_EQ(f.schemas().size(), 5u);
    EXPECT_EQ(f.score_binary(bits_of("1010011010")), 7.0);
    EXPECT_EQ(f.score_binary(bits_of("0010011000")), 0.0);
    EXPECT_EQ(f.score_binary(bits_of("1010000011")), 2.0);
}

TEST(Hdf, ExampleMaximumByEnumeration)
{
    const HdfFunction f = example_hdf();
    double best = -1e9;
    for (unsigned x = 0; x < 1024; ++x) {
        std::vector<std::uint8_t> b(10);
        for (int i = 0; i < 10; ++i) b[i] = (x >> (9 - i)) & 1;
        best = std::max(best, f.score_binary(b));
    }
    EXPECT_EQ(best, 9.0);
}

TEST(Schema, ParseOrderAndMatch)
{
    const Schema a = Schema::parse("*01*****10", 4.0);
    EXPECT_EQ(a.width(), 10u);
    EXPECT_EQ(a.order(), 2);
    EXPECT_EQ(a.specified().size(), 4u);
    EXPECT_EQ(a.to_string(), "*01*****10");
    EXPECT_TRUE(a.matches(bits_of("1010000010")));
    EXPECT_FALSE(a.matches(bits_of("1110000010")));
    EXPECT_EQ(Schema::parse("**110**", 1.0).order(), 1);
    EXPECT_THROW(Schema::parse("**2*", 1.0), ParseError);
    EXPECT_THROW(Schema::parse("****", 1.0), ArgumentError);
    EXPECT_THROW(Schema::parse("1*", NAN), ArgumentError);
}

TEST(Hdf, RealScoringModes)
{
    const HdfFunction f(2, {Schema::parse("1*", 4.0)});
    const std::vector<double> exact{1.0, 0.3};
    EXPECT_DOUBLE_EQ(f.score_real(exact), 4.0);
    EXPECT_DOUBLE_EQ(f.score_real(exact, RealScoring::literal_difference), 4.0);
    const std::vector<double> quarter{0.25, 0.9};
    EXPECT_DOUBLE_EQ(f.score_real(quarter), 1.0);
    EXPECT_DOUBLE_EQ(f.score_real(quarter, RealScoring::literal_difference), 3.0);
    const std::vector<double> bad{1.2, 0.0};
    EXPECT_THROW(f.score_real(bad), ArgumentError);
    const std::vector<double> short_vec{1.0};
    EXPECT_THROW(f.score_real(short_vec), ArgumentError);
}

TEST(Hdf, BinaryEquivalenceOnRandomFunctions)
{
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        RandomHdfSpec spec;
        spec.beta = 12 + rng.uniform_index(20);
        spec.n_order1 = 2 + rng.uniform_index(4);
        spec.n_higher = rng.uniform_index(4);
        const HdfFunction f = build_random_hdf(spec, rng);
        const std::string dump = dump_hdf(f);
        std::vector<std::uint8_t> bits(f.beta());
        std::vector<double> real(f.beta());
        std::string text(f.beta(), '0');
        for (std::size_t i = 0; i < f.beta(); ++i) {
            bits[i] = rng.bernoulli(0.5);
            real[i] = bits[i];
            text[i] = bits[i] ? '1' : '0';
        }
        const double b = f.score_binary(bits);
        EXPECT_NEAR(b, oracle_score(dump, text), 1e-9);
        EXPECT_NEAR(f.score_real(real), b, 1e-9);
    }
}

TEST(Hdf, RandomSpecIsRespected)
{
    Rng rng(5);
    RandomHdfSpec spec{16, 4, 3, -2.0, 6.0};
    const HdfFunction f = build_random_hdf(spec, rng);
    EXPECT_EQ(f.beta(), 16u);
    EXPECT_EQ(f.schemas().size(), 7u);
    std::size_t order1 = 0;
    for (const auto& s : f.schemas()) {
        EXPECT_NE(s.score(), 0.0);
        EXPECT_GE(s.score(), -2.0);
        EXPECT_LE(s.score(), 6.0);
        if (s.order() == 1) ++order1;
    }
    EXPECT_GE(order1, 4u);
}

TEST(Hdf, DumpLoadRoundTrip)
{
    Rng rng(8);
    const HdfFunction f = build_random_hdf({}, rng);
    const HdfFunction g = load_hdf(dump_hdf(f));
    ASSERT_EQ(g.schemas().size(), f.schemas().size());
    for (std::size_t k = 0; k < f.schemas().size(); ++k) {
        EXPECT_EQ(g.schemas()[k].to_string(), f.schemas()[k].to_string());
        EXPECT_EQ(g.schemas()[k].score(), f.schemas()[k].score());
    }
    EXPECT_EQ(dump_hdf(g), dump_hdf(f));
    EXPECT_THROW(load_hdf(""), FormatError);
    EXPECT_THROW(load_hdf("**1 x\n"), ParseError);
    EXPECT_THROW(load_hdf("**1\n"), FormatError);
    EXPECT_THROW(HdfFunction(3, {Schema::parse("1*", 1.0)}), ArgumentError);
}
