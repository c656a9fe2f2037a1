#include <gtest/gtest.h>

#include "infodiff/config.hpp"
#include "infodiff/errors.hpp"

using namespace infodiff;

TEST(Config, SectionsKeysAndTypes)
{
    const Config c = Config::parse(R"(
top = 1
# comment
[experiment]
seed = 42
name = "karate club"   # trailing comment
flag = true
algorithms = [ggadm, "gpsodm"]

[dataset.gn]
mu = 0.25
)");
    EXPECT_EQ(c.get_u64("", "top", 0), 1u);
    EXPECT_EQ(c.get_u64("experiment", "seed", 0), 42u);
    EXPECT_EQ(c.get_string("experiment", "name", ""), "karate club");
    EXPECT_TRUE(c.get_bool("experiment", "flag", false));
    EXPECT_EQ(c.get_list("experiment", "algorithms"), (std::vector<std::string>{"ggadm", "gpsodm"}));
    EXPECT_DOUBLE_EQ(c.get_double("dataset.gn", "mu", 0.0), 0.25);
    EXPECT_TRUE(c.has_section("dataset.gn"));
    EXPECT_FALSE(c.has("dataset.gn", "n"));
    EXPECT_EQ(c.get_u64("dataset.gn", "n", 7), 7u);
    EXPECT_EQ(c.keys("experiment").size(), 4u);
    EXPECT_EQ(c.sections().back(), "dataset.gn");
}

TEST(Config, DoubleLists)
{
    const Config c = Config::parse("[sweep]\nmu = 0.1, 0.2,0.3\n");
    EXPECT_EQ(c.get_double_list("sweep", "mu"), (std::vector<double>{0.1, 0.2, 0.3}));
    EXPECT_TRUE(c.get_double_list("sweep", "missing").empty());
}

TEST(Config, Errors)
{
    EXPECT_THROW(Config::parse("[open\n"), ConfigError);
    EXPECT_THROW(Config::parse("novalue\n"), ConfigError);
    EXPECT_THROW(Config::parse(" = 3\n"), ConfigError);
    const Config c = Config::parse("[a]\nx = abc\ny = -3\nz = maybe\nl = 1, q\n");
    EXPECT_THROW(c.get_double("a", "x", 0.0), ConfigError);
    EXPECT_THROW(c.get_u64("a", "y", 0), ConfigError);
    EXPECT_THROW(c.get_bool("a", "z", false), ConfigError);
    EXPECT_THROW(c.get_double_list("a", "l"), ConfigError);
}
