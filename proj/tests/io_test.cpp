#include "dagcent/io.hpp"

#include <filesystem>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "support/random_dag.hpp"

namespace dagcent {
namespace {

const std::filesystem::path kFixtures = DAGCENT_FIXTURE_DIR;

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("dagcent-io-" + std::to_string(std::random_device{}()) + "-" + std::to_string(counter_++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

TEST(EdgeListCsv, LoadsChainWithNodeTable) {
    Polytree g = load_graph(kFixtures / "chain.csv");
    EXPECT_EQ(g.size(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.person(g.index_of(NodeId("c"))).name, "Carter, Jr.");
}

TEST(EdgeListCsv, SelfLoopReportsLine) {
    try {
        load_graph(kFixtures / "selfloop.csv");
        FAIL() << "expected SelfLoopError";
    } catch (const SelfLoopError& e) {
        EXPECT_EQ(e.node(), "x");
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(EdgeListCsv, HeaderOnlyIsEmptyGraph) {
    Polytree g = load_graph(kFixtures / "header_only.csv");
    EXPECT_TRUE(g.empty());
}

TEST(EdgeListCsv, CycleIsValidationError) {
    EXPECT_THROW(load_graph(kFixtures / "cyclic.csv"), CycleError);
}

TEST(EdgeListCsv, MalformedRows) {
    std::istringstream missing_header("a,b\n");
    EXPECT_THROW(parse_edge_list(missing_header), ParseError);

    std::istringstream three_fields("parent,child\na,b,c\n");
    try {
        parse_edge_list(three_fields);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }

    std::istringstream unterminated("parent,child\n\"a,b\n");
    EXPECT_THROW(parse_edge_list(unterminated), ParseError);
}

TEST(EdgeListCsv, QuotedFieldsAndCrlf) {
    std::istringstream in("\xEF\xBB\xBFparent,child\r\n\"x,1\",\"y\"\"q\"\r\n");
    Polytree g = parse_edge_list(in);
    EXPECT_TRUE(g.contains(NodeId("x,1")));
    EXPECT_TRUE(g.contains(NodeId("y\"q")));
}

TEST(CanonicalJson, ChainBytes) {
    Polytree g = load_graph(kFixtures / "chain.csv");
    EXPECT_EQ(to_canonical_json(g),
              "{\"nodes\":[{\"id\":\"a\",\"name\":\"Alice\"},{\"id\":\"b\",\"name\":\"Bob\"},"
              "{\"id\":\"c\",\"name\":\"Carter, Jr.\"}],\"edges\":[[\"a\",\"b\"],[\"b\",\"c\"]]}\n");
}

TEST(CanonicalJson, ParseErrorsCarryOffset) {
    try {
        parse_json_graph("{\"nodes\": [");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_TRUE(e.offset().has_value());
    }
    EXPECT_THROW(parse_json_graph("{\"edges\": [[\"a\"]]}"), ParseError);
    EXPECT_THROW(parse_json_graph("{\"edges\": [[\"a\", 3]]}"), ParseError);
    EXPECT_THROW(parse_json_graph("{\"edges\": [[\"a\", \"a\"]]}"), SelfLoopError);
}

TEST(Serialization, RoundTripIsIdentityOnRandomGraphs) {
    std::mt19937_64 rng(11);
    TempDir dir;
    for (int trial = 0; trial < 20; ++trial) {
        Polytree g = testing::random_dag(rng, 1 + trial, 0.3);
        // Isolated nodes and awkward names must survive too.
        std::vector<Person> persons(g.persons().begin(), g.persons().end());
        persons.push_back(Person{NodeId("iso," + std::to_string(trial)), "Name \"quoted\", Jr."});
        g = Polytree::build(persons, {g.edges().begin(), g.edges().end()});

        auto json_path = dir.path() / ("g" + std::to_string(trial) + ".json");
        save_graph(g, json_path, GraphFormat::json);
        EXPECT_EQ(load_graph(json_path), g);

        auto csv_path = dir.path() / ("g" + std::to_string(trial) + ".csv");
        save_graph(g, csv_path, GraphFormat::csv);
        EXPECT_EQ(load_graph(csv_path), g);
    }
}

TEST(MaskFile, CommentsAndBlankLines) {
    std::istringstream in("# targets\n a \n\nb # trailing\n#c\n");
    auto ids = parse_mask(in);
    ASSERT_EQ(ids.size(), 2u);
    EXPECT_EQ(ids[0], NodeId("a"));
    EXPECT_EQ(ids[1], NodeId("b"));
}

TEST(FormatReal, TwelveSignificantDigitsAndInf) {
    EXPECT_EQ(format_real(0.75), "0.75");
    EXPECT_EQ(format_real(4.0 / 3.0), "1.33333333333");
    EXPECT_EQ(format_real(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(json_real(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(json_real(2.0 / 3.0).dump(), "0.666666666667");
}

}  // namespace
}  // namespace dagcent
