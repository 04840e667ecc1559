#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "total_chroma/io.hpp"

namespace fs = std::filesystem;
using namespace total_chroma;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("total_chroma_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    /// Runs the CLI with `args`; stdout goes to out(), the exit status is returned.
    int run(const std::string& args) {
        const std::string cmd = std::string(TOTAL_CHROMA_CLI) + " " + args + " > " + (dir_ / "stdout").string() + " 2> " +
                                (dir_ / "stderr").string();
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string out() const { return read("stdout"); }

    std::string read(const std::string& name) const {
        std::ifstream in(dir_ / name, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& content) const {
        std::ofstream(dir_ / name, std::ios::binary) << content;
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, ColorThenVerify) {
    ASSERT_EQ(run("color --m 5 --n 6 --out " + path("c.tc")), 0);
    io::write_graph_file(path("g.graph"), direct_product(cycle(5), cycle(6)));
    EXPECT_EQ(run("verify --graph " + path("g.graph") + " --coloring " + path("c.tc")), 0);
    EXPECT_EQ(out(), "valid k=5\n");

    ASSERT_EQ(run("color --m 5 --n 6 --format json --out " + path("c.json")), 0);
    EXPECT_EQ(run("verify --graph " + path("g.graph") + " --coloring " + path("c.json")), 0);
}

TEST_F(Cli, VerifyReportsConflicts) {
    io::write_graph_file(path("g.graph"), cycle(3));
    write("bad.tc", "tc 3\nv 0 1\nv 1 2\nv 2 3\ne 0 1 1\ne 0 2 2\ne 1 2 1\n");
    EXPECT_EQ(run("verify --graph " + path("g.graph") + " --coloring " + path("bad.tc")), 1);
    EXPECT_EQ(out(), "invalid conflicts=2\nconflict v0 e{0,1} 1\nconflict e{0,1} e{1,2} 1\n");

    write("short.tc", "tc 3\nv 0 1\nv 1 2\nv 2 3\ne 0 1 3\n");
    EXPECT_EQ(run("verify --graph " + path("g.graph") + " --coloring " + path("short.tc")), 2);
    write("junk.tc", "tc 3\nv 0\n");
    EXPECT_EQ(run("verify --graph " + path("g.graph") + " --coloring " + path("junk.tc")), 2);
    write("junk.json", "{\"k\": 3,");
    EXPECT_EQ(run("verify --graph " + path("g.graph") + " --coloring " + path("junk.json")), 2);
}

TEST_F(Cli, FourByFourIsType2) {
    EXPECT_EQ(run("color --m 4 --n 4"), 1);
    const auto j = io::Json::parse(out());
    EXPECT_EQ(j.at("verdict"), "Type2");
    EXPECT_EQ(j.at("chi_t"), 6);
    EXPECT_EQ(j.at("components").size(), 2u);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run("color --m 2 --n 5"), 2);
    EXPECT_EQ(run("color --m 5"), 2);
    EXPECT_EQ(run("frobnicate"), 2);
    EXPECT_EQ(run("quotient --m 7"), 2);
    EXPECT_EQ(run("classify 'C4,4 x C3,3'"), 2);
    EXPECT_EQ(run("exact --family C5"), 2);
    EXPECT_EQ(run("exact --family C5 --k 3 --min"), 2);
}

TEST_F(Cli, Classify) {
    EXPECT_EQ(run("classify 'C3 x C4'"), 0);
    EXPECT_EQ(io::Json::parse(out()).at("verdict"), "Type1");
    EXPECT_EQ(run("classify 'K4,4 x K3,3'"), 1);
    EXPECT_EQ(io::Json::parse(out()).at("verdict"), "Type2");
    EXPECT_EQ(run("classify 'K3 x C5'"), 0);
    EXPECT_EQ(io::Json::parse(out()).at("verdict"), "Unknown");
}

TEST_F(Cli, ExactProbesAndAbort) {
    EXPECT_EQ(run("exact --family K4,4 --k 5 --deterministic"), 0);
    EXPECT_EQ(io::Json::parse(out()).at("outcome"), "exhausted");
    EXPECT_EQ(run("exact --family C5 --min --deterministic --witness-out " + path("w.tc")), 1);
    const auto j = io::Json::parse(out());
    EXPECT_EQ(j.at("chi_t"), 4);
    EXPECT_EQ(j.at("type"), "Type2");
    io::write_graph_file(path("c5.graph"), cycle(5));
    EXPECT_EQ(run("verify --graph " + path("c5.graph") + " --coloring " + path("w.tc")), 0);
    EXPECT_EQ(run("exact --graph " + path("c5.graph") + " --min"), 1);
    EXPECT_EQ(run("exact --family 'C6 x C6' --k 5 --timeout 0.000001"), 3);
}

TEST_F(Cli, DeterministicOutputIsByteIdentical) {
    ASSERT_EQ(run("exact --family 'C3 x C7' --min --deterministic --witness-out " + path("a.tc")), 0);
    const std::string first = out();
    EXPECT_EQ(first.find("elapsed"), std::string::npos);
    ASSERT_EQ(run("exact --family 'C3 x C7' --min --deterministic --witness-out " + path("b.tc")), 0);
    EXPECT_EQ(out(), first);
    EXPECT_EQ(read("a.tc"), read("b.tc"));
}

TEST_F(Cli, LiftPrism) {
    io::write_graph_file(path("c3.graph"), cycle(3));
    write("c3.tc", "tc 3\nv 0 1\nv 1 2\nv 2 3\ne 0 1 3\ne 0 2 2\ne 1 2 1\n");
    ASSERT_EQ(run("lift --graph " + path("c3.graph") + " --coloring " + path("c3.tc") + " --out " + path("l.tc") +
                  " --graph-out " + path("l.graph")),
              0);
    EXPECT_EQ(run("verify --graph " + path("l.graph") + " --coloring " + path("l.tc")), 0);
    EXPECT_EQ(out(), "valid k=3\n");

    // prism: Delta = 3, solved at 4 colors, lifted stays at 4
    const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    io::write_graph_file(path("prism.graph"), prism);
    ASSERT_EQ(run("exact --graph " + path("prism.graph") + " --min --deterministic --witness-out " + path("prism.tc")), 0);
    ASSERT_EQ(run("lift --graph " + path("prism.graph") + " --coloring " + path("prism.tc") + " --format json --out " +
                  path("pl.json") + " --graph-out " + path("pl.graph")),
              0);
    EXPECT_EQ(run("verify --graph " + path("pl.graph") + " --coloring " + path("pl.json")), 0);
    EXPECT_EQ(out(), "valid k=4\n");

    write("bad.tc", "tc 3\nv 0 1\nv 1 1\nv 2 3\ne 0 1 3\ne 0 2 2\ne 1 2 1\n");
    EXPECT_EQ(run("lift --graph " + path("c3.graph") + " --coloring " + path("bad.tc")), 1);
}

TEST_F(Cli, QuotientAndConformable) {
    ASSERT_EQ(run("quotient --m 11"), 0);
    const auto q = io::Json::parse(out());
    EXPECT_EQ(q.at("m"), 11);
    EXPECT_EQ(q.at("I")[6], 1);
    EXPECT_EQ(q.at("M")[10], 2);
    EXPECT_EQ(q.at("Mprime")[10], 4);

    ASSERT_EQ(run("quotient --m 12 --format svg --out " + path("q.svg")), 0);
    EXPECT_EQ(read("q.svg").rfind("<svg", 0), 0u);
    ASSERT_EQ(run("color --m 5 --n 5 --format svg"), 0);
    EXPECT_NE(out().find("</svg>"), std::string::npos);

    ASSERT_EQ(run("conformable --g C9 --h C5"), 0);
    const auto c = io::Json::parse(out());
    EXPECT_EQ(c.at("conformable"), true);
    EXPECT_EQ(c.at("palette"), 5);
    EXPECT_EQ(c.at("parity"), "odd");
    EXPECT_EQ(run("conformable --g C5 --h C3"), 1);
    EXPECT_EQ(run("conformable --g P3 --h C3"), 2);
}
