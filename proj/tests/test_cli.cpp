#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "linlayout/bounds.hpp"
#include "linlayout/layout.hpp"
#include "linlayout/text_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

class Workdir {
public:
    Workdir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("linlayout_cli_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~Workdir() { fs::remove_all(path_); }
    std::string operator()(const std::string& name) const { return (path_ / name).string(); }

    Result run(const std::vector<std::string>& args) const {
        std::ostringstream out, err;
        const int code = linlayout::cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    std::string read(const std::string& name) const {
        std::ifstream in((*this)(name));
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    void write(const std::string& name, const std::string& content) const {
        std::ofstream((*this)(name)) << content;
    }

private:
    fs::path path_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate, multiply and verify the four-queue layout") {
    Workdir w;
    CHECK(w.run({"gen", "hexgrid", "--n", "4", "-o", w("h4.graph")}).code == 0);
    CHECK(w.run({"gen", "star", "--b", "9", "-o", w("s9.graph")}).code == 0);
    CHECK(w.run({"product", "--op", "cartesian", w("s9.graph"), w("h4.graph"), "-o", w("g.graph")}).code == 0);
    const auto g = linlayout::graph_from_string(w.read("g.graph"));
    CHECK(g.vertex_count() == 160);
    CHECK(g.edge_count() == 474);
    CHECK(w.run({"layout", "fourqueue", "--b", "9", "--n", "4", "-o", w("L.layout")}).code == 0);
    const auto v = w.run({"verify", "--graph", w("g.graph"), "--layout", w("L.layout")});
    CHECK(v.code == 0);
    CHECK(v.out == "valid, 4 queues\n");
    // A layout for a different b does not match the graph: I/O-level error.
    CHECK(w.run({"layout", "fourqueue", "--b", "5", "--n", "4", "-o", w("L5.layout")}).code == 0);
    CHECK(w.run({"verify", "--graph", w("g.graph"), "--layout", w("L5.layout")}).code == 2);
}

TEST_CASE("verify reports violations with exit code 1") {
    Workdir w;
    CHECK(w.run({"gen", "complete", "--n", "4", "-o", w("k4.graph")}).code == 0);
    w.write("bad.layout", "layout stack 1\norder 0 1 2 3\npage 0 1 1\npage 0 2 1\npage 0 3 1\npage 1 2 1\n"
                          "page 1 3 1\npage 2 3 1\n");
    const auto r = w.run({"verify", "--graph", w("k4.graph"), "--layout", w("bad.layout")});
    CHECK(r.code == 1);
    CHECK(r.out.rfind("invalid, 1 violation\n", 0) == 0);
    CHECK(r.out.find("edges 0-2 and 1-3 cross on page 1") != std::string::npos);
    const auto svg = w.run({"render", "--graph", w("k4.graph"), "--layout", w("bad.layout")});
    CHECK(svg.code == 1);
    CHECK(w.run({"render", "--graph", w("k4.graph"), "--layout", w("bad.layout"), "--certificate", "-o",
                 w("bad.svg")})
              .code == 0);
    CHECK(w.read("bad.svg").find("#d62728") != std::string::npos);
}

TEST_CASE("params prints the exact parameters") {
    Workdir w;
    const auto r = w.run({"params", "--s", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n=3\n") != std::string::npos);
    std::ostringstream expected;
    expected << "b=" << linlayout::to_decimal(linlayout::factorial(9) * linlayout::power(16, 256)) << '\n';
    CHECK(r.out.find(expected.str()) != std::string::npos);
    CHECK(r.out.find("family=2\n") != std::string::npos);
    const auto big = w.run({"params", "--s", "2"});
    CHECK(big.code == 0);
    CHECK(big.out.find("not materialized") != std::string::npos);
    CHECK(w.run({"params", "--s", "0"}).code == 2);
}

TEST_CASE("exact writes a re-readable witness") {
    Workdir w;
    CHECK(w.run({"gen", "complete", "--n", "4", "-o", w("k4.graph")}).code == 0);
    const auto r = w.run({"exact", "--kind", "stack", "--graph", w("k4.graph"), "-o", w("k4.layout")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("stack number 2", 0) == 0);
    const auto v = w.run({"verify", "--graph", w("k4.graph"), "--layout", w("k4.layout")});
    CHECK(v.out == "valid, 2 stacks\n");
    CHECK(w.run({"gen", "path", "--n", "12", "-o", w("p.graph")}).code == 0);
    CHECK(w.run({"exact", "--kind", "queue", "--graph", w("p.graph")}).code == 2);
    CHECK(w.run({"exact", "--kind", "queue", "--graph", w("p.graph"), "--max-vertices", "12"}).code == 0);
}

TEST_CASE("search, refute and trace") {
    Workdir w;
    CHECK(w.run({"gen", "hexgrid", "--n", "2", "-o", w("h2.graph")}).code == 0);
    CHECK(w.run({"gen", "star", "--b", "2", "-o", w("s2.graph")}).code == 0);
    CHECK(w.run({"product", "--op", "cartesian", w("s2.graph"), w("h2.graph"), "-o", w("g.graph")}).code == 0);
    CHECK(w.run({"layout", "search", "--graph", w("g.graph"), "--kind", "stack", "--pages", "3", "-o",
                 w("g.layout")})
              .code == 0);
    const auto r = w.run({"refute", "--graph", w("g.graph"), "--layout", w("g.layout"), "--s", "3", "--trace",
                          w("t.txt")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("report: b=2 n=2 s=3", 0) == 0);
    CHECK(w.read("t.txt").find("outcome report") != std::string::npos);
    CHECK(w.run({"refute", "--graph", w("g.graph"), "--layout", w("g.layout"), "--s", "2"}).code == 2);
    SUBCASE("search failure is exit 1") {
        CHECK(w.run({"gen", "complete", "--n", "5", "-o", w("k5.graph")}).code == 0);
        const auto none = w.run({"layout", "search", "--graph", w("k5.graph"), "--kind", "stack", "--pages", "2",
                                 "--budget", "200"});
        CHECK(none.code == 1);
        CHECK(none.err.find("no 2 stacks layout") != std::string::npos);
    }
}

TEST_CASE("refute finds a certificate on a one-page layout") {
    Workdir w;
    // One page of S_1 [] H_2 in block order: the two grid copies cross.
    CHECK(w.run({"gen", "hexgrid", "--n", "2", "-o", w("h2.graph")}).code == 0);
    CHECK(w.run({"gen", "star", "--b", "1", "-o", w("s1.graph")}).code == 0);
    CHECK(w.run({"product", "--op", "cartesian", w("s1.graph"), w("h2.graph"), "-o", w("g.graph")}).code == 0);
    const auto g = linlayout::graph_from_string(w.read("g.graph"));
    std::string layout = "layout stack 1\norder 0 1 2 3 4 5 6 7\n";
    for (const auto& e : g.edges()) layout += "page " + std::to_string(e.u) + " " + std::to_string(e.v) + " 1\n";
    w.write("one.layout", layout);
    const auto r = w.run({"refute", "--graph", w("g.graph"), "--layout", w("one.layout"), "--s", "1"});
    CHECK(r.code == 0);  // a single leaf: no interleaving pair, family empty
    CHECK(r.out.find("d=1") != std::string::npos);
}

TEST_CASE("hexpath") {
    Workdir w;
    w.write("c.txt", "c 0 b\nc 1 r\nc 2 b\nc 3 r\n");
    const auto r = w.run({"hexpath", "--colouring", w("c.txt")});
    CHECK(r.code == 0);
    CHECK(r.out == "blue path, 2 vertices: 0 2\n");
    w.write("bad.txt", "c 0 b\nc 1 r\n");
    CHECK(w.run({"hexpath", "--colouring", w("bad.txt")}).code == 2);
}

TEST_CASE("generators round-trip through the CLI") {
    Workdir w;
    const std::vector<std::vector<std::string>> commands{
        {"gen", "path", "--n", "5"},        {"gen", "cycle", "--n", "6"},  {"gen", "complete", "--n", "5"},
        {"gen", "hexgrid", "--n", "3"},     {"gen", "star", "--b", "4"},   {"layout", "hexqueue", "--n", "5"},
        {"layout", "starqueue", "--b", "3"}};
    for (auto args : commands) {
        const auto first = w.run(args);
        REQUIRE(first.code == 0);
        w.write("x.txt", first.out);
        if (args[0] == "gen") {
            CHECK(linlayout::graph_to_string(linlayout::graph_from_string(first.out)) == first.out);
        } else {
            CHECK(linlayout::layout_to_string(linlayout::layout_from_string(first.out)) == first.out);
        }
    }
    CHECK(w.run({"gen", "cycle", "--n", "3", "-o", w("c3.graph")}).code == 0);
    const auto sub = w.run({"gen", "subdivide", "--graph", w("c3.graph"), "--k", "2"});
    CHECK(sub.code == 0);
    CHECK(sub.out.rfind("graph 9\n", 0) == 0);
    CHECK(w.run({"product", "--op", "strong", w("c3.graph"), w("c3.graph")}).out.rfind("graph 9\n", 0) == 0);
}

TEST_CASE("product layouts through the CLI") {
    Workdir w;
    CHECK(w.run({"gen", "star", "--b", "3", "-o", w("s.graph")}).code == 0);
    CHECK(w.run({"layout", "starqueue", "--b", "3", "-o", w("s.layout")}).code == 0);
    CHECK(w.run({"gen", "hexgrid", "--n", "3", "-o", w("h.graph")}).code == 0);
    CHECK(w.run({"layout", "hexqueue", "--n", "3", "-o", w("h.layout")}).code == 0);
    const auto q = w.run({"layout", "product", "--kind", "queue", "--g1", w("s.graph"), "--l1", w("s.layout"), "--g2",
                          w("h.graph"), "--l2", w("h.layout"), "-o", w("p.layout")});
    CHECK(q.code == 0);
    CHECK(w.run({"product", "--op", "cartesian", w("s.graph"), w("h.graph"), "-o", w("p.graph")}).code == 0);
    CHECK(w.run({"verify", "--graph", w("p.graph"), "--layout", w("p.layout")}).out == "valid, 4 queues\n");
    // A queue layout is not a stack factor.
    CHECK(w.run({"layout", "product", "--kind", "stack", "--g1", w("s.graph"), "--l1", w("s.layout"), "--g2",
                 w("h.graph"), "--l2", w("h.layout")})
              .code == 2);
}

TEST_CASE("usage errors") {
    Workdir w;
    CHECK(w.run({}).code == 2);
    CHECK(w.run({"frobnicate"}).code == 2);
    CHECK(w.run({"gen", "hexgrid"}).code == 2);
    CHECK(w.run({"gen", "hexgrid", "--n", "3", "--bogus"}).code == 2);
    CHECK(w.run({"gen", "hexgrid", "--n", "0"}).code == 2);
    CHECK(w.run({"product", "--op", "tensor", "a", "b"}).code == 2);
    CHECK(w.run({"verify", "--graph", w("missing.graph"), "--layout", w("missing.layout")}).code == 2);
    w.write("broken.graph", "graph 3\ne 0 9\n");
    const auto broken = w.run({"exact", "--kind", "stack", "--graph", w("broken.graph")});
    CHECK(broken.code == 2);
    CHECK(broken.err.find("line 2") != std::string::npos);
    const auto help = w.run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("refute") != std::string::npos);
    CHECK(w.run({"verify", "--help"}).code == 0);
}

}
