#include <wdom/generators.hh>
#include <wdom/graph6.hh>

#include <doctest.h>

#include <sstream>

using namespace wdom;

TEST_CASE("known encodings")
{
    CHECK(parse_graph6("Bw") == complete(3));
    CHECK(parse_graph6("Bg") == path(3));
    CHECK(parse_graph6("?") == Graph());
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(write_graph6(complete(3)) == "Bw");
    CHECK(write_graph6(Graph()) == "?");
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete(3));
}

TEST_CASE("round trip over every labelled graph on at most six vertices")
{
    int count = 0;
    for (int n = 0; n <= 6; ++n) {
        LabeledGraphEnumerator e(n, {}, 6);
        while (auto g = e.next()) {
            REQUIRE(parse_graph6(write_graph6(*g)) == *g);
            ++count;
        }
    }
    CHECK(count == 1 + 1 + 2 + 8 + 64 + 1024 + 32768);
}

TEST_CASE("long form above 62 vertices")
{
    auto g = cycle(70);
    CHECK_THROWS_AS(write_graph6(g), GraphError);
    auto code = write_graph6(g, true);
    CHECK(code.substr(0, 1) == "~");
    CHECK(parse_graph6(code) == g);
    CHECK(parse_graph6(write_graph6(path(62))) == path(62));
}

TEST_CASE("malformed records name the offending byte")
{
    auto offset_of = [](const std::string & text) {
        try {
            parse_graph6(text);
        } catch (const Graph6Error & e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("B w") == 1);
    CHECK(offset_of("Bx") == 1);  // padding bits set
    CHECK(offset_of("Bww") >= 0); // too many data bytes
    CHECK(offset_of("~?") >= 0);  // truncated size header
    CHECK(offset_of("Bw") == -1);
}

TEST_CASE("corpus reader skips comments and reports line numbers")
{
    std::istringstream ok("# header\nBw\n\nBg\n");
    auto graphs = read_graph6_corpus(ok);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[1] == path(3));

    std::istringstream bad("Bw\nB!\n");
    try {
        read_graph6_corpus(bad);
        FAIL("expected an error");
    } catch (const Graph6Error & e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}
