#include <wdom/graph6.hh>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace wdom
{
    Graph6Error::Graph6Error(const string & what, size_t offset) :
        std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)),
        offset_(offset)
    {
    }

    namespace
    {
        constexpr string_view header = ">>graph6<<";

        auto sixbits(string_view text, size_t pos) -> int
        {
            auto c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw Graph6Error("byte " + std::to_string(int(c)) + " outside printable range 63..126", pos);
            return c - 63;
        }
    }

    auto parse_graph6(string_view text) -> Graph
    {
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        if (text.starts_with(header))
            text.remove_prefix(header.size());

        if (text.empty())
            throw Graph6Error("empty record", 0);
        for (size_t i = 0; i < text.size(); ++i)
            sixbits(text, i);

        size_t pos = 0;
        long n = 0;
        if (text[0] == 126) {
            if (text.size() >= 2 && text[1] == 126)
                throw Graph6Error("eight-byte size header not supported", 1);
            if (text.size() < 4)
                throw Graph6Error("truncated size header", text.size());
            for (pos = 1; pos < 4; ++pos)
                n = (n << 6) | sixbits(text, pos);
            if (n <= graph6_short_max)
                throw Graph6Error("long size header used for n=" + std::to_string(n), 1);
        }
        else {
            n = sixbits(text, 0);
            pos = 1;
        }

        size_t bits = static_cast<size_t>(n) * static_cast<size_t>(n > 0 ? n - 1 : 0) / 2;
        size_t expected = (bits + 5) / 6;
        if (text.size() - pos != expected)
            throw Graph6Error("expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) + ", found " + std::to_string(text.size() - pos),
                text.size() < pos + expected ? text.size() : pos + expected);

        vector<Edge> edges;
        size_t bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit) {
                size_t at = pos + bit / 6;
                if ((sixbits(text, at) >> (5 - bit % 6)) & 1)
                    edges.emplace_back(i, j);
            }

        if (bits % 6 != 0) {
            size_t last = pos + expected - 1;
            int padding = 6 - static_cast<int>(bits % 6);
            if (sixbits(text, last) & ((1 << padding) - 1))
                throw Graph6Error("nonzero padding bits", last);
        }

        return Graph(static_cast<int>(n), edges);
    }

    auto write_graph6(const Graph & g, bool allow_long_form) -> string
    {
        int n = g.order();
        string out;
        if (n <= graph6_short_max)
            out.push_back(static_cast<char>(n + 63));
        else if (allow_long_form && n <= graph6_long_max) {
            out.push_back(126);
            out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
            out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
            out.push_back(static_cast<char>((n & 63) + 63));
        }
        else
            throw GraphError("graph6: order " + std::to_string(n) + " exceeds supported range");

        int chunk = 0, filled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(chunk + 63));
                    chunk = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
        return out;
    }

    auto read_graph6_corpus(std::istream & in) -> vector<Graph>
    {
        vector<Graph> result;
        string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line[0] == '#')
                continue;
            try {
                result.push_back(parse_graph6(line));
            }
            catch (const Graph6Error & e) {
                throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what(), e.offset());
            }
        }
        return result;
    }
}
