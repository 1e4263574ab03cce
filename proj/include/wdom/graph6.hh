#pragma once

#include <wdom/graph.hh>

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wdom
{
    /// Raised for malformed graph6 input; offset is the zero-based byte position
    /// of the offending character within the record (after any header).
    class Graph6Error : public std::runtime_error
    {
    public:
        Graph6Error(const std::string & what, std::size_t offset);

        auto offset() const -> std::size_t { return offset_; }

    private:
        std::size_t offset_;
    };

    /// Largest order encodable in the one-byte size header.
    inline constexpr int graph6_short_max = 62;

    /// Largest order supported at all (four-byte size header).
    inline constexpr int graph6_long_max = 258047;

    /// Decodes one graph6 record. An optional ">>graph6<<" prefix and a trailing
    /// newline are accepted.
    auto parse_graph6(std::string_view text) -> Graph;

    /// Encodes g in graph6. Orders above graph6_short_max use the four-byte size
    /// header only when allow_long_form is set; otherwise they are rejected.
    auto write_graph6(const Graph & g, bool allow_long_form = false) -> std::string;

    /// Reads a corpus: one graph6 record per line, blank lines and lines starting
    /// with '#' skipped. Errors carry the 1-based line number in the message.
    auto read_graph6_corpus(std::istream & in) -> std::vector<Graph>;
}
