#pragma once

#include <beslab/hypergraph.hpp>

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace beslab
{
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // First line "r n m", then m lines of r vertex ids. '#' starts a comment.
    auto parse_hypergraph(std::string_view text) -> Hypergraph;

    auto read_hypergraph(std::istream & in) -> Hypergraph;

    auto to_text(const Hypergraph & g) -> std::string;
}
