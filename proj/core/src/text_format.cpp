#include <beslab/text_format.hpp>

#include <charconv>
#include <iterator>
#include <sstream>
#include <vector>

namespace beslab
{
    namespace
    {
        auto tokens_of(std::string_view line, int line_no) -> std::vector<long long>
        {
            std::vector<long long> result;
            std::size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                    ++pos;
                if (pos == line.size())
                    break;
                std::size_t end = pos;
                while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r')
                    ++end;
                long long value = 0;
                auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
                if (ec != std::errc{} || ptr != line.data() + end)
                    throw ParseError("line " + std::to_string(line_no) + ": bad token '" + std::string(line.substr(pos, end - pos)) + "'");
                result.push_back(value);
                pos = end;
            }
            return result;
        }
    }

    auto parse_hypergraph(std::string_view text) -> Hypergraph
    {
        std::vector<std::vector<long long>> rows;
        std::vector<int> row_lines;
        int line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            auto line = text.substr(start, end - start);
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            auto toks = tokens_of(line, line_no);
            if (! toks.empty()) {
                rows.push_back(std::move(toks));
                row_lines.push_back(line_no);
            }
            if (end == text.size())
                break;
            start = end + 1;
        }

        if (rows.empty())
            throw ParseError("missing header line 'r n m'");
        const auto & header = rows.front();
        if (header.size() != 3)
            throw ParseError("line " + std::to_string(row_lines.front()) + ": header must be 'r n m'");
        auto r = header[0], n = header[1], m = header[2];
        if (r < 1 || n < 0 || m < 0)
            throw ParseError("line " + std::to_string(row_lines.front()) + ": header values out of range");
        if (static_cast<long long>(rows.size()) - 1 != m)
            throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(rows.size() - 1));

        std::vector<std::vector<Vertex>> edges;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (static_cast<long long>(rows[i].size()) != r)
                throw ParseError("line " + std::to_string(row_lines[i]) + ": expected " + std::to_string(r) + " vertex ids");
            std::vector<Vertex> e;
            for (auto v : rows[i]) {
                if (v < 0 || v >= n)
                    throw BuildError(BuildErrorKind::VertexOutOfRange, "line " + std::to_string(row_lines[i]) + ": vertex " + std::to_string(v) + " not in [0," + std::to_string(n) + ")");
                e.push_back(static_cast<Vertex>(v));
            }
            edges.push_back(std::move(e));
        }
        return Hypergraph::build(static_cast<int>(r), static_cast<int>(n), edges);
    }

    auto read_hypergraph(std::istream & in) -> Hypergraph
    {
        std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        return parse_hypergraph(text);
    }

    auto to_text(const Hypergraph & g) -> std::string
    {
        std::ostringstream out;
        out << g.uniformity() << ' ' << g.vertex_count() << ' ' << g.size() << '\n';
        for (EdgeIndex i = 0; i < g.size(); ++i) {
            bool first = true;
            for (auto v : g.edge(i)) {
                out << (first ? "" : " ") << v;
                first = false;
            }
            out << '\n';
        }
        return out.str();
    }
}
