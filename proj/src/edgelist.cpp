#include "keygraph/edgelist.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "keygraph/errors.hpp"

namespace keygraph {
namespace {

// Parses an unsigned decimal field, consuming leading spaces.
bool parse_field(std::string_view& rest, std::uint64_t& value) {
    std::size_t i = 0;
    while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t')) ++i;
    rest.remove_prefix(i);
    const auto* begin = rest.data();
    const auto* end = rest.data() + rest.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) return false;
    rest.remove_prefix(static_cast<std::size_t>(ptr - begin));
    return true;
}

bool line_exhausted(std::string_view rest) {
    for (char c : rest) {
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw ParseError("missing header line", 1);
    ++line_no;
    std::string_view rest(line);
    std::uint64_t n = 0, m = 0;
    if (!parse_field(rest, n) || !parse_field(rest, m) || !line_exhausted(rest))
        throw ParseError("expected header \"n m\"", line_no);
    if (n == 0) throw ParseError("node count must be positive", line_no);
    if (n > 0xffffffffULL) throw ParseError("node count too large", line_no);

    GraphBuilder builder(static_cast<std::uint32_t>(n));
    std::size_t expected_edges = 0;
    std::uint64_t prev_packed = 0;
    bool have_prev = false;
    while (std::getline(in, line)) {
        ++line_no;
        rest = line;
        if (line_exhausted(rest)) continue;  // tolerate trailing blank lines
        std::uint64_t i = 0, j = 0;
        if (!parse_field(rest, i) || !parse_field(rest, j) || !line_exhausted(rest))
            throw ParseError("expected edge \"i j\"", line_no);
        if (i >= j) throw ParseError("edge endpoints must satisfy i < j", line_no);
        if (j >= n) throw ParseError("node index out of range", line_no);
        const std::uint64_t packed = (i << 32) | j;
        if (have_prev && packed == prev_packed) throw ParseError("duplicate edge", line_no);
        prev_packed = packed;
        have_prev = true;
        builder.add_edge(static_cast<Graph::Node>(i), static_cast<Graph::Node>(j));
        ++expected_edges;
    }
    if (expected_edges != m)
        throw ParseError("header announced " + std::to_string(m) + " edges, file has " +
                             std::to_string(expected_edges),
                         line_no + 1);
    Graph g = std::move(builder).build();
    if (g.edge_count() != expected_edges) throw ParseError("duplicate edge", line_no);
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    g.for_each_edge([&](Graph::Node u, Graph::Node v) { out << u << ' ' << v << '\n'; });
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_edge_list(g, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace keygraph
