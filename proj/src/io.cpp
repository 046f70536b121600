#include "amoeba/io.hpp"

#include <sstream>

#include "amoeba/errors.hpp"

namespace amoeba {

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw CapError("graph6 writer supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bit = 5;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(i, j)) cur |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

Graph from_graph6(const std::string& text) {
    // trim surrounding whitespace and the optional ">>graph6<<" header
    size_t begin = text.find_first_not_of(" \t\r\n");
    size_t end = text.find_last_not_of(" \t\r\n");
    if (begin == std::string::npos) throw ParseError("empty graph6 string");
    std::string s = text.substr(begin, end - begin + 1);
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw ParseError("empty graph6 string");
    for (char c : s) {
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
    }
    if (s[0] == 126) throw ParseError("graph6 reader supports at most 62 vertices");
    int n = s[0] - 63;
    if (n < 1) throw ParseError("graph6 order must be positive");
    size_t expected = 1 + (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() != expected) throw ParseError("graph6 string has wrong length");
    std::vector<Edge> edges;
    size_t pos = 1;
    int bit = 5;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if ((s[pos] - 63) >> bit & 1) edges.emplace_back(i, j);
            if (--bit < 0) {
                ++pos;
                bit = 5;
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

Graph from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list must start with \"n m\"");
    if (n < 1 || m < 0) throw ParseError("invalid edge list header");
    std::vector<Edge> pairs;
    pairs.reserve(m);
    for (int k = 0; k < m; ++k) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("edge list ended early");
        pairs.emplace_back(u, v);
    }
    try {
        return Graph::from_edge_list_1based(n, pairs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace amoeba
