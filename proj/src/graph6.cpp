#include "treespec/graph6.hpp"

#include <sstream>

#include "treespec/error.hpp"

namespace treespec {

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw Error(ErrorKind::MalformedGraph6, "empty string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw Error(ErrorKind::MalformedGraph6, "character out of range 63..126");
    if (text[0] == 126) throw Error(ErrorKind::OrderTooLarge, "long-form graph6 not supported");
    int n = text[0] - 63;
    if (n == 0) throw Error(ErrorKind::MalformedGraph6, "order 0 not supported");

    const int bit_count = n * (n - 1) / 2;
    const size_t body_len = static_cast<size_t>((bit_count + 5) / 6);
    if (text.size() != 1 + body_len) throw Error(ErrorKind::MalformedGraph6, "bad length");

    std::vector<std::pair<int, int>> pairs;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int chunk = text[1 + static_cast<size_t>(bit) / 6] - 63;
            if ((chunk >> (5 - bit % 6)) & 1) pairs.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    for (int b = bit_count; b < static_cast<int>(body_len) * 6; ++b) {
        int chunk = text[1 + static_cast<size_t>(b) / 6] - 63;
        if ((chunk >> (5 - b % 6)) & 1)
            throw Error(ErrorKind::MalformedGraph6, "nonzero padding bits");
    }
    return Graph::from_edge_list(n, pairs);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw Error(ErrorKind::InvalidOrder, "cannot serialize the empty graph");
    if (n > 62) throw Error(ErrorKind::OrderTooLarge, "short-form graph6 is limited to n <= 62");
    std::string out(1 + static_cast<size_t>((n * (n - 1) / 2 + 5) / 6), 63);
    out[0] = static_cast<char>(n + 63);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j))
                out[1 + static_cast<size_t>(bit) / 6] += static_cast<char>(1 << (5 - bit % 6));
        }
    }
    return out;
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace treespec
