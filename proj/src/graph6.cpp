#include "crlab/errors.hpp"
#include "crlab/graph.hpp"

#include <fstream>

namespace crlab {

namespace {

constexpr int kOffset = 63;

bool in_range(char c) { return c >= 63 && c <= 126; }

} // namespace

Graph parse_graph6(const std::string& text) {
    size_t pos = 0;
    auto byte = [&](size_t i) -> int {
        if (i >= text.size()) throw MalformedEncoding("graph6: truncated input");
        char c = text[i];
        if (!in_range(c)) throw MalformedEncoding("graph6: byte out of range");
        return c - kOffset;
    };

    long long n;
    if (text.empty()) throw MalformedEncoding("graph6: empty input");
    if (text[0] != '~') {
        n = byte(0);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw MalformedEncoding("graph6: 8-byte order form not supported");
        n = ((long long)byte(1) << 12) | ((long long)byte(2) << 6) | byte(3);
        pos = 4;
    }
    long long bits = n * (n - 1) / 2;
    size_t body = (size_t)((bits + 5) / 6);
    if (text.size() != pos + body)
        throw MalformedEncoding("graph6: wrong length for order " + std::to_string(n));

    Graph g((int)n);
    long long bit = 0, row = 0, col = 1;
    for (size_t i = 0; i < body; ++i) {
        int b = byte(pos + i);
        for (int s = 5; s >= 0 && bit < bits; --s, ++bit) {
            if ((b >> s) & 1) g.add_edge((int)row, (int)col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back((char)(n + kOffset));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back((char)(((n >> 12) & 0x3f) + kOffset));
        out.push_back((char)(((n >> 6) & 0x3f) + kOffset));
        out.push_back((char)((n & 0x3f) + kOffset));
    } else {
        throw TooLarge("graph6: order above 258047 not supported");
    }
    long long bits = n * (n - 1) / 2;
    int acc = 0, filled = 0;
    for (long long j = 1; j < n; ++j) {
        for (long long i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge((int)i, (int)j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back((char)(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (bits % 6 != 0) {
        acc <<= (6 - bits % 6);
        out.push_back((char)(acc + kOffset));
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedEncoding("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace crlab
