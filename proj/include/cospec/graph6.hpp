#pragma once

#include <string>

#include "cospec/graph.hpp"

namespace cospec {

/// graph6 text encoding: size header, then the upper triangle
/// x(0,1),x(0,2),x(1,2),x(0,3),... packed 6 bits per byte, most significant
/// bit first, zero padded, every byte offset by 63. Orders 63..64 use the
/// long header '~' followed by three 6-bit digits.
inline std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

class graph6_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Graph graph6_decode(const std::string& s) {
    if (s.empty()) throw graph6_error("graph6: empty string");
    std::size_t pos = 0;
    long n;
    unsigned char c0 = static_cast<unsigned char>(s[0]);
    if (c0 == 126) {
        if (s.size() < 4) throw graph6_error("graph6: truncated size header");
        if (static_cast<unsigned char>(s[1]) == 126)
            throw graph6_error("graph6: unsupported size (too large)");
        n = 0;
        for (int k = 1; k <= 3; ++k) {
            unsigned char c = static_cast<unsigned char>(s[k]);
            if (c < 63 || c > 126) throw graph6_error("graph6: bad size byte");
            n = (n << 6) | (c - 63);
        }
        pos = 4;
    } else {
        if (c0 < 63 || c0 > 125) throw graph6_error("graph6: bad size byte");
        n = c0 - 63;
        pos = 1;
    }
    if (n < 1 || n > Graph::max_vertices)
        throw graph6_error("graph6: unsupported size " + std::to_string(n));
    long nbits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != nbytes)
        throw graph6_error("graph6: wrong length (expected " +
                           std::to_string(pos + nbytes) + " bytes, got " +
                           std::to_string(s.size()) + ")");
    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char c = static_cast<unsigned char>(s[pos + bit / 6]);
            if (c < 63 || c > 126) throw graph6_error("graph6: byte out of range");
            if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    return g;
}

/// DOT export for rendering: plain undirected edges, ids 0..n-1, no attributes.
inline std::string to_dot(const Graph& g) {
    std::string out = "graph g {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(i, j))
                out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

} // namespace cospec
