#pragma once

// graph6 codec, short form only (order < 63).
//
// Record layout: header byte 63+n, then ceil(n(n-1)/2 / 6) body bytes.
// Each body byte is 63 + a 6-bit group (most significant bit first);
// bits run column-wise over the upper triangle x(0,1), x(0,2), x(1,2),
// x(0,3), ...; the last group is zero-padded. Records are newline-separated.

#include <string>
#include <string_view>
#include <vector>

#include "eulergraph/graph.hpp"

namespace eg {

inline Graph parse_graph6(std::string_view line) {
    // tolerate the optional ">>graph6<<" prefix and trailing CR
    constexpr std::string_view prefix = ">>graph6<<";
    if (line.substr(0, prefix.size()) == prefix) line.remove_prefix(prefix.size());
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);

    if (line.empty()) fail(Errc::MalformedHeader, "empty record");
    unsigned char h = static_cast<unsigned char>(line[0]);
    if (h == 126) fail(Errc::MalformedHeader, "long-form order not supported");
    if (h < 63 || h > 125) fail(Errc::MalformedHeader, "header byte " + std::to_string(h));
    int n = h - 63;
    if (n == 0) fail(Errc::MalformedHeader, "order 0");

    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (line.size() - 1 < nbytes) fail(Errc::TruncatedBits, "expected " + std::to_string(nbytes) + " body bytes");
    if (line.size() - 1 > nbytes) fail(Errc::MalformedHeader, "trailing bytes after record");

    std::vector<Edge> edges;
    size_t bit = 0;
    unsigned group = 0;
    int have = 0;
    size_t pos = 1;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (have == 0) {
                unsigned char b = static_cast<unsigned char>(line[pos++]);
                if (b < 63 || b > 126) fail(Errc::MalformedHeader, "body byte " + std::to_string(b));
                group = b - 63;
                have = 6;
            }
            if (group & (1u << (have - 1))) edges.emplace_back(u, v);
            --have;
        }
    }
    if (have > 0 && (group & ((1u << have) - 1)) != 0)
        fail(Errc::MalformedHeader, "nonzero padding bits");
    return Graph::build(n, std::move(edges));
}

inline std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n >= 63) fail(Errc::OrderTooLarge, "order " + std::to_string(n) + " exceeds short-form limit 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    unsigned group = 0;
    int have = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1u : 0u);
            if (++have == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>(63 + (group << (6 - have))));
    return out;
}

// Reads newline-separated graph6 records; blank lines are skipped.
// Returns false at end of stream.
inline bool read_graph6_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) return true;
    }
    return false;
}

} // namespace eg
