#pragma once

#include <alphaspec/errors.hpp>
#include <alphaspec/graph.hpp>

#include <string>
#include <string_view>

namespace alphaspec {

// Short-form graph6: one size byte (n + 63), then the upper triangle in
// column-major order packed six bits per byte, each byte offset by 63.

inline std::string graph6_encode(const Graph& g)
{
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));

    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

inline Graph graph6_decode(std::string_view bytes)
{
    constexpr std::string_view header = ">>graph6<<";
    std::size_t pos = 0;
    if (bytes.substr(0, header.size()) == header)
        pos = header.size();
    while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r'))
        bytes.remove_suffix(1);

    if (pos >= bytes.size())
        throw DecodeError("empty graph6 string", pos);
    const int size_byte = static_cast<unsigned char>(bytes[pos]);
    if (size_byte == 126)
        throw DecodeError("long-form graph6 (n > 62) is not supported", pos);
    if (size_byte < 64 || size_byte > 125)
        throw DecodeError("invalid size byte " + std::to_string(size_byte), pos);
    const int n = size_byte - 63;
    ++pos;

    const int bits = pair_count(n);
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (bytes.size() - pos != body)
        throw DecodeError("expected " + std::to_string(body) + " data bytes for n = " + std::to_string(n) + ", found " +
                              std::to_string(bytes.size() - pos),
                          bytes.size() < pos + body ? bytes.size() : pos + body);

    Graph g(n);
    int i = 0;
    int j = 1;
    int consumed = 0;
    for (std::size_t b = 0; b < body; ++b) {
        const int value = static_cast<unsigned char>(bytes[pos + b]) - 63;
        if (value < 0 || value > 63)
            throw DecodeError("byte outside the printable graph6 range", pos + b);
        for (int shift = 5; shift >= 0; --shift) {
            const bool bit = (value >> shift) & 1;
            if (consumed < bits) {
                if (bit)
                    g.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
                ++consumed;
            } else if (bit) {
                throw DecodeError("nonzero padding bit", pos + b);
            }
        }
    }
    return g;
}

} // namespace alphaspec
