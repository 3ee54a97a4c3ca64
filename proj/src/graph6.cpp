#include "satlab/graph6.hpp"

#include <stdexcept>

namespace satlab {

namespace {

void append_n(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

struct BitReader {
    const std::string& s;
    size_t pos;       // byte position
    int bit = 0;      // bits consumed within current byte (6 per byte)
    BitReader(const std::string& str, size_t p) : s(str), pos(p) {}

    bool exhausted() const { return pos >= s.size(); }
    int bits_left() const {
        if (exhausted()) return 0;
        return static_cast<int>((s.size() - pos) * 6) - bit;
    }
    int take(int count) {
        int value = 0;
        for (int i = 0; i < count; ++i) {
            if (exhausted()) throw Graph6ParseError("unexpected end of bit stream", pos);
            int c = static_cast<unsigned char>(s[pos]) - 63;
            if (c < 0 || c > 63) throw Graph6ParseError("invalid graph6 byte", pos);
            value = (value << 1) | ((c >> (5 - bit)) & 1);
            if (++bit == 6) {
                bit = 0;
                ++pos;
            }
        }
        return value;
    }
};

long long read_n(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw Graph6ParseError("empty input", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c != 126) {
        if (c < 63 || c > 125) throw Graph6ParseError("invalid size byte", pos);
        ++pos;
        return c - 63;
    }
    ++pos;
    int groups = 3;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
        ++pos;
        groups = 6;
    }
    long long n = 0;
    for (int i = 0; i < groups; ++i) {
        if (pos >= s.size()) throw Graph6ParseError("truncated size field", pos);
        int d = static_cast<unsigned char>(s[pos]) - 63;
        if (d < 0 || d > 63) throw Graph6ParseError("invalid size byte", pos);
        n = (n << 6) | d;
        ++pos;
    }
    return n;
}

Graph decode_graph6(const std::string& s, size_t pos) {
    long long n = read_n(s, pos);
    if (n > (1 << 20)) throw Graph6ParseError("graph too large", pos);
    BitReader bits(s, pos);
    GraphBuilder b(static_cast<int>(n));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (bits.take(1)) b.add_edge(u, v);
    size_t end = bits.pos + (bits.bit > 0 ? 1 : 0);
    if (end != s.size())
        throw Graph6ParseError("trailing bytes after graph6 data", end);
    return b.build();
}

Graph decode_sparse6(const std::string& s, size_t pos) {
    long long n = read_n(s, pos);
    if (n > (1 << 20)) throw Graph6ParseError("graph too large", pos);
    int k = 1;
    while ((1LL << k) < n) ++k;
    BitReader bits(s, pos);
    GraphBuilder b(static_cast<int>(n));
    long long v = 0;
    while (bits.bits_left() >= 1 + k) {
        int bflag = bits.take(1);
        long long x = bits.take(k);
        if (bflag) ++v;
        if (v >= n || x >= n) break;
        if (x > v)
            v = x;
        else if (x != v)
            b.add_edge(static_cast<int>(x), static_cast<int>(v));
        else
            ;  // loops are not representable in a simple graph; skip
    }
    return b.build();
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    std::string out;
    append_n(out, g.size());
    int acc = 0, nbits = 0;
    for (int v = 1; v < g.size(); ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    size_t pos = 0;
    if (s.rfind(">>graph6<<", 0) == 0) pos = 10;
    if (s.rfind(">>sparse6<<", 0) == 0) pos = 11;
    if (pos >= s.size()) throw Graph6ParseError("empty input", pos);
    if (s[pos] == ':') return decode_sparse6(s, pos + 1);
    return decode_graph6(s, pos);
}

}  // namespace satlab
