#pragma once

#include <stdexcept>
#include <string>

#include "satlab/graph.hpp"

namespace satlab {

/// Standard graph6 text encoding (6-bit groups, offset 63).
std::string graph6_encode(const Graph& g);

/// Decodes graph6 or sparse6 (':' prefix) input; optional ">>graph6<<" /
/// ">>sparse6<<" headers and trailing whitespace are tolerated.
/// Throws Graph6ParseError with the offending byte offset.
Graph graph6_decode(const std::string& text);

struct Graph6ParseError : std::runtime_error {
    size_t offset;
    Graph6ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

}  // namespace satlab
