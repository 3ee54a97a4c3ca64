#pragma once

#include <string>

#include "satlab/graph.hpp"

namespace satlab {

/// Canonical byte string: equal strings iff isomorphic graphs. Intended for
/// the enumeration range (n <= ~16); cost grows quickly beyond that.
std::string canonical_form(const Graph& g);

/// Canonically relabeled copy of g (canonical_form(canonical_graph(g)) ==
/// canonical_form(g), and equal canonical graphs iff isomorphic).
Graph canonical_graph(const Graph& g);

}  // namespace satlab
