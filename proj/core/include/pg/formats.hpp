#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pg/plane_graph.hpp"

namespace pg {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

/// planar_code byte stream: optional ASCII header, then per graph one
/// vertex-count byte N followed by N zero-terminated lists of 1-based
/// neighbors in embedding order.  Throws TruncatedStream, BadHeader,
/// NeighborOutOfRange, AsymmetricAdjacency.
std::vector<PlaneGraph> parse_planar_code(std::span<const uint8_t> bytes);
std::vector<uint8_t> write_planar_code(std::span<const PlaneGraph> graphs, bool header = false);

/// Comma-separated per-vertex adjacency lists over letters a, b, c, ...
/// terminated by ';' or '.', with an optional leading vertex count.  For
/// more than 26 vertices a numeric variant "1:2,3,4;2:..." is used.
PlaneGraph parse_ascii_adjacency(std::string_view text);
std::string write_ascii_adjacency(const PlaneGraph& g);

} // namespace pg
