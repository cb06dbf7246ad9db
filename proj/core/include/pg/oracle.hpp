#pragma once

#include <vector>

#include "pg/plane_graph.hpp"

namespace pg {

/// Independent correctness oracle: every isomorphism class of 3-connected
/// plane triangulations on v vertices (4 <= v <= 10), found by brute force
/// over adjacency matrices with E = 3v - 6 followed by a combinatorial
/// embedding search (a set of 2v - 4 triangles covering each edge twice
/// that glues into a sphere).  Structurally unrelated to the splitting
/// generator; test-only scale.
std::vector<PlaneGraph> oracle_enumerate(int v);

} // namespace pg
