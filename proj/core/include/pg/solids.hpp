#pragma once

#include "pg/plane_graph.hpp"

namespace pg {

PlaneGraph tetrahedron();
PlaneGraph icosahedron();
PlaneGraph dodecahedron();

/// n-cycle as a plane graph (two faces).
PlaneGraph cycle_graph(int n);

} // namespace pg
