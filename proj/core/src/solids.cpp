#include "pg/solids.hpp"

namespace pg {

PlaneGraph tetrahedron() {
    return PlaneGraph::from_rotations({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

PlaneGraph icosahedron() {
    // apex 0, upper ring 1..5, lower ring 6..10, apex 11
    std::vector<std::vector<VertexId>> faces;
    auto up = [](int i) { return 1 + i % 5; };
    auto lo = [](int i) { return 6 + i % 5; };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, up(i), up(i + 1)});
        faces.push_back({up(i), lo(i), up(i + 1)});
        faces.push_back({lo(i), lo(i + 1), up(i + 1)});
        faces.push_back({lo(i), 11, lo(i + 1)});
    }
    return plane_graph_from_faces(12, faces);
}

PlaneGraph dodecahedron() { return dual(icosahedron()); }

PlaneGraph cycle_graph(int n) {
    std::vector<std::vector<VertexId>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return PlaneGraph::from_rotations(std::move(rot));
}

} // namespace pg
