#include <string>
#include <vector>

#include "pg/pg_search.hpp"

namespace pg {

// G_n for n = 5k + 3l (0 <= l <= 4, k >= 1): an n-gon x_0..x_{n-1} wrapped
// by a ring of pentagons (x, y, z layers), an outer ring of u-vertices with
// every u_{5j} (j < k) removed, and a hub v.  The hub is adjacent to
// z_{5j}, u_{5j +- 1} for each removed slot and to u_{5(k-1)+3j+1} for
// j = 1..l.  The pentagons around the hub run u_{5j+1}..u_{5j+4} and
// u_{i}..u_{i+3} for i = 5(k-1)+3j+1; the 3-step family shares its first
// member with the 5-step family at j = 0.  All indices mod n.
PlaneGraph construct_gn(int n) {
    if (n < 13) throw ConstructionInvalid("construction requires n >= 13");
    auto [k, l] = decompose_5k3l(n);
    if (k < 1) throw ConstructionInvalid("decomposition has k = 0");

    auto in_u_removed = [&](int i) { return i % 5 == 0 && i / 5 < k; };
    auto mod = [&](int i) { return ((i % n) + n) % n; };

    // vertex ids
    auto X = [&](int i) { return mod(i); };
    auto Y = [&](int i) { return n + mod(i); };
    auto Z = [&](int i) { return 2 * n + mod(i); };
    std::vector<int> u_id(n, -1);
    int next = 3 * n;
    for (int i = 0; i < n; ++i)
        if (!in_u_removed(i)) u_id[i] = next++;
    const int hub = next++;
    const int V = next;
    if (V != 4 * n - k + 1) throw ConstructionInvalid("vertex count mismatch");

    auto U = [&](int i) {
        int id = u_id[mod(i)];
        if (id < 0) throw ConstructionInvalid("removed u-vertex referenced");
        return id;
    };

    std::vector<std::vector<VertexId>> faces;
    {
        std::vector<VertexId> ngon(n);
        for (int i = 0; i < n; ++i) ngon[i] = X(i);
        faces.push_back(std::move(ngon));
    }
    for (int i = 0; i < n; ++i) faces.push_back({Z(i), Y(i), X(i), X(i + 1), Y(i + 1)});
    for (int i = 0; i < n; ++i) {
        VertexId a = in_u_removed(i) ? hub : U(i);
        VertexId b = in_u_removed(mod(i + 1)) ? hub : U(i + 1);
        faces.push_back({a, Z(i), Y(i + 1), Z(i + 1), b});
    }
    for (int j = 0; j < k; ++j)
        faces.push_back({hub, U(5 * j + 1), U(5 * j + 2), U(5 * j + 3), U(5 * j + 4)});
    for (int j = 1; j <= l; ++j) {
        int i = 5 * (k - 1) + 3 * j + 1;
        faces.push_back({hub, U(i), U(i + 1), U(i + 2), U(i + 3)});
    }

    PlaneGraph g = [&] {
        try {
            return plane_graph_from_faces(V, faces);
        } catch (const GraphError& e) {
            throw ConstructionInvalid(std::string("face gluing failed: ") + e.what());
        }
    }();

    if (g.edge_count() != 6 * n + l)
        throw ConstructionInvalid("edge count " + std::to_string(g.edge_count()) +
                                  " != " + std::to_string(6 * n + l));
    if (g.face_count() != 2 * n + k + l + 1)
        throw ConstructionInvalid("face count " + std::to_string(g.face_count()) +
                                  " != " + std::to_string(2 * n + k + l + 1));
    int ngons = 0;
    for (const auto& f : g.faces()) {
        if (static_cast<int>(f.size()) == n)
            ++ngons;
        else if (f.size() != 5)
            throw ConstructionInvalid("face of size " + std::to_string(f.size()));
    }
    if (ngons != 1) throw ConstructionInvalid("expected exactly one n-gon face");
    if (!is_three_connected(g)) throw ConstructionInvalid("not 3-connected");
    return g;
}

} // namespace pg
