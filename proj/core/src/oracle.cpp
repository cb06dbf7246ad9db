#include "pg/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <set>

#include "pg/canonical.hpp"

namespace pg {

namespace {

// Searches for a set of 2v-4 triangles covering every edge exactly twice
// that glues into a sphere.  Succeeds exactly when the graph is a planar
// triangulation; pinched or unorientable gluings are rejected by the
// face-to-rotation reconstruction and the search continues.
struct EmbedSearch {
    int v = 0;
    std::vector<Edge> edges;
    std::vector<std::array<int, 3>> tris;
    std::vector<std::array<int, 3>> tri_edges;
    std::vector<std::vector<int>> tris_of_edge;
    std::vector<int> demand;
    std::vector<std::array<int, 3>> chosen;
    std::optional<PlaneGraph> result;

    void search() {
        if (result) return;
        int e = -1;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            if (demand[i] > 0) {
                e = i;
                break;
            }
        if (e < 0) {
            std::vector<std::vector<VertexId>> cycles;
            cycles.reserve(chosen.size());
            for (const auto& t : chosen) cycles.push_back({t[0], t[1], t[2]});
            try {
                PlaneGraph g = plane_graph_from_faces(v, cycles);
                if (is_triangulation(g)) result = std::move(g);
            } catch (const GraphError&) {
            }
            return;
        }
        for (int t : tris_of_edge[e]) {
            const auto& te = tri_edges[t];
            if (demand[te[0]] == 0 || demand[te[1]] == 0 || demand[te[2]] == 0) continue;
            for (int q = 0; q < 3; ++q) --demand[te[q]];
            chosen.push_back(tris[t]);
            search();
            chosen.pop_back();
            for (int q = 0; q < 3; ++q) ++demand[te[q]];
            if (result) return;
        }
    }
};

std::optional<PlaneGraph> embed_triangulation(int v, const std::vector<uint32_t>& adj) {
    EmbedSearch es;
    es.v = v;
    std::vector<std::vector<int>> ids(v, std::vector<int>(v, -1));
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if ((adj[a] >> b) & 1u) {
                ids[a][b] = ids[b][a] = static_cast<int>(es.edges.size());
                es.edges.push_back({a, b});
            }
    es.demand.assign(es.edges.size(), 2);
    es.tris_of_edge.assign(es.edges.size(), {});
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) {
            if (!((adj[a] >> b) & 1u)) continue;
            uint32_t common = adj[a] & adj[b];
            while (common) {
                int c = std::countr_zero(common);
                common &= common - 1;
                if (c <= b) continue;
                int t = static_cast<int>(es.tris.size());
                es.tris.push_back({a, b, c});
                es.tri_edges.push_back({ids[a][b], ids[a][c], ids[b][c]});
                es.tris_of_edge[ids[a][b]].push_back(t);
                es.tris_of_edge[ids[a][c]].push_back(t);
                es.tris_of_edge[ids[b][c]].push_back(t);
            }
        }
    es.search();
    return es.result;
}

// Brute force over adjacency matrices with E = 3v-6.  Rooted so vertex 0
// has maximum degree d0 with neighbors 1..d0; every later vertex keeps an
// earlier neighbor (a BFS labeling of any target satisfies both).  Prefix
// subgraphs of planar graphs obey E <= 3k-6, which prunes hard.
struct GraphSearch {
    int v = 0, target = 0, d0 = 0;
    std::vector<uint32_t> adj;
    std::vector<int> deg;
    std::vector<int> rest_after; // max edges vertices > j can still add
    int edge_count = 0;
    std::set<std::vector<uint8_t>> seen;
    std::vector<PlaneGraph> out;

    void candidate() {
        for (int i = 0; i < v; ++i)
            if (deg[i] < 3) return;
        if (deg[0] != d0) return;
        auto g = embed_triangulation(v, adj);
        if (!g) return;
        CanonicalCode code = canonical_code(*g);
        if (seen.insert(code.bytes).second) out.push_back(std::move(*g));
    }

    void place(int j) {
        if (j == v) {
            if (edge_count == target) candidate();
            return;
        }
        choose(j, 1);
    }

    void choose(int j, int from) {
        const bool has_earlier = j <= d0 || adj[j] != 0;
        if (has_earlier && edge_count <= 3 * (j + 1) - 6 &&
            edge_count + rest_after[j] >= target && edge_count <= target)
            place(j + 1);
        if (deg[j] >= d0) return;
        for (int i = from; i < j; ++i) {
            if (deg[i] >= d0) continue;
            adj[j] |= 1u << i;
            adj[i] |= 1u << j;
            ++deg[i];
            ++deg[j];
            ++edge_count;
            choose(j, i + 1);
            --edge_count;
            --deg[j];
            --deg[i];
            adj[j] &= ~(1u << i);
            adj[i] &= ~(1u << j);
        }
    }

    void run() {
        for (d0 = v - 1; d0 >= 3; --d0) {
            adj.assign(v, 0);
            deg.assign(v, 0);
            edge_count = 0;
            for (int j = 1; j <= d0; ++j) {
                adj[0] |= 1u << j;
                adj[j] |= 1u << 0;
                ++deg[0];
                ++deg[j];
                ++edge_count;
            }
            // rest_after[j] = sum over t in (j, v) of min(t-1, d0): edges
            // vertices after j can still add among 1..t-1
            rest_after.assign(v + 1, 0);
            for (int j = v - 2; j >= 0; --j)
                rest_after[j] = rest_after[j + 1] + std::min(j, d0);
            place(1);
        }
    }
};

} // namespace

std::vector<PlaneGraph> oracle_enumerate(int v) {
    if (v < 4 || v > 10) throw GraphError("oracle supports 4 <= v <= 10");
    GraphSearch gs;
    gs.v = v;
    gs.target = 3 * v - 6;
    gs.run();
    std::vector<std::pair<CanonicalCode, PlaneGraph>> sorted;
    sorted.reserve(gs.out.size());
    for (auto& g : gs.out) sorted.push_back({canonical_code(g), std::move(g)});
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<PlaneGraph> result;
    result.reserve(sorted.size());
    for (auto& [c, g] : sorted) result.push_back(std::move(g));
    return result;
}

} // namespace pg
