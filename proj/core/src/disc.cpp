#include "pg/disc.hpp"

#include <algorithm>

namespace pg {

namespace {

constexpr int MAXN = 32;

// Region-filling recursion.  The stack holds the boundaries of the unfilled
// regions; one branch fills the face at the first edge of the top region,
// with the apex either a fresh interior vertex or another region vertex.
// Interior labels follow creation order, so every disc with labeled
// boundary is produced exactly once.
struct DiscSearch {
    DiscClient& client;
    int m;
    int n_now;
    int interior_left;
    uint32_t adj[MAXN] = {};
    int deg[MAXN] = {};
    int open_cnt[MAXN] = {};
    std::vector<std::array<int, 3>> faces;
    std::vector<std::vector<int>> polys;

    DiscSearch(DiscClient& c, int boundary_len, int interior_exact)
        : client(c), m(boundary_len), n_now(boundary_len), interior_left(interior_exact) {
        std::vector<int> boundary(m);
        for (int i = 0; i < m; ++i) {
            boundary[i] = i;
            open_cnt[i] = 1;
            deg[i] = 2;
            int a = (i + 1) % m;
            adj[i] |= 1u << a;
            adj[a] |= 1u << i;
        }
        polys.push_back(std::move(boundary));
    }

    bool is_boundary(int v) const { return v < m; }
    int cap(int v) const {
        return is_boundary(v) ? client.boundary_open_cap() : client.interior_open_cap();
    }

    void add_edge(int a, int b) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
        ++deg[a];
        ++deg[b];
    }
    void del_edge(int a, int b) {
        adj[a] &= ~(1u << b);
        adj[b] &= ~(1u << a);
        --deg[a];
        --deg[b];
    }

    // One branch: the current face consumed old_poly and produced `pushed`
    // replacement regions.  Updates open counts, runs closures, recurses.
    void apply_branch(const std::vector<int>& old_poly,
                      std::vector<std::vector<int>> pushed) {
        for (int v : old_poly) --open_cnt[v];
        for (const auto& p : pushed)
            for (int v : p) ++open_cnt[v];

        std::vector<int> closed;
        for (int v : old_poly)
            if (open_cnt[v] == 0) closed.push_back(v);

        bool vetoed = false;
        size_t done = 0;
        for (; done < closed.size(); ++done) {
            int v = closed[done];
            bool ok = is_boundary(v) ? client.close_boundary(v, deg[v])
                                     : client.close_interior(deg[v]);
            if (!ok) {
                vetoed = true;
                break;
            }
        }
        if (!vetoed) {
            const size_t base = polys.size();
            for (const auto& p : pushed) polys.push_back(p);
            rec();
            polys.resize(base);
            done = closed.size();
        }
        while (done > 0) {
            int v = closed[--done];
            if (is_boundary(v))
                client.undo_close_boundary(v, deg[v]);
            else
                client.undo_close_interior(deg[v]);
        }
        for (const auto& p : pushed)
            for (int v : p) --open_cnt[v];
        for (int v : old_poly) ++open_cnt[v];
    }

    void rec() {
        client.on_node();
        if (polys.empty()) {
            if (interior_left == 0) client.emit(n_now, faces);
            return;
        }
        std::vector<int> poly = std::move(polys.back());
        polys.pop_back();
        const int L = static_cast<int>(poly.size());
        const int p0 = poly[0], p1 = poly[1];

        // (A) fresh interior apex
        if (interior_left > 0 && n_now < MAXN) {
            const int w = n_now;
            add_edge(p0, w);
            add_edge(p1, w);
            if (deg[p0] <= cap(p0) && deg[p1] <= cap(p1)) {
                ++n_now;
                --interior_left;
                faces.push_back({p0, p1, w});
                std::vector<int> np;
                np.reserve(L + 1);
                np.push_back(w);
                for (int t = 1; t < L; ++t) np.push_back(poly[t]);
                np.push_back(p0);
                apply_branch(poly, {std::move(np)});
                faces.pop_back();
                ++interior_left;
                --n_now;
            }
            del_edge(p0, w);
            del_edge(p1, w);
        }

        // (B) apex on the region boundary
        for (int t = 2; t < L; ++t) {
            const int pt = poly[t];
            const bool e0 = (t != L - 1); // chord p0-pt needed
            const bool e1 = (t != 2);     // chord p1-pt needed
            if (e0 && ((adj[p0] >> pt) & 1u)) continue;
            if (e1 && ((adj[p1] >> pt) & 1u)) continue;
            if (e0) add_edge(p0, pt);
            if (e1) add_edge(p1, pt);
            if (deg[p0] <= cap(p0) && deg[p1] <= cap(p1) && deg[pt] <= cap(pt)) {
                faces.push_back({p0, p1, pt});
                std::vector<std::vector<int>> pushed;
                if (t <= L - 2) { // [pt, .., p_{L-1}, p0]
                    std::vector<int> B;
                    B.reserve(L - t + 1);
                    for (int q = t; q < L; ++q) B.push_back(poly[q]);
                    B.push_back(p0);
                    pushed.push_back(std::move(B));
                }
                if (t >= 3) { // [p1, .., pt]
                    pushed.emplace_back(poly.begin() + 1, poly.begin() + t + 1);
                }
                apply_branch(poly, std::move(pushed));
                faces.pop_back();
            }
            if (e0) del_edge(p0, pt);
            if (e1) del_edge(p1, pt);
        }

        polys.push_back(std::move(poly));
    }
};

} // namespace

void enumerate_discs(int boundary_len, int interior_exact, DiscClient& client) {
    if (boundary_len < 3) throw GraphError("disc boundary must have length >= 3");
    if (boundary_len + interior_exact > MAXN)
        throw GraphError("disc exceeds engine vertex capacity");
    DiscSearch search(client, boundary_len, interior_exact);
    search.rec();
}

PlaneGraph disc_to_plane_graph(int boundary_len, int vertex_count,
                               const std::vector<std::array<int, 3>>& faces, int* outer_face) {
    std::vector<std::vector<VertexId>> all;
    all.reserve(faces.size() + 1);
    for (const auto& f : faces) all.push_back({f[0], f[1], f[2]});
    std::vector<VertexId> outer(boundary_len);
    for (int i = 0; i < boundary_len; ++i) outer[i] = i;
    all.push_back(outer);
    PlaneGraph g = plane_graph_from_faces(vertex_count, all);
    if (outer_face) {
        *outer_face = -1;
        std::vector<VertexId> bs = outer;
        std::sort(bs.begin(), bs.end());
        for (int f = 0; f < g.face_count(); ++f) {
            if (static_cast<int>(g.faces()[f].size()) != boundary_len) continue;
            std::vector<VertexId> fs = g.faces()[f];
            std::sort(fs.begin(), fs.end());
            if (fs == bs) {
                *outer_face = f;
                break;
            }
        }
    }
    return g;
}

} // namespace pg
