#include "pg/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace pg {

namespace {

std::string vtx(VertexId v) { return std::to_string(v); }

} // namespace

PlaneGraph PlaneGraph::from_rotations(std::vector<std::vector<VertexId>> rotations) {
    const int n = static_cast<int>(rotations.size());
    if (n <= 0) throw GraphError("empty vertex set");

    int dart_count = 0;
    for (VertexId v = 0; v < n; ++v) {
        const auto& r = rotations[v];
        if (r.empty()) throw GraphError("vertex " + vtx(v) + " has empty rotation");
        std::set<VertexId> seen;
        for (VertexId w : r) {
            if (w < 0 || w >= n) throw GraphError("neighbor id out of range at vertex " + vtx(v));
            if (w == v) throw LoopOrMultiEdge("loop at vertex " + vtx(v));
            if (!seen.insert(w).second)
                throw LoopOrMultiEdge("repeated neighbor " + vtx(w) + " at vertex " + vtx(v));
        }
        dart_count += static_cast<int>(r.size());
    }

    // Symmetry: u in rot(v) <=> v in rot(u).
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : rotations[v])
            if (std::find(rotations[w].begin(), rotations[w].end(), v) == rotations[w].end())
                throw NonSymmetricAdjacency("dart " + vtx(v) + "->" + vtx(w) + " has no twin");

    PlaneGraph g;
    g.rot_ = std::move(rotations);
    g.edge_count_ = dart_count / 2;

    // Connectivity.
    std::vector<char> vis(n, 0);
    std::vector<VertexId> stack{0};
    vis[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.rot_[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) throw Disconnected("graph is not connected");

    g.trace_faces();

    if (n - g.edge_count_ + g.face_count() != 2)
        throw EulerViolation("V - E + F = " +
                             std::to_string(n - g.edge_count_ + g.face_count()) +
                             ", rotation system is not spherical");
    return g;
}

void PlaneGraph::trace_faces() {
    const int n = vertex_count();
    // dart index: per vertex, position in rotation
    std::vector<int> offset(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) offset[v + 1] = offset[v] + degree(v);
    const int darts = offset[n];
    std::vector<char> used(darts, 0);

    auto dart_id = [&](VertexId u, int pos) { return offset[u] + pos; };

    faces_.clear();
    for (VertexId u0 = 0; u0 < n; ++u0) {
        for (int p0 = 0; p0 < degree(u0); ++p0) {
            if (used[dart_id(u0, p0)]) continue;
            std::vector<VertexId> cycle;
            VertexId u = u0;
            int p = p0;
            do {
                used[dart_id(u, p)] = 1;
                cycle.push_back(u);
                VertexId v = rot_[u][p];
                // twin (v -> u), then next in rotation of v
                int q = rotation_index(v, u);
                int next = (q + 1) % degree(v);
                u = v;
                p = next;
            } while (!(u == u0 && p == p0));
            faces_.push_back(std::move(cycle));
        }
    }
}

int PlaneGraph::rotation_index(VertexId v, VertexId w) const {
    const auto& r = rot_[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == w) return i;
    return -1;
}

bool PlaneGraph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= vertex_count()) return false;
    return rotation_index(u, v) >= 0;
}

std::vector<int> PlaneGraph::face_sizes() const {
    std::vector<int> out;
    out.reserve(faces_.size());
    for (const auto& f : faces_) out.push_back(static_cast<int>(f.size()));
    return out;
}

int PlaneGraph::face_of_dart(VertexId u, VertexId v) const {
    for (int f = 0; f < face_count(); ++f) {
        const auto& c = faces_[f];
        const int m = static_cast<int>(c.size());
        for (int i = 0; i < m; ++i)
            if (c[i] == u && c[(i + 1) % m] == v) return f;
    }
    return -1;
}

std::vector<Edge> PlaneGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId v = 0; v < vertex_count(); ++v)
        for (VertexId w : rot_[v])
            if (v < w) out.push_back({v, w});
    return out;
}

std::vector<int> PlaneGraph::degree_sequence() const {
    std::vector<int> d;
    d.reserve(vertex_count());
    for (VertexId v = 0; v < vertex_count(); ++v) d.push_back(degree(v));
    std::sort(d.rbegin(), d.rend());
    return d;
}

PlaneGraph dual(const PlaneGraph& g) {
    const auto& faces = g.faces();
    const int nf = g.face_count();
    for (const auto& f : faces)
        if (f.size() < 3) throw DualNotSimple("face of size " + std::to_string(f.size()));

    // dart (u,v) -> face id, for loop/multi-edge detection and rotations
    std::map<std::pair<VertexId, VertexId>, int> face_of;
    for (int f = 0; f < nf; ++f) {
        const auto& c = faces[f];
        const int m = static_cast<int>(c.size());
        for (int i = 0; i < m; ++i) face_of[{c[i], c[(i + 1) % m]}] = f;
    }

    std::vector<std::vector<VertexId>> drot(nf);
    std::set<std::pair<int, int>> dual_edges;
    for (int f = 0; f < nf; ++f) {
        const auto& c = faces[f];
        const int m = static_cast<int>(c.size());
        for (int i = 0; i < m; ++i) {
            VertexId u = c[i], v = c[(i + 1) % m];
            int other = face_of.at({v, u});
            if (other == f)
                throw DualNotSimple("bridge: face " + std::to_string(f) +
                                    " on both sides of an edge");
            drot[f].push_back(other);
            auto e = std::minmax(f, other);
            if (v < u) continue; // count each undirected edge once
            if (!dual_edges.insert({e.first, e.second}).second)
                throw DualNotSimple("faces " + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + " share two or more edges");
        }
    }
    return PlaneGraph::from_rotations(std::move(drot));
}

bool is_connected_after_removal(const PlaneGraph& g, std::span<const VertexId> removed) {
    const int n = g.vertex_count();
    std::vector<char> blocked(n, 0);
    for (VertexId v : removed) blocked[v] = 1;
    VertexId start = -1;
    int alive = 0;
    for (VertexId v = 0; v < n; ++v)
        if (!blocked[v]) {
            ++alive;
            start = v;
        }
    if (alive == 0) return false;
    std::vector<char> vis(n, 0);
    std::vector<VertexId> stack{start};
    vis[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.rotation(v))
            if (!blocked[w] && !vis[w]) {
                vis[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == alive;
}

bool is_three_connected(const PlaneGraph& g) {
    const int n = g.vertex_count();
    if (n <= 3) return false;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            VertexId pair[2] = {a, b};
            if (!is_connected_after_removal(g, pair)) return false;
        }
    return true;
}

PlaneGraph remove_edges(const PlaneGraph& g, std::span<const Edge> s) {
    auto rot = g.rotations();
    for (const Edge& e : s) {
        auto [u, v] = e;
        auto& ru = rot[u];
        auto& rv = rot[v];
        auto iu = std::find(ru.begin(), ru.end(), v);
        auto iv = std::find(rv.begin(), rv.end(), u);
        if (iu == ru.end() || iv == rv.end())
            throw EdgeNotPresent("edge " + vtx(u) + "-" + vtx(v));
        ru.erase(iu);
        rv.erase(iv);
    }
    try {
        return PlaneGraph::from_rotations(std::move(rot));
    } catch (const Disconnected&) {
        throw ResultDisconnected("edge removal disconnects the graph");
    } catch (const GraphError& err) {
        // empty rotation = isolated vertex, same verdict
        throw ResultDisconnected(std::string("edge removal leaves invalid graph: ") + err.what());
    }
}

PlaneGraph delete_vertex(const PlaneGraph& g, VertexId v) {
    const int n = g.vertex_count();
    VertexId only[1] = {v};
    if (!is_connected_after_removal(g, only))
        throw ResultDisconnected("deleting vertex " + vtx(v) + " disconnects the graph");
    std::vector<std::vector<VertexId>> rot;
    rot.reserve(n - 1);
    auto newid = [&](VertexId w) { return w < v ? w : w - 1; };
    for (VertexId u = 0; u < n; ++u) {
        if (u == v) continue;
        std::vector<VertexId> r;
        for (VertexId w : g.rotation(u))
            if (w != v) r.push_back(newid(w));
        rot.push_back(std::move(r));
    }
    return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph plane_graph_from_faces(int vertex_count,
                                  const std::vector<std::vector<VertexId>>& face_cycles) {
    const int nf = static_cast<int>(face_cycles.size());
    // Edge -> incident faces (at most two).
    std::map<Edge, std::vector<int>> edge_faces;
    for (int f = 0; f < nf; ++f) {
        const auto& c = face_cycles[f];
        const int m = static_cast<int>(c.size());
        for (int i = 0; i < m; ++i)
            edge_faces[make_edge(c[i], c[(i + 1) % m])].push_back(f);
    }
    for (const auto& [e, fs] : edge_faces)
        if (fs.size() != 2)
            throw GraphError("edge " + vtx(e.first) + "-" + vtx(e.second) + " lies on " +
                             std::to_string(fs.size()) + " faces");

    // Orient faces consistently: each undirected edge must be traversed once
    // in each direction.  BFS over the face adjacency, flipping as needed.
    std::vector<std::vector<VertexId>> oriented = face_cycles;
    std::vector<int> state(nf, 0); // 0 unseen, 1 kept, 2 flipped
    std::vector<int> queue{0};
    state[0] = 1;
    auto face_has_dart = [&](int f, VertexId a, VertexId b) {
        const auto& c = oriented[f];
        const int m = static_cast<int>(c.size());
        for (int i = 0; i < m; ++i)
            if (c[i] == a && c[(i + 1) % m] == b) return true;
        return false;
    };
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int f = queue[qi];
        const auto c = oriented[f];
        const int m = static_cast<int>(c.size());
        for (int i = 0; i < m; ++i) {
            VertexId a = c[i], b = c[(i + 1) % m];
            const auto& fs = edge_faces[make_edge(a, b)];
            int other = fs[0] == f ? fs[1] : fs[0];
            if (other == f) throw GraphError("face on both sides of an edge");
            bool other_needs = face_has_dart(other, a, b); // must carry b->a instead
            if (state[other] == 0) {
                if (other_needs) std::reverse(oriented[other].begin(), oriented[other].end());
                state[other] = other_needs ? 2 : 1;
                queue.push_back(other);
            } else if (face_has_dart(other, a, b)) {
                throw GraphError("face set is not orientable");
            }
        }
    }
    if (static_cast<int>(queue.size()) != nf) throw GraphError("face set is not connected");

    // Chain corners: in face (... a, w, b ...) the rotation successor of a
    // at w is b.
    std::vector<std::map<VertexId, VertexId>> succ(vertex_count);
    for (const auto& c : oriented) {
        const int m = static_cast<int>(c.size());
        for (int i = 0; i < m; ++i) {
            VertexId a = c[i], w = c[(i + 1) % m], b = c[(i + 2) % m];
            if (!succ[w].emplace(a, b).second) throw GraphError("conflicting corners at " + vtx(w));
        }
    }
    std::vector<std::vector<VertexId>> rot(vertex_count);
    for (VertexId v = 0; v < vertex_count; ++v) {
        if (succ[v].empty()) throw GraphError("vertex " + vtx(v) + " on no face");
        VertexId start = succ[v].begin()->first;
        VertexId cur = start;
        do {
            rot[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end()) throw GraphError("broken corner chain at " + vtx(v));
            cur = it->second;
        } while (cur != start && rot[v].size() <= succ[v].size());
        if (rot[v].size() != succ[v].size())
            throw GraphError("rotation at " + vtx(v) + " is not a single cycle");
    }
    return PlaneGraph::from_rotations(std::move(rot));
}

bool is_triangulation(const PlaneGraph& g) {
    for (const auto& f : g.faces())
        if (f.size() != 3) return false;
    return true;
}

} // namespace pg
