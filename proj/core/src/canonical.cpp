#include "pg/canonical.hpp"

#include <algorithm>

namespace pg {

namespace {

// One BFS trace from a starting dart.  Vertices are labeled 1.. in order of
// first appearance; each visited vertex emits the labels of its neighbors in
// rotation order (direction dir, starting at the entry neighbor), then 0.
// The stream determines the embedding up to the start choice, so the
// minimum over starts is canonical.
void trace(const PlaneGraph& g, VertexId u0, VertexId w0, int dir, std::vector<uint8_t>& out) {
    const int n = g.vertex_count();
    out.clear();
    out.reserve(n + 4 * g.edge_count());
    static thread_local std::vector<int> label;
    label.assign(n, 0);
    static thread_local std::vector<std::pair<VertexId, VertexId>> queue; // (vertex, entry nbr)
    queue.clear();

    int next_label = 1;
    label[u0] = next_label++;
    label[w0] = next_label++;
    queue.push_back({u0, w0});
    queue.push_back({w0, u0});
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto [x, entry] = queue[qi];
        const auto& r = g.rotation(x);
        const int d = static_cast<int>(r.size());
        int start = g.rotation_index(x, entry);
        for (int t = 0; t < d; ++t) {
            VertexId nb = r[((start + dir * t) % d + d) % d];
            if (label[nb] == 0) {
                label[nb] = next_label++;
                queue.push_back({nb, x});
            }
            out.push_back(static_cast<uint8_t>(label[nb]));
        }
        out.push_back(0);
    }
}

} // namespace

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

CanonicalCode canonical_code(const PlaneGraph& g) {
    if (g.vertex_count() > 255)
        throw GraphError("canonical codes are defined for at most 255 vertices");
    CanonicalCode best;
    std::vector<uint8_t> cur;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId w : g.rotation(u))
            for (int dir : {+1, -1}) {
                trace(g, u, w, dir, cur);
                if (best.bytes.empty() || cur < best.bytes) best.bytes = cur;
            }
    return best;
}

CanonicalCode canonical_code_marked(const PlaneGraph& g, int face_index) {
    if (g.vertex_count() > 255)
        throw GraphError("canonical codes are defined for at most 255 vertices");
    const auto& f = g.faces().at(face_index);
    const int m = static_cast<int>(f.size());
    CanonicalCode best;
    std::vector<uint8_t> cur;
    for (int i = 0; i < m; ++i) {
        VertexId a = f[i], b = f[(i + 1) % m];
        trace(g, a, b, +1, cur);
        if (best.bytes.empty() || cur < best.bytes) best.bytes = cur;
        // mirror image: the same face is traced by the twin darts
        trace(g, b, a, -1, cur);
        if (cur < best.bytes) best.bytes = cur;
    }
    best.bytes.push_back(static_cast<uint8_t>(m)); // face size tag
    return best;
}

} // namespace pg
