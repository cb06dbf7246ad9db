#include "pg/verifier.hpp"

#include <algorithm>
#include <set>

#include "pg/canonical.hpp"
#include "pg/disc.hpp"

namespace pg {

std::string LemmaReport::line() const {
    std::string s = "lemma=" + lemma;
    const char* names[] = {"holds", "violated", "preconditions-not-met"};
    s += " verdict=" + std::string(names[static_cast<int>(verdict)]);
    for (const auto& [k, v] : quantities) s += " " + k + "=" + std::to_string(v);
    if (!instance.empty()) s += " instance=" + instance;
    if (!detail.empty()) s += " detail=\"" + detail + "\"";
    return s;
}

LemmaReport check_interior_count(const PlaneGraph& g, VertexId v) {
    LemmaReport rep;
    rep.lemma = "interior_count";
    rep.instance = "v=" + std::to_string(v);
    if (!is_triangulation(g)) {
        rep.detail = "not a triangulation";
        return rep;
    }
    const auto& link = g.rotation(v);
    const int n = static_cast<int>(link.size());
    // link must be an induced cycle
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
            if (!consecutive && g.has_edge(link[i], link[j])) {
                rep.detail = "link has a chord";
                return rep;
            }
        }
    long p_v = 0;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        if (x != v) p_v += g.degree(x) - 5;
    const long interior = g.vertex_count() - 1 - n;
    rep.quantities = {{"n", n}, {"I", interior}, {"p_v", p_v}};
    rep.verdict = (interior == p_v + 6) ? Verdict::holds : Verdict::violated;
    return rep;
}

namespace {

// chord (a, c) cutting the consecutive triple (a, b, c) of the current
// polygon of a face being triangulated: c goes right before b in rot(a),
// a right after b in rot(c).
void insert_chord(std::vector<std::vector<VertexId>>& rot, VertexId a, VertexId b, VertexId c) {
    auto& ra = rot[a];
    ra.insert(std::find(ra.begin(), ra.end(), b), c);
    auto& rc = rot[c];
    rc.insert(std::next(std::find(rc.begin(), rc.end(), b)), a);
}

} // namespace

FaceTriangulation triangulate_face(const PlaneGraph& g, int face_index) {
    std::vector<VertexId> poly = g.faces().at(face_index);
    auto rot = g.rotations();
    std::set<Edge> present;
    for (const Edge& e : g.edges()) present.insert(e);
    auto adjacent = [&](VertexId a, VertexId b) { return present.count(make_edge(a, b)) > 0; };

    std::vector<Edge> chords;
    auto add = [&](VertexId a, VertexId b, VertexId c) {
        insert_chord(rot, a, b, c);
        present.insert(make_edge(a, c));
        chords.push_back(make_edge(a, c));
    };

    while (poly.size() > 3) {
        if (!adjacent(poly[0], poly[2])) {
            add(poly[0], poly[1], poly[2]);
            poly.erase(poly.begin() + 1);
        } else {
            // fan from poly[1]
            while (poly.size() > 3) {
                if (adjacent(poly[1], poly[3]))
                    throw NoValidChordSet("fan vertex adjacent across the face");
                add(poly[1], poly[2], poly[3]);
                poly.erase(poly.begin() + 2);
            }
        }
    }
    return {PlaneGraph::from_rotations(std::move(rot)), std::move(chords)};
}

namespace {

struct CycleContext {
    bool valid = false;
    std::string why;
    std::vector<VertexId> cycle;
    std::vector<char> on_cycle;
    std::vector<VertexId> interior;
};

CycleContext cycle_context(const PlaneGraph& h, int outer_face) {
    CycleContext ctx;
    ctx.cycle = h.faces().at(outer_face);
    std::set<VertexId> distinct(ctx.cycle.begin(), ctx.cycle.end());
    if (distinct.size() != ctx.cycle.size()) {
        ctx.why = "outer face is not a simple cycle";
        return ctx;
    }
    for (int f = 0; f < h.face_count(); ++f)
        if (f != outer_face && h.faces()[f].size() != 3) {
            ctx.why = "inner face of size " + std::to_string(h.faces()[f].size());
            return ctx;
        }
    ctx.on_cycle.assign(h.vertex_count(), 0);
    for (VertexId v : ctx.cycle) ctx.on_cycle[v] = 1;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (!ctx.on_cycle[v]) ctx.interior.push_back(v);
    ctx.valid = true;
    return ctx;
}

} // namespace

LemmaReport check_cycle_bounds(const PlaneGraph& h, int outer_face) {
    LemmaReport rep;
    rep.lemma = "cycle_bounds";
    CycleContext ctx = cycle_context(h, outer_face);
    if (!ctx.valid) {
        rep.detail = ctx.why;
        return rep;
    }
    const int n = static_cast<int>(ctx.cycle.size());
    const int k = static_cast<int>(ctx.interior.size());
    const int E = h.edge_count();
    long s = 0;
    for (VertexId v : ctx.cycle) s += h.degree(v);
    bool interior_min5 = true;
    for (VertexId v : ctx.interior)
        if (h.degree(v) < 5) interior_min5 = false;
    // edges of the subgraph induced by the interior
    int t = 0;
    for (VertexId v : ctx.interior)
        for (VertexId w : h.rotation(v))
            if (!ctx.on_cycle[w] && v < w) ++t;

    rep.quantities = {{"n", n}, {"k", k}, {"E", E}, {"s", s}, {"t", t},
                      {"interior_min5", interior_min5 ? 1 : 0}};

    bool ok = (E == 3 * k + 2 * n - 3);
    if (interior_min5) {
        ok = ok && (k >= s - 4 * n + 6);
        if ((n == 3 && k >= 1) || (n == 4 && k >= 1) || (n == 5 && k >= 2))
            ok = ok && (k >= 9 - n);
        if (k >= 3 && t < 3 * k - 6) ok = ok && (k >= 10 - n);
        if (n == 3 && k > 0) ok = ok && (k >= 9);
        if (n == 4 && k > 0) ok = ok && (k >= 8);
        if (n == 5 && k > 1) ok = ok && (k >= 6);
    }
    rep.verdict = ok ? Verdict::holds : Verdict::violated;
    return rep;
}

LemmaReport check_no_chords(const PlaneGraph& h, int outer_face) {
    LemmaReport rep;
    rep.lemma = "no_chords";
    CycleContext ctx = cycle_context(h, outer_face);
    if (!ctx.valid) {
        rep.detail = ctx.why;
        return rep;
    }
    const int n = static_cast<int>(ctx.cycle.size());

    std::vector<VertexId> deg5_on_c, deg_other_on_c;
    for (VertexId v : ctx.cycle) {
        if (h.degree(v) == 5)
            deg5_on_c.push_back(v);
        else if (h.degree(v) != 4)
            deg_other_on_c.push_back(v);
    }
    int interior6 = 0;
    bool interior_ok5 = true; // all 5 except counted 6s
    for (VertexId v : ctx.interior) {
        if (h.degree(v) == 6)
            ++interior6;
        else if (h.degree(v) != 5)
            interior_ok5 = false;
    }
    const bool two_adjacent_5s =
        deg5_on_c.size() == 2 && h.has_edge(deg5_on_c[0], deg5_on_c[1]);

    const bool nc_i = deg_other_on_c.empty() && deg5_on_c.size() <= 1;
    const bool nc_ii = deg_other_on_c.empty() && two_adjacent_5s && interior_ok5 && interior6 == 0;
    const bool cv_i = deg_other_on_c.empty() && interior_ok5 && interior6 == 0 &&
                      (deg5_on_c.size() <= 1 || two_adjacent_5s);
    const bool cv_ii = deg_other_on_c.empty() && deg5_on_c.size() <= 1 && interior_ok5 &&
                       interior6 <= 1;
    const bool cv_iii = deg_other_on_c.empty() && deg5_on_c.empty() && interior_ok5 &&
                        interior6 <= 2;

    if (!(nc_i || nc_ii || cv_i || cv_ii || cv_iii)) {
        rep.detail = "no hypothesis applies";
        return rep;
    }

    long chords = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (h.has_edge(ctx.cycle[i], ctx.cycle[j])) ++chords;
        }

    long shared_apexes = 0;
    if (cv_i || cv_ii || cv_iii) {
        std::vector<int> apex_seen(h.vertex_count(), 0);
        for (int i = 0; i < n; ++i) {
            VertexId a = ctx.cycle[i], b = ctx.cycle[(i + 1) % n];
            int f = h.face_of_dart(a, b);
            if (f == outer_face) f = h.face_of_dart(b, a);
            for (VertexId x : h.faces()[f])
                if (x != a && x != b && !ctx.on_cycle[x] && ++apex_seen[x] == 2) ++shared_apexes;
        }
    }

    rep.quantities = {{"n", n}, {"chords", chords}, {"shared_apexes", shared_apexes},
                      {"nc_i", nc_i}, {"nc_ii", nc_ii}, {"cv_i", cv_i}, {"cv_ii", cv_ii},
                      {"cv_iii", cv_iii}};
    bool ok = true;
    if (nc_i || nc_ii) ok = ok && chords == 0;
    if (cv_i || cv_ii || cv_iii) ok = ok && shared_apexes == 0;
    rep.verdict = ok ? Verdict::holds : Verdict::violated;
    return rep;
}

uint64_t verify_unique_degree_theorem(int n, const GenOptions& opts) {
    DegreeSpec spec;
    spec.total_vertices = n + 7;
    if (n != 5) spec.exceptional = {{n, 1}};
    return count_triangulations(spec, opts);
}

namespace {

class CountingDiscClient : public DiscClient {
public:
    CountingDiscClient(int boundary_len, int min_interior_degree)
        : m_(boundary_len), min_deg_(min_interior_degree) {}

    bool close_interior(int deg) override { return deg >= min_deg_; }
    void undo_close_interior(int) override {}
    bool close_boundary(int, int) override { return true; }
    void undo_close_boundary(int, int) override {}
    int interior_open_cap() const override { return 31; }
    int boundary_open_cap() const override { return 31; }

    void emit(int vertex_count, const std::vector<std::array<int, 3>>& faces) override {
        int outer = -1;
        PlaneGraph g = disc_to_plane_graph(m_, vertex_count, faces, &outer);
        codes_.insert(canonical_code_marked(g, outer).bytes);
    }

    int classes() const { return static_cast<int>(codes_.size()); }

private:
    int m_;
    int min_deg_;
    std::set<std::vector<uint8_t>> codes_;
};

} // namespace

int count_disc_triangulations(int boundary_len, int interior, int min_interior_degree) {
    CountingDiscClient client(boundary_len, min_interior_degree);
    enumerate_discs(boundary_len, interior, client);
    return client.classes();
}

} // namespace pg
