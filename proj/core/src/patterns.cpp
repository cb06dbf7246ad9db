#include "pg/patterns.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pg {

namespace {

struct NodeExpr {
    int base;
    bool plus_n;
    int at(int n) const { return base + (plus_n ? n : 0); }
};

NodeExpr deg(int c) { return {c, false}; }
NodeExpr deg_n(int c) { return {c, true}; }

struct PatternShape {
    std::string id;
    std::string paper_label;
    int surplus;
    std::vector<NodeExpr> nodes;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> components;
};

// building blocks; node indices are global within the pattern
void add_path(PatternShape& p, std::vector<NodeExpr> degs) {
    int base = static_cast<int>(p.nodes.size());
    std::vector<int> comp;
    for (size_t i = 0; i < degs.size(); ++i) {
        p.nodes.push_back(degs[i]);
        comp.push_back(base + static_cast<int>(i));
        if (i > 0) p.edges.push_back({base + static_cast<int>(i) - 1, base + static_cast<int>(i)});
    }
    p.components.push_back(comp);
}

void add_vertex(PatternShape& p, NodeExpr d) {
    int base = static_cast<int>(p.nodes.size());
    p.nodes.push_back(d);
    p.components.push_back({base});
}

void add_star(PatternShape& p, NodeExpr center, std::vector<NodeExpr> leaves) {
    int base = static_cast<int>(p.nodes.size());
    p.nodes.push_back(center);
    std::vector<int> comp{base};
    for (size_t i = 0; i < leaves.size(); ++i) {
        p.nodes.push_back(leaves[i]);
        comp.push_back(base + 1 + static_cast<int>(i));
        p.edges.push_back({base, base + 1 + static_cast<int>(i)});
    }
    p.components.push_back(comp);
}

void add_triangle(PatternShape& p, std::vector<NodeExpr> degs) {
    int base = static_cast<int>(p.nodes.size());
    std::vector<int> comp;
    for (int i = 0; i < 3; ++i) {
        p.nodes.push_back(degs[i]);
        comp.push_back(base + i);
    }
    p.edges.push_back({base, base + 1});
    p.edges.push_back({base + 1, base + 2});
    p.edges.push_back({base, base + 2});
    p.components.push_back(comp);
}

std::vector<PatternShape> shapes(int surplus) {
    std::vector<PatternShape> out;
    auto fresh = [&](const char* id, const char* label) -> PatternShape& {
        out.push_back({id, label, surplus, {}, {}, {}});
        return out.back();
    };
    if (surplus == 1) {
        auto& a = fresh("P1.i", "(i)");
        add_path(a, {deg(6), deg(6)});
        add_vertex(a, deg_n(0));
        auto& b = fresh("P1.ii", "(ii)");
        add_path(b, {deg_n(1), deg(6)});
    } else if (surplus == 2) {
        auto& i = fresh("T2.i", "(i)");
        add_path(i, {deg(6), deg(6)});
        add_path(i, {deg(6), deg(6)});
        add_vertex(i, deg_n(0));
        auto& ii = fresh("T2.ii", "(ii)");
        add_path(ii, {deg(6), deg(7), deg(6)});
        add_vertex(ii, deg_n(0));
        auto& iii = fresh("T2.iii", "(iii)");
        add_path(iii, {deg(6), deg(6)});
        add_path(iii, {deg(6), deg_n(1)});
        auto& iv = fresh("T2.iv", "(iv)");
        add_path(iv, {deg(6), deg(7), deg_n(1)});
        auto& v = fresh("T2.v", "(v)");
        add_path(v, {deg(6), deg_n(2), deg(6)});
    } else if (surplus == 3) {
        auto& p1i = fresh("T3.1i", "1(i)");
        add_path(p1i, {deg(6), deg(7), deg(7), deg(6)});
        add_vertex(p1i, deg_n(0));
        auto& p1ii = fresh("T3.1ii", "1(ii)");
        add_path(p1ii, {deg_n(1), deg(7), deg(7), deg(6)});
        auto& p1iii = fresh("T3.1iii", "1(iii)");
        add_path(p1iii, {deg(6), deg_n(2), deg(7), deg(6)});
        auto& p2i = fresh("T3.2i", "2(i)");
        add_path(p2i, {deg(6), deg(7), deg(6)});
        add_path(p2i, {deg(6), deg(6)});
        add_vertex(p2i, deg_n(0));
        auto& p2ii = fresh("T3.2ii", "2(ii)");
        add_path(p2ii, {deg_n(1), deg(7), deg(6)});
        add_path(p2ii, {deg(6), deg(6)});
        auto& p2iii = fresh("T3.2iii", "2(iii)");
        add_path(p2iii, {deg(6), deg_n(2), deg(6)});
        add_path(p2iii, {deg(6), deg(6)});
        auto& p2iv = fresh("T3.2iv", "2(iv)");
        add_path(p2iv, {deg(6), deg(7), deg(6)});
        add_path(p2iv, {deg_n(1), deg(6)});
        auto& p3i = fresh("T3.3i", "3(i)");
        add_path(p3i, {deg(6), deg(6)});
        add_path(p3i, {deg(6), deg(6)});
        add_path(p3i, {deg(6), deg(6)});
        add_vertex(p3i, deg_n(0));
        auto& p3ii = fresh("T3.3ii", "3(ii)");
        add_path(p3ii, {deg_n(1), deg(6)});
        add_path(p3ii, {deg(6), deg(6)});
        add_path(p3ii, {deg(6), deg(6)});
        auto& p4i = fresh("T3.4i", "4(i)");
        add_star(p4i, deg(8), {deg(6), deg(6), deg(6)});
        add_vertex(p4i, deg_n(0));
        auto& p4ii = fresh("T3.4ii", "4(ii)");
        add_star(p4ii, deg(8), {deg_n(1), deg(6), deg(6)});
        auto& p4iii = fresh("T3.4iii", "4(iii)");
        add_star(p4iii, deg_n(3), {deg(6), deg(6), deg(6)});
        auto& p5i = fresh("T3.5i", "5(i)");
        add_triangle(p5i, {deg(7), deg(7), deg(7)});
        add_vertex(p5i, deg_n(0));
        auto& p5ii = fresh("T3.5ii", "5(ii)");
        add_triangle(p5ii, {deg(7), deg(7), deg_n(2)});
    } else {
        throw UnsupportedSurplus("pattern catalog covers surplus 1..3");
    }
    return out;
}

} // namespace

std::vector<int> SurplusPattern::exceptional_multiset() const {
    std::vector<int> out;
    for (int d : node_degrees)
        if (d != 5) out.push_back(d);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<SurplusPattern> pattern_catalog(int surplus, int n) {
    if (n < 3) throw UnsupportedSurplus("n must be at least 3");
    std::vector<SurplusPattern> out;
    for (const PatternShape& shape : shapes(surplus)) {
        SurplusPattern p;
        p.id = shape.id;
        p.paper_label = shape.paper_label;
        p.surplus = surplus;
        p.n = n;
        for (const NodeExpr& e : shape.nodes) p.node_degrees.push_back(e.at(n));
        p.edges_to_remove = shape.edges;
        p.components = shape.components;
        out.push_back(std::move(p));
    }
    std::map<std::vector<int>, int> seen;
    for (auto& p : out) {
        auto key = p.exceptional_multiset();
        auto [it, fresh_entry] = seen.insert({key, 1});
        if (!fresh_entry) ++it->second;
    }
    for (auto& p : out) p.degree_collision = seen[p.exceptional_multiset()] > 1;
    return out;
}

namespace {

struct OccurrenceSearch {
    const PlaneGraph& h;
    const SurplusPattern& p;
    std::vector<VertexId> assign;
    std::vector<char> used;
    std::set<EdgeSet> found;

    OccurrenceSearch(const PlaneGraph& hh, const SurplusPattern& pp)
        : h(hh), p(pp), assign(pp.node_degrees.size(), -1), used(hh.vertex_count(), 0) {}

    void rec(size_t k) {
        if (k == assign.size()) {
            EdgeSet es;
            for (auto [a, b] : p.edges_to_remove) es.push_back(make_edge(assign[a], assign[b]));
            std::sort(es.begin(), es.end());
            found.insert(std::move(es));
            return;
        }
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
            if (used[v] || h.degree(v) != p.node_degrees[k]) continue;
            bool ok = true;
            for (auto [a, b] : p.edges_to_remove) {
                size_t other;
                if (a == static_cast<int>(k))
                    other = b;
                else if (b == static_cast<int>(k))
                    other = a;
                else
                    continue;
                if (other < k && !h.has_edge(v, assign[other])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[v] = 1;
            assign[k] = v;
            rec(k + 1);
            assign[k] = -1;
            used[v] = 0;
        }
    }
};

} // namespace

std::vector<EdgeSet> find_pattern_occurrences(const PlaneGraph& h, const SurplusPattern& pattern) {
    OccurrenceSearch search(h, pattern);
    search.rec(0);
    return {search.found.begin(), search.found.end()};
}

std::vector<std::pair<EdgeSet, std::vector<VertexId>>>
find_normalizing_edge_sets_with_specials(const PlaneGraph& h, int n) {
    const int V = h.vertex_count();
    std::map<EdgeSet, std::vector<VertexId>> found;
    bool any_candidate = false;
    for (VertexId w = 0; w < V; ++w) {
        if (h.degree(w) < n) continue;
        std::vector<int> need(V);
        bool ok = true;
        for (VertexId v = 0; v < V; ++v) {
            need[v] = v == w ? h.degree(v) - n : h.degree(v) - 5;
            if (need[v] < 0) ok = false;
        }
        if (!ok) continue;
        any_candidate = true;

        std::vector<VertexId> needy;
        for (VertexId v = 0; v < V; ++v)
            if (need[v] > 0) needy.push_back(v);
        std::vector<Edge> candidates;
        for (VertexId a : needy)
            for (VertexId b : needy)
                if (a < b && h.has_edge(a, b)) candidates.push_back({a, b});

        // choose a subgraph of `candidates` hitting every need exactly
        EdgeSet chosen;
        auto rec = [&](auto&& self, size_t idx) -> void {
            bool done = true;
            for (VertexId v : needy)
                if (need[v] != 0) {
                    done = false;
                    break;
                }
            if (done) {
                EdgeSet key = chosen;
                std::sort(key.begin(), key.end());
                auto& specials = found[key];
                if (std::find(specials.begin(), specials.end(), w) == specials.end())
                    specials.push_back(w);
                // fall through: supersets cannot hit needs again, but other
                // branches may; return here since all needs are zero
                return;
            }
            if (idx == candidates.size()) return;
            // prune: remaining candidate edges must cover the outstanding need
            int remaining = 0;
            for (size_t t = idx; t < candidates.size(); ++t)
                if (need[candidates[t].first] > 0 && need[candidates[t].second] > 0) ++remaining;
            int outstanding = 0;
            for (VertexId v : needy) outstanding += need[v];
            if (2 * remaining < outstanding) return;

            self(self, idx + 1);
            auto [a, b] = candidates[idx];
            if (need[a] > 0 && need[b] > 0) {
                --need[a];
                --need[b];
                chosen.push_back(candidates[idx]);
                self(self, idx + 1);
                chosen.pop_back();
                ++need[a];
                ++need[b];
            }
        };
        rec(rec, 0);
    }
    if (!any_candidate)
        throw DegreeInfeasible("no vertex can take the degree-" + std::to_string(n) + " role");
    std::vector<std::pair<EdgeSet, std::vector<VertexId>>> out;
    out.reserve(found.size());
    for (auto& [s, specials] : found) {
        std::sort(specials.begin(), specials.end());
        out.push_back({s, specials});
    }
    return out;
}

std::vector<EdgeSet> find_normalizing_edge_sets(const PlaneGraph& h, int n) {
    std::vector<EdgeSet> out;
    for (auto& [s, specials] : find_normalizing_edge_sets_with_specials(h, n)) out.push_back(s);
    return out;
}

DeriveResult derive_pentagulation(const PlaneGraph& h, const EdgeSet& s, int n,
                                  std::optional<VertexId> special) {
    // precondition: s is normalizing for some special vertex
    std::vector<int> after(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v) after[v] = h.degree(v);
    for (auto [a, b] : s) {
        if (!h.has_edge(a, b)) throw PreconditionViolated("edge set not in graph");
        --after[a];
        --after[b];
    }
    VertexId w = -1;
    if (n == 5) {
        if (!special.has_value())
            throw PreconditionViolated("n = 5 derivation needs the marked vertex");
        w = *special;
        if (after[w] != 5) throw PreconditionViolated("marked vertex not at degree 5");
        for (VertexId v = 0; v < h.vertex_count(); ++v)
            if (after[v] != 5) throw PreconditionViolated("removal set is not normalizing");
    } else {
        for (VertexId v = 0; v < h.vertex_count(); ++v) {
            if (after[v] == 5) continue;
            if (after[v] == n && w < 0)
                w = v;
            else
                throw PreconditionViolated("removal set is not normalizing");
        }
        if (w < 0) throw PreconditionViolated("no degree-" + std::to_string(n) + " vertex left");
        if (special.has_value() && *special != w)
            throw PreconditionViolated("special vertex mismatch");
    }

    DeriveResult res;
    PlaneGraph reduced = h;
    try {
        reduced = remove_edges(h, s);
    } catch (const ResultDisconnected&) {
        res.rejection = "removal disconnects";
        return res;
    }
    PlaneGraph pent = reduced;
    try {
        pent = dual(reduced);
    } catch (const DualNotSimple& e) {
        res.rejection = std::string("dual not simple: ") + e.what();
        return res;
    }
    if (!is_three_connected(pent)) {
        res.rejection = "dual not 3-connected";
        return res;
    }

    // locate the distinguished face: the dual face collecting the faces of
    // `reduced` around w
    std::set<int> around;
    {
        const auto& rot = reduced.rotation(w);
        for (size_t i = 0; i < rot.size(); ++i) around.insert(reduced.face_of_dart(w, rot[i]));
    }
    int ngon_face = -1;
    for (int f = 0; f < pent.face_count(); ++f) {
        const auto& cyc = pent.faces()[f];
        std::set<int> fs(cyc.begin(), cyc.end());
        if (fs == around) {
            ngon_face = f;
            break;
        }
    }
    if (ngon_face < 0) {
        res.rejection = "distinguished face not found";
        return res;
    }
    for (int f = 0; f < pent.face_count(); ++f) {
        int want = f == ngon_face ? n : 5;
        if (static_cast<int>(pent.faces()[f].size()) != want) {
            res.rejection = "face sizes not {5,...,5,n}";
            return res;
        }
    }

    PentagulationRecord rec;
    rec.n = n;
    rec.surplus = static_cast<int>(s.size());
    rec.pentagon_count = pent.face_count() - 1;
    rec.ngon_face = ngon_face;
    rec.code = n == 5 ? canonical_code_marked(pent, ngon_face) : canonical_code(pent);
    rec.source_code = canonical_code(h);
    rec.removed = s;
    rec.graph = std::move(pent);

    // arithmetic identities
    const int p = rec.pentagon_count;
    if (2 * rec.graph.edge_count() != 5 * p + n || 2 * rec.graph.vertex_count() != 3 * p + n + 2 ||
        rec.surplus != (p - n) / 2 - 3) {
        res.rejection = "count identities failed";
        return res;
    }
    res.record = std::move(rec);
    return res;
}

} // namespace pg
