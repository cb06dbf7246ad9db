#include "pg/generator.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <mutex>
#include <thread>

// Canonical-construction-path search over vertex-splitting expansions.
//
// States are simple plane triangulations (rotation systems).  Every simple
// triangulation on >= 5 vertices has a contractible edge, so splitting from
// K4 reaches everything.  A child is accepted only when its new edge is a
// minimum of an isomorphism-invariant key over all contractible edges; the
// key is (endpoint/common-neighbor degrees, then a rooted BFS trace).  Equal
// keys mean the edges lie in one automorphism orbit, so duplicates can only
// arise from the same parent and are removed by comparing the keys of
// accepted siblings.
//
// Degree-residual pruning against the target multiset:
//   - a split lowers sum(max(0, deg-5)) by at most 1,
//   - it lowers sum(max(0, 5-deg)) by at most 2 (the two pivots),
//   - it lowers #{deg >= t} by at most 1 for any t >= 6,
//   - a vertex of degree d needs at least ceil((d-4)/(Emax-4)) final
//     descendants when every final degree is at most Emax,
// all measured against r = V - k remaining splits.

namespace pg {
namespace detail {

namespace {

constexpr int MAXV = 32;
constexpr int MAXD = 48;

struct State {
    int n;
    uint8_t deg[MAXV];
    uint32_t adj[MAXV];
    uint8_t rot[MAXV][MAXD];
};

State k4_state() {
    State s{};
    s.n = 4;
    const int rot[4][3] = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    for (int v = 0; v < 4; ++v) {
        s.deg[v] = 3;
        for (int t = 0; t < 3; ++t) {
            s.rot[v][t] = static_cast<uint8_t>(rot[v][t]);
            s.adj[v] |= 1u << rot[v][t];
        }
    }
    return s;
}

struct Target {
    bool constrained = true;
    bool prune = true;
    int V = 0;
    int X_t = 0, D_t = 0, Emax = 5;
    int want[MAXD] = {};      // exact multiset counts including fives
    int slots_cnt[MAXD] = {}; // exceptional degrees only
};

Target make_target(const DegreeSpec* spec, int unconstrained_v, bool prune) {
    Target tg;
    tg.prune = prune;
    if (spec == nullptr) {
        tg.constrained = false;
        tg.V = unconstrained_v;
        if (tg.V < 4 || tg.V > MAXV) throw InfeasibleSpec("vertex count out of engine range");
        return tg;
    }
    spec->validate();
    tg.V = spec->total_vertices;
    if (tg.V > MAXV) throw InfeasibleSpec("vertex count out of engine range");
    tg.want[5] = spec->five_count();
    for (auto [d, k] : spec->exceptional) {
        if (d >= MAXD) throw InfeasibleSpec("degree out of engine range");
        tg.want[d] += k;
        tg.slots_cnt[d] += k;
        tg.Emax = std::max(tg.Emax, d);
        if (d > 5) tg.X_t += (d - 5) * k;
        if (d < 5) tg.D_t += (5 - d) * k;
    }
    if (5 + tg.X_t + (tg.V - 4) >= MAXD)
        throw InfeasibleSpec("spec exceeds engine degree capacity");
    return tg;
}

// Residual feasibility of a state's degree histogram.
bool feasible(const Target& tg, const int* hist, int maxdeg, int k) {
    const int r = tg.V - k;
    if (r < 0) return false;
    if (!tg.constrained) return true;
    if (r == 0) {
        for (int d = 3; d < MAXD; ++d)
            if (hist[d] != tg.want[d]) return false;
        return true;
    }
    if (!tg.prune) return true;

    int X = 0, D = hist[3] * 2 + hist[4];
    for (int d = 6; d <= maxdeg; ++d) X += hist[d] * (d - 5);
    if (X > tg.X_t + r) return false;
    if (D > tg.D_t + 2 * r) return false;

    // thresholds: #{deg >= t} can drop by at most one per split
    int cnt = 0, slots = 0;
    for (int t = maxdeg; t >= 6; --t) {
        cnt += hist[t];
        slots += tg.slots_cnt[t];
        if (cnt > slots + r) return false;
    }

    // greedy slot matching; an unmatched over-5 vertex must be split
    int splits_needed = 0, avail = 0;
    for (int d = maxdeg; d >= 6; --d) {
        avail += tg.slots_cnt[d];
        int take = std::min(hist[d], avail);
        avail -= take;
        int un = hist[d] - take;
        if (un > 0) {
            int parts = (d - 4 + tg.Emax - 5) / (tg.Emax - 4); // ceil((d-4)/(Emax-4))
            splits_needed += un * std::max(1, parts - 1);
        }
    }
    if (splits_needed > r) return false;
    return true;
}

// --- rooted BFS traces ------------------------------------------------

// Writes the trace stream rooted at dart (u0 -> w0) in direction dir into
// out; returns its length (7n - 12).
int rooted_trace(const State& s, int u0, int w0, int dir, uint8_t* out) {
    uint8_t label[MAXV];
    std::memset(label, 0, sizeof(label));
    uint8_t qv[MAXV], qe[MAXV];
    int qn = 0, len = 0;
    uint8_t next = 1;
    label[u0] = next++;
    label[w0] = next++;
    qv[qn] = static_cast<uint8_t>(u0);
    qe[qn++] = static_cast<uint8_t>(w0);
    qv[qn] = static_cast<uint8_t>(w0);
    qe[qn++] = static_cast<uint8_t>(u0);
    for (int qi = 0; qi < qn; ++qi) {
        const int x = qv[qi];
        const int d = s.deg[x];
        const uint8_t* r = s.rot[x];
        int start = 0;
        while (r[start] != qe[qi]) ++start;
        for (int t = 0; t < d; ++t) {
            int idx = start + dir * t;
            if (idx >= d) idx -= d;
            if (idx < 0) idx += d;
            int nb = r[idx];
            if (label[nb] == 0) {
                label[nb] = next++;
                qv[qn] = static_cast<uint8_t>(nb);
                qe[qn++] = static_cast<uint8_t>(x);
            }
            out[len++] = label[nb];
        }
        out[len++] = 0;
    }
    return len;
}

// Minimum trace over the four darts of edge (u, w).
int min_edge_trace(const State& s, int u, int w, uint8_t* best) {
    uint8_t buf[7 * MAXV];
    int len = rooted_trace(s, u, w, +1, best);
    const std::pair<int, int> starts[3] = {{u, w}, {w, u}, {w, u}};
    const int dirs[3] = {-1, +1, -1};
    for (int t = 0; t < 3; ++t) {
        rooted_trace(s, starts[t].first, starts[t].second, dirs[t], buf);
        if (std::memcmp(buf, best, len) < 0) std::memcpy(best, buf, len);
    }
    return len;
}

// True if some trace of edge (u, w) is lexicographically smaller than ref.
bool edge_beats(const State& s, int u, int w, const uint8_t* ref, int len) {
    uint8_t buf[7 * MAXV];
    const std::pair<int, int> starts[4] = {{u, w}, {u, w}, {w, u}, {w, u}};
    const int dirs[4] = {+1, -1, +1, -1};
    for (int t = 0; t < 4; ++t) {
        rooted_trace(s, starts[t].first, starts[t].second, dirs[t], buf);
        if (std::memcmp(buf, ref, len) < 0) return true;
    }
    return false;
}

inline uint32_t edge_iota(const State& s, int u, int w) {
    uint32_t du = s.deg[u], dw = s.deg[w];
    if (du > dw) std::swap(du, dw);
    uint32_t m = s.adj[u] & s.adj[w];
    int c1 = std::countr_zero(m);
    m &= m - 1;
    int c2 = std::countr_zero(m);
    uint32_t dc1 = s.deg[c1], dc2 = s.deg[c2];
    if (dc1 > dc2) std::swap(dc1, dc2);
    return (du << 24) | (dw << 16) | (dc1 << 8) | dc2;
}

// Accept test: the new edge (v, w) must minimize (iota, trace) over all
// contractible edges.  On success fills kappa with iota || trace bytes.
bool new_edge_is_canonical(const State& c, int v, int w, std::vector<uint8_t>& kappa) {
    const uint32_t iota_new = edge_iota(c, v, w);
    uint32_t iota_min = iota_new;
    int ties[2 * MAXV];
    int tie_count = 0;
    for (int x = 0; x < c.n; ++x) {
        uint32_t m = c.adj[x] >> (x + 1);
        while (m) {
            int y = x + 1 + std::countr_zero(m);
            m &= m - 1;
            if (std::popcount(c.adj[x] & c.adj[y]) != 2) continue;
            if (x == std::min(v, w) && y == std::max(v, w)) continue;
            uint32_t io = edge_iota(c, x, y);
            if (io < iota_min) return false;
            if (io == iota_min && tie_count < 2 * MAXV) ties[tie_count++] = (x << 8) | y;
        }
    }
    uint8_t best[7 * MAXV];
    int len = min_edge_trace(c, v, w, best);
    for (int t = 0; t < tie_count; ++t)
        if (edge_beats(c, ties[t] >> 8, ties[t] & 255, best, len)) return false;
    kappa.assign(best, best + len);
    kappa.push_back(static_cast<uint8_t>(iota_new >> 24));
    kappa.push_back(static_cast<uint8_t>(iota_new >> 16));
    kappa.push_back(static_cast<uint8_t>(iota_new >> 8));
    kappa.push_back(static_cast<uint8_t>(iota_new));
    return true;
}

// --- splitting --------------------------------------------------------

void insert_after(uint8_t* row, int& len, int pos, uint8_t val) {
    std::memmove(row + pos + 2, row + pos + 1, static_cast<size_t>(len - pos - 1));
    row[pos + 1] = val;
    ++len;
}

// Split vertex v along rotation positions i < j; the new vertex keeps the
// arc rot[v][j..i], v keeps rot[v][i..j].
void apply_split(const State& s, int v, int i, int j, State& c) {
    c = s;
    const int d = s.deg[v];
    const int w = s.n;
    c.n = s.n + 1;
    const uint8_t* r = s.rot[v];
    const int a = r[i], b = r[j];

    int la = 0;
    for (int t = i;; t = (t + 1) % d) {
        c.rot[v][la++] = r[t];
        if (t == j) break;
    }
    c.rot[v][la] = static_cast<uint8_t>(w);
    c.deg[v] = static_cast<uint8_t>(la + 1);

    int lb = 0;
    for (int t = j;; t = (t + 1) % d) {
        c.rot[w][lb++] = r[t];
        if (t == i) break;
    }
    c.rot[w][lb] = static_cast<uint8_t>(v);
    c.deg[w] = static_cast<uint8_t>(lb + 1);

    uint32_t mv = 1u << w, mw = 1u << v;
    for (int t = 0; t < la; ++t) mv |= 1u << c.rot[v][t];
    for (int t = 0; t < lb; ++t) mw |= 1u << c.rot[w][t];
    c.adj[v] = mv;
    c.adj[w] = mw;

    // interior of arc B swaps v for w
    for (int t = 1; t + 1 < lb; ++t) {
        int x = c.rot[w][t];
        int dx = c.deg[x];
        for (int p = 0; p < dx; ++p)
            if (c.rot[x][p] == v) {
                c.rot[x][p] = static_cast<uint8_t>(w);
                break;
            }
        c.adj[x] = (c.adj[x] & ~(1u << v)) | (1u << w);
    }

    // pivot a: w immediately after v; pivot b: w immediately before v
    {
        int len = c.deg[a];
        int pos = 0;
        while (c.rot[a][pos] != v) ++pos;
        insert_after(c.rot[a], len, pos, static_cast<uint8_t>(w));
        c.deg[a] = static_cast<uint8_t>(len);
        c.adj[a] |= 1u << w;
    }
    {
        int len = c.deg[b];
        int pos = 0;
        while (c.rot[b][pos] != v) ++pos;
        std::memmove(c.rot[b] + pos + 1, c.rot[b] + pos, static_cast<size_t>(len - pos));
        c.rot[b][pos] = static_cast<uint8_t>(w);
        ++len;
        c.deg[b] = static_cast<uint8_t>(len);
        c.adj[b] |= 1u << w;
    }
}

PlaneGraph to_plane_graph(const State& s) {
    std::vector<std::vector<VertexId>> rot(s.n);
    for (int v = 0; v < s.n; ++v) rot[v].assign(s.rot[v], s.rot[v] + s.deg[v]);
    return PlaneGraph::from_rotations(std::move(rot));
}

struct WorkerStats {
    std::vector<uint64_t> per_level;
    uint64_t children = 0;
    uint64_t emitted = 0;
};

class Search {
public:
    Search(const Target& tg, const std::function<void(const PlaneGraph&)>& sink,
           const GenOptions& opts)
        : tg_(tg), sink_(sink), opts_(opts) {}

    uint64_t run(GenStats* stats) {
        std::vector<State> frontier;
        const State root = k4_state();
        note_state(bfs_stats_, 4);
        if (tg_.V == 4) {
            int hist[MAXD] = {};
            hist[3] = 4;
            if (feasible(tg_, hist, 3, 4)) emit_state(root, bfs_stats_);
        } else {
            int hist[MAXD] = {};
            hist[3] = 4;
            if (feasible(tg_, hist, 3, 4)) frontier.push_back(root);
        }

        const int want_threads =
            opts_.threads > 0 ? opts_.threads
                              : std::max(1u, std::thread::hardware_concurrency());
        const size_t frontier_goal = std::max<size_t>(256, 48 * want_threads);
        int level = 4;
        while (!frontier.empty() && level + 1 < tg_.V && frontier.size() < frontier_goal) {
            std::vector<State> next;
            for (const State& s : frontier)
                expand(s, bfs_stats_, [&](const State& c) { next.push_back(c); });
            frontier.swap(next);
            ++level;
            if (frontier.size() > 300000) break; // memory guard; DFS from here
        }

        if (!frontier.empty()) {
            if (want_threads == 1 || frontier.size() < 2) {
                for (const State& s : frontier) dfs(s, bfs_stats_);
            } else {
                std::atomic<size_t> next_item{0};
                std::vector<WorkerStats> wstats(want_threads);
                std::vector<std::thread> pool;
                for (int t = 0; t < want_threads; ++t)
                    pool.emplace_back([&, t] {
                        for (;;) {
                            size_t i = next_item.fetch_add(1, std::memory_order_relaxed);
                            if (i >= frontier.size()) break;
                            dfs(frontier[i], wstats[t]);
                        }
                    });
                for (auto& th : pool) th.join();
                for (const auto& ws : wstats) merge(bfs_stats_, ws);
            }
        }

        if (stats) {
            stats->states_per_level = bfs_stats_.per_level;
            stats->children_examined = bfs_stats_.children;
            stats->emitted = bfs_stats_.emitted;
        }
        return bfs_stats_.emitted;
    }

private:
    void note_state(WorkerStats& ws, int n) {
        if (ws.per_level.size() <= static_cast<size_t>(n)) ws.per_level.resize(n + 1, 0);
        ++ws.per_level[n];
        if (opts_.counters) opts_.counters->states.fetch_add(1, std::memory_order_relaxed);
    }

    static void merge(WorkerStats& into, const WorkerStats& from) {
        if (into.per_level.size() < from.per_level.size())
            into.per_level.resize(from.per_level.size(), 0);
        for (size_t i = 0; i < from.per_level.size(); ++i) into.per_level[i] += from.per_level[i];
        into.children += from.children;
        into.emitted += from.emitted;
    }

    void emit_state(const State& s, WorkerStats& ws) {
        PlaneGraph g = to_plane_graph(s);
        {
            std::lock_guard<std::mutex> lock(emit_mutex_);
            ws.emitted++; // under the lock only to simplify merge ordering
            if (opts_.counters) opts_.counters->emitted.fetch_add(1, std::memory_order_relaxed);
            sink_(g);
        }
    }

    template <class F>
    void expand(const State& s, WorkerStats& ws, F&& on_child) {
        int hist[MAXD] = {};
        int maxdeg = 0;
        for (int v = 0; v < s.n; ++v) {
            ++hist[s.deg[v]];
            maxdeg = std::max(maxdeg, static_cast<int>(s.deg[v]));
        }
        const int cnt3 = hist[3];
        std::vector<std::vector<uint8_t>> seen_kappas;
        std::vector<uint8_t> kappa;
        State child;

        for (int v = 0; v < s.n; ++v) {
            const int d = s.deg[v];
            for (int i = 0; i < d; ++i) {
                for (int j = i + 1; j < d; ++j) {
                    if (opts_.counters)
                        opts_.counters->children.fetch_add(1, std::memory_order_relaxed);
                    ++ws.children;
                    const int dv = j - i + 2;
                    const int dw = d - (j - i) + 2;
                    const int a = s.rot[v][i], b = s.rot[v][j];
                    const int da = s.deg[a], db = s.deg[b];

                    // a surviving degree-3 vertex forces the new edge to
                    // have a degree-3 endpoint
                    const bool child_has3 =
                        (cnt3 - (d == 3) - (da == 3) - (db == 3)) > 0 || dv == 3 || dw == 3;
                    if (child_has3 && dv > 3 && dw > 3) continue;
                    if (std::max({dv, dw, da + 1, db + 1}) >= MAXD) continue;

                    // incremental histogram screen
                    --hist[d];
                    ++hist[dv];
                    ++hist[dw];
                    --hist[da];
                    ++hist[da + 1];
                    --hist[db];
                    ++hist[db + 1];
                    int md = std::max({maxdeg, dv, dw, da + 1, db + 1});
                    bool ok = feasible(tg_, hist, md, s.n + 1);
                    --hist[dv];
                    --hist[dw];
                    ++hist[d];
                    ++hist[da];
                    --hist[da + 1];
                    ++hist[db];
                    --hist[db + 1];
                    if (!ok) continue;

                    apply_split(s, v, i, j, child);
                    if (!new_edge_is_canonical(child, v, s.n, kappa)) continue;
                    bool dup = false;
                    for (const auto& k : seen_kappas)
                        if (k == kappa) {
                            dup = true;
                            break;
                        }
                    if (dup) continue;
                    seen_kappas.push_back(kappa);

                    note_state(ws, child.n);
                    if (child.n == tg_.V)
                        emit_state(child, ws);
                    else
                        on_child(child);
                }
            }
        }
    }

    void dfs(const State& s, WorkerStats& ws) {
        expand(s, ws, [&](const State& c) { dfs(c, ws); });
    }

    const Target tg_;
    const std::function<void(const PlaneGraph&)>& sink_;
    const GenOptions opts_;
    WorkerStats bfs_stats_;
    std::mutex emit_mutex_;
};

} // namespace

uint64_t split_engine_run(const DegreeSpec* spec, int unconstrained_v,
                          const std::function<void(const PlaneGraph&)>& sink,
                          const GenOptions& opts, GenStats* stats) {
    Target tg = make_target(spec, unconstrained_v, opts.prune);
    Search search(tg, sink, opts);
    return search.run(stats);
}

} // namespace detail

namespace {

bool use_apex(const DegreeSpec& spec, const GenOptions& opts) {
    switch (opts.engine) {
    case GenEngine::split: return false;
    case GenEngine::apex: return true;
    case GenEngine::automatic: return spec.total_vertices >= 15;
    }
    return false;
}

} // namespace

uint64_t enumerate_triangulations_stream(const DegreeSpec& spec,
                                         const std::function<void(const PlaneGraph&)>& sink,
                                         const GenOptions& opts, GenStats* stats) {
    if (use_apex(spec, opts)) return detail::apex_engine_run(spec, sink, opts, stats);
    return detail::split_engine_run(&spec, 0, sink, opts, stats);
}

std::vector<PlaneGraph> enumerate_triangulations(const DegreeSpec& spec, const GenOptions& opts,
                                                 GenStats* stats) {
    std::vector<std::pair<CanonicalCode, PlaneGraph>> got;
    enumerate_triangulations_stream(
        spec, [&](const PlaneGraph& g) { got.push_back({canonical_code(g), g}); }, opts, stats);
    std::sort(got.begin(), got.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<PlaneGraph> out;
    out.reserve(got.size());
    for (auto& [code, g] : got) out.push_back(std::move(g));
    return out;
}

uint64_t count_triangulations(const DegreeSpec& spec, const GenOptions& opts, GenStats* stats) {
    return enumerate_triangulations_stream(spec, [](const PlaneGraph&) {}, opts, stats);
}

std::vector<PlaneGraph> enumerate_all_triangulations(int v, const GenOptions& opts) {
    std::vector<std::pair<CanonicalCode, PlaneGraph>> got;
    detail::split_engine_run(
        nullptr, v, [&](const PlaneGraph& g) { got.push_back({canonical_code(g), g}); }, opts,
        nullptr);
    std::sort(got.begin(), got.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<PlaneGraph> out;
    out.reserve(got.size());
    for (auto& [code, g] : got) out.push_back(std::move(g));
    return out;
}

uint64_t count_all_triangulations(int v, const GenOptions& opts) {
    return detail::split_engine_run(nullptr, v, [](const PlaneGraph&) {}, opts, nullptr);
}

} // namespace pg
