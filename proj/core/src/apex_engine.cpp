#include <algorithm>
#include <set>

#include "pg/disc.hpp"
#include "pg/generator.hpp"

// Big-vertex completion engine: pick an apex degree m (the largest
// exceptional degree), and enumerate the triangulated discs that remain
// after deleting such a vertex.  The disc boundary is the apex link, so
// boundary vertices carry target degree minus one; every other degree is
// assigned from the remaining pool when a vertex's star completes.  Each
// target triangulation shows up once per boundary labeling; canonical
// codes collapse them.  Count equivalence against the splitting engine is
// part of the test suite.

namespace pg {
namespace detail {

namespace {

constexpr int MAXDEG = 64;

class ApexClient : public DiscClient {
public:
    ApexClient(const DegreeSpec& spec, int apex_degree,
               const std::function<void(const PlaneGraph&)>& sink, const GenOptions& opts,
               GenStats* stats)
        : spec_(spec), m_(apex_degree), sink_(sink), opts_(opts), stats_(stats) {
        pool_[5] = spec.five_count();
        for (auto [d, k] : spec.exceptional) pool_[d] += k;
        pool_[m_] -= 1; // the apex itself
        max_pool_ = 5;
        for (int d = 0; d < MAXDEG; ++d)
            if (pool_[d] > 0) max_pool_ = std::max(max_pool_, d);
    }

    uint64_t emitted() const { return emitted_; }

    void on_node() override {
        ++nodes_;
        if (opts_.counters) opts_.counters->children.fetch_add(1, std::memory_order_relaxed);
    }

    bool close_interior(int deg) override { return take(deg); }
    void undo_close_interior(int deg) override { put(deg); }
    bool close_boundary(int, int deg) override { return take(deg + 1); }
    void undo_close_boundary(int, int deg) override { put(deg + 1); }
    int interior_open_cap() const override { return max_pool_; }
    int boundary_open_cap() const override { return max_pool_ - 1; }

    void emit(int vertex_count, const std::vector<std::array<int, 3>>& faces) override {
        const int apex = vertex_count;
        std::vector<std::vector<VertexId>> all;
        all.reserve(faces.size() + m_);
        for (const auto& f : faces) all.push_back({f[0], f[1], f[2]});
        for (int i = 0; i < m_; ++i) all.push_back({apex, i, (i + 1) % m_});
        PlaneGraph g = plane_graph_from_faces(vertex_count + 1, all);
        if (g.degree_sequence() != spec_.full_multiset())
            throw GraphError("apex engine produced wrong degree multiset");
        CanonicalCode code = canonical_code(g);
        if (!seen_.insert(code.bytes).second) return;
        ++emitted_;
        if (opts_.counters) opts_.counters->emitted.fetch_add(1, std::memory_order_relaxed);
        sink_(g);
    }

    void finish() {
        if (stats_) {
            stats_->children_examined += nodes_;
            stats_->emitted += emitted_;
        }
    }

private:
    bool take(int deg) {
        if (deg < 3 || deg >= MAXDEG || pool_[deg] == 0) return false;
        if (--pool_[deg] == 0 && deg == max_pool_)
            while (max_pool_ > 0 && pool_[max_pool_] == 0) --max_pool_;
        return true;
    }
    void put(int deg) {
        ++pool_[deg];
        max_pool_ = std::max(max_pool_, deg);
    }

    const DegreeSpec& spec_;
    const int m_;
    const std::function<void(const PlaneGraph&)>& sink_;
    const GenOptions& opts_;
    GenStats* stats_;
    int pool_[MAXDEG] = {};
    int max_pool_ = 5;
    std::set<std::vector<uint8_t>> seen_;
    uint64_t emitted_ = 0;
    uint64_t nodes_ = 0;
};

} // namespace

uint64_t apex_engine_run(const DegreeSpec& spec,
                         const std::function<void(const PlaneGraph&)>& sink,
                         const GenOptions& opts, GenStats* stats) {
    spec.validate();
    int apex_degree = 5;
    for (auto [d, k] : spec.exceptional) {
        (void)k;
        apex_degree = std::max(apex_degree, d);
    }
    const int interior = spec.total_vertices - 1 - apex_degree;
    if (interior < 0) throw InfeasibleSpec("apex degree exceeds available vertices");
    ApexClient client(spec, apex_degree, sink, opts, stats);
    enumerate_discs(apex_degree, interior, client);
    client.finish();
    return client.emitted();
}

} // namespace detail
} // namespace pg
