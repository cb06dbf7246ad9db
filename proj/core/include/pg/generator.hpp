#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include "pg/canonical.hpp"
#include "pg/degree_spec.hpp"
#include "pg/plane_graph.hpp"

namespace pg {

/// Live counters for long searches; may be polled from another thread.
struct ProgressCounters {
    std::atomic<uint64_t> states{0};
    std::atomic<uint64_t> children{0};
    std::atomic<uint64_t> emitted{0};
};

enum class GenEngine {
    automatic, ///< apex completion for constrained specs at larger sizes
    split,     ///< canonical-construction-path vertex splitting from K4
    apex,      ///< big-vertex removal: exhaustive disc completion + apex
};

struct GenOptions {
    int threads = 0; // 0 = hardware concurrency
    bool prune = true;
    GenEngine engine = GenEngine::automatic;
    ProgressCounters* counters = nullptr;
};

struct GenStats {
    std::vector<uint64_t> states_per_level; // index = vertex count
    uint64_t children_examined = 0;
    uint64_t emitted = 0;
};

/// Complete, isomorph-free enumeration of simple 3-connected plane
/// triangulations whose degree multiset equals the spec.  The callback may
/// run on several threads and in any order; the set of emitted graphs is
/// deterministic.  Returns the number of isomorphism classes.
uint64_t enumerate_triangulations_stream(const DegreeSpec& spec,
                                         const std::function<void(const PlaneGraph&)>& sink,
                                         const GenOptions& opts = {},
                                         GenStats* stats = nullptr);

/// Buffered variant: result sorted by canonical code (deterministic).
std::vector<PlaneGraph> enumerate_triangulations(const DegreeSpec& spec,
                                                 const GenOptions& opts = {},
                                                 GenStats* stats = nullptr);

/// Class count without materializing the graphs.
uint64_t count_triangulations(const DegreeSpec& spec, const GenOptions& opts = {},
                              GenStats* stats = nullptr);

/// Unconstrained run: every 3-connected plane triangulation on v vertices
/// (the "any" spec used by the oracle tests).  Always the split engine.
std::vector<PlaneGraph> enumerate_all_triangulations(int v, const GenOptions& opts = {});
uint64_t count_all_triangulations(int v, const GenOptions& opts = {});

namespace detail {
// Split engine entry points (exposed for engine-equivalence tests).
uint64_t split_engine_run(const DegreeSpec* spec, int unconstrained_v,
                          const std::function<void(const PlaneGraph&)>& sink,
                          const GenOptions& opts, GenStats* stats);
// Apex engine (constrained specs only).
uint64_t apex_engine_run(const DegreeSpec& spec,
                         const std::function<void(const PlaneGraph&)>& sink,
                         const GenOptions& opts, GenStats* stats);
} // namespace detail

} // namespace pg
