#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pg/degree_spec.hpp"
#include "pg/generator.hpp"
#include "pg/patterns.hpp"

namespace pg {

struct SearchLogEntry {
    int surplus = 0;
    DegreeSpec spec;
    uint64_t triangulations = 0;
    uint64_t occurrences = 0; // normalizing edge sets found
    uint64_t accepted = 0;    // accepted derivations before isomorphism dedup

    std::string line() const; // "d= spec= triangulations= occurrences= accepted="
};

struct PgOptions {
    int threads = 0;
    GenEngine engine = GenEngine::automatic;
    bool prune = true;
    std::ostream* log_stream = nullptr; // live search-log lines
    ProgressCounters* counters = nullptr;
};

struct PgResult {
    int n = 0;
    bool exact = false;
    int pg_value = 0;           // when exact
    int lower_bound = 0;        // pg > lower_bound when not exact
    int surplus_at_minimum = -1;
    std::vector<PentagulationRecord> classes; // canonical-code sorted
    std::vector<SearchLogEntry> log;

    std::string summary() const; // "Pg(9)=21, classes=4" or "Pg(13)>25"
};

/// All degree multisets a surplus-d triangulation search must cover for an
/// n-gon: {n + a0, 5 + a1, ...} with sum ai = 2d, on n + 7 + 2d vertices.
/// Multisets are merged when the special vertex's degree coincides with
/// another entry (or with 5).
std::vector<DegreeSpec> feasible_degree_specs(int n, int d);

/// Degree-realizability filter used by the pipeline: true when some vertex
/// can take the degree-n role with the reduction demands realizable as a
/// simple graph (Erdos-Gallai).  Specs failing this cannot contain any
/// normalizing edge set.
bool spec_admits_normalizing_sets(const DegreeSpec& spec, int n);

/// Runs surpluses d = 0, 1, ... max_surplus in order; stops at the first d
/// with an accepted pentagulation.
PgResult compute_pg(int n, int max_surplus, const PgOptions& opts = {});

/// Accepted pentagulation classes at exactly surplus d, sorted by code.
std::vector<PentagulationRecord> classify_minimal(int n, int d, const PgOptions& opts = {},
                                                  std::vector<SearchLogEntry>* log = nullptr);

/// n = 5k + 3l with 0 <= l <= 4, minimal l.  Throws NoDecomposition for
/// n < 8.
std::pair<int, int> decompose_5k3l(int n);

/// The explicit pentagulation of an n-gon with 2n + k + l pentagons,
/// n >= 13.  Fully validated; throws ConstructionInvalid.
PlaneGraph construct_gn(int n);

int pg_upper_bound(int n);

} // namespace pg
