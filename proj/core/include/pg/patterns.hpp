#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pg/canonical.hpp"
#include "pg/plane_graph.hpp"

namespace pg {

/// Sorted list of normalized edges; the unit in which occurrences and
/// removal candidates are counted.
using EdgeSet = std::vector<Edge>;

/// One catalog entry: the subgraph whose edges are removed to drop every
/// degree to 5 except one vertex left at degree n.  Degrees are already
/// instantiated at a concrete n.
struct SurplusPattern {
    std::string id;          // P1.i, T2.i..T2.v, T3.1i..T3.5ii
    std::string paper_label; // (i), 2(iii), ...
    int surplus = 0;
    int n = 0;
    std::vector<int> node_degrees;                 // required degree per node
    std::vector<std::pair<int, int>> edges_to_remove; // node index pairs
    std::vector<std::vector<int>> components;      // disjoint-union parts
    bool degree_collision = false; // same exceptional multiset as another entry

    std::vector<int> exceptional_multiset() const; // node degrees != 5, sorted desc
};

/// The 2 / 5 / 14 patterns for surplus 1 / 2 / 3, instantiated at n.
/// Entries whose exceptional degree multisets coincide at this n are
/// flagged (e.g. 2(iii) and 4(iii) at n = 3).
std::vector<SurplusPattern> pattern_catalog(int surplus, int n);

/// All occurrences of the pattern in h, reported and deduplicated as
/// removable edge sets.  An occurrence maps pattern nodes to distinct
/// vertices with exactly the required degrees and all pattern edges
/// present; parts are vertex-disjoint.
std::vector<EdgeSet> find_pattern_occurrences(const PlaneGraph& h, const SurplusPattern& pattern);

/// Pattern-agnostic ground truth: all edge sets S such that deleting S
/// leaves every vertex at degree 5 except one at degree n.  Throws
/// DegreeInfeasible when no vertex can play the degree-n role.
std::vector<EdgeSet> find_normalizing_edge_sets(const PlaneGraph& h, int n);

/// Same, with the vertices that can play the degree-n role for each set
/// (several only when n = 5).
std::vector<std::pair<EdgeSet, std::vector<VertexId>>>
find_normalizing_edge_sets_with_specials(const PlaneGraph& h, int n);

/// A validated pentagulation together with its provenance.
struct PentagulationRecord {
    PlaneGraph graph;
    int n = 0;
    int pentagon_count = 0;
    int surplus = 0;
    int ngon_face = -1;   // the distinguished face (marked face for n = 5)
    CanonicalCode code;   // marked code for n = 5, plain otherwise
    CanonicalCode source_code; // triangulation it came from
    EdgeSet removed;
};

struct DeriveResult {
    std::optional<PentagulationRecord> record;
    std::string rejection; // non-empty iff no record

    bool accepted() const { return record.has_value(); }
};

/// Removes s from h, takes the dual, and validates it end to end: simple
/// dual, 3-connected, all faces size 5 except one of size n.  Pattern
/// presence alone is not sufficient; this validation is the ground truth.
/// For n = 5 the distinguished face is the dual face of `special`
/// (required there, ignored otherwise).  Throws PreconditionViolated when
/// s is not a normalizing set.
DeriveResult derive_pentagulation(const PlaneGraph& h, const EdgeSet& s, int n,
                                  std::optional<VertexId> special = std::nullopt);

} // namespace pg
