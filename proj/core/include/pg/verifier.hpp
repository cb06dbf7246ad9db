#pragma once

#include <string>
#include <vector>

#include "pg/generator.hpp"
#include "pg/plane_graph.hpp"

namespace pg {

enum class Verdict { holds, violated, preconditions_not_met };

struct LemmaReport {
    std::string lemma;
    std::string instance;
    std::vector<std::pair<std::string, long>> quantities;
    Verdict verdict = Verdict::preconditions_not_met;
    std::string detail;

    std::string line() const;
    bool holds() const { return verdict == Verdict::holds; }
};

/// Interior-point identity for a triangulation vertex whose link is an
/// induced cycle: I(v) = p_v + 6 with p_v = sum over x != v of deg(x) - 5.
/// (The displayed form of p_v in the source drops the "- 5"; the corrected
/// reading, forced by 2|E| = p_v + 6n + 5 I(v), is what is checked here.)
LemmaReport check_interior_count(const PlaneGraph& g, VertexId v);

struct FaceTriangulation {
    PlaneGraph graph;
    std::vector<Edge> chords;
};

/// Inserts m-3 noncrossing chords into face f (size m), producing m-2
/// triangles: chord the first corner when its ends are non-adjacent,
/// otherwise fan from the blocked corner's middle vertex.  Throws
/// NoValidChordSet when the fan is blocked too (cannot happen on valid
/// inputs).
FaceTriangulation triangulate_face(const PlaneGraph& g, int face_index);

/// Edge/vertex bounds for a triangulation of an n-cycle (all faces
/// triangles except the outer one): |E| = 3k + 2n - 3 always; with all
/// interior degrees >= 5 also k >= s - 4n + 6, the small-n floors
/// k >= 9 - n / 10 - n, and the strengthened floors (n=3: k>=9, n=4: k>=8,
/// n=5 with k>1: k>=6).
LemmaReport check_cycle_bounds(const PlaneGraph& h, int outer_face);

/// Chord-freeness of the outer cycle under the boundary-degree hypotheses,
/// and distinctness of the interior apexes of the boundary triangles under
/// the companion hypotheses.  Reports preconditions_not_met when neither
/// hypothesis list applies.
LemmaReport check_no_chords(const PlaneGraph& h, int outer_face);

/// Number of 3-connected plane triangulations with one vertex of degree n
/// and all others of degree 5 (spec {n} on n + 7 vertices); expected 0 for
/// n != 5 and 1 for n = 5.
uint64_t verify_unique_degree_theorem(int n, const GenOptions& opts = {});

/// Independent disc brute force: isomorphism classes (outer face marked)
/// of triangulations of an m-gon with exactly `interior` inside vertices,
/// each of degree >= min_interior_degree.
int count_disc_triangulations(int boundary_len, int interior, int min_interior_degree);

} // namespace pg
