#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pg/errors.hpp"

namespace pg {

using VertexId = int;

// Undirected edge, normalized so that first < second.
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// A connected simple plane graph given as a rotation system: for every
/// vertex the cyclic clockwise order of its neighbors.  Faces are derived
/// by tracing darts with the rule "twin, then next in rotation", and
/// Euler's formula V - E + F = 2 is the planarity certificate.
///
/// Values are immutable after construction; all operations below are pure
/// and return new graphs.
class PlaneGraph {
public:
    // Validates all invariants (simple, symmetric, connected, genus 0).
    // Throws NonSymmetricAdjacency, LoopOrMultiEdge, Disconnected,
    // EulerViolation.
    static PlaneGraph from_rotations(std::vector<std::vector<VertexId>> rotations);

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    int edge_count() const { return edge_count_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    int degree(VertexId v) const { return static_cast<int>(rot_[v].size()); }
    const std::vector<VertexId>& rotation(VertexId v) const { return rot_[v]; }
    const std::vector<std::vector<VertexId>>& rotations() const { return rot_; }

    // Faces as vertex cycles; faces()[f][i] -> faces()[f][i+1] are the darts
    // of the face traversal.
    const std::vector<std::vector<VertexId>>& faces() const { return faces_; }
    std::vector<int> face_sizes() const;

    // Face on the left of dart (u -> v) under the tracing convention.
    int face_of_dart(VertexId u, VertexId v) const;

    bool has_edge(VertexId u, VertexId v) const;
    std::vector<Edge> edges() const;

    // Sorted non-increasing.
    std::vector<int> degree_sequence() const;

    // Position of neighbor w in rotation(v), -1 if absent.
    int rotation_index(VertexId v, VertexId w) const;

private:
    PlaneGraph() = default;
    std::vector<std::vector<VertexId>> rot_;
    std::vector<std::vector<VertexId>> faces_;
    int edge_count_ = 0;

    void trace_faces();
};

/// Planar dual: one vertex per face, one edge per edge.  Requires every
/// face size >= 3 and that no two faces share more than one edge (throws
/// DualNotSimple otherwise; a bridge shows up as a face adjacent to
/// itself).
PlaneGraph dual(const PlaneGraph& g);

/// Literal definition: V > 3 and no pair of vertices disconnects the
/// graph.  Instance sizes make the quadratic sweep fine.
bool is_three_connected(const PlaneGraph& g);

bool is_connected_after_removal(const PlaneGraph& g, std::span<const VertexId> removed);

/// Removes the given edges from the rotation system, embedding otherwise
/// preserved.  Throws EdgeNotPresent, ResultDisconnected.
PlaneGraph remove_edges(const PlaneGraph& g, std::span<const Edge> s);

/// Removes v and its incident darts; vertex ids above v shift down by one.
/// Throws ResultDisconnected if g - v is not connected.
PlaneGraph delete_vertex(const PlaneGraph& g, VertexId v);

/// Rebuilds a plane graph from an unoriented face list (each face a vertex
/// cycle).  Orients the faces consistently by region growing, then chains
/// corners into rotations.  Throws GraphError subclasses when the face set
/// is not a valid sphere embedding.
PlaneGraph plane_graph_from_faces(int vertex_count,
                                  const std::vector<std::vector<VertexId>>& face_cycles);

/// True when every face is a triangle.
bool is_triangulation(const PlaneGraph& g);

} // namespace pg
