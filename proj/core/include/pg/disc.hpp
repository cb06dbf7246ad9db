#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pg/plane_graph.hpp"

namespace pg {

/// Exhaustive enumeration of triangulated discs (plane triangulations of an
/// m-gon, triangles inside).  Boundary vertices carry fixed labels
/// 0..m-1 in cycle order; interior vertices get labels m.. in creation
/// order, which makes the decomposition canonical: each disc with labeled
/// boundary is reached exactly once.  Callers identify isomorphic results
/// themselves (boundary rotations come out as distinct leaves).
///
/// The client controls degree budgets.  Degrees reported for boundary
/// vertices are disc degrees (the two boundary edges included).
class DiscClient {
public:
    virtual ~DiscClient() = default;
    // Called once per search node (for progress accounting).
    virtual void on_node() {}
    // Vertex's star is complete; consume a degree slot or veto the branch.
    virtual bool close_interior(int deg) = 0;
    virtual void undo_close_interior(int deg) = 0;
    virtual bool close_boundary(int idx, int deg) = 0;
    virtual void undo_close_boundary(int idx, int deg) = 0;
    // Largest degree a still-open vertex may reach (inclusive).
    virtual int interior_open_cap() const = 0;
    virtual int boundary_open_cap() const = 0;
    // Completed disc: triangle list over vertex ids, n = m + interior.
    virtual void emit(int vertex_count, const std::vector<std::array<int, 3>>& faces) = 0;
};

void enumerate_discs(int boundary_len, int interior_exact, DiscClient& client);

/// Helper for clients: assemble the disc plus its outer m-gon face into a
/// plane graph (the outer face index is returned through outer_face).
PlaneGraph disc_to_plane_graph(int boundary_len, int vertex_count,
                               const std::vector<std::array<int, 3>>& faces, int* outer_face);

} // namespace pg
