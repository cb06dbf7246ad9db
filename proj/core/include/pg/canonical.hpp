#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pg/plane_graph.hpp"

namespace pg {

/// Labeling-invariant identifier of a plane graph up to relabeling,
/// rotation of the cyclic orders, and global reflection.  Two graphs get
/// equal codes exactly when they are isomorphic as plane graphs with the
/// mirror image identified.
struct CanonicalCode {
    std::vector<uint8_t> bytes;
    int scheme_version = 1;

    friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
        if (auto c = a.bytes <=> b.bytes; c != 0) return c;
        return a.scheme_version <=> b.scheme_version;
    }
    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

    std::string hex() const;
};

/// Lexicographic minimum over all starting darts and both orientations of
/// a breadth-first dart-labeling trace.
CanonicalCode canonical_code(const PlaneGraph& g);

/// Same, but the starting darts are restricted to the marked face (and its
/// mirror traversal), so equal codes mean isomorphism carrying marked face
/// to marked face.
CanonicalCode canonical_code_marked(const PlaneGraph& g, int face_index);

} // namespace pg
