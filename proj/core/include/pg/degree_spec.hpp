#pragma once

#include <string>
#include <vector>

#include "pg/errors.hpp"

namespace pg {

/// Target degree multiset for triangulation generation: explicit counts for
/// the degrees other than 5; every remaining vertex has degree 5.
struct DegreeSpec {
    int total_vertices = 0;
    std::vector<std::pair<int, int>> exceptional; // (degree != 5, count), degree-sorted

    int five_count() const;
    int count_of(int degree) const; // includes the implied fives
    std::vector<int> full_multiset() const; // sorted non-increasing

    // Handshake feasibility for triangulations: sum deg = 6 V - 12, all
    // degrees >= 3, five count >= 0.  Throws InfeasibleSpec.
    void validate() const;

    // "18:6x2,7x2"; bare degree means count 1.
    static DegreeSpec parse(const std::string& text);
    std::string format() const;

    friend bool operator==(const DegreeSpec&, const DegreeSpec&) = default;
    friend auto operator<=>(const DegreeSpec&, const DegreeSpec&) = default;
};

} // namespace pg
