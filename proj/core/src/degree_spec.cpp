#include "pg/degree_spec.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pg {

int DegreeSpec::five_count() const {
    int c = total_vertices;
    for (auto [d, k] : exceptional) {
        (void)d;
        c -= k;
    }
    return c;
}

int DegreeSpec::count_of(int degree) const {
    if (degree == 5) return five_count();
    for (auto [d, k] : exceptional)
        if (d == degree) return k;
    return 0;
}

std::vector<int> DegreeSpec::full_multiset() const {
    std::vector<int> out;
    for (auto [d, k] : exceptional)
        for (int i = 0; i < k; ++i) out.push_back(d);
    for (int i = 0; i < five_count(); ++i) out.push_back(5);
    std::sort(out.rbegin(), out.rend());
    return out;
}

void DegreeSpec::validate() const {
    if (total_vertices < 4) throw InfeasibleSpec("need at least 4 vertices");
    long sum = 5L * five_count();
    for (auto [d, k] : exceptional) {
        if (d == 5) throw InfeasibleSpec("exceptional degree 5 is implied, not listed");
        if (d < 3) throw InfeasibleSpec("degree below 3");
        if (d > total_vertices - 1) throw InfeasibleSpec("degree exceeds V-1");
        if (k <= 0) throw InfeasibleSpec("non-positive count");
        sum += static_cast<long>(d) * k;
    }
    if (five_count() < 0) throw InfeasibleSpec("exceptional counts exceed vertex count");
    if (sum != 6L * total_vertices - 12)
        throw InfeasibleSpec("degree sum " + std::to_string(sum) + " != 6V-12 for " + format());
}

DegreeSpec DegreeSpec::parse(const std::string& text) {
    DegreeSpec spec;
    auto colon = text.find(':');
    try {
        spec.total_vertices = std::stoi(text.substr(0, colon));
    } catch (...) {
        throw InfeasibleSpec("bad spec literal: " + text);
    }
    if (colon != std::string::npos && colon + 1 < text.size()) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto x = item.find('x');
            int d, k = 1;
            try {
                d = std::stoi(item.substr(0, x));
                if (x != std::string::npos) k = std::stoi(item.substr(x + 1));
            } catch (...) {
                throw InfeasibleSpec("bad spec item: " + item);
            }
            bool merged = false;
            for (auto& [ed, ek] : spec.exceptional)
                if (ed == d) {
                    ek += k;
                    merged = true;
                }
            if (!merged) spec.exceptional.push_back({d, k});
        }
    }
    std::sort(spec.exceptional.begin(), spec.exceptional.end());
    return spec;
}

std::string DegreeSpec::format() const {
    std::string s = std::to_string(total_vertices);
    if (!exceptional.empty()) {
        s += ':';
        bool first = true;
        for (auto [d, k] : exceptional) {
            if (!first) s += ',';
            first = false;
            s += std::to_string(d) + "x" + std::to_string(k);
        }
    }
    return s;
}

} // namespace pg
