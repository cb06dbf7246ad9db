#include "pg/pg_search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>

namespace pg {

std::string SearchLogEntry::line() const {
    return "d=" + std::to_string(surplus) + " spec=" + spec.format() +
           " triangulations=" + std::to_string(triangulations) +
           " occurrences=" + std::to_string(occurrences) +
           " accepted=" + std::to_string(accepted);
}

std::string PgResult::summary() const {
    if (exact)
        return "Pg(" + std::to_string(n) + ")=" + std::to_string(pg_value) +
               ", classes=" + std::to_string(classes.size());
    return "Pg(" + std::to_string(n) + ")>" + std::to_string(lower_bound);
}

namespace {

void partitions_into_parts(int total, int max_part, std::vector<int>& cur,
                           const std::function<void(const std::vector<int>&)>& f) {
    if (total == 0) {
        f(cur);
        return;
    }
    for (int part = std::min(total, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_into_parts(total - part, part, cur, f);
        cur.pop_back();
    }
}

} // namespace

std::vector<DegreeSpec> feasible_degree_specs(int n, int d) {
    const int V = n + 7 + 2 * d;
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<DegreeSpec> out;
    for (int a0 = 0; a0 <= 2 * d; ++a0) {
        const int special = n + a0;
        std::vector<int> cur;
        partitions_into_parts(2 * d - a0, 2 * d - a0, cur, [&](const std::vector<int>& parts) {
            std::map<int, int> mult;
            if (special != 5) ++mult[special];
            for (int p : parts) ++mult[5 + p];
            std::vector<std::pair<int, int>> exc(mult.begin(), mult.end());
            if (!seen.insert(exc).second) return;
            DegreeSpec spec;
            spec.total_vertices = V;
            spec.exceptional = std::move(exc);
            try {
                spec.validate();
            } catch (const InfeasibleSpec&) {
                return;
            }
            out.push_back(std::move(spec));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Erdos-Gallai: is the multiset realizable as the degrees of a simple graph?
bool erdos_gallai(std::vector<int> degs) {
    std::sort(degs.rbegin(), degs.rend());
    while (!degs.empty() && degs.back() == 0) degs.pop_back();
    long sum = 0;
    for (int d : degs) sum += d;
    if (sum % 2) return false;
    const int m = static_cast<int>(degs.size());
    for (int k = 1; k <= m; ++k) {
        long lhs = 0;
        for (int i = 0; i < k; ++i) lhs += degs[i];
        long rhs = static_cast<long>(k) * (k - 1);
        for (int i = k; i < m; ++i) rhs += std::min(degs[i], k);
        if (lhs > rhs) return false;
    }
    return true;
}

} // namespace

bool spec_admits_normalizing_sets(const DegreeSpec& spec, int n) {
    std::vector<int> multiset = spec.full_multiset();
    std::set<int> tried;
    for (size_t i = 0; i < multiset.size(); ++i) {
        const int special = multiset[i];
        if (special < n || !tried.insert(special).second) continue;
        std::vector<int> needs{special - n};
        bool ok = true;
        for (size_t j = 0; j < multiset.size(); ++j) {
            if (j == i) continue;
            if (multiset[j] < 5) {
                ok = false;
                break;
            }
            if (multiset[j] > 5) needs.push_back(multiset[j] - 5);
        }
        if (ok && erdos_gallai(needs)) return true;
    }
    return false;
}

namespace {

struct SpecOutcome {
    SearchLogEntry entry;
    std::vector<PentagulationRecord> accepted;
};

SpecOutcome run_spec(int n, int d, const DegreeSpec& spec, const PgOptions& opts) {
    SpecOutcome outcome;
    outcome.entry.surplus = d;
    outcome.entry.spec = spec;

    GenOptions gopts;
    gopts.threads = opts.threads;
    gopts.engine = opts.engine;
    gopts.prune = opts.prune;
    gopts.counters = opts.counters;

    std::vector<PlaneGraph> triangulations = enumerate_triangulations(spec, gopts);
    outcome.entry.triangulations = triangulations.size();
    for (const PlaneGraph& h : triangulations) {
        std::vector<std::pair<EdgeSet, std::vector<VertexId>>> sets;
        try {
            sets = find_normalizing_edge_sets_with_specials(h, n);
        } catch (const DegreeInfeasible&) {
            continue;
        }
        outcome.entry.occurrences += sets.size();
        for (const auto& [s, specials] : sets) {
            if (n == 5) {
                for (VertexId w : specials) {
                    DeriveResult r = derive_pentagulation(h, s, n, w);
                    if (r.accepted()) {
                        ++outcome.entry.accepted;
                        outcome.accepted.push_back(std::move(*r.record));
                    }
                }
            } else {
                DeriveResult r = derive_pentagulation(h, s, n);
                if (r.accepted()) {
                    ++outcome.entry.accepted;
                    outcome.accepted.push_back(std::move(*r.record));
                }
            }
        }
    }
    return outcome;
}

std::vector<PentagulationRecord> dedup_records(std::vector<PentagulationRecord> recs) {
    std::sort(recs.begin(), recs.end(),
              [](const PentagulationRecord& a, const PentagulationRecord& b) {
                  return a.code < b.code;
              });
    std::vector<PentagulationRecord> out;
    for (auto& r : recs)
        if (out.empty() || !(out.back().code == r.code)) out.push_back(std::move(r));
    return out;
}

} // namespace

std::vector<PentagulationRecord> classify_minimal(int n, int d, const PgOptions& opts,
                                                  std::vector<SearchLogEntry>* log) {
    std::vector<PentagulationRecord> accepted;
    for (const DegreeSpec& spec : feasible_degree_specs(n, d)) {
        if (!spec_admits_normalizing_sets(spec, n)) continue;
        SpecOutcome outcome = run_spec(n, d, spec, opts);
        if (opts.log_stream) *opts.log_stream << outcome.entry.line() << "\n";
        if (log) log->push_back(outcome.entry);
        for (auto& r : outcome.accepted) accepted.push_back(std::move(r));
    }
    return dedup_records(std::move(accepted));
}

PgResult compute_pg(int n, int max_surplus, const PgOptions& opts) {
    if (n < 3) throw GraphError("n must be at least 3");
    PgResult res;
    res.n = n;
    for (int d = 0; d <= max_surplus; ++d) {
        std::vector<SearchLogEntry> log;
        std::vector<PentagulationRecord> classes = classify_minimal(n, d, opts, &log);
        for (auto& e : log) res.log.push_back(e);
        if (!classes.empty()) {
            res.exact = true;
            res.pg_value = n + 6 + 2 * d;
            res.surplus_at_minimum = d;
            res.classes = std::move(classes);
            return res;
        }
    }
    res.exact = false;
    res.lower_bound = n + 6 + 2 * max_surplus;
    return res;
}

std::pair<int, int> decompose_5k3l(int n) {
    if (n < 8) throw NoDecomposition("n = " + std::to_string(n) + ": need n >= 8");
    for (int l = 0; l <= 4; ++l) {
        int rest = n - 3 * l;
        if (rest >= 0 && rest % 5 == 0) return {rest / 5, l};
    }
    throw NoDecomposition("unreachable for n >= 8");
}

int pg_upper_bound(int n) {
    if (n < 13) throw NoDecomposition("upper-bound construction needs n >= 13");
    auto [k, l] = decompose_5k3l(n);
    return 2 * n + k + l;
}

} // namespace pg
