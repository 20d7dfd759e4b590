#ifndef ZETAGRAPH_WALK_ORACLE_HPP
#define ZETAGRAPH_WALK_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "zetagraph/graph.hpp"
#include "zetagraph/zeta.hpp"

namespace zetagraph {

// Brute-force enumeration of closed geodesics and closed walks, used as the
// ground-truth oracle for the determinant formulas. Deliberately naive: each
// class is counted once via its lexicographically smallest rotation, and
// primitivity is decided by the rotation period of the edge sequence, not by
// divisor subtraction.

namespace detail {

struct WalkArena {
    std::vector<std::pair<int, int>> edges;  // oriented, rev(e) = e ^ 1
    std::vector<std::vector<int>> out;       // out[v] = oriented edges with tail v
    long long steps = 0;
    long long budget = 0;

    explicit WalkArena(const Graph& g, long long step_budget) : budget(step_budget) {
        out.resize(g.order());
        for (int i = 0; i < g.order(); ++i)
            for (int j = i + 1; j < g.order(); ++j)
                if (g.edge(i, j)) {
                    out[i].push_back(static_cast<int>(edges.size()));
                    edges.emplace_back(i, j);
                    out[j].push_back(static_cast<int>(edges.size()));
                    edges.emplace_back(j, i);
                }
    }

    void tick() {
        if (++steps > budget) throw std::runtime_error("walk oracle: enumeration budget exceeded");
    }
};

// Smallest rotation period; the sequence is a canonical class representative
// iff no proper rotation is lexicographically smaller.
inline bool canonical_primitive(const std::vector<int>& seq, int* period_out) {
    const int l = static_cast<int>(seq.size());
    int period = l;
    for (int r = 1; r < l; ++r) {
        int cmp = 0;
        for (int i = 0; i < l; ++i) {
            int a = seq[(i + r) % l], b = seq[i];
            if (a != b) {
                cmp = a < b ? -1 : 1;
                break;
            }
        }
        if (cmp < 0) return false;  // a smaller rotation exists elsewhere
        if (cmp == 0) {
            period = r;
            break;
        }
    }
    if (period_out) *period_out = period;
    if (period < l) {
        if (l % period != 0) throw std::logic_error("walk oracle: rotation period does not divide length");
        return false;  // non-primitive: a power of the length-period subwalk
    }
    return true;
}

}  // namespace detail

inline GeodesicCensus enumerate_geodesics(const Graph& g, int max_len, long long step_budget = 500000000LL) {
    if (max_len > 12) throw std::invalid_argument("enumerate_geodesics: L capped at 12");
    if (max_len < 3) throw std::invalid_argument("enumerate_geodesics: L >= 3 required");
    detail::WalkArena ar(g, step_budget);
    GeodesicCensus c;
    c.max_len = max_len;
    c.a.assign(max_len + 1, Int(0));

    std::vector<int> seq;
    auto dfs = [&](auto&& self, int first, int cur) -> void {
        ar.tick();
        int len = static_cast<int>(seq.size());
        if (ar.edges[cur].second == ar.edges[first].first && len >= 3 && cur != (first ^ 1)) {
            int period = 0;
            if (detail::canonical_primitive(seq, &period)) c.a[len] += 1;
        }
        if (len == max_len) return;
        for (int nxt : ar.out[ar.edges[cur].second]) {
            if (nxt == (cur ^ 1)) continue;  // no backtracking
            seq.push_back(nxt);
            self(self, first, nxt);
            seq.pop_back();
        }
    };
    for (int e = 0; e < static_cast<int>(ar.edges.size()); ++e) {
        seq.assign(1, e);
        dfs(dfs, e, e);
    }
    return c;
}

inline BartholdiCensus enumerate_closed_walks_cbc(const Graph& g, int max_len, long long step_budget = 500000000LL) {
    if (max_len > 8) throw std::invalid_argument("enumerate_closed_walks_cbc: L capped at 8");
    if (max_len < 1) throw std::invalid_argument("enumerate_closed_walks_cbc: L >= 1 required");
    detail::WalkArena ar(g, step_budget);
    BartholdiCensus c;
    c.max_len = max_len;
    c.a.assign(max_len + 1, {});
    for (int l = 0; l <= max_len; ++l) c.a[l].assign(l + 1, Int(0));

    std::vector<int> seq;
    auto dfs = [&](auto&& self, int first, int cur) -> void {
        ar.tick();
        int len = static_cast<int>(seq.size());
        if (ar.edges[cur].second == ar.edges[first].first) {
            int period = 0;
            if (detail::canonical_primitive(seq, &period)) {
                // cyclic bump count: backtracks at 1 <= i < len plus the tail
                // indicator, i.e. positions where the cyclic successor is the
                // reversal
                int cbc = 0;
                for (int i = 0; i < len; ++i)
                    if (seq[(i + 1) % len] == (seq[i] ^ 1)) ++cbc;
                c.a[len][cbc] += 1;
            }
        }
        if (len == max_len) return;
        for (int nxt : ar.out[ar.edges[cur].second]) {
            seq.push_back(nxt);
            self(self, first, nxt);
            seq.pop_back();
        }
    };
    for (int e = 0; e < static_cast<int>(ar.edges.size()); ++e) {
        seq.assign(1, e);
        dfs(dfs, e, e);
    }
    return c;
}

// Truncated product expansion prod (1 - u^c t^l)^{-a(l;c)} of an enumerated
// census, for comparison against the determinant-formula series.
inline TruncSeries2 census_to_series(const BartholdiCensus& c, int total_degree) {
    TruncSeries2 z = TruncSeries2::one(total_degree);
    for (int l = 1; l <= c.max_len && l <= total_degree; ++l) {
        for (int cc = 0; cc < static_cast<int>(c.a[l].size()); ++cc) {
            if (c.a[l][cc] == 0 || l + cc > total_degree) continue;
            long long count = c.a[l][cc].convert_to<long long>();
            // (1 - u^c t^l)^{-1} = sum_k u^{ck} t^{lk}
            TruncSeries2 factor(total_degree);
            factor.at(0, 0) = 1;
            for (int k = 1; k * l + k * cc <= total_degree; ++k) factor.at(k * l, k * cc) = 1;
            z = z.mul(factor.pow(static_cast<unsigned>(count)));
        }
    }
    return z;
}

}  // namespace zetagraph

#endif
