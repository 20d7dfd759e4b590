#ifndef ZETAGRAPH_GENERATE_HPP
#define ZETAGRAPH_GENERATE_HPP

#include <algorithm>
#include <climits>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetagraph/canon.hpp"
#include "zetagraph/graph.hpp"
#include "zetagraph/parallel.hpp"

namespace zetagraph {

enum class GenFilter { all, connected, md2, md1 };

inline GenFilter parse_gen_filter(const std::string& s) {
    if (s == "all") return GenFilter::all;
    if (s == "connected") return GenFilter::connected;
    if (s == "md2") return GenFilter::md2;
    if (s == "md1") return GenFilter::md1;
    throw std::invalid_argument("unknown generation filter: " + s);
}

struct GenOptions {
    GenFilter filter = GenFilter::all;
    int m_min = 0;
    int m_max = INT_MAX;
    unsigned threads = 1;
};

namespace detail {

// Orbit representatives (minimal masks) of Aut(parent) acting on vertex
// subsets, by BFS over the 2^k masks.
inline std::vector<std::uint32_t> subset_orbit_reps(int k, const std::vector<std::vector<int>>& gens) {
    const std::uint32_t total = std::uint32_t(1) << k;
    std::vector<std::uint32_t> reps;
    if (gens.empty()) {
        reps.resize(total);
        for (std::uint32_t m = 0; m < total; ++m) reps[m] = m;
        return reps;
    }
    std::vector<bool> seen(total, false);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t m = 0; m < total; ++m) {
        if (seen[m]) continue;
        reps.push_back(m);
        seen[m] = true;
        stack.assign(1, m);
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                std::uint32_t y = 0;
                std::uint32_t rest = x;
                while (rest) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    y |= std::uint32_t(1) << g[v];
                }
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
    }
    return reps;
}

// Children of one canonical parent that survive the canonical-deletion test,
// returned already relabeled to canonical form.
inline std::vector<Graph> augment_parent(const Graph& parent, int m_max) {
    const int k = parent.order();
    CanonResult pc = canonize(parent, false);
    std::vector<std::uint32_t> reps = subset_orbit_reps(k, pc.aut_generators);
    std::vector<Graph> out;
    const long long pm = parent.size();
    for (std::uint32_t s : reps) {
        if (pm + std::popcount(s) > m_max) continue;
        Graph child(k + 1);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (parent.edge(i, j)) child.add_edge(i, j);
        std::uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            child.add_edge(v, k);
        }
        CanonResult cc = canonize(child, false);
        int canon_last = cc.canon_order[k];
        if (cc.orbit[canon_last] == cc.orbit[k]) out.push_back(child.relabeled(cc.canon_order));
    }
    return out;
}

inline bool passes_filter(const Graph& g, const GenOptions& opt) {
    long long m = g.size();
    if (m < opt.m_min || m > opt.m_max) return false;
    if (opt.filter == GenFilter::all) return true;
    GraphClassification c = classify(g);
    switch (opt.filter) {
        case GenFilter::connected: return c.is_connected;
        case GenFilter::md2: return c.is_md2;
        case GenFilter::md1: return c.is_md1;
        default: return true;
    }
}

}  // namespace detail

// Isomorph-free exhaustive generation by canonical augmentation: extend each
// parent by one vertex over Aut(parent)-orbit representatives of attachment
// sets, and accept a child iff its new vertex lies in the same Aut(child)
// orbit as the canonically deleted vertex. Exactly one representative per
// isomorphism class survives; the result is sorted by (m, canonical graph6)
// so runs concatenate and shard reproducibly.
inline std::vector<Graph> generate_all(int n, const GenOptions& opt = {}) {
    if (n < 0) throw std::invalid_argument("generate_all: negative order");
    std::vector<Graph> level;
    if (n == 0) return level;
    level.push_back(Graph(1));
    for (int k = 1; k < n; ++k) {
        // edge counts only grow along an augmentation path, so m_max prunes
        std::vector<std::vector<Graph>> buckets(level.size());
        parallel_for(level.size(), opt.threads, [&](std::size_t i) {
            buckets[i] = detail::augment_parent(level[i], opt.m_max);
        });
        std::vector<Graph> next;
        for (auto& b : buckets)
            for (auto& g : b) next.push_back(std::move(g));
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto& g : level)
        if (detail::passes_filter(g, opt)) out.push_back(std::move(g));
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        long long ma = a.size(), mb = b.size();
        if (ma != mb) return ma < mb;
        return g6_encode(a) < g6_encode(b);
    });
    return out;
}

inline std::vector<std::string> generate_catalog_g6(int n, const GenOptions& opt = {}) {
    std::vector<std::string> out;
    for (const Graph& g : generate_all(n, opt)) out.push_back(g6_encode(g));
    return out;
}

// Newline-delimited graph6 catalog files.
inline std::vector<Graph> read_catalog(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(g6_decode(line));
    }
    return out;
}

inline std::vector<Graph> read_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    return read_catalog(in);
}

}  // namespace zetagraph

#endif
