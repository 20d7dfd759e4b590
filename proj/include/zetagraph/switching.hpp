#ifndef ZETAGRAPH_SWITCHING_HPP
#define ZETAGRAPH_SWITCHING_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "zetagraph/canon.hpp"
#include "zetagraph/graph.hpp"
#include "zetagraph/zeta.hpp"

namespace zetagraph {

// ---------------------------------------------------------------------------
// Godsil-McKay switching. A (k+1)-GM structure is an ordered list of blocks
// B_1..B_k plus the remainder C, such that (i) each induced G_{B_i} is
// regular, (ii) each B_ij has constant row and column sums, (iii) every
// vertex of C has exactly 0, b_i/2 or b_i neighbours in each B_i. The starred
// condition additionally requires every vertex of a block to have the same
// degree in G. Switching complements the half-columns.
// ---------------------------------------------------------------------------

struct SwitchingPartition {
    std::vector<std::vector<int>> blocks;

    std::vector<int> remainder(int n) const {
        std::vector<bool> used(n, false);
        for (const auto& b : blocks)
            for (int v : b) used[v] = true;
        std::vector<int> c;
        for (int v = 0; v < n; ++v)
            if (!used[v]) c.push_back(v);
        return c;
    }
};

namespace detail {

inline void validate_partition(const Graph& g, const SwitchingPartition& p) {
    std::vector<bool> used(g.order(), false);
    if (p.blocks.empty()) throw std::invalid_argument("switching: empty partition");
    for (const auto& b : p.blocks) {
        if (b.empty()) throw std::invalid_argument("switching: empty block");
        for (int v : b) {
            if (v < 0 || v >= g.order() || used[v]) throw std::invalid_argument("switching: malformed partition");
            used[v] = true;
        }
    }
}

inline int neighbours_in(const Graph& g, int v, const std::vector<int>& set) {
    int c = 0;
    for (int u : set) c += g.edge(v, u);
    return c;
}

}  // namespace detail

inline bool check_gm_condition(const Graph& g, const SwitchingPartition& p) {
    detail::validate_partition(g, p);
    const auto c = p.remainder(g.order());
    // (i) induced blocks regular
    for (const auto& b : p.blocks) {
        int d0 = detail::neighbours_in(g, b[0], b);
        for (int v : b)
            if (detail::neighbours_in(g, v, b) != d0) return false;
    }
    // (ii) constant row and column sums between blocks
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < p.blocks.size(); ++j) {
            const auto &bi = p.blocks[i], &bj = p.blocks[j];
            int r0 = detail::neighbours_in(g, bi[0], bj);
            for (int v : bi)
                if (detail::neighbours_in(g, v, bj) != r0) return false;
            int c0 = detail::neighbours_in(g, bj[0], bi);
            for (int v : bj)
                if (detail::neighbours_in(g, v, bi) != c0) return false;
        }
    // (iii) columns of each N_i
    for (const auto& b : p.blocks) {
        int bi = static_cast<int>(b.size());
        for (int v : c) {
            int t = detail::neighbours_in(g, v, b);
            if (t != 0 && t != bi && 2 * t != bi) return false;
        }
    }
    return true;
}

inline bool check_gm_star(const Graph& g, const SwitchingPartition& p) {
    if (!check_gm_condition(g, p)) return false;
    for (const auto& b : p.blocks) {
        int d0 = g.degree(b[0]);
        for (int v : b)
            if (g.degree(v) != d0) return false;
    }
    return true;
}

inline Graph gm_switch(const Graph& g, const SwitchingPartition& p) {
    if (!check_gm_condition(g, p)) throw std::invalid_argument("gm_switch: GM condition violated");
    Graph out = g;
    const auto c = p.remainder(g.order());
    for (const auto& b : p.blocks) {
        int bi = static_cast<int>(b.size());
        if (bi % 2) continue;  // half-columns need an even block
        for (int v : c) {
            if (2 * detail::neighbours_in(g, v, b) == bi)
                for (int u : b) out.toggle_edge(u, v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive (k+1)-GM pair search, k <= 2. Pruning for k = 2 follows the
// usual counting conventions: B_1 even of size >= 4 (sizes restricted by
// block_sizes when given), |B_2| > 1 and gcd(|B_1|, |B_2|) > 1. Only
// switches not isomorphic to the input are returned, deduplicated by
// canonical form.
// ---------------------------------------------------------------------------

struct GmPairResult {
    SwitchingPartition partition;
    Graph switched;
};

struct GmSearchOptions {
    std::vector<int> block_sizes;  // allowed |B_1|; empty = every even size >= 4
    bool star_only = false;
    int k_max = 1;
};

namespace detail {

template <class F>
void for_each_subset(int n, int k, F&& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

inline std::vector<GmPairResult> find_gm_pairs(const Graph& g, const GmSearchOptions& opt = {}) {
    const int n = g.order();
    std::vector<int> sizes = opt.block_sizes;
    if (sizes.empty())
        for (int b = 4; b <= n; b += 2) sizes.push_back(b);

    std::string canon_g = canonize(g, false).canonical_g6;
    std::vector<GmPairResult> out;
    std::set<std::string> seen;

    auto try_partition = [&](const SwitchingPartition& p) {
        bool ok = opt.star_only ? check_gm_star(g, p) : check_gm_condition(g, p);
        if (!ok) return;
        Graph sw = gm_switch(g, p);
        if (sw == g) return;
        std::string cs = canonize(sw, false).canonical_g6;
        if (cs == canon_g) return;
        if (seen.insert(cs).second) out.push_back({p, sw});
    };

    for (int b1 : sizes) {
        if (b1 < 4 || b1 % 2 || b1 > n) continue;
        detail::for_each_subset(n, b1, [&](const std::vector<int>& bverts) {
            SwitchingPartition p;
            p.blocks.push_back(bverts);
            try_partition(p);
            if (opt.k_max < 2) return;
            std::vector<int> rest;
            {
                std::vector<bool> used(n, false);
                for (int v : bverts) used[v] = true;
                for (int v = 0; v < n; ++v)
                    if (!used[v]) rest.push_back(v);
            }
            for (int b2 = 2; b2 <= static_cast<int>(rest.size()); ++b2) {
                if (std::gcd(b1, b2) == 1) continue;
                detail::for_each_subset(static_cast<int>(rest.size()), b2, [&](const std::vector<int>& idx2) {
                    SwitchingPartition p2;
                    p2.blocks.push_back(bverts);
                    std::vector<int> b2verts;
                    for (int i : idx2) b2verts.push_back(rest[i]);
                    p2.blocks.push_back(b2verts);
                    try_partition(p2);
                });
            }
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// The intertwiner construction: two adjacency matrices assembled from 4x4
// blocks that differ only by transposing the off-diagonal blocks B_ij, with
// all-zero/all-one columns toward an arbitrary tail C. The resulting pair
// shares phi_ADJ although no single matrix conjugates one generalized
// adjacency pencil to the other.
// ---------------------------------------------------------------------------

struct ConstructionSpec {
    int k = 0;
    std::vector<int> b_choice;                       // size k, values 0..4
    std::vector<int> bij_choice;                     // size k(k-1)/2, row-major i<j, values 0..15
    Graph c;                                         // adjacency of the tail
    std::vector<std::vector<std::uint8_t>> n_cols;   // n_cols[i][v] in {0,1}
};

namespace detail {

// 2x2 pattern codes: Z = zero, I = identity, J = all ones, W = J - I.
enum : int { PZ = 0, PI = 1, PJ = 2, PW = 3 };

inline int pat_entry(int code, int r, int c) {
    switch (code) {
        case PZ: return 0;
        case PI: return r == c;
        case PJ: return 1;
        case PW: return r != c;
    }
    return 0;
}

struct Block4 {
    int q[2][2];  // quadrant pattern codes
    int entry(int r, int c) const { return pat_entry(q[r / 2][c / 2], r % 2, c % 2); }
};

inline const std::vector<Block4>& b_table() {
    static const std::vector<Block4> t = {
        {{{PZ, PZ}, {PZ, PZ}}}, {{{PZ, PI}, {PI, PW}}}, {{{PZ, PJ}, {PJ, PZ}}},
        {{{PW, PZ}, {PZ, PW}}}, {{{PW, PJ}, {PJ, PW}}},
    };
    return t;
}

inline const std::vector<Block4>& bij_table() {
    static const std::vector<Block4> t = {
        {{{PZ, PZ}, {PZ, PZ}}}, {{{PJ, PJ}, {PJ, PJ}}}, {{{PZ, PJ}, {PJ, PZ}}}, {{{PJ, PZ}, {PZ, PJ}}},
        {{{PI, PZ}, {PZ, PI}}}, {{{PW, PZ}, {PZ, PW}}}, {{{PZ, PI}, {PW, PZ}}}, {{{PZ, PW}, {PI, PZ}}},
        {{{PI, PJ}, {PJ, PI}}}, {{{PW, PJ}, {PJ, PW}}}, {{{PJ, PW}, {PI, PJ}}}, {{{PJ, PI}, {PW, PJ}}},
        {{{PI, PI}, {PW, PI}}}, {{{PI, PW}, {PI, PI}}}, {{{PW, PI}, {PW, PW}}}, {{{PW, PW}, {PI, PW}}},
    };
    return t;
}

inline void validate_spec(const ConstructionSpec& s) {
    if (s.k < 1) throw std::invalid_argument("construction: k >= 1 required");
    if (static_cast<int>(s.b_choice.size()) != s.k) throw std::invalid_argument("construction: bad b_choice size");
    if (static_cast<int>(s.bij_choice.size()) != s.k * (s.k - 1) / 2)
        throw std::invalid_argument("construction: bad bij_choice size");
    for (int b : s.b_choice)
        if (b < 0 || b >= 5) throw std::invalid_argument("construction: block choice outside the permitted list");
    for (int b : s.bij_choice)
        if (b < 0 || b >= 16) throw std::invalid_argument("construction: B_ij choice outside the permitted list");
    if (static_cast<int>(s.n_cols.size()) != s.k) throw std::invalid_argument("construction: bad n_cols size");
    for (const auto& col : s.n_cols)
        if (static_cast<int>(col.size()) != s.c.order())
            throw std::invalid_argument("construction: N_i column count must match |C|");
}

inline Graph build_construction(const ConstructionSpec& s, bool transpose_bij) {
    const int m = s.c.order();
    const int n = 4 * s.k + m;
    Graph g(n);
    for (int i = 0; i < s.k; ++i) {
        const Block4& bi = b_table()[s.b_choice[i]];
        for (int r = 0; r < 4; ++r)
            for (int c = r + 1; c < 4; ++c)
                if (bi.entry(r, c)) g.add_edge(4 * i + r, 4 * i + c);
    }
    int idx = 0;
    for (int i = 0; i < s.k; ++i)
        for (int j = i + 1; j < s.k; ++j, ++idx) {
            const Block4& bij = bij_table()[s.bij_choice[idx]];
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    int e = transpose_bij ? bij.entry(c, r) : bij.entry(r, c);
                    if (e) g.add_edge(4 * i + r, 4 * j + c);
                }
        }
    for (int i = 0; i < s.k; ++i)
        for (int v = 0; v < m; ++v)
            if (s.n_cols[i][v])
                for (int r = 0; r < 4; ++r) g.add_edge(4 * i + r, 4 * s.k + v);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (s.c.edge(u, v)) g.add_edge(4 * s.k + u, 4 * s.k + v);
    return g;
}

}  // namespace detail

inline std::pair<Graph, Graph> new_construction(const ConstructionSpec& s) {
    detail::validate_spec(s);
    return {detail::build_construction(s, false), detail::build_construction(s, true)};
}

// Symbolic verification of (A1+xD)(P+xR) = (P+xR)(A2+xD) with P, R assembled
// from the fixed 4x4 blocks Q and S. Everything is checked over the integers
// using 2P and 2R (S is half-integral), plus det(Q+xS) = -x^2+2x-5 per block.
inline bool verify_intertwiner(const Graph& g1, const Graph& g2, const ConstructionSpec& s) {
    detail::validate_spec(s);
    const int m = s.c.order();
    const int n = 4 * s.k + m;
    if (g1.order() != n || g2.order() != n) return false;

    IntMatrix a1 = adjacency_matrix(g1), a2 = adjacency_matrix(g2);
    IntMatrix d1 = degree_matrix(g1), d2 = degree_matrix(g2);
    if (!(d1 == d2)) return false;

    // Q = [[w, w-I],[w-I, I]], 2S = [[I-w, 0],[0, w-I]] on each 4-block
    static const int q4[4][4] = {{0, 1, -1, 1}, {1, 0, 1, -1}, {-1, 1, 1, 0}, {1, -1, 0, 1}};
    static const int s4x2[4][4] = {{1, -1, 0, 0}, {-1, 1, 0, 0}, {0, 0, -1, 1}, {0, 0, 1, -1}};
    IntMatrix p2(n), r2(n);
    for (int b = 0; b < s.k; ++b)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                p2.at(4 * b + i, 4 * b + j) = 2 * q4[i][j];
                r2.at(4 * b + i, 4 * b + j) = s4x2[i][j];
            }
    for (int v = 0; v < m; ++v) p2.at(4 * s.k + v, 4 * s.k + v) = 2;

    if (!(a1 * p2 == p2 * a2)) return false;
    if (!(a1 * r2 + d1 * p2 == p2 * d1 + r2 * a2)) return false;
    if (!(d1 * r2 == r2 * d1)) return false;

    // det(2Q + x 2S) = 16 (-x^2 + 2x - 5)
    std::vector<std::vector<IntPoly>> qs(4, std::vector<IntPoly>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) qs[i][j] = IntPoly{2 * q4[i][j], s4x2[i][j]};
    IntPoly want = IntPoly{-5, 2, -1} * Int(16);
    if (polymat_det(qs, 8) != want) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Uniform-intertwiner test: does any invertible P satisfy A1 P = P A2 and
// D1 P = P D2 simultaneously? The solution space is computed exactly; a span
// of singular matrices is certified by evaluating det on an integer grid
// large enough for the degree (det is a polynomial of degree <= n in each
// grid coordinate).
// ---------------------------------------------------------------------------

struct IntertwinerSpace {
    int dimension = 0;
    bool has_invertible = false;
};

inline IntertwinerSpace uniform_intertwiner_space(const Graph& g1, const Graph& g2) {
    const int n = g1.order();
    if (g2.order() != n) throw std::invalid_argument("uniform_intertwiner_space: order mismatch");
    IntMatrix a1 = adjacency_matrix(g1), a2 = adjacency_matrix(g2);
    IntMatrix d1 = degree_matrix(g1), d2 = degree_matrix(g2);

    // rows: equations of A1 P - P A2 = 0 and D1 P - P D2 = 0; cols: P entries
    std::vector<std::vector<Int>> sys(2 * n * n, std::vector<Int>(n * n, Int(0)));
    auto pidx = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int row_a = pidx(i, j), row_d = n * n + pidx(i, j);
            for (int k = 0; k < n; ++k) {
                sys[row_a][pidx(k, j)] += a1.at(i, k);
                sys[row_a][pidx(i, k)] -= a2.at(k, j);
                sys[row_d][pidx(k, j)] += d1.at(i, k);
                sys[row_d][pidx(i, k)] -= d2.at(k, j);
            }
        }
    auto basis = integer_kernel(sys);
    IntertwinerSpace out;
    out.dimension = static_cast<int>(basis.size());
    if (basis.empty()) return out;
    if (out.dimension > 6)
        throw std::runtime_error("uniform_intertwiner_space: solution space too large for exact grid certification");

    std::vector<int> grid(out.dimension, 0);
    const int points = n + 1;
    while (true) {
        IntMatrix p(n);
        for (int b = 0; b < out.dimension; ++b) {
            if (grid[b] == 0) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) p.at(i, j) += Int(grid[b]) * basis[b][pidx(i, j)];
        }
        if (det_exact(p) != 0) {
            out.has_invertible = true;
            return out;
        }
        int b = 0;
        while (b < out.dimension && grid[b] == points - 1) grid[b++] = 0;
        if (b == out.dimension) break;
        ++grid[b];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coalescence and join cospectral families with their zeta-distinguishability
// predicates.
// ---------------------------------------------------------------------------

struct CoalescenceFamily {
    Graph g1_prime, g2_prime;
    bool cospectral_certified = false;
    bool zeta_distinguished_md2 = false;
    bool zeta_star_distinguished_md1 = false;
};

inline CoalescenceFamily coalescence_family(const Graph& g1, int x1, const Graph& g2, int x2, const Graph& gamma,
                                            int y) {
    if (charpoly(adjacency_matrix(g1)) != charpoly(adjacency_matrix(g2)))
        throw std::invalid_argument("coalescence_family: inputs are not cospectral");
    if (charpoly(adjacency_matrix(g1.delete_vertex(x1))) != charpoly(adjacency_matrix(g2.delete_vertex(x2))))
        throw std::invalid_argument("coalescence_family: vertex-deleted subgraphs are not cospectral");

    CoalescenceFamily out;
    out.g1_prime = coalesce(g1, x1, gamma, y);
    out.g2_prime = coalesce(g2, x2, gamma, y);
    out.cospectral_certified =
        charpoly(adjacency_matrix(out.g1_prime)) == charpoly(adjacency_matrix(out.g2_prime));

    auto product_over_rest = [](const Graph& g, int skip, int shift) {
        Int p = 1;
        for (int v = 0; v < g.order(); ++v)
            if (v != skip) p *= Int(g.degree(v) + shift);
        return p;
    };
    if (classify(g1).is_md2 && classify(g2).is_md2)
        out.zeta_distinguished_md2 = product_over_rest(g1, x1, -1) != product_over_rest(g2, x2, -1);
    if (classify(g1).is_md1 && classify(g2).is_md1)
        out.zeta_star_distinguished_md1 = product_over_rest(g1, x1, 0) != product_over_rest(g2, x2, 0);
    return out;
}

struct JoinFamily {
    Graph j1, j2;
    bool laplacian_cospectral = false;
    bool zeta_distinguished = false;
    IntPoly f;  // prod(d_i + x) - prod(d_i' + x)
    std::vector<int> exceptional_orders;
};

inline JoinFamily join_family(const Graph& g1, const Graph& g2, const Graph& gamma) {
    if (charpoly(laplacian(g1)) != charpoly(laplacian(g2)))
        throw std::invalid_argument("join_family: inputs are not Laplacian cospectral");
    if (degree_sequence(g1) == degree_sequence(g2))
        throw std::invalid_argument("join_family: degree sequences agree, the join predicate is vacuous");

    JoinFamily out;
    out.j1 = join(g1, gamma);
    out.j2 = join(g2, gamma);
    out.laplacian_cospectral = charpoly(laplacian(out.j1)) == charpoly(laplacian(out.j2));

    IntPoly p1 = IntPoly{1}, p2 = IntPoly{1};
    for (int v = 0; v < g1.order(); ++v) p1 = p1 * IntPoly{g1.degree(v), 1};
    for (int v = 0; v < g2.order(); ++v) p2 = p2 * IntPoly{g2.degree(v), 1};
    out.f = p1 - p2;

    // nonnegative integer roots of f: strip t^k, then test divisors of the
    // constant term
    if (!out.f.is_zero()) {
        IntPoly h = out.f;
        int zeros = 0;
        while (h.coeff(0) == 0 && !h.is_zero()) {
            h = h.div_exact(IntPoly{0, 1});
            ++zeros;
        }
        std::set<int> roots;
        if (zeros > 0) roots.insert(0);
        Int c0 = h.coeff(0);
        if (c0 < 0) c0 = -c0;
        for (Int d = 1; d * d <= c0; ++d) {
            if (c0 % d != 0) continue;
            Int q = c0 / d;
            if (h.eval(d) == 0) roots.insert(static_cast<int>(d.convert_to<long long>()));
            if (h.eval(q) == 0) roots.insert(static_cast<int>(q.convert_to<long long>()));
        }
        for (int r0 : roots) out.exceptional_orders.push_back(r0 + 1);
    }
    out.zeta_distinguished =
        !out.f.is_zero() &&
        std::find(out.exceptional_orders.begin(), out.exceptional_orders.end(), gamma.order()) ==
            out.exceptional_orders.end();
    return out;
}

// ---------------------------------------------------------------------------
// Empirical distinguishing rate for GM switches with a fixed 4-vertex regular
// block: N columns are sampled uniformly from the 8 admissible types (all
// zeros, all ones, and the six half-columns) and the labeled pair (G, ~G) is
// compared by full zeta reciprocals after a fingerprint pre-check. For md2 C
// the plain zeta is used, for md1 C the cone zeta.
// ---------------------------------------------------------------------------

struct GmRateResult {
    long long distinguished = 0;
    long long trials = 0;
    double rate() const { return trials ? static_cast<double>(distinguished) / trials : 0.0; }
};

inline GmRateResult gm_distinguishing_rate(const Graph& b, const Graph& c, long long trials, std::uint64_t seed) {
    if (b.order() != 4) throw std::invalid_argument("gm_distinguishing_rate: B must have 4 vertices");
    int breg = b.degree(0);
    for (int v = 1; v < 4; ++v)
        if (b.degree(v) != breg) throw std::invalid_argument("gm_distinguishing_rate: B must be regular");
    GraphClassification cc = classify(c);
    if (!cc.is_md1) throw std::invalid_argument("gm_distinguishing_rate: C must be md1 or md2");
    const bool use_cone = !cc.is_md2;  // md1 C: compare cone zetas

    static const int half_cols[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    const int nc = c.order();
    std::mt19937_64 rng(seed);
    GmRateResult out;
    out.trials = trials;

    for (long long t = 0; t < trials; ++t) {
        Graph g(4 + nc), gs(4 + nc);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (b.edge(i, j)) {
                    g.add_edge(i, j);
                    gs.add_edge(i, j);
                }
        for (int i = 0; i < nc; ++i)
            for (int j = i + 1; j < nc; ++j)
                if (c.edge(i, j)) {
                    g.add_edge(4 + i, 4 + j);
                    gs.add_edge(4 + i, 4 + j);
                }
        for (int v = 0; v < nc; ++v) {
            int type = static_cast<int>(rng() % 8);
            if (type == 1) {
                for (int i = 0; i < 4; ++i) {
                    g.add_edge(i, 4 + v);
                    gs.add_edge(i, 4 + v);
                }
            } else if (type >= 2) {
                const int* h = half_cols[type - 2];
                g.add_edge(h[0], 4 + v);
                g.add_edge(h[1], 4 + v);
                for (int i = 0; i < 4; ++i)
                    if (i != h[0] && i != h[1]) gs.add_edge(i, 4 + v);
            }
        }
        const Graph& ga = use_cone ? cone(g) : g;
        const Graph& gb = use_cone ? cone(gs) : gs;
        ZetaFingerprint fa = zeta_fingerprint(ga), fb = zeta_fingerprint(gb);
        bool differ = fa.n_dagger != fb.n_dagger || fa.m_dagger != fb.m_dagger ||
                      fa.special_neg1 != fb.special_neg1 || fa.special_neg2 != fb.special_neg2 ||
                      fa.special_3 != fb.special_3;
        if (!differ) differ = !(ihara_reciprocal_bass(ga).r == ihara_reciprocal_bass(gb).r);
        if (differ) ++out.distinguished;
    }
    return out;
}

}  // namespace zetagraph

#endif
