#ifndef ZETAGRAPH_GRAPH_HPP
#define ZETAGRAPH_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zetagraph {

// Simple undirected graph: order n plus a symmetric bit-packed adjacency
// matrix with zero diagonal. Vertex ids are 0-based and contiguous; the null
// graph (n = 0) is a first-class value.
class Graph {
public:
    Graph() : n_(0), words_(0) {}
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }
    static Graph complete(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }
    static Graph cycle(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    }
    static Graph path(int n) {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    static Graph star(int n) {
        Graph g(n);
        for (int i = 1; i < n; ++i) g.add_edge(0, i);
        return g;
    }

    int order() const { return n_; }

    bool edge(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return (bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set_edge(int i, int j, bool on) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw std::invalid_argument("Graph: self-loops are not representable");
        std::uint64_t mi = std::uint64_t(1) << (j & 63);
        std::uint64_t mj = std::uint64_t(1) << (i & 63);
        if (on) {
            bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= mi;
            bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= mj;
        } else {
            bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] &= ~mi;
            bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] &= ~mj;
        }
    }
    void add_edge(int i, int j) { set_edge(i, j, true); }
    void toggle_edge(int i, int j) { set_edge(i, j, !edge(i, j)); }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
        return d;
    }
    long long size() const {
        long long twice = 0;
        for (std::uint64_t w : bits_) twice += std::popcount(w);
        return twice / 2;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (edge(v, u)) out.push_back(u);
        return out;
    }

    // Adjacency rows as single 64-bit words; only valid for n <= 64 (all the
    // search-heavy algorithms live there).
    std::vector<std::uint64_t> rows64() const {
        if (n_ > 64) throw std::invalid_argument("Graph: rows64 needs n <= 64");
        std::vector<std::uint64_t> r(n_, 0);
        for (int v = 0; v < n_; ++v) r[v] = words_ ? bits_[static_cast<std::size_t>(v) * words_] : 0;
        return r;
    }

    Graph relabeled(const std::vector<int>& position_to_vertex) const {
        Graph g(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (edge(position_to_vertex[i], position_to_vertex[j])) g.add_edge(i, j);
        return g;
    }

    Graph induced(const std::vector<int>& keep) const {
        Graph g(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    Graph delete_vertex(int v) const {
        check_vertex(v);
        std::vector<int> keep;
        for (int u = 0; u < n_; ++u)
            if (u != v) keep.push_back(u);
        return induced(keep);
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex id out of range");
    }
};

// ---------------------------------------------------------------------------
// graph6 codec. One graph per line in catalog files; byte layout follows the
// standard: header is a single byte n+63 for n <= 62, or '~' followed by
// three bytes (18 bits, big-endian 6-bit groups) for 63 <= n <= 258047.
// Larger sizes (the 8-byte header form) are rejected. Edge bits cover the
// upper triangle column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
// ---------------------------------------------------------------------------

inline Graph g6_decode(std::string_view s) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (s.size() - pos < k) throw std::invalid_argument("graph6: truncated input");
    };
    auto val = [&](std::size_t i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: character out of range 63..126");
        return static_cast<int>(c - 63);
    };

    need(1);
    long long n;
    if (s[0] == '~') {
        need(2);
        if (s[1] == '~') throw std::invalid_argument("graph6: 8-byte size header not supported");
        need(4);
        n = (static_cast<long long>(val(1)) << 12) | (val(2) << 6) | val(3);
        if (n < 63) throw std::invalid_argument("graph6: malformed length header");
        pos = 4;
    } else {
        n = val(0);
        pos = 1;
    }
    if (n > 258047) throw std::invalid_argument("graph6: order exceeds 4-byte header range");

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nchars = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos < nchars) throw std::invalid_argument("graph6: insufficient edge characters");
    if (s.size() - pos > nchars) throw std::invalid_argument("graph6: trailing characters");

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n && bit < nbits; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int v = val(pos + static_cast<std::size_t>(bit / 6));
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

inline std::string g6_encode(const Graph& g) {
    const long long n = g.order();
    if (n > 258047) throw std::invalid_argument("graph6: order exceeds 4-byte header range");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// Structural operations.
// ---------------------------------------------------------------------------

inline Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.edge(i, j)) c.add_edge(i, j);
    return c;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int i = 0; i < a.order(); ++i)
        for (int j = i + 1; j < a.order(); ++j)
            if (a.edge(i, j)) g.add_edge(i, j);
    for (int i = 0; i < b.order(); ++i)
        for (int j = i + 1; j < b.order(); ++j)
            if (b.edge(i, j)) g.add_edge(a.order() + i, a.order() + j);
    return g;
}

inline Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < b.order(); ++j) g.add_edge(i, a.order() + j);
    return g;
}

inline Graph cone(const Graph& g, int r = 1) {
    if (r < 1) throw std::invalid_argument("cone: r must be >= 1");
    return join(g, Graph(r));
}

// Union of g and h after identifying vertex x of g with vertex y of h.
// Vertices of g keep their ids; h's vertices follow in order, y omitted.
inline Graph coalesce(const Graph& g, int x, const Graph& h, int y) {
    if (x < 0 || x >= g.order() || y < 0 || y >= h.order())
        throw std::out_of_range("coalesce: vertex id out of range");
    Graph out(g.order() + h.order() - 1);
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.edge(i, j)) out.add_edge(i, j);
    auto map_h = [&](int v) { return v == y ? x : g.order() + v - (v > y ? 1 : 0); };
    for (int i = 0; i < h.order(); ++i)
        for (int j = i + 1; j < h.order(); ++j)
            if (h.edge(i, j)) out.add_edge(map_h(i), map_h(j));
    return out;
}

// Pruned graph: iteratively delete degree-0 and degree-1 vertices until the
// result is md2 or null. `kept` maps the new ids back to the original ones
// (relative order preserved).
struct PruneResult {
    Graph graph;
    std::vector<int> kept;
};

inline PruneResult prune(const Graph& g) {
    const int n = g.order();
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            int d = 0;
            for (int u = 0; u < n; ++u)
                if (alive[u] && u != v && g.edge(v, u)) ++d;
            if (d <= 1) {
                alive[v] = false;
                changed = true;
            }
        }
    }
    PruneResult r;
    for (int v = 0; v < n; ++v)
        if (alive[v]) r.kept.push_back(v);
    r.graph = g.induced(r.kept);
    return r;
}

// Sorted non-increasing vertex degrees.
using DegreeSequence = std::vector<int>;

inline DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

struct GraphClassification {
    bool is_md1 = false;
    bool is_md2 = false;
    bool is_connected = false;
    bool is_bipartite = false;
    bool is_circuit = false;
    int component_count = 0;
    int bipartite_component_count = 0;
};

inline GraphClassification classify(const Graph& g) {
    const int n = g.order();
    GraphClassification c;
    int mindeg = n == 0 ? 2 : n;
    for (int v = 0; v < n; ++v) mindeg = std::min(mindeg, g.degree(v));
    c.is_md1 = mindeg >= 1;
    c.is_md2 = mindeg >= 2;

    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        ++c.component_count;
        bool bip = true;
        std::vector<int> stack{s};
        color[s] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (!g.edge(v, u)) continue;
                if (color[u] < 0) {
                    color[u] = color[v] ^ 1;
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    bip = false;
                }
            }
        }
        if (bip) ++c.bipartite_component_count;
    }
    c.is_connected = (c.component_count == 1) || n == 0;
    c.is_bipartite = (c.bipartite_component_count == c.component_count);
    c.is_circuit = n >= 3 && c.component_count == 1 && mindeg == 2 &&
                   [&] {
                       for (int v = 0; v < n; ++v)
                           if (g.degree(v) != 2) return false;
                       return true;
                   }();
    return c;
}

// Exact counts of unoriented simple cycles by length 3..L (L <= 8, brute
// force: each cycle is enumerated once from its smallest vertex with the
// orientation fixed by second < last).
inline std::vector<long long> count_short_cycles(const Graph& g, int L) {
    if (L > 8) throw std::invalid_argument("count_short_cycles: L capped at 8");
    std::vector<long long> counts(L >= 3 ? L - 2 : 0, 0);
    if (L < 3) return counts;
    const int n = g.order();
    std::vector<int> path;
    std::vector<bool> used(n, false);

    auto dfs = [&](auto&& self, int start, int v) -> void {
        for (int u = start + 1; u < n; ++u) {
            if (!g.edge(v, u)) continue;
            if (used[u]) continue;
            path.push_back(u);
            used[u] = true;
            int len = static_cast<int>(path.size()) + 1;  // cycle length if u closes to start
            if (len >= 3 && g.edge(u, start) && path.front() < path.back()) ++counts[len - 3];
            if (static_cast<int>(path.size()) + 1 < L) self(self, start, u);
            used[u] = false;
            path.pop_back();
        }
    };

    for (int start = 0; start < n; ++start) {
        path.clear();
        dfs(dfs, start, start);
    }
    return counts;
}

// ---------------------------------------------------------------------------
// Dangling-cover classification: for n >= 5, every vertex lies in the pruned
// graph of G or of its complement except for exactly three graph families and
// their complements.
// ---------------------------------------------------------------------------

enum class DanglingFamily { star, star_depth2, star_plus_point };

struct DanglingCover {
    bool covered = true;
    std::optional<DanglingFamily> family;
    bool complemented = false;
};

inline const char* dangling_family_name(DanglingFamily f) {
    switch (f) {
        case DanglingFamily::star: return "star";
        case DanglingFamily::star_depth2: return "star with one depth-2 node";
        case DanglingFamily::star_plus_point: return "star plus isolated point";
    }
    return "?";
}

inline std::optional<DanglingFamily> match_dangling_family(const Graph& g) {
    const int n = g.order();
    DegreeSequence d = degree_sequence(g);
    auto is = [&](std::vector<int> want) {
        std::sort(want.begin(), want.end(), std::greater<int>());
        return d == want;
    };
    std::vector<int> star{n - 1};
    star.insert(star.end(), n - 1, 1);
    if (is(star)) return DanglingFamily::star;
    std::vector<int> depth2{n - 2, 2};
    depth2.insert(depth2.end(), n - 2, 1);
    if (is(depth2)) return DanglingFamily::star_depth2;
    std::vector<int> plus{n - 2};
    plus.insert(plus.end(), n - 2, 1);
    plus.push_back(0);
    if (is(plus)) return DanglingFamily::star_plus_point;
    return std::nullopt;
}

inline DanglingCover dangling_cover_classify(const Graph& g) {
    if (g.order() < 5) throw std::invalid_argument("dangling_cover_classify: requires n >= 5");
    const int n = g.order();
    std::vector<bool> in_core(n, false);
    for (int v : prune(g).kept) in_core[v] = true;
    for (int v : prune(complement(g)).kept) in_core[v] = true;
    DanglingCover out;
    for (int v = 0; v < n; ++v)
        if (!in_core[v]) out.covered = false;
    if (out.covered) return out;
    if (auto f = match_dangling_family(g)) {
        out.family = f;
        return out;
    }
    if (auto f = match_dangling_family(complement(g))) {
        out.family = f;
        out.complemented = true;
        return out;
    }
    throw std::logic_error("dangling_cover_classify: uncovered graph outside the known families");
}

}  // namespace zetagraph

#endif
