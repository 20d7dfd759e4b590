#ifndef ZETAGRAPH_CANON_HPP
#define ZETAGRAPH_CANON_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetagraph/bigint.hpp"
#include "zetagraph/graph.hpp"

namespace zetagraph {

// Canonical labeling by individualization-refinement with automorphism
// pruning, for graphs on up to 64 vertices. The canonical representative is
// the labeling minimizing the row-major adjacency bit string; two graphs are
// isomorphic iff their canonical strings are equal.

struct CanonResult {
    std::vector<int> canon_order;                  // position -> original vertex
    std::string canonical_g6;
    std::vector<std::vector<int>> aut_generators;  // vertex -> vertex
    std::vector<int> orbit;                        // orbit representative per vertex
    Int aut_order = 1;
};

struct CanonicalForm {
    std::string g6;
    Int aut_order = 1;
    bool operator==(const CanonicalForm& o) const { return g6 == o.g6; }
};

namespace detail {

inline int uf_find(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}
inline void uf_union(std::vector<int>& p, int a, int b) {
    a = uf_find(p, a);
    b = uf_find(p, b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
}

class Canonizer {
public:
    Canonizer(const std::vector<std::uint64_t>& adj, int n) : n_(n), adj_(adj) {}

    void run() {
        for (int i = 0; i < n_; ++i) lab_[i] = i;
        std::fill(is_start_.begin(), is_start_.begin() + n_ + 1, 0);
        is_start_[0] = 1;
        is_start_[n_] = 1;
        ncells_ = 1;
        queue_.clear();
        queue_.push_back(0);
        prefix_.clear();
        search();
    }

    std::vector<int> best_lab() const { return {best_lab_.begin(), best_lab_.begin() + n_}; }
    const std::vector<std::vector<int>>& gens() const { return gens_; }

private:
    int n_;
    const std::vector<std::uint64_t>& adj_;
    std::array<int, 64> lab_{};
    std::array<std::uint8_t, 65> is_start_{};
    int ncells_ = 0;
    std::vector<int> queue_;
    std::vector<int> prefix_;

    bool have_first_ = false, have_best_ = false;
    std::array<std::uint64_t, 64> first_rows_{}, best_rows_{}, cur_rows_{};
    std::array<int, 64> first_lab_{}, best_lab_{};
    std::vector<std::vector<int>> gens_;
    std::set<std::vector<int>> gen_set_;

    struct State {
        std::array<int, 64> lab;
        std::array<std::uint8_t, 65> is_start;
        int ncells;
    };

    int next_start(int s) const {
        ++s;
        while (!is_start_[s]) ++s;
        return s;
    }

    // Equitable refinement against the queued splitter cells. Cells only ever
    // split, so a queued start position always names a current cell.
    void refine() {
        while (!queue_.empty() && ncells_ < n_) {
            int s = queue_.back();
            queue_.pop_back();
            int e = next_start(s);
            std::uint64_t splitter = 0;
            for (int i = s; i < e; ++i) splitter |= std::uint64_t(1) << lab_[i];

            // snapshot of current cells; processing one cell never touches another
            int scan = 0;
            std::vector<std::pair<int, int>> cells;
            while (scan < n_) {
                int end = next_start(scan);
                if (end - scan >= 2) cells.emplace_back(scan, end);
                scan = end;
            }
            for (auto [a, b] : cells) {
                int cnt[64];
                int mn = 65, mx = -1;
                for (int i = a; i < b; ++i) {
                    cnt[i - a] = std::popcount(adj_[lab_[i]] & splitter);
                    mn = std::min(mn, cnt[i - a]);
                    mx = std::max(mx, cnt[i - a]);
                }
                if (mn == mx) continue;
                // stable counting sort by count, ascending
                int tmp[64];
                int size = b - a;
                for (int i = 0; i < size; ++i) tmp[i] = lab_[a + i];
                int write = a;
                for (int c = mn; c <= mx; ++c) {
                    int frag_start = write;
                    for (int i = 0; i < size; ++i)
                        if (cnt[i] == c) lab_[write++] = tmp[i];
                    if (frag_start != write) {
                        if (frag_start != a) {
                            is_start_[frag_start] = 1;
                            ++ncells_;
                        }
                        queue_.push_back(frag_start);
                    }
                }
            }
        }
        queue_.clear();
    }

    void search() {
        refine();
        if (ncells_ == n_) {
            leaf();
            return;
        }
        // first smallest non-singleton cell
        int best_a = -1, best_sz = n_ + 1;
        int scan = 0;
        while (scan < n_) {
            int end = next_start(scan);
            if (end - scan >= 2 && end - scan < best_sz) {
                best_sz = end - scan;
                best_a = scan;
            }
            scan = end;
        }
        int a = best_a, b = a + best_sz;
        std::vector<int> cand(lab_.begin() + a, lab_.begin() + b);
        std::sort(cand.begin(), cand.end());

        State saved{lab_, is_start_, ncells_};
        std::vector<int> tried;
        for (int v : cand) {
            if (!tried.empty()) {
                std::vector<int> uf(n_);
                for (int i = 0; i < n_; ++i) uf[i] = i;
                for (const auto& g : gens_) {
                    bool fixes = true;
                    for (int p : prefix_)
                        if (g[p] != p) {
                            fixes = false;
                            break;
                        }
                    if (!fixes) continue;
                    for (int i = 0; i < n_; ++i) uf_union(uf, i, g[i]);
                }
                bool skip = false;
                for (int u : tried)
                    if (uf_find(uf, u) == uf_find(uf, v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            tried.push_back(v);

            lab_ = saved.lab;
            is_start_ = saved.is_start;
            ncells_ = saved.ncells;
            // individualize v at the front of its cell
            int p = a;
            while (lab_[p] != v) ++p;
            std::rotate(lab_.begin() + a, lab_.begin() + p, lab_.begin() + p + 1);
            is_start_[a + 1] = 1;
            ++ncells_;
            queue_.clear();
            queue_.push_back(a);

            prefix_.push_back(v);
            search();
            prefix_.pop_back();
        }
        lab_ = saved.lab;
        is_start_ = saved.is_start;
        ncells_ = saved.ncells;
    }

    void leaf() {
        for (int i = 0; i < n_; ++i) {
            std::uint64_t row = 0;
            const std::uint64_t ai = adj_[lab_[i]];
            for (int j = 0; j < n_; ++j) row = (row << 1) | ((ai >> lab_[j]) & 1u);
            cur_rows_[i] = row;
        }
        auto cmp = [&](const std::array<std::uint64_t, 64>& x, const std::array<std::uint64_t, 64>& y) {
            for (int i = 0; i < n_; ++i) {
                if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
            }
            return 0;
        };
        if (!have_first_) {
            have_first_ = true;
            first_rows_ = cur_rows_;
            first_lab_ = lab_;
        } else if (cmp(cur_rows_, first_rows_) == 0) {
            add_aut(first_lab_);
        }
        if (!have_best_ || cmp(cur_rows_, best_rows_) < 0) {
            have_best_ = true;
            best_rows_ = cur_rows_;
            best_lab_ = lab_;
        } else if (cmp(cur_rows_, best_rows_) == 0) {
            add_aut(best_lab_);
        }
    }

    void add_aut(const std::array<int, 64>& other_lab) {
        std::vector<int> g(n_);
        bool ident = true;
        for (int i = 0; i < n_; ++i) {
            g[lab_[i]] = other_lab[i];
            if (g[lab_[i]] != lab_[i]) ident = false;
        }
        if (ident) return;
        if (gen_set_.insert(g).second) gens_.push_back(std::move(g));
    }
};

// |group| generated by gens, via a deterministic Schreier-Sims chain.
inline Int perm_group_order(int n, std::vector<std::vector<int>> gens) {
    Int order = 1;
    for (int p = 0; p < n && !gens.empty(); ++p) {
        bool moved = false;
        for (const auto& g : gens)
            if (g[p] != p) {
                moved = true;
                break;
            }
        if (!moved) continue;

        std::vector<std::vector<int>> transversal(n);
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i;
        transversal[p] = id;
        std::vector<int> frontier{p};
        std::vector<int> orbit{p};
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                int y = g[x];
                if (!transversal[y].empty()) continue;
                std::vector<int> t(n);
                for (int i = 0; i < n; ++i) t[i] = g[transversal[x][i]];
                transversal[y] = std::move(t);
                frontier.push_back(y);
                orbit.push_back(y);
            }
        }
        order *= static_cast<long long>(orbit.size());

        std::set<std::vector<int>> next_set;
        for (int x : orbit) {
            for (const auto& g : gens) {
                int y = g[x];
                std::vector<int> inv(n);
                for (int i = 0; i < n; ++i) inv[transversal[y][i]] = i;
                std::vector<int> s(n);
                bool ident = true;
                for (int i = 0; i < n; ++i) {
                    s[i] = inv[g[transversal[x][i]]];
                    if (s[i] != i) ident = false;
                }
                if (!ident) next_set.insert(std::move(s));
            }
        }
        gens.assign(next_set.begin(), next_set.end());
    }
    return order;
}

}  // namespace detail

inline CanonResult canonize(const Graph& g, bool with_aut_order = true) {
    const int n = g.order();
    if (n > 64) throw std::invalid_argument("canonize: n <= 64 required");
    CanonResult r;
    if (n == 0) {
        r.canonical_g6 = g6_encode(g);
        return r;
    }
    auto adj = g.rows64();
    detail::Canonizer c(adj, n);
    c.run();
    r.canon_order = c.best_lab();
    r.canonical_g6 = g6_encode(g.relabeled(r.canon_order));
    r.aut_generators = c.gens();
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    for (const auto& gen : r.aut_generators)
        for (int i = 0; i < n; ++i) detail::uf_union(uf, i, gen[i]);
    r.orbit.resize(n);
    for (int i = 0; i < n; ++i) r.orbit[i] = detail::uf_find(uf, i);
    if (with_aut_order) r.aut_order = detail::perm_group_order(n, r.aut_generators);
    return r;
}

inline CanonicalForm canonical_form(const Graph& g) {
    CanonResult r = canonize(g, true);
    return CanonicalForm{r.canonical_g6, r.aut_order};
}

inline Graph canonical_graph(const Graph& g) {
    if (g.order() == 0) return g;
    return g.relabeled(canonize(g, false).canon_order);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonize(a, false).canonical_g6 == canonize(b, false).canonical_g6;
}

}  // namespace zetagraph

#endif
