#ifndef ZETAGRAPH_ZETA_HPP
#define ZETAGRAPH_ZETA_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetagraph/graph.hpp"
#include "zetagraph/intmatrix.hpp"
#include "zetagraph/intpoly.hpp"

namespace zetagraph {

// ---------------------------------------------------------------------------
// Matrices attached to a graph.
// ---------------------------------------------------------------------------

inline IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j)
            if (i != j && g.edge(i, j)) a.at(i, j) = 1;
    return a;
}

inline IntMatrix degree_matrix(const Graph& g) {
    IntMatrix d(g.order());
    for (int i = 0; i < g.order(); ++i) d.at(i, i) = g.degree(i);
    return d;
}

inline IntMatrix laplacian(const Graph& g) { return degree_matrix(g) - adjacency_matrix(g); }
inline IntMatrix signless_laplacian(const Graph& g) { return degree_matrix(g) + adjacency_matrix(g); }

// ---------------------------------------------------------------------------
// Oriented edge (Hashimoto) matrix: 2m x 2m over oriented edges; entry (i,j)
// is 1 iff head(e_i) = tail(e_j) and e_j != e_i^{-1}. Oriented edges 2i and
// 2i+1 are the two orientations of undirected edge i, edges in lexicographic
// (tail, head) order, so reverse(e) = e ^ 1.
// ---------------------------------------------------------------------------

struct HashimotoMatrix {
    std::vector<std::pair<int, int>> oriented_edges;  // index -> (tail, head)
    IntMatrix t;
};

inline HashimotoMatrix hashimoto_matrix(const Graph& g) {
    HashimotoMatrix h;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.edge(i, j)) {
                h.oriented_edges.emplace_back(i, j);
                h.oriented_edges.emplace_back(j, i);
            }
    const int m2 = static_cast<int>(h.oriented_edges.size());
    h.t = IntMatrix(m2);
    for (int i = 0; i < m2; ++i)
        for (int j = 0; j < m2; ++j) {
            if (j == (i ^ 1)) continue;
            if (h.oriented_edges[i].second == h.oriented_edges[j].first) h.t.at(i, j) = 1;
        }
    return h;
}

// ---------------------------------------------------------------------------
// Ihara zeta reciprocal R(t) = Z_{G_dagger}(t)^{-1} and its special values.
// special_neg1 = det(D+A) and special_neg2 = det(4D+2A-3I), both on the
// pruned graph: these are the (1-t^2)^(m-n)-corrected evaluations of R at
// t = -1 and t = -2 (equal to R(-1), R(-2) when m = n on the core).
// ---------------------------------------------------------------------------

struct ZetaProfile {
    int n_dagger = 0;
    int m_dagger = 0;
    IntPoly r = IntPoly{1};
    Int special_neg1 = 1;
    Int special_neg2 = 1;
};

namespace detail {

inline IntPoly bass_pencil_det(const Graph& core) {
    const int n = core.order();
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j)
                m[i][j] = IntPoly{1, 0, core.degree(i) - 1};
            else if (core.edge(i, j))
                m[i][j] = IntPoly{0, -1};
        }
    }
    return polymat_det(m, 2 * n);
}

inline Int det_special(const Graph& core, long long dcoef, long long acoef, long long icoef) {
    IntMatrix m(core.order());
    for (int i = 0; i < core.order(); ++i) {
        m.at(i, i) = Int(dcoef) * core.degree(i) + icoef;
        for (int j = 0; j < core.order(); ++j)
            if (i != j && core.edge(i, j)) m.at(i, j) = acoef;
    }
    return det_exact(std::move(m));
}

}  // namespace detail

// Bass route: R(t) = (1-t^2)^(m-n) det(I - tA + t^2(D-I)) on the pruned graph.
inline ZetaProfile ihara_reciprocal_bass(const Graph& g) {
    PruneResult pr = prune(g);
    ZetaProfile z;
    z.n_dagger = pr.graph.order();
    z.m_dagger = static_cast<int>(pr.graph.size());
    if (z.n_dagger == 0) return z;
    IntPoly det = detail::bass_pencil_det(pr.graph);
    IntPoly one_minus_t2{1, 0, -1};
    z.r = det * one_minus_t2.pow(static_cast<unsigned>(z.m_dagger - z.n_dagger));
    z.special_neg1 = detail::det_special(pr.graph, 1, 1, 0);
    z.special_neg2 = detail::det_special(pr.graph, 4, 2, -3);
    return z;
}

// Hashimoto route: det(I - tT) on the pruned graph, computed independently of
// the Bass pencil through the 2m-dimensional determinant.
inline IntPoly ihara_reciprocal_hashimoto(const Graph& g) {
    PruneResult pr = prune(g);
    HashimotoMatrix h = hashimoto_matrix(pr.graph);
    const int d = h.t.dim();
    if (d == 0) return IntPoly{1};
    std::vector<std::vector<IntPoly>> m(d, std::vector<IntPoly>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j)
                m[i][j] = IntPoly{1};
            if (h.t.at(i, j) == 1) m[i][j] = m[i][j] - IntPoly{0, 1};
        }
    return polymat_det(m, d);
}

// The census sieve key (n_dagger, 2m_dagger, corrected specials), computed
// from two integer determinants without building R. r_eval(s) reattaches the
// (1-s^2)^(m-n) factor, giving the literal value R(s).
struct ZetaFingerprint {
    int n_dagger = 0;
    int m_dagger = 0;
    Int special_neg1 = 1;  // det(D+A) on the core
    Int special_neg2 = 1;  // det(4D+2A-3I) on the core
    Int special_3 = 1;     // det(9D-3A-8I) on the core

    Int r_at_neg1() const { return n_dagger == m_dagger ? special_neg1 : Int(0); }
    Int r_at_neg2() const { return ipow(Int(-3), static_cast<unsigned>(m_dagger - n_dagger)) * special_neg2; }
    Int r_at_3() const { return ipow(Int(-8), static_cast<unsigned>(m_dagger - n_dagger)) * special_3; }

    std::string str() const {
        std::ostringstream os;
        os << '(' << n_dagger << ',' << 2 * m_dagger << ',' << special_neg1 << ',' << special_neg2 << ')';
        return os.str();
    }
};

inline ZetaFingerprint zeta_fingerprint(const Graph& g) {
    PruneResult pr = prune(g);
    ZetaFingerprint f;
    f.n_dagger = pr.graph.order();
    f.m_dagger = static_cast<int>(pr.graph.size());
    if (f.n_dagger == 0) return f;
    f.special_neg1 = detail::det_special(pr.graph, 1, 1, 0);
    f.special_neg2 = detail::det_special(pr.graph, 4, 2, -3);
    f.special_3 = detail::det_special(pr.graph, 9, -3, -8);
    return f;
}

// ---------------------------------------------------------------------------
// Geodesic census via trace inversion: N_l = tr(T^l) counts closed geodesics
// of length l, N_l = sum_{d | l} d a(d), so Moebius inversion over divisors
// recovers a(l) = (1/l) sum_{d | l} mu(l/d) N_d. The division by l must be
// exact; a remainder is a bug trap.
// ---------------------------------------------------------------------------

struct GeodesicCensus {
    int max_len = 0;
    std::vector<Int> a;  // index = length; zero below 3

    Int operator()(int l) const {
        if (l < 0 || l > max_len) throw std::out_of_range("GeodesicCensus: length out of range");
        return a[l];
    }
};

namespace detail {

inline std::vector<int> moebius_upto(int n) {
    std::vector<int> mu(n + 1, 1);
    std::vector<bool> comp(n + 1, false);
    std::vector<int> primes;
    for (int i = 2; i <= n; ++i) {
        if (!comp[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (int p : primes) {
            if (static_cast<long long>(i) * p > n) break;
            comp[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

}  // namespace detail

inline GeodesicCensus geodesic_census_from_traces(const Graph& g, int max_len) {
    if (max_len < 3) throw std::invalid_argument("geodesic census: L >= 3 required");
    PruneResult pr = prune(g);
    HashimotoMatrix h = hashimoto_matrix(pr.graph);
    GeodesicCensus c;
    c.max_len = max_len;
    c.a.assign(max_len + 1, Int(0));
    if (h.t.dim() == 0) return c;
    std::vector<Int> traces(max_len + 1, Int(0));
    IntMatrix power = h.t;
    traces[1] = power.trace();
    for (int l = 2; l <= max_len; ++l) {
        power = power * h.t;
        traces[l] = power.trace();
    }
    std::vector<int> mu = detail::moebius_upto(max_len);
    for (int l = 3; l <= max_len; ++l) {
        Int s = 0;
        for (int d = 1; d <= l; ++d)
            if (l % d == 0) s += mu[l / d] * traces[d];
        if (s % l != 0) throw std::logic_error("geodesic census: non-exact Moebius inversion");
        c.a[l] = s / l;
    }
    return c;
}

// (#C3, #C4, #C5) = (a(3)/2, a(4)/2, a(5)/2).
inline std::array<Int, 3> cycle_counts_from_zeta(const GeodesicCensus& c) {
    if (c.max_len < 5) throw std::invalid_argument("cycle counts: census must reach length 5");
    std::array<Int, 3> out;
    for (int l = 3; l <= 5; ++l) {
        if (c.a[l] % 2 != 0) throw std::logic_error("cycle counts: odd class count below length 6");
        out[l - 3] = c.a[l] / 2;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structure recovered from R for a connected md2 core. Root multiplicities at
// t = 1 and t = -1 are found by repeated exact division, never numerically.
// kappa_residue_check = lim_{t->1} R(t)/(1-t)^(m-n+1); on circuits the limit
// is 0, on non-circuits |value| = 2^(m-n+1)(m-n) kappa(G) with the sign
// convention value = 2^(m-n+1)(n-m) kappa(G).
// ---------------------------------------------------------------------------

struct ZetaStructure {
    int n = 0;
    int m = 0;
    bool bipartite = false;
    bool circuit = false;
    Int kappa_residue_check = 0;
};

inline ZetaStructure structure_from_zeta(const ZetaProfile& p, bool assume_connected_md2 = true) {
    if (!assume_connected_md2 || p.r.is_zero() || p.r.coeff(0) != 1 || p.r.degree() == 0 || p.r.degree() % 2 != 0)
        throw std::invalid_argument("structure_from_zeta: input is not a connected md2 profile");
    ZetaStructure s;
    s.m = p.r.degree() / 2;
    int mult1 = p.r.root_multiplicity(1);
    int multm1 = p.r.root_multiplicity(-1);

    IntPoly circuit_r = (IntPoly{1} - IntPoly::monomial(1, s.m)).pow(2);
    s.circuit = (p.r == circuit_r);
    if (s.circuit) {
        s.n = s.m;
        s.bipartite = multm1 > 0;
    } else {
        s.n = s.m + 1 - mult1;
        if (multm1 != s.m - s.n && multm1 != s.m - s.n + 1)
            throw std::invalid_argument("structure_from_zeta: pole orders inconsistent with a connected md2 core");
        s.bipartite = (multm1 == s.m - s.n + 1);
    }

    int k = s.m - s.n + 1;
    if (mult1 > k) {
        s.kappa_residue_check = 0;
    } else if (mult1 == k) {
        IntPoly q = p.r;
        for (int i = 0; i < k; ++i) q = q.deflate(1);
        // R/(1-t)^k = (-1)^k R/(t-1)^k
        s.kappa_residue_check = (k % 2 ? -q.eval(1) : q.eval(1));
    } else {
        throw std::invalid_argument("structure_from_zeta: pole order at t=1 too small");
    }
    return s;
}

// Number of spanning trees by the matrix-tree theorem (principal minor of L).
inline Int spanning_tree_count(const Graph& g) {
    if (!classify(g).is_connected) throw std::invalid_argument("spanning_tree_count: graph is disconnected");
    const int n = g.order();
    if (n <= 1) return Int(1);
    IntMatrix l = laplacian(g);
    IntMatrix minor(n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) minor.at(i - 1, j - 1) = l.at(i, j);
    return det_exact(std::move(minor));
}

// Closed form for a (q+1)-regular md2 graph:
// R(t) = (1-t^2)^(m-n) prod_i (1 - lambda_i t + q t^2), assembled over exact
// integers via prod_i (1 - lambda_i t + q t^2) = sum_k c_k (1+q t^2)^k t^(n-k)
// where charpoly(A) = sum_k c_k z^k. No root extraction anywhere.
inline IntPoly regular_zeta_closed_form(const Graph& g) {
    const int n = g.order();
    if (n == 0) return IntPoly{1};
    int deg = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != deg) throw std::invalid_argument("regular_zeta_closed_form: graph is not regular");
    if (deg < 2) throw std::invalid_argument("regular_zeta_closed_form: graph is not md2");
    const int q = deg - 1;
    IntPoly phi = charpoly(adjacency_matrix(g));
    IntPoly base{1, 0, q};  // 1 + q t^2
    IntPoly acc;
    for (int k = 0; k <= n; ++k) {
        Int ck = phi.coeff(k);
        if (ck == 0) continue;
        acc = acc + base.pow(static_cast<unsigned>(k)) * IntPoly::monomial(ck, n - k);
    }
    long long m = g.size();
    IntPoly one_minus_t2{1, 0, -1};
    return acc * one_minus_t2.pow(static_cast<unsigned>(m - n));
}

// ---------------------------------------------------------------------------
// Generalized characteristic polynomials.
// phi_AD(lambda, x)   = det(lambda I - A + x D)
// phi_ADJ(lambda,x,y) = det(lambda I - A + x D + y J), affine in y.
// Both by interpolation in x, one exact charpoly per node.
// ---------------------------------------------------------------------------

namespace detail {

inline BiPoly charpoly_pencil(const Graph& g, bool with_ones) {
    const int n = g.order();
    IntMatrix a = adjacency_matrix(g);
    IntMatrix d = degree_matrix(g);
    if (with_ones) a = a - IntMatrix::ones(n);
    std::vector<Int> nodes(n + 2);
    std::vector<IntPoly> vals(n + 2);
    for (int s = 0; s < n + 2; ++s) {
        nodes[s] = interpolation_node(s);
        vals[s] = charpoly(a - d * nodes[s]);  // det(lI - (A - xD [- J]))
    }
    return BiPoly::from_x_interpolation(nodes, vals);
}

}  // namespace detail

inline BiPoly bartholdi_phi_AD(const Graph& g) { return detail::charpoly_pencil(g, false); }

inline AffineTriPoly phi_ADJ(const Graph& g) {
    AffineTriPoly t;
    t.p0 = detail::charpoly_pencil(g, false);
    BiPoly slice1 = detail::charpoly_pencil(g, true);
    // p1 = (y=1 slice) - (y=0 slice); exactness in y is forced by rank(J)=1
    const int dl = std::max(t.p0.lambda_degree(), slice1.lambda_degree());
    const int dx = std::max(t.p0.x_degree(), slice1.x_degree());
    BiPoly p1(std::max(dl, 0), std::max(dx, 0));
    for (int i = 0; i <= dl; ++i)
        for (int j = 0; j <= dx; ++j) p1.at(i, j) = slice1.coeff(i, j) - t.p0.coeff(i, j);
    p1.trim();
    t.p1 = std::move(p1);
    return t;
}

// ---------------------------------------------------------------------------
// Bartholdi zeta as an exact truncated power series in (t, u):
// Z(t,u) = (1-(1-u)^2 t^2)^(n-m) det(I - tA + (1-u)(D-(1-u)I) t^2)^{-1},
// computed on the graph as given (the Bartholdi function sees dangling parts).
// Coefficients are exact integers.
// ---------------------------------------------------------------------------

class TruncSeries2 {
public:
    TruncSeries2() : bound_(0), c_(1, Int(0)) {}
    explicit TruncSeries2(int bound) : bound_(bound), c_((bound + 1) * (bound + 1), Int(0)) {}

    int bound() const { return bound_; }
    Int& at(int i, int j) { return c_[i * (bound_ + 1) + j]; }
    const Int& at(int i, int j) const { return c_[i * (bound_ + 1) + j]; }
    Int coeff(int t_pow, int u_pow) const {
        if (t_pow < 0 || u_pow < 0 || t_pow + u_pow > bound_) return Int(0);
        return at(t_pow, u_pow);
    }

    static TruncSeries2 one(int bound) {
        TruncSeries2 s(bound);
        s.at(0, 0) = 1;
        return s;
    }

    TruncSeries2 mul(const TruncSeries2& o) const {
        TruncSeries2 r(bound_);
        for (int i = 0; i <= bound_; ++i)
            for (int j = 0; i + j <= bound_; ++j) {
                const Int& a = at(i, j);
                if (a == 0) continue;
                for (int k = 0; i + j + k <= bound_; ++k)
                    for (int l = 0; i + j + k + l <= bound_; ++l) {
                        const Int& b = o.at(k, l);
                        if (b != 0) r.at(i + k, j + l) += a * b;
                    }
            }
        return r;
    }

    // Requires unit constant term. 1/P = sum_k (1-P)^k truncates after
    // bound steps because 1-P has no constant term.
    TruncSeries2 inverse() const {
        if (at(0, 0) != 1) throw std::invalid_argument("TruncSeries2: inverse needs unit constant term");
        TruncSeries2 r = one(bound_);
        TruncSeries2 x(bound_);  // 1 - P
        for (int i = 0; i <= bound_; ++i)
            for (int j = 0; i + j <= bound_; ++j) x.at(i, j) = -at(i, j);
        x.at(0, 0) = 0;
        TruncSeries2 p = one(bound_);
        for (int k = 1; k <= bound_; ++k) {
            p = p.mul(x);
            for (int i = 0; i <= bound_; ++i)
                for (int j = 0; i + j <= bound_; ++j) r.at(i, j) += p.at(i, j);
        }
        return r;
    }

    TruncSeries2 pow(unsigned e) const {
        TruncSeries2 r = one(bound_), b = *this;
        while (e) {
            if (e & 1u) r = r.mul(b);
            if (e >>= 1u) b = b.mul(b);
        }
        return r;
    }

    bool equal_up_to(const TruncSeries2& o, int deg) const {
        for (int i = 0; i <= deg; ++i)
            for (int j = 0; i + j <= deg; ++j)
                if (coeff(i, j) != o.coeff(i, j)) return false;
        return true;
    }

private:
    int bound_;
    std::vector<Int> c_;
};

inline TruncSeries2 bartholdi_series(const Graph& g, int total_degree) {
    if (total_degree > 10) throw std::invalid_argument("bartholdi_series: total degree capped at 10");
    if (total_degree < 0) throw std::invalid_argument("bartholdi_series: negative degree");
    const int n = g.order();
    const long long m = g.size();

    // determinant of the Bartholdi pencil as an exact bivariate polynomial,
    // by interpolation in u (degree <= 2n) over the Bass-style t pencils
    std::vector<Int> unodes(2 * n + 1);
    std::vector<IntPoly> dets(2 * n + 1);
    for (int s = 0; s <= 2 * n; ++s) {
        Int w = interpolation_node(s);
        unodes[s] = w;
        std::vector<std::vector<IntPoly>> mat(n, std::vector<IntPoly>(n));
        Int omw = 1 - w;  // 1-u at the node
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) {
                    // 1 + (1-u)(d_i - (1-u)) t^2
                    Int c2 = omw * (g.degree(i) - omw);
                    mat[i][j] = IntPoly(std::vector<Int>{Int(1), Int(0), c2});
                } else if (g.edge(i, j)) {
                    mat[i][j] = IntPoly{0, -1};
                }
            }
        dets[s] = polymat_det(mat, 2 * n);
    }
    // assemble det(t, u) coefficients: for each t power, interpolate in u
    int tdeg = 0;
    for (const auto& p : dets) tdeg = std::max(tdeg, p.degree());
    std::vector<IntPoly> upolys(tdeg + 1);  // coefficient of t^i as a poly in u
    {
        std::vector<Int> vals(unodes.size());
        for (int i = 0; i <= tdeg; ++i) {
            for (std::size_t s = 0; s < unodes.size(); ++s) vals[s] = dets[s].coeff(i);
            upolys[i] = interpolate_int_nodes(unodes, vals);
        }
    }
    TruncSeries2 det(total_degree);
    for (int i = 0; i <= tdeg && i <= total_degree; ++i)
        for (int j = 0; j <= upolys[i].degree() && i + j <= total_degree; ++j) det.at(i, j) = upolys[i].coeff(j);

    // prefactor (1 - (1-u)^2 t^2)^(n-m) = (1 - t^2 + 2t^2 u - t^2 u^2)^(n-m)
    TruncSeries2 f(total_degree);
    f.at(0, 0) = 1;
    if (total_degree >= 2) {
        f.at(2, 0) = -1;
        if (total_degree >= 3) f.at(2, 1) = 2;
        if (total_degree >= 4) f.at(2, 2) = -1;
    }
    TruncSeries2 z = det.inverse();
    long long e = n - m;
    if (e >= 0)
        z = z.mul(f.pow(static_cast<unsigned>(e)));
    else
        z = z.mul(f.inverse().pow(static_cast<unsigned>(-e)));
    return z;
}

// ---------------------------------------------------------------------------
// Degree sequence of G from zeta profiles of joins G v H_j (H_j known by
// order and degree list). Solves for x_i = #vertices of degree i from
// sum x_i = n, sum i x_i = 2m and the per-join leading coefficients
// prod_i (i + h_j - 1)^{x_i}; exact search over the integer solutions of the
// two linear constraints, validated against every observed product.
// ---------------------------------------------------------------------------

struct JoinObservation {
    int h_order = 0;
    std::vector<int> h_degrees;
    ZetaProfile profile;
};

namespace detail {

// Leading coefficient of R(G v H) predicted from the degree-count vector x of
// G, handling the cone pruning cases exactly.
inline Int predicted_join_lead(const std::vector<Int>& x, int n, const JoinObservation& ob) {
    const int h = ob.h_order;
    if (h >= 2) {
        Int lead = 1;
        for (int i = 0; i < n; ++i) lead *= ipow(Int(i + h - 1), static_cast<unsigned>(x[i].convert_to<long long>()));
        for (int dj : ob.h_degrees) lead *= Int(dj + n - 1);
        return lead;
    }
    // h == 1: cone. Isolated vertices of G have degree 1 in the cone and are
    // pruned, dropping the apex degree to n - x_0.
    long long x0 = x[0].convert_to<long long>();
    long long core = n - x0;
    if (core == 0) return Int(1);  // star: prunes to the null graph
    Int lead = core - 1;           // apex factor
    for (int i = 1; i < n; ++i) lead *= ipow(Int(i), static_cast<unsigned>(x[i].convert_to<long long>()));
    return lead;
}

}  // namespace detail

inline DegreeSequence recover_degree_sequence_from_joins(const std::vector<JoinObservation>& obs) {
    int n = -1;
    long long m = -1;
    for (const auto& ob : obs) {
        if (ob.h_order < 2) continue;
        long long mh = 0;
        for (int d : ob.h_degrees) mh += d;
        mh /= 2;
        int n_here = ob.profile.n_dagger - ob.h_order;
        long long m_here = ob.profile.m_dagger - mh - static_cast<long long>(n_here) * ob.h_order;
        if (n >= 0 && (n != n_here || m != m_here))
            throw std::runtime_error("recover_degree_sequence: inconsistent observations");
        n = n_here;
        m = m_here;
    }
    if (n < 2) throw std::invalid_argument("recover_degree_sequence: need an observation with h >= 2 and order >= 2");

    std::vector<std::vector<Int>> solutions;
    std::vector<Int> x(n, Int(0));
    // fill x_i from high degree down, pruning on the remaining vertex and
    // degree-sum budgets
    auto dfs = [&](auto&& self, int i, long long verts_left, long long degsum_left) -> void {
        if (i == 0) {
            x[0] = verts_left;
            if (degsum_left == 0) {
                bool ok = true;
                for (const auto& ob : obs) {
                    if (ob.h_order < 1) continue;
                    // |lead(R)| = prod(d-1); the sign is (-1)^(m-n)
                    if (detail::predicted_join_lead(x, n, ob) != boost::multiprecision::abs(ob.profile.r.lead())) {
                        ok = false;
                        break;
                    }
                }
                if (ok) solutions.push_back(x);
            }
            return;
        }
        long long max_cnt = std::min(verts_left, degsum_left / i);
        for (long long c = 0; c <= max_cnt; ++c) {
            if (degsum_left - c * i > (verts_left - c) * (i - 1)) continue;  // cannot reach the sum with smaller degrees
            x[i] = c;
            self(self, i - 1, verts_left - c, degsum_left - c * i);
            x[i] = 0;
        }
    };
    dfs(dfs, n - 1, n, 2 * m);

    if (solutions.empty()) throw std::runtime_error("recover_degree_sequence: inconsistent observations");
    if (solutions.size() > 1) throw std::runtime_error("recover_degree_sequence: ambiguous (multiple integer solutions)");
    DegreeSequence d;
    for (int i = n - 1; i >= 0; --i) {
        long long c = solutions[0][i].convert_to<long long>();
        for (long long r = 0; r < c; ++r) d.push_back(i);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Census of primitive closed-walk classes graded by cyclic bump count.
// ---------------------------------------------------------------------------

struct BartholdiCensus {
    int max_len = 0;
    std::vector<std::vector<Int>> a;  // a[l][c], 0 <= c <= l

    Int operator()(int l, int c) const {
        if (l < 0 || l > max_len || c < 0) throw std::out_of_range("BartholdiCensus: out of range");
        if (c >= static_cast<int>(a[l].size())) return Int(0);
        return a[l][c];
    }
};

}  // namespace zetagraph

#endif
