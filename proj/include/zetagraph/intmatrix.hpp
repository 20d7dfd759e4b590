#ifndef ZETAGRAPH_INTMATRIX_HPP
#define ZETAGRAPH_INTMATRIX_HPP

#include <stdexcept>
#include <vector>

#include "zetagraph/bigint.hpp"
#include "zetagraph/intpoly.hpp"

namespace zetagraph {

// Dense square matrix over exact integers.
class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Int(0)) {}

    int dim() const { return n_; }
    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix ones(int n) {
        IntMatrix m(n);
        for (auto& v : m.a_) v = 1;
        return m;
    }

    Int trace() const {
        Int t = 0;
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    IntMatrix transpose() const {
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r(a.n_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r(a.n_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const Int& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    friend IntMatrix operator*(const IntMatrix& a, const Int& s) {
        IntMatrix r(a.n_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] * s;
        return r;
    }
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    int n_;
    std::vector<Int> a_;
};

// Fraction-free (Bareiss) elimination; every interior division is exact.
// The 0x0 determinant is 1 by convention.
inline Int det_exact(IntMatrix m) {
    const int n = m.dim();
    if (n == 0) return Int(1);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return Int(0);
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int v = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = v / prev;  // exact
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

// Monic characteristic polynomial det(lambda I - M) via Faddeev-LeVerrier.
// The divisions by k are exact over the integers.
inline IntPoly charpoly(const IntMatrix& m) {
    const int n = m.dim();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    if (n == 0) return IntPoly(std::move(c));
    IntMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            IntMatrix adj = mk;
            for (int i = 0; i < n; ++i) adj.at(i, i) += c[n - k + 1];
            mk = m * adj;
        }
        Int t = mk.trace();
        if (t % k != 0) throw std::logic_error("charpoly: non-exact division");
        c[n - k] = -t / k;
    }
    return IntPoly(std::move(c));
}

// Determinant of a square matrix of integer polynomials by evaluation at
// degree_bound+1 integer nodes and Newton interpolation. One extra node is
// evaluated to confirm the bound was large enough.
inline IntPoly polymat_det(const std::vector<std::vector<IntPoly>>& m, int degree_bound) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("polymat_det: not square");
    if (degree_bound < 0) throw std::invalid_argument("polymat_det: negative degree bound");
    if (n == 0) return IntPoly::constant(1);

    auto eval_at = [&](const Int& t) {
        IntMatrix e(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) e.at(i, j) = m[i][j].eval(t);
        return det_exact(std::move(e));
    };

    std::vector<Int> nodes(degree_bound + 1), vals(degree_bound + 1);
    for (int s = 0; s <= degree_bound; ++s) {
        nodes[s] = interpolation_node(s);
        vals[s] = eval_at(nodes[s]);
    }
    IntPoly det = interpolate_int_nodes(nodes, vals);
    Int extra = interpolation_node(degree_bound + 1);
    if (det.eval(extra) != eval_at(extra))
        throw std::logic_error("polymat_det: inconsistent interpolation (degree_bound too small)");
    return det;
}

// Basis of the right kernel of a (possibly rectangular) integer matrix,
// returned as integer vectors (each scaled to clear denominators).
inline std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<std::vector<Rat>> w(rows, std::vector<Rat>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) w[i][j] = Rat(a[i][j]);

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (w[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(w[r], w[p]);
        Rat inv = w[r][c];
        for (int j = c; j < cols; ++j) w[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (int j = c; j < cols; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Int>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -w[i][f];
        Int lcm = 1;
        for (const Rat& x : v) {
            Int den = boost::multiprecision::denominator(x);
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        std::vector<Int> iv(cols);
        for (int j = 0; j < cols; ++j) {
            Rat scaled = v[j] * Rat(lcm);
            iv[j] = boost::multiprecision::numerator(scaled);
        }
        basis.push_back(std::move(iv));
    }
    return basis;
}

}  // namespace zetagraph

#endif
