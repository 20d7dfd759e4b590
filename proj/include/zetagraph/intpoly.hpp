#ifndef ZETAGRAPH_INTPOLY_HPP
#define ZETAGRAPH_INTPOLY_HPP

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetagraph/bigint.hpp"

namespace zetagraph {

// Dense integer polynomial in one variable. Coefficient i is the coefficient
// of t^i; the zero polynomial has an empty coefficient vector and degree -1.
// No trailing zero coefficients are ever stored.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> cs) {
        for (long long v : cs) c_.emplace_back(v);
        normalize();
    }
    explicit IntPoly(std::vector<Int> cs) : c_(std::move(cs)) { normalize(); }

    static IntPoly constant(Int v) {
        IntPoly p;
        p.c_.push_back(std::move(v));
        p.normalize();
        return p;
    }
    static IntPoly monomial(Int coef, int power) {
        IntPoly p;
        if (coef != 0) {
            p.c_.assign(power + 1, Int(0));
            p.c_[power] = std::move(coef);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
        return c_[i];
    }
    const std::vector<Int>& coeffs() const { return c_; }
    Int lead() const { return c_.empty() ? Int(0) : c_.back(); }

    Int eval(const Int& x) const {
        Int r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const Int& s) {
        std::vector<Int> r = a.c_;
        for (auto& v : r) v *= s;
        return IntPoly(std::move(r));
    }

    IntPoly pow(unsigned e) const {
        IntPoly r = IntPoly::constant(1), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            if (e >>= 1u) b = b * b;
        }
        return r;
    }

    // Exact polynomial division; throws if the remainder is nonzero.
    IntPoly div_exact(const IntPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("IntPoly: division by zero polynomial");
        if (is_zero()) return IntPoly();
        if (degree() < d.degree()) throw std::invalid_argument("IntPoly: division not exact");
        std::vector<Int> rem = c_;
        std::vector<Int> q(degree() - d.degree() + 1, Int(0));
        for (int i = degree() - d.degree(); i >= 0; --i) {
            Int top = rem[i + d.degree()];
            if (top == 0) continue;
            if (top % d.lead() != 0) throw std::invalid_argument("IntPoly: division not exact");
            Int f = top / d.lead();
            q[i] = f;
            for (int j = 0; j <= d.degree(); ++j) rem[i + j] -= f * d.c_[j];
        }
        for (const Int& v : rem)
            if (v != 0) throw std::invalid_argument("IntPoly: division not exact");
        return IntPoly(std::move(q));
    }

    // Multiplicity of the root t = r (0 for non-roots and the zero polynomial).
    int root_multiplicity(const Int& r) const {
        int mult = 0;
        IntPoly p = *this;
        while (!p.is_zero() && p.eval(r) == 0) {
            p = p.deflate(r);
            ++mult;
        }
        return mult;
    }

    // Synthetic division by (t - r); requires r to be a root.
    IntPoly deflate(const Int& r) const {
        if (is_zero() || eval(r) != 0) throw std::invalid_argument("IntPoly: deflate at non-root");
        std::vector<Int> q(c_.size() - 1, Int(0));
        Int carry = 0;
        for (int i = degree(); i >= 1; --i) {
            carry = carry * r + c_[i];
            q[i - 1] = carry;
        }
        return IntPoly(std::move(q));
    }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }
    bool operator<(const IntPoly& o) const { return c_ < o.c_; }

    // "(c0,c1,...,cd)" with decimal coefficients, constant term first;
    // the zero polynomial prints as "(0)".
    std::string str() const {
        std::ostringstream os;
        os << '(';
        if (c_.empty()) {
            os << '0';
        } else {
            for (std::size_t i = 0; i < c_.size(); ++i) {
                if (i) os << ',';
                os << c_[i];
            }
        }
        os << ')';
        return os.str();
    }

private:
    std::vector<Int> c_;
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// Newton interpolation through (nodes[i], values[i]) with distinct integer
// nodes. Divided differences of an integer polynomial at integer nodes are
// integers, so every division below is exact; a non-exact one means the data
// did not come from an integer polynomial and is reported as a logic error.
inline IntPoly interpolate_int_nodes(const std::vector<Int>& nodes, const std::vector<Int>& values) {
    if (nodes.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
    const std::size_t k = nodes.size();
    if (k == 0) return IntPoly();
    std::vector<Int> dd = values;
    for (std::size_t j = 1; j < k; ++j) {
        for (std::size_t i = k - 1; i >= j; --i) {
            Int num = dd[i] - dd[i - 1];
            Int den = nodes[i] - nodes[i - j];
            if (den == 0) throw std::invalid_argument("interpolate: repeated node");
            if (num % den != 0) throw std::logic_error("interpolate: non-integer divided difference");
            dd[i] = num / den;
        }
    }
    IntPoly p = IntPoly::constant(dd[k - 1]);
    for (std::size_t i = k - 1; i-- > 0;) {
        // p <- p*(t - nodes[i]) + dd[i]
        p = p * IntPoly{0, 1} - p * nodes[i] + IntPoly::constant(dd[i]);
    }
    return p;
}

// Evaluation node ladder 0, 1, -1, 2, -2, ...
inline Int interpolation_node(std::size_t idx) {
    if (idx == 0) return Int(0);
    std::size_t h = (idx + 1) / 2;
    return (idx % 2) ? Int(h) : -Int(h);
}

// Bivariate integer polynomial with monic-in-lambda uses in mind:
// c(i,j) is the coefficient of lambda^i x^j.
class BiPoly {
public:
    BiPoly() : dl_(-1), dx_(-1) {}
    BiPoly(int dl, int dx) : dl_(dl), dx_(dx), c_((dl + 1) * (dx + 1), Int(0)) {}

    int lambda_degree() const { return dl_; }
    int x_degree() const { return dx_; }

    Int& at(int i, int j) { return c_[i * (dx_ + 1) + j]; }
    const Int& at(int i, int j) const { return c_[i * (dx_ + 1) + j]; }
    Int coeff(int i, int j) const {
        if (i < 0 || j < 0 || i > dl_ || j > dx_) return Int(0);
        return at(i, j);
    }

    Int eval(const Int& l, const Int& x) const {
        Int r = 0;
        for (int i = dl_; i >= 0; --i) {
            Int row = 0;
            for (int j = dx_; j >= 0; --j) row = row * x + at(i, j);
            r = r * l + row;
        }
        return r;
    }

    IntPoly specialize_x(const Int& x) const {
        std::vector<Int> cs(dl_ + 1, Int(0));
        for (int i = 0; i <= dl_; ++i) {
            Int row = 0;
            for (int j = dx_; j >= 0; --j) row = row * x + at(i, j);
            cs[i] = row;
        }
        return IntPoly(std::move(cs));
    }

    // Trim ranks so equal polynomials compare equal regardless of how they
    // were assembled.
    void trim() {
        int ndl = -1, ndx = -1;
        for (int i = 0; i <= dl_; ++i)
            for (int j = 0; j <= dx_; ++j)
                if (at(i, j) != 0) {
                    ndl = std::max(ndl, i);
                    ndx = std::max(ndx, j);
                }
        BiPoly t(std::max(ndl, 0), std::max(ndx, 0));
        if (ndl < 0) {
            t = BiPoly();
        } else {
            for (int i = 0; i <= ndl; ++i)
                for (int j = 0; j <= ndx; ++j) t.at(i, j) = at(i, j);
        }
        *this = std::move(t);
    }

    bool operator==(const BiPoly& o) const { return dl_ == o.dl_ && dx_ == o.dx_ && c_ == o.c_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    // Rows are lambda powers (constant first), ';'-separated; entries within
    // a row are x powers, ','-separated.
    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (int i = 0; i <= dl_; ++i) {
            if (i) os << ';';
            for (int j = 0; j <= dx_; ++j) {
                if (j) os << ',';
                os << at(i, j);
            }
        }
        os << ')';
        return os.str();
    }

    // Reconstruct from x-interpolation: value_polys[s] is the univariate
    // polynomial in lambda at x = nodes[s].
    static BiPoly from_x_interpolation(const std::vector<Int>& nodes, const std::vector<IntPoly>& value_polys) {
        if (nodes.size() != value_polys.size() || nodes.empty())
            throw std::invalid_argument("BiPoly interpolation: bad node set");
        int dl = -1;
        for (const auto& p : value_polys) dl = std::max(dl, p.degree());
        if (dl < 0) return BiPoly();
        int dx = static_cast<int>(nodes.size()) - 1;
        BiPoly out(dl, dx);
        std::vector<Int> vals(nodes.size());
        for (int i = 0; i <= dl; ++i) {
            for (std::size_t s = 0; s < nodes.size(); ++s) vals[s] = value_polys[s].coeff(i);
            IntPoly pi = interpolate_int_nodes(nodes, vals);
            for (int j = 0; j <= pi.degree(); ++j) out.at(i, j) = pi.coeff(j);
        }
        out.trim();
        return out;
    }

private:
    int dl_, dx_;
    std::vector<Int> c_;
};

// p0(lambda,x) + y * p1(lambda,x): the exact shape of det(lambda I - A + xD + yJ),
// which is affine in y because J has rank one.
struct AffineTriPoly {
    BiPoly p0, p1;

    Int eval(const Int& l, const Int& x, const Int& y) const { return p0.eval(l, x) + y * p1.eval(l, x); }
    bool operator==(const AffineTriPoly& o) const { return p0 == o.p0 && p1 == o.p1; }
    bool operator!=(const AffineTriPoly& o) const { return !(*this == o); }
    std::string str() const { return p0.str() + "+y*" + p1.str(); }
};

}  // namespace zetagraph

#endif
