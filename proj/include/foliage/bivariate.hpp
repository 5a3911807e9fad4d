#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "foliage/error.hpp"
#include "foliage/polynomial.hpp"
#include "foliage/unipoly.hpp"

namespace foliage {

/// min(i + j) over the terms of p; the ν_p building block.
inline unsigned order_at_origin(const BiPoly& p) { return p.order(); }

inline BiPoly homogeneous_part(const BiPoly& p, unsigned d) { return p.homogeneous_part(d); }

/// p(x_expr, y_expr).
inline BiPoly substitute(const BiPoly& p, const BiPoly& x_expr, const BiPoly& y_expr) {
    return p.compose<2>({x_expr, y_expr});
}

/// A parametrized curve germ t ↦ (γ₁(t), γ₂(t)).
struct Param {
    ParamPoly x;
    ParamPoly y;

    /// Multiplicity of the curve at γ(0) = origin: min ord_t of the components.
    unsigned multiplicity() const {
        if (x.is_zero()) return y.order();
        if (y.is_zero()) return x.order();
        return std::min(x.order(), y.order());
    }

    friend bool operator==(const Param&, const Param&) = default;
};

/// p(γ₁(t), γ₂(t)).
inline ParamPoly eval_on_param(const BiPoly& p, const Param& gamma) {
    std::vector<ParamPoly> xp{ParamPoly(Rational(1))}, yp{ParamPoly(Rational(1))};
    ParamPoly acc;
    for (const auto& [e, c] : p.terms()) {
        while (xp.size() <= e[0]) xp.push_back(xp.back() * gamma.x);
        while (yp.size() <= e[1]) yp.push_back(yp.back() * gamma.y);
        acc += (xp[e[0]] * yp[e[1]]) * c;
    }
    return acc;
}

/// p(0, y) as a polynomial in y.
inline UniPoly restrict_x_zero(const BiPoly& p) {
    std::vector<Rational> v(p.degree_in(1) + 1, Rational(0));
    for (const auto& [e, c] : p.terms())
        if (e[0] == 0) v[e[1]] += c;
    return UniPoly(std::move(v));
}

/// p(x, 0) as a polynomial in x.
inline UniPoly restrict_y_zero(const BiPoly& p) {
    std::vector<Rational> v(p.degree_in(0) + 1, Rational(0));
    for (const auto& [e, c] : p.terms())
        if (e[1] == 0) v[e[0]] += c;
    return UniPoly(std::move(v));
}

/// Embeds a univariate polynomial as a polynomial in variable `var`.
inline BiPoly from_univariate(const UniPoly& u, std::size_t var) {
    BiPoly r;
    for (unsigned i = 0; i < u.coefficients().size(); ++i) {
        BiPoly::Exponent e{};
        e[var] = i;
        r.add_term(e, u.coefficient(i));
    }
    return r;
}

/// Scales p to integer coefficients with content 1 and positive graded-leading coefficient.
inline BiPoly normalize(const BiPoly& p) {
    if (p.is_zero()) return p;
    Integer den = 1, num = 0;
    for (const auto& [e, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [e, c] : p.terms()) {
        Rational s = c * den;
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), s.get_num_mpz_t());
    }
    Rational scale(den);
    scale /= Rational(num);
    if (sgn(p.leading_term().second) < 0) scale = -scale;
    return p * scale;
}

/// Exact quotient p / d. Throws InvariantViolation when d does not divide p.
inline BiPoly divide_exact(const BiPoly& p, const BiPoly& d) {
    if (d.is_zero()) throw PreconditionError("division by the zero polynomial");
    const auto [ed, cd] = d.leading_term();
    BiPoly q, r = p;
    while (!r.is_zero()) {
        const auto [er, cr] = r.leading_term();
        if (er[0] < ed[0] || er[1] < ed[1]) throw InvariantViolation("polynomial division is not exact");
        const BiPoly t = BiPoly::monomial({er[0] - ed[0], er[1] - ed[1]}, cr / cd);
        q += t;
        r -= t * d;
    }
    return q;
}

namespace detail {

/// p viewed in Q[x][y]: entry j is the coefficient of y^j.
using Recursive = std::vector<UniPoly>;

inline Recursive to_recursive(const BiPoly& p) {
    Recursive r(p.is_zero() ? 0 : p.degree_in(1) + 1);
    for (const auto& [e, c] : p.terms()) r[e[1]] += UniPoly::monomial(e[0], c);
    return r;
}

inline BiPoly from_recursive(const Recursive& r) {
    BiPoly p;
    for (unsigned j = 0; j < r.size(); ++j)
        for (unsigned i = 0; i < r[j].coefficients().size(); ++i) p.add_term({i, j}, r[j].coefficient(i));
    return p;
}

inline void trim(Recursive& r) {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
}

inline UniPoly content(const Recursive& r) {
    UniPoly g;
    for (const auto& c : r) g = gcd(g, c);
    return g;
}

inline Recursive divide_content(const Recursive& r, const UniPoly& c) {
    Recursive out;
    for (const auto& a : r) out.push_back(a / c);
    return out;
}

inline Recursive primitive_part(const Recursive& r) {
    if (r.empty()) return r;
    return divide_content(r, content(r));
}

/// Pseudo-remainder of a by b in Q[x][y] (up to a factor that is a power of lc(b)).
inline Recursive pseudo_remainder(Recursive a, const Recursive& b) {
    const std::size_t db = b.size() - 1;
    const UniPoly& lb = b.back();
    trim(a);
    while (!a.empty() && a.size() - 1 >= db) {
        const UniPoly la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c = c * lb;
        for (std::size_t j = 0; j <= db; ++j) a[j + shift] -= la * b[j];
        trim(a);
    }
    return a;
}

}  // namespace detail

/// Greatest common divisor over Q, normalized (integer, content 1, positive
/// leading coefficient). Units come back as 1.
///
/// Content/primitive-part split over Q[x][y], then a primitive PRS in y.
inline BiPoly gcd(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() && q.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
    if (p.is_zero()) return normalize(q);
    if (q.is_zero()) return normalize(p);
    auto a = detail::to_recursive(p);
    auto b = detail::to_recursive(q);
    const UniPoly ca = detail::content(a), cb = detail::content(b);
    const UniPoly c = gcd(ca, cb);
    a = detail::divide_content(a, ca);
    b = detail::divide_content(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = detail::pseudo_remainder(a, b);
        a = std::move(b);
        b = detail::primitive_part(r);
    }
    a = detail::primitive_part(a);
    BiPoly g = a.size() <= 1 ? BiPoly(Rational(1)) : detail::from_recursive(a);
    return normalize(g * from_univariate(c, 0));
}

inline bool is_unit(const BiPoly& p) { return !p.is_zero() && p.total_degree() == 0; }

/// Whether p and q have no common factor of positive degree.
///
/// Fast path: trivial content gcd in Q[x], then a specialization x = x0 at which
/// both leading coefficients in y survive and the fibers are coprime. A common
/// factor h with deg_y h > 0 would survive every such specialization. Falls
/// back to the full gcd when no witness is found.
inline bool coprime(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() || q.is_zero()) return is_unit(p.is_zero() ? q : p);
    const auto a = detail::to_recursive(p);
    const auto b = detail::to_recursive(q);
    if (gcd(detail::content(a), detail::content(b)).degree() > 0) return false;
    if (a.size() == 1 || b.size() == 1) return true;
    for (long x0 : {0L, 1L, -1L, 2L, -2L, 3L, 5L, -7L}) {
        const Rational r(x0);
        if (sgn(a.back().evaluate(r)) == 0 || sgn(b.back().evaluate(r)) == 0) continue;
        std::vector<Rational> fa, fb;
        for (const auto& c : a) fa.push_back(c.evaluate(r));
        for (const auto& c : b) fb.push_back(c.evaluate(r));
        if (gcd(UniPoly(std::move(fa)), UniPoly(std::move(fb))).degree() == 0) return true;
    }
    return is_unit(gcd(p, q));
}

/// Resultant with respect to y, as a polynomial in x (Sylvester determinant, Bareiss elimination).
inline UniPoly resultant_y(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const auto a = detail::to_recursive(p);
    const auto b = detail::to_recursive(q);
    const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
    if (size == 0) return UniPoly(Rational(1));
    std::vector<std::vector<UniPoly>> mat(size, std::vector<UniPoly>(size));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) mat[i][i + j] = a[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) mat[n + i][i + j] = b[n - j];
    Rational sign(1);
    UniPoly prev(Rational(1));
    for (std::size_t k = 0; k < size; ++k) {
        if (mat[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < size && mat[pivot][k].is_zero()) ++pivot;
            if (pivot == size) return {};
            std::swap(mat[k], mat[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j)
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
            mat[i][k] = UniPoly{};
        }
        prev = mat[k][k];
    }
    return mat[size - 1][size - 1] * sign;
}

}  // namespace foliage
