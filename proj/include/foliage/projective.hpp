#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foliage/bivariate.hpp"
#include "foliage/divisors.hpp"
#include "foliage/error.hpp"
#include "foliage/foliation.hpp"
#include "foliage/polynomial.hpp"
#include "foliage/resolution.hpp"
#include "foliage/valuation.hpp"

namespace foliage {

/// Homogeneous 1-form Ω = A dx + B dy + C dz on the projective plane.
struct ProjForm {
    TriPoly a;
    TriPoly b;
    TriPoly c;
    unsigned degree = 0;  ///< d; the coefficients have degree d + 1
};

/// Point [x:y:z], scaled so that its last nonzero coordinate is 1.
using ProjPoint = std::array<Rational, 3>;

inline ProjPoint normalize_point(ProjPoint p) {
    for (std::size_t i = 3; i-- > 0;) {
        if (sgn(p[i]) == 0) continue;
        const Rational s = p[i];
        for (auto& v : p) v /= s;
        return p;
    }
    throw PreconditionError("[0:0:0] is not a projective point");
}

inline std::string to_string(const ProjPoint& p) {
    return "[" + p[0].get_str() + ":" + p[1].get_str() + ":" + p[2].get_str() + "]";
}

/// Affine charts {z=1}, {y=1}, {x=1}, with local coordinates (x, y), (x, z), (y, z).
enum class AffineChart { z_one, y_one, x_one };

inline std::string to_string(AffineChart c) {
    switch (c) {
        case AffineChart::z_one: return "z=1";
        case AffineChart::y_one: return "y=1";
        default: return "x=1";
    }
}

/// The chart in which a normalized point has coordinate 1 last.
inline AffineChart natural_chart(const ProjPoint& p) {
    if (sgn(p[2]) != 0) return AffineChart::z_one;
    if (sgn(p[1]) != 0) return AffineChart::y_one;
    return AffineChart::x_one;
}

namespace detail {

inline std::size_t fixed_var(AffineChart c) {
    return c == AffineChart::z_one ? 2 : (c == AffineChart::y_one ? 1 : 0);
}

inline std::array<std::size_t, 2> free_vars(AffineChart c) {
    switch (c) {
        case AffineChart::z_one: return {0, 1};
        case AffineChart::y_one: return {0, 2};
        default: return {1, 2};
    }
}

/// Sets the chart variable to 1; the two remaining variables become (x, y).
inline BiPoly dehomogenize(const TriPoly& p, AffineChart chart) {
    const auto [u, v] = free_vars(chart);
    BiPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term({e[u], e[v]}, c);
    return r;
}

/// p(x0, y) as a polynomial in y.
inline UniPoly specialize_x(const BiPoly& p, const Rational& x0) {
    std::vector<Rational> v(p.degree_in(1) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        Rational xp(1);
        for (unsigned i = 0; i < e[0]; ++i) xp *= x0;
        v[e[1]] += c * xp;
    }
    return UniPoly(std::move(v));
}

inline const TriPoly& coefficient_of(const ProjForm& f, std::size_t var) {
    return var == 0 ? f.a : (var == 1 ? f.b : f.c);
}

}  // namespace detail

/// A(C_y − B_z) + B(A_z − C_x) + C(B_x − A_y), the coefficient of Ω ∧ dΩ.
inline TriPoly integrability_polynomial(const ProjForm& f) {
    return f.a * (f.c.derivative(1) - f.b.derivative(2)) + f.b * (f.a.derivative(2) - f.c.derivative(0)) +
           f.c * (f.b.derivative(0) - f.a.derivative(1));
}

/// Checks homogeneity, common degree, the Euler identity, integrability and
/// coprimality. Fills in the degree d.
inline ProjForm validate(ProjForm f) {
    std::optional<unsigned> deg;
    for (const TriPoly* p : {&f.a, &f.b, &f.c}) {
        if (p->is_zero()) continue;
        if (!p->is_homogeneous()) throw ValidationError("coefficient " + to_string(*p) + " is not homogeneous");
        if (deg && *deg != p->total_degree()) throw ValidationError("coefficients have mixed degrees");
        deg = p->total_degree();
    }
    if (!deg) throw ValidationError("the form is identically zero");
    if (*deg == 0) throw ValidationError("coefficients must have degree at least 1");
    const TriPoly x = TriPoly::variable(0), y = TriPoly::variable(1), z = TriPoly::variable(2);
    const TriPoly euler = f.a * x + f.b * y + f.c * z;
    if (!euler.is_zero()) throw ValidationError("Euler identity fails: Ax + By + Cz = " + to_string(euler));
    const TriPoly integ = integrability_polynomial(f);
    if (!integ.is_zero()) throw ValidationError("integrability fails: " + to_string(integ));

    bool z_divides_all = true;
    for (const TriPoly* p : {&f.a, &f.b, &f.c})
        if (!p->is_zero() && p->order_in(2) == 0) z_divides_all = false;
    if (z_divides_all) throw ValidationError("coefficients share the factor z");
    const BiPoly a = detail::dehomogenize(f.a, AffineChart::z_one);
    const BiPoly b = detail::dehomogenize(f.b, AffineChart::z_one);
    const BiPoly c = detail::dehomogenize(f.c, AffineChart::z_one);
    BiPoly g = (a.is_zero() && b.is_zero()) ? normalize(c) : gcd(a, b);
    if (!c.is_zero()) g = gcd(g, c);
    if (!is_unit(g)) throw ValidationError("coefficients share the factor " + to_string(g));
    f.degree = *deg - 1;
    return f;
}

/// Germ of the foliation at `point` in the given affine chart, centered and saturated.
inline OneFormGerm affine_germ(const ProjForm& f, const ProjPoint& point, AffineChart chart) {
    const std::size_t fixed = detail::fixed_var(chart);
    if (sgn(point[fixed]) == 0) throw ChartError("point " + to_string(point) + " is not in the chart " + to_string(chart));
    const auto [u, v] = detail::free_vars(chart);
    const BiPoly p = detail::dehomogenize(detail::coefficient_of(f, u), chart);
    const BiPoly q = detail::dehomogenize(detail::coefficient_of(f, v), chart);
    const Rational pu = point[u] / point[fixed], pv = point[v] / point[fixed];
    const BiPoly xs = poly::x() + BiPoly(pu), ys = poly::y() + BiPoly(pv);
    return OneFormGerm::saturated(substitute(p, xs, ys), substitute(q, xs, ys));
}

inline OneFormGerm affine_germ(const ProjForm& f, const ProjPoint& point) {
    return affine_germ(f, point, natural_chart(normalize_point(point)));
}

struct SingularLocus {
    std::vector<ProjPoint> points;  ///< normalized, sorted
    bool complete = true;           ///< false when some common zero may be irrational
};

/// Rational points where A, B, C vanish simultaneously.
///
/// Affine part: resultant in y of A(x,y,1), B(x,y,1), rational roots, then a
/// univariate gcd on each fiber. Line at infinity: gcd of A(x,1,0), C(x,1,0)
/// and a direct test of [1:0:0].
inline SingularLocus find_rational_singularities(const ProjForm& f) {
    SingularLocus out;
    BiPoly a = detail::dehomogenize(f.a, AffineChart::z_one);
    BiPoly b = detail::dehomogenize(f.b, AffineChart::z_one);
    if (a.is_zero()) std::swap(a, b);
    auto add_fiber = [&](const Rational& x0, const UniPoly& g) {
        if (g.is_zero()) throw InvariantViolation("a whole line is singular");
        if (g.degree() == 0) return;
        RootSplit s = rational_roots(g);
        if (s.residual.degree() > 0) out.complete = false;
        for (const auto& y0 : s.roots) out.points.push_back({x0, y0, Rational(1)});
    };
    if (b.is_zero()) {
        if (a.total_degree() > 0) throw InvariantViolation("singular set contains a curve");
    } else if (a.degree_in(1) == 0 && b.degree_in(1) == 0) {
        const UniPoly g = gcd(restrict_y_zero(a), restrict_y_zero(b));
        if (g.degree() > 0) throw InvariantViolation("singular set contains a vertical line");
    } else {
        const UniPoly r = resultant_y(a, b);
        if (r.is_zero()) throw InvariantViolation("A and B share a factor in the affine chart");
        if (r.degree() > 0) {
            RootSplit s = rational_roots(r);
            if (s.residual.degree() > 0) out.complete = false;
            for (const auto& x0 : s.roots) add_fiber(x0, gcd(detail::specialize_x(a, x0), detail::specialize_x(b, x0)));
        }
    }

    const UniPoly ai = restrict_y_zero(detail::dehomogenize(f.a, AffineChart::y_one));
    const UniPoly ci = restrict_y_zero(detail::dehomogenize(f.c, AffineChart::y_one));
    const UniPoly gi = gcd(ai, ci);
    if (gi.is_zero()) throw InvariantViolation("the line at infinity is singular");
    if (gi.degree() > 0) {
        RootSplit s = rational_roots(gi);
        if (s.residual.degree() > 0) out.complete = false;
        for (const auto& x0 : s.roots) out.points.push_back({x0, Rational(1), Rational(0)});
    }
    const std::array<Rational, 3> e1{Rational(1), Rational(0), Rational(0)};
    if (sgn(f.a.evaluate(e1)) == 0 && sgn(f.b.evaluate(e1)) == 0 && sgn(f.c.evaluate(e1)) == 0)
        out.points.push_back(e1);

    for (auto& p : out.points) p = normalize_point(p);
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

struct PointAudit {
    ProjPoint point;
    AffineChart chart = AffineChart::z_one;
    std::string germ;
    std::optional<ValuationReport> report;
    std::string error;              ///< resolution failure; the point contributes nothing
    long sum_nu_F = 0;              ///< Σ_D (ν_D(F) − 1)²
    long sum_rewritten = 0;         ///< Σ_D (ν_D(Ψ̂) + ξ_D − 2 + ε(D))²
    bool terms_agree = true;        ///< the two sums agree term by term
};

struct AuditReport {
    unsigned degree = 0;
    std::vector<PointAudit> points;
    long lhs = 0;
    long lhs_rewritten = 0;
    long rhs = 0;                   ///< (d − 1)²
    bool inequality_holds = false;
    bool rewritten_holds = false;
    bool consistent = true;         ///< per-point term agreement, totals equal sums of parts
    bool locus_complete = false;    ///< the audited points are all the singular points
    bool all_resolved = true;
    std::string disclaimer;
};

inline const char* hypothesis_disclaimer() {
    return "the foliation is assumed to have no special invariant curve; this is not checked";
}

/// Resolves every point and evaluates Σ_p Σ_D (ν_D(F_p) − 1)² ≤ (d − 1)² and
/// its rewriting in terms of ν_D(Ψ̂_p) and ξ_D(F_p).
inline AuditReport audit(const ProjForm& form, const std::vector<ProjPoint>& points, bool locus_complete,
                         ReduceOptions options = {}) {
    const ProjForm f = validate(form);
    AuditReport r;
    r.degree = f.degree;
    r.rhs = (static_cast<long>(f.degree) - 1) * (static_cast<long>(f.degree) - 1);
    r.locus_complete = locus_complete;
    r.disclaimer = hypothesis_disclaimer();
    for (const ProjPoint& raw : points) {
        PointAudit pa;
        pa.point = normalize_point(raw);
        pa.chart = natural_chart(pa.point);
        try {
            const OneFormGerm g = affine_germ(f, pa.point, pa.chart);
            pa.germ = g.to_string();
            const ResolutionTree tree = reduce(g, options);
            pa.report = verify(tree);
            for (const auto& c : pa.report->components) {
                const long term = static_cast<long>(c.nu_F) - 1;
                const long rewritten = c.nu_Psi + static_cast<long>(c.xi) - 2 + static_cast<long>(c.epsilon);
                pa.sum_nu_F += term * term;
                pa.sum_rewritten += rewritten * rewritten;
                if (term * term != rewritten * rewritten) pa.terms_agree = false;
            }
        } catch (const Error& e) {
            pa.error = e.what();
            r.all_resolved = false;
        }
        r.lhs += pa.sum_nu_F;
        r.lhs_rewritten += pa.sum_rewritten;
        r.consistent = r.consistent && pa.terms_agree;
        r.points.push_back(std::move(pa));
    }
    long total = 0, total_rewritten = 0;
    for (const auto& p : r.points) total += p.sum_nu_F, total_rewritten += p.sum_rewritten;
    r.consistent = r.consistent && total == r.lhs && total_rewritten == r.lhs_rewritten;
    r.inequality_holds = r.lhs <= r.rhs;
    r.rewritten_holds = r.lhs_rewritten <= r.rhs;
    return r;
}

/// Audits the rational singular points found by find_rational_singularities.
inline AuditReport audit(const ProjForm& form, ReduceOptions options = {}) {
    const ProjForm f = validate(form);
    const SingularLocus locus = find_rational_singularities(f);
    return audit(f, locus.points, locus.complete, options);
}

}  // namespace foliage
