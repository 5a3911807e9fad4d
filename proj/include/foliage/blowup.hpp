#pragma once

#include <array>
#include <string>
#include <utility>

#include "foliage/bivariate.hpp"
#include "foliage/error.hpp"
#include "foliage/foliation.hpp"

namespace foliage {

enum class ChartKind {
    first,   ///< (x, y) ↦ (x, x·y); divisor {x = 0}
    second,  ///< (x, y) ↦ (x·y, y); divisor {y = 0}
};

/// One affine chart of a point blow-up, optionally re-centered along the divisor.
///
/// A first chart with offset c is centered at the divisor point (0, c) and maps
/// local coordinates by (x, y) ↦ (x, x·(y + c)). Second charts are only used at
/// their origin, the one divisor point the first chart misses.
struct Chart {
    ChartKind kind = ChartKind::first;
    Rational offset{0};

    static Chart first(const Rational& c = Rational(0)) { return {ChartKind::first, c}; }
    static Chart second() { return {ChartKind::second, Rational(0)}; }

    /// The local equation of the exceptional divisor.
    CoordLine divisor() const { return kind == ChartKind::first ? CoordLine::x_zero : CoordLine::y_zero; }
    std::size_t divisor_var() const { return kind == ChartKind::first ? 0 : 1; }

    /// Images of the parent coordinates in terms of the chart coordinates.
    std::array<BiPoly, 2> to_parent() const {
        if (kind == ChartKind::first) return {poly::x(), poly::x() * (poly::y() + BiPoly(offset))};
        return {poly::x() * poly::y(), poly::y()};
    }

    std::string to_string() const {
        if (kind == ChartKind::second) return "chart2";
        return sgn(offset) == 0 ? "chart1" : "chart1@" + offset.get_str();
    }

    friend bool operator==(const Chart&, const Chart&) = default;
};

/// Coefficients (A, B) of φ*(P dx + Q dy) for a polynomial map φ.
inline std::pair<BiPoly, BiPoly> pullback_form(const BiPoly& p, const BiPoly& q, const std::array<BiPoly, 2>& map) {
    const BiPoly pp = substitute(p, map[0], map[1]);
    const BiPoly qq = substitute(q, map[0], map[1]);
    return {pp * map[0].derivative(0) + qq * map[1].derivative(0),
            pp * map[0].derivative(1) + qq * map[1].derivative(1)};
}

/// Dicritical test: x·P_ν + y·Q_ν ≡ 0 with ν the algebraic multiplicity.
inline bool is_dicritical(const OneFormGerm& g) {
    const unsigned nu = algebraic_multiplicity(g);
    if (nu == 0) throw PreconditionError("is_dicritical: the germ is regular at the origin");
    const BiPoly cone = poly::x() * homogeneous_part(g.p(), nu) + poly::y() * homogeneous_part(g.q(), nu);
    return cone.is_zero();
}

struct ChartTransform {
    Chart chart;
    std::pair<BiPoly, BiPoly> total;  ///< π*ω, before any division
    OneFormGerm strict = OneFormGerm::trusted(poly::y(), BiPoly{});  ///< total divided by the divisor coordinate to the power m
};

struct BlowupResult {
    bool dicritical = false;
    unsigned multiplicity = 0;        ///< ν of the blown-up germ
    unsigned division_exponent = 0;   ///< m = ν + (dicritical ? 1 : 0)
    ChartTransform first;
    ChartTransform second;
};

namespace detail {

inline ChartTransform transform_in_chart(const OneFormGerm& g, const Chart& chart, unsigned& exponent) {
    auto total = pullback_form(g.p(), g.q(), chart.to_parent());
    const std::size_t var = chart.divisor_var();
    unsigned m = ~0u;
    if (!total.first.is_zero()) m = std::min(m, total.first.order_in(var));
    if (!total.second.is_zero()) m = std::min(m, total.second.order_in(var));
    exponent = m;
    BiPoly a = total.first.unshifted(var, m);
    BiPoly b = total.second.unshifted(var, m);
    // π is an isomorphism off the divisor, so nothing but the divisor can be a common factor.
    if (!coprime(a, b))
        throw InvariantViolation("strict transform keeps a common factor: " + to_string(gcd(a, b)));
    return {chart, std::move(total), OneFormGerm::trusted(std::move(a), std::move(b))};
}

}  // namespace detail

/// Blows up the origin. Both chart strict transforms are returned globally on
/// their chart (not yet re-centered at any divisor point).
inline BlowupResult blowup(const OneFormGerm& g) {
    const unsigned nu = algebraic_multiplicity(g);
    if (nu == 0) throw PreconditionError("blowup: the germ is regular at the origin");
    BlowupResult r;
    r.multiplicity = nu;
    r.dicritical = is_dicritical(g);
    unsigned m1 = 0, m2 = 0;
    r.first = detail::transform_in_chart(g, Chart::first(), m1);
    r.second = detail::transform_in_chart(g, Chart::second(), m2);
    r.division_exponent = m1;
    const unsigned expected = nu + (r.dicritical ? 1u : 0u);
    if (m1 != expected || m2 != expected)
        throw InvariantViolation("division exponent " + std::to_string(m1) + "/" + std::to_string(m2) +
                                 " differs from expected " + std::to_string(expected));
    return r;
}

/// Blow-up of a germ that may be regular (needed to separate tangencies).
/// The division exponent is then computed, not predicted.
inline BlowupResult blowup_any(const OneFormGerm& g) {
    if (algebraic_multiplicity(g) > 0) return blowup(g);
    BlowupResult r;
    r.multiplicity = 0;
    r.dicritical = false;
    unsigned m1 = 0, m2 = 0;
    r.first = detail::transform_in_chart(g, Chart::first(), m1);
    r.second = detail::transform_in_chart(g, Chart::second(), m2);
    if (m1 != 0 || m2 != 0) throw InvariantViolation("regular point produced a nonzero division exponent");
    r.division_exponent = 0;
    return r;
}

/// Total pullback f∘φ through a chart.
inline BiPoly pullback_scalar(const BiPoly& f, const Chart& chart) {
    const auto map = chart.to_parent();
    return substitute(f, map[0], map[1]);
}

/// Strict transform: pullback divided by the divisor coordinate to the power ord(f).
inline BiPoly strict_pullback_scalar(const BiPoly& f, const Chart& chart) {
    if (f.is_zero()) return f;
    return pullback_scalar(f, chart).unshifted(chart.divisor_var(), f.order());
}

/// Blow-down of a parametrization given in the local coordinates of a chart.
inline Param pushdown_param(const Param& gamma, const Chart& chart) {
    if (chart.kind == ChartKind::first)
        return {gamma.x, gamma.x * (gamma.y + ParamPoly(chart.offset))};
    return {gamma.x * gamma.y, gamma.y};
}

/// Translates γ by a chart-local center, then applies the chart map.
inline Param pushdown_param(const Param& gamma, ChartKind kind, const Rational& cx, const Rational& cy) {
    const Param centered{gamma.x + ParamPoly(cx), gamma.y + ParamPoly(cy)};
    if (kind == ChartKind::first) return {centered.x, centered.x * centered.y};
    return {centered.x * centered.y, centered.y};
}

}  // namespace foliage
