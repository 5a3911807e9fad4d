#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foliage/bivariate.hpp"
#include "foliage/blowup.hpp"
#include "foliage/error.hpp"
#include "foliage/resolution.hpp"

namespace foliage {

enum class BranchKind { isolated_strong, isolated_weak, dicritical_curvetta };

inline std::string to_string(BranchKind k) {
    switch (k) {
        case BranchKind::isolated_strong: return "isolated-strong";
        case BranchKind::isolated_weak: return "isolated-weak";
        default: return "dicritical-curvetta";
    }
}

/// One separatrix branch, recorded by where its strict transform meets the
/// divisor and by its multiplicities at the blown-up centers.
struct BranchData {
    std::optional<ComponentId> component;  ///< empty for branches of an unblown root
    PointId attach_point = 0;              ///< tree point, or the center below a dicritical attach point
    std::optional<Rational> attach_offset; ///< chart-1 value on the component, dicritical curvettas only
    BranchKind kind = BranchKind::isolated_strong;
    bool formal = false;                   ///< weak separatrix that may not converge
    std::map<PointId, unsigned> m;         ///< multiplicity at each ancestor center
    unsigned base_multiplicity = 1;        ///< multiplicity at the root point
    std::optional<Param> parametrization;  ///< blown-down curvetta in root coordinates

    unsigned multiplicity_at(PointId q) const {
        auto it = m.find(q);
        return it == m.end() ? 0u : it->second;
    }
};

struct DivisorTerm {
    BranchData branch;
    long coefficient = 1;
};

/// Formal sum of separatrix branches with integer coefficients.
struct SeparatrixDivisor {
    std::vector<DivisorTerm> terms;

    /// ν_p of the divisor: Σ a_B · ν_p(B).
    long multiplicity() const {
        long s = 0;
        for (const auto& t : terms) s += t.coefficient * static_cast<long>(t.branch.base_multiplicity);
        return s;
    }

    /// Multiplicity of the strict transform at a center q: Σ a_B · m_q(B).
    long multiplicity_at(PointId q) const {
        long s = 0;
        for (const auto& t : terms) s += t.coefficient * static_cast<long>(t.branch.multiplicity_at(q));
        return s;
    }

    bool is_primitive() const {
        for (const auto& t : terms)
            if (t.branch.kind == BranchKind::dicritical_curvetta && std::labs(t.coefficient) != 1) return false;
        return true;
    }

    /// Σ a_B over branches attached to D.
    long coefficient_sum(ComponentId d) const {
        long s = 0;
        for (const auto& t : terms)
            if (t.branch.component == d) s += t.coefficient;
        return s;
    }
};

namespace detail {

/// Curvetta transverse to the coordinate line `divisor` at the local origin.
inline Param transverse_curvetta(CoordLine divisor, const Rational& slope) {
    const ParamPoly t = ParamPoly::identity();
    if (divisor == CoordLine::x_zero) return {t, t * slope};
    return {t * slope, t};
}

/// Pushes γ, given at `point` after passing through `first_chart` if any,
/// down to the root. Fills m with the multiplicities at every center crossed.
inline Param blow_down(const ResolutionTree& tree, PointId point, Param gamma, std::map<PointId, unsigned>& m) {
    std::optional<PointId> cur = point;
    while (cur) {
        const InfNearPoint& p = tree.point(*cur);
        if (p.is_center()) m[p.id] = gamma.multiplicity();
        if (!p.parent) break;
        gamma = pushdown_param(gamma, p.chart);
        cur = p.parent;
    }
    return gamma;
}

inline BranchData curvetta_branch(const ResolutionTree& tree, PointId point, const Param& local) {
    BranchData b;
    b.attach_point = point;
    b.parametrization = blow_down(tree, point, local, b.m);
    b.base_multiplicity = b.parametrization->multiplicity();
    return b;
}

}  // namespace detail

/// Multiplicity map of a curvetta attached at `point`, transverse to the line
/// `divisor`, for a given slope.
inline std::map<PointId, unsigned> curvetta_multiplicities(const ResolutionTree& tree, PointId point, CoordLine divisor,
                                                           const Rational& slope) {
    std::map<PointId, unsigned> m;
    detail::blow_down(tree, point, detail::transverse_curvetta(divisor, slope), m);
    return m;
}

/// Separatrices transverse to the divisor at final non-corner singular points.
///
/// The m-map is that of a transverse curvetta at the same point, checked to
/// be independent of the curvetta slope. An unblown root contributes its own
/// separatrices: one leaf if regular, two otherwise.
inline std::vector<BranchData> isolated_branches(const ResolutionTree& tree) {
    std::vector<BranchData> out;
    if (tree.blowup_count() == 0) {
        const SingularityClass& cls = tree.root().cls;
        if (is_non_reduced(cls)) throw PreconditionError("isolated_branches: tree is not reduced");
        BranchData b;
        b.attach_point = tree.root().id;
        out.push_back(b);
        if (is_singular(cls)) {
            if (std::holds_alternative<SaddleNode>(cls)) {
                b.kind = BranchKind::isolated_weak;
                b.formal = true;
            }
            out.push_back(b);
        }
        return out;
    }
    for (PointId id : tree.final_points()) {
        const InfNearPoint& p = tree.point(id);
        if (!is_singular(p.cls) || p.is_corner()) continue;
        const auto comps = p.components();
        if (comps.empty()) continue;
        const ComponentId c = comps.front();
        if (tree.component(c).dicritical) continue;
        const CoordLine line = p.on_x_zero ? CoordLine::x_zero : CoordLine::y_zero;

        BranchData b;
        b.component = c;
        b.attach_point = id;
        if (const auto* sn = std::get_if<SaddleNode>(&p.cls)) {
            const bool weak_on_divisor =
                line == CoordLine::x_zero ? sn->weak_direction.along_y_axis() : sn->weak_direction.along_x_axis();
            if (!weak_on_divisor) {
                b.kind = BranchKind::isolated_weak;
                b.formal = true;
            }
        }
        const Param local = detail::transverse_curvetta(line, Rational(0));
        b.parametrization = detail::blow_down(tree, id, local, b.m);
        b.base_multiplicity = b.parametrization->multiplicity();
        for (long s : {1L, -1L})
            if (curvetta_multiplicities(tree, id, line, Rational(s)) != b.m)
                throw InvariantViolation("curvetta multiplicities depend on the slope at point " + std::to_string(id));
        out.push_back(std::move(b));
    }
    return out;
}

/// Curvettas representing dicritical separatrices: |2 − Val(D)| of them on
/// each dicritical D, with coefficient sign(2 − Val(D)). They are attached at
/// chart-1 values offset+1, offset+2, … of D, skipping recorded points.
inline std::vector<DivisorTerm> dicritical_attachments(const ResolutionTree& tree, unsigned offset = 0) {
    std::vector<DivisorTerm> out;
    for (const Component& d : tree.components()) {
        if (!d.dicritical) continue;
        const long n = 2 - static_cast<long>(d.valence);
        if (n == 0) continue;
        std::vector<Rational> taken;
        for (PointId child : tree.children(d.birth)) {
            const Chart& ch = tree.point(child).chart;
            if (ch.kind == ChartKind::first) taken.push_back(ch.offset);
        }
        long placed = 0;
        for (long v = static_cast<long>(offset) + 1; placed < std::labs(n); ++v) {
            const Rational c(v);
            if (std::find(taken.begin(), taken.end(), c) != taken.end()) continue;
            const Param local = pushdown_param(detail::transverse_curvetta(CoordLine::x_zero, Rational(0)), Chart::first(c));
            BranchData b = detail::curvetta_branch(tree, d.birth, local);
            b.component = d.id;
            b.attach_offset = c;
            b.kind = BranchKind::dicritical_curvetta;
            out.push_back({std::move(b), n > 0 ? 1L : -1L});
            ++placed;
        }
    }
    return out;
}

/// Isolated branches with coefficient 1 plus the dicritical curvettas.
inline SeparatrixDivisor balanced_divisor(const ResolutionTree& tree, unsigned offset = 0) {
    SeparatrixDivisor div;
    for (auto& b : isolated_branches(tree)) div.terms.push_back({std::move(b), 1});
    for (auto& t : dicritical_attachments(tree, offset)) div.terms.push_back(std::move(t));
    return div;
}

/// i_p(γ, {f = 0}) = ord_t f(γ(t)).
inline unsigned intersection_number(const Param& gamma, const BiPoly& f) {
    const ParamPoly v = eval_on_param(f, gamma);
    if (v.is_zero()) throw InfiniteIntersectionError();
    return v.order();
}

inline unsigned intersection_number(const BranchData& b, const BiPoly& f) {
    if (!b.parametrization) throw PreconditionError("branch carries no parametrization");
    return intersection_number(*b.parametrization, f);
}

/// Σ a_B · i_p(B, f).
inline long intersection_number(const SeparatrixDivisor& div, const BiPoly& f) {
    long s = 0;
    for (const auto& t : div.terms) s += t.coefficient * static_cast<long>(intersection_number(t.branch, f));
    return s;
}

/// Local intersection number at the origin of two plane curves (Fulton's algorithm).
inline unsigned intersection_number(BiPoly f, BiPoly g) {
    unsigned acc = 0;
    for (;;) {
        if (f.is_zero() || g.is_zero()) throw InfiniteIntersectionError();
        if (sgn(f.constant_term()) != 0 || sgn(g.constant_term()) != 0) return acc;
        UniPoly fr = restrict_y_zero(f), gr = restrict_y_zero(g);
        if (fr.is_zero() && gr.is_zero()) throw InfiniteIntersectionError();
        if (!fr.is_zero() && !gr.is_zero() && fr.degree() > gr.degree()) {
            std::swap(f, g);
            std::swap(fr, gr);
        }
        if (fr.is_zero()) std::swap(f, g), std::swap(fr, gr);
        if (gr.is_zero()) {
            // g = y·h: i(f, g) = i(f, y) + i(f, h)
            acc += fr.order();
            g = g.unshifted(1, 1);
            continue;
        }
        const BiPoly shift = BiPoly::monomial({gr.degree() - fr.degree(), 0}, gr.leading());
        g = g * fr.leading() - shift * f;
    }
}

}  // namespace foliage
