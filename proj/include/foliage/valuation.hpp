#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "foliage/blowup.hpp"
#include "foliage/divisors.hpp"
#include "foliage/foliation.hpp"
#include "foliage/resolution.hpp"

namespace foliage {

/// ν_D(F) by recursion over the birth point q of D:
/// ν_q(strict germ) + Σ_{C ∈ V(q)} ν_C(F) + ε(D).
inline unsigned nu_F_along(const ResolutionTree& tree, ComponentId d) {
    const Component& comp = tree.component(d);
    const InfNearPoint& q = tree.point(comp.birth);
    unsigned nu = algebraic_multiplicity(q.germ) + comp.epsilon;
    for (ComponentId c : q.components()) nu += nu_F_along(tree, c);
    return nu;
}

/// ν_D(F) as the vanishing order along D of the undivided pullback of ω
/// through the whole chart chain.
inline unsigned nu_F_direct(const ResolutionTree& tree, ComponentId d) {
    BiPoly a = tree.root_germ().p(), b = tree.root_germ().q();
    for (const Chart& chart : tree.chart_chain(d)) std::tie(a, b) = pullback_form(a, b, chart.to_parent());
    unsigned m = ~0u;
    if (!a.is_zero()) m = std::min(m, a.order_in(0));
    if (!b.is_zero()) m = std::min(m, b.order_in(0));
    return m;
}

/// ξ_q: Σ over tangent saddle-nodes above q, whose weak component is also
/// above q, of ρ_q(D_s)·(weak index − 1). Zero at points never blown up.
inline unsigned xi_at_point(const ResolutionTree& tree, PointId q) {
    if (!tree.point(q).is_center()) return 0;
    unsigned xi = 0;
    for (const auto& sn : tangent_saddle_nodes(tree)) {
        if (!tree.is_above(sn.point, q)) continue;
        if (!tree.is_above(tree.component(sn.component).birth, q)) continue;
        xi += rho_relative(tree, q, sn.component) * (sn.weak_index - 1);
    }
    return xi;
}

/// ξ_D = ξ_q + Σ_{C ∈ V(q)} ξ_C over the birth point q of D.
inline unsigned xi_along(const ResolutionTree& tree, ComponentId d) {
    const InfNearPoint& q = tree.point(tree.component(d).birth);
    unsigned xi = xi_at_point(tree, q.id);
    for (ComponentId c : q.components()) xi += xi_along(tree, c);
    return xi;
}

/// ν_D(Ψ̂) = Σ_B a_B·m_q(B) + Σ_{C ∈ V(q)} ν_C(Ψ̂) over the birth point q of D.
inline long nu_divisor_along(const ResolutionTree& tree, ComponentId d, const SeparatrixDivisor& div) {
    const InfNearPoint& q = tree.point(tree.component(d).birth);
    long nu = div.multiplicity_at(q.id);
    for (ComponentId c : q.components()) nu += nu_divisor_along(tree, c, div);
    return nu;
}

struct ComponentValuation {
    ComponentId id = 0;
    bool dicritical = false;
    unsigned rho = 1;
    unsigned valence = 0;
    unsigned epsilon = 0;
    unsigned nu_F = 0;
    unsigned nu_F_direct = 0;
    long nu_Psi = 0;
    unsigned xi = 0;
    bool theorem_ok = false;
    bool corollary_ok = false;
};

struct ValuationReport {
    std::vector<ComponentValuation> components;
    unsigned nu_p = 0;
    long nu_B = 0;
    unsigned xi_p = 0;
    bool root_ok = false;
    bool second_type = false;

    /// Every identity holds and the two ν_D(F) computations agree.
    bool all_ok() const {
        if (!root_ok) return false;
        return std::all_of(components.begin(), components.end(), [](const ComponentValuation& c) {
            return c.theorem_ok && c.corollary_ok && c.nu_F == c.nu_F_direct;
        });
    }
};

/// Evaluates both sides of ν_D(Ψ̂) = ν_D(F) + 1 − ε(D) − ξ_D on every
/// component, the inequality ν_D(Ψ̂) − 1 + ε(D) ≤ ν_D(F), and the root identity
/// ν_p(F) = ν_p(Ψ̂) − 1 + ξ_p. Violations are reported, not thrown.
inline ValuationReport verify(const ResolutionTree& tree, const SeparatrixDivisor& div) {
    ValuationReport r;
    for (const Component& c : tree.components()) {
        ComponentValuation v;
        v.id = c.id;
        v.dicritical = c.dicritical;
        v.rho = c.rho;
        v.valence = c.valence;
        v.epsilon = c.epsilon;
        v.nu_F = nu_F_along(tree, c.id);
        v.nu_F_direct = nu_F_direct(tree, c.id);
        v.nu_Psi = nu_divisor_along(tree, c.id, div);
        v.xi = xi_along(tree, c.id);
        const long rhs = static_cast<long>(v.nu_F) + 1 - static_cast<long>(v.epsilon) - static_cast<long>(v.xi);
        v.theorem_ok = v.nu_Psi == rhs;
        v.corollary_ok = v.nu_Psi - 1 + static_cast<long>(v.epsilon) <= static_cast<long>(v.nu_F);
        r.components.push_back(v);
    }
    r.nu_p = algebraic_multiplicity(tree.root_germ());
    r.nu_B = div.multiplicity();
    r.xi_p = xi_at_point(tree, tree.root().id);
    r.root_ok = static_cast<long>(r.nu_p) == r.nu_B - 1 + static_cast<long>(r.xi_p);
    r.second_type = r.xi_p == 0;
    if (r.second_type != tangent_saddle_nodes(tree).empty())
        throw InvariantViolation("vanishing tangency excess disagrees with the tangent saddle-node set");
    return r;
}

inline ValuationReport verify(const ResolutionTree& tree, unsigned offset = 0) {
    return verify(tree, balanced_divisor(tree, offset));
}

}  // namespace foliage
