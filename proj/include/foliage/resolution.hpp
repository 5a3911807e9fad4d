#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "foliage/blowup.hpp"
#include "foliage/error.hpp"
#include "foliage/foliation.hpp"

namespace foliage {

using PointId = std::size_t;
using ComponentId = std::size_t;

/// A point of some intermediate surface of the blow-up cascade.
///
/// Local coordinates are centered at the point. Every exceptional component
/// through it is one of the two coordinate axes.
struct InfNearPoint {
    PointId id = 0;
    unsigned stage = 0;
    std::optional<PointId> parent;          ///< center whose blow-up created this point
    Chart chart;                            ///< local coords → parent coords
    std::optional<ComponentId> on_x_zero;   ///< component with local equation x = 0
    std::optional<ComponentId> on_y_zero;   ///< component with local equation y = 0
    OneFormGerm germ = OneFormGerm::trusted(poly::y(), BiPoly{});
    SingularityClass cls;
    std::optional<ComponentId> exceptional; ///< component created by blowing this point up

    /// V(q): components through the point.
    std::vector<ComponentId> components() const {
        std::vector<ComponentId> v;
        if (on_x_zero) v.push_back(*on_x_zero);
        if (on_y_zero) v.push_back(*on_y_zero);
        return v;
    }

    bool is_center() const { return exceptional.has_value(); }
    bool is_corner() const { return on_x_zero && on_y_zero; }
};

struct Component {
    ComponentId id = 0;
    PointId birth = 0;
    bool dicritical = false;
    unsigned rho = 1;
    unsigned valence = 0;
    unsigned epsilon = 0;
    std::vector<PointId> residents;     ///< recorded points lying on the component
    std::set<ComponentId> neighbours;   ///< components meeting this one in the current surface
};

enum class BlowupOrder { lowest_id_first, highest_id_first };

struct ReduceOptions {
    unsigned max_depth = 64;
    BlowupOrder order = BlowupOrder::lowest_id_first;
};

/// Full history of a reduction of singularities.
class ResolutionTree {
public:
    explicit ResolutionTree(OneFormGerm root) : root_germ_(std::move(root)) {}

    const OneFormGerm& root_germ() const noexcept { return root_germ_; }
    const std::vector<InfNearPoint>& points() const noexcept { return points_; }
    const std::vector<Component>& components() const noexcept { return components_; }
    const std::vector<PointId>& blowup_order() const noexcept { return order_; }

    const InfNearPoint& point(PointId id) const { return points_.at(id); }
    const Component& component(ComponentId id) const { return components_.at(id); }
    const InfNearPoint& root() const { return points_.at(0); }

    bool has_component(ComponentId id) const { return id < components_.size(); }

    std::vector<PointId> children(PointId id) const {
        std::vector<PointId> out;
        for (const auto& p : points_)
            if (p.parent == id) out.push_back(p.id);
        return out;
    }

    /// Points never blown up.
    std::vector<PointId> final_points() const {
        std::vector<PointId> out;
        for (const auto& p : points_)
            if (!p.is_center()) out.push_back(p.id);
        return out;
    }

    /// Whether `descendant` equals `ancestor` or is infinitely near to it.
    bool is_above(PointId descendant, PointId ancestor) const {
        std::optional<PointId> cur = descendant;
        while (cur) {
            if (*cur == ancestor) return true;
            cur = points_.at(*cur).parent;
        }
        return false;
    }

    /// Address of a point: the chart steps from the root. Independent of id labeling.
    std::vector<std::pair<int, Rational>> address(PointId id) const {
        std::vector<std::pair<int, Rational>> path;
        std::optional<PointId> cur = id;
        while (cur && points_.at(*cur).parent) {
            const auto& p = points_.at(*cur);
            path.emplace_back(p.chart.kind == ChartKind::first ? 1 : 2, p.chart.offset);
            cur = p.parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    std::string address_string(PointId id) const {
        std::string s = "p";
        for (const auto& [k, c] : address(id)) s += k == 1 ? "/1:" + c.get_str() : std::string("/2");
        return s;
    }

    /// Chart steps from the root to a first chart of D (its birth chart, uncentered).
    std::vector<Chart> chart_chain(ComponentId d) const {
        std::vector<Chart> chain{Chart::first()};
        std::optional<PointId> cur = component(d).birth;
        while (cur && points_.at(*cur).parent) {
            chain.push_back(points_.at(*cur).chart);
            cur = points_.at(*cur).parent;
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
    }

    std::size_t blowup_count() const noexcept { return order_.size(); }

private:
    friend class Resolver;

    OneFormGerm root_germ_;
    std::vector<InfNearPoint> points_;
    std::vector<Component> components_;
    std::vector<PointId> order_;
};

/// Resolution exceeded the depth guard; carries the partial tree.
class ResolutionDepthError : public Error {
public:
    ResolutionDepthError(unsigned depth, std::shared_ptr<const ResolutionTree> partial)
        : Error("resolution depth " + std::to_string(depth) + " exceeded"), partial_(std::move(partial)) {}

    const ResolutionTree& partial_tree() const { return *partial_; }

private:
    std::shared_ptr<const ResolutionTree> partial_;
};

/// Rational common zeros of P and Q on the line `divisor` of a chart.
/// Throws UnsupportedFieldError when some common zero is not rational.
inline std::vector<Rational> singular_points_on_divisor(const OneFormGerm& strict, CoordLine divisor) {
    const bool on_x = divisor == CoordLine::x_zero;
    const UniPoly a = on_x ? restrict_x_zero(strict.p()) : restrict_y_zero(strict.p());
    const UniPoly b = on_x ? restrict_x_zero(strict.q()) : restrict_y_zero(strict.q());
    const UniPoly g = gcd(a, b);
    if (g.is_zero()) throw InvariantViolation("strict transform vanishes along the divisor");
    if (g.degree() == 0) return {};
    RootSplit split = rational_roots(g);
    if (split.residual.degree() > 0)
        throw UnsupportedFieldError("irrational singular point on the divisor",
                                    split.residual.to_string(on_x ? "y" : "x"));
    return split.roots;
}

namespace detail {

/// Divisor values c ∈ Q of the first chart whose point needs attention: the
/// singular points, and for a dicritical divisor also the tangency points.
inline std::vector<Rational> special_points_on_divisor(const OneFormGerm& strict_first, bool dicritical) {
    if (!dicritical) return singular_points_on_divisor(strict_first, CoordLine::x_zero);
    const UniPoly along = restrict_x_zero(strict_first.q());
    if (along.is_zero()) throw InvariantViolation("dicritical divisor is invariant");
    if (along.degree() == 0) return {};
    RootSplit split = rational_roots(along);
    if (split.residual.degree() > 0)
        throw UnsupportedFieldError("irrational tangency point on a dicritical divisor",
                                    split.residual.to_string("y"));
    return split.roots;
}

}  // namespace detail

/// Builds a ResolutionTree by iterated point blow-ups.
class Resolver {
public:
    Resolver(const OneFormGerm& germ, ReduceOptions options)
        : tree_(std::make_shared<ResolutionTree>(germ)), options_(options) {}

    ResolutionTree run() {
        InfNearPoint root;
        root.germ = tree_->root_germ_;
        root.cls = classify(root.germ);
        add_point(std::move(root));
        while (!pending_.empty()) {
            const PointId next =
                options_.order == BlowupOrder::lowest_id_first ? *pending_.begin() : *pending_.rbegin();
            pending_.erase(next);
            if (tree_->points_[next].stage >= options_.max_depth)
                throw ResolutionDepthError(options_.max_depth, std::make_shared<ResolutionTree>(*tree_));
            blow_up(next);
        }
        finalize();
        return *tree_;
    }

private:
    bool is_dicritical_component(const std::optional<ComponentId>& c) const {
        return c && tree_->components_[*c].dicritical;
    }

    /// A point stays only if it is regular and in normal position with the
    /// divisor, or a reduced singularity on invariant components.
    bool needs_blowup(const InfNearPoint& q) const {
        if (is_non_reduced(q.cls)) return true;
        const bool dx = is_dicritical_component(q.on_x_zero);
        const bool dy = is_dicritical_component(q.on_y_zero);
        if (is_singular(q.cls)) return dx || dy;
        if (dx && dy) return true;
        // regular point: the leaf must be transverse to a dicritical component
        if (dx && sgn(q.germ.q().constant_term()) == 0) return true;
        if (dy && sgn(q.germ.p().constant_term()) == 0) return true;
        return false;
    }

    PointId add_point(InfNearPoint p) {
        p.id = tree_->points_.size();
        for (ComponentId c : p.components()) tree_->components_[c].residents.push_back(p.id);
        const bool pending = needs_blowup(p);
        tree_->points_.push_back(std::move(p));
        if (pending) pending_.insert(tree_->points_.back().id);
        return tree_->points_.back().id;
    }

    void blow_up(PointId qid) {
        const InfNearPoint q = tree_->points_[qid];
        const BlowupResult res = blowup_any(q.germ);

        Component e;
        e.id = tree_->components_.size();
        e.birth = qid;
        e.dicritical = res.dicritical;
        e.epsilon = res.dicritical ? 1 : 0;
        unsigned rho = 0;
        for (ComponentId c : q.components()) rho += tree_->components_[c].rho;
        e.rho = std::max(1u, rho);
        const auto through = q.components();
        for (ComponentId c : through) {
            e.neighbours.insert(c);
            tree_->components_[c].neighbours.insert(e.id);
        }
        if (through.size() == 2) {
            tree_->components_[through[0]].neighbours.erase(through[1]);
            tree_->components_[through[1]].neighbours.erase(through[0]);
        }
        tree_->components_.push_back(e);
        tree_->points_[qid].exceptional = e.id;
        tree_->order_.push_back(qid);

        std::vector<Rational> offsets = detail::special_points_on_divisor(res.first.strict, res.dicritical);
        if (q.on_y_zero && std::find(offsets.begin(), offsets.end(), Rational(0)) == offsets.end())
            offsets.push_back(Rational(0));
        std::sort(offsets.begin(), offsets.end());
        for (const Rational& c : offsets) {
            InfNearPoint p;
            p.stage = q.stage + 1;
            p.parent = qid;
            p.chart = Chart::first(c);
            p.on_x_zero = e.id;
            if (sgn(c) == 0) p.on_y_zero = q.on_y_zero;
            p.germ = translate(res.first.strict, Rational(0), c);
            p.cls = classify(p.germ);
            add_point(std::move(p));
        }

        const OneFormGerm& s2 = res.second.strict;
        const bool p0 = sgn(s2.p().constant_term()) == 0;
        const bool q0 = sgn(s2.q().constant_term()) == 0;
        const bool special = res.dicritical ? p0 : (p0 && q0);
        if (special || q.on_x_zero) {
            InfNearPoint p;
            p.stage = q.stage + 1;
            p.parent = qid;
            p.chart = Chart::second();
            p.on_x_zero = q.on_x_zero;
            p.on_y_zero = e.id;
            p.germ = s2;
            p.cls = classify(p.germ);
            add_point(std::move(p));
        }
    }

    void finalize() {
        for (auto& c : tree_->components_) c.valence = static_cast<unsigned>(c.neighbours.size());
        for (const auto& p : tree_->points_) {
            if (p.is_center()) continue;
            if (needs_blowup(p))
                throw InvariantViolation("final point " + std::to_string(p.id) + " is not reduced");
            if (is_singular(p.cls) && (is_dicritical_component(p.on_x_zero) || is_dicritical_component(p.on_y_zero)))
                throw InvariantViolation("singular point on a dicritical component");
        }
        for (const auto& c : tree_->components_) {
            if (!c.dicritical) continue;
            for (ComponentId n : c.neighbours)
                if (tree_->components_[n].dicritical)
                    throw InvariantViolation("two dicritical components meet");
        }
    }

    std::shared_ptr<ResolutionTree> tree_;
    ReduceOptions options_;
    std::set<PointId> pending_;
};

/// Reduction of singularities: blows up until every point is reduced and every
/// dicritical component is everywhere transverse to the foliation.
inline ResolutionTree reduce(const OneFormGerm& germ, ReduceOptions options = {}) {
    return Resolver(germ, options).run();
}

/// ρ(D): recursion ρ(E) = max(1, Σ_{C ∈ V(q)} ρ(C)) over the birth point q.
inline unsigned rho(const ResolutionTree& tree, ComponentId d) { return tree.component(d).rho; }

/// ρ of D for the reduction of the germ at q: components through q that
/// predate q are invariant curves of that germ, not part of its divisor.
inline unsigned rho_relative(const ResolutionTree& tree, PointId q, ComponentId d) {
    const Component& comp = tree.component(d);
    if (!tree.is_above(comp.birth, q))
        throw DomainError("component " + std::to_string(d) + " is not above point " + std::to_string(q));
    unsigned sum = 0;
    for (ComponentId c : tree.point(comp.birth).components())
        if (tree.is_above(tree.component(c).birth, q)) sum += rho_relative(tree, q, c);
    return std::max(1u, sum);
}

struct TangentSaddleNode {
    PointId point;
    ComponentId component;  ///< D_q, containing the weak separatrix
    unsigned weak_index;
};

/// Final saddle-nodes whose weak separatrix is an exceptional component.
inline std::vector<TangentSaddleNode> tangent_saddle_nodes(const ResolutionTree& tree) {
    std::vector<TangentSaddleNode> out;
    for (PointId id : tree.final_points()) {
        const InfNearPoint& p = tree.point(id);
        const auto* sn = std::get_if<SaddleNode>(&p.cls);
        if (!sn) continue;
        auto check = [&](const std::optional<ComponentId>& comp, CoordLine line, bool tangent) {
            if (!comp || !tangent || tree.component(*comp).dicritical) return;
            out.push_back({id, *comp, weak_index_along(p.germ, line)});
        };
        check(p.on_y_zero, CoordLine::y_zero, sn->weak_direction.along_x_axis());
        check(p.on_x_zero, CoordLine::x_zero, sn->weak_direction.along_y_axis());
    }
    return out;
}

}  // namespace foliage
