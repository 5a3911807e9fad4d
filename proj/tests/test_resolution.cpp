#include <gtest/gtest.h>

#include "foliage/foliage.hpp"
#include "support/oracles.hpp"

using namespace foliage;
using namespace foliage::poly;

namespace {

OneFormGerm germ(const BiPoly& p, const BiPoly& q) { return OneFormGerm::saturated(p, q); }

OneFormGerm omega(unsigned k, long lambda) {
    const BiPoly l1 = c(lambda + 1);
    return germ(y() * (c(2) * x().pow(2 * k - 2) + c(2) * l1 * x() * x() * y().pow(k - 2) - y().pow(k - 1)),
                x() * (y().pow(k - 1) - l1 * x() * x() * y().pow(k - 2) - x().pow(2 * k - 2)));
}

OneFormGerm cusp() { return germ(c(-3) * x() * x(), c(2) * y()); }
OneFormGerm radial() { return germ(-y(), x()); }

}  // namespace

TEST(Reduce, AlreadyReduced) {
    const ResolutionTree t = reduce(germ(y(), x()));
    EXPECT_EQ(t.blowup_count(), 0u);
    EXPECT_TRUE(t.components().empty());
    EXPECT_EQ(t.points().size(), 1u);
}

TEST(Reduce, OmegaThreeShape) {
    const ResolutionTree t = reduce(omega(3, 1));
    ASSERT_EQ(t.components().size(), 2u);
    EXPECT_TRUE(t.component(0).dicritical);
    EXPECT_FALSE(t.component(1).dicritical);
    EXPECT_EQ(t.point(t.component(0).birth).stage, 0u);
    EXPECT_EQ(t.point(t.component(1).birth).stage, 1u);
    std::vector<PointId> stage1_non_reduced;
    for (const auto& p : t.points())
        if (p.stage == 1 && is_non_reduced(p.cls)) stage1_non_reduced.push_back(p.id);
    ASSERT_EQ(stage1_non_reduced.size(), 1u);
    EXPECT_EQ(t.point(stage1_non_reduced[0]).on_x_zero, ComponentId{0});
}

TEST(Reduce, CuspShape) {
    const ResolutionTree t = reduce(cusp());
    ASSERT_EQ(t.components().size(), 3u);
    for (const auto& c : t.components()) EXPECT_FALSE(c.dicritical);
    // third blow-up at the corner of the first two components
    const InfNearPoint& third = t.point(t.component(2).birth);
    EXPECT_TRUE(third.is_corner());
    EXPECT_EQ(t.component(0).valence, 1u);
    EXPECT_EQ(t.component(1).valence, 1u);
    EXPECT_EQ(t.component(2).valence, 2u);
    EXPECT_EQ(t.component(2).neighbours, (std::set<ComponentId>{0, 1}));
}

TEST(Reduce, FinalPointsAreReduced) {
    for (const OneFormGerm& g : {omega(3, 1), omega(4, 1), cusp(), radial()}) {
        const ResolutionTree t = reduce(g);
        for (PointId id : t.final_points()) EXPECT_FALSE(is_non_reduced(t.point(id).cls));
    }
}

TEST(Reduce, DepthGuardCarriesPartialTree) {
    ReduceOptions o;
    o.max_depth = 1;
    try {
        reduce(cusp(), o);
        FAIL() << "expected a depth error";
    } catch (const ResolutionDepthError& e) {
        EXPECT_EQ(e.partial_tree().blowup_count(), 1u);
    }
}

TEST(Reduce, IrrationalPointIsUnsupported) {
    // tangent cone x(x^2 - 2y^2): two tangents with slope ±1/√2
    const BiPoly f = x().pow(3) - c(2) * x() * y() * y() + y().pow(4);
    try {
        reduce(germ(f.derivative(0), f.derivative(1)));
        FAIL() << "expected an unsupported-field error";
    } catch (const UnsupportedFieldError& e) {
        EXPECT_NE(e.factor().find("y^2"), std::string::npos) << e.factor();
    }
}

TEST(SingularPointsOnDivisor, Examples) {
    EXPECT_TRUE(singular_points_on_divisor(blowup(radial()).first.strict, CoordLine::x_zero).empty());
    const auto cusp_pts = singular_points_on_divisor(blowup(cusp()).first.strict, CoordLine::x_zero);
    ASSERT_EQ(cusp_pts.size(), 1u);
    EXPECT_EQ(cusp_pts[0], Rational(0));
    EXPECT_EQ(singular_points_on_divisor(blowup(omega(3, 1)).first.strict, CoordLine::x_zero).size(), 1u);
}

TEST(Rho, Examples) {
    const ResolutionTree r = reduce(radial());
    EXPECT_EQ(rho(r, 0), 1u);
    const ResolutionTree c = reduce(cusp());
    EXPECT_EQ(rho(c, 2), 2u);
    EXPECT_EQ(oracle::rho_by_composite(c, 2), 2u);
    const ResolutionTree w = reduce(omega(3, 1));
    EXPECT_EQ(rho(w, 1), 1u);
    EXPECT_EQ(oracle::rho_by_composite(w, 1), 1u);
}

TEST(RhoRelative, Examples) {
    const ResolutionTree c = reduce(cusp());
    for (ComponentId d = 0; d < 3; ++d) EXPECT_EQ(rho_relative(c, 0, d), rho(c, d));
    const PointId q1 = c.component(1).birth;
    EXPECT_EQ(rho_relative(c, q1, 1), 1u);
    EXPECT_EQ(rho_relative(c, q1, 2), 1u);
    EXPECT_THROW(rho_relative(c, q1, 0), DomainError);
}

TEST(TangentSaddleNodes, Examples) {
    EXPECT_TRUE(tangent_saddle_nodes(reduce(cusp())).empty());
    EXPECT_TRUE(tangent_saddle_nodes(reduce(radial())).empty());
    const auto sns = tangent_saddle_nodes(reduce(omega(3, 1)));
    ASSERT_EQ(sns.size(), 1u);
    EXPECT_EQ(sns[0].component, 1u);
    EXPECT_EQ(sns[0].weak_index, 3u);
}

TEST(ResolutionProperties, RhoEqualsCurvettaMultiplicity) {
    oracle::FormGenerator gen(41);
    int checked = 0;
    for (int it = 0; it < 250; ++it) {
        auto [p, q] = gen.form(5);
        if (p.is_zero() && q.is_zero()) continue;
        try {
            const ResolutionTree t = reduce(germ(p, q));
            for (const auto& comp : t.components()) {
                EXPECT_EQ(comp.rho, oracle::rho_by_composite(t, comp.id));
                ++checked;
            }
        } catch (const UnsupportedFieldError&) {
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(ResolutionProperties, StructuralInvariants) {
    oracle::FormGenerator gen(42);
    int trees = 0;
    for (int it = 0; it < 150; ++it) {
        auto [p, q] = gen.form(5);
        if (p.is_zero() && q.is_zero()) continue;
        ResolutionTree t(germ(p, q));
        try {
            t = reduce(germ(p, q));
        } catch (const UnsupportedFieldError&) {
            continue;
        }
        ++trees;
        EXPECT_TRUE(t.root().components().empty());
        std::size_t adjacency = 0;
        for (const auto& c : t.components()) {
            EXPECT_EQ(c.epsilon, c.dicritical ? 1u : 0u);
            EXPECT_GE(c.rho, 1u);
            EXPECT_EQ(c.valence, c.neighbours.size());
            adjacency += c.neighbours.size();
            for (ComponentId n : c.neighbours) {
                EXPECT_TRUE(t.component(n).neighbours.count(c.id));
                if (c.dicritical) { EXPECT_FALSE(t.component(n).dicritical); }
            }
        }
        EXPECT_EQ(adjacency % 2, 0u);
        for (PointId id : t.final_points()) {
            const InfNearPoint& pt = t.point(id);
            EXPECT_FALSE(is_non_reduced(pt.cls));
            for (ComponentId c : pt.components())
                if (t.component(c).dicritical) { EXPECT_TRUE(is_regular(pt.cls)); }
            if (pt.is_corner()) { EXPECT_TRUE(t.component(*pt.on_x_zero).neighbours.count(*pt.on_y_zero)); }
        }
        // each germ is the strict transform of its parent's germ through its chart
        for (const auto& pt : t.points()) {
            if (!pt.parent) continue;
            const OneFormGerm& up = t.point(*pt.parent).germ;
            auto [a, b] = pullback_form(up.p(), up.q(), pt.chart.to_parent());
            const std::size_t v = pt.chart.divisor_var();
            unsigned m = ~0u;
            if (!a.is_zero()) m = std::min(m, a.order_in(v));
            if (!b.is_zero()) m = std::min(m, b.order_in(v));
            EXPECT_EQ(a.unshifted(v, m), pt.germ.p());
            EXPECT_EQ(b.unshifted(v, m), pt.germ.q());
        }
    }
    EXPECT_GT(trees, 100);
}
