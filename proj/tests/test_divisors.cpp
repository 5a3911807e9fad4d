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

Param cusp_branch() { return {ParamPoly::monomial(2, Rational(1)), ParamPoly::monomial(3, Rational(1))}; }

}  // namespace

TEST(IsolatedBranches, Radial) { EXPECT_TRUE(isolated_branches(reduce(radial())).empty()); }

TEST(IsolatedBranches, Cusp) {
    const ResolutionTree t = reduce(cusp());
    const auto branches = isolated_branches(t);
    ASSERT_EQ(branches.size(), 1u);
    const BranchData& b = branches[0];
    EXPECT_EQ(b.base_multiplicity, 2u);
    ASSERT_EQ(b.m.size(), 3u);
    std::vector<unsigned> seq;
    for (const auto& c : t.components()) seq.push_back(b.multiplicity_at(c.birth));
    EXPECT_EQ(seq, (std::vector<unsigned>{2, 1, 1}));
    EXPECT_EQ(b.parametrization->multiplicity(), 2u);
}

TEST(IsolatedBranches, ReducedRootUsesItsOwnSeparatrices) {
    const auto two = isolated_branches(reduce(germ(y(), x())));
    ASSERT_EQ(two.size(), 2u);
    for (const auto& b : two) EXPECT_EQ(b.base_multiplicity, 1u);
    const auto sn = isolated_branches(reduce(germ(-y(), x() * x())));
    ASSERT_EQ(sn.size(), 2u);
    EXPECT_EQ(sn[1].kind, BranchKind::isolated_weak);
    EXPECT_EQ(isolated_branches(reduce(germ(BiPoly{}, c(1)))).size(), 1u);
}

TEST(IsolatedBranches, TangentSaddleNodeContributesOnlyItsStrongBranch) {
    const ResolutionTree t = reduce(omega(3, 1));
    const auto branches = isolated_branches(t);
    ASSERT_EQ(branches.size(), 1u);
    EXPECT_EQ(branches[0].kind, BranchKind::isolated_strong);
    const ResolutionTree s = reduce(germ(-x() * x() * y() + y() * y(), x() * x() * x()));
    for (const auto& b : isolated_branches(s)) EXPECT_GE(b.base_multiplicity, 1u);
}

TEST(DicriticalAttachments, Examples) {
    const auto r = dicritical_attachments(reduce(radial()));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].coefficient, 1);
    EXPECT_EQ(r[1].coefficient, 1);
    EXPECT_NE(*r[0].branch.attach_offset, *r[1].branch.attach_offset);
    const auto w = dicritical_attachments(reduce(omega(3, 1)));
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0].coefficient, 1);
}

TEST(DicriticalAttachments, NegativeCoefficientForValenceThree) {
    // a dicritical first component meeting three invariant components
    const BiPoly f = x() * y() * (x() - y());
    const OneFormGerm g = germ(-y() * f + x().pow(5), x() * f + y().pow(5));
    const ResolutionTree u = reduce(g);
    bool found = false;
    for (const auto& c : u.components()) {
        if (!c.dicritical || c.valence != 3) continue;
        found = true;
        const SeparatrixDivisor d = balanced_divisor(u);
        EXPECT_EQ(d.coefficient_sum(c.id), -1);
        EXPECT_TRUE(d.is_primitive());
    }
    EXPECT_TRUE(found);
}

TEST(BalancedDivisor, Examples) {
    EXPECT_EQ(balanced_divisor(reduce(radial())).multiplicity(), 2);
    const SeparatrixDivisor rd = balanced_divisor(reduce(radial()));
    for (const auto& t : rd.terms) EXPECT_EQ(t.branch.parametrization->multiplicity(), 1u);
    EXPECT_EQ(balanced_divisor(reduce(omega(3, 1))).multiplicity(), 2);
    EXPECT_EQ(balanced_divisor(reduce(germ(y(), x()))).multiplicity(), 2);
}

TEST(IntersectionNumber, Examples) {
    EXPECT_EQ(intersection_number(x(), y()), 1u);
    EXPECT_EQ(intersection_number(cusp_branch(), x()), 2u);
    EXPECT_EQ(intersection_number(cusp_branch(), y()), 3u);
    EXPECT_THROW(intersection_number(cusp_branch(), y() * y() - x().pow(3)), InfiniteIntersectionError);
    EXPECT_THROW(intersection_number(x() * y(), y() * (x() + c(1))), InfiniteIntersectionError);
}

TEST(IntersectionNumber, BranchAgreesWithImplicitCurve) {
    // Fulton's algorithm on the implicit cusp versus ord_t on its parametrization
    const BiPoly cusp_eq = y() * y() - x().pow(3);
    oracle::FormGenerator gen(51);
    for (int it = 0; it < 80; ++it) {
        const BiPoly f = gen.poly(1, 4, 3);
        if (f.is_zero()) continue;
        const ParamPoly v = eval_on_param(f, cusp_branch());
        if (v.is_zero()) continue;
        EXPECT_EQ(intersection_number(cusp_branch(), f), intersection_number(cusp_eq, f)) << f;
    }
}

TEST(DivisorProperties, SlopeIndependence) {
    for (const OneFormGerm& g : {cusp(), omega(3, 1), omega(4, 1)}) {
        const ResolutionTree t = reduce(g);
        for (const auto& b : isolated_branches(t)) {
            const CoordLine line = t.point(b.attach_point).on_x_zero ? CoordLine::x_zero : CoordLine::y_zero;
            for (long s : {0L, 1L, -1L, 2L})
                EXPECT_EQ(curvetta_multiplicities(t, b.attach_point, line, Rational(s)), b.m);
        }
    }
}

TEST(DivisorProperties, BalanceAndPrimitivityOnCorpus) {
    oracle::FormGenerator gen(52);
    int trees = 0;
    for (int it = 0; it < 150; ++it) {
        auto [p, q] = gen.form(5);
        if (p.is_zero() && q.is_zero()) continue;
        try {
            const ResolutionTree t = reduce(germ(p, q));
            const SeparatrixDivisor d = balanced_divisor(t);
            ++trees;
            EXPECT_TRUE(d.is_primitive());
            for (const auto& c : t.components())
                if (c.dicritical) { EXPECT_EQ(d.coefficient_sum(c.id), 2 - static_cast<long>(c.valence)); }
            for (const auto& term : d.terms)
                if (term.branch.kind != BranchKind::dicritical_curvetta) { EXPECT_EQ(term.coefficient, 1); }
        } catch (const UnsupportedFieldError&) {
        }
    }
    EXPECT_GT(trees, 100);
}

TEST(DivisorProperties, CamachoLinsNetoSadInequalityForInvariantInputs) {
    oracle::FormGenerator gen(53);
    for (int it = 0; it < 150; ++it) {
        auto [p, q] = gen.form(5);
        if (p.is_zero() && q.is_zero()) continue;
        try {
            const OneFormGerm g = germ(p, q);
            const ResolutionTree t = reduce(g);
            bool dicritical = false;
            for (const auto& c : t.components()) dicritical = dicritical || c.dicritical;
            if (dicritical) continue;
            const SeparatrixDivisor d = balanced_divisor(t);
            EXPECT_GE(static_cast<long>(algebraic_multiplicity(g)), d.multiplicity() - 1);
        } catch (const UnsupportedFieldError&) {
        }
    }
}
