#include <gtest/gtest.h>

#include "foliage/foliage.hpp"
#include "support/oracles.hpp"

using namespace foliage;
using namespace foliage::poly;

namespace {

OneFormGerm germ(const BiPoly& p, const BiPoly& q) { return OneFormGerm::saturated(p, q); }

OneFormGerm omega3() {
    return germ(y() * (c(2) * x().pow(4) + c(4) * x() * x() * y() - y() * y()),
                x() * (y() * y() - c(2) * x() * x() * y() - x().pow(4)));
}

/// Total transform in chart 1 by the textbook formula.
std::pair<BiPoly, BiPoly> chart1_total(const BiPoly& p, const BiPoly& q) {
    const BiPoly pp = oracle::expand_substitution(p, x(), x() * y());
    const BiPoly qq = oracle::expand_substitution(q, x(), x() * y());
    return {pp + y() * qq, x() * qq};
}

}  // namespace

TEST(IsDicritical, Examples) {
    EXPECT_TRUE(is_dicritical(germ(-y(), x())));
    EXPECT_FALSE(is_dicritical(germ(y(), x())));
    EXPECT_TRUE(is_dicritical(omega3()));
    EXPECT_THROW(is_dicritical(germ(BiPoly{}, c(1))), PreconditionError);
}

TEST(Blowup, Radial) {
    const BlowupResult r = blowup(germ(-y(), x()));
    EXPECT_TRUE(r.dicritical);
    EXPECT_EQ(r.division_exponent, 2u);
    EXPECT_TRUE(r.first.total.first.is_zero());
    EXPECT_EQ(r.first.total.second, x() * x());
    EXPECT_TRUE(r.first.strict.p().is_zero());
    EXPECT_EQ(r.first.strict.q(), c(1));
}

TEST(Blowup, CuspDifferential) {
    const BiPoly p = c(-3) * x() * x(), q = c(2) * y();
    const BlowupResult r = blowup(germ(p, q));
    EXPECT_FALSE(r.dicritical);
    EXPECT_EQ(r.division_exponent, 1u);
    const auto total = chart1_total(p, q);
    EXPECT_EQ(r.first.total.first, total.first);
    EXPECT_EQ(r.first.total.second, total.second);
    EXPECT_EQ(r.first.total.first, c(2) * x() * y() * y() - c(3) * x() * x());
    EXPECT_EQ(r.first.total.second, c(2) * x() * x() * y());
    EXPECT_EQ(r.first.strict.p(), c(2) * y() * y() - c(3) * x());
    EXPECT_EQ(r.first.strict.q(), c(2) * x() * y());
}

TEST(Blowup, SaddleNode) {
    const BlowupResult r = blowup(germ(-y(), x() * x()));
    EXPECT_FALSE(r.dicritical);
    EXPECT_EQ(r.division_exponent, 1u);
}

TEST(Blowup, RegularGermIsRejected) {
    EXPECT_THROW(blowup(germ(BiPoly{}, c(1))), PreconditionError);
    const BlowupResult r = blowup_any(germ(BiPoly{}, c(1)));
    EXPECT_EQ(r.division_exponent, 0u);
    EXPECT_FALSE(r.dicritical);
}

TEST(PullbackScalar, Examples) {
    EXPECT_EQ(pullback_scalar(x() * y(), Chart::first()), x() * x() * y());
    EXPECT_EQ(strict_pullback_scalar(x() * y(), Chart::first()), y());
    EXPECT_EQ(pullback_scalar(y() * y() - x().pow(3), Chart::first()), x() * x() * (y() * y() - x()));
    EXPECT_EQ(strict_pullback_scalar(y() * y() - x().pow(3), Chart::first()), y() * y() - x());
    EXPECT_EQ(pullback_scalar(x(), Chart::first()), x());
    EXPECT_EQ(strict_pullback_scalar(x(), Chart::first()), c(1));
}

TEST(PushdownParam, Examples) {
    const ParamPoly t = ParamPoly::identity();
    const Param a = pushdown_param(Param{t, ParamPoly(Rational(1))}, ChartKind::first, Rational(0), Rational(0));
    EXPECT_EQ(a.x, t);
    EXPECT_EQ(a.y, t);
    const Param b = pushdown_param(Param{t, ParamPoly{}}, Chart::first());
    EXPECT_EQ(b.x, t);
    EXPECT_TRUE(b.y.is_zero());
    // a centered chart equals translation followed by the plain chart
    const Param c1 = pushdown_param(Param{t, t}, Chart::first(Rational(3)));
    const Param c2 = pushdown_param(Param{t, t}, ChartKind::first, Rational(0), Rational(3));
    EXPECT_EQ(c1, c2);
}

TEST(BlowupProperties, DivisionExponentAndCoprimality) {
    oracle::FormGenerator gen(31);
    int tested = 0;
    for (int it = 0; it < 200; ++it) {
        auto [p, q] = gen.form(5);
        if (p.is_zero() && q.is_zero()) continue;
        const OneFormGerm g = germ(p, q);
        if (algebraic_multiplicity(g) == 0) continue;
        ++tested;
        const BlowupResult r = blowup(g);
        EXPECT_EQ(r.division_exponent, algebraic_multiplicity(g) + (r.dicritical ? 1u : 0u));
        for (const ChartTransform* ct : {&r.first, &r.second}) {
            const OneFormGerm& s = ct->strict;
            const std::size_t v = ct->chart.divisor_var();
            EXPECT_TRUE(is_unit(gcd(s.p(), s.q())));
            const bool p_div = s.p().is_zero() || s.p().order_in(v) > 0;
            const bool q_div = s.q().is_zero() || s.q().order_in(v) > 0;
            EXPECT_FALSE(p_div && q_div);
        }
        const auto total = chart1_total(g.p(), g.q());
        EXPECT_EQ(r.first.total.first, total.first);
        EXPECT_EQ(r.first.total.second, total.second);
    }
    EXPECT_GT(tested, 100);
}

TEST(BlowupProperties, ChartOverlapClassification) {
    // A divisor point (0, c) of chart 1 with c ≠ 0 is (1/c, 0) in chart 2.
    oracle::FormGenerator gen(32);
    int compared = 0;
    for (int it = 0; it < 150; ++it) {
        auto [p, q] = gen.form(4);
        if (p.is_zero() && q.is_zero()) continue;
        const OneFormGerm g = germ(p, q);
        if (algebraic_multiplicity(g) == 0) continue;
        const BlowupResult r = blowup(g);
        for (long cv : {1L, -1L, 2L}) {
            const Rational cc(cv);
            const SingularityClass a = classify(translate(r.first.strict, Rational(0), cc));
            const SingularityClass b = classify(translate(r.second.strict, Rational(1) / cc, Rational(0)));
            EXPECT_EQ(a.index(), b.index()) << g.to_string() << " at c=" << cv;
            ++compared;
        }
    }
    EXPECT_GT(compared, 200);
}

TEST(BlowupProperties, PullbackIsMultiplicative) {
    oracle::FormGenerator gen(33);
    for (int it = 0; it < 100; ++it) {
        const BiPoly f = gen.poly(0, 3, 3), g = gen.poly(0, 3, 3);
        for (const Chart& ch : {Chart::first(), Chart::second(), Chart::first(make_rational(-2, 3))})
            EXPECT_EQ(pullback_scalar(f * g, ch), pullback_scalar(f, ch) * pullback_scalar(g, ch));
    }
}
