#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "foliage/bivariate.hpp"
#include "foliage/error.hpp"
#include "foliage/polynomial.hpp"

namespace foliage {

/// Germ at the origin of the 1-form ω = P dx + Q dy with coprime P, Q.
class OneFormGerm {
public:
    /// Divides P and Q by their gcd.
    static OneFormGerm saturated(const BiPoly& p, const BiPoly& q) {
        if (p.is_zero() && q.is_zero()) throw PreconditionError("the 1-form is identically zero");
        if (coprime(p, q)) return OneFormGerm(p, q);
        const BiPoly g = gcd(p, q);
        return OneFormGerm(divide_exact(p, g), divide_exact(q, g));
    }

    /// Wraps P, Q that the caller already knows to be coprime.
    static OneFormGerm trusted(BiPoly p, BiPoly q) {
        if (p.is_zero() && q.is_zero()) throw PreconditionError("the 1-form is identically zero");
        return OneFormGerm(std::move(p), std::move(q));
    }

    const BiPoly& p() const noexcept { return p_; }
    const BiPoly& q() const noexcept { return q_; }

    friend bool operator==(const OneFormGerm&, const OneFormGerm&) = default;

    std::string to_string() const {
        return "(" + foliage::to_string(p_) + ") dx + (" + foliage::to_string(q_) + ") dy";
    }

private:
    OneFormGerm(BiPoly p, BiPoly q) : p_(std::move(p)), q_(std::move(q)) {}

    BiPoly p_;
    BiPoly q_;
};

/// ν_p(ω) = min(ord P, ord Q); 0 iff the germ is regular.
inline unsigned algebraic_multiplicity(const OneFormGerm& g) {
    if (g.p().is_zero()) return g.q().order();
    if (g.q().is_zero()) return g.p().order();
    return std::min(g.p().order(), g.q().order());
}

/// Jacobian at the origin of the dual field v = −Q ∂x + P ∂y.
struct LinearPart {
    std::array<std::array<Rational, 2>, 2> m;
    Rational trace;
    Rational det;
};

inline LinearPart linear_part(const OneFormGerm& g) {
    auto coeff = [](const BiPoly& f, unsigned i, unsigned j) { return f.coefficient({i, j}); };
    LinearPart lp;
    lp.m[0][0] = -coeff(g.q(), 1, 0);
    lp.m[0][1] = -coeff(g.q(), 0, 1);
    lp.m[1][0] = coeff(g.p(), 1, 0);
    lp.m[1][1] = coeff(g.p(), 0, 1);
    lp.trace = lp.m[0][0] + lp.m[1][1];
    lp.det = lp.m[0][0] * lp.m[1][1] - lp.m[0][1] * lp.m[1][0];
    return lp;
}

/// Projective tangent direction, normalized to (1, s) or (0, 1).
struct Direction {
    Rational dx;
    Rational dy;

    static Direction of(const Rational& a, const Rational& b) {
        if (sgn(a) == 0 && sgn(b) == 0) throw PreconditionError("zero direction vector");
        if (sgn(a) == 0) return {Rational(0), Rational(1)};
        return {Rational(1), b / a};
    }

    /// Tangent to {y = 0}.
    bool along_x_axis() const { return sgn(dy) == 0; }
    /// Tangent to {x = 0}.
    bool along_y_axis() const { return sgn(dx) == 0; }

    friend bool operator==(const Direction&, const Direction&) = default;
};

struct Regular {
    friend bool operator==(const Regular&, const Regular&) = default;
};
struct NonDegenerateReduced {
    friend bool operator==(const NonDegenerateReduced&, const NonDegenerateReduced&) = default;
};
struct SaddleNode {
    Direction weak_direction;    ///< kernel of the linear part
    Direction strong_direction;  ///< eigendirection of the trace
    std::optional<unsigned> weak_index;
    friend bool operator==(const SaddleNode&, const SaddleNode&) = default;
};
struct NonReduced {
    friend bool operator==(const NonReduced&, const NonReduced&) = default;
};

using SingularityClass = std::variant<Regular, NonDegenerateReduced, SaddleNode, NonReduced>;

inline bool is_regular(const SingularityClass& c) { return std::holds_alternative<Regular>(c); }
inline bool is_singular(const SingularityClass& c) { return !is_regular(c); }
inline bool is_reduced_singularity(const SingularityClass& c) {
    return std::holds_alternative<NonDegenerateReduced>(c) || std::holds_alternative<SaddleNode>(c);
}
inline bool is_non_reduced(const SingularityClass& c) { return std::holds_alternative<NonReduced>(c); }

inline std::string class_name(const SingularityClass& c) {
    switch (c.index()) {
        case 0: return "regular";
        case 1: return "non-degenerate";
        case 2: return "saddle-node";
        default: return "non-reduced";
    }
}

namespace detail {

/// Nonzero vector in the kernel of a rank-one 2x2 matrix.
inline Direction kernel_direction(const std::array<std::array<Rational, 2>, 2>& m) {
    if (sgn(m[0][0]) != 0 || sgn(m[0][1]) != 0) return Direction::of(-m[0][1], m[0][0]);
    return Direction::of(-m[1][1], m[1][0]);
}

}  // namespace detail

/// Eigenvalue ratio λ₁/λ₂ of a nondegenerate linear part lies in Q₊.
///
/// With s = τ²/δ we have λ₁/λ₂ + λ₂/λ₁ = s − 2, so the ratio is a positive
/// rational iff s ≥ 4 and s(s − 4) is a rational square.
inline bool eigen_ratio_positive_rational(const Rational& trace, const Rational& det) {
    if (sgn(det) == 0) throw PreconditionError("degenerate linear part");
    const Rational s = trace * trace / det;
    if (s < 4) return false;
    return rational_sqrt(s * (s - 4)).has_value();
}

inline SingularityClass classify(const OneFormGerm& g) {
    if (algebraic_multiplicity(g) == 0) return Regular{};
    const LinearPart lp = linear_part(g);
    if (sgn(lp.det) != 0) {
        if (eigen_ratio_positive_rational(lp.trace, lp.det)) return NonReduced{};
        return NonDegenerateReduced{};
    }
    if (sgn(lp.trace) == 0) return NonReduced{};  // zero or nilpotent
    SaddleNode sn;
    sn.weak_direction = detail::kernel_direction(lp.m);
    auto shifted = lp.m;
    shifted[0][0] -= lp.trace;
    shifted[1][1] -= lp.trace;
    sn.strong_direction = detail::kernel_direction(shifted);
    return sn;
}

enum class CoordLine {
    x_zero,  ///< the line {x = 0}
    y_zero,  ///< the line {y = 0}
};

inline std::string to_string(CoordLine l) { return l == CoordLine::x_zero ? "x=0" : "y=0"; }

/// Whether {x=0} or {y=0} is an invariant curve of ω.
inline bool is_invariant(const OneFormGerm& g, CoordLine line) {
    return line == CoordLine::y_zero ? restrict_y_zero(g.p()).is_zero() : restrict_x_zero(g.q()).is_zero();
}

/// Tangency order of ω along an invariant coordinate line: ord_t Q(t, 0) for
/// {y=0}; the swap (x, y) ↦ (y, x) gives ord_t P(0, t) for {x=0}.
inline unsigned weak_index_along(const OneFormGerm& g, CoordLine line) {
    if (!is_invariant(g, line)) throw InvariantViolation("line " + to_string(line) + " is not invariant");
    const UniPoly restricted = line == CoordLine::y_zero ? restrict_y_zero(g.q()) : restrict_x_zero(g.p());
    if (restricted.is_zero()) throw InvariantViolation("1-form vanishes identically along " + to_string(line));
    return restricted.order();
}

/// Re-centers the germ at (a, b): substitutes (x + a, y + b).
inline OneFormGerm translate(const OneFormGerm& g, const Rational& a, const Rational& b) {
    if (sgn(a) == 0 && sgn(b) == 0) return g;
    const BiPoly xs = poly::x() + BiPoly(a);
    const BiPoly ys = poly::y() + BiPoly(b);
    return OneFormGerm::trusted(substitute(g.p(), xs, ys), substitute(g.q(), xs, ys));
}

}  // namespace foliage
