#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "foliage/error.hpp"
#include "foliage/rational.hpp"

namespace foliage {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
/// Trailing zeros are trimmed so equality is structural.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& c) : coeffs_{c} { trim(); }
    UniPoly(std::initializer_list<Rational> c) : coeffs_(c) { trim(); }
    explicit UniPoly(std::vector<Rational> c) : coeffs_(std::move(c)) { trim(); }

    static UniPoly monomial(unsigned degree, const Rational& c) {
        std::vector<Rational> v(degree + 1, Rational(0));
        v[degree] = c;
        return UniPoly(std::move(v));
    }
    static UniPoly identity() { return monomial(1, Rational(1)); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    /// Degree; the zero polynomial reports 0.
    unsigned degree() const { return coeffs_.empty() ? 0 : static_cast<unsigned>(coeffs_.size() - 1); }

    /// ord_t: index of the lowest nonzero coefficient.
    unsigned order() const {
        if (is_zero()) throw UndefinedOrderError();
        unsigned i = 0;
        while (sgn(coeffs_[i]) == 0) ++i;
        return i;
    }

    Rational coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational evaluate(const Rational& t) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UniPoly derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
        return UniPoly(std::move(d));
    }

    /// Multiplies by t^k.
    UniPoly shifted(unsigned k) const {
        if (is_zero()) return {};
        std::vector<Rational> v(k, Rational(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return UniPoly(std::move(v));
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        UniPoly r = *this;
        const Rational lc = leading();
        for (auto& c : r.coeffs_) c /= lc;
        return r;
    }

    /// Composition p(q(t)).
    UniPoly compose(const UniPoly& q) const {
        UniPoly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + UniPoly(*it);
        return acc;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
    UniPoly& operator*=(const Rational& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(v));
    }

    UniPoly pow(unsigned k) const {
        UniPoly r(Rational(1)), base = *this;
        while (k > 0) {
            if (k & 1u) r = r * base;
            k >>= 1u;
            if (k > 0) base = base * base;
        }
        return r;
    }

    /// Euclidean division over Q: returns (quotient, remainder).
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
        UniPoly rem = a;
        if (rem.degree() < b.degree() || rem.is_zero()) return {UniPoly{}, rem};
        std::vector<Rational> quot(rem.degree() - b.degree() + 1, Rational(0));
        const Rational lb = b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const unsigned shift = rem.degree() - b.degree();
            const Rational f = rem.leading() / lb;
            quot[shift] = f;
            for (std::size_t i = 0; i < b.coeffs_.size(); ++i) rem.coeffs_[i + shift] -= f * b.coeffs_[i];
            rem.trim();
        }
        return {UniPoly(std::move(quot)), rem};
    }

    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (sgn(c) == 0) continue;
            if (first) {
                if (sgn(c) < 0) os << "-";
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            first = false;
            const Rational mag = abs(c);
            std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
            if (mono.empty())
                os << mag.get_str();
            else if (mag == 1)
                os << mono;
            else
                os << mag.get_str() << "*" << mono;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

using ParamPoly = UniPoly;

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

/// Monic gcd over Q; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Scales to integer coefficients with content 1 and positive leading coefficient.
inline UniPoly primitive_integer(const UniPoly& p) {
    if (p.is_zero()) return {};
    Integer den = 1, num = 0;
    for (const auto& c : p.coefficients()) {
        if (sgn(c) == 0) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<Rational> v;
    for (const auto& c : p.coefficients()) {
        Rational s = c * den;
        v.push_back(s);
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), s.get_num_mpz_t());
    }
    Rational scale(1);
    scale /= Rational(num);
    if (sgn(p.leading()) < 0) scale = -scale;
    for (auto& c : v) c *= scale;
    return UniPoly(std::move(v));
}

/// p / gcd(p, p'): one copy of every root.
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() == 0) return p;
    return p / gcd(p, p.derivative());
}

namespace detail {

/// Sturm sequence of a squarefree polynomial.
inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = -(chain[chain.size() - 2] % chain.back());
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_changes(const std::vector<UniPoly>& chain, const Rational& t) {
    int changes = 0, last = 0;
    for (const auto& q : chain) {
        const int s = sgn(q.evaluate(t));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Number of distinct real roots in (a, b].
inline int roots_in(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
    return sign_changes(chain, a) - sign_changes(chain, b);
}

}  // namespace detail

/// Rational roots of p, plus what is left after dividing them out.
struct RootSplit {
    std::vector<Rational> roots;  ///< distinct, ascending
    UniPoly residual;             ///< squarefree, primitive, no rational roots; constant 1 if fully split
};

/// Finds every rational root exactly.
///
/// Works on the squarefree primitive part f. Each rational root lies on the
/// lattice (1/lc)·Z; Sturm bisection isolates real roots in intervals shorter
/// than the lattice step, so each interval holds at most one candidate, which
/// is then tested exactly.
inline RootSplit rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw PreconditionError("roots of the zero polynomial");
    RootSplit out;
    UniPoly f = primitive_integer(squarefree_part(p));
    if (f.degree() == 0) {
        out.residual = UniPoly(Rational(1));
        return out;
    }
    if (sgn(f.coefficient(0)) == 0) {
        out.roots.push_back(Rational(0));
        f = primitive_integer(f / UniPoly::identity());
    }
    if (f.degree() > 0) {
        const Rational lc = abs(f.leading());
        Rational bound(0);
        for (unsigned i = 0; i < f.degree(); ++i) bound = std::max(bound, Rational(abs(f.coefficient(i)) / lc));
        bound += 1;
        const auto chain = detail::sturm_chain(f);
        const Rational step = Rational(1) / lc;
        std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
        std::vector<Rational> found;
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            const int n = detail::roots_in(chain, a, b);
            if (n == 0) continue;
            if (n == 1 && b - a < step) {
                Rational lo = a / step, hi = b / step;
                Integer k = lo.get_num() / lo.get_den();  // trunc
                for (; Rational(k) <= hi; ++k) {
                    if (Rational(k) <= lo) continue;
                    Rational cand = Rational(k) * step;
                    cand.canonicalize();
                    if (sgn(f.evaluate(cand)) == 0) found.push_back(cand);
                }
                continue;
            }
            Rational mid = (a + b) / 2;
            work.emplace_back(a, mid);
            work.emplace_back(mid, b);
        }
        for (const auto& r : found) {
            out.roots.push_back(r);
            f = f / UniPoly{-r, Rational(1)};
        }
        f = primitive_integer(f);
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.residual = f.degree() == 0 ? UniPoly(Rational(1)) : f;
    return out;
}

}  // namespace foliage
