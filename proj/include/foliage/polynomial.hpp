#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "foliage/error.hpp"
#include "foliage/rational.hpp"

namespace foliage {

/// Sparse polynomial in N variables over Q.
///
/// Terms live in an ordered map keyed by the exponent vector, and zero
/// coefficients are never stored, so two polynomials are equal iff their term
/// maps are equal. The value is immutable in spirit: every operation returns a
/// new polynomial.
template <std::size_t N>
class Polynomial {
public:
    using Exponent = std::array<unsigned, N>;
    using Terms = std::map<Exponent, Rational>;

    Polynomial() = default;

    explicit Polynomial(const Rational& c) {
        if (sgn(c) != 0) terms_.emplace(Exponent{}, c);
    }

    Polynomial(std::initializer_list<std::pair<Exponent, Rational>> terms) {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    static Polynomial constant(const Rational& c) { return Polynomial(c); }

    static Polynomial variable(std::size_t index) {
        Exponent e{};
        e.at(index) = 1;
        return monomial(e, Rational(1));
    }

    static Polynomial monomial(const Exponent& e, const Rational& c) {
        Polynomial p;
        p.add_term(e, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Exponent{}); }

    /// Adds c·x^e in place, dropping the entry if it cancels.
    void add_term(const Exponent& e, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    static unsigned total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

    /// Largest total degree. Zero polynomial has degree 0 by convention.
    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total(e));
        return d;
    }

    /// Smallest total degree of a term.
    unsigned order() const {
        if (is_zero()) throw UndefinedOrderError();
        unsigned d = ~0u;
        for (const auto& [e, c] : terms_) d = std::min(d, total(e));
        return d;
    }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    /// Largest k such that x_var^k divides the polynomial.
    unsigned order_in(std::size_t var) const {
        if (is_zero()) throw UndefinedOrderError();
        unsigned d = ~0u;
        for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
        return d;
    }

    bool is_homogeneous() const {
        if (is_zero()) return true;
        const unsigned d = total(terms_.begin()->first);
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const auto& t) { return total(t.first) == d; });
    }

    Polynomial homogeneous_part(unsigned d) const {
        Polynomial r;
        for (const auto& [e, c] : terms_)
            if (total(e) == d) r.terms_.emplace(e, c);
        return r;
    }

    /// Leading term in graded order (total degree, then lexicographic).
    std::pair<Exponent, Rational> leading_term() const {
        if (is_zero()) throw PreconditionError("leading term of the zero polynomial");
        auto best = terms_.begin();
        for (auto it = terms_.begin(); it != terms_.end(); ++it)
            if (graded_less(best->first, it->first)) best = it;
        return *best;
    }

    static bool graded_less(const Exponent& a, const Exponent& b) {
        const unsigned ta = total(a), tb = total(b);
        if (ta != tb) return ta < tb;
        return a < b;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial r;
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponent f = e;
            --f[var];
            r.add_term(f, c * e[var]);
        }
        return r;
    }

    /// Multiplies by x_var^k.
    Polynomial shifted(std::size_t var, unsigned k) const {
        Polynomial r;
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            f[var] += k;
            r.terms_.emplace(f, c);
        }
        return r;
    }

    /// Divides by x_var^k; every term must be divisible.
    Polynomial unshifted(std::size_t var, unsigned k) const {
        Polynomial r;
        for (const auto& [e, c] : terms_) {
            if (e[var] < k) throw InvariantViolation("monomial division is not exact");
            Exponent f = e;
            f[var] -= k;
            r.terms_.emplace(f, c);
        }
        return r;
    }

    Rational evaluate(const std::array<Rational, N>& point) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < N; ++i) {
                Rational p(1);
                for (unsigned k = 0; k < e[i]; ++k) p *= point[i];
                term *= p;
            }
            acc += term;
        }
        return acc;
    }

    /// Exact composition: variable i is replaced by images[i].
    template <std::size_t M>
    Polynomial<M> compose(const std::array<Polynomial<M>, N>& images) const {
        std::array<std::vector<Polynomial<M>>, N> powers;
        for (std::size_t i = 0; i < N; ++i) powers[i].push_back(Polynomial<M>(Rational(1)));
        auto power = [&](std::size_t i, unsigned k) -> const Polynomial<M>& {
            while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * images[i]);
            return powers[i][k];
        };
        Polynomial<M> r;
        for (const auto& [e, c] : terms_) {
            Polynomial<M> term(c);
            for (std::size_t i = 0; i < N; ++i)
                if (e[i] > 0) term = term * power(i, e[i]);
            r += term;
        }
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e;
                for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    Polynomial pow(unsigned k) const {
        Polynomial r(Rational(1)), base = *this;
        while (k > 0) {
            if (k & 1u) r = r * base;
            k >>= 1u;
            if (k > 0) base = base * base;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Canonical text, terms by descending graded order: "x^2*y - 3/2*y^3".
    /// The output parses back to the same polynomial.
    std::string to_string(const std::array<std::string, N>& names) const {
        if (is_zero()) return "0";
        std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return graded_less(b.first, a.first); });
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : sorted) {
            Rational mag = abs(c);
            if (first) {
                if (sgn(c) < 0) os << "-";
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < N; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                os << mag.get_str();
            } else if (mag == 1) {
                os << mono;
            } else {
                os << mag.get_str() << "*" << mono;
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

using BiPoly = Polynomial<2>;
using TriPoly = Polynomial<3>;

inline const std::array<std::string, 2>& bivariate_names() {
    static const std::array<std::string, 2> names{"x", "y"};
    return names;
}

inline const std::array<std::string, 3>& trivariate_names() {
    static const std::array<std::string, 3> names{"x", "y", "z"};
    return names;
}

inline std::string to_string(const BiPoly& p) { return p.to_string(bivariate_names()); }
inline std::string to_string(const TriPoly& p) { return p.to_string(trivariate_names()); }

inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const TriPoly& p) { return os << to_string(p); }

namespace poly {

inline BiPoly x() { return BiPoly::variable(0); }
inline BiPoly y() { return BiPoly::variable(1); }
inline BiPoly c(long n, long d = 1) { return BiPoly(make_rational(n, d)); }

/// c·x^i·y^j
inline BiPoly term(const Rational& c, unsigned i, unsigned j) { return BiPoly::monomial({i, j}, c); }
inline BiPoly term(long c, unsigned i, unsigned j) { return term(Rational(c), i, j); }

}  // namespace poly

}  // namespace foliage
