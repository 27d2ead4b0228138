#ifndef RAMALIFT_POLY_HPP
#define RAMALIFT_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramalift/numeric.hpp"

namespace ramalift {

/// Exact integer-coefficient univariate polynomial, coefficients stored in
/// ascending degree. The zero polynomial is the empty coefficient vector and
/// has degree -1; otherwise the leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Int> ascending) : c_(ascending) { normalize(); }
    explicit IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { normalize(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(Int v) { return IntPoly{std::vector<Int>{std::move(v)}}; }

    /// x^k with unit coefficient.
    static IntPoly monomial(int k, Int coeff = 1) {
        std::vector<Int> c(static_cast<size_t>(k) + 1);
        c.back() = std::move(coeff);
        return IntPoly{std::move(c)};
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Int& leading() const {
        if (c_.empty()) throw std::invalid_argument("leading(): zero polynomial");
        return c_.back();
    }

    /// Coefficient of x^i; zero beyond the degree.
    Int at(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }
    bool operator<(const IntPoly& o) const { return c_ < o.c_; }  // arbitrary total order for maps

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    IntPoly& operator*=(const Int& k) {
        if (k == 0) { c_.clear(); return *this; }
        for (auto& x : c_) x *= k;
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const Int& k) { return a *= k; }
    friend IntPoly operator*(const Int& k, IntPoly a) { return a *= k; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly{};
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly{std::move(c)};
    }

    Int eval(const Int& x) const {
        Int r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// Sign of the value at a rational point, computed in pure integer
    /// arithmetic as sign(q^n * f(p/q)).
    int sign_at(const Rat& x) const {
        if (c_.empty()) return 0;
        const Int p = numerator(x), q = denominator(x);
        Int r = c_.back(), qq = 1;
        for (auto it = std::next(c_.rbegin()); it != c_.rend(); ++it) {
            qq *= q;
            r = r * p + *it * qq;
        }
        return r.sign();
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly{};
        std::vector<Int> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Int(i);
        return IntPoly{std::move(d)};
    }

    /// f(-x), sign-normalized so the leading coefficient stays positive when
    /// it was positive (roots are exactly negated).
    IntPoly reflected() const {
        IntPoly r = *this;
        for (size_t i = 0; i < r.c_.size(); ++i)
            if (i % 2 == 1) r.c_[i] = -r.c_[i];
        if (!r.c_.empty() && r.c_.back() < 0 && !c_.empty() && c_.back() > 0) r = -r;
        return r;
    }

    /// True iff only even-degree or only odd-degree terms occur.
    bool is_even_or_odd() const {
        bool even_ok = true, odd_ok = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            (i % 2 == 0 ? odd_ok : even_ok) = false;
        }
        return even_ok || odd_ok;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

/// Rational-coefficient polynomial; used for weighted expectations and for
/// exact division where quotients leave the integers.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rat> ascending) : c_(ascending) { normalize(); }
    explicit RatPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) { normalize(); }
    explicit RatPoly(const IntPoly& p) {
        c_.reserve(p.coeffs().size());
        for (const auto& x : p.coeffs()) c_.emplace_back(x);
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat at(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
        return c_[static_cast<size_t>(i)];
    }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

    RatPoly& operator+=(const RatPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    RatPoly& operator-=(const RatPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    RatPoly& operator*=(const Rat& k) {
        if (k == 0) { c_.clear(); return *this; }
        for (auto& x : c_) x *= k;
        return *this;
    }
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const Rat& k) { return a *= k; }
    friend RatPoly operator*(const Rat& k, RatPoly a) { return a *= k; }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// Multiplies by the lcm of all denominators: the smallest positive
    /// scaling with integer coefficients. Roots are unchanged.
    IntPoly cleared_denominators() const {
        Int l = 1;
        for (const auto& x : c_) {
            Int d = denominator(x);
            l = boost::multiprecision::lcm(l, d);
        }
        std::vector<Int> out(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            Rat v = c_[i] * Rat(l);
            out[i] = numerator(v);
        }
        return IntPoly{std::move(out)};
    }

    /// True iff every coefficient is an integer.
    bool is_integral() const {
        for (const auto& x : c_)
            if (denominator(x) != 1) return false;
        return true;
    }

    IntPoly to_int_poly() const {
        if (!is_integral()) throw std::invalid_argument("to_int_poly: non-integer coefficients");
        std::vector<Int> out(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) out[i] = numerator(c_[i]);
        return IntPoly{std::move(out)};
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// ---------------------------------------------------------------------------
// Division and gcd
// ---------------------------------------------------------------------------

/// Quotient and remainder over the rationals. Divisor must be nonzero.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const Rat lead = b.at(db);
    int dr = a.degree();
    if (dr < db) return {RatPoly{}, a};
    std::vector<Rat> quot(static_cast<size_t>(dr - db) + 1);
    while (dr >= db) {
        Rat q = rem[static_cast<size_t>(dr)] / lead;
        quot[static_cast<size_t>(dr - db)] = q;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= q * b.at(i);
        rem[static_cast<size_t>(dr)] = 0;
        while (dr >= 0 && rem[static_cast<size_t>(dr)] == 0) --dr;
    }
    rem.resize(static_cast<size_t>(dr + 1));
    return {RatPoly{std::move(quot)}, RatPoly{std::move(rem)}};
}

/// Integer quotient and remainder; requires a monic divisor so the result
/// stays in the integers.
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero() || b.leading() != 1)
        throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<Int> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    int dr = a.degree();
    if (dr < db) return {IntPoly{}, a};
    std::vector<Int> quot(static_cast<size_t>(dr - db) + 1);
    while (dr >= db) {
        Int q = rem[static_cast<size_t>(dr)];
        quot[static_cast<size_t>(dr - db)] = q;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= q * b.at(i);
        while (dr >= 0 && rem[static_cast<size_t>(dr)] == 0) --dr;
    }
    rem.resize(static_cast<size_t>(dr + 1));
    return {IntPoly{std::move(quot)}, IntPoly{std::move(rem)}};
}

/// Exact integer quotient when it exists.
inline std::optional<IntPoly> try_exact_div(const IntPoly& a, const IntPoly& b) {
    if (!b.is_zero() && b.leading() == 1) {
        auto [q, r] = divmod_monic(a, b);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }
    auto [q, r] = divmod(RatPoly(a), RatPoly(b));
    if (!r.is_zero() || !q.is_integral()) return std::nullopt;
    return q.to_int_poly();
}

inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw std::invalid_argument("exact_div: not divisible");
    return *q;
}

/// Gcd of the coefficients, always non-negative.
inline Int content(const IntPoly& f) {
    Int g = 0;
    for (const auto& x : f.coeffs()) g = boost::multiprecision::gcd(g, x);
    return g;
}

/// f divided by its content; keeps the sign of the leading coefficient.
inline IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    Int g = content(f);
    std::vector<Int> c(f.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeffs()[i] / g;
    return IntPoly{std::move(c)};
}

/// Pseudo-remainder scaled so the scaling factor relative to the true
/// remainder of a/b is positive. Needed so Sturm sign sequences survive the
/// all-integer remainder computation.
inline IntPoly prem_positive(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("prem: division by zero polynomial");
    const int da = a.degree(), db = b.degree();
    if (da < db) return a;
    std::vector<Int> rem(a.coeffs().begin(), a.coeffs().end());
    const Int lead = b.leading();
    int dr = da;
    int steps = 0;
    while (dr >= db) {
        // rem <- lead*rem - rem[dr]*x^(dr-db)*b
        Int top = rem[static_cast<size_t>(dr)];
        for (int i = 0; i <= dr; ++i) rem[static_cast<size_t>(i)] *= lead;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= top * b.at(i);
        ++steps;
        while (dr >= 0 && rem[static_cast<size_t>(dr)] == 0) --dr;
    }
    rem.resize(static_cast<size_t>(dr + 1));
    IntPoly r{std::move(rem)};
    // Total scaling is lead^steps; flip the sign if that is negative.
    if (lead < 0 && steps % 2 == 1) r = -r;
    return r;
}

/// Primitive gcd with positive leading coefficient (primitive PRS).
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(prem_positive(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() < 0) a = -a;
    return a;
}

/// Product of the distinct irreducible factors, primitive with positive
/// leading coefficient. A polynomial is real-rooted iff its square-free part
/// is: stripping multiplicities removes no root and adds none.
inline IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    IntPoly h = primitive_part(f);
    if (h.leading() < 0) h = -h;
    if (h.degree() == 0) return IntPoly::constant(1);
    IntPoly g = poly_gcd(h, h.derivative());
    IntPoly s = exact_div(h, g);
    if (s.leading() < 0) s = -s;
    return s;
}

/// Yun square-free factorization of the primitive part: returns pairwise
/// coprime square-free factors with their multiplicities, product of
/// factor^multiplicity equal to the positive-leading primitive part.
inline std::vector<std::pair<IntPoly, int>> squarefree_factorization(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_factorization: zero polynomial");
    IntPoly h = primitive_part(f);
    if (h.leading() < 0) h = -h;
    std::vector<std::pair<IntPoly, int>> out;
    if (h.degree() == 0) return out;
    IntPoly g = poly_gcd(h, h.derivative());
    IntPoly b = exact_div(h, g);
    IntPoly c = exact_div(h.derivative(), g);
    IntPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        IntPoly p = poly_gcd(b, d);
        if (p.degree() > 0) out.emplace_back(p, i);
        b = exact_div(b, p);
        c = exact_div(d, p);
        d = c - b.derivative();
    }
    return out;
}

/// Strict upper bound on the absolute value of every complex root:
/// 1 + max_i |a_i| / |a_n|.
inline Rat cauchy_root_bound(const IntPoly& f) {
    if (f.is_zero() || f.degree() == 0) return Rat(1);
    Int m = 0;
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, Int(boost::multiprecision::abs(f.at(i))));
    Int lead = boost::multiprecision::abs(f.leading());
    return Rat(1) + Rat(m, lead);
}

/// Taylor shift: the polynomial g with g(x) = f(x + c).
inline RatPoly shifted(const RatPoly& f, const Rat& c) {
    std::vector<Rat> d(f.coeffs().begin(), f.coeffs().end());
    const int n = f.degree();
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j)
            d[static_cast<size_t>(j)] += c * d[static_cast<size_t>(j) + 1];
    return RatPoly{std::move(d)};
}

inline IntPoly shifted(const IntPoly& f, const Int& c) {
    std::vector<Int> d(f.coeffs().begin(), f.coeffs().end());
    const int n = f.degree();
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j)
            d[static_cast<size_t>(j)] += c * d[static_cast<size_t>(j) + 1];
    return IntPoly{std::move(d)};
}

// ---------------------------------------------------------------------------
// Text format: one line of ascending integer coefficients, space separated;
// lines starting with '#' are comments.
// ---------------------------------------------------------------------------

inline std::string to_text(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) os << ' ';
        os << f.coeffs()[i];
    }
    return os.str();
}

inline IntPoly poly_from_text(const std::string& line) {
    std::istringstream is(line);
    std::vector<Int> c;
    std::string tok;
    while (is >> tok) {
        try {
            c.emplace_back(tok);
        } catch (const std::runtime_error&) {
            throw io_error("malformed coefficient: '" + tok + "'");
        }
    }
    if (c.empty()) throw io_error("empty polynomial line");
    return IntPoly{std::move(c)};
}

}  // namespace ramalift

#endif  // RAMALIFT_POLY_HPP
