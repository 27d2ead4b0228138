#ifndef RAMALIFT_ROOTS_HPP
#define RAMALIFT_ROOTS_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramalift/numeric.hpp"
#include "ramalift/poly.hpp"

namespace ramalift {

/// Default width for isolating intervals: 2^-32.
inline Rat default_root_precision() { return Rat(Int(1), Int(1) << 32); }

/// Sturm sequence of the square-free part of a polynomial, kept over the
/// integers with positive scaling at every step (sign variations are the
/// same as for the canonical rational chain).
class SturmChain {
public:
    explicit SturmChain(const IntPoly& f) {
        seq_.push_back(squarefree_part(f));
        if (seq_[0].degree() >= 1) seq_.push_back(primitive_part(seq_[0].derivative()));
        while (seq_.back().degree() >= 1) {
            IntPoly r = prem_positive(seq_[seq_.size() - 2], seq_.back());
            if (r.is_zero()) break;
            seq_.push_back(-primitive_part(r));
        }
    }

    const IntPoly& squarefree() const { return seq_[0]; }
    const std::vector<IntPoly>& sequence() const { return seq_; }

    int variations_at(const Rat& x) const {
        int prev = 0, var = 0;
        for (const auto& p : seq_) {
            int s = p.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    /// Sign variations in the limit x -> +inf (dir=+1) or -inf (dir=-1).
    int variations_at_infinity(int dir) const {
        int prev = 0, var = 0;
        for (const auto& p : seq_) {
            if (p.is_zero()) continue;
            int s = p.leading().sign();
            if (dir < 0 && p.degree() % 2 == 1) s = -s;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    int count_distinct_real_roots() const {
        return variations_at_infinity(-1) - variations_at_infinity(+1);
    }

    /// Number of distinct real roots in the open interval (lo, hi).
    /// Both endpoints must be non-roots.
    int count_roots(const Rat& lo, const Rat& hi) const {
        if (lo >= hi) return 0;
        if (seq_[0].sign_at(lo) == 0 || seq_[0].sign_at(hi) == 0)
            throw std::invalid_argument("count_roots: endpoint is a root");
        return variations_at(lo) - variations_at(hi);
    }

private:
    std::vector<IntPoly> seq_;
};

/// A real algebraic number: the unique root of a square-free integer
/// polynomial inside an open rational interval whose endpoints are not roots.
class AlgebraicNumber {
public:
    /// `sqfree` must be square-free with exactly one root in (lo, hi).
    AlgebraicNumber(IntPoly sqfree, Rat lo, Rat hi)
        : p_(std::move(sqfree)), lo_(std::move(lo)), hi_(std::move(hi)) {
        sign_lo_ = p_.sign_at(lo_);
        int sign_hi = p_.sign_at(hi_);
        if (lo_ >= hi_ || sign_lo_ == 0 || sign_hi == 0 || sign_lo_ == sign_hi)
            throw std::invalid_argument("AlgebraicNumber: invalid isolating interval");
    }

    static AlgebraicNumber from_rational(const Rat& v) {
        IntPoly p{-numerator(v), denominator(v)};
        return AlgebraicNumber(std::move(p), v - 1, v + 1);
    }

    const IntPoly& poly() const { return p_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }
    Rat midpoint() const { return (lo_ + hi_) / 2; }

    /// One bisection step; the interval at least halves.
    void refine() {
        Rat mid = midpoint();
        int s = p_.sign_at(mid);
        if (s == 0) {
            // The midpoint is the root itself: shrink symmetrically. The
            // interval holds no other root, so the new endpoints are clean.
            Rat d = width() / 4;
            lo_ = mid - d;
            hi_ = mid + d;
            return;
        }
        if (s == sign_lo_) lo_ = mid; else hi_ = mid;
    }

    void refine_below(const Rat& target_width) {
        while (width() > target_width) refine();
    }

    /// Exact trichotomy against a rational point.
    int compare(const Rat& v) const {
        if (v <= lo_) return +1;   // root > v
        if (v >= hi_) return -1;   // root < v
        int s = p_.sign_at(v);
        if (s == 0) return 0;
        // Exactly one sign change in (lo, hi), located at the root.
        return s == sign_lo_ ? +1 : -1;
    }

    /// Exact trichotomy against another algebraic number: refine until the
    /// intervals separate; equality is decided once via the gcd of the two
    /// defining polynomials restricted to the overlap.
    int compare(const AlgebraicNumber& other) const {
        AlgebraicNumber a = *this, b = other;
        bool equality_checked = false;
        while (true) {
            if (a.hi_ <= b.lo_) return -1;
            if (b.hi_ <= a.lo_) return +1;
            if (!equality_checked) {
                equality_checked = true;
                IntPoly g = poly_gcd(a.p_, b.p_);
                if (g.degree() >= 1) {
                    Rat lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
                    // Overlap endpoints are non-roots of g because g divides
                    // both defining polynomials.
                    SturmChain chain(g);
                    if (chain.count_roots(lo, hi) > 0) return 0;
                }
            }
            a.refine();
            b.refine();
        }
    }

private:
    IntPoly p_;
    Rat lo_, hi_;
    int sign_lo_;
};

enum class Cmp { LESS, EQUAL, GREATER };

inline Cmp cmp_of(int s) { return s < 0 ? Cmp::LESS : (s > 0 ? Cmp::GREATER : Cmp::EQUAL); }

inline std::string to_string(Cmp c) {
    switch (c) {
        case Cmp::LESS: return "LESS";
        case Cmp::EQUAL: return "EQUAL";
        case Cmp::GREATER: return "GREATER";
    }
    return "?";
}

namespace detail {

/// A point strictly between lo and hi that is not a root of the chain's
/// square-free polynomial; starts at the midpoint and walks toward lo.
inline Rat non_root_between(const SturmChain& chain, const Rat& lo, const Rat& hi) {
    Rat step = (hi - lo) / 2;
    Rat t = lo + step;
    while (chain.squarefree().sign_at(t) == 0) {
        step /= 2;
        t = lo + step;
    }
    return t;
}

}  // namespace detail

/// True iff the number of real roots counted with multiplicity equals the
/// degree: square-free factorization, then a Sturm count on each factor.
inline bool is_real_rooted(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_real_rooted: zero polynomial");
    if (f.degree() == 0) return true;
    int total = 0;
    for (const auto& [factor, mult] : squarefree_factorization(f)) {
        SturmChain chain(factor);
        total += mult * chain.count_distinct_real_roots();
    }
    return total == f.degree();
}

/// One isolated real root: the open interval and the root's multiplicity in
/// the original polynomial.
struct RootInterval {
    Rat lo;
    Rat hi;
    int multiplicity = 1;
};

/// All real roots of a polynomial: disjoint ascending isolating intervals,
/// one per distinct root, with multiplicities.
struct RootIsolation {
    IntPoly squarefree;               // positive-leading square-free part
    std::vector<RootInterval> roots;  // ascending by interval

    int total_with_multiplicity() const {
        int t = 0;
        for (const auto& r : roots) t += r.multiplicity;
        return t;
    }

    AlgebraicNumber root_value(size_t i) const {
        return AlgebraicNumber(squarefree, roots[i].lo, roots[i].hi);
    }
};

namespace detail {

/// Isolates every real root of f (no real-rootedness requirement), refining
/// each interval below `precision`.
inline RootIsolation isolate_real_roots(const IntPoly& f, const Rat& precision) {
    if (f.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    RootIsolation iso;
    SturmChain chain(f);
    iso.squarefree = chain.squarefree();
    const IntPoly& h = iso.squarefree;
    if (h.degree() < 1) return iso;

    const Rat bound = cauchy_root_bound(h);
    struct Seg { Rat lo, hi; int count; };
    std::vector<Seg> work;
    {
        int total = chain.count_roots(-bound, bound);
        if (total > 0) work.push_back({-bound, bound, total});
    }
    std::vector<RootInterval> found;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            AlgebraicNumber root(h, s.lo, s.hi);
            root.refine_below(precision);
            found.push_back({root.lo(), root.hi(), 1});
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        if (h.sign_at(mid) == 0) {
            // The midpoint is a root: carve out a clean singleton around it.
            Rat d = (s.hi - s.lo) / 4;
            while (h.sign_at(mid - d) == 0 || h.sign_at(mid + d) == 0 ||
                   chain.count_roots(mid - d, mid + d) != 1)
                d /= 2;
            work.push_back({mid - d, mid + d, 1});
            int left = chain.count_roots(s.lo, mid - d);
            if (left > 0) work.push_back({s.lo, mid - d, left});
            int right = s.count - 1 - left;
            if (right > 0) work.push_back({mid + d, s.hi, right});
        } else {
            int left = chain.count_roots(s.lo, mid);
            if (left > 0) work.push_back({s.lo, mid, left});
            if (s.count - left > 0) work.push_back({mid, s.hi, s.count - left});
        }
    }
    std::sort(found.begin(), found.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

    // Attach multiplicities: the unique square-free factor that changes sign
    // over an interval owns that root.
    if (h.degree() < primitive_part(f).degree()) {
        auto factors = squarefree_factorization(f);
        for (auto& r : found) {
            for (const auto& [factor, mult] : factors) {
                if (factor.sign_at(r.lo) * factor.sign_at(r.hi) < 0) {
                    r.multiplicity = mult;
                    break;
                }
            }
        }
    }
    iso.roots = std::move(found);
    return iso;
}

}  // namespace detail

/// Isolates the roots of a real-rooted polynomial; rejects inputs with
/// non-real roots.
inline RootIsolation isolate_roots(const IntPoly& f, const Rat& precision = default_root_precision()) {
    RootIsolation iso = detail::isolate_real_roots(f, precision);
    if (iso.total_with_multiplicity() != f.degree())
        throw std::invalid_argument("isolate_roots: polynomial is not real-rooted");
    return iso;
}

/// The largest real root as an algebraic number. Requires at least one real
/// root; real-rootedness of f is not required.
inline AlgebraicNumber largest_root(const IntPoly& f) {
    SturmChain chain(f);
    const IntPoly& h = chain.squarefree();
    if (h.degree() < 1 || chain.count_distinct_real_roots() == 0)
        throw std::invalid_argument("largest_root: no real roots");
    const Rat bound = cauchy_root_bound(h);
    Rat lo = -bound, hi = bound;
    int count = chain.count_roots(lo, hi);
    while (count > 1) {
        Rat mid = detail::non_root_between(chain, lo, hi);
        int right = chain.count_roots(mid, hi);
        if (right >= 1) {
            lo = mid;
            count = right;
        } else {
            hi = mid;
            count -= right;
        }
    }
    return AlgebraicNumber(h, lo, hi);
}

/// Exact trichotomy on the largest roots of two real-rooted polynomials.
inline Cmp compare_largest_roots(const IntPoly& f, const IntPoly& g) {
    if (!is_real_rooted(f) || !is_real_rooted(g))
        throw std::invalid_argument("compare_largest_roots: input is not real-rooted");
    return cmp_of(largest_root(f).compare(largest_root(g)));
}

/// All real roots of a real-rooted polynomial, repeated by multiplicity,
/// ascending.
inline std::vector<AlgebraicNumber> roots_with_multiplicity(const IntPoly& f) {
    RootIsolation iso = isolate_roots(f);
    std::vector<AlgebraicNumber> out;
    out.reserve(static_cast<size_t>(f.degree()));
    for (size_t i = 0; i < iso.roots.size(); ++i) {
        AlgebraicNumber v = iso.root_value(i);
        for (int k = 0; k < iso.roots[i].multiplicity; ++k) out.push_back(v);
    }
    return out;
}

/// Does g interlace f? Requires deg f = deg g + 1, both real-rooted; checks
/// the closed chain beta_1 <= alpha_1 <= beta_2 <= ... <= alpha_{n-1} <= beta_n.
inline bool interlaces(const IntPoly& g, const IntPoly& f) {
    if (f.degree() != g.degree() + 1)
        throw std::invalid_argument("interlaces: degree of f must exceed degree of g by one");
    if (!is_real_rooted(f) || !is_real_rooted(g))
        throw std::invalid_argument("interlaces: input is not real-rooted");
    auto beta = roots_with_multiplicity(f);
    auto alpha = roots_with_multiplicity(g);
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (beta[i].compare(alpha[i]) > 0) return false;
        if (alpha[i].compare(beta[i + 1]) > 0) return false;
    }
    return true;
}

/// Do the polynomials admit a common interlacing? All must share one degree,
/// be real-rooted, and have positive leading coefficients. Decided by the
/// interval criterion: for every j, max_i beta_{i,j} <= min_i beta_{i,j+1}.
inline bool common_interlacing(const std::vector<IntPoly>& fs) {
    if (fs.empty()) throw std::invalid_argument("common_interlacing: empty family");
    const int n = fs[0].degree();
    for (const auto& f : fs) {
        if (f.degree() != n) throw std::invalid_argument("common_interlacing: mixed degrees");
        if (f.is_zero() || f.leading() <= 0)
            throw std::invalid_argument("common_interlacing: leading coefficient must be positive");
        if (!is_real_rooted(f))
            throw std::invalid_argument("common_interlacing: input is not real-rooted");
    }
    if (n <= 1 || fs.size() == 1) return true;
    std::vector<std::vector<AlgebraicNumber>> roots;
    roots.reserve(fs.size());
    for (const auto& f : fs) roots.push_back(roots_with_multiplicity(f));
    for (int j = 0; j + 1 < n; ++j) {
        // max over i of the j-th roots vs min over i of the (j+1)-th roots
        size_t arg_max = 0, arg_min = 0;
        for (size_t i = 1; i < roots.size(); ++i) {
            if (roots[i][static_cast<size_t>(j)].compare(roots[arg_max][static_cast<size_t>(j)]) > 0)
                arg_max = i;
            if (roots[i][static_cast<size_t>(j) + 1].compare(roots[arg_min][static_cast<size_t>(j) + 1]) < 0)
                arg_min = i;
        }
        if (roots[arg_max][static_cast<size_t>(j)].compare(roots[arg_min][static_cast<size_t>(j) + 1]) > 0)
            return false;
    }
    return true;
}

/// Real-rootedness of one convex combination: a sampled probe, sound as a
/// refuter. Weights must be non-negative rationals summing to 1.
inline bool convex_combination_check(const std::vector<IntPoly>& fs, const std::vector<Rat>& lambdas) {
    if (fs.empty() || fs.size() != lambdas.size())
        throw std::invalid_argument("convex_combination_check: size mismatch");
    Rat sum = 0;
    for (const auto& l : lambdas) {
        if (l < 0) throw std::invalid_argument("convex_combination_check: negative weight");
        sum += l;
    }
    if (sum != 1) throw std::invalid_argument("convex_combination_check: weights must sum to 1");
    const int n = fs[0].degree();
    for (const auto& f : fs) {
        if (f.degree() != n) throw std::invalid_argument("convex_combination_check: mixed degrees");
        if (f.is_zero() || f.leading() <= 0)
            throw std::invalid_argument("convex_combination_check: leading coefficient must be positive");
    }
    RatPoly combo;
    for (size_t i = 0; i < fs.size(); ++i) combo += RatPoly(fs[i]) * lambdas[i];
    return is_real_rooted(combo.cleared_denominators());
}

}  // namespace ramalift

#endif  // RAMALIFT_ROOTS_HPP
