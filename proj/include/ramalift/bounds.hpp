#ifndef RAMALIFT_BOUNDS_HPP
#define RAMALIFT_BOUNDS_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "ramalift/numeric.hpp"
#include "ramalift/poly.hpp"
#include "ramalift/roots.hpp"

namespace ramalift {

enum class BoundKind { regular, biregular, matching_root, custom };

/// Verdict of a root-versus-bound comparison. TOUCHES (exact equality)
/// satisfies every "at most" claim and is reported distinctly.
enum class BoundVerdict { ALL_BELOW, TOUCHES, EXCEEDS };

inline std::string to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::ALL_BELOW: return "ALL_BELOW";
        case BoundVerdict::TOUCHES: return "TOUCHES";
        case BoundVerdict::EXCEEDS: return "EXCEEDS";
    }
    return "?";
}

/// An algebraic threshold: the unique root of minimal_poly inside the open
/// isolating interval (lo, hi).
struct RootBound {
    BoundKind kind = BoundKind::custom;
    int c = 0;  // populated for biregular(c,d)
    int d = 0;  // populated for regular(d) and biregular(c,d)
    IntPoly minimal_poly;
    Rat lo, hi;
    bool degenerate = false;  // bound value 0: certificates against it are vacuous

    AlgebraicNumber value() const {
        return AlgebraicNumber(squarefree_part(minimal_poly), lo, hi);
    }

    std::string kind_string() const {
        switch (kind) {
            case BoundKind::regular: return "regular(" + std::to_string(d) + ")";
            case BoundKind::biregular:
                return "biregular(" + std::to_string(c) + "," + std::to_string(d) + ")";
            case BoundKind::matching_root: return "matching-root";
            case BoundKind::custom: return "custom";
        }
        return "?";
    }
};

namespace detail {

/// Tight isolating interval for the largest real root of p.
inline std::pair<Rat, Rat> top_root_interval(const IntPoly& p) {
    AlgebraicNumber r = largest_root(p);
    r.refine_below(default_root_precision());
    return {r.lo(), r.hi()};
}

}  // namespace detail

/// 2*sqrt(d-1), the spectral radius of the infinite d-regular tree, as the
/// largest root of x^2 - 4(d-1). Degenerate at d = 1 (bound 0).
inline RootBound regular_bound(int d) {
    if (d < 1) throw std::invalid_argument("regular_bound: degree must be >= 1");
    RootBound b;
    b.kind = BoundKind::regular;
    b.d = d;
    b.minimal_poly = IntPoly{Int(-4) * (d - 1), Int(0), Int(1)};
    auto [lo, hi] = detail::top_root_interval(b.minimal_poly);
    b.lo = lo;
    b.hi = hi;
    b.degenerate = (d == 1);
    return b;
}

/// sqrt(c-1) + sqrt(d-1), the spectral radius of the infinite (c,d)-biregular
/// tree, as the largest root of x^4 - 2(c+d-2)x^2 + (c-d)^2.
inline RootBound biregular_bound(int c, int d) {
    if (c < 1 || d < 1) throw std::invalid_argument("biregular_bound: degrees must be >= 1");
    RootBound b;
    b.kind = BoundKind::biregular;
    b.c = c;
    b.d = d;
    Int cd_diff = Int(c) - d;
    b.minimal_poly = IntPoly{cd_diff * cd_diff, Int(0), Int(-2) * (c + d - 2), Int(0), Int(1)};
    auto [lo, hi] = detail::top_root_interval(b.minimal_poly);
    b.lo = lo;
    b.hi = hi;
    b.degenerate = (c == 1 && d == 1);
    return b;
}

/// Arbitrary algebraic bound; validates that exactly one distinct root of
/// minimal_poly lies in (lo, hi).
inline RootBound custom_bound(IntPoly minimal_poly, Rat lo, Rat hi) {
    SturmChain chain(minimal_poly);
    if (chain.count_roots(lo, hi) != 1)
        throw std::invalid_argument("custom_bound: interval must isolate exactly one root");
    RootBound b;
    b.kind = BoundKind::custom;
    b.minimal_poly = std::move(minimal_poly);
    b.lo = std::move(lo);
    b.hi = std::move(hi);
    AlgebraicNumber v = b.value();
    b.degenerate = (v.compare(Rat(0)) == 0);
    return b;
}

/// Exact classification of the largest root of f against the bound value.
/// A constant f has no roots and is vacuously ALL_BELOW.
inline BoundVerdict compare_root_to_bound(const IntPoly& f, const RootBound& b) {
    if (f.is_zero()) throw std::invalid_argument("compare_root_to_bound: zero polynomial");
    if (f.degree() == 0) return BoundVerdict::ALL_BELOW;
    if (!is_real_rooted(f))
        throw std::invalid_argument("compare_root_to_bound: polynomial is not real-rooted");
    int s = largest_root(f).compare(b.value());
    if (s < 0) return BoundVerdict::ALL_BELOW;
    if (s == 0) return BoundVerdict::TOUCHES;
    return BoundVerdict::EXCEEDS;
}

/// Two-sided version: classifies max |root| against the bound, using the
/// reflection f(-x) to reach the most negative root exactly.
inline BoundVerdict compare_absolute_to_bound(const IntPoly& f, const RootBound& b) {
    BoundVerdict up = compare_root_to_bound(f, b);
    BoundVerdict down = compare_root_to_bound(f.reflected(), b);
    if (up == BoundVerdict::EXCEEDS || down == BoundVerdict::EXCEEDS) return BoundVerdict::EXCEEDS;
    if (up == BoundVerdict::TOUCHES || down == BoundVerdict::TOUCHES) return BoundVerdict::TOUCHES;
    return BoundVerdict::ALL_BELOW;
}

}  // namespace ramalift

#endif  // RAMALIFT_BOUNDS_HPP
