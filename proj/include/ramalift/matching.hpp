#ifndef RAMALIFT_MATCHING_HPP
#define RAMALIFT_MATCHING_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "ramalift/bounds.hpp"
#include "ramalift/graph.hpp"
#include "ramalift/poly.hpp"
#include "ramalift/roots.hpp"

namespace ramalift {

/// m_0, m_1, ..., m_floor(n/2): the number of matchings with i edges.
struct MatchingCounts {
    std::vector<Int> counts;

    const Int& at(size_t i) const {
        static const Int zero = 0;
        return i < counts.size() ? counts[i] : zero;
    }
};

namespace detail {

/// Delete-edge / delete-endpoints recursion over the remaining edge list;
/// every matching is counted exactly once at the leaf where no edges remain.
/// No memoization: at desk scale the state hashing would cost more than the
/// plain recursion.
inline void count_matchings_rec(const std::vector<Edge>& edges, size_t first, int used,
                                std::vector<Int>& acc) {
    if (first >= edges.size()) {
        acc[static_cast<size_t>(used)] += 1;
        return;
    }
    const Edge e = edges[first];
    // Matchings that do not use e.
    count_matchings_rec(edges, first + 1, used, acc);
    // Matchings that use e: drop every remaining edge touching its endpoints.
    std::vector<Edge> rest;
    rest.reserve(edges.size() - first);
    for (size_t i = first + 1; i < edges.size(); ++i) {
        const Edge& f = edges[i];
        if (f.u != e.u && f.u != e.v && f.v != e.u && f.v != e.v) rest.push_back(f);
    }
    count_matchings_rec(rest, 0, used + 1, acc);
}

}  // namespace detail

inline MatchingCounts matching_counts(const Graph& g) {
    std::vector<Int> acc(static_cast<size_t>(g.vertex_count() / 2) + 1, Int(0));
    detail::count_matchings_rec(g.edges(), 0, 0, acc);
    return MatchingCounts{std::move(acc)};
}

/// mu_G(x) = sum over i of x^(n-2i) * (-1)^i * m_i; degree n, real-rooted.
inline IntPoly matching_polynomial(const Graph& g) {
    const int n = g.vertex_count();
    MatchingCounts mc = matching_counts(g);
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
    for (size_t i = 0; i < mc.counts.size(); ++i) {
        int deg = n - 2 * static_cast<int>(i);
        if (deg < 0) break;
        coeffs[static_cast<size_t>(deg)] = (i % 2 == 0) ? mc.counts[i] : -mc.counts[i];
    }
    return IntPoly{std::move(coeffs)};
}

/// The largest root of mu_G as an algebraic bound. Requires at least one
/// vertex.
inline RootBound matching_root_bound(const Graph& g) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("matching_root_bound: graph has no vertices");
    RootBound b;
    b.kind = BoundKind::matching_root;
    b.minimal_poly = matching_polynomial(g);
    AlgebraicNumber top = largest_root(b.minimal_poly);
    top.refine_below(default_root_precision());
    b.lo = top.lo();
    b.hi = top.hi();
    b.degenerate = (top.compare(Rat(0)) == 0);
    return b;
}

/// The certified spectral-radius proxy for lifts of g: the closed-form
/// regular/biregular tree radius when the graph is (bi)regular, otherwise
/// the matching-root bound (which never exceeds the true cover radius).
inline RootBound cover_bound(const Graph& g) {
    if (auto d = regular_degree(g); d && *d >= 1) return regular_bound(*d);
    if (auto bi = biregular_profile(g)) return biregular_bound(bi->c, bi->d);
    return matching_root_bound(g);
}

}  // namespace ramalift

#endif  // RAMALIFT_MATCHING_HPP
