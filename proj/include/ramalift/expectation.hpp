#ifndef RAMALIFT_EXPECTATION_HPP
#define RAMALIFT_EXPECTATION_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ramalift/graph.hpp"
#include "ramalift/matrix.hpp"
#include "ramalift/numeric.hpp"
#include "ramalift/poly.hpp"

namespace ramalift {

/// Per-edge probability of drawing sign +1.
struct EdgeProbabilities {
    std::vector<Rat> p;

    static EdgeProbabilities uniform(const Graph& g) {
        return EdgeProbabilities{std::vector<Rat>(static_cast<size_t>(g.edge_count()), Rat(1, 2))};
    }

    void validate(const Graph& g) const {
        if (static_cast<int>(p.size()) != g.edge_count())
            throw std::invalid_argument("EdgeProbabilities: length does not match edge count");
        for (const auto& q : p)
            if (q < 0 || q > 1)
                throw std::invalid_argument("EdgeProbabilities: entries must lie in [0,1]");
    }
};

/// Exact weighted sum over all 2^m signings of char(A_s), each signing
/// weighted by prod p_i over its +1 edges times prod (1-p_i) over its -1
/// edges. With all p_i = 1/2 this is the matching polynomial.
inline RatPoly expected_charpoly_bruteforce(const Graph& g, const EdgeProbabilities& probs) {
    probs.validate(g);
    const int m = g.edge_count();
    if (m > 20) throw budget_error("expected_charpoly_bruteforce: more than 20 edges");
    RatPoly acc;
    Signing s{std::vector<int>(static_cast<size_t>(m), -1)};
    for (uint32_t bits = 0; bits < (1u << m); ++bits) {
        Rat weight = 1;
        for (int i = 0; i < m; ++i) {
            bool plus = (bits >> i) & 1u;
            weight *= plus ? probs.p[static_cast<size_t>(i)] : 1 - probs.p[static_cast<size_t>(i)];
            s.signs[static_cast<size_t>(i)] = plus ? +1 : -1;
        }
        if (weight == 0) continue;
        acc += RatPoly(char_poly(signed_adjacency(g, s))) * weight;
    }
    return acc;
}

namespace detail {

/// Signed adjacency of the fixed edges only; unset edges contribute zeros.
inline IntMatrix fixed_signed_adjacency(const Graph& g, const PartialSigning& partial,
                                        std::vector<Edge>& unfixed_out) {
    IntMatrix a(g.vertex_count());
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        int s = partial.assignments[i];
        if (s == 0) {
            unfixed_out.push_back(e);
        } else {
            a.at(e.u, e.v) = s;
            a.at(e.v, e.u) = s;
        }
    }
    return a;
}

/// Enumerates every matching of `edges` once, accumulating how many cover
/// each vertex set (as a bitmask).
inline void matchings_by_cover(const std::vector<Edge>& edges, size_t first, uint64_t mask,
                               std::map<uint64_t, Int>& acc) {
    if (first >= edges.size()) {
        acc[mask] += 1;
        return;
    }
    const Edge e = edges[first];
    matchings_by_cover(edges, first + 1, mask, acc);
    std::vector<Edge> rest;
    rest.reserve(edges.size() - first);
    for (size_t i = first + 1; i < edges.size(); ++i) {
        const Edge& f = edges[i];
        if (f.u != e.u && f.u != e.v && f.v != e.u && f.v != e.v) rest.push_back(f);
    }
    matchings_by_cover(rest, 0, mask | (uint64_t(1) << e.u) | (uint64_t(1) << e.v), acc);
}

}  // namespace detail

/// The plain sum of char(A_s) over all completions of a partial signing:
/// an integer polynomial equal to 2^(#unset) times the conditional
/// expectation. Computed without enumerating signings: in the permutation
/// expansion of det(xI - A), summing a +-1 entry over both signs cancels
/// unless the permutation traverses that edge forward and backward (a
/// 2-cycle), so the surviving terms group by matchings M of the unset edges,
/// each contributing (-1)^|M| times the characteristic polynomial of the
/// fixed-edge signed adjacency with M's endpoints deleted, all scaled by
/// 2^(#unset).
inline IntPoly conditional_expectation(const Graph& g, const PartialSigning& partial) {
    partial.validate(g);
    const int n = g.vertex_count();
    if (n > 64) throw budget_error("conditional_expectation: more than 64 vertices");
    std::vector<Edge> unfixed;
    IntMatrix fixed = detail::fixed_signed_adjacency(g, partial, unfixed);
    std::map<uint64_t, Int> cover_counts;
    detail::matchings_by_cover(unfixed, 0, 0, cover_counts);
    IntPoly acc;
    for (const auto& [mask, count] : cover_counts) {
        std::vector<int> keep;
        keep.reserve(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            if (!((mask >> v) & 1u)) keep.push_back(v);
        IntPoly cp = char_poly(fixed.submatrix(keep));
        int pairs = std::popcount(mask) / 2;
        acc += (pairs % 2 ? -count : count) * cp;
    }
    return pow_int(Int(2), static_cast<unsigned>(unfixed.size())) * acc;
}

/// The same plain sum by direct enumeration of all completions; the
/// validation oracle for the matching-sum algorithm.
inline IntPoly conditional_expectation_bruteforce(const Graph& g, const PartialSigning& partial) {
    partial.validate(g);
    std::vector<size_t> unset;
    for (size_t i = 0; i < partial.assignments.size(); ++i)
        if (partial.assignments[i] == 0) unset.push_back(i);
    if (unset.size() > 20)
        throw budget_error("conditional_expectation_bruteforce: more than 20 unset edges");
    Signing s{partial.assignments};
    IntPoly acc;
    for (uint32_t bits = 0; bits < (1u << unset.size()); ++bits) {
        for (size_t j = 0; j < unset.size(); ++j)
            s.signs[unset[j]] = ((bits >> j) & 1u) ? +1 : -1;
        acc += char_poly(signed_adjacency(g, s));
    }
    return acc;
}

/// The mixed characteristic polynomial: the expectation of
/// det(xI + D + sum_{i in S} a_i a_i^T + sum_{i not in S} b_i b_i^T)
/// over the random subset S that includes i with probability p_i.
inline RatPoly mixed_charpoly(const std::vector<std::vector<Int>>& as,
                              const std::vector<std::vector<Int>>& bs,
                              const std::vector<Rat>& p, const std::vector<Int>& D) {
    const size_t m = as.size();
    if (bs.size() != m || p.size() != m)
        throw std::invalid_argument("mixed_charpoly: list length mismatch");
    if (m > 20) throw budget_error("mixed_charpoly: more than 20 rank-one pairs");
    const size_t n = D.size();
    for (const auto& v : as)
        if (v.size() != n) throw std::invalid_argument("mixed_charpoly: dimension mismatch");
    for (const auto& v : bs)
        if (v.size() != n) throw std::invalid_argument("mixed_charpoly: dimension mismatch");
    for (const auto& q : p)
        if (q < 0 || q > 1) throw std::invalid_argument("mixed_charpoly: p entries must lie in [0,1]");
    for (const auto& d : D)
        if (d < 0) throw std::invalid_argument("mixed_charpoly: D entries must be non-negative");

    RatPoly acc;
    for (uint32_t bits = 0; bits < (1u << m); ++bits) {
        Rat weight = 1;
        for (size_t i = 0; i < m; ++i)
            weight *= ((bits >> i) & 1u) ? p[i] : 1 - p[i];
        if (weight == 0) continue;
        // det(xI + B) = char(-B)
        IntMatrix neg_b(static_cast<int>(n));
        for (size_t i = 0; i < n; ++i) neg_b.at(static_cast<int>(i), static_cast<int>(i)) = -D[i];
        for (size_t i = 0; i < m; ++i) {
            const auto& v = ((bits >> i) & 1u) ? as[i] : bs[i];
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c)
                    neg_b.at(static_cast<int>(r), static_cast<int>(c)) -= v[r] * v[c];
        }
        acc += RatPoly(char_poly(neg_b)) * weight;
    }
    return acc;
}

/// Verifies the rank-two determinant identity
///   det(A) * (1 + p a^T A^-1 a + (1-p) b^T A^-1 b)
///     = p det(A + a a^T) + (1-p) det(A + b b^T)
/// in exact rational arithmetic. Both sides are computed independently (the
/// left via a linear solve, the right via plain determinants).
inline bool det_operator_identity_check(const RatMatrix& A, const std::vector<Rat>& a,
                                        const std::vector<Rat>& b, const Rat& p) {
    const int n = A.size();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("det_operator_identity_check: dimension mismatch");
    Rat det_a = A.det();
    if (det_a == 0) throw std::invalid_argument("det_operator_identity_check: singular matrix");
    std::vector<Rat> xa = A.solve(a), xb = A.solve(b);
    Rat quad_a = 0, quad_b = 0;
    for (int i = 0; i < n; ++i) {
        quad_a += a[static_cast<size_t>(i)] * xa[static_cast<size_t>(i)];
        quad_b += b[static_cast<size_t>(i)] * xb[static_cast<size_t>(i)];
    }
    Rat lhs = det_a * (1 + p * quad_a + (1 - p) * quad_b);

    auto with_outer = [&](const std::vector<Rat>& v) {
        RatMatrix m = A;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) += v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
        return m.det();
    };
    Rat rhs = p * with_outer(a) + (1 - p) * with_outer(b);
    return lhs == rhs;
}

}  // namespace ramalift

#endif  // RAMALIFT_EXPECTATION_HPP
