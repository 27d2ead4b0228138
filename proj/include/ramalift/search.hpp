#ifndef RAMALIFT_SEARCH_HPP
#define RAMALIFT_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ramalift/bounds.hpp"
#include "ramalift/expectation.hpp"
#include "ramalift/graph.hpp"
#include "ramalift/matching.hpp"
#include "ramalift/matrix.hpp"
#include "ramalift/roots.hpp"

namespace ramalift {

/// One greedy step: the edge processed, the sign kept, and the exact
/// comparison of the two branch polynomials' largest roots.
struct TrailStep {
    int edge;
    int choice;
    Cmp comparison;
};

/// A certified isolating interval for one distinct eigenvalue.
struct EigenvalueInterval {
    Rat lo, hi;
    int multiplicity = 1;
    bool trivial = false;
};

/// Machine-checkable record tying a graph, an algebraic bound, and certified
/// eigenvalue intervals into a verdict.
struct Certificate {
    int n = 0, m = 0;
    std::vector<int> degrees;
    bool bipartite = false;
    int components = 1;
    RootBound bound;
    std::vector<EigenvalueInterval> eigenvalues;
    BoundVerdict verdict = BoundVerdict::EXCEEDS;
    std::string method;  // "greedy" | "exhaustive" | "direct"
    std::vector<TrailStep> trail;
};

struct SearchOptions {
    int budget_vertices = 24;
    int budget_edges = 40;
    std::vector<int> edge_order;  // empty = canonical edge-list order
    std::optional<unsigned> shuffle_seed;  // used only when edge_order is empty
    Rat precision = default_root_precision();
};

namespace detail {

inline void summarize_graph(const Graph& g, Certificate& cert) {
    cert.n = g.vertex_count();
    cert.m = g.edge_count();
    cert.degrees = g.degrees();
    cert.bipartite = bipartition(g).has_value();
    cert.components = static_cast<int>(components(g).size());
}

inline std::vector<EigenvalueInterval> eigenvalue_intervals(const IntPoly& f, const Rat& prec) {
    std::vector<EigenvalueInterval> out;
    if (f.degree() == 0) return out;
    RootIsolation iso = isolate_roots(f, prec);
    out.reserve(iso.roots.size());
    for (const auto& r : iso.roots) out.push_back({r.lo, r.hi, r.multiplicity, false});
    return out;
}

/// Bound a search certificate is judged against: the cover bound, unless it
/// is degenerate (d <= 1 has no meaningful 2*sqrt(d-1) value), in which case
/// the matching-root bound carries the guarantee the descent actually proves.
inline RootBound search_bound(const Graph& g) {
    RootBound b = cover_bound(g);
    if (b.degenerate) b = matching_root_bound(g);
    return b;
}

}  // namespace detail

/// Greedy interlacing descent: processes the edges in order, at each step
/// keeping the sign whose conditional-sum polynomial has the smaller largest
/// root (ties take +1). Guarantees lambda_max(char(A_s)) <= lambda_max(mu_G);
/// every internal invariant is checked exactly and a violation throws
/// certification_error (an implementation defect, never bad input).
inline std::pair<Signing, Certificate> find_good_signing(const Graph& g,
                                                         const SearchOptions& opts = {}) {
    if (g.vertex_count() > opts.budget_vertices || g.edge_count() > opts.budget_edges)
        throw budget_error("find_good_signing: graph exceeds search budget of " +
                           std::to_string(opts.budget_vertices) + " vertices / " +
                           std::to_string(opts.budget_edges) + " edges");
    const int m = g.edge_count();
    std::vector<int> order = opts.edge_order;
    if (order.empty()) {
        for (int i = 0; i < m; ++i) order.push_back(i);
        if (opts.shuffle_seed) {
            std::mt19937 rng(*opts.shuffle_seed);
            std::shuffle(order.begin(), order.end(), rng);
        }
    }
    {
        std::vector<char> seen(static_cast<size_t>(m), 0);
        if (static_cast<int>(order.size()) != m)
            throw std::invalid_argument("find_good_signing: edge order length mismatch");
        for (int idx : order) {
            if (idx < 0 || idx >= m || seen[static_cast<size_t>(idx)])
                throw std::invalid_argument("find_good_signing: edge order is not a permutation");
            seen[static_cast<size_t>(idx)] = 1;
        }
    }

    PartialSigning partial = PartialSigning::all_unset(g);
    IntPoly parent = conditional_expectation(g, partial);  // 2^m * mu_G
    std::vector<TrailStep> trail;
    trail.reserve(static_cast<size_t>(m));
    for (int idx : order) {
        partial.assignments[static_cast<size_t>(idx)] = +1;
        IntPoly f_plus = conditional_expectation(g, partial);
        partial.assignments[static_cast<size_t>(idx)] = -1;
        IntPoly f_minus = conditional_expectation(g, partial);
        if (f_plus + f_minus != parent)
            throw certification_error("find_good_signing: sum recursion violated at edge " +
                                      std::to_string(idx));
        Cmp cmp = compare_largest_roots(f_plus, f_minus);
        int choice = (cmp == Cmp::GREATER) ? -1 : +1;
        partial.assignments[static_cast<size_t>(idx)] = choice;
        const IntPoly& chosen = (choice == +1) ? f_plus : f_minus;
        if (compare_largest_roots(chosen, parent) == Cmp::GREATER)
            throw certification_error("find_good_signing: descent monotonicity violated at edge " +
                                      std::to_string(idx));
        trail.push_back({idx, choice, cmp});
        parent = chosen;
    }

    Signing s{partial.assignments};
    IntPoly f_s = char_poly(signed_adjacency(g, s));
    if (f_s != parent)
        throw certification_error("find_good_signing: leaf polynomial mismatch");
    if (g.vertex_count() >= 1 &&
        compare_largest_roots(f_s, matching_polynomial(g)) == Cmp::GREATER)
        throw certification_error("find_good_signing: endpoint guarantee violated");

    Certificate cert;
    detail::summarize_graph(g, cert);
    cert.bound = detail::search_bound(g);
    cert.eigenvalues = detail::eigenvalue_intervals(f_s, opts.precision);
    cert.verdict = compare_root_to_bound(f_s, cert.bound);
    cert.method = "greedy";
    cert.trail = std::move(trail);
    return {std::move(s), std::move(cert)};
}

/// Enumerates all 2^m signings and returns one minimizing the largest root
/// of char(A_s) under exact comparison (the oracle for the greedy guarantee).
inline std::pair<Signing, Certificate> exhaustive_best_signing(
    const Graph& g, const Rat& precision = default_root_precision()) {
    const int m = g.edge_count();
    if (m > 16) throw budget_error("exhaustive_best_signing: more than 16 edges");
    // Distinct polynomials first: many signings share a characteristic
    // polynomial, and the exact root tournament is the expensive part.
    std::map<IntPoly, uint32_t> first_signing;
    Signing s{std::vector<int>(static_cast<size_t>(m), -1)};
    for (uint32_t bits = 0; bits < (1u << m); ++bits) {
        for (int i = 0; i < m; ++i)
            s.signs[static_cast<size_t>(i)] = ((bits >> i) & 1u) ? +1 : -1;
        first_signing.emplace(char_poly(signed_adjacency(g, s)), bits);
    }
    const IntPoly* best = nullptr;
    uint32_t best_bits = 0;
    std::optional<AlgebraicNumber> best_root;
    for (const auto& [f, bits] : first_signing) {
        if (f.degree() == 0) {  // n = 0: a single empty spectrum
            best = &f;
            best_bits = bits;
            break;
        }
        AlgebraicNumber r = largest_root(f);
        if (!best_root || r.compare(*best_root) < 0) {
            best = &f;
            best_bits = bits;
            best_root = std::move(r);
        }
    }
    for (int i = 0; i < m; ++i)
        s.signs[static_cast<size_t>(i)] = ((best_bits >> i) & 1u) ? +1 : -1;

    Certificate cert;
    detail::summarize_graph(g, cert);
    cert.bound = detail::search_bound(g);
    cert.eigenvalues = detail::eigenvalue_intervals(*best, precision);
    cert.verdict = compare_root_to_bound(*best, cert.bound);
    cert.method = "exhaustive";
    return {std::move(s), std::move(cert)};
}

/// Certifies whether a d-regular or (c,d)-biregular bipartite graph is
/// Ramanujan: computes char(A) exactly, strips the trivial eigenvalues
/// (d per component, -d per bipartite component; +-sqrt(cd) per component in
/// the biregular case), and classifies every remaining root's absolute value
/// against the cover bound. Graphs outside those classes need an explicit
/// custom bound, against which the full spectrum is then checked.
inline Certificate certify_ramanujan(const Graph& g,
                                     const std::optional<RootBound>& custom = std::nullopt,
                                     const Rat& precision = default_root_precision()) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("certify_ramanujan: graph has no vertices");
    Certificate cert;
    detail::summarize_graph(g, cert);
    cert.method = "direct";

    IntPoly char_a = char_poly(g.adjacency_matrix());
    auto comps = components(g);
    auto reg = regular_degree(g);

    IntPoly quotient = char_a;
    std::vector<AlgebraicNumber> trivia;  // values to flag in the spectrum
    auto strip = [&](const IntPoly& factor) {
        auto q = try_exact_div(quotient, factor);
        if (!q)
            throw certification_error(
                "certify_ramanujan: trivial eigenvalue division failed (expected factor " +
                to_text(factor) + ")");
        quotient = std::move(*q);
    };

    if (reg && *reg >= 1) {
        const int d = *reg;
        cert.bound = custom ? *custom : regular_bound(d);
        bool any_bipartite = false;
        for (const auto& comp : comps) {
            strip(IntPoly{Int(-d), Int(1)});  // x - d
            if (bipartition(g.induced(comp))) {
                strip(IntPoly{Int(d), Int(1)});  // x + d
                any_bipartite = true;
            }
        }
        trivia.push_back(AlgebraicNumber::from_rational(Rat(d)));
        if (any_bipartite) trivia.push_back(AlgebraicNumber::from_rational(Rat(-d)));
    } else if (auto bi = biregular_profile(g)) {
        cert.bound = custom ? *custom : biregular_bound(bi->c, bi->d);
        Int cd = Int(bi->c) * bi->d;
        IntPoly x2_cd{-cd, Int(0), Int(1)};
        for (size_t i = 0; i < comps.size(); ++i) strip(x2_cd);
        RootIsolation pm = isolate_roots(x2_cd);
        trivia.push_back(pm.root_value(0));  // -sqrt(cd)
        trivia.push_back(pm.root_value(1));  // +sqrt(cd)
    } else if (custom) {
        cert.bound = *custom;  // no trivial-eigenvalue notion outside the structured classes
    } else {
        throw std::invalid_argument(
            "certify_ramanujan: graph is neither regular nor biregular bipartite; supply a "
            "custom bound");
    }

    RootIsolation iso = isolate_roots(char_a, precision);
    for (size_t i = 0; i < iso.roots.size(); ++i) {
        EigenvalueInterval ev{iso.roots[i].lo, iso.roots[i].hi, iso.roots[i].multiplicity, false};
        AlgebraicNumber v = iso.root_value(i);
        for (const auto& t : trivia)
            if (v.compare(t) == 0) {
                ev.trivial = true;
                break;
            }
        cert.eigenvalues.push_back(std::move(ev));
    }
    cert.verdict = compare_absolute_to_bound(quotient, cert.bound);
    return cert;
}

}  // namespace ramalift

#endif  // RAMALIFT_SEARCH_HPP
