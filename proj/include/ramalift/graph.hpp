#ifndef RAMALIFT_GRAPH_HPP
#define RAMALIFT_GRAPH_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramalift/matrix.hpp"

namespace ramalift {

/// Unordered vertex pair, stored with u < v.
struct Edge {
    int u, v;
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
};

/// Simple undirected graph with an ordered edge list. The edge order is
/// stable and is the canonical index order for signings.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
        std::set<std::pair<int, int>> seen;
        for (auto& e : edges) {
            if (e.u == e.v)
                throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n_)
                throw std::invalid_argument("Graph: edge endpoint out of range: (" +
                                            std::to_string(e.u) + "," + std::to_string(e.v) + ")");
            if (!seen.insert({e.u, e.v}).second)
                throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ")");
        }
        edges_ = std::move(edges);
    }

    /// Complete bipartite graph with side sizes (p, q): left vertices
    /// 0..p-1 (degree q), right vertices p..p+q-1 (degree p); edges in
    /// row-major order by left vertex.
    static Graph complete_bipartite(int p, int q) {
        if (p < 1 || q < 1) throw std::invalid_argument("complete_bipartite: zero side size");
        std::vector<Edge> es;
        es.reserve(static_cast<size_t>(p) * q);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) es.push_back({i, p + j});
        return Graph(p + q, std::move(es));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

    std::vector<int> degrees() const {
        std::vector<int> deg(static_cast<size_t>(n_), 0);
        for (const auto& e : edges_) {
            ++deg[static_cast<size_t>(e.u)];
            ++deg[static_cast<size_t>(e.v)];
        }
        return deg;
    }

    int max_degree() const {
        int m = 0;
        for (int d : degrees()) m = std::max(m, d);
        return m;
    }

    /// Ascending neighbor lists.
    std::vector<std::vector<int>> neighbors() const {
        std::vector<std::vector<int>> adj(static_cast<size_t>(n_));
        for (const auto& e : edges_) {
            adj[static_cast<size_t>(e.u)].push_back(e.v);
            adj[static_cast<size_t>(e.v)].push_back(e.u);
        }
        for (auto& row : adj) std::sort(row.begin(), row.end());
        return adj;
    }

    IntMatrix adjacency_matrix() const {
        IntMatrix a(n_);
        for (const auto& e : edges_) {
            a.at(e.u, e.v) = 1;
            a.at(e.v, e.u) = 1;
        }
        return a;
    }

    /// Induced subgraph on an ascending vertex list, vertices relabeled by
    /// position; surviving edges keep their relative order.
    Graph induced(const std::vector<int>& vertices) const {
        std::vector<int> pos(static_cast<size_t>(n_), -1);
        for (size_t i = 0; i < vertices.size(); ++i)
            pos[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
        std::vector<Edge> es;
        for (const auto& e : edges_) {
            int pu = pos[static_cast<size_t>(e.u)], pv = pos[static_cast<size_t>(e.v)];
            if (pu >= 0 && pv >= 0) es.push_back({pu, pv});
        }
        return Graph(static_cast<int>(vertices.size()), std::move(es));
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// A +-1 value per edge, aligned with the graph's edge order.
struct Signing {
    std::vector<int> signs;

    static Signing all_plus(const Graph& g) {
        return Signing{std::vector<int>(static_cast<size_t>(g.edge_count()), +1)};
    }

    void validate(const Graph& g) const {
        if (static_cast<int>(signs.size()) != g.edge_count())
            throw std::invalid_argument("Signing: length does not match edge count");
        for (int s : signs)
            if (s != 1 && s != -1) throw std::invalid_argument("Signing: entries must be +1 or -1");
    }
};

/// Per-edge value in {+1, -1, 0}; 0 marks an unset edge.
struct PartialSigning {
    std::vector<int> assignments;

    static PartialSigning all_unset(const Graph& g) {
        return PartialSigning{std::vector<int>(static_cast<size_t>(g.edge_count()), 0)};
    }

    void validate(const Graph& g) const {
        if (static_cast<int>(assignments.size()) != g.edge_count())
            throw std::invalid_argument("PartialSigning: length does not match edge count");
        for (int s : assignments)
            if (s != 1 && s != -1 && s != 0)
                throw std::invalid_argument("PartialSigning: entries must be +1, -1 or 0");
    }

    int unset_count() const {
        int k = 0;
        for (int s : assignments)
            if (s == 0) ++k;
        return k;
    }
};

/// Per-vertex side label; 0 = L, 1 = R.
struct Bipartition {
    std::vector<int> side;
};

/// Signed adjacency matrix: entry s(e) at both (u,v) and (v,u) per edge.
inline IntMatrix signed_adjacency(const Graph& g, const Signing& s) {
    s.validate(g);
    IntMatrix a(g.vertex_count());
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        a.at(e.u, e.v) = s.signs[i];
        a.at(e.v, e.u) = s.signs[i];
    }
    return a;
}

/// Two-coloring with the lowest-index vertex of each component labeled L;
/// none if the graph is not bipartite.
inline std::optional<Bipartition> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = g.neighbors();
    std::vector<int> side(static_cast<size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (side[static_cast<size_t>(start)] != -1) continue;
        side[static_cast<size_t>(start)] = 0;
        std::vector<int> queue{start};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : adj[static_cast<size_t>(v)]) {
                if (side[static_cast<size_t>(w)] == -1) {
                    side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(v)];
                    queue.push_back(w);
                } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return Bipartition{std::move(side)};
}

/// The 2-lift selected by a signing: vertex v lifts to the fibre {v, v+n};
/// a +1 edge (u,v) becomes (u,v),(u+n,v+n), a -1 edge becomes
/// (u,v+n),(u+n,v). The lift's spectrum is eig(A) together with eig(A_s).
inline Graph two_lift(const Graph& g, const Signing& s) {
    s.validate(g);
    const int n = g.vertex_count();
    std::vector<Edge> out;
    out.reserve(2 * g.edges().size());
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        if (s.signs[i] == +1) {
            out.push_back({e.u, e.v});
            out.push_back({e.u + n, e.v + n});
        } else {
            out.push_back({e.u, e.v + n});
            out.push_back({e.v, e.u + n});
        }
    }
    return Graph(2 * n, std::move(out));
}

/// Connected components as ascending vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = g.neighbors();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> comp{start};
        seen[static_cast<size_t>(start)] = true;
        for (size_t qi = 0; qi < comp.size(); ++qi)
            for (int w : adj[static_cast<size_t>(comp[qi])])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// Uniform degree if the graph is regular (requires at least one vertex).
inline std::optional<int> regular_degree(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    auto deg = g.degrees();
    for (int d : deg)
        if (d != deg[0]) return std::nullopt;
    return deg[0];
}

/// Biregular profile (c, d) with an orientation of the bipartition such that
/// every L vertex has degree c and every R vertex degree d; components are
/// flipped individually to agree. Requires c, d >= 1.
struct BiregularProfile {
    int c, d;
    Bipartition sides;
};

inline std::optional<BiregularProfile> biregular_profile(const Graph& g) {
    auto bp = bipartition(g);
    if (!bp) return std::nullopt;
    auto deg = g.degrees();
    int c = -1, d = -1;
    std::vector<int> side = bp->side;
    for (const auto& comp : components(g)) {
        int cl = -1, cr = -1;
        for (int v : comp) {
            int& slot = side[static_cast<size_t>(v)] == 0 ? cl : cr;
            if (slot == -1) slot = deg[static_cast<size_t>(v)];
            else if (slot != deg[static_cast<size_t>(v)]) return std::nullopt;
        }
        if (cl < 1 || cr < 1) return std::nullopt;  // isolated vertices break biregularity
        if (c == -1) {
            c = cl;
            d = cr;
        } else if (cl == c && cr == d) {
            // consistent as-is
        } else if (cl == d && cr == c) {
            for (int v : comp) side[static_cast<size_t>(v)] ^= 1;
        } else {
            return std::nullopt;
        }
    }
    if (c == -1) return std::nullopt;  // edgeless graph
    return BiregularProfile{c, d, Bipartition{std::move(side)}};
}

}  // namespace ramalift

#endif  // RAMALIFT_GRAPH_HPP
