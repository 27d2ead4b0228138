#ifndef RAMALIFT_PATH_TREE_HPP
#define RAMALIFT_PATH_TREE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramalift/bounds.hpp"
#include "ramalift/graph.hpp"
#include "ramalift/matching.hpp"
#include "ramalift/matrix.hpp"

namespace ramalift {

/// Default cap on path-tree size; path trees grow super-exponentially on
/// dense graphs and this module exists to verify small inputs.
inline constexpr int kPathTreeCap = 50000;

/// The tree of simple paths of a graph starting at a root vertex: one tree
/// vertex per path, parent/child when one path extends the other by a vertex.
struct PathTree {
    Graph tree;
    int root = 0;
    std::vector<std::vector<int>> path_labels;  // original-graph vertices per path
};

/// Builds the complete path tree of g from u, vertices in DFS preorder with
/// children visited by ascending neighbor index.
inline PathTree build_path_tree(const Graph& g, int u, int cap = kPathTreeCap) {
    if (u < 0 || u >= g.vertex_count())
        throw std::invalid_argument("build_path_tree: root out of range");
    auto adj = g.neighbors();
    std::vector<std::vector<int>> labels;
    std::vector<Edge> tree_edges;
    std::vector<char> on_path(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> path{u};
    on_path[static_cast<size_t>(u)] = 1;
    labels.push_back(path);

    // Explicit recursion over (tree node, last graph vertex).
    auto extend = [&](auto&& self, int node) -> void {
        int last = labels[static_cast<size_t>(node)].back();
        for (int w : adj[static_cast<size_t>(last)]) {
            if (on_path[static_cast<size_t>(w)]) continue;
            if (static_cast<int>(labels.size()) >= cap)
                throw budget_error("build_path_tree: cap of " + std::to_string(cap) +
                                   " vertices exceeded");
            int child = static_cast<int>(labels.size());
            path.push_back(w);
            on_path[static_cast<size_t>(w)] = 1;
            labels.push_back(path);
            tree_edges.push_back({node, child});
            self(self, child);
            on_path[static_cast<size_t>(w)] = 0;
            path.pop_back();
        }
    };
    extend(extend, 0);

    PathTree t;
    t.tree = Graph(static_cast<int>(labels.size()), std::move(tree_edges));
    t.root = 0;
    t.path_labels = std::move(labels);
    return t;
}

/// char(xI - A) of a tree by the rooted two-polynomial recurrence: for a
/// vertex v with children c_1..c_k (subtree polynomials A_c, deleted-root
/// polynomials B_c = prod of grandchild subtrees),
///   A_v = x * prod_c A_c - sum_c B_c * prod_{c' != c} A_{c'},   B_v = prod_c A_c.
/// O(n^2) coefficient operations; path trees reach thousands of vertices,
/// far beyond what the dense characteristic-polynomial routine can handle.
inline IntPoly tree_char_poly(const Graph& t, int root) {
    const int n = t.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("tree_char_poly: root out of range");
    if (t.edge_count() != n - 1)
        throw std::invalid_argument("tree_char_poly: edge count does not match a tree");
    auto adj = t.neighbors();
    // BFS order from the root; a parent always precedes its children.
    std::vector<int> order, parent(static_cast<size_t>(n), -1);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    order.reserve(static_cast<size_t>(n));
    order.push_back(root);
    seen[static_cast<size_t>(root)] = 1;
    for (size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : adj[static_cast<size_t>(v)]) {
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            parent[static_cast<size_t>(w)] = v;
            order.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("tree_char_poly: input is not connected");

    const IntPoly one({Int(1)});
    const IntPoly x({Int(0), Int(1)});
    std::vector<IntPoly> sub(static_cast<size_t>(n)), del(static_cast<size_t>(n));
    for (size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        IntPoly prod = one, sum;  // running prod of child A's; running cross sum
        for (int w : adj[static_cast<size_t>(v)]) {
            if (w == parent[static_cast<size_t>(v)]) continue;
            sum = sum * sub[static_cast<size_t>(w)] + del[static_cast<size_t>(w)] * prod;
            prod = prod * sub[static_cast<size_t>(w)];
        }
        sub[static_cast<size_t>(v)] = x * prod - sum;
        del[static_cast<size_t>(v)] = std::move(prod);
    }
    return sub[static_cast<size_t>(root)];
}

/// Does mu_G divide char(P(G,u)) exactly? (Always expected true.)
inline bool divisibility_check(const Graph& g, int u, int cap = kPathTreeCap) {
    PathTree t = build_path_tree(g, u, cap);
    IntPoly tree_char = tree_char_poly(t.tree, t.root);
    IntPoly mu = matching_polynomial(g);
    return try_exact_div(tree_char, mu).has_value();
}

/// lambda_max of the tree's adjacency spectrum as an algebraic bound; for a
/// tree the characteristic polynomial is its matching polynomial, so this
/// reuses the exact root machinery unchanged.
inline RootBound tree_spectral_radius(const PathTree& t) {
    RootBound b;
    b.kind = BoundKind::matching_root;
    b.minimal_poly = tree_char_poly(t.tree, t.root);
    AlgebraicNumber top = largest_root(b.minimal_poly);
    top.refine_below(default_root_precision());
    b.lo = top.lo();
    b.hi = top.hi();
    b.degenerate = (top.compare(Rat(0)) == 0);
    return b;
}

/// Label map format: "vertex: v0,v1,...,vk" per line.
inline std::string path_labels_to_text(const PathTree& t) {
    std::string out;
    for (size_t i = 0; i < t.path_labels.size(); ++i) {
        out += std::to_string(i) + ":";
        for (size_t j = 0; j < t.path_labels[i].size(); ++j) {
            out += (j ? "," : " ") + std::to_string(t.path_labels[i][j]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace ramalift

#endif  // RAMALIFT_PATH_TREE_HPP
