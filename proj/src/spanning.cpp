#include "lstn/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lstn {

namespace {

Edge norm_edge(std::size_t u, std::size_t v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

}  // namespace

double tree_length(const Selection& sel, const std::vector<Edge>& edges) {
    double total = 0.0;
    for (const auto& [u, v] : edges) total += dist(sel.points[u], sel.points[v]);
    return total;
}

Tree max_spanning_tree(const Selection& sel) {
    const std::size_t n = sel.size();
    if (n < 2) throw std::invalid_argument("max_spanning_tree: need n >= 2 points");
    std::vector<bool> in_tree(n, false);
    std::vector<double> best(n, 0.0);
    std::vector<std::size_t> parent(n, 0);
    in_tree[0] = true;
    for (std::size_t v = 1; v < n; ++v) best[v] = dist(sel.points[0], sel.points[v]);

    Tree tree;
    tree.edges.reserve(n - 1);
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t pick = 0;
        bool have = false;
        for (std::size_t v = 1; v < n; ++v) {
            if (in_tree[v]) continue;
            if (!have || best[v] > best[pick] ||
                (best[v] == best[pick] &&
                 norm_edge(parent[v], v) < norm_edge(parent[pick], pick))) {
                pick = v;
                have = true;
            }
        }
        in_tree[pick] = true;
        tree.edges.push_back(norm_edge(parent[pick], pick));
        for (std::size_t v = 1; v < n; ++v) {
            if (in_tree[v]) continue;
            const double d = dist(sel.points[pick], sel.points[v]);
            if (d > best[v] || (d == best[v] && norm_edge(pick, v) < norm_edge(parent[v], v))) {
                best[v] = d;
                parent[v] = pick;
            }
        }
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    tree.length = tree_length(sel, tree.edges);
    return tree;
}

Tree star(const Selection& sel, std::size_t center) {
    const std::size_t n = sel.size();
    if (center >= n) throw std::invalid_argument("star: center index out of range");
    Tree tree;
    tree.edges.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
        if (r != center) tree.edges.push_back(norm_edge(center, r));
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    tree.length = tree_length(sel, tree.edges);
    return tree;
}

Tree two_star(const Selection& sel, std::size_t p, std::size_t q,
              const std::vector<std::size_t>& anchor_of) {
    const std::size_t n = sel.size();
    if (p >= n || q >= n || p == q) throw std::invalid_argument("two_star: bad center indices");
    if (anchor_of.size() != n) throw std::invalid_argument("two_star: anchor map size mismatch");
    Tree tree;
    tree.edges.reserve(n - 1);
    tree.edges.push_back(norm_edge(p, q));
    for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        if (anchor_of[r] != p && anchor_of[r] != q) {
            throw std::invalid_argument("two_star: anchor of region " + std::to_string(r) +
                                        " must be one of the centers");
        }
        tree.edges.push_back(norm_edge(anchor_of[r], r));
    }
    std::sort(tree.edges.begin(), tree.edges.end());
    tree.length = tree_length(sel, tree.edges);
    return tree;
}

bool is_spanning_tree(std::size_t n, const std::vector<Edge>& edges) {
    if (n < 1 || edges.size() != n - 1) return false;
    std::vector<std::size_t> root(n);
    std::iota(root.begin(), root.end(), std::size_t{0});
    auto find = [&root](std::size_t v) {
        while (root[v] != v) {
            root[v] = root[root[v]];
            v = root[v];
        }
        return v;
    };
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n || u == v) return false;
        const std::size_t ru = find(u);
        const std::size_t rv = find(v);
        if (ru == rv) return false;  // cycle
        root[ru] = rv;
    }
    return true;  // n-1 edges and acyclic implies connected
}

}  // namespace lstn
