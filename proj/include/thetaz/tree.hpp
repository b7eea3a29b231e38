#pragma once

/// @file
/// @brief Planar level-trees of finite height and the bracket text form.
///
/// A tree is stored as its tower of monotone parent maps: level 0 is the
/// single root, and parent[i][j] is the index (at level i) of the parent of
/// node j at level i+1. Monotonicity of each parent vector encodes the planar
/// order; children of a node always occupy a contiguous index range.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace thetaz {

struct Tree {
    std::vector<std::vector<int>> parent;

    int height() const { return static_cast<int>(parent.size()); }

    int levelSize(int level) const {
        if (level == 0) return 1;
        if (level < 0 || level > height()) return 0;
        return static_cast<int>(parent[level - 1].size());
    }

    int nodeCount() const {
        int n = 1;
        for (const auto& p : parent) n += static_cast<int>(p.size());
        return n;
    }

    bool operator==(const Tree&) const = default;
};

/// Ordered list of trees; the result of desuspending a tree at its root.
struct Forest {
    std::vector<Tree> trees;
    bool operator==(const Forest&) const = default;
};

/// Contiguous index range [first, last) of the children of node `idx` at
/// `level` (children live at level+1).
inline std::pair<int, int> childRange(const Tree& t, int level, int idx) {
    if (level >= t.height()) return {0, 0};
    const auto& p = t.parent[level];
    auto lo = std::lower_bound(p.begin(), p.end(), idx);
    auto hi = std::upper_bound(p.begin(), p.end(), idx);
    return {static_cast<int>(lo - p.begin()), static_cast<int>(hi - p.begin())};
}

inline int childCount(const Tree& t, int level, int idx) {
    auto [a, b] = childRange(t, level, idx);
    return b - a;
}

/// Validating constructor. levelSizes[0] must be 1 and every listed level
/// must be nonempty; parents[i] maps level i+1 into level i and must be
/// monotone nondecreasing.
inline Tree makeTree(const std::vector<int>& levelSizes,
                     const std::vector<std::vector<int>>& parents) {
    if (levelSizes.empty() || levelSizes[0] != 1)
        throw DomainError("MultipleRoots", "level 0 must contain exactly one node");
    if (parents.size() + 1 != levelSizes.size())
        throw DomainError("EmptyLevelInterior", "parent maps must cover levels 1..height");
    Tree t;
    t.parent = parents;
    for (std::size_t i = 0; i < parents.size(); ++i) {
        if (levelSizes[i + 1] <= 0)
            throw DomainError("EmptyLevelInterior",
                              "level " + std::to_string(i + 1) + " is empty below a listed level");
        if (static_cast<int>(parents[i].size()) != levelSizes[i + 1])
            throw DomainError("EmptyLevelInterior",
                              "level " + std::to_string(i + 1) + " size does not match parent map");
        int prev = 0;
        for (int v : parents[i]) {
            if (v < 0 || v >= levelSizes[i])
                throw DomainError("NonMonotoneParent", "parent index out of range");
            if (v < prev)
                throw DomainError("NonMonotoneParent", "parent map is not monotone");
            prev = v;
        }
    }
    return t;
}

/// The 0-globe: a single root.
inline Tree d0() { return Tree{}; }

/// The n-globe as a tree: a chain of n+1 singleton levels.
inline Tree globeTree(int n) {
    Tree t;
    t.parent.assign(static_cast<std::size_t>(std::max(n, 0)), {0});
    return t;
}

/// New root below the old one; levels shift up by one.
inline Tree suspend(const Tree& t) {
    Tree s;
    s.parent.reserve(t.parent.size() + 1);
    s.parent.push_back({0});
    for (const auto& p : t.parent) s.parent.push_back(p);
    return s;
}

/// True when the tree is suspend(t') for some t', i.e. the root has exactly
/// one child. The 0-globe counts as a non-suspension.
inline bool isSuspension(const Tree& t) { return t.height() >= 1 && t.levelSize(1) == 1; }

namespace detail {

/// Subtree rooted at node `idx` of level 1, reindexed from its own root.
inline Tree subtreeAtLevelOne(const Tree& t, int idx) {
    Tree sub;
    int lo = idx, hi = idx + 1;
    for (int level = 1; level < t.height(); ++level) {
        const auto& p = t.parent[level];
        auto first = std::lower_bound(p.begin(), p.end(), lo);
        auto last = std::lower_bound(p.begin(), p.end(), hi);
        if (first == last) break;
        std::vector<int> rebased;
        rebased.reserve(static_cast<std::size_t>(last - first));
        for (auto it = first; it != last; ++it) rebased.push_back(*it - lo);
        sub.parent.push_back(std::move(rebased));
        lo = static_cast<int>(first - p.begin());
        hi = static_cast<int>(last - p.begin());
    }
    return sub;
}

struct TreeNode {
    std::vector<TreeNode> children;
};

/// Breadth-first conversion; level indices are assigned in planar order.
inline Tree fromNode(const TreeNode& root) {
    Tree t;
    std::vector<const TreeNode*> current{&root};
    while (true) {
        std::vector<const TreeNode*> next;
        std::vector<int> parents;
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (const TreeNode& c : current[i]->children) {
                next.push_back(&c);
                parents.push_back(static_cast<int>(i));
            }
        }
        if (next.empty()) break;
        t.parent.push_back(std::move(parents));
        current = std::move(next);
    }
    return t;
}

inline TreeNode toNode(const Tree& t, int level = 0, int idx = 0) {
    TreeNode n;
    auto [a, b] = childRange(t, level, idx);
    n.children.reserve(static_cast<std::size_t>(b - a));
    for (int j = a; j < b; ++j) n.children.push_back(toNode(t, level + 1, j));
    return n;
}

}  // namespace detail

/// Forest of subtrees hanging under the root, in planar order.
inline Forest desuspendForest(const Tree& t) {
    Forest f;
    int n = t.levelSize(1);
    f.trees.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) f.trees.push_back(detail::subtreeAtLevelOne(t, j));
    return f;
}

/// Leaves (nodes without children) in planar depth-first order, as
/// (level, index) pairs.
inline std::vector<std::pair<int, int>> leaves(const Tree& t) {
    std::vector<std::pair<int, int>> out;
    auto walk = [&](auto&& self, int level, int idx) -> void {
        auto [a, b] = childRange(t, level, idx);
        if (a == b) {
            out.emplace_back(level, idx);
            return;
        }
        for (int j = a; j < b; ++j) self(self, level + 1, j);
    };
    walk(walk, 0, 0);
    return out;
}

inline int parentIndex(const Tree& t, int level, int idx) {
    return t.parent[level - 1][idx];
}

/// Level of the deepest common ancestor of two nodes.
inline int meetLevel(const Tree& t, std::pair<int, int> a, std::pair<int, int> b) {
    auto [la, ia] = a;
    auto [lb, ib] = b;
    while (la > lb) ia = parentIndex(t, la--, ia);
    while (lb > la) ib = parentIndex(t, lb--, ib);
    while (ia != ib) {
        ia = parentIndex(t, la, ia);
        ib = parentIndex(t, la, ib);
        --la;
    }
    return la;
}

inline void printTreeInto(const Tree& t, int level, int idx, std::string& out) {
    out.push_back('(');
    auto [a, b] = childRange(t, level, idx);
    for (int j = a; j < b; ++j) printTreeInto(t, level + 1, j, out);
    out.push_back(')');
}

/// Bracket text: a node prints as '(' followed by its children ')'.
inline std::string printTree(const Tree& t) {
    std::string out;
    printTreeInto(t, 0, 0, out);
    return out;
}

namespace detail {

inline TreeNode parseNode(const std::string& text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '(')
        throw ParseFailure(pos, "expected '('");
    ++pos;
    TreeNode n;
    while (pos < text.size() && text[pos] == '(') n.children.push_back(parseNode(text, pos));
    if (pos >= text.size() || text[pos] != ')')
        throw ParseFailure(pos, "expected ')'");
    ++pos;
    return n;
}

}  // namespace detail

/// Parses the bracket grammar `tree ::= '(' tree* ')'`; the whole string must
/// be consumed.
inline Tree parseTree(const std::string& text) {
    std::size_t pos = 0;
    detail::TreeNode root = detail::parseNode(text, pos);
    if (pos != text.size()) throw ParseFailure(pos, "trailing characters after tree");
    return detail::fromNode(root);
}

namespace detail {

inline std::vector<TreeNode> nodeTreesExactly(int n);

inline std::vector<std::vector<TreeNode>> nodeForestsExactly(int total) {
    std::vector<std::vector<TreeNode>> out;
    if (total == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= total; ++first) {
        auto heads = nodeTreesExactly(first);
        auto tails = nodeForestsExactly(total - first);
        for (const auto& h : heads)
            for (const auto& rest : tails) {
                std::vector<TreeNode> f;
                f.reserve(rest.size() + 1);
                f.push_back(h);
                f.insert(f.end(), rest.begin(), rest.end());
                out.push_back(std::move(f));
            }
    }
    return out;
}

inline std::vector<TreeNode> nodeTreesExactly(int n) {
    std::vector<TreeNode> out;
    if (n <= 0) return out;
    for (auto& f : nodeForestsExactly(n - 1)) {
        TreeNode root;
        root.children = std::move(f);
        out.push_back(std::move(root));
    }
    return out;
}

}  // namespace detail

/// All planar trees with at most maxNodes nodes, ordered by node count and
/// then by bracket text. Counts per exact node count follow the Catalan
/// numbers: 1, 1, 2, 5, 14, ...
inline std::vector<Tree> enumerateTrees(int maxNodes) {
    std::vector<Tree> out;
    for (int n = 1; n <= maxNodes; ++n) {
        std::vector<Tree> batch;
        for (const auto& node : detail::nodeTreesExactly(n)) batch.push_back(detail::fromNode(node));
        std::sort(batch.begin(), batch.end(), [](const Tree& a, const Tree& b) {
            return printTree(a) < printTree(b);
        });
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace thetaz
