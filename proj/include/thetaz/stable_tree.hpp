#pragma once

/// @file
/// @brief Stable trees: trees placed at an integer offset, up to suspension.
///
/// A stable tree (z, T) denotes the functor on integer levels whose value is
/// a single node at every level below z and level i of T at level z+i. The
/// pair (z, suspend(T)) denotes the same functor as (z+1, T); `normalize`
/// picks the maximal-offset representative (body not itself a suspension).

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "tree.hpp"

namespace thetaz {

struct StableTree {
    int offset = 0;
    Tree body;

    bool operator==(const StableTree&) const = default;  // structural, not up to suspension
};

/// Level of the highest nodes: offset + body height.
inline int topDim(const StableTree& s) { return s.offset + s.body.height(); }

inline StableTree shiftStable(const StableTree& s, int k) { return {s.offset + k, s.body}; }

inline bool isNormal(const StableTree& s) { return !isSuspension(s.body); }

/// Maximal-offset representative: strips suspensions off the body, bumping
/// the offset once per stripped level.
inline StableTree normalize(const StableTree& s) {
    StableTree r = s;
    while (isSuspension(r.body)) {
        r.body = desuspendForest(r.body).trees[0];
        ++r.offset;
    }
    return r;
}

inline bool equalStable(const StableTree& a, const StableTree& b) {
    return normalize(a) == normalize(b);
}

/// The tree t placed with the suspension tower truncated at stage k:
/// suspending t once and lowering k once land on the same stable tree.
inline StableTree infiniteSuspension(const Tree& t, int k) {
    return normalize(StableTree{-k, t});
}

/// The stable globe of dimension n.
inline StableTree stableGlobe(int n) { return {n, d0()}; }

/// Globular presentation of a stable tree: the dimensions n_1..n_p of its
/// leaves in planar order and the dimensions m_1..m_{p-1} of the deepest
/// common ancestors of consecutive leaves. Always m_i < n_i and m_i < n_{i+1}.
struct Spine {
    std::vector<int> leafDims;
    std::vector<int> meetDims;

    bool operator==(const Spine&) const = default;
};

inline Spine spine(const StableTree& s) {
    Spine sp;
    auto lv = leaves(s.body);
    sp.leafDims.reserve(lv.size());
    for (auto [level, idx] : lv) sp.leafDims.push_back(s.offset + level);
    sp.meetDims.reserve(lv.size() - 1);
    for (std::size_t i = 0; i + 1 < lv.size(); ++i)
        sp.meetDims.push_back(s.offset + meetLevel(s.body, lv[i], lv[i + 1]));
    return sp;
}

/// Inverse of `spine`: rebuilds the unique normal-form stable tree with the
/// given presentation. Throws InvalidSpine unless m_i < n_i and m_i < n_{i+1}.
inline StableTree fromSpine(const Spine& sp) {
    const auto& n = sp.leafDims;
    const auto& m = sp.meetDims;
    if (n.empty() || m.size() + 1 != n.size())
        throw DomainError("InvalidSpine", "need p leaf dims and p-1 meet dims with p >= 1");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] >= n[i] || m[i] >= n[i + 1])
            throw DomainError("InvalidSpine", "meet dims must be strictly below adjacent leaf dims");
    }
    if (n.size() == 1) return {n[0], d0()};

    int z = m[0];
    for (int v : m) z = std::min(z, v);

    detail::TreeNode root;
    std::vector<detail::TreeNode*> path{&root};  // path[i] sits at level z+i
    auto pushChainTo = [&](int dim) {
        while (static_cast<int>(path.size()) - 1 < dim - z) {
            detail::TreeNode* top = path.back();
            top->children.emplace_back();
            path.push_back(&top->children.back());
        }
    };
    pushChainTo(n[0]);
    for (std::size_t i = 0; i < m.size(); ++i) {
        path.resize(static_cast<std::size_t>(m[i] - z) + 1);
        pushChainTo(n[i + 1]);
    }
    return {z, detail::fromNode(root)};
}

/// Canonical text `<offset>@<tree>`, e.g. `-2@(())`.
inline std::string printStableTree(const StableTree& s) {
    return std::to_string(s.offset) + "@" + printTree(s.body);
}

/// Accepts `<integer>@<tree>` or a bare `<tree>` (offset 0).
inline StableTree parseStableTree(const std::string& text) {
    std::size_t at = text.find('@');
    if (at == std::string::npos) return {0, parseTree(text)};
    const std::string head = text.substr(0, at);
    std::size_t pos = 0;
    bool neg = false;
    if (pos < head.size() && (head[pos] == '-' || head[pos] == '+')) {
        neg = head[pos] == '-';
        ++pos;
    }
    if (pos >= head.size()) throw ParseFailure(pos, "expected integer offset before '@'");
    long value = 0;
    for (; pos < head.size(); ++pos) {
        if (head[pos] < '0' || head[pos] > '9') throw ParseFailure(pos, "bad digit in offset");
        value = value * 10 + (head[pos] - '0');
        if (value > 1000000) throw ParseFailure(pos, "offset out of range");
    }
    StableTree s;
    s.offset = static_cast<int>(neg ? -value : value);
    std::size_t treePos = 0;
    const std::string tail = text.substr(at + 1);
    detail::TreeNode root = detail::parseNode(tail, treePos);
    if (treePos != tail.size()) throw ParseFailure(at + 1 + treePos, "trailing characters after tree");
    s.body = detail::fromNode(root);
    return s;
}

inline std::string printSpine(const Spine& sp) {
    std::string out = "n=";
    for (std::size_t i = 0; i < sp.leafDims.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(sp.leafDims[i]);
    }
    out += ";m=";
    for (std::size_t i = 0; i < sp.meetDims.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(sp.meetDims[i]);
    }
    return out;
}

namespace detail {

inline std::vector<int> parseIntList(const std::string& text, std::size_t base) {
    std::vector<int> out;
    std::size_t pos = 0;
    if (text.empty()) return out;
    while (true) {
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
            throw ParseFailure(base + pos, "expected integer");
        long v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) throw ParseFailure(base + pos, "integer out of range");
            ++pos;
        }
        out.push_back(static_cast<int>(neg ? -v : v));
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseFailure(base + pos, "expected ','");
        ++pos;
    }
    return out;
}

}  // namespace detail

/// Parses the `n=...;m=...` form produced by printSpine.
inline Spine parseSpine(const std::string& text) {
    if (text.rfind("n=", 0) != 0) throw ParseFailure(0, "expected 'n='");
    std::size_t semi = text.find(";m=");
    if (semi == std::string::npos) throw ParseFailure(text.size(), "expected ';m='");
    Spine sp;
    sp.leafDims = detail::parseIntList(text.substr(2, semi - 2), 2);
    sp.meetDims = detail::parseIntList(text.substr(semi + 3), semi + 3);
    if (sp.leafDims.empty()) throw ParseFailure(2, "spine needs at least one leaf dim");
    return sp;
}

}  // namespace thetaz
