#pragma once

/// @file
/// @brief Independent cross-check computations used by the harness and tests.
///
/// Everything here recomputes a result by a route deliberately different from
/// the primary implementation: windowed functor expansion for stable-tree
/// equality, Catalan convolution for tree counts, a generic union-find for
/// sequential colimits.

#include <algorithm>
#include <numeric>
#include <vector>

#include "pasting.hpp"
#include "stable_tree.hpp"
#include "tree.hpp"
#include "window_cat.hpp"

namespace thetaz::oracle {

/// Levelwise expansion of a stable tree over [lo, hi]: sizes per level and
/// parent maps into the level below (empty for the bottom of the window).
struct WindowExpansion {
    int lo = 0, hi = 0;
    std::vector<int> sizes;
    std::vector<std::vector<int>> parents;

    bool operator==(const WindowExpansion&) const = default;
};

inline WindowExpansion expandWindow(const StableTree& s, int lo, int hi) {
    WindowExpansion w;
    w.lo = lo;
    w.hi = hi;
    const int z = s.offset;
    const int top = topDim(s);
    for (int k = lo; k <= hi; ++k) {
        int size = 0;
        std::vector<int> par;
        if (k < z) {
            size = 1;
            if (k > lo) par = {0};
        } else if (k <= top) {
            size = s.body.levelSize(k - z);
            if (k > lo) {
                if (k == z)
                    par = {0};
                else
                    par = s.body.parent[k - z - 1];
            }
        }
        w.sizes.push_back(size);
        w.parents.push_back(std::move(par));
    }
    return w;
}

/// c[0..n] with c[k] = number of planar trees on k+1 nodes, via the Catalan
/// convolution recurrence.
inline std::vector<long> catalanNumbers(int n) {
    std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= n; ++k) {
        long total = 0;
        for (int i = 0; i < k; ++i) total += c[i] * c[k - 1 - i];
        c[k] = total;
    }
    return c;
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) { parent_[find(a)] = find(b); }

    int classCount() {
        int n = 0;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
            if (find(i) == i) ++n;
        return n;
    }

private:
    std::vector<int> parent_;
};

/// Sign words of coface-generator paths of a given length, identified by
/// flipping any sign above the lowest. canon[mask] is the least word in the
/// class of `mask` (bit i = sign of the generator i steps up).
struct GlobePathClasses {
    int classCount = 0;
    std::vector<int> canon;
};

inline GlobePathClasses globePathClasses(int length) {
    const int n = 1 << length;
    UnionFind uf(n);
    for (int mask = 0; mask < n; ++mask)
        for (int bit = 1; bit < length; ++bit) uf.unite(mask, mask ^ (1 << bit));
    GlobePathClasses out;
    std::vector<int> best(static_cast<std::size_t>(n), n);
    for (int mask = 0; mask < n; ++mask) {
        int& b = best[static_cast<std::size_t>(uf.find(mask))];
        b = std::min(b, mask);
    }
    out.canon.reserve(static_cast<std::size_t>(n));
    for (int mask = 0; mask < n; ++mask)
        out.canon.push_back(best[static_cast<std::size_t>(uf.find(mask))]);
    out.classCount = uf.classCount();
    return out;
}

/// Expected cost of countInertsBrute: the number of raw levelwise sector
/// functions it would enumerate.
inline double inertBruteCost(const StableTree& srcIn, const StableTree& dstIn) {
    const StableTree src = normalize(srcIn), dst = normalize(dstIn);
    const int lo = std::min(src.offset, dst.offset);
    double cost = 1;
    for (int k = lo; k <= topDim(src); ++k) {
        const int sc = sectorCount(src, k), dc = sectorCount(dst, k);
        for (int i = 0; i < sc; ++i) cost *= dc;
    }
    return cost;
}

/// Brute-force inert-map count: every levelwise sector function is built and
/// filtered through checkInert. Exponential; tiny inputs only.
inline long countInertsBrute(const StableTree& srcIn, const StableTree& dstIn) {
    const StableTree src = normalize(srcIn), dst = normalize(dstIn);
    const int lo = std::min(src.offset, dst.offset);
    const int top = topDim(src);
    InertMap f{src, dst, lo, {}};
    f.table.assign(static_cast<std::size_t>(top - lo) + 1, {});
    long count = 0;
    auto rec = [&](auto&& self, int k) -> void {
        if (k > top) {
            if (checkInert(f)) ++count;
            return;
        }
        const int sc = sectorCount(src, k), dc = sectorCount(dst, k);
        if (sc > 0 && dc == 0) return;
        std::vector<int> row(static_cast<std::size_t>(sc), 0);
        while (true) {
            f.table[static_cast<std::size_t>(k - lo)] = row;
            self(self, k + 1);
            int i = 0;
            while (i < sc && ++row[static_cast<std::size_t>(i)] == dc)
                row[static_cast<std::size_t>(i++)] = 0;
            if (i == sc) break;
        }
    };
    rec(rec, lo);
    return count;
}

/// Number of raw sector labelings evaluateBySectorLabelings would enumerate.
inline double evalBruteCost(const WindowZCat& X, const StableTree& sIn) {
    const StableTree s = normalize(sIn);
    double cost = 1;
    for (int k = X.lo; k <= topDim(s); ++k) {
        const int sc = sectorCount(s, k), cc = X.cellCount(k);
        for (int i = 0; i < sc; ++i) cost *= cc;
    }
    return cost;
}

/// Every assignment of cells to the sectors of s at window levels is built
/// and kept when all source/target constraints hold; the result is the sorted
/// list of leaf restrictions. Duplicates are retained deliberately: matching
/// the direct evaluation also certifies that a labeling is determined by its
/// leaf labels. Exponential; tiny inputs only.
inline std::vector<std::vector<int>> evaluateBySectorLabelings(const WindowZCat& X,
                                                               const StableTree& sIn) {
    const StableTree s = normalize(sIn);
    const int top = topDim(s);
    if (top > X.hi)
        throw DomainError("WindowTooSmall", "tree dimension exceeds the window top");
    std::vector<std::pair<int, int>> slots;
    for (int k = X.lo; k <= top; ++k)
        for (int i = 0; i < sectorCount(s, k); ++i) slots.emplace_back(k, i);
    std::vector<std::vector<int>> label;
    for (int k = X.lo; k <= top; ++k)
        label.emplace_back(static_cast<std::size_t>(sectorCount(s, k)), -1);
    const auto leaves = leafSectors(s);
    std::vector<std::vector<int>> out;

    auto admissible = [&]() {
        for (int k = X.lo + 1; k <= top; ++k)
            for (int i = 0; i < sectorCount(s, k); ++i) {
                const Sector x = sectorAt(s, k, i);
                const int c = label[static_cast<std::size_t>(k - X.lo)][static_cast<std::size_t>(i)];
                const int below = k - 1 - X.lo;
                const int ls = label[static_cast<std::size_t>(below)]
                                    [static_cast<std::size_t>(sectorIndex(s, sectorSource(s, x)))];
                const int lt = label[static_cast<std::size_t>(below)]
                                    [static_cast<std::size_t>(sectorIndex(s, sectorTarget(s, x)))];
                if (ls != X.srcOf(k, c) || lt != X.tgtOf(k, c)) return false;
            }
        return true;
    };
    auto record = [&]() {
        if (!admissible()) return;
        std::vector<int> tuple;
        for (const Sector& lf : leaves)
            tuple.push_back(lf.level < X.lo
                                ? -1
                                : label[static_cast<std::size_t>(lf.level - X.lo)]
                                       [static_cast<std::size_t>(sectorIndex(s, lf))]);
        out.push_back(std::move(tuple));
    };
    auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == slots.size()) {
            record();
            return;
        }
        const auto [k, i] = slots[slot];
        for (int c = 0; c < X.cellCount(k); ++c) {
            label[static_cast<std::size_t>(k - X.lo)][static_cast<std::size_t>(i)] = c;
            self(self, slot + 1);
        }
        label[static_cast<std::size_t>(k - X.lo)][static_cast<std::size_t>(i)] = -1;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Evaluation by leaf labels plus downward chain propagation, mirroring the
/// enumeration strategy for inert maps instead of the spine fiber product.
inline std::vector<std::vector<int>> evaluateByChains(const WindowZCat& X, const StableTree& sIn) {
    const StableTree s = normalize(sIn);
    const int top = topDim(s);
    if (top > X.hi)
        throw DomainError("WindowTooSmall", "tree dimension exceeds the window top");
    std::vector<std::vector<int>> label;
    for (int k = X.lo; k <= top; ++k)
        label.emplace_back(static_cast<std::size_t>(sectorCount(s, k)), -1);
    const auto leaves = leafSectors(s);
    std::vector<std::vector<int>> out;

    auto put = [&](const Sector& x, int c) {
        int& slot = label[static_cast<std::size_t>(x.level - X.lo)]
                         [static_cast<std::size_t>(sectorIndex(s, x))];
        if (slot == -1) {
            slot = c;
            return true;
        }
        return slot == c;
    };
    auto assign = [&](Sector x, int c) {
        if (!put(x, c)) return false;
        while (x.level > X.lo) {
            const int k = x.level;
            if (!put(sectorTarget(s, x), X.tgtOf(k, c))) return false;
            x = sectorSource(s, x);
            c = X.srcOf(k, c);
            if (!put(x, c)) return false;
        }
        return true;
    };
    std::vector<int> tuple(leaves.size(), -1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == leaves.size()) {
            out.push_back(tuple);
            return;
        }
        if (leaves[i].level < X.lo) {
            self(self, i + 1);
            return;
        }
        const auto saved = label;
        for (int c = 0; c < X.cellCount(leaves[i].level); ++c) {
            if (assign(leaves[i], c)) {
                tuple[i] = c;
                self(self, i + 1);
                tuple[i] = -1;
            }
            label = saved;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace thetaz::oracle
