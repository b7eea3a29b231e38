#pragma once

/// @file
/// @brief Sectors of stable trees, the stable globe category, and inert maps.
///
/// A sector of a stable tree at level k is a gap between consecutive children
/// of a node at level k, counting the two outer gaps. Sectors are the k-cells
/// of the pasting diagram the tree presents; the source and target of a
/// sector sit one level down and depend only on the node, so globularity
/// holds by construction. Below the offset every level holds the single tail
/// node with one child and therefore exactly two sectors, the poles.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "stable_tree.hpp"
#include "tree.hpp"

namespace thetaz {

struct Sector {
    int level = 0;
    int node = 0;  ///< planar index at `level`; -1 for the tail node below the offset
    int pos = 0;   ///< gap index, 0..childCount(node)

    auto operator<=>(const Sector&) const = default;
};

/// Two per tail level, one more than the child count per node otherwise.
inline int sectorCount(const StableTree& s, int level) {
    if (level < s.offset) return 2;
    const int h = level - s.offset;
    if (h > s.body.height()) return 0;
    return s.body.levelSize(h) + s.body.levelSize(h + 1);
}

/// Sectors at a level are indexed in planar order: nodes left to right, gaps
/// left to right within a node.
inline Sector sectorAt(const StableTree& s, int level, int idx) {
    if (level < s.offset) {
        if (idx < 0 || idx > 1) throw DomainError("SectorRange", "tail levels carry two sectors");
        return {level, -1, idx};
    }
    const int h = level - s.offset;
    int rest = idx;
    for (int node = 0; node < s.body.levelSize(h); ++node) {
        const int width = childCount(s.body, h, node) + 1;
        if (rest < width) return {level, node, rest};
        rest -= width;
    }
    throw DomainError("SectorRange", "sector index out of range");
}

inline int sectorIndex(const StableTree& s, const Sector& sec) {
    if (sec.node == -1) return sec.pos;
    const int h = sec.level - s.offset;
    int idx = sec.pos;
    for (int node = 0; node < sec.node; ++node) idx += childCount(s.body, h, node) + 1;
    return idx;
}

/// Source of a sector: one level down, the gap just left of the branch the
/// node hangs under. Independent of the gap position, so iterated boundaries
/// of the two ends of a sector agree.
inline Sector sectorSource(const StableTree& s, const Sector& sec) {
    if (sec.node == -1 || sec.level == s.offset) return {sec.level - 1, -1, 0};
    const int h = sec.level - s.offset;
    const int u = parentIndex(s.body, h, sec.node);
    const int j = sec.node - childRange(s.body, h - 1, u).first;
    return {sec.level - 1, u, j};
}

inline Sector sectorTarget(const StableTree& s, const Sector& sec) {
    Sector t = sectorSource(s, sec);
    ++t.pos;
    return t;
}

/// `level:(path,pos)`; the path is `t` for the tail node, or `r` followed by
/// one `.j` segment per branch taken from the body root.
inline std::string printSector(const StableTree& s, const Sector& sec) {
    std::string path;
    if (sec.node == -1) {
        path = "t";
    } else {
        std::vector<int> steps;
        int h = sec.level - s.offset, idx = sec.node;
        while (h > 0) {
            const int u = parentIndex(s.body, h, idx);
            steps.push_back(idx - childRange(s.body, h - 1, u).first);
            idx = u;
            --h;
        }
        path = "r";
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) path += "." + std::to_string(*it);
    }
    return std::to_string(sec.level) + ":(" + path + "," + std::to_string(sec.pos) + ")";
}

/// The single gap of each childless node, in planar order.
inline std::vector<Sector> leafSectors(const StableTree& s) {
    std::vector<Sector> out;
    for (auto [level, idx] : leaves(s.body)) out.push_back({s.offset + level, idx, 0});
    return out;
}

/// For each pair of consecutive leaves, the shared sector at their deepest
/// common ancestor: the iterated target of the left leaf sector, equal to the
/// iterated source of the right one.
inline std::vector<Sector> meetSectors(const StableTree& s) {
    std::vector<Sector> out;
    const Spine sp = spine(s);
    const auto ls = leafSectors(s);
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
        Sector cur = ls[i];
        while (cur.level > sp.meetDims[i]) cur = sectorTarget(s, cur);
        out.push_back(cur);
    }
    return out;
}

enum class GlobeSign { minus, plus, identity };

/// Morphism of stable globes dom -> cod. For dom < cod the class is the sign
/// of the lowest coface generator; dom == cod carries only the identity.
struct GlobeMorphism {
    int dom = 0;
    int cod = 0;
    GlobeSign sign = GlobeSign::identity;

    bool operator==(const GlobeMorphism&) const = default;
};

inline GlobeMorphism globeIdentity(int n) { return {n, n, GlobeSign::identity}; }

inline std::vector<GlobeMorphism> globeHom(int m, int n) {
    if (m > n) return {};
    if (m == n) return {globeIdentity(m)};
    return {{m, n, GlobeSign::minus}, {m, n, GlobeSign::plus}};
}

/// Generator words identify under flipping any sign above the lowest one, so
/// a composite keeps the sign of its lower leg unless that leg is an identity.
inline GlobeMorphism composeGlobe(const GlobeMorphism& g, const GlobeMorphism& f) {
    if (f.cod != g.dom) throw DomainError("NonComposable", "globe morphisms do not match");
    if (f.sign != GlobeSign::identity) return {f.dom, g.cod, f.sign};
    return {f.dom, g.cod, g.sign};
}

/// Levelwise sector map commuting with source and target. Both ends are kept
/// in normal form. Below `lo`, the smaller of the two offsets, both trees are
/// tail levels and the map is the identity on poles (forced), so only levels
/// lo..topDim(src) are tabulated.
struct InertMap {
    StableTree src, dst;
    int lo = 0;
    std::vector<std::vector<int>> table;  ///< table[k-lo][i]: image of sector i at level k

    bool operator==(const InertMap&) const = default;
};

inline Sector sectorImage(const InertMap& f, const Sector& sec) {
    if (sec.level < f.lo) return sec;
    const std::size_t row = static_cast<std::size_t>(sec.level - f.lo);
    if (row >= f.table.size()) throw DomainError("SectorRange", "sector above the tabulated levels");
    return sectorAt(f.dst, sec.level, f.table[row][static_cast<std::size_t>(sectorIndex(f.src, sec))]);
}

inline InertMap identityInert(const StableTree& sIn) {
    const StableTree s = normalize(sIn);
    InertMap f{s, s, s.offset, {}};
    for (int k = s.offset; k <= topDim(s); ++k) {
        std::vector<int> row(static_cast<std::size_t>(sectorCount(s, k)));
        std::iota(row.begin(), row.end(), 0);
        f.table.push_back(std::move(row));
    }
    return f;
}

/// Structural validity plus boundary commutation at every tabulated level
/// above `lo`. The level-lo row needs no boundary check: every sector there
/// has the tail poles as boundary on both sides.
inline bool checkInert(const InertMap& f) {
    if (!isNormal(f.src) || !isNormal(f.dst)) return false;
    if (f.lo != std::min(f.src.offset, f.dst.offset)) return false;
    const int top = topDim(f.src);
    if (static_cast<int>(f.table.size()) != top - f.lo + 1) return false;
    for (int k = f.lo; k <= top; ++k) {
        const auto& row = f.table[static_cast<std::size_t>(k - f.lo)];
        if (static_cast<int>(row.size()) != sectorCount(f.src, k)) return false;
        for (int v : row)
            if (v < 0 || v >= sectorCount(f.dst, k)) return false;
    }
    for (int k = f.lo + 1; k <= top; ++k) {
        for (int i = 0; i < sectorCount(f.src, k); ++i) {
            const Sector x = sectorAt(f.src, k, i);
            const Sector y = sectorImage(f, x);
            if (sectorImage(f, sectorSource(f.src, x)) != sectorSource(f.dst, y)) return false;
            if (sectorImage(f, sectorTarget(f.src, x)) != sectorTarget(f.dst, y)) return false;
        }
    }
    return true;
}

inline InertMap composeInert(const InertMap& g, const InertMap& f) {
    if (!(f.dst == g.src)) throw DomainError("NonComposable", "inert maps do not match");
    InertMap h{f.src, g.dst, std::min(f.src.offset, g.dst.offset), {}};
    for (int k = h.lo; k <= topDim(f.src); ++k) {
        std::vector<int> row;
        row.reserve(static_cast<std::size_t>(sectorCount(f.src, k)));
        for (int i = 0; i < sectorCount(f.src, k); ++i)
            row.push_back(sectorIndex(g.dst, sectorImage(g, sectorImage(f, sectorAt(f.src, k, i)))));
        h.table.push_back(std::move(row));
    }
    return h;
}

inline InertMap shiftInert(const InertMap& f, int k) {
    return {shiftStable(f.src, k), shiftStable(f.dst, k), f.lo + k, f.table};
}

inline InertMap suspendInert(const InertMap& f) { return shiftInert(f, 1); }

/// The unique inert map from the level-k stable globe hitting a chosen
/// sector; tail sectors below are sent down the source and target chains.
inline InertMap inertFromTopSector(const StableTree& dstIn, const Sector& sec) {
    const StableTree dst = normalize(dstIn);
    InertMap f{stableGlobe(sec.level), dst, std::min(sec.level, dst.offset), {}};
    f.table.assign(static_cast<std::size_t>(sec.level - f.lo) + 1, {});
    f.table[static_cast<std::size_t>(sec.level - f.lo)] = {sectorIndex(dst, sec)};
    Sector minus = sec;
    for (int k = sec.level - 1; k >= f.lo; --k) {
        const Sector nextMinus = sectorSource(dst, minus);
        const Sector nextPlus = sectorTarget(dst, minus);
        f.table[static_cast<std::size_t>(k - f.lo)] = {sectorIndex(dst, nextMinus),
                                                       sectorIndex(dst, nextPlus)};
        minus = nextMinus;
    }
    return f;
}

/// Source (minus) or target (plus) inclusion of stable globes m -> n.
inline InertMap globeInclusion(int m, int n, GlobeSign sign) {
    if (m > n) throw DomainError("NonComposable", "no inert map lowers the top dimension");
    if (m == n) {
        if (sign != GlobeSign::identity)
            throw DomainError("NonComposable", "signed inclusion needs m < n");
        return identityInert(stableGlobe(n));
    }
    if (sign == GlobeSign::identity)
        throw DomainError("NonComposable", "inclusion m < n needs a sign");
    return inertFromTopSector(stableGlobe(n), {m, -1, sign == GlobeSign::plus ? 1 : 0});
}

inline InertMap inertOfGlobeMorphism(const GlobeMorphism& g) {
    return globeInclusion(g.dom, g.cod, g.sign);
}

/// The cone exhibiting a stable tree as glued from its spine: one globe
/// inclusion per leaf and one per meet, with the triangles
/// meet_i = leaf_i . (plus inclusion) = leaf_{i+1} . (minus inclusion).
struct SpineCone {
    Spine sp;
    std::vector<InertMap> leafMaps;
    std::vector<InertMap> meetMaps;
};

inline SpineCone spineCone(const StableTree& sIn) {
    const StableTree s = normalize(sIn);
    SpineCone cone;
    cone.sp = spine(s);
    for (const Sector& ls : leafSectors(s)) cone.leafMaps.push_back(inertFromTopSector(s, ls));
    for (const Sector& ms : meetSectors(s)) cone.meetMaps.push_back(inertFromTopSector(s, ms));
    return cone;
}

namespace detail {

/// Record f(x) = y, then force both boundary chains of x down to `lo`.
/// Returns false on any clash with images already recorded.
inline bool assignChain(const StableTree& src, const StableTree& dst, int lo,
                        std::vector<std::vector<int>>& img, Sector x, Sector y) {
    auto put = [&](const Sector& a, const Sector& b) {
        int& slot = img[static_cast<std::size_t>(a.level - lo)][static_cast<std::size_t>(sectorIndex(src, a))];
        const int want = sectorIndex(dst, b);
        if (slot == want) return true;
        if (slot != -1) return false;
        slot = want;
        return true;
    };
    if (!put(x, y)) return false;
    while (x.level > lo) {
        const Sector xs = sectorSource(src, x), xt = sectorTarget(src, x);
        const Sector ys = sectorSource(dst, y), yt = sectorTarget(dst, y);
        if (!put(xs, ys) || !put(xt, yt)) return false;
        x = xs;
        y = ys;
    }
    return true;
}

}  // namespace detail

/// All inert maps src -> dst, in depth-first order of leaf images. A map is
/// determined by where the leaf sectors go — every other sector lies on a
/// boundary chain of some leaf — so the search branches over leaves only and
/// forces the chains downward as it goes.
inline std::vector<InertMap> enumerateInerts(const StableTree& srcIn, const StableTree& dstIn) {
    const StableTree src = normalize(srcIn), dst = normalize(dstIn);
    std::vector<InertMap> out;
    if (topDim(src) > topDim(dst)) return out;
    const int lo = std::min(src.offset, dst.offset);
    const auto ls = leafSectors(src);
    std::vector<std::vector<int>> img;
    for (int k = lo; k <= topDim(src); ++k)
        img.push_back(std::vector<int>(static_cast<std::size_t>(sectorCount(src, k)), -1));
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == ls.size()) {
            out.push_back({src, dst, lo, img});
            return;
        }
        const Sector x = ls[i];
        for (int c = 0; c < sectorCount(dst, x.level); ++c) {
            auto saved = img;
            if (detail::assignChain(src, dst, lo, img, x, sectorAt(dst, x.level, c)))
                self(self, i + 1);
            img = std::move(saved);
        }
    };
    rec(rec, 0);
    return out;
}

inline long countInerts(const StableTree& src, const StableTree& dst) {
    return static_cast<long>(enumerateInerts(src, dst).size());
}

/// One map per line elsewhere: here, the images of the leaf sectors in
/// planar order, which determine the map.
inline std::string printInertMap(const InertMap& f) {
    std::string out;
    for (const Sector& ls : leafSectors(f.src)) {
        if (!out.empty()) out.push_back(' ');
        out += printSector(f.dst, sectorImage(f, ls));
    }
    return out;
}

}  // namespace thetaz
