#pragma once

/// @file
/// @brief Towers of pointed window categories and their stable cells.
///
/// A tower presents a categorical spectrum through finitely many pointed
/// windows with floor 0, each literally the loop category of the next. The
/// stable k-cells are read along the chain entry_i at dimension k+i; the
/// connecting maps are the loop projections, and the read is trusted once the
/// remaining maps are bijections.

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "window_cat.hpp"

namespace thetaz {

struct Tower {
    std::vector<WindowZCat> entries;  ///< entries[i] == loops(entries[i+1])

    bool operator==(const Tower&) const = default;
};

/// First violation per family: TowerShape (floors, basepoints, emptiness),
/// TowerEntry (an entry fails its own axioms), TowerIdent (an entry is not
/// the loop category of the next one).
inline std::vector<AxiomViolation> checkTower(const Tower& T) {
    std::vector<AxiomViolation> out;
    if (T.entries.empty()) {
        out.push_back({"TowerShape", "a tower needs at least one entry"});
        return out;
    }
    for (std::size_t i = 0; i < T.entries.size(); ++i) {
        const WindowZCat& E = T.entries[i];
        if (E.lo != 0 || E.basepoint < 0) {
            out.push_back({"TowerShape", "entry " + std::to_string(i) +
                                             " must be pointed with floor 0"});
            break;
        }
    }
    for (std::size_t i = 0; i < T.entries.size(); ++i) {
        const auto bad = checkAxioms(T.entries[i]);
        if (!bad.empty()) {
            out.push_back({"TowerEntry", "entry " + std::to_string(i) + ": " + bad[0].family +
                                             ", " + bad[0].detail});
            break;
        }
    }
    for (std::size_t i = 0; i + 1 < T.entries.size(); ++i) {
        bool comparable = T.entries[i + 1].lo == 0 && T.entries[i + 1].basepoint >= 0;
        if (comparable && T.entries[i] != loops(T.entries[i + 1])) {
            out.push_back({"TowerIdent", "entry " + std::to_string(i) +
                                             " is not the loop category of entry " +
                                             std::to_string(i + 1)});
            break;
        }
    }
    return out;
}

namespace detail {

/// Cut the dimensions below 0 from a window that reaches down to 0 or lower;
/// the basepoint moves up along its units.
inline WindowZCat truncateToZero(const WindowZCat& Y) {
    WindowZCat Z;
    Z.lo = 0;
    Z.hi = Y.hi;
    for (int k = 0; k <= Y.hi; ++k) Z.cells.push_back(Y.cells[static_cast<std::size_t>(k - Y.lo)]);
    for (int k = 1; k <= Y.hi; ++k) {
        Z.src.push_back(Y.src[static_cast<std::size_t>(k - Y.lo - 1)]);
        Z.tgt.push_back(Y.tgt[static_cast<std::size_t>(k - Y.lo - 1)]);
    }
    for (int k = 0; k < Y.hi; ++k) Z.unit.push_back(Y.unit[static_cast<std::size_t>(k - Y.lo)]);
    for (const auto& [key, table] : Y.comp)
        if (key.first >= 0) Z.comp[key] = table;
    Z.basepoint = Y.unitIter(Y.lo, Y.basepoint, 0);
    return Z;
}

}  // namespace detail

/// L-entry tower presenting the spectrum generated by X: the top entry is X
/// shifted up by L-1 and truncated at dimension 0, the others its iterated
/// loop categories. Requires the shifted floor to sit at or below 0, so X
/// must present its own triviality down to dimension 1-L.
inline Tower towerOf(const WindowZCat& X, int L) {
    if (L < 1) throw DomainError("TowerRange", "a tower needs at least one entry");
    if (X.basepoint < 0) throw DomainError("NotPointed", "towers need a basepoint");
    if (X.lo + L - 1 > 0)
        throw DomainError("TowerFloor", "window floor " + std::to_string(X.lo) +
                                            " is too high for " + std::to_string(L) +
                                            " entries; the floor may be at most " +
                                            std::to_string(1 - L));
    if (X.hi + L - 1 < 0)
        throw DomainError("TowerFloor", "window top " + std::to_string(X.hi) +
                                            " vanishes from a tower of " + std::to_string(L) +
                                            " entries");
    Tower T;
    T.entries.resize(static_cast<std::size_t>(L));
    T.entries[static_cast<std::size_t>(L - 1)] = detail::truncateToZero(shiftCat(X, L - 1));
    for (int i = L - 2; i >= 0; --i)
        T.entries[static_cast<std::size_t>(i)] =
            loops(T.entries[static_cast<std::size_t>(i + 1)]);
    return T;
}

/// Loop tower: a fresh loop category at the bottom, everything else moved up
/// one stage. Same number of entries; the top entry is forgotten.
inline Tower loopsTower(const Tower& T) {
    if (T.entries.empty()) throw DomainError("TowerRange", "a tower needs at least one entry");
    Tower Y;
    Y.entries.push_back(loops(T.entries[0]));
    for (std::size_t i = 0; i + 1 < T.entries.size(); ++i) Y.entries.push_back(T.entries[i]);
    return Y;
}

struct StableCells {
    int dim = 0;             ///< reading dimension k + L - 1 in the last entry
    bool formal = false;     ///< the reading dimension lies above the last entry's top
    int stabilization = 0;   ///< first stage from which every connecting map is a bijection
    std::vector<std::string> names;  ///< stable cell names, formal units spelled out

    bool operator==(const StableCells&) const = default;
};

/// Stable k-cells of the tower: the cells of entry_i at dimension k+i connect
/// along the loop projections, and the cell set is read off at the last entry
/// (through formal units when k + L - 1 overshoots its top). Throws
/// NotStabilized when the final connecting map is not a bijection, and
/// TowerIdent when an entry visited is not the loops of the next one.
inline StableCells stableCells(const Tower& T, int k) {
    const int L = static_cast<int>(T.entries.size());
    if (L == 0) throw DomainError("TowerRange", "a tower needs at least one entry");
    if (k + L - 1 < 0)
        throw DomainError("TowerRange", "stable cells at " + std::to_string(k) + " need at least " +
                                            std::to_string(1 - k) + " entries");
    const int i0 = std::max(0, -k);
    auto stageDim = [&](int i) {
        return std::min(k + i, T.entries[static_cast<std::size_t>(i)].hi);
    };
    auto stageSize = [&](int i) {
        return T.entries[static_cast<std::size_t>(i)].cellCount(stageDim(i));
    };

    int s = L - 1;
    for (int i = L - 2; i >= i0; --i) {
        const WindowZCat& E1 = T.entries[static_cast<std::size_t>(i + 1)];
        if (E1.lo != 0 || E1.basepoint < 0)
            throw DomainError("TowerIdent", "entry " + std::to_string(i + 1) +
                                                " must be pointed with floor 0");
        const LoopsResult lr = loopsWithMap(E1);
        if (T.entries[static_cast<std::size_t>(i)] != lr.cat)
            throw DomainError("TowerIdent", "entry " + std::to_string(i) +
                                                " is not the loop category of entry " +
                                                std::to_string(i + 1));
        const int size = stageSize(i);
        std::vector<int> image(static_cast<std::size_t>(size), -1);
        if (E1.hi == 0) {
            for (int x = 0; x < size; ++x) image[static_cast<std::size_t>(x)] = E1.basepoint;
        } else {
            const int reach = stageDim(i);
            for (int x = 0; x < size; ++x)
                image[static_cast<std::size_t>(x)] =
                    lr.parent[static_cast<std::size_t>(reach)][static_cast<std::size_t>(x)];
        }
        bool bijective = size == stageSize(i + 1);
        std::vector<bool> hit(static_cast<std::size_t>(stageSize(i + 1)), false);
        for (int x = 0; x < size && bijective; ++x) {
            const int y = image[static_cast<std::size_t>(x)];
            if (hit[static_cast<std::size_t>(y)]) bijective = false;
            hit[static_cast<std::size_t>(y)] = true;
        }
        if (!bijective) break;
        s = i;
    }
    if (s == L - 1 && L - 2 >= i0)
        throw DomainError("NotStabilized",
                          "the final connecting map at dimension " + std::to_string(k) +
                              " is not a bijection; the tower is too short to read");

    const WindowZCat& E = T.entries.back();
    StableCells out;
    out.dim = k + L - 1;
    out.formal = out.dim > E.hi;
    out.stabilization = s;
    const int readDim = std::min(out.dim, E.hi);
    for (int i = 0; i < E.cellCount(readDim); ++i) {
        std::string name = E.cellName(readDim, i);
        for (int t = readDim; t < out.dim; ++t) name = detail::formalUnitName(name);
        out.names.push_back(std::move(name));
    }
    return out;
}

inline int stabilizationIndex(const Tower& T, int k) { return stableCells(T, k).stabilization; }

/// Two readings of invertibility for the stable k-cells, both as index sets
/// into the stable cell list: the image of the unit map from one dimension
/// down, and the omega-equivalences of the last entry at the reading
/// dimension. They need not agree; the gap measures invertible cells that are
/// not degenerate.
struct InvertibleStableCells {
    std::vector<int> degenerate;
    std::vector<int> equivalent;

    bool operator==(const InvertibleStableCells&) const = default;
};

inline InvertibleStableCells invertibleStableCells(const Tower& T, int k) {
    const StableCells sc = stableCells(T, k);
    const WindowZCat& E = T.entries.back();
    InvertibleStableCells out;
    if (sc.formal) {
        for (std::size_t i = 0; i < sc.names.size(); ++i) {
            out.degenerate.push_back(static_cast<int>(i));
            out.equivalent.push_back(static_cast<int>(i));
        }
        return out;
    }
    for (int i = 0; i < E.cellCount(sc.dim); ++i)
        if (isUnitCell(E, sc.dim, i)) out.degenerate.push_back(i);
    if (sc.dim > E.lo)
        out.equivalent = omegaEquivalences(E)[static_cast<std::size_t>(sc.dim - E.lo - 1)];
    return out;
}

/// The stable k-cells of the L-entry tower over X are X's own k-cells, name
/// for name. False when the tower fails to stabilize at k.
inline bool checkCellsTheorem(const WindowZCat& X, int k, int L) {
    if (k < X.lo || k > X.hi)
        throw DomainError("TowerRange", "the theorem reads inside the window only");
    if (k + L - 1 < 0)
        throw DomainError("TowerRange", "stable cells at " + std::to_string(k) + " need at least " +
                                            std::to_string(1 - k) + " entries");
    const Tower T = towerOf(X, L);
    StableCells sc;
    try {
        sc = stableCells(T, k);
    } catch (const DomainError& e) {
        if (e.code() == "NotStabilized") return false;
        throw;
    }
    return sc.names == X.cells[static_cast<std::size_t>(k - X.lo)];
}

}  // namespace thetaz
