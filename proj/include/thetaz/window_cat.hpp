#pragma once

/// @file
/// @brief Strict categories with cells in every integer dimension, presented
/// on a finite window of dimensions.
///
/// A WindowZCat lists its cells for dimensions lo..hi together with source,
/// target, unit and composition tables. Below lo the category is declared
/// trivial (a single cell per dimension); above hi every cell is the formal
/// identity of a top cell. A composite x comp_j y means "x after y": it is
/// defined exactly when the dimension-j source of x equals the dimension-j
/// target of y.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "stable_tree.hpp"

namespace thetaz {

struct WindowZCat {
    int lo = 0;
    int hi = 0;
    std::vector<std::vector<std::string>> cells;  ///< cells[k-lo]: names of the k-cells
    std::vector<std::vector<int>> src;            ///< src[k-lo-1][i] for k in (lo, hi]
    std::vector<std::vector<int>> tgt;
    std::vector<std::vector<int>> unit;           ///< unit[k-lo][i] for k in [lo, hi)
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> comp;  ///< key (j, k), j < k
    int basepoint = -1;                           ///< index into cells[0], or -1 if unpointed

    bool operator==(const WindowZCat&) const = default;

    int cellCount(int k) const {
        if (k < lo || k > hi) return 0;
        return static_cast<int>(cells[static_cast<std::size_t>(k - lo)].size());
    }

    const std::string& cellName(int k, int i) const {
        return cells[static_cast<std::size_t>(k - lo)][static_cast<std::size_t>(i)];
    }

    int srcOf(int k, int i) const {
        return src[static_cast<std::size_t>(k - lo - 1)][static_cast<std::size_t>(i)];
    }

    int tgtOf(int k, int i) const {
        return tgt[static_cast<std::size_t>(k - lo - 1)][static_cast<std::size_t>(i)];
    }

    int unitOf(int k, int i) const {
        return unit[static_cast<std::size_t>(k - lo)][static_cast<std::size_t>(i)];
    }

    /// Defined composite index or -1.
    int compOf(int j, int k, int x, int y) const {
        const auto it = comp.find({j, k});
        if (it == comp.end()) return -1;
        return it->second[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }

    /// Iterated source (or target) of a k-cell down to dimension `downTo`.
    int boundary(bool source, int k, int i, int downTo) const {
        while (k > downTo) {
            i = source ? srcOf(k, i) : tgtOf(k, i);
            --k;
        }
        return i;
    }

    /// Iterated unit of a k-cell up to dimension `upTo` (upTo <= hi).
    int unitIter(int k, int i, int upTo) const {
        while (k < upTo) {
            i = unitOf(k, i);
            ++k;
        }
        return i;
    }
};

inline int findCell(const WindowZCat& X, int k, const std::string& name) {
    if (k < X.lo || k > X.hi) return -1;
    const auto& row = X.cells[static_cast<std::size_t>(k - X.lo)];
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] == name) return static_cast<int>(i);
    return -1;
}

/// True when the k-cell is the unit of some (k-1)-cell (k > lo).
inline bool isUnitCell(const WindowZCat& X, int k, int i) {
    if (k <= X.lo) return false;
    for (int below = 0; below < X.cellCount(k - 1); ++below)
        if (X.unitOf(k - 1, below) == i) return true;
    return false;
}

struct AxiomViolation {
    std::string family;
    std::string detail;

    bool operator==(const AxiomViolation&) const = default;
};

namespace detail {

inline bool structureOk(const WindowZCat& X, std::string& out) {
    auto fail = [&](const std::string& msg) {
        out = msg;
        return false;
    };
    const int dims = X.hi - X.lo + 1;
    if (X.hi < X.lo) return fail("window is empty");
    if (static_cast<int>(X.cells.size()) != dims) return fail("cell lists do not cover the window");
    if (static_cast<int>(X.src.size()) != dims - 1 || static_cast<int>(X.tgt.size()) != dims - 1)
        return fail("boundary tables do not cover dimensions above the floor");
    if (static_cast<int>(X.unit.size()) != dims - 1)
        return fail("unit tables do not cover dimensions below the top");
    for (int k = X.lo; k <= X.hi; ++k) {
        const auto& names = X.cells[static_cast<std::size_t>(k - X.lo)];
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty()) return fail("empty cell name at dimension " + std::to_string(k));
            for (char c : names[i])
                if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                    return fail("whitespace in cell name " + names[i]);
            if (names[i] == "->") return fail("cell name '->' is reserved");
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j])
                    return fail("duplicate cell " + names[i] + " at dimension " + std::to_string(k));
        }
    }
    for (int k = X.lo + 1; k <= X.hi; ++k) {
        const auto& s = X.src[static_cast<std::size_t>(k - X.lo - 1)];
        const auto& t = X.tgt[static_cast<std::size_t>(k - X.lo - 1)];
        if (static_cast<int>(s.size()) != X.cellCount(k) || static_cast<int>(t.size()) != X.cellCount(k))
            return fail("boundary table size mismatch at dimension " + std::to_string(k));
        for (int v : s)
            if (v < 0 || v >= X.cellCount(k - 1))
                return fail("source index out of range at dimension " + std::to_string(k));
        for (int v : t)
            if (v < 0 || v >= X.cellCount(k - 1))
                return fail("target index out of range at dimension " + std::to_string(k));
    }
    for (int k = X.lo; k < X.hi; ++k) {
        const auto& u = X.unit[static_cast<std::size_t>(k - X.lo)];
        if (static_cast<int>(u.size()) != X.cellCount(k))
            return fail("unit table size mismatch at dimension " + std::to_string(k));
        for (int v : u)
            if (v < 0 || v >= X.cellCount(k + 1))
                return fail("unit index out of range at dimension " + std::to_string(k));
    }
    std::size_t wanted = 0;
    for (int j = X.lo; j <= X.hi; ++j)
        for (int k = j + 1; k <= X.hi; ++k) {
            ++wanted;
            const auto it = X.comp.find({j, k});
            if (it == X.comp.end())
                return fail("missing composition table (" + std::to_string(j) + "," +
                            std::to_string(k) + ")");
            const auto& table = it->second;
            if (static_cast<int>(table.size()) != X.cellCount(k))
                return fail("composition table size mismatch at (" + std::to_string(j) + "," +
                            std::to_string(k) + ")");
            for (const auto& row : table) {
                if (static_cast<int>(row.size()) != X.cellCount(k))
                    return fail("composition row size mismatch at (" + std::to_string(j) + "," +
                                std::to_string(k) + ")");
                for (int v : row)
                    if (v < -1 || v >= X.cellCount(k))
                        return fail("composite index out of range at (" + std::to_string(j) + "," +
                                    std::to_string(k) + ")");
            }
        }
    if (X.comp.size() != wanted) return fail("unexpected composition table key");
    if (X.basepoint != -1 && (X.basepoint < 0 || X.basepoint >= X.cellCount(X.lo)))
        return fail("basepoint out of range");
    return true;
}

}  // namespace detail

/// Checks every axiom family and reports the first violating instance per
/// family. Structural damage short-circuits: nothing else is checked then.
inline std::vector<AxiomViolation> checkAxioms(const WindowZCat& X) {
    std::vector<AxiomViolation> out;
    {
        std::string msg;
        if (!detail::structureOk(X, msg)) {
            out.push_back({"Structure", msg});
            return out;
        }
    }
    auto name = [&](int k, int i) { return X.cellName(k, i) + "@" + std::to_string(k); };

    for (int k = X.lo + 2; k <= X.hi; ++k) {
        for (int i = 0; i < X.cellCount(k); ++i) {
            const int s = X.srcOf(k, i), t = X.tgtOf(k, i);
            if (X.srcOf(k - 1, s) != X.srcOf(k - 1, t) || X.tgtOf(k - 1, s) != X.tgtOf(k - 1, t)) {
                out.push_back({"Globularity", "boundaries of " + name(k, i) + " are not parallel"});
                goto globularityDone;
            }
        }
    }
globularityDone:

    for (int k = X.lo; k < X.hi; ++k) {
        for (int i = 0; i < X.cellCount(k); ++i) {
            const int u = X.unitOf(k, i);
            if (X.srcOf(k + 1, u) != i || X.tgtOf(k + 1, u) != i) {
                out.push_back({"UnitBoundaries", "unit of " + name(k, i) + " is not an endocell"});
                goto unitBoundariesDone;
            }
        }
    }
unitBoundariesDone:

    for (int j = X.lo; j <= X.hi; ++j)
        for (int k = j + 1; k <= X.hi; ++k)
            for (int x = 0; x < X.cellCount(k); ++x)
                for (int y = 0; y < X.cellCount(k); ++y) {
                    const bool matched = X.boundary(true, k, x, j) == X.boundary(false, k, y, j);
                    const bool defined = X.compOf(j, k, x, y) != -1;
                    if (matched != defined) {
                        out.push_back({"CompDefinedness",
                                       name(k, x) + " over " + std::to_string(j) + " " + name(k, y) +
                                           (matched ? " should be defined" : " should be undefined")});
                        goto compDefinednessDone;
                    }
                }
compDefinednessDone:

    for (int j = X.lo; j <= X.hi; ++j)
        for (int k = j + 1; k <= X.hi; ++k)
            for (int x = 0; x < X.cellCount(k); ++x)
                for (int y = 0; y < X.cellCount(k); ++y) {
                    const int c = X.compOf(j, k, x, y);
                    if (c == -1) continue;
                    bool bad = false;
                    if (k - j == 1) {
                        bad = X.srcOf(k, c) != X.srcOf(k, y) || X.tgtOf(k, c) != X.tgtOf(k, x);
                    } else {
                        const int sc = X.compOf(j, k - 1, X.srcOf(k, x), X.srcOf(k, y));
                        const int tc = X.compOf(j, k - 1, X.tgtOf(k, x), X.tgtOf(k, y));
                        bad = sc == -1 || tc == -1 || X.srcOf(k, c) != sc || X.tgtOf(k, c) != tc;
                    }
                    if (bad) {
                        out.push_back({"CompBoundaries", "composite " + name(k, c) + " of " +
                                                             name(k, x) + " and " + name(k, y) +
                                                             " has wrong boundaries"});
                        goto compBoundariesDone;
                    }
                }
compBoundariesDone:

    for (int j = X.lo; j <= X.hi; ++j)
        for (int k = j + 1; k <= X.hi; ++k)
            for (int x = 0; x < X.cellCount(k); ++x) {
                const int su = X.unitIter(j, X.boundary(true, k, x, j), k);
                const int tu = X.unitIter(j, X.boundary(false, k, x, j), k);
                if (X.compOf(j, k, x, su) != x || X.compOf(j, k, tu, x) != x) {
                    out.push_back({"UnitLaws", name(k, x) + " is not fixed by units over " +
                                                   std::to_string(j)});
                    goto unitLawsDone;
                }
            }
unitLawsDone:

    for (int j = X.lo; j < X.hi; ++j)
        for (int k = j + 1; k < X.hi; ++k)
            for (int x = 0; x < X.cellCount(k); ++x)
                for (int y = 0; y < X.cellCount(k); ++y) {
                    const int c = X.compOf(j, k, x, y);
                    if (c == -1) continue;
                    if (X.compOf(j, k + 1, X.unitOf(k, x), X.unitOf(k, y)) != X.unitOf(k, c)) {
                        out.push_back({"UnitFunctoriality",
                                       "unit of " + name(k, c) + " is not the composite of units"});
                        goto unitFunctorialityDone;
                    }
                }
unitFunctorialityDone:

    for (int j = X.lo; j <= X.hi; ++j)
        for (int k = j + 1; k <= X.hi; ++k)
            for (int x = 0; x < X.cellCount(k); ++x)
                for (int y = 0; y < X.cellCount(k); ++y) {
                    const int xy = X.compOf(j, k, x, y);
                    if (xy == -1) continue;
                    for (int z = 0; z < X.cellCount(k); ++z) {
                        const int yz = X.compOf(j, k, y, z);
                        if (yz == -1) continue;
                        if (X.compOf(j, k, xy, z) != X.compOf(j, k, x, yz)) {
                            out.push_back({"Associativity",
                                           "triple " + name(k, x) + ", " + name(k, y) + ", " +
                                               name(k, z) + " over " + std::to_string(j)});
                            goto associativityDone;
                        }
                    }
                }
associativityDone:

    for (int i = X.lo; i <= X.hi; ++i)
        for (int j = i + 1; j <= X.hi; ++j)
            for (int k = j + 1; k <= X.hi; ++k)
                for (int w = 0; w < X.cellCount(k); ++w)
                    for (int x = 0; x < X.cellCount(k); ++x) {
                        const int a = X.compOf(j, k, w, x);
                        if (a == -1) continue;
                        for (int y = 0; y < X.cellCount(k); ++y)
                            for (int z = 0; z < X.cellCount(k); ++z) {
                                const int b = X.compOf(j, k, y, z);
                                if (b == -1) continue;
                                const int lhs = X.compOf(i, k, a, b);
                                if (lhs == -1) continue;
                                const int wy = X.compOf(i, k, w, y);
                                const int xz = X.compOf(i, k, x, z);
                                const int rhs =
                                    (wy == -1 || xz == -1) ? -1 : X.compOf(j, k, wy, xz);
                                if (lhs != rhs) {
                                    out.push_back(
                                        {"Interchange", "cells " + name(k, w) + ", " + name(k, x) +
                                                            ", " + name(k, y) + ", " + name(k, z) +
                                                            " over (" + std::to_string(i) + "," +
                                                            std::to_string(j) + ")"});
                                    goto interchangeDone;
                                }
                            }
                    }
interchangeDone:

    return out;
}

inline bool isValidCategory(const WindowZCat& X) { return checkAxioms(X).empty(); }

/// Value of the category at a stable tree: tuples of cells, one per leaf in
/// planar order, agreeing on iterated boundaries at the meets. Leaves below
/// the window contribute the sentinel -1 (the unique trivial cell); trees
/// reaching above the window are rejected with WindowTooSmall.
inline std::vector<std::vector<int>> evaluate(const WindowZCat& X, const StableTree& sIn) {
    const StableTree s = normalize(sIn);
    if (topDim(s) > X.hi)
        throw DomainError("WindowTooSmall", "tree tops out at " + std::to_string(topDim(s)) +
                                                " but the window stops at " + std::to_string(X.hi));
    const Spine sp = spine(s);
    const std::size_t p = sp.leafDims.size();
    std::vector<std::vector<int>> out;
    std::vector<int> tuple(p, -1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == p) {
            out.push_back(tuple);
            return;
        }
        const int n = sp.leafDims[i];
        if (n < X.lo) {
            tuple[i] = -1;
            self(self, i + 1);
            return;
        }
        for (int c = 0; c < X.cellCount(n); ++c) {
            if (i > 0) {
                const int m = sp.meetDims[i - 1];
                if (m >= X.lo &&
                    X.boundary(false, sp.leafDims[i - 1], tuple[i - 1], m) !=
                        X.boundary(true, n, c, m))
                    continue;
            }
            tuple[i] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// Strictly invertible cells per dimension lo+1..hi: cells with a two-sided
/// inverse up to equality of composites with units.
inline std::vector<std::vector<int>> strictIsoCells(const WindowZCat& X) {
    std::vector<std::vector<int>> out;
    for (int k = X.lo + 1; k <= X.hi; ++k) {
        std::vector<int> isos;
        for (int f = 0; f < X.cellCount(k); ++f) {
            const int a = X.srcOf(k, f), b = X.tgtOf(k, f);
            bool left = false, right = false;
            for (int g = 0; g < X.cellCount(k); ++g) {
                if (X.compOf(k - 1, k, g, f) == X.unitOf(k - 1, a)) left = true;
                if (X.compOf(k - 1, k, f, g) == X.unitOf(k - 1, b)) right = true;
            }
            if (left && right) isos.push_back(f);
        }
        out.push_back(std::move(isos));
    }
    return out;
}

struct UnivalenceReport {
    bool univalent = true;
    int dim = 0;          ///< dimension of the witness when not univalent
    std::string cell;     ///< name of a strictly invertible non-unit cell
};

/// Univalence at the level of underlying sets: every strictly invertible cell
/// must already be a unit.
inline UnivalenceReport checkStableUnivalence(const WindowZCat& X) {
    const auto isos = strictIsoCells(X);
    for (int k = X.lo + 1; k <= X.hi; ++k)
        for (int f : isos[static_cast<std::size_t>(k - X.lo - 1)])
            if (!isUnitCell(X, k, f)) return {false, k, X.cellName(k, f)};
    return {};
}

/// Equivalence cells per dimension lo+1..hi, from the top down: at hi a cell
/// is an equivalence iff strictly invertible (everything above the window is
/// an identity); below, iff it has an inverse up to equivalence witnesses one
/// dimension up.
inline std::vector<std::vector<int>> omegaEquivalences(const WindowZCat& X) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(X.hi - X.lo));
    if (X.hi == X.lo) return out;
    out.back() = strictIsoCells(X).back();
    for (int k = X.hi - 1; k > X.lo; --k) {
        const auto& above = out[static_cast<std::size_t>(k - X.lo)];
        auto aboveEq = [&](int c) {
            return std::find(above.begin(), above.end(), c) != above.end();
        };
        auto connected = [&](int from, int to) {
            for (int w = 0; w < X.cellCount(k + 1); ++w)
                if (X.srcOf(k + 1, w) == from && X.tgtOf(k + 1, w) == to && aboveEq(w)) return true;
            return false;
        };
        std::vector<int>& eq = out[static_cast<std::size_t>(k - X.lo - 1)];
        for (int f = 0; f < X.cellCount(k); ++f) {
            const int a = X.srcOf(k, f), b = X.tgtOf(k, f);
            for (int g = 0; g < X.cellCount(k); ++g) {
                if (X.srcOf(k, g) != b || X.tgtOf(k, g) != a) continue;
                const int gf = X.compOf(k - 1, k, g, f);
                const int fg = X.compOf(k - 1, k, f, g);
                if (gf == -1 || fg == -1) continue;
                if (connected(gf, X.unitOf(k - 1, a)) && connected(fg, X.unitOf(k - 1, b))) {
                    eq.push_back(f);
                    break;
                }
            }
        }
    }
    return out;
}

/// All cells above the floor are equivalences.
inline bool isGroupoidal(const WindowZCat& X) {
    const auto eq = omegaEquivalences(X);
    for (int k = X.lo + 1; k <= X.hi; ++k)
        if (static_cast<int>(eq[static_cast<std::size_t>(k - X.lo - 1)].size()) != X.cellCount(k))
            return false;
    return true;
}

/// Unit cells per dimension lo+1..hi, in the same shape as strictIsoCells.
inline std::vector<std::vector<int>> unitCells(const WindowZCat& X) {
    std::vector<std::vector<int>> out;
    for (int k = X.lo + 1; k <= X.hi; ++k) {
        std::vector<int> units;
        for (int f = 0; f < X.cellCount(k); ++f)
            if (isUnitCell(X, k, f)) units.push_back(f);
        out.push_back(std::move(units));
    }
    return out;
}

namespace detail {

inline std::string formalUnitName(const std::string& base) { return "1[" + base + "]"; }

}  // namespace detail

struct LoopsResult {
    WindowZCat cat;
    std::vector<std::vector<int>> parent;  ///< parent[k][i]: index of the source (k+1)-cell, -1 if formal
};

/// Loop category of a pointed window with floor 0: the k-cells are the
/// (k+1)-cells whose iterated 0-boundaries are the basepoint, shifted down
/// one dimension. A window of height zero loops to the one-point category on
/// the formal unit of the basepoint.
inline LoopsResult loopsWithMap(const WindowZCat& X) {
    if (X.lo != 0) throw DomainError("WindowFloor", "loops needs a window starting at 0");
    if (X.basepoint < 0) throw DomainError("NotPointed", "loops needs a basepoint");
    LoopsResult res;
    WindowZCat& Y = res.cat;
    Y.lo = 0;
    if (X.hi == 0) {
        Y.hi = 0;
        Y.cells = {{detail::formalUnitName(X.cellName(0, X.basepoint))}};
        Y.basepoint = 0;
        res.parent = {{-1}};
        return res;
    }
    Y.hi = X.hi - 1;
    // keep[k][i]: new index of the (k+1)-cell i when its 0-boundaries are the
    // basepoint, else -1.
    std::vector<std::vector<int>> keep;
    for (int k = 1; k <= X.hi; ++k) {
        std::vector<int> row(static_cast<std::size_t>(X.cellCount(k)), -1);
        std::vector<int> chosen;
        for (int i = 0; i < X.cellCount(k); ++i)
            if (X.boundary(true, k, i, 0) == X.basepoint &&
                X.boundary(false, k, i, 0) == X.basepoint) {
                row[static_cast<std::size_t>(i)] = static_cast<int>(chosen.size());
                chosen.push_back(i);
            }
        keep.push_back(std::move(row));
        res.parent.push_back(std::move(chosen));
    }
    for (int k = 1; k <= X.hi; ++k) {
        std::vector<std::string> names;
        for (int i : res.parent[static_cast<std::size_t>(k - 1)]) names.push_back(X.cellName(k, i));
        Y.cells.push_back(std::move(names));
    }
    for (int k = 2; k <= X.hi; ++k) {
        std::vector<int> s, t;
        for (int i : res.parent[static_cast<std::size_t>(k - 1)]) {
            s.push_back(keep[static_cast<std::size_t>(k - 2)][static_cast<std::size_t>(X.srcOf(k, i))]);
            t.push_back(keep[static_cast<std::size_t>(k - 2)][static_cast<std::size_t>(X.tgtOf(k, i))]);
        }
        Y.src.push_back(std::move(s));
        Y.tgt.push_back(std::move(t));
    }
    for (int k = 1; k < X.hi; ++k) {
        std::vector<int> u;
        for (int i : res.parent[static_cast<std::size_t>(k - 1)])
            u.push_back(keep[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(X.unitOf(k, i))]);
        Y.unit.push_back(std::move(u));
    }
    for (int j = 1; j <= X.hi; ++j)
        for (int k = j + 1; k <= X.hi; ++k) {
            const auto& old = X.comp.at({j, k});
            const auto& rows = res.parent[static_cast<std::size_t>(k - 1)];
            std::vector<std::vector<int>> table(rows.size(), std::vector<int>(rows.size(), -1));
            for (std::size_t x = 0; x < rows.size(); ++x)
                for (std::size_t y = 0; y < rows.size(); ++y) {
                    const int c = old[static_cast<std::size_t>(rows[x])][static_cast<std::size_t>(rows[y])];
                    if (c != -1)
                        table[x][y] = keep[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(c)];
                }
            Y.comp[{j - 1, k - 1}] = std::move(table);
        }
    Y.basepoint = keep[0][static_cast<std::size_t>(X.unitOf(0, X.basepoint))];
    return res;
}

inline WindowZCat loops(const WindowZCat& X) { return loopsWithMap(X).cat; }

/// Hom category between two floor cells of a window with floor 0: k-cells
/// are the (k+1)-cells from x to y, shifted down. Unpointed, possibly empty.
inline WindowZCat bipointedLoops(const WindowZCat& X, int x, int y) {
    if (X.lo != 0) throw DomainError("WindowFloor", "hom extraction needs a window starting at 0");
    if (x < 0 || x >= X.cellCount(0) || y < 0 || y >= X.cellCount(0))
        throw DomainError("SectorRange", "floor cell index out of range");
    if (X.hi == 0) {
        WindowZCat Y;
        Y.lo = Y.hi = 0;
        Y.cells.emplace_back();
        if (x == y) Y.cells[0].push_back(detail::formalUnitName(X.cellName(0, x)));
        return Y;
    }
    WindowZCat Y;
    Y.lo = 0;
    Y.hi = X.hi - 1;
    std::vector<std::vector<int>> keep;
    std::vector<std::vector<int>> chosenAll;
    for (int k = 1; k <= X.hi; ++k) {
        std::vector<int> row(static_cast<std::size_t>(X.cellCount(k)), -1);
        std::vector<int> chosen;
        for (int i = 0; i < X.cellCount(k); ++i)
            if (X.boundary(true, k, i, 0) == x && X.boundary(false, k, i, 0) == y) {
                row[static_cast<std::size_t>(i)] = static_cast<int>(chosen.size());
                chosen.push_back(i);
            }
        keep.push_back(std::move(row));
        chosenAll.push_back(std::move(chosen));
    }
    for (int k = 1; k <= X.hi; ++k) {
        std::vector<std::string> names;
        for (int i : chosenAll[static_cast<std::size_t>(k - 1)]) names.push_back(X.cellName(k, i));
        Y.cells.push_back(std::move(names));
    }
    for (int k = 2; k <= X.hi; ++k) {
        std::vector<int> s, t;
        for (int i : chosenAll[static_cast<std::size_t>(k - 1)]) {
            s.push_back(keep[static_cast<std::size_t>(k - 2)][static_cast<std::size_t>(X.srcOf(k, i))]);
            t.push_back(keep[static_cast<std::size_t>(k - 2)][static_cast<std::size_t>(X.tgtOf(k, i))]);
        }
        Y.src.push_back(std::move(s));
        Y.tgt.push_back(std::move(t));
    }
    for (int k = 1; k < X.hi; ++k) {
        std::vector<int> u;
        for (int i : chosenAll[static_cast<std::size_t>(k - 1)])
            u.push_back(keep[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(X.unitOf(k, i))]);
        Y.unit.push_back(std::move(u));
    }
    for (int j = 1; j <= X.hi; ++j)
        for (int k = j + 1; k <= X.hi; ++k) {
            const auto& old = X.comp.at({j, k});
            const auto& rows = chosenAll[static_cast<std::size_t>(k - 1)];
            std::vector<std::vector<int>> table(rows.size(), std::vector<int>(rows.size(), -1));
            for (std::size_t a = 0; a < rows.size(); ++a)
                for (std::size_t b = 0; b < rows.size(); ++b) {
                    const int c = old[static_cast<std::size_t>(rows[a])][static_cast<std::size_t>(rows[b])];
                    if (c != -1)
                        table[a][b] = keep[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(c)];
                }
            Y.comp[{j - 1, k - 1}] = std::move(table);
        }
    return Y;
}

/// Suspension of a window with floor 0: two fresh poles "-" and "+" at the
/// floor, every k-cell of X reappearing one dimension up from - to +, and the
/// iterated units of the poles alongside them. Composition over the floor
/// absorbs pole units; all other composites are inherited.
inline WindowZCat suspendCat(const WindowZCat& X) {
    if (X.lo != 0) throw DomainError("WindowFloor", "suspension needs a window starting at 0");
    std::string minusName = "-", plusName = "+";
    for (bool fresh = false; !fresh;) {
        fresh = true;
        std::string mu = minusName, pu = plusName;
        for (int k = 1; k <= X.hi + 1 && fresh; ++k) {
            mu = detail::formalUnitName(mu);
            pu = detail::formalUnitName(pu);
            for (int i = 0; i < X.cellCount(k - 1) && fresh; ++i) {
                const std::string& n = X.cellName(k - 1, i);
                if (n == mu || n == pu) fresh = false;
            }
        }
        if (!fresh) {
            minusName += "'";
            plusName += "'";
        }
    }
    WindowZCat S;
    S.lo = 0;
    S.hi = X.hi + 1;
    S.basepoint = 0;
    S.cells.push_back({minusName, plusName});
    std::string mu = minusName, pu = plusName;
    for (int k = 1; k <= S.hi; ++k) {
        mu = detail::formalUnitName(mu);
        pu = detail::formalUnitName(pu);
        std::vector<std::string> names{mu, pu};
        for (int i = 0; i < X.cellCount(k - 1); ++i) names.push_back(X.cellName(k - 1, i));
        S.cells.push_back(std::move(names));
    }
    for (int k = 1; k <= S.hi; ++k) {
        std::vector<int> s{0, 1}, t{0, 1};
        for (int i = 0; i < X.cellCount(k - 1); ++i) {
            if (k == 1) {
                s.push_back(0);
                t.push_back(1);
            } else {
                s.push_back(X.srcOf(k - 1, i) + 2);
                t.push_back(X.tgtOf(k - 1, i) + 2);
            }
        }
        S.src.push_back(std::move(s));
        S.tgt.push_back(std::move(t));
    }
    for (int k = 0; k < S.hi; ++k) {
        std::vector<int> u{0, 1};
        if (k > 0)
            for (int i = 0; i < X.cellCount(k - 1); ++i) u.push_back(X.unitOf(k - 1, i) + 2);
        S.unit.push_back(std::move(u));
    }
    for (int j = 0; j <= S.hi; ++j)
        for (int k = j + 1; k <= S.hi; ++k) {
            const int n = X.cellCount(k - 1) + 2;
            std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                                std::vector<int>(static_cast<std::size_t>(n), -1));
            table[0][0] = 0;
            table[1][1] = 1;
            if (j == 0) {
                // a cell from - to + absorbs pole units on either side
                for (int i = 0; i < X.cellCount(k - 1); ++i) {
                    table[static_cast<std::size_t>(i + 2)][0] = i + 2;
                    table[1][static_cast<std::size_t>(i + 2)] = i + 2;
                }
            } else {
                const auto& old = X.comp.at({j - 1, k - 1});
                for (int a = 0; a < X.cellCount(k - 1); ++a)
                    for (int b = 0; b < X.cellCount(k - 1); ++b)
                        if (old[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != -1)
                            table[static_cast<std::size_t>(a + 2)][static_cast<std::size_t>(b + 2)] =
                                old[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] + 2;
            }
            S.comp[{j, k}] = std::move(table);
        }
    return S;
}

/// Same category with every dimension label moved by k.
inline WindowZCat shiftCat(const WindowZCat& X, int k) {
    WindowZCat Y = X;
    Y.lo += k;
    Y.hi += k;
    Y.comp.clear();
    for (const auto& [key, table] : X.comp) Y.comp[{key.first + k, key.second + k}] = table;
    return Y;
}

/// Finite monoid by multiplication table; the unit is located, not declared.
struct MonoidTable {
    std::vector<std::string> names;
    std::vector<std::vector<int>> mult;  ///< mult[a][b]
};

namespace detail {

inline int monoidUnit(const MonoidTable& M) {
    const int n = static_cast<int>(M.names.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = M.mult[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)] == x &&
                 M.mult[static_cast<std::size_t>(x)][static_cast<std::size_t>(e)] == x;
        if (ok) return e;
    }
    return -1;
}

}  // namespace detail

/// One-object-per-dimension window with the monoid at dimension n: cells
/// below n are singletons "*", composition of n-cells in every direction is
/// the monoid product. Needs a unit and associativity always, and
/// commutativity as soon as two composition directions exist.
inline WindowZCat eilenbergMacLane(const MonoidTable& M, int n, int windowLow) {
    const int count = static_cast<int>(M.names.size());
    if (count == 0 || windowLow >= n)
        throw DomainError("WindowShape", "monoid window needs windowLow < n and cells");
    const int e = detail::monoidUnit(M);
    if (e == -1) throw DomainError("NoUnit", "multiplication table has no two-sided unit");
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) {
            if (M.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] < 0 ||
                M.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= count)
                throw DomainError("WindowShape", "multiplication entry out of range");
            for (int c = 0; c < count; ++c) {
                const auto& m = M.mult;
                if (m[static_cast<std::size_t>(m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])]
                     [static_cast<std::size_t>(c)] !=
                    m[static_cast<std::size_t>(a)]
                     [static_cast<std::size_t>(m[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])])
                    throw DomainError("NonAssociative", "multiplication table is not associative");
            }
        }
    if (n - windowLow >= 2)
        for (int a = 0; a < count; ++a)
            for (int b = 0; b < count; ++b)
                if (M.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
                    M.mult[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                    throw DomainError("NonCommutative",
                                      "two composition directions force commutativity");
    WindowZCat X;
    X.lo = windowLow;
    X.hi = n;
    X.basepoint = 0;
    for (int k = windowLow; k < n; ++k) X.cells.push_back({"*"});
    X.cells.push_back(M.names);
    for (int k = windowLow + 1; k < n; ++k) {
        X.src.push_back({0});
        X.tgt.push_back({0});
    }
    X.src.push_back(std::vector<int>(static_cast<std::size_t>(count), 0));
    X.tgt.push_back(std::vector<int>(static_cast<std::size_t>(count), 0));
    for (int k = windowLow; k < n - 1; ++k) X.unit.push_back({0});
    X.unit.push_back({e});
    for (int j = windowLow; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            if (k < n)
                X.comp[{j, k}] = {{0}};
            else
                X.comp[{j, k}] = M.mult;
        }
    return X;
}

inline WindowZCat eilenbergMacLane(const MonoidTable& M, int n) {
    return eilenbergMacLane(M, n, n - 1);
}

}  // namespace thetaz
