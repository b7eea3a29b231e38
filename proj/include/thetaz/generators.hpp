#pragma once

/// @file
/// @brief Stock categories, posets and monoid tables used by tests and the
/// self-check harness.

#include <array>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "window_cat.hpp"

namespace thetaz {
namespace detail {

// Fill comp[{0,1}] of a one-dimensional category: unit pairs compose by
// absorption, the remaining composable pairs come from the explicit list.
inline void fillHomComp(WindowZCat& X, const std::vector<std::array<int, 3>>& pairs) {
    const int n = X.cellCount(1);
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (X.srcOf(1, x) != X.tgtOf(1, y)) continue;
            int r = -1;
            if (isUnitCell(X, 1, y)) r = x;
            else if (isUnitCell(X, 1, x)) r = y;
            for (const auto& p : pairs)
                if (p[0] == x && p[1] == y) r = p[2];
            table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = r;
        }
    X.comp[{0, 1}] = std::move(table);
}

}  // namespace detail

inline WindowZCat walkingArrow() {
    WindowZCat X;
    X.lo = 0;
    X.hi = 1;
    X.cells = {{"0", "1"}, {"id0", "id1", "f"}};
    X.src = {{0, 1, 0}};
    X.tgt = {{0, 1, 1}};
    X.unit = {{0, 1}};
    detail::fillHomComp(X, {});
    return X;
}

inline WindowZCat walkingComposablePair() {
    WindowZCat X;
    X.lo = 0;
    X.hi = 1;
    X.cells = {{"0", "1", "2"}, {"id0", "id1", "id2", "f", "g", "gf"}};
    X.src = {{0, 1, 2, 0, 1, 0}};
    X.tgt = {{0, 1, 2, 1, 2, 2}};
    X.unit = {{0, 1, 2}};
    detail::fillHomComp(X, {{4, 3, 5}});
    return X;
}

inline WindowZCat walkingIsomorphism() {
    WindowZCat X;
    X.lo = 0;
    X.hi = 1;
    X.cells = {{"a", "b"}, {"ida", "idb", "f", "finv"}};
    X.src = {{0, 1, 0, 1}};
    X.tgt = {{0, 1, 1, 0}};
    X.unit = {{0, 1}};
    detail::fillHomComp(X, {{3, 2, 0}, {2, 3, 1}});
    return X;
}

/// n objects, no arrows beyond what the window shape implies; pointed at x0.
inline WindowZCat discreteCat(int n) {
    WindowZCat X;
    X.lo = 0;
    X.hi = 0;
    X.cells.emplace_back();
    for (int i = 0; i < n; ++i) X.cells[0].push_back("x" + std::to_string(i));
    if (n > 0) X.basepoint = 0;
    return X;
}

/// Category of a finite preorder given as a reflexive, transitive relation;
/// antisymmetry is the caller's business (cell names would collide otherwise).
inline WindowZCat posetCat(const std::vector<std::string>& names,
                           const std::vector<std::vector<char>>& le) {
    const int n = static_cast<int>(names.size());
    WindowZCat X;
    X.lo = 0;
    X.hi = 1;
    X.cells = {names, {}};
    X.src.emplace_back();
    X.tgt.emplace_back();
    X.unit.assign(1, std::vector<int>(static_cast<std::size_t>(n), -1));
    std::map<std::pair<int, int>, int> arrow;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            arrow[{a, b}] = X.cellCount(1);
            X.cells[1].push_back(names[static_cast<std::size_t>(a)] + "_" +
                                 names[static_cast<std::size_t>(b)]);
            X.src[0].push_back(a);
            X.tgt[0].push_back(b);
            if (a == b) X.unit[0][static_cast<std::size_t>(a)] = arrow[{a, b}];
        }
    const int m = X.cellCount(1);
    auto& table = X.comp[{0, 1}];
    table.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), -1));
    for (const auto& [bc, x] : arrow)
        for (const auto& [ab, y] : arrow)
            if (ab.second == bc.first)
                table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                    arrow.at({ab.first, bc.second});
    return X;
}

inline WindowZCat chainPoset(int n) {
    std::vector<std::string> names;
    std::vector<std::vector<char>> le(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        names.push_back("p" + std::to_string(i));
        for (int j = i; j < n; ++j) le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    }
    return posetCat(names, le);
}

/// p0 below p1 and p2, both below p3; p1 and p2 incomparable.
inline WindowZCat diamondPoset() {
    std::vector<std::vector<char>> le = {
        {1, 1, 1, 1},
        {0, 1, 0, 1},
        {0, 0, 1, 1},
        {0, 0, 0, 1},
    };
    return posetCat({"p0", "p1", "p2", "p3"}, le);
}

/// Random order relation compatible with the index order, closed under
/// transitivity. Deterministic in the seed.
inline WindowZCat randomPoset(int n, unsigned seed) {
    std::mt19937 gen(seed);
    std::vector<std::vector<char>> le(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        names.push_back("p" + std::to_string(i));
        le[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        for (int j = i + 1; j < n; ++j)
            le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<char>(gen() & 1u);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    le[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    return posetCat(names, le);
}

inline MonoidTable trivialMonoid() { return {{"e"}, {{0}}}; }

inline MonoidTable cyclicMonoid(int n) {
    MonoidTable M;
    M.mult.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a) {
        M.names.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b)
            M.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    }
    return M;
}

inline MonoidTable kleinFour() {
    MonoidTable M;
    M.names = {"e", "a", "b", "ab"};
    M.mult.assign(4, std::vector<int>(4, 0));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) M.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
    return M;
}

inline MonoidTable orMonoid() { return {{"0", "1"}, {{0, 1}, {1, 1}}}; }

/// Addition truncated at cap; commutative, not a group for cap >= 1.
inline MonoidTable clampAddMonoid(int cap) {
    MonoidTable M;
    M.mult.assign(static_cast<std::size_t>(cap) + 1,
                  std::vector<int>(static_cast<std::size_t>(cap) + 1, 0));
    for (int a = 0; a <= cap; ++a) {
        M.names.push_back(std::to_string(a));
        for (int b = 0; b <= cap; ++b)
            M.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::min(a + b, cap);
    }
    return M;
}

/// One object, the or-monoid as 1-cells, and exactly one 2-cell between every
/// pair of 1-cells. The loop s is invertible up to the connecting 2-cells but
/// not strictly, which separates the two invertibility notions.
inline WindowZCat indiscreteOverOr() {
    WindowZCat X;
    X.lo = 0;
    X.hi = 2;
    X.basepoint = 0;
    X.cells = {{"*"}, {"1", "s"}, {"c11", "c1s", "cs1", "css"}};
    X.src = {{0, 0}, {0, 0, 1, 1}};
    X.tgt = {{0, 0}, {0, 1, 0, 1}};
    X.unit = {{0}, {0, 3}};
    X.comp[{0, 1}] = {{0, 1}, {1, 1}};
    auto srcBit = [](int c) { return c >> 1; };
    auto tgtBit = [](int c) { return c & 1; };
    auto& over1 = X.comp[{1, 2}];
    auto& over0 = X.comp[{0, 2}];
    over1.assign(4, std::vector<int>(4, -1));
    over0.assign(4, std::vector<int>(4, -1));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (srcBit(a) == tgtBit(b))
                over1[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    (srcBit(b) << 1) | tgtBit(a);
            over0[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                ((srcBit(a) | srcBit(b)) << 1) | (tgtBit(a) | tgtBit(b));
        }
    return X;
}

/// Named sample categories covering every construction; the workhorse list
/// for property tests and the harness.
inline std::vector<std::pair<std::string, WindowZCat>> stockCategories() {
    std::vector<std::pair<std::string, WindowZCat>> out;
    out.emplace_back("arrow", walkingArrow());
    out.emplace_back("pair", walkingComposablePair());
    out.emplace_back("iso", walkingIsomorphism());
    out.emplace_back("discrete3", discreteCat(3));
    out.emplace_back("chain4", chainPoset(4));
    out.emplace_back("diamond", diamondPoset());
    out.emplace_back("random5a", randomPoset(5, 7));
    out.emplace_back("random6b", randomPoset(6, 40));
    out.emplace_back("em_z2_1", eilenbergMacLane(cyclicMonoid(2), 1));
    out.emplace_back("em_z3_1", eilenbergMacLane(cyclicMonoid(3), 1));
    out.emplace_back("em_z2_2_wide", eilenbergMacLane(cyclicMonoid(2), 2, 0));
    out.emplace_back("em_v4_1", eilenbergMacLane(kleinFour(), 1));
    out.emplace_back("em_or_1", eilenbergMacLane(orMonoid(), 1));
    out.emplace_back("em_clamp2_m1", eilenbergMacLane(clampAddMonoid(2), -1, -3));
    out.emplace_back("susp_arrow", suspendCat(walkingArrow()));
    out.emplace_back("susp_pair", suspendCat(walkingComposablePair()));
    out.emplace_back("susp_iso", suspendCat(walkingIsomorphism()));
    out.emplace_back("shift_diamond_m2", shiftCat(diamondPoset(), -2));
    out.emplace_back("shift_em_z2_1_p3", shiftCat(eilenbergMacLane(cyclicMonoid(2), 1), 3));
    out.emplace_back("loops_susp_pair", loops(suspendCat(walkingComposablePair())));
    out.emplace_back("indiscrete_or", indiscreteOverOr());
    return out;
}

}  // namespace thetaz
