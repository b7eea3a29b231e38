#pragma once

/// @file
/// @brief Text form for window categories.
///
/// One record per line; blank lines and lines starting with '#' are skipped:
///
///   window LO HI
///   basepoint NAME
///   cells K: NAME ...
///   unit K: X -> Y
///   src K: X -> Y
///   tgt K: X -> Y
///   comp J K: X Y -> Z
///
/// printCategory emits the canonical layout: window, basepoint, the cells
/// lines bottom-up, then per dimension the src, tgt and unit lines in cell
/// order, then every defined composite in lexicographic table order.
/// parseCategory accepts records in any order but insists on a complete
/// presentation: every dimension needs a cells line, every cell its
/// boundaries and unit, and every composable pair exactly one composite.

#include <string>
#include <vector>

#include "errors.hpp"
#include "window_cat.hpp"

namespace thetaz {
namespace detail {

struct CatToken {
    std::string text;
    std::size_t offset;
};

inline std::vector<std::vector<CatToken>> tokenizeRecords(const std::string& text) {
    std::vector<std::vector<CatToken>> records;
    std::size_t lineStart = 0;
    while (lineStart <= text.size()) {
        std::size_t lineEnd = text.find('\n', lineStart);
        if (lineEnd == std::string::npos) lineEnd = text.size();
        std::vector<CatToken> toks;
        std::size_t i = lineStart;
        while (i < lineEnd) {
            if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < lineEnd && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
            toks.push_back({text.substr(i, j - i), i});
            i = j;
        }
        if (!toks.empty() && toks[0].text[0] != '#') records.push_back(std::move(toks));
        if (lineEnd == text.size()) break;
        lineStart = lineEnd + 1;
    }
    return records;
}

inline int parseCatInt(const CatToken& tok, bool stripColon) {
    std::string t = tok.text;
    if (stripColon) {
        if (t.empty() || t.back() != ':')
            throw ParseFailure(tok.offset, "expected ':' after dimension");
        t.pop_back();
    }
    std::size_t pos = 0;
    bool neg = false;
    if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) {
        neg = t[pos] == '-';
        ++pos;
    }
    if (pos >= t.size()) throw ParseFailure(tok.offset, "expected integer");
    long v = 0;
    for (; pos < t.size(); ++pos) {
        if (t[pos] < '0' || t[pos] > '9') throw ParseFailure(tok.offset + pos, "bad digit");
        v = v * 10 + (t[pos] - '0');
        if (v > 1000000) throw ParseFailure(tok.offset, "integer out of range");
    }
    return static_cast<int>(neg ? -v : v);
}

inline int resolveCell(const WindowZCat& X, int k, const CatToken& tok) {
    const int i = findCell(X, k, tok.text);
    if (i == -1)
        throw DomainError("UnknownCell",
                          "no cell " + tok.text + " at dimension " + std::to_string(k));
    return i;
}

inline void requireArrow(const CatToken& tok) {
    if (tok.text != "->") throw ParseFailure(tok.offset, "expected '->'");
}

}  // namespace detail

inline WindowZCat parseCategory(const std::string& text) {
    const auto records = detail::tokenizeRecords(text);
    WindowZCat X;
    bool haveWindow = false;
    for (const auto& rec : records) {
        if (rec[0].text != "window") continue;
        if (haveWindow) throw ParseFailure(rec[0].offset, "second window line");
        if (rec.size() != 3) throw ParseFailure(rec[0].offset, "window needs two integers");
        X.lo = detail::parseCatInt(rec[1], false);
        X.hi = detail::parseCatInt(rec[2], false);
        haveWindow = true;
    }
    if (!haveWindow) throw ParseFailure(0, "missing window line");
    if (X.hi < X.lo) throw DomainError("WindowShape", "window top below its floor");

    const int dims = X.hi - X.lo + 1;
    X.cells.assign(static_cast<std::size_t>(dims), {});
    std::vector<bool> seenCells(static_cast<std::size_t>(dims), false);
    for (const auto& rec : records) {
        if (rec[0].text != "cells") continue;
        if (rec.size() < 2) throw ParseFailure(rec[0].offset, "cells needs a dimension");
        const int k = detail::parseCatInt(rec[1], true);
        if (k < X.lo || k > X.hi)
            throw DomainError("UnknownDimension",
                              "cells line for dimension " + std::to_string(k) + " outside window");
        if (seenCells[static_cast<std::size_t>(k - X.lo)])
            throw DomainError("DuplicateEntry", "second cells line for dimension " + std::to_string(k));
        seenCells[static_cast<std::size_t>(k - X.lo)] = true;
        auto& names = X.cells[static_cast<std::size_t>(k - X.lo)];
        for (std::size_t i = 2; i < rec.size(); ++i) {
            if (rec[i].text == "->") throw ParseFailure(rec[i].offset, "cell name '->' is reserved");
            for (const auto& have : names)
                if (have == rec[i].text)
                    throw DomainError("DuplicateCell", "cell " + rec[i].text + " listed twice at dimension " +
                                                           std::to_string(k));
            names.push_back(rec[i].text);
        }
    }
    for (int k = X.lo; k <= X.hi; ++k)
        if (!seenCells[static_cast<std::size_t>(k - X.lo)])
            throw DomainError("MissingCells", "no cells line for dimension " + std::to_string(k));

    for (int k = X.lo + 1; k <= X.hi; ++k) {
        X.src.emplace_back(static_cast<std::size_t>(X.cellCount(k)), -1);
        X.tgt.emplace_back(static_cast<std::size_t>(X.cellCount(k)), -1);
    }
    for (int k = X.lo; k < X.hi; ++k)
        X.unit.emplace_back(static_cast<std::size_t>(X.cellCount(k)), -1);
    for (int j = X.lo; j <= X.hi; ++j)
        for (int k = j + 1; k <= X.hi; ++k)
            X.comp[{j, k}].assign(static_cast<std::size_t>(X.cellCount(k)),
                                  std::vector<int>(static_cast<std::size_t>(X.cellCount(k)), -1));

    bool haveBasepoint = false;
    for (const auto& rec : records) {
        const std::string& kw = rec[0].text;
        if (kw == "window" || kw == "cells") continue;
        if (kw == "basepoint") {
            if (rec.size() != 2) throw ParseFailure(rec[0].offset, "basepoint needs one name");
            if (haveBasepoint) throw ParseFailure(rec[0].offset, "second basepoint line");
            haveBasepoint = true;
            X.basepoint = detail::resolveCell(X, X.lo, rec[1]);
        } else if (kw == "src" || kw == "tgt") {
            if (rec.size() != 5) throw ParseFailure(rec[0].offset, kw + " needs 'K: X -> Y'");
            detail::requireArrow(rec[3]);
            const int k = detail::parseCatInt(rec[1], true);
            if (k <= X.lo || k > X.hi)
                throw DomainError("UnknownDimension",
                                  kw + " line at dimension " + std::to_string(k) + " outside window");
            const int x = detail::resolveCell(X, k, rec[2]);
            const int y = detail::resolveCell(X, k - 1, rec[4]);
            auto& table = (kw == "src" ? X.src : X.tgt)[static_cast<std::size_t>(k - X.lo - 1)];
            if (table[static_cast<std::size_t>(x)] != -1)
                throw DomainError("DuplicateEntry", "second " + kw + " for " + rec[2].text);
            table[static_cast<std::size_t>(x)] = y;
        } else if (kw == "unit") {
            if (rec.size() != 5) throw ParseFailure(rec[0].offset, "unit needs 'K: X -> Y'");
            detail::requireArrow(rec[3]);
            const int k = detail::parseCatInt(rec[1], true);
            if (k < X.lo || k >= X.hi)
                throw DomainError("UnknownDimension",
                                  "unit line at dimension " + std::to_string(k) + " outside window");
            const int x = detail::resolveCell(X, k, rec[2]);
            const int y = detail::resolveCell(X, k + 1, rec[4]);
            auto& table = X.unit[static_cast<std::size_t>(k - X.lo)];
            if (table[static_cast<std::size_t>(x)] != -1)
                throw DomainError("DuplicateEntry", "second unit for " + rec[2].text);
            table[static_cast<std::size_t>(x)] = y;
        } else if (kw == "comp") {
            if (rec.size() != 7) throw ParseFailure(rec[0].offset, "comp needs 'J K: X Y -> Z'");
            detail::requireArrow(rec[5]);
            const int j = detail::parseCatInt(rec[1], false);
            const int k = detail::parseCatInt(rec[2], true);
            if (j < X.lo || j >= k || k > X.hi)
                throw DomainError("UnknownDimension", "comp line over (" + std::to_string(j) + "," +
                                                          std::to_string(k) + ") outside window");
            const int x = detail::resolveCell(X, k, rec[3]);
            const int y = detail::resolveCell(X, k, rec[4]);
            const int z = detail::resolveCell(X, k, rec[6]);
            auto& table = X.comp[{j, k}];
            if (table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != -1)
                throw DomainError("DuplicateEntry",
                                  "second composite of " + rec[3].text + " and " + rec[4].text);
            table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = z;
        } else {
            throw ParseFailure(rec[0].offset, "unknown record '" + kw + "'");
        }
    }

    for (int k = X.lo + 1; k <= X.hi; ++k)
        for (int i = 0; i < X.cellCount(k); ++i)
            if (X.srcOf(k, i) == -1 || X.tgtOf(k, i) == -1)
                throw DomainError("MissingBoundaryEntry",
                                  "cell " + X.cellName(k, i) + " lacks src or tgt");
    for (int k = X.lo; k < X.hi; ++k)
        for (int i = 0; i < X.cellCount(k); ++i)
            if (X.unitOf(k, i) == -1)
                throw DomainError("MissingUnitEntry", "cell " + X.cellName(k, i) + " lacks a unit");
    for (int j = X.lo; j <= X.hi; ++j)
        for (int k = j + 1; k <= X.hi; ++k)
            for (int x = 0; x < X.cellCount(k); ++x)
                for (int y = 0; y < X.cellCount(k); ++y) {
                    const bool matched = X.boundary(true, k, x, j) == X.boundary(false, k, y, j);
                    const bool defined = X.compOf(j, k, x, y) != -1;
                    if (matched && !defined)
                        throw DomainError("MissingCompositionEntry",
                                          "no composite of " + X.cellName(k, x) + " and " +
                                              X.cellName(k, y) + " over " + std::to_string(j));
                    if (!matched && defined)
                        throw DomainError("SpuriousCompositionEntry",
                                          X.cellName(k, x) + " and " + X.cellName(k, y) +
                                              " do not meet over " + std::to_string(j));
                }
    return X;
}

inline std::string printCategory(const WindowZCat& X) {
    std::string out = "window " + std::to_string(X.lo) + " " + std::to_string(X.hi) + "\n";
    if (X.basepoint != -1) out += "basepoint " + X.cellName(X.lo, X.basepoint) + "\n";
    for (int k = X.lo; k <= X.hi; ++k) {
        out += "cells " + std::to_string(k) + ":";
        for (int i = 0; i < X.cellCount(k); ++i) out += " " + X.cellName(k, i);
        out += "\n";
    }
    for (int k = X.lo; k <= X.hi; ++k) {
        if (k > X.lo) {
            for (int i = 0; i < X.cellCount(k); ++i)
                out += "src " + std::to_string(k) + ": " + X.cellName(k, i) + " -> " +
                       X.cellName(k - 1, X.srcOf(k, i)) + "\n";
            for (int i = 0; i < X.cellCount(k); ++i)
                out += "tgt " + std::to_string(k) + ": " + X.cellName(k, i) + " -> " +
                       X.cellName(k - 1, X.tgtOf(k, i)) + "\n";
        }
        if (k < X.hi) {
            for (int i = 0; i < X.cellCount(k); ++i)
                out += "unit " + std::to_string(k) + ": " + X.cellName(k, i) + " -> " +
                       X.cellName(k + 1, X.unitOf(k, i)) + "\n";
        }
    }
    for (const auto& [key, table] : X.comp) {
        const auto [j, k] = key;
        for (std::size_t x = 0; x < table.size(); ++x)
            for (std::size_t y = 0; y < table.size(); ++y)
                if (table[x][y] != -1)
                    out += "comp " + std::to_string(j) + " " + std::to_string(k) + ": " +
                           X.cellName(k, static_cast<int>(x)) + " " +
                           X.cellName(k, static_cast<int>(y)) + " -> " +
                           X.cellName(k, table[x][y]) + "\n";
    }
    return out;
}

}  // namespace thetaz
