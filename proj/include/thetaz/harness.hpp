#pragma once
// Self-check suites: each one re-derives a slice of the library against an
// independent oracle, plus a battery of deliberately damaged structures that
// the validators must all reject.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "pasting.hpp"
#include "spectra.hpp"
#include "stable_tree.hpp"
#include "tree.hpp"
#include "window_cat.hpp"

namespace thetaz {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failed = 0;
    std::vector<std::string> notes;  // first few failure descriptions

    bool passed() const { return failed == 0; }
};

namespace detail {

class SuiteLog {
  public:
    explicit SuiteLog(std::string name) { r_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++r_.checks;
        if (ok) return;
        ++r_.failed;
        if (r_.notes.size() < 6) r_.notes.push_back(what);
    }

    SuiteResult result() && { return std::move(r_); }

  private:
    SuiteResult r_;
};

}  // namespace detail

/// Spine/normal-form laws: text and spine roundtrips, suspension shifting,
/// and equality certified by levelwise window expansion.
inline SuiteResult runSpineSuite(std::uint64_t seed) {
    detail::SuiteLog log("spines");
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_int_distribution<int> off(-4, 4);

    std::vector<StableTree> pool;
    for (const Tree& t : enumerateTrees(6)) pool.push_back(normalize({off(rng), t}));

    for (const StableTree& s : pool) {
        const std::string text = printStableTree(s);
        log.check(parseStableTree(text) == s, "text roundtrip at " + text);
        const Spine sp = spine(s);
        log.check(fromSpine(sp) == s, "spine roundtrip at " + text);
        log.check(parseSpine(printSpine(sp)) == sp, "spine text roundtrip at " + text);

        const Spine up = spine(normalize(shiftStable(s, 1)));
        bool shifted = up.leafDims.size() == sp.leafDims.size() &&
                       up.meetDims.size() == sp.meetDims.size();
        for (std::size_t i = 0; shifted && i < sp.leafDims.size(); ++i)
            shifted = up.leafDims[i] == sp.leafDims[i] + 1;
        for (std::size_t i = 0; shifted && i < sp.meetDims.size(); ++i)
            shifted = up.meetDims[i] == sp.meetDims[i] + 1;
        log.check(shifted, "suspension must shift the spine of " + text);
    }

    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 500; ++i) {
        const StableTree& a = pool[pick(rng)];
        const StableTree& b = pool[pick(rng)];
        const bool eq = equalStable(a, b);
        const bool win = oracle::expandWindow(a, -8, 8) == oracle::expandWindow(b, -8, 8);
        log.check(eq == win,
                  "equality vs window expansion on " + printStableTree(a) + " / " +
                      printStableTree(b));
    }
    return std::move(log).result();
}

/// Rigid-map counting against the odometer oracle and the sector formula.
inline SuiteResult runInertSuite(std::uint64_t seed) {
    detail::SuiteLog log("inerts");
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_int_distribution<int> off(-2, 1);

    std::vector<StableTree> pool;
    for (const Tree& t : enumerateTrees(5)) pool.push_back(normalize({off(rng), t}));

    for (const StableTree& s : pool) {
        const std::string text = printStableTree(s);
        for (int k = s.offset - 2; k <= topDim(s) + 1; ++k) {
            const auto homs = enumerateInerts(stableGlobe(k), s);
            log.check(static_cast<int>(homs.size()) == sectorCount(s, k),
                      "globe hom count at level " + std::to_string(k) + " into " + text);
            for (const InertMap& f : homs)
                log.check(checkInert(f), "invalid enumerated map into " + text);
        }
        const SpineCone cone = spineCone(s);
        for (const InertMap& f : cone.leafMaps)
            log.check(checkInert(f), "invalid spine leaf map of " + text);
        for (const InertMap& f : cone.meetMaps)
            log.check(checkInert(f), "invalid spine meet map of " + text);
    }

    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int counted = 0;
    while (counted < 60) {
        const StableTree& a = pool[pick(rng)];
        const StableTree& b = pool[pick(rng)];
        if (oracle::inertBruteCost(a, b) > 2e5) continue;
        ++counted;
        log.check(static_cast<long>(enumerateInerts(a, b).size()) ==
                      oracle::countInertsBrute(a, b),
                  "brute count mismatch " + printStableTree(a) + " -> " + printStableTree(b));
    }
    return std::move(log).result();
}

/// Values of windows at stable trees against both labeling oracles.
inline SuiteResult runSegalSuite(std::uint64_t seed) {
    detail::SuiteLog log("segal");
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));

    std::vector<std::pair<std::string, WindowZCat>> cats;
    for (auto& [name, X] : stockCategories())
        if (name == "arrow" || name == "pair" || name == "iso" || name == "diamond" ||
            name == "em_z2_1" || name == "susp_arrow" || name == "em_clamp2_m1" ||
            name == "indiscrete_or")
            cats.emplace_back(name, X);

    const auto trees = enumerateTrees(4);
    std::uniform_int_distribution<int> off(-1, 1);
    for (const auto& [name, X] : cats) {
        // globes read off plain cell lists
        for (int k = X.lo; k <= X.hi; ++k)
            log.check(static_cast<int>(evaluate(X, stableGlobe(k)).size()) == X.cellCount(k),
                      name + ": globe value at " + std::to_string(k));
        log.check(evaluate(X, stableGlobe(X.lo - 1)).size() == 1,
                  name + ": globe below the window");
        for (const Tree& t : trees) {
            const StableTree s = normalize({off(rng), t});
            if (topDim(s) > X.hi) continue;
            const auto got = evaluate(X, s);
            log.check(got == oracle::evaluateByChains(X, s),
                      name + ": chain oracle at " + printStableTree(s));
            if (oracle::evalBruteCost(X, s) <= 5e4)
                log.check(got == oracle::evaluateBySectorLabelings(X, s),
                          name + ": labeling oracle at " + printStableTree(s));
        }
    }
    return std::move(log).result();
}

/// Strict isomorphisms vs equivalences, and invariance under dimension shift.
inline SuiteResult runUnivalenceSuite(std::uint64_t seed) {
    detail::SuiteLog log("univalence");
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_int_distribution<int> shift(-3, 3);

    for (const auto& [name, X] : stockCategories()) {
        const bool uni = checkStableUnivalence(X).univalent;
        log.check(uni == (omegaEquivalences(X) == unitCells(X)),
                  name + ": univalence must match equivalences == units");

        const auto iso = strictIsoCells(X);
        const auto equiv = omegaEquivalences(X);
        bool contained = true;
        for (std::size_t row = 0; row < iso.size(); ++row)
            for (int c : iso[row])
                if (!std::binary_search(equiv[row].begin(), equiv[row].end(), c))
                    contained = false;
        log.check(contained, name + ": strict isomorphisms must be equivalences");

        const int k = shift(rng);
        const WindowZCat Y = shiftCat(X, k);
        log.check(checkStableUnivalence(Y).univalent == uni,
                  name + ": univalence must survive shifting");
        log.check(isGroupoidal(Y) == isGroupoidal(X),
                  name + ": groupoidality must survive shifting");
    }
    return std::move(log).result();
}

/// Tower construction, the loops shift law, and the point plateau.
inline SuiteResult runTowerSuite(std::uint64_t seed) {
    detail::SuiteLog log("towers");
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_int_distribution<int> pickN(-1, 1);

    const std::vector<MonoidTable> monoids = {trivialMonoid(), cyclicMonoid(2), cyclicMonoid(3),
                                              kleinFour(), orMonoid(), clampAddMonoid(2)};
    for (const MonoidTable& M : monoids)
        for (int L : {2, 3, 4}) {
            const int n = pickN(rng);
            if (n + L - 1 < 0) continue;
            const WindowZCat X = eilenbergMacLane(M, n, std::min(n - 1, 1 - L));
            const Tower T = towerOf(X, L);
            log.check(checkTower(T).empty(), "tower of monoid window must validate");
            const Tower LT = loopsTower(T);
            log.check(checkTower(LT).empty(), "loop tower must validate");
            for (int k = std::max(X.lo, 1 - L); k < X.hi; ++k)
                log.check(stableCells(LT, k).names == stableCells(T, k + 1).names,
                          "loop tower must shift stable cells at " + std::to_string(k));
        }
    return std::move(log).result();
}

/// Stable cells must reproduce the window's own cells in every range
/// dimension; a non-stabilizing tower must be refused.
inline SuiteResult runCellsTheoremSuite(std::uint64_t seed) {
    detail::SuiteLog log("cellsthm");
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::uniform_int_distribution<int> pickL(2, 4);

    const std::vector<MonoidTable> monoids = {trivialMonoid(), cyclicMonoid(2), cyclicMonoid(3),
                                              kleinFour(), orMonoid(), clampAddMonoid(2)};
    for (const MonoidTable& M : monoids)
        for (int n = -2; n <= 1; ++n) {
            const int L = pickL(rng);
            if (n + L - 1 < 0) continue;
            const WindowZCat X = eilenbergMacLane(M, n, std::min(n - 1, 1 - L));
            for (int k = std::max(X.lo, 1 - L); k <= X.hi; ++k)
                log.check(checkCellsTheorem(X, k, L),
                          "stable cells must match the window at " + std::to_string(k));
        }

    // negative control: real structure below the top never stabilizes
    const WindowZCat S = shiftCat(suspendCat(eilenbergMacLane(cyclicMonoid(2), 1)), -2);
    log.check(!checkCellsTheorem(S, 0, 3), "suspension tower must fail the stable read");
    return std::move(log).result();
}

// ---------------------------------------------------------------------------
// mutation battery

struct CatMutant {
    std::string label;
    WindowZCat cat;
};

/// Single-field mutations of thin categories. Thinness guarantees each one
/// breaks an axiom: any rerouted composite or boundary lands on a cell with
/// the wrong boundaries, so detection must be 100%.
inline std::vector<CatMutant> catMutants() {
    std::vector<CatMutant> out;
    const std::vector<std::pair<std::string, WindowZCat>> bases = {
        {"pair", walkingComposablePair()},
        {"iso", walkingIsomorphism()},
        {"chain4", chainPoset(4)},
        {"diamond", diamondPoset()}};
    for (const auto& [bn, X] : bases) {
        for (const auto& [jk, table] : X.comp) {
            const int n = X.cellCount(jk.second);
            for (std::size_t x = 0; x < table.size(); ++x)
                for (std::size_t y = 0; y < table[x].size(); ++y) {
                    if (table[x][y] < 0 || n < 2) continue;
                    WindowZCat m = X;
                    m.comp[jk][x][y] = (table[x][y] + 1) % n;
                    out.push_back({bn + " composite " + m.cellName(jk.second, table[x][y]) +
                                       " rerouted",
                                   std::move(m)});
                }
        }
        for (int i = 0; i < X.cellCount(X.lo + 1); ++i) {
            if (X.src[0][static_cast<std::size_t>(i)] == X.tgt[0][static_cast<std::size_t>(i)])
                continue;
            WindowZCat m = X;
            m.src[0][static_cast<std::size_t>(i)] = m.tgt[0][static_cast<std::size_t>(i)];
            out.push_back({bn + " source of " + X.cellName(X.lo + 1, i) + " bent", std::move(m)});
        }
        for (int i = 0; i < X.cellCount(X.lo); ++i) {
            WindowZCat m = X;
            const auto& row = X.unit[0];
            m.unit[0][static_cast<std::size_t>(i)] =
                row[static_cast<std::size_t>((i + 1) % X.cellCount(X.lo))];
            out.push_back({bn + " unit of " + X.cellName(X.lo, i) + " retargeted", std::move(m)});
        }
    }
    return out;
}

struct TowerMutant {
    std::string label;
    Tower tower;
};

inline std::vector<TowerMutant> towerMutants() {
    std::vector<TowerMutant> out;
    const Tower a = towerOf(eilenbergMacLane(cyclicMonoid(2), 1, -3), 4);
    const Tower b = towerOf(eilenbergMacLane(orMonoid(), 0, -2), 3);
    for (const auto& [bn, T] : {std::pair<std::string, Tower>{"z2", a}, {"or", b}}) {
        for (std::size_t i = 0; i + 1 < T.entries.size(); ++i) {
            Tower m = T;
            std::swap(m.entries[i], m.entries[i + 1]);
            out.push_back({bn + " entries " + std::to_string(i) + "," + std::to_string(i + 1) +
                               " swapped",
                           std::move(m)});
        }
        {
            Tower m = T;
            m.entries[1].basepoint = -1;
            out.push_back({bn + " basepoint dropped", std::move(m)});
        }
        {
            Tower m = T;
            m.entries.back().cells.back()[0] = "renamed";
            out.push_back({bn + " top cell renamed", std::move(m)});
        }
        {
            Tower m = T;
            const int top = m.entries.back().hi;
            auto& t = m.entries.back().comp[{top - 1, top}];
            t[0][0] = (t[0][0] + 1) % m.entries.back().cellCount(top);
            out.push_back({bn + " top composition corrupted", std::move(m)});
        }
    }
    return out;
}

/// Feed every mutant to the validators; all must be rejected.
inline SuiteResult runMutationSuite(std::uint64_t /*seed*/) {
    detail::SuiteLog log("mutants");
    const auto cm = catMutants();
    const auto tm = towerMutants();
    log.check(cm.size() + tm.size() >= 50, "battery too small");
    for (const CatMutant& m : cm)
        log.check(!checkAxioms(m.cat).empty(), "undetected: " + m.label);
    for (const TowerMutant& m : tm)
        log.check(!checkTower(m.tower).empty(), "undetected: " + m.label);
    return std::move(log).result();
}

// ---------------------------------------------------------------------------

inline std::vector<std::string> harnessSuiteNames() {
    return {"spines", "inerts", "segal", "univalence", "towers", "cellsthm", "mutants"};
}

inline std::vector<SuiteResult> runHarness(const std::string& which, std::uint64_t seed) {
    std::vector<SuiteResult> out;
    const bool all = which == "all";
    if (all || which == "spines") out.push_back(runSpineSuite(seed));
    if (all || which == "inerts") out.push_back(runInertSuite(seed));
    if (all || which == "segal") out.push_back(runSegalSuite(seed));
    if (all || which == "univalence") out.push_back(runUnivalenceSuite(seed));
    if (all || which == "towers") out.push_back(runTowerSuite(seed));
    if (all || which == "cellsthm") out.push_back(runCellsTheoremSuite(seed));
    if (all || which == "mutants") out.push_back(runMutationSuite(seed));
    if (out.empty()) throw DomainError("UnknownSuite", "no suite named " + which);
    return out;
}

inline std::string formatReport(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    for (const SuiteResult& r : results) {
        os << "suite " << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks
           << " checks";
        if (r.failed > 0) os << ", " << r.failed << " failed";
        os << ")\n";
        for (const std::string& n : r.notes) os << "  " << n << "\n";
    }
    return os.str();
}

}  // namespace thetaz
