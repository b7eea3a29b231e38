#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "thetaz/generators.hpp"
#include "thetaz/oracles.hpp"
#include "thetaz/stable_tree.hpp"
#include "thetaz/tree.hpp"
#include "thetaz/window_cat.hpp"

using namespace thetaz;

namespace {

StableTree st(const std::string& s) { return parseStableTree(s); }

std::vector<std::string> families(const WindowZCat& X) {
    std::vector<std::string> out;
    for (const auto& v : checkAxioms(X)) out.push_back(v.family);
    std::sort(out.begin(), out.end());
    return out;
}

bool hasFamily(const WindowZCat& X, const std::string& fam) {
    const auto fams = families(X);
    return std::find(fams.begin(), fams.end(), fam) != fams.end();
}

WindowZCat unpointed(WindowZCat X) {
    X.basepoint = -1;
    return X;
}

}  // namespace

TEST_CASE("stock categories pass every axiom family") {
    for (const auto& [name, X] : stockCategories()) {
        INFO(name);
        const auto violations = checkAxioms(X);
        for (const auto& v : violations) UNSCOPED_INFO(v.family + ": " + v.detail);
        CHECK(violations.empty());
    }
    // hom between the poles in the wrong direction: every dimension empty,
    // still a category
    const WindowZCat empty = bipointedLoops(suspendCat(walkingArrow()), 1, 0);
    for (int k = 0; k <= empty.hi; ++k) CHECK(empty.cellCount(k) == 0);
    CHECK(isValidCategory(empty));
}

TEST_CASE("targeted damage trips the right axiom families") {
    SECTION("structure problems short-circuit") {
        WindowZCat X = walkingArrow();
        X.cells[1].pop_back();
        CHECK(families(X) == std::vector<std::string>{"Structure"});
        WindowZCat Y = walkingArrow();
        Y.basepoint = 7;
        CHECK(families(Y) == std::vector<std::string>{"Structure"});
        WindowZCat Z = walkingArrow();
        Z.cells[0][1] = "0";
        CHECK(families(Z) == std::vector<std::string>{"Structure"});
    }
    SECTION("globularity") {
        WindowZCat S = suspendCat(walkingArrow());
        const int f = findCell(S, 2, "f");
        REQUIRE(f != -1);
        S.src[1][static_cast<std::size_t>(f)] = 0;  // a pole unit; boundaries no longer parallel
        CHECK(hasFamily(S, "Globularity"));
    }
    SECTION("unit boundaries") {
        WindowZCat X = walkingArrow();
        X.unit[0][0] = 2;  // unit of object 0 becomes f: 0 -> 1
        CHECK(hasFamily(X, "UnitBoundaries"));
    }
    SECTION("composition definedness, both directions") {
        WindowZCat P = walkingComposablePair();
        P.comp[{0, 1}][4][3] = -1;  // g after f lost
        CHECK(hasFamily(P, "CompDefinedness"));
        WindowZCat Q = walkingComposablePair();
        Q.comp[{0, 1}][3][4] = 5;  // f after g is not composable
        CHECK(hasFamily(Q, "CompDefinedness"));
    }
    SECTION("composite boundaries") {
        WindowZCat D = diamondPoset();
        const int x = findCell(D, 1, "p1_p3"), y = findCell(D, 1, "p0_p1");
        const int wrong = findCell(D, 1, "p0_p2");
        REQUIRE(D.comp[{0, 1}][static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ==
                findCell(D, 1, "p0_p3"));
        D.comp[{0, 1}][static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = wrong;
        CHECK(hasFamily(D, "CompBoundaries"));
    }
    SECTION("unit laws") {
        WindowZCat E = eilenbergMacLane(cyclicMonoid(3), 1);
        E.comp[{0, 1}][1][0] = 2;  // 1 after the unit
        CHECK(hasFamily(E, "UnitLaws"));
    }
    SECTION("associativity, and nothing else") {
        WindowZCat E = eilenbergMacLane(cyclicMonoid(3), 1);
        E.comp[{0, 1}][1][2] = 1;  // 1+2 retargeted away from 0
        CHECK(families(E) == std::vector<std::string>{"Associativity"});
    }
    SECTION("interchange, and nothing else") {
        WindowZCat E = eilenbergMacLane(cyclicMonoid(2), 1, -1);
        E.comp[{-1, 1}][1][1] = 1;  // one direction becomes the or-monoid
        CHECK(families(E) == std::vector<std::string>{"Interchange"});
    }
    SECTION("unit functoriality") {
        WindowZCat E = eilenbergMacLane(cyclicMonoid(2), 2, 0);
        E.comp[{0, 2}][0][0] = 1;  // unit of a floor composite stops being a unit
        CHECK(hasFamily(E, "UnitFunctoriality"));
    }
}

TEST_CASE("values at small trees are the expected tuple sets") {
    const WindowZCat P = walkingComposablePair();
    const auto pts = evaluate(P, st("(()())"));
    CHECK(pts.size() == 10);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
    for (const auto& t : pts) {
        REQUIRE(t.size() == 2);
        CHECK(P.tgtOf(1, t[0]) == P.srcOf(1, t[1]));
    }

    CHECK(evaluate(P, stableGlobe(0)).size() == 3);
    CHECK(evaluate(P, stableGlobe(1)).size() == 6);
    CHECK(evaluate(walkingIsomorphism(), st("(()())")).size() == 8);
    CHECK(evaluate(eilenbergMacLane(cyclicMonoid(2), 1), st("(()())")).size() == 4);

    // below the window every leaf is the trivial cell
    const auto below = evaluate(P, stableGlobe(-2));
    REQUIRE(below.size() == 1);
    CHECK(below[0] == std::vector<int>{-1});
    const auto deep = evaluate(P, shiftStable(st("(()())"), -5));
    REQUIRE(deep.size() == 1);
    CHECK(deep[0] == std::vector<int>(2, -1));

    CHECK_THROWS_MATCHES(evaluate(P, stableGlobe(2)), DomainError,
                         Catch::Matchers::Predicate<DomainError>(
                             [](const DomainError& e) { return e.code() == "WindowTooSmall"; }));
}

TEST_CASE("evaluation agrees with both independent labeling oracles") {
    const std::vector<std::string> picks = {"arrow",        "pair",       "iso",
                                            "diamond",      "em_z2_1",    "em_z2_2_wide",
                                            "susp_arrow",   "em_clamp2_m1", "shift_em_z2_1_p3",
                                            "indiscrete_or"};
    const auto stock = stockCategories();
    long chainChecks = 0, bruteChecks = 0;
    for (const auto& [name, X] : stock) {
        if (std::find(picks.begin(), picks.end(), name) == picks.end()) continue;
        for (const Tree& body : enumerateTrees(5))
            for (int z : {-1, 0, 1}) {
                const StableTree s = normalize({z, body});
                if (topDim(s) > X.hi) continue;
                INFO(name << " at " << printStableTree(s));
                const auto direct = evaluate(X, s);
                CHECK(direct == oracle::evaluateByChains(X, s));
                ++chainChecks;
                if (oracle::evalBruteCost(X, s) <= 2e5) {
                    CHECK(direct == oracle::evaluateBySectorLabelings(X, s));
                    ++bruteChecks;
                }
            }
    }
    CHECK(chainChecks >= 300);
    CHECK(bruteChecks >= 100);
}

TEST_CASE("suspension adds exactly the two pole points") {
    for (const std::string& pick : {"arrow", "pair", "iso", "em_z2_1"}) {
        for (const auto& [name, X] : stockCategories()) {
            if (name != pick) continue;
            const WindowZCat S = suspendCat(X);
            for (const Tree& body : enumerateTrees(4))
                for (int z : {0, 1, 2}) {
                    const StableTree s = normalize({z, body});
                    if (topDim(s) > X.hi) continue;
                    INFO(name << " at " << printStableTree(s));
                    CHECK(evaluate(S, shiftStable(s, 1)).size() == evaluate(X, s).size() + 2);
                }
        }
    }
}

TEST_CASE("loops after suspension gives back the category") {
    for (const std::string& pick : {"arrow", "pair", "iso", "em_or_1"}) {
        for (const auto& [name, X] : stockCategories()) {
            if (name != pick) continue;
            INFO(name);
            const WindowZCat S = suspendCat(X);
            CHECK(unpointed(bipointedLoops(S, 0, 1)) == unpointed(X));

            const WindowZCat minusLoop = bipointedLoops(S, 0, 0);
            CHECK(isValidCategory(minusLoop));
            for (int k = 0; k <= minusLoop.hi; ++k) {
                CHECK(minusLoop.cellCount(k) == 1);
                CHECK(minusLoop.cellName(k, 0).substr(0, 2) == "1[");
            }
            const WindowZCat backwards = bipointedLoops(S, 1, 0);
            CHECK(isValidCategory(backwards));
            for (int k = 0; k <= backwards.hi; ++k) CHECK(backwards.cellCount(k) == 0);
        }
    }
}

TEST_CASE("loop categories of monoid windows shift the dimension") {
    for (const MonoidTable& M :
         {cyclicMonoid(2), cyclicMonoid(3), kleinFour(), orMonoid(), trivialMonoid()}) {
        for (int n = 2; n <= 3; ++n) {
            INFO("monoid of size " << M.names.size() << " at dimension " << n);
            CHECK(loops(eilenbergMacLane(M, n, 0)) == eilenbergMacLane(M, n - 1, 0));
        }
        const WindowZCat L = loops(eilenbergMacLane(M, 1, 0));
        WindowZCat expected;
        expected.lo = expected.hi = 0;
        expected.cells = {M.names};
        expected.basepoint = 0;  // the monoid unit is the first name in all five tables
        CHECK(L == expected);
    }

    const LoopsResult point = loopsWithMap(discreteCat(3));
    CHECK(point.cat.hi == 0);
    CHECK(point.cat.cells == std::vector<std::vector<std::string>>{{"1[x0]"}});
    CHECK(point.cat.basepoint == 0);
    CHECK(point.parent == std::vector<std::vector<int>>{{-1}});
}

TEST_CASE("the loop projection lands on cells at the basepoint") {
    const WindowZCat X = eilenbergMacLane(cyclicMonoid(2), 1);
    CHECK(loopsWithMap(X).parent == std::vector<std::vector<int>>{{0, 1}});

    const WindowZCat S = suspendCat(walkingComposablePair());
    const LoopsResult lr = loopsWithMap(S);
    for (int k = 1; k <= S.hi; ++k) {
        const auto& row = lr.parent[static_cast<std::size_t>(k - 1)];
        CHECK(std::is_sorted(row.begin(), row.end()));
        for (std::size_t i = 0; i < row.size(); ++i) {
            CHECK(S.cellName(k, row[i]) == lr.cat.cellName(k - 1, static_cast<int>(i)));
            CHECK(S.boundary(true, k, row[i], 0) == S.basepoint);
            CHECK(S.boundary(false, k, row[i], 0) == S.basepoint);
            if (k >= 2) {
                const int below = lr.cat.srcOf(k - 1, static_cast<int>(i));
                CHECK(lr.parent[static_cast<std::size_t>(k - 2)][static_cast<std::size_t>(below)] ==
                      S.srcOf(k, row[i]));
            }
        }
    }

    CHECK_THROWS_MATCHES(loops(walkingArrow()), DomainError,
                         Catch::Matchers::Predicate<DomainError>(
                             [](const DomainError& e) { return e.code() == "NotPointed"; }));
    WindowZCat A = walkingArrow();
    A.basepoint = 0;
    CHECK_THROWS_MATCHES(loops(shiftCat(A, 1)), DomainError,
                         Catch::Matchers::Predicate<DomainError>(
                             [](const DomainError& e) { return e.code() == "WindowFloor"; }));
}

TEST_CASE("suspension renames poles away from colliding cell names") {
    WindowZCat C;
    C.lo = C.hi = 0;
    C.cells = {{"1[-]"}};
    C.basepoint = 0;
    const WindowZCat S = suspendCat(C);
    CHECK(S.cells[0] == std::vector<std::string>{"-'", "+'"});
    CHECK(S.cells[1] == std::vector<std::string>{"1[-']", "1[+']", "1[-]"});
    CHECK(isValidCategory(S));
}

TEST_CASE("strict inverses are unique and two-sided") {
    for (const auto& [name, X] : stockCategories()) {
        const auto isos = strictIsoCells(X);
        for (int k = X.lo + 1; k <= X.hi; ++k)
            for (int f : isos[static_cast<std::size_t>(k - X.lo - 1)]) {
                INFO(name << " cell " << X.cellName(k, f) << " at " << k);
                const int a = X.srcOf(k, f), b = X.tgtOf(k, f);
                std::vector<int> lefts, rights;
                for (int g = 0; g < X.cellCount(k); ++g) {
                    if (X.compOf(k - 1, k, g, f) == X.unitOf(k - 1, a)) lefts.push_back(g);
                    if (X.compOf(k - 1, k, f, g) == X.unitOf(k - 1, b)) rights.push_back(g);
                }
                CHECK(lefts == rights);
                CHECK(lefts.size() == 1);
            }
    }
    CHECK(strictIsoCells(walkingIsomorphism())[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(strictIsoCells(walkingComposablePair())[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("univalence: strictly invertible cells must be units") {
    const std::vector<std::pair<std::string, bool>> expected = {
        {"arrow", true},        {"pair", true},        {"iso", false},
        {"discrete3", true},    {"chain4", true},      {"diamond", true},
        {"random5a", true},     {"random6b", true},    {"em_z2_1", false},
        {"em_z3_1", false},     {"em_z2_2_wide", false}, {"em_v4_1", false},
        {"em_or_1", true},      {"em_clamp2_m1", true}, {"susp_arrow", true},
        {"susp_pair", true},    {"susp_iso", false},   {"shift_diamond_m2", true},
        {"shift_em_z2_1_p3", false}, {"loops_susp_pair", true}, {"indiscrete_or", false},
    };
    const auto stock = stockCategories();
    REQUIRE(stock.size() == expected.size());
    for (std::size_t i = 0; i < stock.size(); ++i) {
        REQUIRE(stock[i].first == expected[i].first);
        INFO(stock[i].first);
        CHECK(checkStableUnivalence(stock[i].second).univalent == expected[i].second);
    }

    const UnivalenceReport iso = checkStableUnivalence(walkingIsomorphism());
    CHECK(iso.dim == 1);
    CHECK(iso.cell == "f");
    const UnivalenceReport em = checkStableUnivalence(eilenbergMacLane(cyclicMonoid(2), 1));
    CHECK(em.dim == 1);
    CHECK(em.cell == "1");
    const UnivalenceReport ind = checkStableUnivalence(indiscreteOverOr());
    CHECK(ind.dim == 2);
    CHECK(ind.cell == "c1s");
}

TEST_CASE("a category is univalent exactly when equivalences are units") {
    for (const auto& [name, X] : stockCategories()) {
        INFO(name);
        CHECK((omegaEquivalences(X) == unitCells(X)) == checkStableUnivalence(X).univalent);
    }
}

TEST_CASE("equivalences can outgrow strict isomorphisms") {
    const WindowZCat X = indiscreteOverOr();
    CHECK(strictIsoCells(X) == std::vector<std::vector<int>>{{0}, {0, 1, 2, 3}});
    CHECK(omegaEquivalences(X) == std::vector<std::vector<int>>{{0, 1}, {0, 1, 2, 3}});
    CHECK(isGroupoidal(X));
}

TEST_CASE("groupoidal windows are exactly those with only equivalences") {
    const std::vector<std::pair<std::string, bool>> expected = {
        {"arrow", false},       {"pair", false},       {"iso", true},
        {"discrete3", true},    {"chain4", false},     {"diamond", false},
        {"em_z2_1", true},      {"em_z3_1", true},     {"em_z2_2_wide", true},
        {"em_v4_1", true},      {"em_or_1", false},    {"em_clamp2_m1", false},
        {"susp_arrow", false},  {"susp_pair", false},  {"susp_iso", false},
        {"shift_diamond_m2", false}, {"shift_em_z2_1_p3", true},
        {"loops_susp_pair", true},   {"indiscrete_or", true},
    };
    const auto stock = stockCategories();
    for (const auto& [name, want] : expected) {
        for (const auto& [have, X] : stock) {
            if (have != name) continue;
            INFO(name);
            CHECK(isGroupoidal(X) == want);
        }
    }
    // posets are groupoidal only when discrete: every cell a unit
    for (unsigned seed : {7u, 40u, 99u}) {
        const WindowZCat P = randomPoset(5, seed);
        CHECK(isGroupoidal(P) == (P.cellCount(1) == P.cellCount(0)));
    }
}

TEST_CASE("univalence and groupoidality ignore the dimension labels") {
    for (const std::string& pick : {"iso", "diamond", "em_z2_1", "indiscrete_or"}) {
        for (const auto& [name, X] : stockCategories()) {
            if (name != pick) continue;
            for (int k : {-3, 2}) {
                INFO(name << " shifted by " << k);
                CHECK(checkStableUnivalence(shiftCat(X, k)).univalent ==
                      checkStableUnivalence(X).univalent);
                CHECK(isGroupoidal(shiftCat(X, k)) == isGroupoidal(X));
                CHECK(isValidCategory(shiftCat(X, k)));
            }
        }
    }
}

TEST_CASE("monoid windows reject defective tables") {
    auto code = [](const std::string& want) {
        return Catch::Matchers::Predicate<DomainError>(
            [want](const DomainError& e) { return e.code() == want; });
    };
    MonoidTable noUnit{{"a", "b"}, {{1, 1}, {1, 1}}};
    CHECK_THROWS_MATCHES(eilenbergMacLane(noUnit, 1), DomainError, code("NoUnit"));

    MonoidTable nonAssoc{{"e", "a", "b"}, {{0, 1, 2}, {1, 2, 0}, {2, 1, 1}}};
    CHECK_THROWS_MATCHES(eilenbergMacLane(nonAssoc, 1), DomainError, code("NonAssociative"));

    // left-absorbing product: fine with one composition direction, not two
    MonoidTable leftZero{{"e", "p", "q"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}};
    CHECK(isValidCategory(eilenbergMacLane(leftZero, 1)));
    CHECK_THROWS_MATCHES(eilenbergMacLane(leftZero, 1, -1), DomainError, code("NonCommutative"));
    CHECK_THROWS_MATCHES(eilenbergMacLane(leftZero, 2, 0), DomainError, code("NonCommutative"));

    CHECK_THROWS_MATCHES(eilenbergMacLane(cyclicMonoid(2), 1, 1), DomainError,
                         code("WindowShape"));

    for (int n : {-2, 0, 3})
        for (int low : {n - 1, n - 3}) {
            INFO("monoid window at " << n << " over " << low);
            const WindowZCat X = eilenbergMacLane(kleinFour(), n, low);
            CHECK(X.lo == low);
            CHECK(X.hi == n);
            CHECK(isValidCategory(X));
            CHECK(evaluate(X, stableGlobe(n)).size() == 4);
        }
}
