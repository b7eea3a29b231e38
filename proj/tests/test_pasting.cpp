#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "thetaz/oracles.hpp"
#include "thetaz/pasting.hpp"
#include "thetaz/stable_tree.hpp"
#include "thetaz/tree.hpp"

using namespace thetaz;

namespace {

Tree tr(const std::string& s) { return parseTree(s); }
StableTree st(const std::string& s) { return parseStableTree(s); }

std::vector<StableTree> sampleStables(int maxNodes, std::vector<int> offsets) {
    std::vector<StableTree> out;
    for (const Tree& t : enumerateTrees(maxNodes))
        for (int z : offsets) out.push_back(normalize({z, t}));
    return out;
}

std::vector<std::vector<std::vector<int>>> sortedTables(std::vector<InertMap> maps) {
    std::vector<std::vector<std::vector<int>>> tables;
    tables.reserve(maps.size());
    for (auto& f : maps) tables.push_back(std::move(f.table));
    std::sort(tables.begin(), tables.end());
    return tables;
}

}  // namespace

TEST_CASE("sector counts match level sizes and the globes") {
    for (int n = -2; n <= 4; ++n) {
        const StableTree g = stableGlobe(n);
        for (int k = n - 3; k <= n + 2; ++k) {
            const int want = k < n ? 2 : (k == n ? 1 : 0);
            CHECK(sectorCount(g, k) == want);
        }
    }

    const StableTree two = st("(()())");
    CHECK(sectorCount(two, -1) == 2);
    CHECK(sectorCount(two, 0) == 3);
    CHECK(sectorCount(two, 1) == 2);
    CHECK(sectorCount(two, 2) == 0);

    for (const StableTree& s : sampleStables(6, {-2, 0, 3})) {
        // Each level contributes nodes + children gaps, so the window from
        // offset to top sums to 2*nodes - 1.
        int sum = 0;
        for (int k = s.offset; k <= topDim(s); ++k) sum += sectorCount(s, k);
        CHECK(sum == 2 * s.body.nodeCount() - 1);

        const StableTree up = shiftStable(s, 1);
        for (int k = s.offset - 2; k <= topDim(s) + 1; ++k) {
            CHECK(sectorCount(up, k + 1) == sectorCount(s, k));
            for (int i = 0; i < sectorCount(s, k); ++i)
                CHECK(sectorIndex(s, sectorAt(s, k, i)) == i);
        }
    }

    CHECK_THROWS_AS(sectorAt(two, 0, 3), DomainError);
    CHECK_THROWS_AS(sectorAt(two, -1, 2), DomainError);
}

TEST_CASE("sector boundaries are globular") {
    for (const StableTree& s : sampleStables(6, {-1, 0, 2})) {
        for (int k = s.offset - 1; k <= topDim(s); ++k) {
            for (int i = 0; i < sectorCount(s, k); ++i) {
                const Sector x = sectorAt(s, k, i);
                const Sector src = sectorSource(s, x), tgt = sectorTarget(s, x);
                CHECK(src.level == k - 1);
                CHECK(tgt == Sector{src.level, src.node, src.pos + 1});
                CHECK(sectorSource(s, src) == sectorSource(s, tgt));
                CHECK(sectorTarget(s, src) == sectorTarget(s, tgt));
            }
        }
    }

    const StableTree two = st("(()())");
    CHECK(sectorSource(two, {1, 1, 0}) == Sector{0, 0, 1});
    CHECK(sectorTarget(two, {1, 1, 0}) == Sector{0, 0, 2});
    CHECK(printSector(two, sectorAt(two, 0, 1)) == "0:(r,1)");
    CHECK(printSector(two, sectorAt(two, 1, 1)) == "1:(r.1,0)");
    CHECK(printSector(st("2@()"), sectorAt(st("2@()"), 0, 1)) == "0:(t,1)");
    CHECK(printSector(st("((())())"), Sector{2, 0, 0}) == "2:(r.0.0,0)");
}

TEST_CASE("globe homs have size two strictly below the diagonal") {
    for (int m = -4; m <= 4; ++m) {
        for (int n = -4; n <= 4; ++n) {
            const auto hom = globeHom(m, n);
            if (m > n) CHECK(hom.empty());
            if (m == n) CHECK(hom == std::vector<GlobeMorphism>{globeIdentity(m)});
            if (m < n) {
                REQUIRE(hom.size() == 2);
                CHECK(hom[0].sign == GlobeSign::minus);
                CHECK(hom[1].sign == GlobeSign::plus);
            }
            for (const auto& f : hom) {
                CHECK(composeGlobe(f, globeIdentity(m)) == f);
                CHECK(composeGlobe(globeIdentity(n), f) == f);
            }
        }
    }

    for (int a = -4; a <= 2; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 4; ++c)
                for (int d = c; d <= 4; ++d)
                    for (const auto& f : globeHom(a, b))
                        for (const auto& g : globeHom(b, c))
                            for (const auto& h : globeHom(c, d))
                                CHECK(composeGlobe(h, composeGlobe(g, f)) ==
                                      composeGlobe(composeGlobe(h, g), f));
}

TEST_CASE("congruence closure of generator words certifies the sign rule") {
    for (int length = 0; length <= 8; ++length) {
        const auto classes = oracle::globePathClasses(length);
        CHECK(classes.classCount == (length == 0 ? 1 : 2));
        for (int mask = 0; mask < (1 << length); ++mask)
            CHECK(classes.canon[static_cast<std::size_t>(mask)] == (mask & 1));
    }

    // Concatenating words and reducing must agree with composeGlobe.
    for (int lf = 0; lf <= 4; ++lf) {
        for (int lg = 0; lg <= 4; ++lg) {
            const auto classes = oracle::globePathClasses(lf + lg);
            for (int pf = 0; pf < (1 << lf); ++pf) {
                for (int pg = 0; pg < (1 << lg); ++pg) {
                    const GlobeMorphism f =
                        lf == 0 ? globeIdentity(0)
                                : GlobeMorphism{0, lf, (pf & 1) ? GlobeSign::plus : GlobeSign::minus};
                    const GlobeMorphism g =
                        lg == 0 ? globeIdentity(lf)
                                : GlobeMorphism{lf, lf + lg,
                                                (pg & 1) ? GlobeSign::plus : GlobeSign::minus};
                    const GlobeMorphism c = composeGlobe(g, f);
                    const int word = pf | (pg << lf);
                    if (lf + lg == 0) {
                        CHECK(c.sign == GlobeSign::identity);
                    } else {
                        const int canon = classes.canon[static_cast<std::size_t>(word)];
                        CHECK(c.sign == ((canon & 1) ? GlobeSign::plus : GlobeSign::minus));
                    }
                }
            }
        }
    }
}

TEST_CASE("globe inclusions realize globe morphisms functorially") {
    for (int a = -3; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (const auto& f : globeHom(a, b)) CHECK(checkInert(inertOfGlobeMorphism(f)));

    for (int a = -3; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 3; ++c)
                for (const auto& f : globeHom(a, b))
                    for (const auto& g : globeHom(b, c))
                        CHECK(composeInert(inertOfGlobeMorphism(g), inertOfGlobeMorphism(f)) ==
                              inertOfGlobeMorphism(composeGlobe(g, f)));

    for (int m = -2; m <= 2; ++m)
        for (int n = m + 1; n <= 3; ++n)
            CHECK_FALSE(globeInclusion(m, n, GlobeSign::minus) ==
                        globeInclusion(m, n, GlobeSign::plus));

    CHECK_THROWS_AS(globeInclusion(2, 1, GlobeSign::minus), DomainError);
    CHECK_THROWS_AS(globeInclusion(1, 2, GlobeSign::identity), DomainError);
    CHECK_THROWS_AS(globeInclusion(2, 2, GlobeSign::plus), DomainError);
}

TEST_CASE("inert maps from a globe pick out exactly the sectors") {
    for (const StableTree& s : sampleStables(5, {-1, 0, 2})) {
        for (int k = s.offset - 2; k <= topDim(s) + 1; ++k) {
            const auto maps = enumerateInerts(stableGlobe(k), s);
            CHECK(static_cast<int>(maps.size()) == sectorCount(s, k));
            for (const auto& f : maps) CHECK(checkInert(f));
            // Distinct maps hit distinct sectors.
            std::vector<int> hits;
            for (const auto& f : maps)
                hits.push_back(f.table.back().at(0));
            std::sort(hits.begin(), hits.end());
            CHECK(std::adjacent_find(hits.begin(), hits.end()) == hits.end());
        }
    }

    const InertMap low = globeInclusion(-3, 1, GlobeSign::plus);
    CHECK(sectorImage(low, Sector{-5, -1, 1}) == Sector{-5, -1, 1});
    CHECK(sectorImage(low, Sector{-3, 0, 0}) == Sector{-3, -1, 1});
}

TEST_CASE("enumeration agrees with the brute-force filter") {
    const auto pool = sampleStables(4, {-1, 0, 1});
    int compared = 0;
    for (const StableTree& a : pool) {
        for (const StableTree& b : pool) {
            if (oracle::inertBruteCost(a, b) > 50000.0) continue;
            ++compared;
            CHECK(countInerts(a, b) == oracle::countInertsBrute(a, b));
        }
    }
    CHECK(compared > 100);

    CHECK(countInerts(st("(()())"), st("(()())")) == 1);
    CHECK(countInerts(st("(()())"), st("(()()())")) == 2);
    CHECK(countInerts(st("(()()())"), st("(()())")) == 0);
    CHECK(countInerts(stableGlobe(1), st("(()())")) == 2);
    CHECK(countInerts(stableGlobe(0), st("2@()")) == 2);
    CHECK(countInerts(stableGlobe(3), st("(()())")) == 0);
}

TEST_CASE("identities and associativity of inert composition") {
    for (const StableTree& s : sampleStables(5, {-1, 0, 1})) {
        const InertMap id = identityInert(s);
        CHECK(checkInert(id));
        const auto endos = enumerateInerts(s, s);
        CHECK(std::find(endos.begin(), endos.end(), id) != endos.end());

        const SpineCone cone = spineCone(s);
        for (std::size_t i = 0; i < cone.leafMaps.size(); ++i) {
            const InertMap& leaf = cone.leafMaps[i];
            CHECK(composeInert(id, leaf) == leaf);
            CHECK(composeInert(leaf, identityInert(leaf.src)) == leaf);
            const int n = cone.sp.leafDims[i];
            for (int m = n - 2; m <= n - 1; ++m)
                for (int a = m - 1; a <= m; ++a)
                    for (const auto& u : globeHom(a, m))
                        for (const auto& v : globeHom(m, n)) {
                            const InertMap fu = inertOfGlobeMorphism(u);
                            const InertMap fv = inertOfGlobeMorphism(v);
                            CHECK(composeInert(leaf, composeInert(fv, fu)) ==
                                  composeInert(composeInert(leaf, fv), fu));
                        }
        }
    }
}

TEST_CASE("shifting is a bijection on inert maps") {
    const auto pool = sampleStables(4, {-1, 0});
    for (const StableTree& a : pool) {
        for (const StableTree& b : pool) {
            if (topDim(a) > topDim(b)) continue;
            auto maps = enumerateInerts(a, b);
            for (const auto& f : maps) {
                CHECK(checkInert(suspendInert(f)));
                CHECK(shiftInert(shiftInert(f, 3), -3) == f);
            }
            auto shifted = enumerateInerts(shiftStable(a, 1), shiftStable(b, 1));
            REQUIRE(maps.size() == shifted.size());
            std::vector<InertMap> mapped;
            mapped.reserve(maps.size());
            for (const auto& f : maps) mapped.push_back(suspendInert(f));
            CHECK(sortedTables(std::move(mapped)) == sortedTables(std::move(shifted)));
        }
    }
}

TEST_CASE("spine cones commute") {
    for (const StableTree& s : sampleStables(6, {-2, 0, 1})) {
        const SpineCone cone = spineCone(s);
        const Spine sp = spine(s);
        REQUIRE(cone.sp == sp);
        REQUIRE(cone.leafMaps.size() == sp.leafDims.size());
        REQUIRE(cone.meetMaps.size() == sp.meetDims.size());
        for (const auto& f : cone.leafMaps) CHECK(checkInert(f));
        for (const auto& f : cone.meetMaps) CHECK(checkInert(f));
        for (std::size_t i = 0; i < cone.meetMaps.size(); ++i) {
            const int m = sp.meetDims[i];
            const InertMap viaLeft = composeInert(
                cone.leafMaps[i], globeInclusion(m, sp.leafDims[i], GlobeSign::plus));
            const InertMap viaRight = composeInert(
                cone.leafMaps[i + 1], globeInclusion(m, sp.leafDims[i + 1], GlobeSign::minus));
            CHECK(viaLeft == cone.meetMaps[i]);
            CHECK(viaRight == cone.meetMaps[i]);
        }
    }
}

TEST_CASE("inert map printing is stable") {
    CHECK(printInertMap(identityInert(st("(()())"))) == "1:(r.0,0) 1:(r.1,0)");
    CHECK(printInertMap(globeInclusion(0, 2, GlobeSign::minus)) == "0:(t,0)");
    const auto maps = enumerateInerts(st("(()())"), st("(()()())"));
    REQUIRE(maps.size() == 2);
    CHECK(printInertMap(maps[0]) == "1:(r.0,0) 1:(r.1,0)");
    CHECK(printInertMap(maps[1]) == "1:(r.1,0) 1:(r.2,0)");
}
