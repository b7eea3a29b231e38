// thetaz: stable trees, window categories, and their towers from the shell.
// Exit codes: 0 = success / positive verdict, 1 = negative verdict or failed
// validation, 2 = bad input (syntax, missing file, usage).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thetaz/cat_format.hpp"
#include "thetaz/harness.hpp"
#include "thetaz/oracles.hpp"
#include "thetaz/pasting.hpp"
#include "thetaz/spectra.hpp"
#include "thetaz/stable_tree.hpp"
#include "thetaz/tree.hpp"
#include "thetaz/window_cat.hpp"

namespace {

using namespace thetaz;

WindowZCat loadCategory(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("FileError", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseCategory(buf.str());
}

int reportViolations(const std::vector<AxiomViolation>& vs) {
    if (vs.empty()) {
        std::cout << "ok\n";
        return 0;
    }
    for (const AxiomViolation& v : vs) std::cout << v.family << ": " << v.detail << "\n";
    return 1;
}

WindowZCat loadValidCategory(const std::string& path) {
    WindowZCat X = loadCategory(path);
    const auto vs = checkAxioms(X);
    if (!vs.empty())
        throw DomainError("InvalidCategory",
                          path + " fails " + vs.front().family + ": " + vs.front().detail);
    return X;
}

std::string signName(GlobeSign s) {
    switch (s) {
        case GlobeSign::minus: return "minus";
        case GlobeSign::plus: return "plus";
        default: return "identity";
    }
}

// one value tuple as leaf labels; "-" marks the collapsed zone below the window
std::string tupleLine(const WindowZCat& X, const Spine& sp, const std::vector<int>& tuple) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += tuple[i] < 0 ? "-" : X.cellName(sp.leafDims[i], tuple[i]);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorics of stable trees and strict window categories"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text"}));

    std::string treeText, spineText, srcText, dstText, file, suite = "all";
    int level = 0, amount = 1, dim = 0, length = 1;
    std::uint64_t seed = 0;
    bool levelSet = false;

    auto* normalize_ = app.add_subcommand("normalize", "canonical form of a stable tree");
    normalize_->add_option("tree", treeText)->required();

    auto* spine_ = app.add_subcommand("spine", "leaf and meet dimensions of a stable tree");
    spine_->add_option("tree", treeText)->required();

    auto* fromspine_ = app.add_subcommand("fromspine", "rebuild a stable tree from its spine");
    fromspine_->add_option("spine", spineText)->required();

    auto* suspend_ = app.add_subcommand("suspend", "shift a stable tree");
    suspend_->add_option("tree", treeText)->required();
    suspend_->add_option("-k,--by", amount, "levels to shift by (default 1)");

    auto* sectors_ = app.add_subcommand("sectors", "list the sectors of a stable tree");
    sectors_->add_option("tree", treeText)->required();
    sectors_->add_option("-k,--level", level)->each([&](const std::string&) { levelSet = true; });

    auto* globehom_ = app.add_subcommand("globehom", "morphisms between stable globes");
    globehom_->add_option("from", dim)->required();
    globehom_->add_option("to", amount)->required();

    auto* inerts_ = app.add_subcommand("inerts", "rigid maps between two stable trees");
    inerts_->add_option("src", srcText)->required();
    inerts_->add_option("dst", dstText)->required();

    auto* spinecone_ = app.add_subcommand("spinecone", "globe maps out of the spine");
    spinecone_->add_option("tree", treeText)->required();

    auto* check_ = app.add_subcommand("check", "validate a category file");
    check_->add_option("file", file)->required();

    auto* eval_ = app.add_subcommand("eval", "value of a category at a stable tree");
    eval_->add_option("file", file)->required();
    eval_->add_option("tree", treeText)->required();

    auto* univalent_ = app.add_subcommand("univalent", "test stable univalence");
    univalent_->add_option("file", file)->required();

    auto* equiv_ = app.add_subcommand("equiv", "list equivalence cells per dimension");
    equiv_->add_option("file", file)->required();

    auto* groupoidal_ = app.add_subcommand("groupoidal", "test whether every cell is invertible");
    groupoidal_->add_option("file", file)->required();

    auto* loops_ = app.add_subcommand("loops", "based loops of a pointed category");
    loops_->add_option("file", file)->required();

    auto* suspendcat_ = app.add_subcommand("suspendcat", "suspension of a category");
    suspendcat_->add_option("file", file)->required();

    auto* shift_ = app.add_subcommand("shift", "relabel every dimension");
    shift_->add_option("file", file)->required();
    shift_->add_option("-k,--by", amount)->required();

    auto* tower_ = app.add_subcommand("tower", "iterated loops under a shifted top");
    tower_->add_option("file", file)->required();
    tower_->add_option("-L,--length", length)->required();

    auto* stablecells_ = app.add_subcommand("stablecells", "stable cells of the tower");
    stablecells_->add_option("file", file)->required();
    stablecells_->add_option("-k,--dim", dim)->required();
    stablecells_->add_option("-L,--length", length)->required();

    auto* cellsthm_ = app.add_subcommand("cellsthm", "stable cells against the window's own");
    cellsthm_->add_option("file", file)->required();
    cellsthm_->add_option("-k,--dim", dim)->required();
    cellsthm_->add_option("-L,--length", length)->required();

    auto* harness_ = app.add_subcommand("harness", "run self-check suites");
    harness_->add_option("suite", suite)
        ->check(CLI::IsMember({"all", "spines", "inerts", "segal", "univalence", "towers",
                               "cellsthm", "mutants"}));
    harness_->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*normalize_) {
            std::cout << printStableTree(normalize(parseStableTree(treeText))) << "\n";
        } else if (*spine_) {
            std::cout << printSpine(spine(parseStableTree(treeText))) << "\n";
        } else if (*fromspine_) {
            std::cout << printStableTree(fromSpine(parseSpine(spineText))) << "\n";
        } else if (*suspend_) {
            std::cout << printStableTree(normalize(shiftStable(parseStableTree(treeText), amount)))
                      << "\n";
        } else if (*sectors_) {
            const StableTree s = normalize(parseStableTree(treeText));
            const int lo = levelSet ? level : s.offset - 1;
            const int hi = levelSet ? level : topDim(s);
            for (int k = lo; k <= hi; ++k)
                for (int i = 0; i < sectorCount(s, k); ++i)
                    std::cout << printSector(s, sectorAt(s, k, i)) << "\n";
        } else if (*globehom_) {
            for (const GlobeMorphism& f : globeHom(dim, amount))
                std::cout << f.dom << " -> " << f.cod << " " << signName(f.sign) << "\n";
        } else if (*inerts_) {
            const StableTree a = parseStableTree(srcText), b = parseStableTree(dstText);
            const auto maps = enumerateInerts(a, b);
            std::cout << "count " << maps.size() << "\n";
            for (const InertMap& f : maps) std::cout << printInertMap(f) << "\n";
        } else if (*spinecone_) {
            const SpineCone cone = spineCone(parseStableTree(treeText));
            std::cout << printSpine(cone.sp) << "\n";
            for (std::size_t i = 0; i < cone.leafMaps.size(); ++i)
                std::cout << "leaf " << i << ": " << printInertMap(cone.leafMaps[i]) << "\n";
            for (std::size_t i = 0; i < cone.meetMaps.size(); ++i)
                std::cout << "meet " << i << ": " << printInertMap(cone.meetMaps[i]) << "\n";
        } else if (*check_) {
            return reportViolations(checkAxioms(loadCategory(file)));
        } else if (*eval_) {
            const WindowZCat X = loadValidCategory(file);
            const StableTree s = normalize(parseStableTree(treeText));
            const auto tuples = evaluate(X, s);
            const Spine sp = spine(s);
            std::cout << "count " << tuples.size() << "\n";
            for (const auto& t : tuples) std::cout << tupleLine(X, sp, t) << "\n";
        } else if (*univalent_) {
            const UnivalenceReport r = checkStableUnivalence(loadValidCategory(file));
            if (r.univalent) {
                std::cout << "univalent\n";
                return 0;
            }
            std::cout << "not univalent: dimension " << r.dim << " cell " << r.cell << "\n";
            return 1;
        } else if (*equiv_) {
            const WindowZCat X = loadValidCategory(file);
            const auto rows = omegaEquivalences(X);
            for (int k = X.lo + 1; k <= X.hi; ++k) {
                std::cout << k << ":";
                for (int c : rows[static_cast<std::size_t>(k - X.lo - 1)])
                    std::cout << " " << X.cellName(k, c);
                std::cout << "\n";
            }
        } else if (*groupoidal_) {
            if (isGroupoidal(loadValidCategory(file))) {
                std::cout << "groupoidal\n";
                return 0;
            }
            std::cout << "not groupoidal\n";
            return 1;
        } else if (*loops_) {
            std::cout << printCategory(loops(loadValidCategory(file)));
        } else if (*suspendcat_) {
            std::cout << printCategory(suspendCat(loadValidCategory(file)));
        } else if (*shift_) {
            std::cout << printCategory(shiftCat(loadValidCategory(file), amount));
        } else if (*tower_) {
            const Tower T = towerOf(loadValidCategory(file), length);
            for (std::size_t i = 0; i < T.entries.size(); ++i) {
                std::cout << "# entry " << i << "\n" << printCategory(T.entries[i]);
                if (i + 1 < T.entries.size()) std::cout << "\n";
            }
        } else if (*stablecells_) {
            const StableCells sc = stableCells(towerOf(loadValidCategory(file), length), dim);
            std::cout << dim << ": " << sc.names.size() << " [stab=" << sc.stabilization << "]"
                      << (sc.formal ? " formal" : "") << "\n";
            for (std::size_t i = 0; i < sc.names.size(); ++i)
                std::cout << (i ? " " : "") << sc.names[i];
            std::cout << "\n";
        } else if (*cellsthm_) {
            if (checkCellsTheorem(loadValidCategory(file), dim, length)) {
                std::cout << "cells theorem holds at dimension " << dim << "\n";
                return 0;
            }
            std::cout << "cells theorem fails at dimension " << dim << "\n";
            return 1;
        } else if (*harness_) {
            const auto results = runHarness(suite, seed);
            std::cout << formatReport(results);
            for (const SuiteResult& r : results)
                if (!r.passed()) return 1;
        }
    } catch (const ParseFailure& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
