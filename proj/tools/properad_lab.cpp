#include <CLI11.hpp>
#include <iostream>

#include "properad/dot.hpp"
#include "properad/json_io.hpp"
#include "properad/random_gen.hpp"

using namespace properad;

namespace {

Json readJsonStdin() {
    std::string all((std::istreambuf_iterator<char>(std::cin)),
                    std::istreambuf_iterator<char>());
    return Json::parse(all);
}

int reportSuite(const std::string& what, const SuiteReport& rep) {
    std::cout << what << ": " << (rep.passed() ? "ok" : "FAILED") << " (" << rep.checked
              << " checks)\n";
    for (const auto& f : rep.failures)
        std::cout << "  " << f.identity << " " << f.witness << "\n";
    return rep.passed() ? 0 : 1;
}

std::vector<NestedGraph> sampleSimplices(Rng& rng, int count, int maxLevel, int maxVertices,
                                         bool groupable) {
    std::vector<NestedGraph> out;
    for (int t = 0; t < count; ++t) {
        int level = static_cast<int>(rng() % (maxLevel + 1));
        Arity a{static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2)};
        out.push_back(groupable ? randomGroupableSimplex(rng, level, a, maxVertices)
                                : randomSurfaceSimplex(rng, level, a, maxVertices));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"properad-lab: ioda-graph and surface properad workbench"};
    app.require_subcommand(1);

    unsigned seed = 12345;
    if (const char* env = std::getenv("PROPERAD_LAB_SEED")) seed = std::stoul(env);
    int count = 10;
    int maxVertices = 3;
    int truncation = 3;
    std::string policyStr = "raw";
    std::string name = "M";
    std::string format = "text";
    app.add_option("--seed", seed, "random seed (default from PROPERAD_LAB_SEED)");
    app.add_option("--count", count, "number of samples");
    app.add_option("--max-vertices", maxVertices, "vertex bound for sampled graphs");
    app.add_option("--truncation", truncation, "simplicial truncation level N");
    app.add_option("--policy", policyStr, "raw|stabilize")
        ->check(CLI::IsMember({"raw", "stabilize"}));
    app.add_option("--name", name, "surface properad family name");
    app.add_option("--format", format, "json|dot|text")
        ->check(CLI::IsMember({"json", "dot", "text"}));

    int nMinus = 1, nPlus = 1, maxEdges = 3;
    auto* enumCmd = app.add_subcommand("enumerate-graphs", "list small ioda-graph iso classes");
    enumCmd->add_option("--inputs", nMinus, "global inputs");
    enumCmd->add_option("--outputs", nPlus, "global outputs");
    enumCmd->add_option("--max-edges", maxEdges, "edge bound");

    auto* composeCmd = app.add_subcommand("compose", "random composite in a surface family");
    auto* stabCmd = app.add_subcommand("stabilize", "stabilize a surface read from stdin");
    auto* classifyCmd = app.add_subcommand("classify", "membership of a surface from stdin");
    auto* monadCmd = app.add_subcommand("monad-check", "monad laws on random nested values");
    auto* barCmd = app.add_subcommand("bar-check", "simplicial identities of the bar complex");
    auto* pushCmd = app.add_subcommand("pushout-reduce", "normal forms in a sample pushout");
    auto* contrCmd = app.add_subcommand("contraction-check", "extra degeneracy conditions");
    auto* cutCmd = app.add_subcommand("cut-check", "cut map, homotopy and compatibility");
    auto* renderCmd = app.add_subcommand("render", "DOT for a nested value from stdin");

    CLI11_PARSE(app, argc, argv);
    Rng rng(seed);

    try {
        if (enumCmd->parsed()) {
            EnumerateOptions opt;
            opt.nMinus = nMinus;
            opt.nPlus = nPlus;
            opt.maxVertices = maxVertices;
            opt.maxEdges = maxEdges;
            auto graphs = enumerateGraphs(opt);
            if (format == "json") {
                Json arr = Json::array();
                for (const auto& g : graphs) arr.push_back(graphToJson(g));
                std::cout << toJsonString(arr);
            } else {
                std::cout << graphs.size() << " iso classes\n";
                for (const auto& g : graphs) std::cout << "  " << canonicalKey(g) << "\n";
            }
            return 0;
        }
        if (composeCmd->parsed()) {
            auto fam = properadNameFromString(name);
            if (!fam) throw std::runtime_error("unknown family " + name);
            SurfaceProperad P = surfaceProperadFor(*fam);
            for (int t = 0; t < count; ++t) {
                Arity a{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
                if (a.in + a.out == 0) a.out = 1;
                IodaGraph g = randomGraph(rng, a, maxVertices, maxVertices + 1);
                NestedGraph x;
                x.depth = 1;
                x.shape = g;
                bool ok = true;
                for (int v = 0; v < g.nVertices && ok; ++v) {
                    auto s = randomSurface(rng, *fam, vertexArity(g, v));
                    if (!s) ok = false;
                    else x.values.push_back(NestedGraph::ofElement(*s));
                }
                if (!ok) { --t; continue; }
                Element out = P.evaluate(x);
                if (format == "json")
                    std::cout << toJsonString(surfaceToJson(std::get<SurfaceType>(out)));
                else
                    std::cout << elementKey(out) << "\n";
            }
            return 0;
        }
        if (stabCmd->parsed()) {
            SurfaceType s = surfaceFromJson(readJsonStdin());
            SurfaceType t = policyStr == "stabilize" ? stabilize(s) : normalizeSpots(s, true);
            std::cout << toJsonString(surfaceToJson(t));
            return 0;
        }
        if (classifyCmd->parsed()) {
            SurfaceType s = surfaceFromJson(readJsonStdin());
            Json j;
            for (ProperadName n : kAllProperadNames) {
                Membership m = membership(s, n);
                if (format == "json") {
                    j[properadNameToString(n)] = m.member;
                } else {
                    std::cout << properadNameToString(n) << ": "
                              << (m.member ? "member" : "not a member (" + m.reason + ")")
                              << "\n";
                }
            }
            if (format == "json") std::cout << toJsonString(j);
            return 0;
        }
        if (monadCmd->parsed()) {
            int bad = 0;
            for (int t = 0; t < count; ++t) {
                Arity a{1, 1 + static_cast<int>(rng() % 2)};
                NestedGraph x3 = randomSurfaceSimplex(rng, 2, a, maxVertices);
                NestedGraph x1 = randomSurfaceSimplex(rng, 0, a, maxVertices);
                auto r1 = checkAssociativity(x3);
                auto r2 = checkUnitLaws(x1);
                if (!r1.passed) { ++bad; std::cout << "associativity: " << r1.detail << "\n"; }
                if (!r2.passed) { ++bad; std::cout << "units: " << r2.detail << "\n"; }
            }
            std::cout << "monad-check: " << (bad == 0 ? "ok" : "FAILED") << " (" << count
                      << " samples)\n";
            return bad == 0 ? 0 : 1;
        }
        if (barCmd->parsed()) {
            SurfaceProperad P("surfaces", policyStr == "stabilize" ? GluePolicy::Stabilize
                                                                   : GluePolicy::Raw);
            TruncatedSimplicialObject S = barObject(P, truncation);
            auto samples = sampleSimplices(rng, count, truncation - 1, maxVertices, false);
            return reportSuite("bar-check", checkSimplicialIdentities(S, samples));
        }
        if (pushCmd->parsed()) {
            FreeProperad X({{{{1, 1}, "a"}, {{2, 1}, "b"}}});
            FreeProperad Z({{{{1, 1}, "z"}}});
            FreeProperad Y({{{{1, 1}, "c"}, {{1, 2}, "d"}}});
            PushoutProperad P =
                pushoutConstruct(X, Z, Y, {{{{1, 1}, "a"}}}, {{{{1, 1}, "c"}}});
            for (int t = 0; t < count; ++t) {
                const auto& alpha = t % 2 == 0 ? X.alphabet() : Y.alphabet();
                const Label& l = alpha[rng() % alpha.size()];
                Element e = t % 2 == 0 ? X.etaLabel(l) : Y.etaLabel(l);
                auto nf = P.normalForm(e);
                std::cout << elementKey(e) << " -> " << elementKey(*nf) << "\n";
            }
            return 0;
        }
        if (contrCmd->parsed()) {
            SurfaceProperad P("surfaces", GluePolicy::Raw);
            TruncatedSimplicialObject S = barObject(P, truncation);
            auto samples = sampleSimplices(rng, count, truncation - 1, maxVertices, true);
            int rc = reportSuite("eta contraction", checkContraction(S, etaContraction(), samples));
            rc |= reportSuite("grouped contraction",
                              checkContraction(S, groupedContraction(), samples));
            return rc;
        }
        if (cutCmd->parsed()) {
            SurfaceProperad P("surfaces", GluePolicy::Raw);
            TruncatedSimplicialObject S = barObject(P, truncation);
            CutMachine M = buildCutMap(nodeCutOracle());
            auto samples = sampleSimplices(rng, count, truncation - 1, maxVertices, true);
            int rc = reportSuite("cut simplicial", checkCutSimplicial(S, M, samples));
            rc |= reportSuite("cut homotopy", checkCutHomotopy(S, M, samples));
            rc |= reportSuite("cut compatibility", checkCompatibility(M, samples));
            return rc;
        }
        if (renderCmd->parsed()) {
            NestedGraph x = nestedFromJson(readJsonStdin());
            std::cout << toDot(x);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
