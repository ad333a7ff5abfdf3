#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properad/dot.hpp"
#include "properad/json_io.hpp"
#include "properad/random_gen.hpp"
#include "test_util.hpp"

using namespace properad;

namespace {

std::vector<NestedGraph> corpus(unsigned seed, int count) {
    Rng rng(seed);
    std::vector<NestedGraph> out;
    FreeProperad F(PresentedProperad{{{{2, 1}, "m"}, {{1, 2}, "w"}, {{1, 1}, "u"}}});
    while (static_cast<int>(out.size()) < count) {
        switch (rng() % 3) {
            case 0:
                out.push_back(randomSurfaceSimplex(rng, static_cast<int>(rng() % 3), {1, 1}, 2));
                break;
            case 1:
                try {
                    out.push_back(
                        randomFreeSimplex(rng, F, static_cast<int>(rng() % 3), {1, 1}, 3));
                } catch (const std::runtime_error&) {
                    // a random shape asked for an arity outside the alphabet
                }
                break;
            default: {
                SurfaceType s = randomSurface(rng, ProperadName::DutchM);
                out.push_back(NestedGraph::ofElement(s));
                break;
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("json round trips are byte identical on a 50-document corpus") {
    auto docs = corpus(2024, 50);
    for (const auto& x : docs) {
        std::string s1 = toJsonString(nestedToJson(x));
        NestedGraph back = nestedFromJson(Json::parse(s1));
        CHECK(nestedEqual(back, x));
        std::string s2 = toJsonString(nestedToJson(back));
        CHECK(s1 == s2);
    }
}

TEST_CASE("graph and surface round trips preserve structure exactly") {
    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        IodaGraph g = randomGraph(rng, {1 + static_cast<int>(rng() % 2), 1}, 4, 4);
        std::string s1 = toJsonString(graphToJson(g));
        IodaGraph back = graphFromJson(Json::parse(s1));
        CHECK(back == g);  // field-for-field, not just up to isomorphism
        CHECK(toJsonString(graphToJson(back)) == s1);

        SurfaceType sf = randomSurface(rng, ProperadName::Mhat);
        std::string t1 = toJsonString(surfaceToJson(sf));
        SurfaceType sback = surfaceFromJson(Json::parse(t1));
        CHECK(sback == sf);
        CHECK(toJsonString(surfaceToJson(sback)) == t1);
    }
}

TEST_CASE("rational weights survive serialization") {
    SurfaceType s = smoothSurface(1, 1, 1);
    s.marks.push_back({0, Rational(2, 3)});
    s.marks.push_back({0, Rational(0)});
    SurfaceType back = surfaceFromJson(surfaceToJson(s));
    CHECK(back == s);
    CHECK(back.marks[0].weight == Rational(2, 3));
}

TEST_CASE("malformed json documents are rejected") {
    CHECK_THROWS(graphFromJson(Json::parse(R"({"vertices": -1})")));
    CHECK_THROWS(surfaceFromJson(Json::parse(R"({"components": "x"})")));
    CHECK_THROWS(nestedFromJson(Json::parse(R"({"depth": 1})")));
}

TEST_CASE("dot output is deterministic under a fixed seed") {
    auto once = [] {
        std::string all;
        for (const auto& x : corpus(555, 10)) all += toDot(x) + "\n";
        return all;
    };
    std::string a = once();
    std::string b = once();
    CHECK(a == b);
    CHECK(a.find("digraph") != std::string::npos);

    IodaGraph g = testutil::chainShape(3);
    std::string d = toDot(g);
    CHECK(d.find("digraph") != std::string::npos);
    CHECK(toDot(g) == d);
}
