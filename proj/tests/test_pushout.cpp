#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properad/pushout.hpp"
#include "properad/random_gen.hpp"
#include "test_util.hpp"

using namespace properad;

namespace {

FreeProperad alphaX() {
    return FreeProperad(PresentedProperad{{{{1, 1}, "a1"}, {{1, 1}, "a2"}, {{2, 1}, "f"}}});
}
FreeProperad alphaY() { return FreeProperad(PresentedProperad{{{{1, 1}, "b1"}, {{1, 2}, "g"}}}); }
FreeProperad alphaZ() { return FreeProperad(PresentedProperad{{{{1, 1}, "z"}}}); }

PushoutProperad makePushout() {
    GeneratorMap i{{{{1, 1}, "a1"}}};
    GeneratorMap j{{{{1, 1}, "b1"}}};
    return pushoutConstruct(alphaX(), alphaZ(), alphaY(), i, j);
}

// generator as a pushout carrier element
Element gen(const Label& l) { return Element{makeFreeElement(etaElement(Element{l}))}; }

}  // namespace

TEST_CASE("pushout alphabet and representatives") {
    PushoutProperad P = makePushout();
    CHECK(P.quotientAlphabet().size() == 4);  // {a1 ~ b1}, a2, f, g
    CHECK(P.representative({{1, 1}, "b1"}) == P.representative({{1, 1}, "a1"}));
    CHECK(P.representative({{1, 1}, "a1"}).name == "a1");  // smallest name wins
    CHECK_FALSE(P.representative({{1, 1}, "a2"}) == P.representative({{1, 1}, "a1"}));
    CHECK(P.contains(gen({{1, 1}, "b1"})));
    CHECK_FALSE(P.contains(gen({{1, 1}, "z"})));

    SUBCASE("mismatched generator map arities rejected") {
        GeneratorMap i{{{{1, 1}, "a1"}}};
        GeneratorMap j{{{{1, 2}, "g"}}};
        CHECK_THROWS(pushoutConstruct(alphaX(), alphaZ(), alphaY(), i, j));
    }
}

TEST_CASE("identified generators become equal, distinct ones stay apart") {
    PushoutProperad P = makePushout();
    Element a1 = gen({{1, 1}, "a1"});
    Element b1 = gen({{1, 1}, "b1"});
    Element a2 = gen({{1, 1}, "a2"});
    CHECK(pushoutEqual(P, a1, b1) == Verdict::Yes);
    CHECK(pushoutEqual(P, a1, a2) == Verdict::No);

    // rewriting inside a composite: f(a1, -) = f(b1, -)
    Element f = gen({{2, 1}, "f"});
    Element fa = partialCompose(P, a1, f, {{0, 0}});
    Element fb = partialCompose(P, b1, f, {{0, 0}});
    Element fa2 = partialCompose(P, a2, f, {{0, 0}});
    CHECK(pushoutEqual(P, fa, fb) == Verdict::Yes);
    CHECK(pushoutEqual(P, fa, fa2) == Verdict::No);
}

TEST_CASE("pushout equality agrees with the free properad on the quotient alphabet") {
    PushoutProperad P = makePushout();
    FreeProperad W(PresentedProperad{{{{1, 1}, "a1"}, {{1, 1}, "a2"}, {{2, 1}, "f"}, {{1, 2}, "g"}}});
    Rng rng(7);
    std::vector<Label> combined = {{{1, 1}, "a1"}, {{1, 1}, "a2"}, {{2, 1}, "f"},
                                   {{1, 1}, "b1"}, {{1, 2}, "g"}};
    std::vector<Element> elems;
    std::vector<Element> oracle;
    for (int t = 0; t < 40; ++t) {
        Arity a{1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 2)};
        IodaGraph g = randomGraph(rng, a, 3, 3);
        NestedGraph d1P, d1W;
        d1P.depth = d1W.depth = 1;
        d1P.shape = d1W.shape = g;
        bool ok = true;
        for (int v = 0; v < g.nVertices && ok; ++v) {
            Arity va = vertexArity(g, v);
            std::vector<Label> fits;
            for (const Label& l : combined)
                if (l.ar.in == va.in && l.ar.out == va.out) fits.push_back(l);
            if (fits.empty()) {
                ok = false;
                break;
            }
            Label pick = fits[rng() % fits.size()];
            d1P.values.push_back(NestedGraph::ofElement(gen(pick)));
            d1W.values.push_back(NestedGraph::ofElement(W.etaLabel(P.representative(pick))));
        }
        if (!ok) continue;
        elems.push_back(P.evaluate(d1P));
        oracle.push_back(W.evaluate(d1W));
    }
    REQUIRE(elems.size() >= 10);
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            Verdict v = pushoutEqual(P, elems[i], elems[j]);
            CHECK(v != Verdict::Unknown);
            CHECK((v == Verdict::Yes) == elementEqual(oracle[i], oracle[j]));
        }
}

TEST_CASE("budget exhaustion yields Unknown, never a wrong verdict") {
    PushoutProperad P = makePushout();
    Element f = gen({{2, 1}, "f"});
    Element b1 = gen({{1, 1}, "b1"});
    Element big = partialCompose(P, b1, f, {{0, 0}});
    big = partialCompose(P, b1, big, {{0, 0}});
    CHECK(pushoutEqual(P, big, big, 1) == Verdict::Unknown);
    CHECK(pushoutEqual(P, big, big, 0) == Verdict::Yes);  // unlimited
    auto nf = P.normalForm(b1, 1000);
    REQUIRE(nf.has_value());
    CHECK(elementEqual(*nf, *P.normalForm(gen({{1, 1}, "a1"}), 1000)));
}
