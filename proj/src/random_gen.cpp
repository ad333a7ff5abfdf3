#include "properad/random_gen.hpp"

#include <algorithm>
#include <map>

namespace properad {

namespace {

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

IodaGraph randomGraphAttempt(Rng& rng, Arity a, int maxVertices, int maxEdges) {
    IodaGraph g;
    g.nVertices = pick(rng, 1, std::max(1, maxVertices));
    // spanning tree oriented low -> high keeps the graph acyclic and connected
    for (int v = 1; v < g.nVertices; ++v) g.edges.push_back({pick(rng, 0, v - 1), v});
    int extra = pick(rng, 0, std::max(0, maxEdges - static_cast<int>(g.edges.size())));
    for (int e = 0; e < extra && g.nVertices >= 2; ++e) {
        int s = pick(rng, 0, g.nVertices - 2);
        g.edges.push_back({s, pick(rng, s + 1, g.nVertices - 1)});
    }
    for (int i = 0; i < a.in; ++i) g.inputs.push_back(pick(rng, 0, g.nVertices - 1));
    for (int o = 0; o < a.out; ++o) g.outputs.push_back(pick(rng, 0, g.nVertices - 1));
    g.inOrder.resize(g.nVertices);
    g.outOrder.resize(g.nVertices);
    for (int v = 0; v < g.nVertices; ++v) {
        std::vector<Port> in, out;
        for (size_t e = 0; e < g.edges.size(); ++e) {
            if (g.edges[e].dst == v) in.push_back({Port::Edge, static_cast<int>(e)});
            if (g.edges[e].src == v) out.push_back({Port::Edge, static_cast<int>(e)});
        }
        for (size_t i = 0; i < g.inputs.size(); ++i)
            if (g.inputs[i] == v) in.push_back({Port::Leg, static_cast<int>(i)});
        for (size_t o = 0; o < g.outputs.size(); ++o)
            if (g.outputs[o] == v) out.push_back({Port::Leg, static_cast<int>(o)});
        std::shuffle(in.begin(), in.end(), rng);
        std::shuffle(out.begin(), out.end(), rng);
        g.inOrder[v] = std::move(in);
        g.outOrder[v] = std::move(out);
    }
    return g;
}

}  // namespace

IodaGraph randomGraph(Rng& rng, Arity a, int maxVertices, int maxEdges) {
    if (a.in == 0 && a.out == 0) throw std::invalid_argument("randomGraph: arity (0,0)");
    for (int attempt = 0; attempt < 300; ++attempt) {
        IodaGraph g = randomGraphAttempt(rng, a, maxVertices, maxEdges);
        if (isValid(g)) return g;
    }
    return corolla(a);
}

namespace {

// Pool of small surfaces: at most two components, genus <= 2, <= 2 nodes,
// <= 2 circles per direction, a few mark patterns.
std::vector<SurfaceType> smallSurfacePool() {
    std::vector<SurfaceType> pool;
    pool.push_back(unitAnnulus());
    std::vector<Rational> weights = {Rational(1, 4), Rational(1, 2), Rational(1)};
    auto addMarkVariants = [&](const SurfaceType& s) {
        pool.push_back(s);
        for (const auto& w : weights) {
            SurfaceType m = s;
            m.marks.push_back({0, w});
            pool.push_back(m);
            if (s.components.size() == 2) {
                SurfaceType m2 = s;
                m2.marks.push_back({1, w});
                pool.push_back(m2);
            }
        }
    };
    for (int g = 0; g <= 2; ++g)
        for (int in = 0; in <= 2; ++in)
            for (int out = 0; out <= 2; ++out) {
                if (in + out == 0) continue;
                addMarkVariants(smoothSurface(g, in, out));
            }
    for (int in = 0; in <= 2; ++in)
        for (int out = 0; out <= 2 - in; ++out)
            if (in + out == 2) addMarkVariants(nodalAnnulus(in, out));
    // one-component self-node and two-node variants
    for (int g = 0; g <= 1; ++g)
        for (int in = 0; in <= 1; ++in)
            for (int out = 1 - in; out <= 1; ++out) {
                if (in + out == 0) continue;
                SurfaceType s = smoothSurface(g, in, out);
                s.nodes.push_back({0, 0});
                addMarkVariants(s);
            }
    // two components joined by one or two nodes
    for (int g0 = 0; g0 <= 1; ++g0)
        for (int g1 = 0; g1 <= 1; ++g1)
            for (int nn = 1; nn <= 2; ++nn)
                for (int in = 0; in <= 2; ++in)
                    for (int out = 0; out <= 2; ++out) {
                        if (in + out == 0) continue;
                        SurfaceType s;
                        s.components = {{g0}, {g1}};
                        for (int j = 0; j < nn; ++j) s.nodes.push_back({0, 1});
                        for (int i = 0; i < in; ++i) s.inputs.push_back(i % 2);
                        for (int o = 0; o < out; ++o) s.outputs.push_back(o % 2);
                        addMarkVariants(s);
                    }
    std::vector<SurfaceType> valid;
    for (const auto& s : pool)
        if (validate(s).empty()) valid.push_back(s);
    return valid;
}

const std::vector<SurfaceType>& familyPool(ProperadName name) {
    static std::map<ProperadName, std::vector<SurfaceType>> pools;
    auto it = pools.find(name);
    if (it == pools.end()) {
        static const std::vector<SurfaceType> all = smallSurfacePool();
        std::vector<SurfaceType> members;
        for (const auto& s : all)
            if (membership(s, name).member) members.push_back(s);
        it = pools.emplace(name, std::move(members)).first;
    }
    return it->second;
}

}  // namespace

SurfaceType randomSurface(Rng& rng, ProperadName name) {
    const auto& pool = familyPool(name);
    if (pool.empty()) throw std::runtime_error("empty member pool for " + properadNameToString(name));
    return pool[pick(rng, 0, static_cast<int>(pool.size()) - 1)];
}

std::optional<SurfaceType> randomSurface(Rng& rng, ProperadName name, Arity a) {
    std::vector<const SurfaceType*> match;
    for (const auto& s : familyPool(name))
        if (arity(s) == a) match.push_back(&s);
    if (match.empty()) return std::nullopt;
    return *match[pick(rng, 0, static_cast<int>(match.size()) - 1)];
}

NestedGraph randomNested(Rng& rng, int depth, Arity a, int maxVertices,
                         const std::function<Element(Rng&, Arity)>& leaf) {
    if (depth == 0) return NestedGraph::ofElement(leaf(rng, a));
    NestedGraph x;
    x.depth = depth;
    x.shape = randomGraph(rng, a, maxVertices, maxVertices + 1);
    for (int v = 0; v < x.shape.nVertices; ++v)
        x.values.push_back(randomNested(rng, depth - 1, vertexArity(x.shape, v), maxVertices, leaf));
    return x;
}

namespace {

Element randomSurfaceLeaf(Rng& rng, Arity a) {
    if (a.in + a.out == 2 && pick(rng, 0, 3) == 0) return nodalAnnulus(a.in, a.out);
    return smoothSurface(pick(rng, 0, 2), a.in, a.out);
}

NestedGraph etaTower(const Element& e, int depth) {
    NestedGraph x = NestedGraph::ofElement(e);
    for (int d = 0; d < depth; ++d) x = eta(x);
    return x;
}

}  // namespace

NestedGraph randomSurfaceSimplex(Rng& rng, int level, Arity a, int maxVertices) {
    return randomNested(rng, level + 1, a, maxVertices, randomSurfaceLeaf);
}

NestedGraph randomGroupableSimplex(Rng& rng, int level, Arity a, int maxVertices) {
    int depth = level + 1;
    NestedGraph x;
    x.depth = depth;
    x.shape = randomGraph(rng, a, maxVertices, maxVertices + 1);
    auto smoothLeaf = [](Rng& r, Arity va) -> Element {
        return smoothSurface(pick(r, 0, 2), va.in, va.out);
    };
    for (int v = 0; v < x.shape.nVertices; ++v) {
        Arity va = vertexArity(x.shape, v);
        if (va.in + va.out == 2 && va.out >= va.in && pick(rng, 0, 2) == 0)
            x.values.push_back(etaTower(nodalAnnulus(va.in, va.out), depth - 1));
        else
            x.values.push_back(randomNested(rng, depth - 1, va, maxVertices, smoothLeaf));
    }
    return x;
}

FreeProperad fullAlphabet(int maxIn, int maxOut) {
    PresentedProperad pres;
    for (int in = 0; in <= maxIn; ++in)
        for (int out = 0; out <= maxOut; ++out) {
            if (in + out == 0) continue;
            pres.alphabet.push_back(
                {{in, out}, "g" + std::to_string(in) + "_" + std::to_string(out)});
        }
    return FreeProperad(pres);
}

NestedGraph randomFreeSimplex(Rng& rng, const FreeProperad& P, int level, Arity a,
                              int maxVertices) {
    auto leaf = [&P](Rng& r, Arity va) -> Element {
        (void)r;
        for (const auto& l : P.alphabet())
            if (l.ar == va) return P.etaLabel(l);
        throw std::runtime_error("no generator of the required arity");
    };
    return randomNested(rng, level + 1, a, maxVertices, leaf);
}

ClosureReport checkClosure(ProperadName name, unsigned seed, int count) {
    ClosureReport rep;
    Rng rng(seed);
    SurfaceProperad P = surfaceProperadFor(name);
    for (int attempt = 0; attempt < 50 * count && rep.checked < count; ++attempt) {
        Arity a{pick(rng, 0, 2), pick(rng, 0, 2)};
        if (a.in + a.out == 0) a.out = 1;
        IodaGraph g = randomGraph(rng, a, 3, 4);
        std::vector<SurfaceType> leaves;
        bool ok = true;
        for (int v = 0; v < g.nVertices && ok; ++v) {
            auto s = randomSurface(rng, name, vertexArity(g, v));
            if (!s)
                ok = false;
            else
                leaves.push_back(*s);
        }
        if (!ok) continue;  // no member of some vertex arity in the pool
        ++rep.checked;
        NestedGraph x;
        x.depth = 1;
        x.shape = g;
        for (const auto& s : leaves) x.values.push_back(NestedGraph::ofElement(s));
        try {
            Element out = P.evaluate(x);
            if (!P.contains(out))
                rep.failures.push_back("composite escapes " + properadNameToString(name) + ": " +
                                       elementKey(out));
        } catch (const std::exception& e) {
            rep.failures.push_back(std::string("evaluate failed: ") + e.what());
        }
    }
    // a composition with no external boundary must be rejected
    ++rep.checked;
    IodaGraph closed;
    closed.nVertices = 2;
    closed.edges = {{0, 1}};
    closed.inOrder = {{}, {{Port::Edge, 0}}};
    closed.outOrder = {{{Port::Edge, 0}}, {}};
    try {
        glue(closed, {smoothSurface(0, 0, 1), smoothSurface(0, 1, 0)});
        rep.failures.push_back("closed composition was not rejected");
    } catch (const std::exception&) {
    }
    return rep;
}

}  // namespace properad
