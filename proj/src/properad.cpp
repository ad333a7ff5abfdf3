#include "properad/properad.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace properad {

Element evaluateNested(const Properad& P, const NestedGraph& x) {
    if (x.depth == 0) return x.leaf;
    NestedGraph cur = x;
    while (cur.depth > 1) cur = innerEvaluate(P, cur);
    return P.evaluate(cur);
}

NestedGraph innerEvaluate(const Properad& P, const NestedGraph& x) {
    if (x.depth < 1) throw std::invalid_argument("innerEvaluate: depth must be >= 1");
    if (x.depth == 1) return NestedGraph::ofElement(P.evaluate(x));
    NestedGraph out;
    out.depth = x.depth - 1;
    out.shape = x.shape;
    out.values.reserve(x.values.size());
    for (const auto& v : x.values) out.values.push_back(innerEvaluate(P, v));
    return out;
}

FreeProperad::FreeProperad(PresentedProperad pres) : pres_(std::move(pres)) {
    std::map<std::string, Arity> seen;
    for (const auto& l : pres_.alphabet) {
        auto [it, fresh] = seen.emplace(l.name, l.ar);
        if (!fresh) throw std::invalid_argument("FreeProperad: duplicate generator name " + l.name);
        if (l.ar.in == 0 && l.ar.out == 0)
            throw std::invalid_argument("FreeProperad: generator of arity (0,0)");
    }
}

namespace {

bool labelInAlphabet(const std::vector<Label>& alphabet, const Label& l) {
    for (const auto& a : alphabet)
        if (a.name == l.name && a.ar == l.ar) return true;
    return false;
}

// A free carrier element is a depth-1 graph whose leaves are alphabet labels.
bool isFreeCarrier(const std::vector<Label>& alphabet, const Element& e) {
    const auto* fe = std::get_if<FreeElement>(&e);
    if (fe == nullptr || !fe->graph || fe->graph->depth != 1) return false;
    for (const auto& v : fe->graph->values) {
        const auto* l = std::get_if<Label>(&v.leaf);
        if (l == nullptr || !labelInAlphabet(alphabet, *l)) return false;
    }
    return true;
}

}  // namespace

bool FreeProperad::contains(const Element& e) const { return isFreeCarrier(pres_.alphabet, e); }

Element FreeProperad::etaLabel(const Label& l) const {
    if (!labelInAlphabet(pres_.alphabet, l))
        throw std::invalid_argument("etaLabel: unknown generator " + l.name);
    return makeFreeElement(etaElement(l));
}

Element FreeProperad::evaluate(const NestedGraph& x) const {
    if (x.depth != 1) throw std::invalid_argument("evaluate: expected a depth-1 value");
    requireValidNested(x);
    NestedGraph expanded;
    expanded.depth = 2;
    expanded.shape = x.shape;
    for (const auto& v : x.values) {
        if (!contains(v.leaf))
            throw std::invalid_argument("evaluate: leaf is not a free carrier element");
        expanded.values.push_back(*std::get<FreeElement>(v.leaf).graph);
    }
    NestedGraph flat = canonicalNested(flattenAt(expanded, 0));
    return makeFreeElement(flat);
}

SurfaceProperad::SurfaceProperad(std::string name, GluePolicy policy,
                                 std::optional<ProperadName> family)
    : name_(std::move(name)), policy_(policy), family_(family) {}

SurfaceProperad surfaceProperadFor(ProperadName family) {
    return SurfaceProperad(properadNameToString(family), policyFor(family), family);
}

bool SurfaceProperad::contains(const Element& e) const {
    const auto* s = std::get_if<SurfaceType>(&e);
    if (s == nullptr || !validate(*s).empty()) return false;
    if (family_) return membership(*s, *family_).member;
    return true;
}

Element SurfaceProperad::evaluate(const NestedGraph& x) const {
    if (x.depth != 1) throw std::invalid_argument("evaluate: expected a depth-1 value");
    requireValidNested(x);
    std::vector<SurfaceType> leaves;
    leaves.reserve(x.values.size());
    for (const auto& v : x.values) {
        const auto* s = std::get_if<SurfaceType>(&v.leaf);
        if (s == nullptr) throw std::invalid_argument("evaluate: leaf is not a surface");
        if (family_ && !membership(*s, *family_).member)
            throw std::invalid_argument("evaluate: leaf outside the carrier of " + name_);
        leaves.push_back(*s);
    }
    SurfaceType out = glue(x.shape, leaves, policy_).surface;
    if (family_ && !membership(out, *family_).member)
        throw std::runtime_error("evaluate: composite escapes the carrier of " + name_);
    return canonicalSurface(out);
}

Element partialCompose(const Properad& P, const Element& p, const Element& q,
                       const std::vector<std::pair<int, int>>& pairing) {
    if (pairing.empty()) throw std::invalid_argument("partialCompose: empty pairing");
    Arity ap = elementArity(p);
    Arity aq = elementArity(q);
    std::vector<int> outUsed(ap.out, -1);
    std::vector<int> inUsed(aq.in, -1);
    for (int e = 0; e < static_cast<int>(pairing.size()); ++e) {
        auto [o, i] = pairing[e];
        if (o < 0 || o >= ap.out || i < 0 || i >= aq.in)
            throw std::invalid_argument("partialCompose: pairing index out of range");
        if (outUsed[o] != -1 || inUsed[i] != -1)
            throw std::invalid_argument("partialCompose: repeated pairing index");
        outUsed[o] = e;
        inUsed[i] = e;
    }
    IodaGraph g;
    g.nVertices = 2;
    for (size_t e = 0; e < pairing.size(); ++e) g.edges.push_back({0, 1});
    g.inOrder.resize(2);
    g.outOrder.resize(2);
    // inputs: all of p's, then q's unmatched; outputs: p's unmatched, then q's
    for (int i = 0; i < ap.in; ++i) {
        g.inputs.push_back(0);
        g.inOrder[0].push_back({Port::Leg, i});
    }
    int nFreeOutP = 0;
    for (int o = 0; o < ap.out; ++o) {
        if (outUsed[o] >= 0) {
            g.outOrder[0].push_back({Port::Edge, outUsed[o]});
        } else {
            g.outOrder[0].push_back({Port::Leg, nFreeOutP});
            ++nFreeOutP;
        }
    }
    for (int o = 0; o < nFreeOutP; ++o) g.outputs.push_back(0);
    for (int i = 0; i < aq.in; ++i) {
        if (inUsed[i] >= 0) {
            g.inOrder[1].push_back({Port::Edge, inUsed[i]});
        } else {
            g.inOrder[1].push_back({Port::Leg, static_cast<int>(g.inputs.size())});
            g.inputs.push_back(1);
        }
    }
    for (int o = 0; o < aq.out; ++o) {
        g.outOrder[1].push_back({Port::Leg, static_cast<int>(g.outputs.size())});
        g.outputs.push_back(1);
    }
    requireValid(g);
    NestedGraph x;
    x.depth = 1;
    x.shape = g;
    x.values = {NestedGraph::ofElement(p), NestedGraph::ofElement(q)};
    return P.evaluate(x);
}

Element actSigma(const Properad& P, const Element& p, const std::vector<int>& sigmaIn,
                 const std::vector<int>& sigmaOut) {
    Arity a = elementArity(p);
    auto checkPerm = [](const std::vector<int>& s, int n, const char* which) {
        if (static_cast<int>(s.size()) != n)
            throw std::invalid_argument(std::string("actSigma: bad ") + which + " size");
        std::vector<bool> seen(n, false);
        for (int v : s) {
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument(std::string("actSigma: not a permutation: ") + which);
            seen[v] = true;
        }
    };
    checkPerm(sigmaIn, a.in, "sigmaIn");
    checkPerm(sigmaOut, a.out, "sigmaOut");
    IodaGraph g;
    g.nVertices = 1;
    g.inputs.assign(a.in, 0);
    g.outputs.assign(a.out, 0);
    g.inOrder.resize(1);
    g.outOrder.resize(1);
    // slot k of p attaches to global leg sigma^{-1}(k): leg j feeds slot sigma(j)
    std::vector<int> invIn(a.in), invOut(a.out);
    for (int j = 0; j < a.in; ++j) invIn[sigmaIn[j]] = j;
    for (int j = 0; j < a.out; ++j) invOut[sigmaOut[j]] = j;
    for (int k = 0; k < a.in; ++k) g.inOrder[0].push_back({Port::Leg, invIn[k]});
    for (int k = 0; k < a.out; ++k) g.outOrder[0].push_back({Port::Leg, invOut[k]});
    requireValid(g);
    NestedGraph x;
    x.depth = 1;
    x.shape = g;
    x.values = {NestedGraph::ofElement(p)};
    return P.evaluate(x);
}

NestedGraph BarComplex::face(const NestedGraph& x, int i) const {
    int n = level(x);
    if (n < 1 || n > N) throw std::invalid_argument("face: level out of range");
    if (i < 0 || i > n) throw std::invalid_argument("face: index out of range");
    if (i < n) return flattenAt(x, i);
    return innerEvaluate(*P, x);
}

NestedGraph BarComplex::degeneracy(const NestedGraph& x, int i) const {
    int n = level(x);
    if (n < 0 || n >= N) throw std::invalid_argument("degeneracy: level out of range");
    if (i < 0 || i > n) throw std::invalid_argument("degeneracy: index out of range");
    return insertAt(x, i);
}

BarComplex bar(const Properad& P, int N) {
    if (N < 0) throw std::invalid_argument("bar: negative truncation");
    return BarComplex{&P, N};
}

}  // namespace properad
