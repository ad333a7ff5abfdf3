#include "properad/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace properad {

TruncatedSimplicialObject barObject(const Properad& P, int N) {
    BarComplex B = bar(P, N);
    TruncatedSimplicialObject S;
    S.N = N;
    S.level = [](const NestedGraph& x) { return x.depth - 1; };
    S.face = [B](const NestedGraph& x, int i) { return B.face(x, i); };
    S.degeneracy = [B](const NestedGraph& x, int i) { return B.degeneracy(x, i); };
    S.key = [](const NestedGraph& x) { return nestedKey(x); };
    return S;
}

namespace {

std::string witnessOf(const TruncatedSimplicialObject& S, const NestedGraph& x,
                      const std::string& detail) {
    return detail + " at " + S.key(x);
}

bool same(const TruncatedSimplicialObject& S, const NestedGraph& a, const NestedGraph& b) {
    return S.key(a) == S.key(b);
}

}  // namespace

SuiteReport checkSimplicialIdentities(const TruncatedSimplicialObject& S,
                                      const std::vector<NestedGraph>& samples) {
    SuiteReport rep;
    auto fail = [&](const std::string& id, const NestedGraph& x, int i, int j) {
        rep.failures.push_back(
            {id, witnessOf(S, x, "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")")});
    };
    for (const auto& x : samples) {
        int n = S.level(x);
        if (n >= 2) {
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    ++rep.checked;
                    if (!same(S, S.face(S.face(x, j), i), S.face(S.face(x, i), j - 1)))
                        fail("d_i d_j = d_{j-1} d_i", x, i, j);
                }
        }
        if (n + 1 <= S.N) {
            for (int j = 0; j <= n; ++j) {
                NestedGraph y = S.degeneracy(x, j);
                for (int i = 0; i <= n + 1; ++i) {
                    ++rep.checked;
                    if (i == j || i == j + 1) {
                        if (!same(S, S.face(y, i), x)) fail("d_i s_j = id", x, i, j);
                    } else if (i < j) {
                        if (!same(S, S.face(y, i), S.degeneracy(S.face(x, i), j - 1)))
                            fail("d_i s_j = s_{j-1} d_i", x, i, j);
                    } else {
                        if (!same(S, S.face(y, i), S.degeneracy(S.face(x, i - 1), j)))
                            fail("d_i s_j = s_j d_{i-1}", x, i, j);
                    }
                }
            }
        }
        if (n + 2 <= S.N) {
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i) {
                    ++rep.checked;
                    if (!same(S, S.degeneracy(S.degeneracy(x, j), i),
                              S.degeneracy(S.degeneracy(x, i), j + 1)))
                        fail("s_i s_j = s_{j+1} s_i", x, i, j);
                }
        }
    }
    return rep;
}

bool isLatching(const TruncatedSimplicialObject& S, const NestedGraph& x) {
    int n = S.level(x);
    for (int i = 0; i <= n - 1; ++i)
        if (same(S, S.degeneracy(S.face(x, i), i), x)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// quotient / induced machinery shared by the contractions and the cut map

namespace {

// Attachment: a port of a depth-1 shape identified by (vertex, side, position
// in that vertex's local order); side 0 is the input side, 1 the output side.
struct Att {
    int vert = 0;
    int side = 0;
    int pos = 0;
};

std::tuple<int, int, int> attKey(const Att& a) { return {a.vert, a.side, a.pos}; }

const Port& portAt(const IodaGraph& g, const Att& a) {
    return (a.side == 0 ? g.inOrder[a.vert] : g.outOrder[a.vert])[a.pos];
}

int posOfPort(const IodaGraph& g, int vert, int side, Port p) {
    const auto& ord = side == 0 ? g.inOrder[vert] : g.outOrder[vert];
    for (size_t i = 0; i < ord.size(); ++i)
        if (ord[i].kind == p.kind && ord[i].index == p.index) return static_cast<int>(i);
    throw std::logic_error("port not found in a local order");
}

// Induced sub-value over a vertex subset whose leg order is dictated by
// explicit attachment lists: input leg q of the result is the port at
// inAtt[q], and likewise for outputs. Every external port of the subset must
// be listed exactly once.
NestedGraph inducedSpec(const NestedGraph& x, const std::vector<int>& verts,
                        const std::vector<Att>& inAtt, const std::vector<Att>& outAtt) {
    const IodaGraph& g = x.shape;
    std::vector<int> newIndex(g.nVertices, -1);
    for (size_t k = 0; k < verts.size(); ++k) newIndex[verts[k]] = static_cast<int>(k);
    IodaGraph h;
    h.nVertices = static_cast<int>(verts.size());
    std::vector<int> edgeMap(g.edges.size(), -1);
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (newIndex[g.edges[e].src] >= 0 && newIndex[g.edges[e].dst] >= 0) {
            edgeMap[e] = static_cast<int>(h.edges.size());
            h.edges.push_back({newIndex[g.edges[e].src], newIndex[g.edges[e].dst]});
        }
    std::map<std::tuple<int, int, int>, Port> legAt;
    h.inputs.resize(inAtt.size());
    for (size_t q = 0; q < inAtt.size(); ++q) {
        if (newIndex[inAtt[q].vert] < 0 ||
            !legAt.emplace(attKey(inAtt[q]), Port{Port::Leg, static_cast<int>(q)}).second)
            throw std::runtime_error("bad input leg list for an induced sub-value");
        h.inputs[q] = newIndex[inAtt[q].vert];
    }
    h.outputs.resize(outAtt.size());
    for (size_t q = 0; q < outAtt.size(); ++q) {
        if (newIndex[outAtt[q].vert] < 0 ||
            !legAt.emplace(attKey(outAtt[q]), Port{Port::Leg, static_cast<int>(q)}).second)
            throw std::runtime_error("bad output leg list for an induced sub-value");
        h.outputs[q] = newIndex[outAtt[q].vert];
    }
    size_t used = 0;
    h.inOrder.resize(h.nVertices);
    h.outOrder.resize(h.nVertices);
    for (int k = 0; k < h.nVertices; ++k) {
        int v = verts[k];
        for (size_t pos = 0; pos < g.inOrder[v].size(); ++pos) {
            const Port& p = g.inOrder[v][pos];
            if (p.kind == Port::Edge && edgeMap[p.index] >= 0) {
                h.inOrder[k].push_back({Port::Edge, edgeMap[p.index]});
            } else {
                auto it = legAt.find(attKey({v, 0, static_cast<int>(pos)}));
                if (it == legAt.end())
                    throw std::runtime_error("external port not covered by the leg lists");
                h.inOrder[k].push_back(it->second);
                ++used;
            }
        }
        for (size_t pos = 0; pos < g.outOrder[v].size(); ++pos) {
            const Port& p = g.outOrder[v][pos];
            if (p.kind == Port::Edge && edgeMap[p.index] >= 0) {
                h.outOrder[k].push_back({Port::Edge, edgeMap[p.index]});
            } else {
                auto it = legAt.find(attKey({v, 1, static_cast<int>(pos)}));
                if (it == legAt.end())
                    throw std::runtime_error("external port not covered by the leg lists");
                h.outOrder[k].push_back(it->second);
                ++used;
            }
        }
    }
    if (used != inAtt.size() + outAtt.size())
        throw std::runtime_error("leg lists mention ports that are not external");
    requireValid(h, false);
    NestedGraph out;
    out.depth = x.depth;
    out.shape = std::move(h);
    for (int v : verts) out.values.push_back(x.values[v]);
    return out;
}

// Quotient of the scope (the union of the classes) with one vertex per class.
// Vertex local orders are the per-class attachment lists; global legs are the
// scope lists, so leg q of the quotient is the port at inSpec[q] / outSpec[q].
IodaGraph quotientShape(const IodaGraph& g, const std::vector<std::vector<int>>& members,
                        const std::vector<std::vector<Att>>& inAtt,
                        const std::vector<std::vector<Att>>& outAtt,
                        const std::vector<Att>& inSpec, const std::vector<Att>& outSpec) {
    int nClasses = static_cast<int>(members.size());
    std::vector<int> classOf(g.nVertices, -1);
    for (int c = 0; c < nClasses; ++c)
        for (int v : members[c]) classOf[v] = c;
    IodaGraph h;
    h.nVertices = nClasses;
    std::vector<int> edgeMap(g.edges.size(), -1);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        int a = classOf[g.edges[e].src], b = classOf[g.edges[e].dst];
        if (a >= 0 && b >= 0 && a != b) {
            edgeMap[e] = static_cast<int>(h.edges.size());
            h.edges.push_back({a, b});
        }
    }
    std::map<std::tuple<int, int, int>, Port> legAt;
    for (size_t q = 0; q < inSpec.size(); ++q)
        if (!legAt.emplace(attKey(inSpec[q]), Port{Port::Leg, static_cast<int>(q)}).second)
            throw std::runtime_error("scope leg listed twice");
    std::map<std::tuple<int, int, int>, Port> legAtOut;
    for (size_t q = 0; q < outSpec.size(); ++q)
        if (!legAtOut.emplace(attKey(outSpec[q]), Port{Port::Leg, static_cast<int>(q)}).second)
            throw std::runtime_error("scope leg listed twice");
    h.inputs.assign(inSpec.size(), -1);
    h.outputs.assign(outSpec.size(), -1);
    h.inOrder.resize(nClasses);
    h.outOrder.resize(nClasses);
    std::set<std::tuple<int, int, int>> seen;
    for (int c = 0; c < nClasses; ++c) {
        for (const Att& a : inAtt[c]) {
            if (a.side != 0 || classOf[a.vert] != c || !seen.insert(attKey(a)).second)
                throw std::runtime_error("bad attachment in a class order");
            const Port& p = portAt(g, a);
            if (p.kind == Port::Edge && edgeMap[p.index] >= 0) {
                h.inOrder[c].push_back({Port::Edge, edgeMap[p.index]});
            } else {
                auto it = legAt.find(attKey(a));
                if (it == legAt.end())
                    throw std::runtime_error("class attachment is not a scope leg");
                h.inOrder[c].push_back(it->second);
                h.inputs[it->second.index] = c;
            }
        }
        for (const Att& a : outAtt[c]) {
            if (a.side != 1 || classOf[a.vert] != c || !seen.insert(attKey(a)).second)
                throw std::runtime_error("bad attachment in a class order");
            const Port& p = portAt(g, a);
            if (p.kind == Port::Edge && edgeMap[p.index] >= 0) {
                h.outOrder[c].push_back({Port::Edge, edgeMap[p.index]});
            } else {
                auto it = legAtOut.find(attKey(a));
                if (it == legAtOut.end())
                    throw std::runtime_error("class attachment is not a scope leg");
                h.outOrder[c].push_back(it->second);
                h.outputs[it->second.index] = c;
            }
        }
    }
    for (int v : h.inputs)
        if (v < 0) throw std::runtime_error("scope input leg not attached");
    for (int v : h.outputs)
        if (v < 0) throw std::runtime_error("scope output leg not attached");
    // every external port of the scope must appear in exactly one class order
    for (int c = 0; c < nClasses; ++c)
        for (int v : members[c]) {
            for (size_t pos = 0; pos < g.inOrder[v].size(); ++pos) {
                const Port& p = g.inOrder[v][pos];
                bool internal = p.kind == Port::Edge && classOf[g.edges[p.index].src] == c &&
                                classOf[g.edges[p.index].dst] == c;
                if (!internal && seen.count(attKey({v, 0, static_cast<int>(pos)})) == 0)
                    throw std::runtime_error("external port missing from its class order");
            }
            for (size_t pos = 0; pos < g.outOrder[v].size(); ++pos) {
                const Port& p = g.outOrder[v][pos];
                bool internal = p.kind == Port::Edge && classOf[g.edges[p.index].src] == c &&
                                classOf[g.edges[p.index].dst] == c;
                if (!internal && seen.count(attKey({v, 1, static_cast<int>(pos)})) == 0)
                    throw std::runtime_error("external port missing from its class order");
            }
        }
    requireValid(h, false);
    return h;
}

// Regroup the top vertices of x by their piece in the composed surface. The
// quotient vertex orders follow the refinement convention: boundary circles of
// the composite in their global order first, then node circles by (node,
// half), where the half order is the port order of the vertex carrying the
// node. Node pieces keep their single vertex's order verbatim.
NestedGraph regroupByPiece(const NestedGraph& x, const std::vector<int>& piece, int nComps) {
    const IodaGraph& g = x.shape;
    std::map<int, int> compact;
    for (int v = 0; v < g.nVertices; ++v) compact.emplace(piece[v], 0);
    int nClasses = 0;
    std::vector<int> pieceOfClass;
    for (auto& [p, id] : compact) {
        id = nClasses++;
        pieceOfClass.push_back(p);
    }
    std::vector<std::vector<int>> members(nClasses);
    std::vector<int> classOf(g.nVertices);
    for (int v = 0; v < g.nVertices; ++v) {
        classOf[v] = compact[piece[v]];
        members[classOf[v]].push_back(v);
    }
    std::vector<int> nodeClasses;
    for (int c = 0; c < nClasses; ++c)
        if (pieceOfClass[c] >= nComps) {
            if (members[c].size() != 1)
                throw std::runtime_error("node piece carried by more than one vertex");
            nodeClasses.push_back(c);
        }
    std::vector<std::vector<Att>> inAtt(nClasses), outAtt(nClasses);
    for (int c = 0; c < nClasses; ++c) {
        if (pieceOfClass[c] >= nComps) {
            int t = members[c][0];
            for (size_t pos = 0; pos < g.inOrder[t].size(); ++pos)
                inAtt[c].push_back({t, 0, static_cast<int>(pos)});
            for (size_t pos = 0; pos < g.outOrder[t].size(); ++pos)
                outAtt[c].push_back({t, 1, static_cast<int>(pos)});
            continue;
        }
        for (size_t q = 0; q < g.inputs.size(); ++q)
            if (classOf[g.inputs[q]] == c)
                inAtt[c].push_back(
                    {g.inputs[q], 0, posOfPort(g, g.inputs[q], 0, {Port::Leg, static_cast<int>(q)})});
        for (int d : nodeClasses) {
            int t = members[d][0];
            for (const Port& p : g.outOrder[t])
                if (p.kind == Port::Edge && classOf[g.edges[p.index].dst] == c) {
                    int dv = g.edges[p.index].dst;
                    inAtt[c].push_back({dv, 0, posOfPort(g, dv, 0, p)});
                }
        }
        for (size_t q = 0; q < g.outputs.size(); ++q)
            if (classOf[g.outputs[q]] == c)
                outAtt[c].push_back({g.outputs[q], 1,
                                     posOfPort(g, g.outputs[q], 1, {Port::Leg, static_cast<int>(q)})});
        for (int d : nodeClasses) {
            int t = members[d][0];
            for (const Port& p : g.inOrder[t])
                if (p.kind == Port::Edge && classOf[g.edges[p.index].src] == c) {
                    int sv = g.edges[p.index].src;
                    outAtt[c].push_back({sv, 1, posOfPort(g, sv, 1, p)});
                }
        }
    }
    std::vector<Att> inSpec, outSpec;
    for (size_t q = 0; q < g.inputs.size(); ++q)
        inSpec.push_back(
            {g.inputs[q], 0, posOfPort(g, g.inputs[q], 0, {Port::Leg, static_cast<int>(q)})});
    for (size_t q = 0; q < g.outputs.size(); ++q)
        outSpec.push_back(
            {g.outputs[q], 1, posOfPort(g, g.outputs[q], 1, {Port::Leg, static_cast<int>(q)})});
    NestedGraph out;
    out.depth = x.depth + 1;
    out.shape = quotientShape(g, members, inAtt, outAtt, inSpec, outSpec);
    for (int c = 0; c < nClasses; ++c)
        out.values.push_back(inducedSpec(x, members[c], inAtt[c], outAtt[c]));
    return out;
}

const SurfaceType& leafSurface(const NestedGraph& v) {
    const auto* s = std::get_if<SurfaceType>(&v.leaf);
    if (s == nullptr) throw std::invalid_argument("expected surface leaves");
    if (s->unitFlag) throw std::invalid_argument("unit annulus not supported here");
    return *s;
}

bool isNodalAnnulusType(const SurfaceType& s) {
    return s.components.size() == 2 && s.nodes.size() == 1 && s.marks.empty() &&
           s.components[0].genus == 0 && s.components[1].genus == 0 &&
           static_cast<int>(s.inputs.size() + s.outputs.size()) == 2 &&
           s.nodes[0].a != s.nodes[0].b;
}

// Composed surfaces of the top vertices and their piece in the composite:
// piece ids are the components of sigma followed by its nodes.
struct TopGrouping {
    SurfaceType sigma;
    std::vector<int> piece;  // top vertex -> piece of sigma
};

SurfaceType rawEval(const NestedGraph& x) {
    if (x.depth == 0) return leafSurface(x);
    std::vector<SurfaceType> parts;
    for (const auto& v : x.values) parts.push_back(rawEval(v));
    return glue(x.shape, parts).surface;
}

TopGrouping topGrouping(const NestedGraph& x) {
    if (x.depth < 1) throw std::invalid_argument("grouping needs depth >= 1");
    std::vector<SurfaceType> parts;
    for (const auto& v : x.values) parts.push_back(rawEval(v));
    GlueResult gr = glue(x.shape, parts);
    TopGrouping t;
    t.sigma = gr.surface;
    int nc = static_cast<int>(gr.surface.components.size());
    t.piece.assign(x.shape.nVertices, -1);
    for (int v = 0; v < x.shape.nVertices; ++v) {
        if (isNodalAnnulusType(parts[v])) {
            t.piece[v] = nc + gr.nodeOf[v][0];
        } else if (parts[v].nodes.empty()) {
            t.piece[v] = gr.componentOf[v][0];
        } else {
            throw std::invalid_argument("grouping undefined: a vertex composes to a nodal surface");
        }
    }
    return t;
}

}  // namespace

ContractionData etaContraction() {
    return {"eta", [](const NestedGraph& x) { return eta(x); }};
}

ContractionData groupedContraction() {
    return {"grouped", [](const NestedGraph& x) {
                TopGrouping t = topGrouping(x);
                return regroupByPiece(x, t.piece, static_cast<int>(t.sigma.components.size()));
            }};
}

SuiteReport checkContraction(const TruncatedSimplicialObject& S, const ContractionData& C,
                             const std::vector<NestedGraph>& samples) {
    SuiteReport rep;
    auto fail = [&](const std::string& id, const NestedGraph& x, int i) {
        rep.failures.push_back({id, witnessOf(S, x, "(i=" + std::to_string(i) + ")")});
    };
    for (const auto& x : samples) {
        int n = S.level(x);
        if (n > S.N - 1) continue;
        NestedGraph sx = C.sMinus1(x);
        ++rep.checked;
        if (!same(S, S.face(sx, 0), x)) fail("d_0 s_{-1} = id", x, 0);
        for (int i = 0; i <= n && n >= 1; ++i) {
            ++rep.checked;
            if (!same(S, S.face(sx, i + 1), C.sMinus1(S.face(x, i))))
                fail("d_{i+1} s_{-1} = s_{-1} d_i", x, i);
        }
        if (n + 2 <= S.N) {
            for (int j = 0; j <= n; ++j) {
                ++rep.checked;
                if (!same(S, S.degeneracy(sx, j + 1), C.sMinus1(S.degeneracy(x, j))))
                    fail("s_{j+1} s_{-1} = s_{-1} s_j", x, j);
            }
        }
        if (n == 0) {
            // augmentation eps = d_1 s_{-1} is idempotent on level 0
            NestedGraph eps = S.face(sx, 1);
            ++rep.checked;
            if (!same(S, S.face(C.sMinus1(eps), 1), eps)) fail("eps eps = eps", x, 0);
        }
    }
    return rep;
}

NestedGraph psi(const TruncatedSimplicialObject& S, const ContractionData& C,
                const NestedGraph& x, int i) {
    int n = S.level(x);
    if (i < 0 || i > n) throw std::invalid_argument("psi: index out of range");
    NestedGraph cur = x;
    for (int k = 0; k < i; ++k) cur = S.face(cur, 0);
    cur = C.sMinus1(cur);
    for (int k = 0; k < i; ++k) cur = S.degeneracy(cur, 0);
    return cur;
}

SuiteReport checkPsiSuite(const TruncatedSimplicialObject& S, const ContractionData& C,
                          const std::vector<NestedGraph>& samples) {
    SuiteReport rep;
    auto fail = [&](const std::string& id, const NestedGraph& x, int i, int j) {
        rep.failures.push_back(
            {id, witnessOf(S, x, "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")")});
    };
    for (const auto& x : samples) {
        int n = S.level(x);
        if (n > S.N - 1) continue;
        ++rep.checked;
        if (!same(S, S.face(psi(S, C, x, 0), 0), x)) fail("d_0 psi_0 = id", x, 0, 0);
        for (int j = 0; j <= n; ++j) {
            NestedGraph pj = psi(S, C, x, j);
            if (j < n) {
                ++rep.checked;
                if (!same(S, S.face(pj, j + 1), S.face(psi(S, C, x, j + 1), j + 1)))
                    fail("d_{j+1} psi_j = d_{j+1} psi_{j+1}", x, j + 1, j);
            }
            for (int i = 0; i <= n + 1 && n >= 1; ++i) {
                if (i < j) {
                    ++rep.checked;
                    if (!same(S, S.face(pj, i), psi(S, C, S.face(x, i), j - 1)))
                        fail("d_i psi_j = psi_{j-1} d_i", x, i, j);
                } else if (i > j + 1) {
                    ++rep.checked;
                    if (!same(S, S.face(pj, i), psi(S, C, S.face(x, i - 1), j)))
                        fail("d_i psi_j = psi_j d_{i-1}", x, i, j);
                }
            }
            if (n + 2 <= S.N) {
                for (int i = 0; i <= n; ++i) {
                    ++rep.checked;
                    if (i <= j) {
                        if (!same(S, S.degeneracy(pj, i), psi(S, C, S.degeneracy(x, i), j + 1)))
                            fail("s_i psi_j = psi_{j+1} s_i", x, i, j);
                    } else {
                        if (!same(S, S.degeneracy(pj, i), psi(S, C, S.degeneracy(x, i - 1), j)))
                            fail("s_i psi_j = psi_j s_{i-1}", x, i, j);
                    }
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// node-cut refinement and the cut map

NestedGraph nodeCutRefine(const SurfaceType& s) {
    requireValid(s);
    if (s.unitFlag) throw std::invalid_argument("nodeCutRefine: unit annulus");
    int nc = static_cast<int>(s.components.size());
    int nn = static_cast<int>(s.nodes.size());
    IodaGraph g;
    g.nVertices = nc + nn;
    g.inOrder.resize(g.nVertices);
    g.outOrder.resize(g.nVertices);
    // edge 2j goes to the component of node j's first half, 2j+1 to the second
    for (int j = 0; j < nn; ++j) {
        g.edges.push_back({nc + j, s.nodes[j].a});
        g.edges.push_back({nc + j, s.nodes[j].b});
        g.outOrder[nc + j] = {{Port::Edge, 2 * j}, {Port::Edge, 2 * j + 1}};
    }
    std::vector<SurfaceType> parts(nc);
    for (int c = 0; c < nc; ++c) parts[c].components = {{s.components[c].genus}};
    for (size_t i = 0; i < s.inputs.size(); ++i) {
        int c = s.inputs[i];
        g.inputs.push_back(c);
        g.inOrder[c].push_back({Port::Leg, static_cast<int>(i)});
        parts[c].inputs.push_back(0);
    }
    for (int j = 0; j < nn; ++j)
        for (int half = 0; half < 2; ++half) {
            int c = half == 0 ? s.nodes[j].a : s.nodes[j].b;
            g.inOrder[c].push_back({Port::Edge, 2 * j + half});
            parts[c].inputs.push_back(0);
        }
    for (size_t i = 0; i < s.outputs.size(); ++i) {
        int c = s.outputs[i];
        g.outputs.push_back(c);
        g.outOrder[c].push_back({Port::Leg, static_cast<int>(i)});
        parts[c].outputs.push_back(0);
    }
    for (const auto& m : s.marks) parts[m.component].marks.push_back({0, m.weight});
    NestedGraph out;
    out.depth = 1;
    out.shape = std::move(g);
    for (int c = 0; c < nc; ++c) out.values.push_back(NestedGraph::ofElement(parts[c]));
    for (int j = 0; j < nn; ++j) out.values.push_back(NestedGraph::ofElement(nodalAnnulus(0, 2)));
    requireValidNested(out);
    return out;
}

RefinementOracle nodeCutOracle() {
    return {"node-cut", [](const SurfaceType& s) { return nodeCutRefine(s); }};
}

namespace {

// Full flattening with the tree of proper subvalue positions ("regions").
struct RegionInfo {
    int level = 0;
    NestedGraph value;
    int offset = 0;  // first flat vertex of the region
    int count = 0;
};

struct Flattened {
    NestedGraph flat;  // depth 1
    std::vector<RegionInfo> regions;
    std::vector<std::vector<int>> regionOf;  // [flat vertex][level] -> region id
};

Flattened flattenWithRegions(const NestedGraph& x) {
    Flattened out;
    if (x.depth == 1) {
        out.flat = x;
        out.regionOf.assign(x.shape.nVertices, {});
        return out;
    }
    std::vector<Flattened> subs;
    std::vector<IodaGraph> shapes;
    for (const auto& v : x.values) {
        subs.push_back(flattenWithRegions(v));
        shapes.push_back(subs.back().flat.shape);
    }
    GraftResult gr = graft(x.shape, shapes);
    out.flat.depth = 1;
    out.flat.shape = gr.graph;
    out.flat.values.resize(gr.origin.size());
    out.regionOf.resize(gr.origin.size());
    std::vector<int> topRegion(x.values.size());
    std::vector<int> regionBase(x.values.size());
    int offset = 0;
    for (size_t v = 0; v < x.values.size(); ++v) {
        topRegion[v] = static_cast<int>(out.regions.size());
        out.regions.push_back({0, x.values[v], offset, subs[v].flat.shape.nVertices});
        regionBase[v] = static_cast<int>(out.regions.size());
        for (const auto& r : subs[v].regions)
            out.regions.push_back({r.level + 1, r.value, r.offset + offset, r.count});
        offset += subs[v].flat.shape.nVertices;
    }
    for (size_t nw = 0; nw < gr.origin.size(); ++nw) {
        auto [v, w] = gr.origin[nw];
        out.flat.values[nw] = subs[v].flat.values[w];
        std::vector<int>& path = out.regionOf[nw];
        path.push_back(topRegion[v]);
        for (int rid : subs[v].regionOf[w]) path.push_back(regionBase[v] + rid);
    }
    return out;
}

// Raw evaluation with component and node provenance for all innermost
// vertices, enumerated in flattening order.
struct EvalProv {
    SurfaceType sigma;
    std::vector<std::vector<int>> compOf;
    std::vector<std::vector<int>> nodeOf;
};

EvalProv evalProv(const NestedGraph& x) {
    EvalProv out;
    if (x.depth == 1) {
        std::vector<SurfaceType> leaves;
        for (const auto& v : x.values) leaves.push_back(leafSurface(v));
        GlueResult gr = glue(x.shape, leaves);
        out.sigma = gr.surface;
        out.compOf = gr.componentOf;
        out.nodeOf = gr.nodeOf;
        return out;
    }
    std::vector<EvalProv> subs;
    std::vector<SurfaceType> sigmas;
    for (const auto& v : x.values) {
        subs.push_back(evalProv(v));
        sigmas.push_back(subs.back().sigma);
    }
    GlueResult gr = glue(x.shape, sigmas);
    out.sigma = gr.surface;
    for (size_t v = 0; v < x.values.size(); ++v) {
        for (size_t w = 0; w < subs[v].compOf.size(); ++w) {
            std::vector<int> comps, nodes;
            for (int c : subs[v].compOf[w]) comps.push_back(gr.componentOf[v][c]);
            for (int n : subs[v].nodeOf[w]) nodes.push_back(gr.nodeOf[v][n]);
            out.compOf.push_back(std::move(comps));
            out.nodeOf.push_back(std::move(nodes));
        }
    }
    return out;
}

struct CutContext {
    const RefinementOracle* oracle = nullptr;

    NestedGraph refineChecked(const SurfaceType& s) const {
        SurfaceType cs = canonicalSurface(s);
        NestedGraph r = oracle->refine(s);
        std::vector<SurfaceType> leaves;
        for (const auto& v : r.values) leaves.push_back(leafSurface(v));
        SurfaceType back = glue(r.shape, leaves).surface;
        if (canonicalSurfaceKey(back) != canonicalSurfaceKey(cs))
            throw CutError("refinement does not evaluate back to the surface",
                           canonicalSurfaceKey(cs));
        if (r.shape.nVertices != static_cast<int>(s.components.size() + s.nodes.size()))
            throw CutError("refinement does not factor through the vertex-wise pieces",
                           canonicalSurfaceKey(cs));
        for (size_t u = 0; u < s.components.size(); ++u)
            if (!leafSurface(r.values[u]).nodes.empty())
                throw CutError("refinement piece " + std::to_string(u) + " is not smooth",
                               canonicalSurfaceKey(cs));
        for (size_t u = s.components.size(); u < r.values.size(); ++u)
            if (!isNodalAnnulusType(leafSurface(r.values[u])))
                throw CutError("refinement piece " + std::to_string(u) + " is not a nodal annulus",
                               canonicalSurfaceKey(cs));
        return r;
    }
};

struct CutResult {
    NestedGraph value;              // same depth as the input
    std::vector<int> topPiece;      // top vertex -> piece of sigma
    SurfaceType sigma;
};

CutResult cutImpl(const CutContext& ctx, const NestedGraph& x) {
    int k = x.depth;
    if (k < 1) throw std::invalid_argument("cut: depth must be >= 1");
    Flattened fl = flattenWithRegions(x);
    int nF = fl.flat.shape.nVertices;

    // refine every innermost leaf
    std::vector<NestedGraph> refines;
    std::vector<IodaGraph> shapes;
    for (int w = 0; w < nF; ++w) {
        refines.push_back(ctx.refineChecked(leafSurface(fl.flat.values[w])));
        shapes.push_back(refines.back().shape);
    }
    GraftResult gr = graft(fl.flat.shape, shapes);
    NestedGraph frag;
    frag.depth = 1;
    frag.shape = gr.graph;
    frag.values.resize(gr.origin.size());
    for (size_t f = 0; f < gr.origin.size(); ++f)
        frag.values[f] = refines[gr.origin[f].first].values[gr.origin[f].second];
    const IodaGraph& FS = frag.shape;

    // flat port -> fragment attachment; positions survive the refining graft
    std::vector<std::vector<Att>> flatIn(nF), flatOut(nF);
    for (int w = 0; w < nF; ++w) {
        const IodaGraph& rs = refines[w].shape;
        flatIn[w].resize(rs.inputs.size());
        for (size_t p = 0; p < rs.inputs.size(); ++p) {
            int u = rs.inputs[p];
            flatIn[w][p] = {gr.vertexOf[w][u], 0,
                            posOfPort(rs, u, 0, {Port::Leg, static_cast<int>(p)})};
        }
        flatOut[w].resize(rs.outputs.size());
        for (size_t p = 0; p < rs.outputs.size(); ++p) {
            int u = rs.outputs[p];
            flatOut[w][p] = {gr.vertexOf[w][u], 1,
                             posOfPort(rs, u, 1, {Port::Leg, static_cast<int>(p)})};
        }
    }

    // boundary circles of every region as fragment attachments, ordered as the
    // region's external legs (= the circles of its composed surface)
    int nRegions = static_cast<int>(fl.regions.size());
    std::vector<std::vector<Att>> regIn(nRegions), regOut(nRegions);
    for (int rid = 0; rid < nRegions; ++rid) {
        const RegionInfo& r = fl.regions[rid];
        NestedGraph sub = flattenWithRegions(r.value).flat;
        const IodaGraph& rs = sub.shape;
        for (size_t q = 0; q < rs.inputs.size(); ++q) {
            int wp = rs.inputs[q];
            int pos = posOfPort(rs, wp, 0, {Port::Leg, static_cast<int>(q)});
            regIn[rid].push_back(flatIn[r.offset + wp][pos]);
        }
        for (size_t q = 0; q < rs.outputs.size(); ++q) {
            int wp = rs.outputs[q];
            int pos = posOfPort(rs, wp, 1, {Port::Leg, static_cast<int>(q)});
            regOut[rid].push_back(flatOut[r.offset + wp][pos]);
        }
    }

    // piece of each fragment at each region level, plus the global level
    int nFrag = static_cast<int>(gr.origin.size());
    std::vector<std::vector<int>> pieceAt(nFrag, std::vector<int>(k, -1));
    std::vector<int> regionNc(nRegions, 0), regionNn(nRegions, 0);
    auto assign = [&](const EvalProv& ep, int offset, int count, int level) {
        NestedGraph ref = ctx.refineChecked(ep.sigma);
        // cross-check the oracle's pieces against the glued components
        for (size_t c = 0; c < ep.sigma.components.size(); ++c) {
            int circles = boundaryCount(ep.sigma, static_cast<int>(c)) +
                          nodeHalfCount(ep.sigma, static_cast<int>(c));
            const SurfaceType& got = leafSurface(ref.values[c]);
            if (got.components.size() != 1 ||
                got.components[0].genus != ep.sigma.components[c].genus ||
                static_cast<int>(got.inputs.size() + got.outputs.size()) != circles)
                throw CutError("refinement pieces disagree with the glued components",
                               canonicalSurfaceKey(ep.sigma));
        }
        int nc = static_cast<int>(ep.sigma.components.size());
        for (int f = 0; f < nFrag; ++f) {
            int w = gr.origin[f].first;
            if (w < offset || w >= offset + count) continue;
            int u = gr.origin[f].second;
            const SurfaceType& leaf = leafSurface(fl.flat.values[w]);
            int lc = static_cast<int>(leaf.components.size());
            if (u < lc)
                pieceAt[f][level] = ep.compOf[w - offset][u];
            else
                pieceAt[f][level] = nc + ep.nodeOf[w - offset][u - lc];
        }
    };
    EvalProv top = evalProv(x);
    assign(top, 0, nF, 0);
    for (int rid = 0; rid < nRegions; ++rid) {
        const RegionInfo& r = fl.regions[rid];
        EvalProv ep = evalProv(r.value);
        assign(ep, r.offset, r.count, r.level + 1);
        regionNc[rid] = static_cast<int>(ep.sigma.components.size());
        regionNn[rid] = static_cast<int>(ep.sigma.nodes.size());
    }

    std::string topKey = canonicalSurfaceKey(top.sigma);
    // the single fragment carrying a given node piece of a region
    auto annulusFrag = [&](int level, int region, int nodePiece) -> int {
        for (int f = 0; f < nFrag; ++f)
            if (fl.regionOf[gr.origin[f].first][level] == region &&
                pieceAt[f][level + 1] == nodePiece)
                return f;
        throw CutError("missing annulus fragment for a node", topKey);
    };

    // nesting levels of the result: level i groups by (region at i, piece).
    // Class vertex orders follow the refinement convention: region circles in
    // the region's boundary order, then node circles by (node, half); node
    // pieces keep their annulus fragment's ports verbatim.
    std::function<NestedGraph(int, const std::vector<int>&, const std::vector<Att>&,
                              const std::vector<Att>&)>
        assemble = [&](int level, const std::vector<int>& frags, const std::vector<Att>& inSpec,
                       const std::vector<Att>& outSpec) -> NestedGraph {
        try {
            if (level == k - 1) return inducedSpec(frag, frags, inSpec, outSpec);
            std::map<std::pair<int, int>, std::vector<int>> classes;
            for (int f : frags)
                classes[{fl.regionOf[gr.origin[f].first][level], pieceAt[f][level + 1]}].push_back(
                    f);
            int nClasses = static_cast<int>(classes.size());
            std::vector<std::vector<int>> members;
            std::vector<std::vector<Att>> inAtt(nClasses), outAtt(nClasses);
            int cid = 0;
            for (auto& [key, mem] : classes) {
                auto [rho, pi] = key;
                members.push_back(mem);
                std::vector<char> inClass(nFrag, 0);
                for (int f : mem) inClass[f] = 1;
                if (pi >= regionNc[rho]) {
                    if (mem.size() != 1) throw CutError("node piece split across fragments", topKey);
                    int f = mem[0];
                    for (size_t pos = 0; pos < FS.inOrder[f].size(); ++pos)
                        inAtt[cid].push_back({f, 0, static_cast<int>(pos)});
                    for (size_t pos = 0; pos < FS.outOrder[f].size(); ++pos)
                        outAtt[cid].push_back({f, 1, static_cast<int>(pos)});
                } else {
                    for (const Att& a : regIn[rho])
                        if (inClass[a.vert]) inAtt[cid].push_back(a);
                    for (int j = 0; j < regionNn[rho]; ++j) {
                        int fj = annulusFrag(level, rho, regionNc[rho] + j);
                        for (const Port& p : FS.outOrder[fj]) {
                            if (p.kind != Port::Edge)
                                throw CutError("annulus piece with an external output", topKey);
                            int dv = FS.edges[p.index].dst;
                            if (inClass[dv]) inAtt[cid].push_back({dv, 0, posOfPort(FS, dv, 0, p)});
                        }
                    }
                    for (const Att& a : regOut[rho])
                        if (inClass[a.vert]) outAtt[cid].push_back(a);
                }
                ++cid;
            }
            NestedGraph out;
            out.depth = k - level;
            out.shape = quotientShape(FS, members, inAtt, outAtt, inSpec, outSpec);
            cid = 0;
            for (auto& [key, mem] : classes) {
                out.values.push_back(assemble(level + 1, mem, inAtt[cid], outAtt[cid]));
                ++cid;
            }
            return out;
        } catch (const CutError&) {
            throw;
        } catch (const std::runtime_error& e) {
            throw CutError(e.what(), topKey);
        }
    };

    std::vector<Att> topIn, topOut;
    for (size_t q = 0; q < FS.inputs.size(); ++q)
        topIn.push_back(
            {FS.inputs[q], 0, posOfPort(FS, FS.inputs[q], 0, {Port::Leg, static_cast<int>(q)})});
    for (size_t q = 0; q < FS.outputs.size(); ++q)
        topOut.push_back(
            {FS.outputs[q], 1, posOfPort(FS, FS.outputs[q], 1, {Port::Leg, static_cast<int>(q)})});

    CutResult res;
    res.sigma = top.sigma;
    if (k == 1) {
        std::vector<int> all(nFrag);
        for (int f = 0; f < nFrag; ++f) all[f] = f;
        try {
            res.value = inducedSpec(frag, all, topIn, topOut);
        } catch (const std::runtime_error& e) {
            throw CutError(e.what(), topKey);
        }
        res.topPiece.resize(nFrag);
        for (int f = 0; f < nFrag; ++f) res.topPiece[f] = pieceAt[f][0];
    } else {
        std::vector<int> all(nFrag);
        for (int f = 0; f < nFrag; ++f) all[f] = f;
        NestedGraph whole = assemble(0, all, topIn, topOut);
        res.value = whole;
        // top vertices of the result are the level-0 classes; their piece is
        // the shared global piece of their fragments
        std::map<std::pair<int, int>, int> classes;
        for (int f = 0; f < nFrag; ++f)
            classes.emplace(std::make_pair(fl.regionOf[gr.origin[f].first][0], pieceAt[f][1]), 0);
        int nClasses = 0;
        for (auto& [kk, id] : classes) id = nClasses++;
        res.topPiece.assign(nClasses, -1);
        for (int f = 0; f < nFrag; ++f) {
            int id = classes[{fl.regionOf[gr.origin[f].first][0], pieceAt[f][1]}];
            if (res.topPiece[id] != -1 && res.topPiece[id] != pieceAt[f][0])
                throw CutError("inconsistent global piece within a class",
                               canonicalSurfaceKey(top.sigma));
            res.topPiece[id] = pieceAt[f][0];
        }
    }
    return res;
}

}  // namespace

CutMachine::CutMachine(RefinementOracle oracle) : oracle_(std::move(oracle)) {}

CutMachine buildCutMap(RefinementOracle oracle) { return CutMachine(std::move(oracle)); }

NestedGraph CutMachine::cut(const NestedGraph& x) const {
    CutContext ctx{&oracle_};
    return cutImpl(ctx, x).value;
}

NestedGraph CutMachine::homotopy(const NestedGraph& x, int j) const {
    int r = x.depth - 1;
    if (j < 0 || j > r) throw std::invalid_argument("homotopy: index out of range");
    CutContext ctx{&oracle_};
    std::function<NestedGraph(const NestedGraph&)> assembleSub =
        [&](const NestedGraph& v) -> NestedGraph {
        if (v.depth == 0) return ctx.refineChecked(leafSurface(v));
        CutResult c = cutImpl(ctx, v);
        try {
            return regroupByPiece(c.value, c.topPiece,
                                  static_cast<int>(c.sigma.components.size()));
        } catch (const std::runtime_error& e) {
            throw CutError(e.what(), canonicalSurfaceKey(c.sigma));
        }
    };
    std::function<NestedGraph(const NestedGraph&, int)> go = [&](const NestedGraph& y,
                                                                 int jj) -> NestedGraph {
        NestedGraph out;
        out.depth = y.depth + 1;
        out.shape = y.shape;
        for (const auto& v : y.values)
            out.values.push_back(jj == 0 ? assembleSub(v) : go(v, jj - 1));
        return out;
    };
    return go(x, j);
}

SuiteReport checkCutSimplicial(const TruncatedSimplicialObject& S, const CutMachine& M,
                               const std::vector<NestedGraph>& samples) {
    SuiteReport rep;
    auto fail = [&](const std::string& id, const NestedGraph& x, int i) {
        rep.failures.push_back({id, witnessOf(S, x, "(i=" + std::to_string(i) + ")")});
    };
    for (const auto& x : samples) {
        int n = S.level(x);
        NestedGraph cx = M.cut(x);
        for (int i = 0; i <= n && n >= 1; ++i) {
            ++rep.checked;
            if (!same(S, M.cut(S.face(x, i)), S.face(cx, i))) fail("c d_i = d_i c", x, i);
        }
        if (n + 1 <= S.N) {
            for (int i = 0; i <= n; ++i) {
                ++rep.checked;
                if (!same(S, M.cut(S.degeneracy(x, i)), S.degeneracy(cx, i)))
                    fail("c s_i = s_i c", x, i);
            }
        }
    }
    return rep;
}

SuiteReport checkCutHomotopy(const TruncatedSimplicialObject& S, const CutMachine& M,
                             const std::vector<NestedGraph>& samples) {
    SuiteReport rep;
    auto fail = [&](const std::string& id, const NestedGraph& x, int i, int j) {
        rep.failures.push_back(
            {id, witnessOf(S, x, "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")")});
    };
    for (const auto& x : samples) {
        int r = S.level(x);
        if (r + 1 > S.N) continue;
        ++rep.checked;
        if (!same(S, S.face(M.homotopy(x, 0), 0), M.cut(x))) fail("d_0 phi_0 = c", x, 0, 0);
        ++rep.checked;
        if (!same(S, S.face(M.homotopy(x, r), r + 1), x)) fail("d_{r+1} phi_r = id", x, r + 1, r);
        for (int j = 0; j + 1 <= r; ++j) {
            ++rep.checked;
            if (!same(S, S.face(M.homotopy(x, j), j + 1), S.face(M.homotopy(x, j + 1), j + 1)))
                fail("d_{j+1} phi_j = d_{j+1} phi_{j+1}", x, j + 1, j);
        }
        for (int j = 0; j <= r; ++j) {
            for (int i = 0; i <= r + 1 && r >= 1; ++i) {
                if (i < j) {
                    ++rep.checked;
                    if (!same(S, S.face(M.homotopy(x, j), i), M.homotopy(S.face(x, i), j - 1)))
                        fail("d_i phi_j = phi_{j-1} d_i", x, i, j);
                } else if (i > j + 1) {
                    ++rep.checked;
                    if (!same(S, S.face(M.homotopy(x, j), i), M.homotopy(S.face(x, i - 1), j)))
                        fail("d_i phi_j = phi_j d_{i-1}", x, i, j);
                }
            }
            if (r + 2 <= S.N) {
                for (int i = 0; i <= r; ++i) {
                    ++rep.checked;
                    if (i <= j) {
                        if (!same(S, S.degeneracy(M.homotopy(x, j), i),
                                  M.homotopy(S.degeneracy(x, i), j + 1)))
                            fail("s_i phi_j = phi_{j+1} s_i", x, i, j);
                    } else {
                        if (!same(S, S.degeneracy(M.homotopy(x, j), i),
                                  M.homotopy(S.degeneracy(x, i - 1), j)))
                            fail("s_i phi_j = phi_j s_{i-1}", x, i, j);
                    }
                }
            }
        }
    }
    return rep;
}

SuiteReport checkCompatibility(const CutMachine& M, const std::vector<NestedGraph>& samples) {
    SuiteReport rep;
    ContractionData grouped = groupedContraction();
    for (const auto& x : samples) {
        ++rep.checked;
        NestedGraph lhs = grouped.sMinus1(M.cut(x));
        NestedGraph rhs = M.cut(eta(x));
        if (!nestedEqual(lhs, rhs))
            rep.failures.push_back({"psi_0 c = c psi_0^ns", nestedKey(x)});
    }
    return rep;
}

}  // namespace properad
