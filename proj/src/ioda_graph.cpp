#include "properad/ioda_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace properad {

Arity arity(const IodaGraph& g) {
    return {static_cast<int>(g.inputs.size()), static_cast<int>(g.outputs.size())};
}

Arity vertexArity(const IodaGraph& g, int v) {
    return {static_cast<int>(g.inOrder[v].size()), static_cast<int>(g.outOrder[v].size())};
}

IodaGraph corolla(Arity a) {
    IodaGraph g;
    g.nVertices = 1;
    g.inOrder.resize(1);
    g.outOrder.resize(1);
    for (int i = 0; i < a.in; ++i) {
        g.inputs.push_back(0);
        g.inOrder[0].push_back({Port::Leg, i});
    }
    for (int i = 0; i < a.out; ++i) {
        g.outputs.push_back(0);
        g.outOrder[0].push_back({Port::Leg, i});
    }
    return g;
}

namespace {

bool hasCycle(int n, const std::vector<std::pair<int, int>>& arcs, std::vector<int>* witness) {
    std::vector<std::vector<int>> adj(n);
    for (auto& [s, d] : arcs) adj[s].push_back(d);
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<int> stack;
    std::function<bool(int)> dfs = [&](int v) {
        state[v] = 1;
        stack.push_back(v);
        for (int w : adj[v]) {
            if (state[w] == 1) {
                if (witness) {
                    auto it = std::find(stack.begin(), stack.end(), w);
                    witness->assign(it, stack.end());
                }
                return true;
            }
            if (state[w] == 0 && dfs(w)) return true;
        }
        state[v] = 2;
        stack.pop_back();
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (state[v] == 0 && dfs(v)) return true;
    return false;
}

bool edgeConnected(const IodaGraph& g) {
    if (g.nVertices <= 1) return true;
    std::vector<std::vector<int>> adj(g.nVertices);
    for (auto& e : g.edges) {
        adj[e.src].push_back(e.dst);
        adj[e.dst].push_back(e.src);
    }
    std::vector<char> seen(g.nVertices, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    return cnt == g.nVertices;
}

}  // namespace

std::vector<std::string> validate(const IodaGraph& g, bool requireIo) {
    std::vector<std::string> diags;
    auto bad = [&](const std::string& m) { diags.push_back(m); };
    if (g.nVertices < 1) bad("graph needs at least one vertex");
    if (static_cast<int>(g.inOrder.size()) != g.nVertices ||
        static_cast<int>(g.outOrder.size()) != g.nVertices) {
        bad("order tables sized differently from vertex set");
        return diags;
    }
    for (auto& e : g.edges) {
        if (e.src < 0 || e.src >= g.nVertices || e.dst < 0 || e.dst >= g.nVertices)
            bad("edge endpoint out of range");
        else if (e.src == e.dst)
            bad("self-loop edge");
    }
    for (int v : g.inputs)
        if (v < 0 || v >= g.nVertices) bad("input leg vertex out of range");
    for (int v : g.outputs)
        if (v < 0 || v >= g.nVertices) bad("output leg vertex out of range");
    if (!diags.empty()) return diags;

    for (int v = 0; v < g.nVertices; ++v) {
        std::multiset<std::pair<int, int>> want, have;
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
            if (g.edges[e].dst == v) want.insert({Port::Edge, e});
        for (int i = 0; i < static_cast<int>(g.inputs.size()); ++i)
            if (g.inputs[i] == v) want.insert({Port::Leg, i});
        for (auto& p : g.inOrder[v]) have.insert({p.kind, p.index});
        if (want != have) bad("in-order at vertex " + std::to_string(v) + " is not a bijection");
        want.clear();
        have.clear();
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
            if (g.edges[e].src == v) want.insert({Port::Edge, e});
        for (int i = 0; i < static_cast<int>(g.outputs.size()); ++i)
            if (g.outputs[i] == v) want.insert({Port::Leg, i});
        for (auto& p : g.outOrder[v]) have.insert({p.kind, p.index});
        if (want != have) bad("out-order at vertex " + std::to_string(v) + " is not a bijection");
    }

    std::vector<std::pair<int, int>> arcs;
    for (auto& e : g.edges) arcs.push_back({e.src, e.dst});
    if (hasCycle(g.nVertices, arcs, nullptr)) bad("directed cycle");
    if (!edgeConnected(g)) bad("not connected");
    if (requireIo) {
        if (g.inputs.empty() && g.outputs.empty()) bad("no global legs (io condition)");
        for (int v = 0; v < g.nVertices; ++v)
            if (g.inOrder[v].empty() && g.outOrder[v].empty())
                bad("vertex " + std::to_string(v) + " has arity (0,0)");
    }
    return diags;
}

bool isValid(const IodaGraph& g, bool requireIo) { return validate(g, requireIo).empty(); }

void requireValid(const IodaGraph& g, bool requireIo) {
    auto d = validate(g, requireIo);
    if (!d.empty()) throw std::invalid_argument("invalid ioda-graph: " + d.front());
}

std::string graphKey(const IodaGraph& g) {
    std::ostringstream os;
    os << "V" << g.nVertices << ";E";
    for (auto& e : g.edges) os << e.src << ">" << e.dst << ",";
    os << ";I";
    for (int v : g.inputs) os << v << ",";
    os << ";O";
    for (int v : g.outputs) os << v << ",";
    for (int v = 0; v < g.nVertices; ++v) {
        os << ";v" << v << "[";
        for (auto& p : g.inOrder[v]) os << (p.kind == Port::Edge ? "e" : "l") << p.index << ",";
        os << "|";
        for (auto& p : g.outOrder[v]) os << (p.kind == Port::Edge ? "e" : "l") << p.index << ",";
        os << "]";
    }
    return os.str();
}

CanonicalForm canonicalize(const IodaGraph& g) {
    requireValid(g, false);
    if (g.inputs.empty() && g.outputs.empty())
        throw std::invalid_argument("canonicalize needs at least one global leg");
    const int NONE = -1;
    std::vector<int> vperm(g.nVertices, NONE), eperm(g.edges.size(), NONE);
    std::vector<int> vorder;  // canonical -> old
    int nextV = 0, nextE = 0;
    auto discover = [&](int v) {
        if (vperm[v] == NONE) {
            vperm[v] = nextV++;
            vorder.push_back(v);
        }
    };
    discover(g.inputs.empty() ? g.outputs[0] : g.inputs[0]);
    for (size_t k = 0; k < vorder.size(); ++k) {
        int v = vorder[k];
        for (auto& p : g.inOrder[v])
            if (p.kind == Port::Edge) {
                if (eperm[p.index] == NONE) eperm[p.index] = nextE++;
                discover(g.edges[p.index].src);
            }
        for (auto& p : g.outOrder[v])
            if (p.kind == Port::Edge) {
                if (eperm[p.index] == NONE) eperm[p.index] = nextE++;
                discover(g.edges[p.index].dst);
            }
    }
    CanonicalForm cf;
    cf.vertexPerm = vperm;
    cf.edgePerm = eperm;
    IodaGraph& h = cf.graph;
    h.nVertices = g.nVertices;
    h.edges.resize(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e)
        h.edges[eperm[e]] = {vperm[g.edges[e].src], vperm[g.edges[e].dst]};
    for (int v : g.inputs) h.inputs.push_back(vperm[v]);
    for (int v : g.outputs) h.outputs.push_back(vperm[v]);
    h.inOrder.resize(g.nVertices);
    h.outOrder.resize(g.nVertices);
    auto remap = [&](const Port& p) {
        return p.kind == Port::Edge ? Port{Port::Edge, eperm[p.index]} : p;
    };
    for (int v = 0; v < g.nVertices; ++v) {
        for (auto& p : g.inOrder[v]) h.inOrder[vperm[v]].push_back(remap(p));
        for (auto& p : g.outOrder[v]) h.outOrder[vperm[v]].push_back(remap(p));
    }
    return cf;
}

std::string canonicalKey(const IodaGraph& g) { return graphKey(canonicalize(g).graph); }

namespace {

// Given a candidate vertex bijection g -> h, derive the positional edge map and
// check it is a genuine order-preserving isomorphism.
bool checkVertexMap(const IodaGraph& g, const IodaGraph& h, const std::vector<int>& f) {
    std::vector<int> em(g.edges.size(), -1);
    auto matchSeq = [&](const std::vector<Port>& a, const std::vector<Port>& b) {
        if (a.size() != b.size()) return false;
        for (size_t p = 0; p < a.size(); ++p) {
            if (a[p].kind != b[p].kind) return false;
            if (a[p].kind == Port::Leg) {
                if (a[p].index != b[p].index) return false;
            } else {
                int e = a[p].index, e2 = b[p].index;
                if (em[e] == -1)
                    em[e] = e2;
                else if (em[e] != e2)
                    return false;
            }
        }
        return true;
    };
    for (int v = 0; v < g.nVertices; ++v) {
        if (!matchSeq(g.inOrder[v], h.inOrder[f[v]])) return false;
        if (!matchSeq(g.outOrder[v], h.outOrder[f[v]])) return false;
    }
    std::vector<char> hit(h.edges.size(), 0);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (em[e] == -1) return false;
        if (hit[em[e]]) return false;
        hit[em[e]] = 1;
        if (h.edges[em[e]].src != f[g.edges[e].src]) return false;
        if (h.edges[em[e]].dst != f[g.edges[e].dst]) return false;
    }
    return true;
}

std::vector<std::string> vertexInvariants(const IodaGraph& g) {
    std::vector<std::string> inv(g.nVertices);
    for (int v = 0; v < g.nVertices; ++v) {
        std::ostringstream os;
        os << g.inOrder[v].size() << "/" << g.outOrder[v].size() << ":";
        for (auto& p : g.inOrder[v]) os << (p.kind == Port::Leg ? "l" + std::to_string(p.index) : "e") << ",";
        os << "|";
        for (auto& p : g.outOrder[v]) os << (p.kind == Port::Leg ? "l" + std::to_string(p.index) : "e") << ",";
        inv[v] = os.str();
    }
    return inv;
}

void searchMaps(const IodaGraph& g, const IodaGraph& h, bool stopAtFirst,
                std::vector<std::vector<int>>& out) {
    auto invG = vertexInvariants(g), invH = vertexInvariants(h);
    std::vector<int> f(g.nVertices, -1);
    std::vector<char> used(h.nVertices, 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == g.nVertices) {
            if (checkVertexMap(g, h, f)) {
                out.push_back(f);
                return stopAtFirst;
            }
            return false;
        }
        for (int w = 0; w < h.nVertices; ++w) {
            if (used[w] || invG[v] != invH[w]) continue;
            f[v] = w;
            used[w] = 1;
            if (rec(v + 1)) return true;
            used[w] = 0;
            f[v] = -1;
        }
        return false;
    };
    rec(0);
}

}  // namespace

std::vector<std::vector<int>> automorphismGroup(const IodaGraph& g, AutoMode mode) {
    auto d = validate(g, false);
    if (!d.empty()) throw std::invalid_argument("automorphismGroup: " + d.front());
    if (mode == AutoMode::Ordered) {
        // Vertex order preserved pointwise, so only the identity is possible.
        std::vector<int> id(g.nVertices);
        std::iota(id.begin(), id.end(), 0);
        if (!checkVertexMap(g, g, id)) throw std::logic_error("identity not an automorphism");
        return {id};
    }
    std::vector<std::vector<int>> out;
    searchMaps(g, g, false, out);
    return out;
}

std::optional<std::vector<int>> findIsomorphism(const IodaGraph& g, const IodaGraph& h) {
    if (g.nVertices != h.nVertices || g.edges.size() != h.edges.size() ||
        g.inputs.size() != h.inputs.size() || g.outputs.size() != h.outputs.size())
        return std::nullopt;
    std::vector<std::vector<int>> out;
    searchMaps(g, h, true, out);
    if (out.empty()) return std::nullopt;
    return out.front();
}

namespace {

// All orderings of the incident items of every vertex, reported through `emit`.
void forEachOrdering(IodaGraph& g, int v, std::vector<std::vector<Port>> inItems,
                     std::vector<std::vector<Port>> outItems,
                     const std::function<void(const IodaGraph&)>& emit) {
    if (v == g.nVertices) {
        emit(g);
        return;
    }
    std::sort(inItems[v].begin(), inItems[v].end(),
              [](const Port& a, const Port& b) { return std::tie(a.kind, a.index) < std::tie(b.kind, b.index); });
    std::sort(outItems[v].begin(), outItems[v].end(),
              [](const Port& a, const Port& b) { return std::tie(a.kind, a.index) < std::tie(b.kind, b.index); });
    auto& in = inItems[v];
    do {
        auto& outp = outItems[v];
        // next_permutation needs a fresh sorted copy per in-permutation
        std::vector<Port> outSorted = outp;
        do {
            g.inOrder[v] = in;
            g.outOrder[v] = outSorted;
            forEachOrdering(g, v + 1, inItems, outItems, emit);
        } while (std::next_permutation(outSorted.begin(), outSorted.end(), [](const Port& a, const Port& b) {
            return std::tie(a.kind, a.index) < std::tie(b.kind, b.index);
        }));
    } while (std::next_permutation(in.begin(), in.end(), [](const Port& a, const Port& b) {
        return std::tie(a.kind, a.index) < std::tie(b.kind, b.index);
    }));
}

}  // namespace

std::vector<IodaGraph> enumerateGraphs(const EnumerateOptions& opt) {
    std::map<std::string, IodaGraph> found;
    if (opt.nMinus + opt.nPlus == 0) return {};
    for (int nv = 1; nv <= opt.maxVertices; ++nv) {
        // topologically labeled edge slots (i < j); every DAG has such a labeling
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) slots.push_back({i, j});
        std::vector<int> counts(slots.size(), 0);
        std::function<void(size_t, int)> edgeRec = [&](size_t s, int left) {
            if (s == slots.size()) {
                std::vector<EdgeRec> edges;
                for (size_t k = 0; k < slots.size(); ++k)
                    for (int c = 0; c < counts[k]; ++c)
                        edges.push_back({slots[k].first, slots[k].second});
                // leg assignments
                std::vector<int> inAssign(opt.nMinus, 0), outAssign(opt.nPlus, 0);
                std::function<void(int)> legRec2 = [&](int oi) {
                    if (oi == opt.nPlus) {
                        IodaGraph g;
                        g.nVertices = nv;
                        g.edges = edges;
                        g.inputs = inAssign;
                        g.outputs = outAssign;
                        g.inOrder.assign(nv, {});
                        g.outOrder.assign(nv, {});
                        std::vector<std::vector<Port>> inIt(nv), outIt(nv);
                        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
                            outIt[edges[e].src].push_back({Port::Edge, e});
                            inIt[edges[e].dst].push_back({Port::Edge, e});
                        }
                        for (int i = 0; i < opt.nMinus; ++i) inIt[inAssign[i]].push_back({Port::Leg, i});
                        for (int i = 0; i < opt.nPlus; ++i) outIt[outAssign[i]].push_back({Port::Leg, i});
                        for (int v = 0; v < nv; ++v) {
                            if (inIt[v].empty() && outIt[v].empty()) return;
                            if (opt.vertexArityFilter &&
                                !opt.vertexArityFilter({static_cast<int>(inIt[v].size()),
                                                        static_cast<int>(outIt[v].size())}))
                                return;
                        }
                        if (!edgeConnected(g)) return;
                        forEachOrdering(g, 0, inIt, outIt, [&](const IodaGraph& gg) {
                            auto cf = canonicalize(gg);
                            std::string key = graphKey(cf.graph);
                            found.emplace(std::move(key), cf.graph);
                        });
                        return;
                    }
                    for (int v = 0; v < nv; ++v) {
                        outAssign[oi] = v;
                        legRec2(oi + 1);
                    }
                };
                std::function<void(int)> legRec1 = [&](int ii) {
                    if (ii == opt.nMinus) {
                        legRec2(0);
                        return;
                    }
                    for (int v = 0; v < nv; ++v) {
                        inAssign[ii] = v;
                        legRec1(ii + 1);
                    }
                };
                legRec1(0);
                return;
            }
            for (int c = 0; c <= left; ++c) {
                counts[s] = c;
                edgeRec(s + 1, left - c);
            }
            counts[s] = 0;
        };
        edgeRec(0, opt.maxEdges);
    }
    std::vector<IodaGraph> out;
    for (auto& [k, g] : found) out.push_back(g);
    return out;
}

bool isCollapsible(const IodaGraph& g, const std::vector<int>& h, std::vector<int>* witnessCycle) {
    if (h.empty()) return false;
    std::vector<char> inH(g.nVertices, 0);
    for (int v : h) {
        if (v < 0 || v >= g.nVertices) return false;
        inH[v] = 1;
    }
    // induced subgraph connected
    if (h.size() > 1) {
        std::vector<int> parent(g.nVertices, -1);
        std::function<int(int)> find = [&](int v) { return parent[v] < 0 ? v : parent[v] = find(parent[v]); };
        for (auto& e : g.edges)
            if (inH[e.src] && inH[e.dst]) {
                int a = find(e.src), b = find(e.dst);
                if (a != b) parent[a] = b;
            }
        int root = find(h.front());
        for (int v : h)
            if (find(v) != root) return false;
    }
    // quotient acyclic
    int cls = 0;
    std::vector<int> classOf(g.nVertices, -1);
    for (int v = 0; v < g.nVertices; ++v)
        if (!inH[v]) classOf[v] = cls++;
    int hClass = cls++;
    for (int v : h) classOf[v] = hClass;
    std::vector<std::pair<int, int>> arcs;
    for (auto& e : g.edges) {
        int a = classOf[e.src], b = classOf[e.dst];
        if (a != b) arcs.push_back({a, b});
    }
    return !hasCycle(cls, arcs, witnessCycle);
}

CollapseResult collapse(const IodaGraph& g, const std::vector<int>& hIn) {
    std::vector<int> h = hIn;
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    if (!isCollapsible(g, h, nullptr))
        throw std::invalid_argument("collapse: subgraph not collapsible");
    std::vector<char> inH(g.nVertices, 0);
    for (int v : h) inH[v] = 1;
    CollapseResult res;
    res.vertexMap.assign(g.nVertices, -1);
    int next = 0;
    for (int v = 0; v < g.nVertices; ++v) {
        if (v == h.front()) {
            res.newVertex = next;
            for (int w : h) res.vertexMap[w] = next;
            ++next;
        } else if (!inH[v]) {
            res.vertexMap[v] = next++;
        }
    }
    IodaGraph& q = res.graph;
    q.nVertices = next;
    res.edgeMap.assign(g.edges.size(), -1);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (inH[g.edges[e].src] && inH[g.edges[e].dst]) continue;
        res.edgeMap[e] = static_cast<int>(q.edges.size());
        q.edges.push_back({res.vertexMap[g.edges[e].src], res.vertexMap[g.edges[e].dst]});
    }
    for (int v : g.inputs) q.inputs.push_back(res.vertexMap[v]);
    for (int v : g.outputs) q.outputs.push_back(res.vertexMap[v]);
    q.inOrder.assign(q.nVertices, {});
    q.outOrder.assign(q.nVertices, {});
    auto remap = [&](const Port& p) {
        return p.kind == Port::Edge ? Port{Port::Edge, res.edgeMap[p.index]} : p;
    };
    for (int v = 0; v < g.nVertices; ++v) {
        if (inH[v]) continue;
        for (auto& p : g.inOrder[v]) q.inOrder[res.vertexMap[v]].push_back(remap(p));
        for (auto& p : g.outOrder[v]) q.outOrder[res.vertexMap[v]].push_back(remap(p));
    }
    for (int w : h) {
        for (auto& p : g.inOrder[w])
            if (p.kind == Port::Leg || !inH[g.edges[p.index].src])
                q.inOrder[res.newVertex].push_back(remap(p));
        for (auto& p : g.outOrder[w])
            if (p.kind == Port::Leg || !inH[g.edges[p.index].dst])
                q.outOrder[res.newVertex].push_back(remap(p));
    }
    return res;
}

GraftResult graft(const IodaGraph& g, const std::vector<IodaGraph>& inner) {
    if (static_cast<int>(inner.size()) != g.nVertices)
        throw std::invalid_argument("graft: one inner graph per vertex required");
    for (int v = 0; v < g.nVertices; ++v)
        if (!(arity(inner[v]) == vertexArity(g, v)))
            throw std::invalid_argument("graft: arity mismatch at vertex " + std::to_string(v));
    GraftResult res;
    IodaGraph& r = res.graph;
    res.vertexOf.resize(g.nVertices);
    res.innerEdge.resize(g.nVertices);
    int nextV = 0;
    for (int v = 0; v < g.nVertices; ++v)
        for (int w = 0; w < inner[v].nVertices; ++w) {
            res.vertexOf[v].push_back(nextV++);
            res.origin.push_back({v, w});
        }
    r.nVertices = nextV;
    int nextE = 0;
    for (int v = 0; v < g.nVertices; ++v)
        for (auto& e : inner[v].edges) {
            res.innerEdge[v].push_back(nextE++);
            r.edges.push_back({res.vertexOf[v][e.src], res.vertexOf[v][e.dst]});
        }
    // outer edge resolution is positional: the q-th item of g's local order at
    // v corresponds to the q-th leg of inner[v]
    std::vector<std::vector<int>> posInIn(g.nVertices), posInOut(g.nVertices);
    for (int v = 0; v < g.nVertices; ++v) {
        posInIn[v].assign(g.inOrder[v].size(), -1);
        posInOut[v].assign(g.outOrder[v].size(), -1);
    }
    std::vector<int> edgePosAtSrc(g.edges.size(), -1), edgePosAtDst(g.edges.size(), -1);
    std::vector<int> legPosIn(g.inputs.size(), -1), legPosOut(g.outputs.size(), -1);
    for (int v = 0; v < g.nVertices; ++v) {
        for (size_t p = 0; p < g.inOrder[v].size(); ++p) {
            auto& it = g.inOrder[v][p];
            if (it.kind == Port::Edge)
                edgePosAtDst[it.index] = static_cast<int>(p);
            else
                legPosIn[it.index] = static_cast<int>(p);
        }
        for (size_t p = 0; p < g.outOrder[v].size(); ++p) {
            auto& it = g.outOrder[v][p];
            if (it.kind == Port::Edge)
                edgePosAtSrc[it.index] = static_cast<int>(p);
            else
                legPosOut[it.index] = static_cast<int>(p);
        }
    }
    res.outerEdge.assign(g.edges.size(), -1);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        int s = g.edges[e].src, d = g.edges[e].dst;
        int ws = inner[s].outputs[edgePosAtSrc[e]];
        int wd = inner[d].inputs[edgePosAtDst[e]];
        res.outerEdge[e] = nextE++;
        r.edges.push_back({res.vertexOf[s][ws], res.vertexOf[d][wd]});
    }
    for (size_t i = 0; i < g.inputs.size(); ++i) {
        int v = g.inputs[i];
        r.inputs.push_back(res.vertexOf[v][inner[v].inputs[legPosIn[i]]]);
    }
    for (size_t i = 0; i < g.outputs.size(); ++i) {
        int v = g.outputs[i];
        r.outputs.push_back(res.vertexOf[v][inner[v].outputs[legPosOut[i]]]);
    }
    r.inOrder.assign(r.nVertices, {});
    r.outOrder.assign(r.nVertices, {});
    for (int v = 0; v < g.nVertices; ++v) {
        for (int w = 0; w < inner[v].nVertices; ++w) {
            int nv = res.vertexOf[v][w];
            for (auto& p : inner[v].inOrder[w]) {
                if (p.kind == Port::Edge) {
                    r.inOrder[nv].push_back({Port::Edge, res.innerEdge[v][p.index]});
                } else {
                    // inner input leg p.index  <->  item p.index of g.inOrder[v]
                    auto& item = g.inOrder[v][p.index];
                    if (item.kind == Port::Edge)
                        r.inOrder[nv].push_back({Port::Edge, res.outerEdge[item.index]});
                    else
                        r.inOrder[nv].push_back({Port::Leg, item.index});
                }
            }
            for (auto& p : inner[v].outOrder[w]) {
                if (p.kind == Port::Edge) {
                    r.outOrder[nv].push_back({Port::Edge, res.innerEdge[v][p.index]});
                } else {
                    auto& item = g.outOrder[v][p.index];
                    if (item.kind == Port::Edge)
                        r.outOrder[nv].push_back({Port::Edge, res.outerEdge[item.index]});
                    else
                        r.outOrder[nv].push_back({Port::Leg, item.index});
                }
            }
        }
    }
    return res;
}

}  // namespace properad
