#include "properad/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace properad {

std::string rationalToString(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rationalFromString(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    return Rational(num, den);
}

SurfaceType unitAnnulus() {
    SurfaceType s;
    s.components.push_back({0});
    s.inputs = {0};
    s.outputs = {0};
    s.unitFlag = true;
    return s;
}

SurfaceType smoothSurface(int genus, int nIn, int nOut) {
    SurfaceType s;
    s.components.push_back({genus});
    s.inputs.assign(nIn, 0);
    s.outputs.assign(nOut, 0);
    return s;
}

SurfaceType nodalAnnulus(int nIn, int nOut) {
    if (nIn + nOut != 2) throw std::invalid_argument("nodal annulus has two boundary circles");
    SurfaceType s;
    s.components.push_back({0});
    s.components.push_back({0});
    s.nodes.push_back({0, 1});
    int c = 0;
    for (int i = 0; i < nIn; ++i) s.inputs.push_back(c++);
    for (int i = 0; i < nOut; ++i) s.outputs.push_back(c++);
    return s;
}

Arity arity(const SurfaceType& s) {
    return {static_cast<int>(s.inputs.size()), static_cast<int>(s.outputs.size())};
}

int boundaryCount(const SurfaceType& s, int c) {
    int n = 0;
    for (int v : s.inputs) n += v == c;
    for (int v : s.outputs) n += v == c;
    return n;
}

int nodeHalfCount(const SurfaceType& s, int c) {
    int n = 0;
    for (auto& nd : s.nodes) n += (nd.a == c) + (nd.b == c);
    return n;
}

int markCount(const SurfaceType& s, int c) {
    int n = 0;
    for (auto& m : s.marks) n += m.component == c;
    return n;
}

std::vector<std::string> validate(const SurfaceType& s, bool requireIo) {
    std::vector<std::string> diags;
    int nc = static_cast<int>(s.components.size());
    if (nc < 1) diags.push_back("surface needs at least one component");
    for (auto& c : s.components)
        if (c.genus < 0) diags.push_back("negative genus");
    auto inRange = [&](int c) { return c >= 0 && c < nc; };
    for (auto& nd : s.nodes)
        if (!inRange(nd.a) || !inRange(nd.b)) diags.push_back("node component out of range");
    for (int c : s.inputs)
        if (!inRange(c)) diags.push_back("input circle component out of range");
    for (int c : s.outputs)
        if (!inRange(c)) diags.push_back("output circle component out of range");
    for (auto& m : s.marks) {
        if (!inRange(m.component)) diags.push_back("mark component out of range");
        if (m.weight < Rational(0) || m.weight > Rational(1))
            diags.push_back("mark weight outside [0,1]");
    }
    if (!diags.empty()) return diags;
    // connectivity through nodes
    std::vector<int> parent(nc, -1);
    std::function<int(int)> find = [&](int v) { return parent[v] < 0 ? v : parent[v] = find(parent[v]); };
    for (auto& nd : s.nodes) {
        int a = find(nd.a), b = find(nd.b);
        if (a != b) parent[a] = b;
    }
    for (int c = 1; c < nc; ++c)
        if (find(c) != find(0)) {
            diags.push_back("surface not connected");
            break;
        }
    if (s.unitFlag) {
        if (!(nc == 1 && s.components[0].genus == 0 && s.nodes.empty() && s.marks.empty() &&
              s.inputs.size() == 1 && s.outputs.size() == 1))
            diags.push_back("unitFlag only valid on a smooth genus-0 (1,1) annulus");
    }
    if (requireIo && s.inputs.empty() && s.outputs.empty())
        diags.push_back("surface has arity (0,0)");
    return diags;
}

void requireValid(const SurfaceType& s, bool requireIo) {
    auto d = validate(s, requireIo);
    if (!d.empty()) throw std::invalid_argument("invalid surface type: " + d.front());
}

int componentEuler(const SurfaceType& s, int c) {
    return 2 - 2 * s.components[c].genus - (boundaryCount(s, c) + nodeHalfCount(s, c));
}

int eulerCharacteristic(const SurfaceType& s) {
    int chi = 0;
    for (int c = 0; c < static_cast<int>(s.components.size()); ++c) chi += componentEuler(s, c);
    return chi;
}

int arithmeticGenus(const SurfaceType& s) {
    int g = 0;
    for (auto& c : s.components) g += c.genus;
    // first Betti number of the node graph (connected): E - V + 1
    return g + static_cast<int>(s.nodes.size()) - static_cast<int>(s.components.size()) + 1;
}

namespace {

SurfaceType relabelComponents(const SurfaceType& s, const std::vector<int>& perm) {
    // perm: old component -> new component
    SurfaceType t;
    t.components.resize(s.components.size());
    for (size_t c = 0; c < s.components.size(); ++c) t.components[perm[c]] = s.components[c];
    for (auto& nd : s.nodes) {
        int a = perm[nd.a], b = perm[nd.b];
        t.nodes.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(t.nodes.begin(), t.nodes.end(),
              [](const SurfaceNode& x, const SurfaceNode& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    for (int c : s.inputs) t.inputs.push_back(perm[c]);
    for (int c : s.outputs) t.outputs.push_back(perm[c]);
    for (auto& m : s.marks) t.marks.push_back({perm[m.component], m.weight});
    std::sort(t.marks.begin(), t.marks.end(), [](const SurfaceMark& x, const SurfaceMark& y) {
        return std::tie(x.component, x.weight) < std::tie(y.component, y.weight);
    });
    t.unitFlag = s.unitFlag;
    return t;
}

std::string serializeSurface(const SurfaceType& s) {
    std::ostringstream os;
    os << "C";
    for (auto& c : s.components) os << c.genus << ",";
    os << ";N";
    for (auto& nd : s.nodes) os << nd.a << "-" << nd.b << ",";
    os << ";I";
    for (int c : s.inputs) os << c << ",";
    os << ";O";
    for (int c : s.outputs) os << c << ",";
    os << ";M";
    for (auto& m : s.marks) os << m.component << ":" << rationalToString(m.weight) << ",";
    os << ";U" << (s.unitFlag ? 1 : 0);
    return os.str();
}

}  // namespace

SurfaceType canonicalSurface(const SurfaceType& s) {
    int nc = static_cast<int>(s.components.size());
    // refinement colors anchored at the ordered boundary circles
    std::vector<std::string> color(nc);
    for (int c = 0; c < nc; ++c) {
        std::ostringstream os;
        os << "g" << s.components[c].genus << ";i";
        for (size_t i = 0; i < s.inputs.size(); ++i)
            if (s.inputs[i] == static_cast<int>(c)) os << i << ",";
        os << ";o";
        for (size_t i = 0; i < s.outputs.size(); ++i)
            if (s.outputs[i] == static_cast<int>(c)) os << i << ",";
        os << ";m";
        std::vector<Rational> ws;
        for (auto& m : s.marks)
            if (m.component == c) ws.push_back(m.weight);
        std::sort(ws.begin(), ws.end());
        for (auto& w : ws) os << rationalToString(w) << ",";
        color[c] = os.str();
    }
    for (int round = 0; round < nc; ++round) {
        std::vector<std::string> next(nc);
        for (int c = 0; c < nc; ++c) {
            std::vector<std::string> nb;
            for (auto& nd : s.nodes) {
                if (nd.a == c) nb.push_back(color[nd.b]);
                if (nd.b == c) nb.push_back(color[nd.a]);
            }
            std::sort(nb.begin(), nb.end());
            std::string acc = color[c] + "#";
            for (auto& x : nb) acc += x + "|";
            next[c] = acc;
        }
        if (next == color) break;
        color = next;
    }
    // order classes by color; brute-force within tie classes
    std::vector<int> order(nc);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
    // group boundaries of tie classes
    std::vector<std::pair<int, int>> classes;  // [start, end) in `order`
    for (int i = 0; i < nc;) {
        int j = i;
        while (j < nc && color[order[j]] == color[order[i]]) ++j;
        classes.push_back({i, j});
        i = j;
    }
    SurfaceType best;
    std::string bestKey;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == classes.size()) {
            std::vector<int> perm(nc);
            for (int i = 0; i < nc; ++i) perm[order[i]] = i;
            SurfaceType cand = relabelComponents(s, perm);
            std::string key = serializeSurface(cand);
            if (bestKey.empty() || key < bestKey) {
                bestKey = key;
                best = cand;
            }
            return;
        }
        auto [lo, hi] = classes[k];
        std::sort(order.begin() + lo, order.begin() + hi);
        std::vector<int> slice(order.begin() + lo, order.begin() + hi);
        do {
            std::copy(slice.begin(), slice.end(), order.begin() + lo);
            rec(k + 1);
        } while (std::next_permutation(slice.begin(), slice.end()));
    };
    rec(0);
    return best;
}

std::string canonicalSurfaceKey(const SurfaceType& s) { return serializeSurface(canonicalSurface(s)); }

GlueResult glue(const IodaGraph& g, const std::vector<SurfaceType>& surfaces, GluePolicy policy,
                bool enforceIo) {
    requireValid(g);
    if (static_cast<int>(surfaces.size()) != g.nVertices)
        throw std::invalid_argument("glue: one surface per vertex required");
    for (int v = 0; v < g.nVertices; ++v) {
        requireValid(surfaces[v]);
        if (!(arity(surfaces[v]) == vertexArity(g, v)))
            throw std::invalid_argument("glue: surface arity mismatch at vertex " + std::to_string(v));
    }
    if (enforceIo && g.inputs.empty() && g.outputs.empty())
        throw std::invalid_argument("glue: composite arity (0,0) rejected");

    // circle terminals: per-vertex slots and global legs, unified by edges and
    // by splicing unit annuli
    int nTerm = 0;
    std::vector<std::vector<int>> inSlot(g.nVertices), outSlot(g.nVertices);
    for (int v = 0; v < g.nVertices; ++v) {
        for (size_t p = 0; p < g.inOrder[v].size(); ++p) inSlot[v].push_back(nTerm++);
        for (size_t p = 0; p < g.outOrder[v].size(); ++p) outSlot[v].push_back(nTerm++);
    }
    std::vector<int> inLegTerm, outLegTerm;
    for (size_t i = 0; i < g.inputs.size(); ++i) inLegTerm.push_back(nTerm++);
    for (size_t i = 0; i < g.outputs.size(); ++i) outLegTerm.push_back(nTerm++);
    std::vector<int> parent(nTerm, -1);
    std::function<int(int)> find = [&](int x) { return parent[x] < 0 ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    };
    // positions of edges/legs within local orders
    for (int v = 0; v < g.nVertices; ++v) {
        for (size_t p = 0; p < g.inOrder[v].size(); ++p) {
            auto& it = g.inOrder[v][p];
            if (it.kind == Port::Leg) unite(inSlot[v][p], inLegTerm[it.index]);
        }
        for (size_t p = 0; p < g.outOrder[v].size(); ++p) {
            auto& it = g.outOrder[v][p];
            if (it.kind == Port::Leg) unite(outSlot[v][p], outLegTerm[it.index]);
        }
    }
    for (size_t e = 0; e < g.edges.size(); ++e) {
        int s = g.edges[e].src, d = g.edges[e].dst;
        int ps = -1, pd = -1;
        for (size_t p = 0; p < g.outOrder[s].size(); ++p)
            if (g.outOrder[s][p] == Port{Port::Edge, static_cast<int>(e)}) ps = static_cast<int>(p);
        for (size_t p = 0; p < g.inOrder[d].size(); ++p)
            if (g.inOrder[d][p] == Port{Port::Edge, static_cast<int>(e)}) pd = static_cast<int>(p);
        unite(outSlot[s][ps], inSlot[d][pd]);
    }
    // splice unit annuli: their single in-slot and out-slot become one circle
    std::vector<char> isUnit(g.nVertices, 0);
    bool allUnit = true;
    for (int v = 0; v < g.nVertices; ++v) {
        if (surfaces[v].unitFlag) {
            isUnit[v] = 1;
            unite(inSlot[v][0], outSlot[v][0]);
        } else {
            allUnit = false;
        }
    }
    GlueResult res;
    res.componentOf.resize(g.nVertices);
    res.nodeOf.resize(g.nVertices);
    if (allUnit) {
        if (g.inputs.size() != 1 || g.outputs.size() != 1)
            throw std::logic_error("glue: all-unit composition must have arity (1,1)");
        res.surface = unitAnnulus();
        res.allUnit = true;
        return res;
    }

    // pieces = components of non-unit surfaces; merge across glued circles
    std::vector<std::pair<int, int>> pieceId;  // (v, c)
    std::vector<std::vector<int>> pieceOf(g.nVertices);
    for (int v = 0; v < g.nVertices; ++v) {
        pieceOf[v].assign(surfaces[v].components.size(), -1);
        if (isUnit[v]) continue;
        for (size_t c = 0; c < surfaces[v].components.size(); ++c) {
            pieceOf[v][c] = static_cast<int>(pieceId.size());
            pieceId.push_back({v, static_cast<int>(c)});
        }
    }
    int nPieces = static_cast<int>(pieceId.size());
    std::vector<int> pparent(nPieces, -1);
    std::function<int(int)> pfind = [&](int x) { return pparent[x] < 0 ? x : pparent[x] = pfind(pparent[x]); };
    // each circle class: collect the non-unit slots and global legs it contains
    auto slotPiece = [&](int v, bool isIn, int p) {
        const SurfaceType& s = surfaces[v];
        int comp = isIn ? s.inputs[p] : s.outputs[p];
        return pieceOf[v][comp];
    };
    std::map<int, std::vector<int>> classPieces;   // circle class -> pieces touching it
    std::map<int, int> classLegCount;
    for (int v = 0; v < g.nVertices; ++v) {
        if (isUnit[v]) continue;
        for (size_t p = 0; p < inSlot[v].size(); ++p)
            classPieces[find(inSlot[v][p])].push_back(slotPiece(v, true, static_cast<int>(p)));
        for (size_t p = 0; p < outSlot[v].size(); ++p)
            classPieces[find(outSlot[v][p])].push_back(slotPiece(v, false, static_cast<int>(p)));
    }
    for (int t : inLegTerm) classLegCount[find(t)]++;
    for (int t : outLegTerm) classLegCount[find(t)]++;
    int gluedCircles = 0;
    for (auto& [cls, pieces] : classPieces) {
        if (classLegCount.count(cls)) continue;  // external circle
        if (pieces.size() != 2) throw std::logic_error("glue: malformed circle class");
        ++gluedCircles;
        int a = pfind(pieces[0]), b = pfind(pieces[1]);
        if (a != b) pparent[a] = b;
    }
    // merged components: genus = 1 - k + c + sum g_i per merged class
    std::map<int, int> mergedIndex;
    std::vector<int> mergedK, mergedC, mergedG;
    for (int p = 0; p < nPieces; ++p) {
        int r = pfind(p);
        if (!mergedIndex.count(r)) {
            mergedIndex[r] = static_cast<int>(mergedK.size());
            mergedK.push_back(0);
            mergedC.push_back(0);
            mergedG.push_back(0);
        }
        int m = mergedIndex[r];
        mergedK[m] += 1;
        auto [v, c] = pieceId[p];
        mergedG[m] += surfaces[v].components[c].genus;
    }
    for (auto& [cls, pieces] : classPieces) {
        if (classLegCount.count(cls)) continue;
        mergedC[mergedIndex[pfind(pieces[0])]] += 1;
    }
    SurfaceType& out = res.surface;
    out.components.resize(mergedK.size());
    for (size_t m = 0; m < mergedK.size(); ++m)
        out.components[m].genus = 1 - mergedK[m] + mergedC[m] + mergedG[m];
    auto mergedOfPiece = [&](int p) { return mergedIndex[pfind(p)]; };
    for (int v = 0; v < g.nVertices; ++v) {
        if (isUnit[v]) continue;
        for (size_t c = 0; c < surfaces[v].components.size(); ++c)
            res.componentOf[v].push_back(mergedOfPiece(pieceOf[v][c]));
        for (auto& nd : surfaces[v].nodes) {
            res.nodeOf[v].push_back(static_cast<int>(out.nodes.size()));
            out.nodes.push_back({mergedOfPiece(pieceOf[v][nd.a]), mergedOfPiece(pieceOf[v][nd.b])});
        }
        for (auto& m : surfaces[v].marks)
            out.marks.push_back({mergedOfPiece(pieceOf[v][m.component]), m.weight});
    }
    // external boundaries follow the global leg order
    auto externalComponent = [&](int term) {
        int cls = find(term);
        auto it = classPieces.find(cls);
        if (it == classPieces.end() || it->second.size() != 1)
            throw std::logic_error("glue: external circle not matched to one piece");
        return mergedOfPiece(it->second[0]);
    };
    for (int t : inLegTerm) out.inputs.push_back(externalComponent(t));
    for (int t : outLegTerm) out.outputs.push_back(externalComponent(t));
    requireValid(out, enforceIo);
    if (policy == GluePolicy::Stabilize) out = stabilize(out);
    return res;
}

namespace {

// index of an unstable closed genus-0 component, candidates in scan order
std::vector<int> unstableComponents(const SurfaceType& s) {
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(s.components.size()); ++c) {
        if (s.components[c].genus != 0) continue;
        if (boundaryCount(s, c) != 0) continue;
        if (nodeHalfCount(s, c) + markCount(s, c) < 3) out.push_back(c);
    }
    return out;
}

SurfaceType removeComponent(const SurfaceType& s, int c) {
    SurfaceType t;
    std::vector<int> perm(s.components.size(), -1);
    int next = 0;
    for (int i = 0; i < static_cast<int>(s.components.size()); ++i)
        if (i != c) {
            perm[i] = next++;
            t.components.push_back(s.components[i]);
        }
    for (auto& nd : s.nodes)
        if (nd.a != c && nd.b != c) t.nodes.push_back({perm[nd.a], perm[nd.b]});
    for (int x : s.inputs) t.inputs.push_back(perm[x]);
    for (int x : s.outputs) t.outputs.push_back(perm[x]);
    for (auto& m : s.marks)
        if (m.component != c) t.marks.push_back({perm[m.component], m.weight});
    t.unitFlag = s.unitFlag;
    return t;
}

SurfaceType collapseUnstable(const SurfaceType& s, int c) {
    // gather the nodes and marks on c
    std::vector<int> nodeIdx;
    for (int n = 0; n < static_cast<int>(s.nodes.size()); ++n)
        if (s.nodes[n].a == c || s.nodes[n].b == c) nodeIdx.push_back(n);
    int marks = markCount(s, c);
    int halves = nodeHalfCount(s, c);
    if (halves == 2 && nodeIdx.size() == 1)
        throw std::logic_error("stabilize: isolated self-node sphere (disconnected surface)");
    SurfaceType t = s;
    if (halves == 1 && marks == 0) {
        // smooth the node away
        t.nodes.erase(t.nodes.begin() + nodeIdx[0]);
        return removeComponent(t, c);
    }
    if (halves == 2 && marks == 0) {
        int n1 = nodeIdx[0], n2 = nodeIdx[1];
        int far1 = s.nodes[n1].a == c ? s.nodes[n1].b : s.nodes[n1].a;
        int far2 = s.nodes[n2].a == c ? s.nodes[n2].b : s.nodes[n2].a;
        t.nodes.erase(t.nodes.begin() + n2);
        t.nodes.erase(t.nodes.begin() + n1);
        t.nodes.push_back({far1, far2});
        return removeComponent(t, c);
    }
    if (halves == 1 && marks == 1) {
        int n1 = nodeIdx[0];
        int far = s.nodes[n1].a == c ? s.nodes[n1].b : s.nodes[n1].a;
        t.nodes.erase(t.nodes.begin() + n1);
        for (auto& m : t.marks)
            if (m.component == c) m.component = far;
        return removeComponent(t, c);
    }
    // halves == 0 (possibly with marks): an isolated closed sphere cannot occur
    // in a connected io surface
    throw std::logic_error("stabilize: isolated closed sphere");
}

}  // namespace

bool isStable(const SurfaceType& s) { return unstableComponents(s).empty(); }

SurfaceType stabilize(const SurfaceType& s) {
    SurfaceType t = s;
    for (;;) {
        auto cand = unstableComponents(t);
        if (cand.empty()) return t;
        t = collapseUnstable(t, cand.front());
    }
}

SurfaceType stabilizeShuffled(const SurfaceType& s, unsigned seed) {
    std::mt19937 rng(seed);
    SurfaceType t = s;
    for (;;) {
        auto cand = unstableComponents(t);
        if (cand.empty()) return t;
        t = collapseUnstable(t, cand[rng() % cand.size()]);
    }
}

SurfaceType normalizeSpots(const SurfaceType& s, bool stabilizeAfter) {
    SurfaceType t = s;
    t.marks.erase(std::remove_if(t.marks.begin(), t.marks.end(),
                                 [](const SurfaceMark& m) { return m.weight == Rational(0); }),
                  t.marks.end());
    return stabilizeAfter ? stabilize(t) : t;
}

const std::vector<ProperadName> kAllProperadNames = {
    ProperadName::M, ProperadName::DPlusM, ProperadName::Mbar, ProperadName::Mhat,
    ProperadName::Munst, ProperadName::MbarUnst, ProperadName::MhatUnst, ProperadName::DPlusMunst,
    ProperadName::Mnop,
    ProperadName::DPlusBlackM, ProperadName::DPlusBlackMunst, ProperadName::MhatBlackUnst,
    ProperadName::ScriptM, ProperadName::ScriptMnop,
    ProperadName::DutchM, ProperadName::DutchMbar, ProperadName::DutchMunst, ProperadName::DutchMbarUnst,
};

std::string properadNameToString(ProperadName n) {
    switch (n) {
        case ProperadName::M: return "M";
        case ProperadName::DPlusM: return "dPlusM";
        case ProperadName::Mbar: return "Mbar";
        case ProperadName::Mhat: return "Mhat";
        case ProperadName::Munst: return "Munst";
        case ProperadName::MbarUnst: return "MbarUnst";
        case ProperadName::MhatUnst: return "MhatUnst";
        case ProperadName::DPlusMunst: return "dPlusMunst";
        case ProperadName::Mnop: return "Mnop";
        case ProperadName::DPlusBlackM: return "dPlusBlackM";
        case ProperadName::DPlusBlackMunst: return "dPlusBlackMunst";
        case ProperadName::MhatBlackUnst: return "MhatBlackUnst";
        case ProperadName::ScriptM: return "ScriptM";
        case ProperadName::ScriptMnop: return "ScriptMnop";
        case ProperadName::DutchM: return "DutchM";
        case ProperadName::DutchMbar: return "DutchMbar";
        case ProperadName::DutchMunst: return "DutchMunst";
        case ProperadName::DutchMbarUnst: return "DutchMbarUnst";
    }
    return "?";
}

std::optional<ProperadName> properadNameFromString(const std::string& s) {
    for (auto n : kAllProperadNames)
        if (properadNameToString(n) == s) return n;
    return std::nullopt;
}

GluePolicy policyFor(ProperadName n) {
    switch (n) {
        case ProperadName::Mbar:
        case ProperadName::Mhat:
        case ProperadName::MbarUnst:
        case ProperadName::MhatUnst:
        case ProperadName::MhatBlackUnst:
        case ProperadName::DutchMbar:
        case ProperadName::DutchMbarUnst:
            return GluePolicy::Stabilize;
        default:
            return GluePolicy::Raw;
    }
}

namespace {

Membership fail(const std::string& why) { return {false, why}; }
const Membership kMember = {true, ""};

bool closedStable(const SurfaceType& s, bool countMarks) {
    for (int c = 0; c < static_cast<int>(s.components.size()); ++c) {
        if (boundaryCount(s, c) != 0) continue;
        int special = nodeHalfCount(s, c) + (countMarks ? markCount(s, c) : 0);
        if (s.components[c].genus == 0 && special < 3) return false;
        if (s.components[c].genus == 1 && special < 1) return false;
    }
    return true;
}

bool everyComponentHasOutput(const SurfaceType& s) {
    std::vector<char> has(s.components.size(), 0);
    for (int c : s.outputs) has[c] = 1;
    return std::all_of(has.begin(), has.end(), [](char x) { return x != 0; });
}

bool hasWeightOneMark(const SurfaceType& s) {
    return std::any_of(s.marks.begin(), s.marks.end(),
                       [](const SurfaceMark& m) { return m.weight == Rational(1); });
}

bool hasWeightZeroMark(const SurfaceType& s) {
    return std::any_of(s.marks.begin(), s.marks.end(),
                       [](const SurfaceMark& m) { return m.weight == Rational(0); });
}

struct TypeTriple {
    int g, nIn, nOut;
    bool operator==(const TypeTriple&) const = default;
};

TypeTriple typeOf(const SurfaceType& s) {
    return {arithmeticGenus(s), static_cast<int>(s.inputs.size()), static_cast<int>(s.outputs.size())};
}

bool inList(const TypeTriple& t, std::initializer_list<TypeTriple> list) {
    return std::any_of(list.begin(), list.end(), [&](const TypeTriple& x) { return x == t; });
}

}  // namespace

Membership membership(const SurfaceType& s, ProperadName name) {
    auto diags = validate(s, true);
    if (!diags.empty()) return fail("invalid surface type: " + diags.front());
    if (s.unitFlag) return kMember;  // the two-sided unit belongs to every family here
    const bool smooth = s.nodes.empty();
    const bool noMarks = s.marks.empty();
    const TypeTriple t = typeOf(s);
    const TypeTriple unstable[] = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 2}, {0, 2, 0}};
    auto isUnstableType = [&] {
        return std::any_of(std::begin(unstable), std::end(unstable),
                           [&](const TypeTriple& x) { return x == t; });
    };
    switch (name) {
        case ProperadName::M:
            if (!smooth) return fail("nodal surface not in M");
            if (!noMarks) return fail("marked surface not in M");
            return kMember;
        case ProperadName::DPlusM: {
            auto m = membership(s, ProperadName::M);
            if (!m.member) return m;
            if (s.outputs.empty()) return fail("dPlusM needs at least one output");
            return kMember;
        }
        case ProperadName::Mbar:
            if (!noMarks) return fail("marked surface not in Mbar");
            if (!closedStable(s, false)) return fail("unstable closed component");
            return kMember;
        case ProperadName::Mhat: {
            auto m = membership(s, ProperadName::Mbar);
            if (!m.member) return m;
            if (!everyComponentHasOutput(s)) return fail("component without output boundary");
            return kMember;
        }
        case ProperadName::Munst: {
            auto m = membership(s, ProperadName::M);
            if (!m.member) return m;
            if (!isUnstableType()) return fail("type outside the unstable range");
            return kMember;
        }
        case ProperadName::MbarUnst: {
            auto m = membership(s, ProperadName::Mbar);
            if (!m.member) return m;
            if (!isUnstableType()) return fail("type outside the unstable range");
            return kMember;
        }
        case ProperadName::MhatUnst: {
            auto m = membership(s, ProperadName::Mhat);
            if (!m.member) return m;
            if (!inList(t, {{0, 0, 1}, {0, 1, 1}, {0, 0, 2}}))
                return fail("type outside the Mhat unstable range");
            return kMember;
        }
        case ProperadName::DPlusMunst: {
            auto m = membership(s, ProperadName::DPlusM);
            if (!m.member) return m;
            if (!inList(t, {{0, 0, 1}, {0, 1, 1}, {0, 0, 2}}))
                return fail("type outside the dPlusM unstable range");
            return kMember;
        }
        case ProperadName::Mnop: {
            auto m = membership(s, ProperadName::M);
            if (!m.member) return m;
            if (!inList(t, {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 2}}))
                return fail("type outside the Mnop range (no two-input annuli)");
            return kMember;
        }
        case ProperadName::DPlusBlackM: {
            auto m = membership(s, ProperadName::DPlusM);
            if (!m.member) return m;
            if (t == TypeTriple{0, 1, 1})
                return fail("genus-0 (1,1) part of dPlusBlackM is the modulus-0 annulus only");
            return kMember;
        }
        case ProperadName::DPlusBlackMunst: {
            auto m = membership(s, ProperadName::DPlusBlackM);
            if (!m.member) return m;
            if (!inList(t, {{0, 0, 1}, {0, 0, 2}}))
                return fail("type outside the dPlusBlackM unstable range");
            return kMember;
        }
        case ProperadName::MhatBlackUnst: {
            auto m = membership(s, ProperadName::MhatUnst);
            if (!m.member) return m;
            if (t == TypeTriple{0, 1, 1})
                return fail("genus-0 (1,1) part of MhatBlack is the modulus-0 annulus only");
            return kMember;
        }
        case ProperadName::ScriptM:
            if (!smooth) return fail("nodal surface not in ScriptM");
            if (hasWeightZeroMark(s)) return fail("weight-0 marks are forgotten in spotted surfaces");
            if (s.outputs.empty() && !hasWeightOneMark(s))
                return fail("no-output spotted surface needs a weight-1 mark");
            return kMember;
        case ProperadName::ScriptMnop: {
            auto m = membership(s, ProperadName::ScriptM);
            if (!m.member) return m;
            if (!inList(t, {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 2}}))
                return fail("type outside the ScriptMnop range");
            if (t == TypeTriple{0, 0, 1}) {
                if (s.marks.size() != 1 || s.marks[0].weight != Rational(1))
                    return fail("positive cap must be a disk with a single weight-1 mark");
            } else if (t == TypeTriple{0, 1, 0}) {
                if (s.marks.size() > 1) return fail("input disk carries at most one mark");
            } else {
                if (!s.marks.empty()) return fail("ScriptMnop annuli carry no positive-weight marks");
            }
            return kMember;
        }
        case ProperadName::DutchM:
            if (!smooth) return fail("nodal surface not in DutchM");
            if (hasWeightZeroMark(s)) return fail("weight-0 marks are forgotten in spotted surfaces");
            if (inList(t, {{0, 0, 1}, {0, 1, 0}}) && !hasWeightOneMark(s))
                return fail("disk needs at least one weight-1 mark");
            return kMember;
        case ProperadName::DutchMbar:
            if (hasWeightZeroMark(s)) return fail("weight-0 marks are forgotten in spotted surfaces");
            if (!closedStable(s, true)) return fail("unstable closed component");
            if (inList(t, {{0, 0, 1}, {0, 1, 0}}) && !hasWeightOneMark(s))
                return fail("disk type needs at least one weight-1 mark");
            return kMember;
        case ProperadName::DutchMunst: {
            auto m = membership(s, ProperadName::DutchM);
            if (!m.member) return m;
            if (t.g != 0 || t.nIn + t.nOut > 2)
                return fail("underlying surface is not an annulus or disk");
            return kMember;
        }
        case ProperadName::DutchMbarUnst: {
            auto m = membership(s, ProperadName::DutchMbar);
            if (!m.member) return m;
            if (t.g != 0 || t.nIn + t.nOut > 2)
                return fail("underlying surface is not a (possibly nodal) annulus or disk");
            return kMember;
        }
    }
    return fail("unknown properad name");
}

std::vector<Rational> rhoApply(const std::vector<Rational>& weights,
                               const std::vector<Rational>& thresholds) {
    for (size_t i = 0; i < thresholds.size(); ++i) {
        if (thresholds[i] <= Rational(0) || thresholds[i] >= Rational(1))
            throw std::invalid_argument("rho: thresholds must lie strictly between 0 and 1");
        if (i + 1 < thresholds.size() && !(thresholds[i] < thresholds[i + 1]))
            throw std::invalid_argument("rho: thresholds must be strictly increasing");
    }
    std::vector<Rational> out;
    for (auto& w : weights) {
        if (w < Rational(0) || w > Rational(1))
            throw std::invalid_argument("rho: weight outside [0,1]");
        if (w == Rational(0)) {
            out.push_back(Rational(0));
            continue;
        }
        if (w == Rational(1)) {
            out.push_back(Rational(1));
            continue;
        }
        for (auto& a : thresholds)
            if (w == a) throw std::invalid_argument("rho: weight equal to a threshold");
        if (thresholds.empty() || w > thresholds.back()) {
            out.push_back(Rational(1));
            continue;
        }
        if (w < thresholds.front()) {
            out.push_back(Rational(0));
            continue;
        }
        for (size_t r = 0; r + 1 < thresholds.size(); ++r)
            if (thresholds[r] < w && w < thresholds[r + 1]) {
                out.push_back((thresholds[r] + thresholds[r + 1]) / Rational(2));
                break;
            }
    }
    return out;
}

}  // namespace properad
