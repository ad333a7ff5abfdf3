#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace properad {

// Input-output directed acyclic connected multigraph with ordered legs and
// per-vertex orderings.  Vertices are 0..nVertices-1, edges and legs are
// identified by their index.
struct Arity {
    int in = 0;
    int out = 0;
    bool operator==(const Arity&) const = default;
    bool operator<(const Arity& o) const {
        return in != o.in ? in < o.in : out < o.out;
    }
};

struct Port {
    enum Kind { Edge, Leg };
    Kind kind = Edge;
    int index = 0;
    bool operator==(const Port&) const = default;
};

struct EdgeRec {
    int src = 0;
    int dst = 0;
    bool operator==(const EdgeRec&) const = default;
};

struct IodaGraph {
    int nVertices = 0;
    std::vector<EdgeRec> edges;
    std::vector<int> inputs;   // inputs[i]  = vertex carrying global input leg i
    std::vector<int> outputs;  // outputs[i] = vertex carrying global output leg i
    std::vector<std::vector<Port>> inOrder;   // per vertex; Leg = global input leg
    std::vector<std::vector<Port>> outOrder;  // per vertex; Leg = global output leg

    bool operator==(const IodaGraph&) const = default;
};

Arity arity(const IodaGraph& g);
Arity vertexArity(const IodaGraph& g, int v);

// Corolla with per-vertex orders aligned with the global leg orders.
IodaGraph corolla(Arity a);

// Structural diagnostics; empty means valid.  `requireIo` additionally demands
// at least one global leg and no (0,0) vertex.
std::vector<std::string> validate(const IodaGraph& g, bool requireIo = true);
bool isValid(const IodaGraph& g, bool requireIo = true);
void requireValid(const IodaGraph& g, bool requireIo = true);

// Canonical relabeling driven by the leg and per-vertex orderings.  Only
// defined for graphs with at least one global leg.
struct CanonicalForm {
    IodaGraph graph;
    std::vector<int> vertexPerm;  // old vertex -> canonical vertex
    std::vector<int> edgePerm;    // old edge   -> canonical edge
};
CanonicalForm canonicalize(const IodaGraph& g);
std::string canonicalKey(const IodaGraph& g);

// Stable serialization of a graph as-is (no relabeling).
std::string graphKey(const IodaGraph& g);

enum class AutoMode { Ordered, UnorderedVertex };

// All symmetries as vertex permutations; the edge map is forced positionally
// by the per-vertex orders.  Accepts non-io graphs (the backtracking search is
// exactly what the order-free mode needs).
std::vector<std::vector<int>> automorphismGroup(const IodaGraph& g,
                                                AutoMode mode = AutoMode::UnorderedVertex);

// Order-preserving isomorphism search between two graphs; returns a vertex map
// g -> h if one exists.
std::optional<std::vector<int>> findIsomorphism(const IodaGraph& g, const IodaGraph& h);

struct EnumerateOptions {
    int nMinus = 0;
    int nPlus = 0;
    int maxVertices = 1;
    int maxEdges = 0;
    std::function<bool(Arity)> vertexArityFilter;  // optional
};
// One representative per iso class, sorted by canonical key.
std::vector<IodaGraph> enumerateGraphs(const EnumerateOptions& opt);

// Collapsibility of a vertex subset: induced subgraph connected and the
// quotient acyclic.  `witnessCycle` receives a quotient cycle when not.
bool isCollapsible(const IodaGraph& g, const std::vector<int>& h,
                   std::vector<int>* witnessCycle = nullptr);

// Quotient of g by a collapsible connected subgraph.  The collapsed vertex
// takes the slot of the smallest member of h; its local orders list external
// attachments by (index order of the member they attach to, position in that
// member's local order).  h = {v} returns g unchanged.
struct CollapseResult {
    IodaGraph graph;
    int newVertex = 0;            // index of the collapsed vertex
    std::vector<int> vertexMap;   // old vertex -> new vertex (h members -> newVertex)
    std::vector<int> edgeMap;     // old edge -> new edge, -1 if internal to h
};
CollapseResult collapse(const IodaGraph& g, const std::vector<int>& h);

// Graph substitution: plug inner[v] into vertex v of g.  Arity of inner[v]
// must match vertexArity(g, v); the q-th item of g's local order at v
// corresponds to the q-th leg of inner[v].
struct GraftResult {
    IodaGraph graph;
    std::vector<std::vector<int>> vertexOf;   // [v][w] -> new vertex
    std::vector<std::vector<int>> innerEdge;  // [v][e] -> new edge
    std::vector<int> outerEdge;               // [e]    -> new edge
    std::vector<std::pair<int, int>> origin;  // new vertex -> (v, w)
};
GraftResult graft(const IodaGraph& g, const std::vector<IodaGraph>& inner);

}  // namespace properad
