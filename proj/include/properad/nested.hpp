#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "properad/ioda_graph.hpp"
#include "properad/surface.hpp"

namespace properad {

struct NestedGraph;

// Generator from a finite alphabet.
struct Label {
    Arity ar;
    std::string name;
    bool operator==(const Label&) const = default;
};

// Element of a free properad: a depth-1 nested graph in canonical form.
struct FreeElement {
    std::shared_ptr<const NestedGraph> graph;
};

using Element = std::variant<Label, FreeElement, SurfaceType>;

// Element of G^k(P): depth k of explicit uniform nesting.  Depth 0 is a bare
// element; at depth >= 1 the q-th item of the shape's local order at v
// corresponds to the q-th leg of values[v].
struct NestedGraph {
    int depth = 0;
    Element leaf;               // depth == 0
    IodaGraph shape;            // depth >= 1
    std::vector<NestedGraph> values;

    static NestedGraph ofElement(Element e) {
        NestedGraph x;
        x.depth = 0;
        x.leaf = std::move(e);
        return x;
    }
};

Arity elementArity(const Element& e);
std::string elementKey(const Element& e);
bool elementEqual(const Element& a, const Element& b);

Arity nestedArity(const NestedGraph& x);
std::vector<std::string> validateNested(const NestedGraph& x);
void requireValidNested(const NestedGraph& x);

// eta: wrap in the aligned corolla, raising depth by one.
NestedGraph eta(const NestedGraph& x);
NestedGraph etaElement(const Element& e);

// Monad multiplication at nesting level i (0 <= i <= depth-2): dissolve the
// boundary between levels i and i+1.
NestedGraph flattenAt(const NestedGraph& x, int i);

// Insert a singleton nesting at level i (0 <= i <= depth-1); section of
// flattenAt at the same level.
NestedGraph insertAt(const NestedGraph& x, int i);

// Functorial relabeling of the depth-0 leaves.
NestedGraph mapLeaves(const NestedGraph& x, const std::function<Element(const Element&)>& f);

// Compose depth-k values (k >= 1) along a graph whose vertex arities match.
NestedGraph composeNested(const IodaGraph& g, const std::vector<NestedGraph>& values);

// Canonical form: shapes canonically relabeled at every level, values carried
// along.  Equality of nested graphs is equality of canonical keys.
NestedGraph canonicalNested(const NestedGraph& x);
std::string nestedKey(const NestedGraph& x);
bool nestedEqual(const NestedGraph& a, const NestedGraph& b);

FreeElement makeFreeElement(const NestedGraph& depth1);

struct MonadLawReport {
    bool passed = true;
    std::string detail;  // first counterexample description
};

// Associativity and unit laws on one depth-3 (associativity) or depth-1
// (units) instance; callers sweep these over samples.
MonadLawReport checkAssociativity(const NestedGraph& depth3);
MonadLawReport checkUnitLaws(const NestedGraph& depth1);

}  // namespace properad
