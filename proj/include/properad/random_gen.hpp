#pragma once

#include <random>

#include "properad/pushout.hpp"
#include "properad/simplicial.hpp"

namespace properad {

using Rng = std::mt19937;

// Random connected ioda-graph of the given arity; falls back to the corolla
// when rejection sampling finds nothing within its budget.
IodaGraph randomGraph(Rng& rng, Arity a, int maxVertices, int maxEdges);

// Uniform pick from a precomputed pool of small members of the family.
SurfaceType randomSurface(Rng& rng, ProperadName name);
// Same, restricted to a given arity; empty when the pool has no such member.
std::optional<SurfaceType> randomSurface(Rng& rng, ProperadName name, Arity a);

// Random nested value of the given depth; leaves drawn per required arity.
NestedGraph randomNested(Rng& rng, int depth, Arity a, int maxVertices,
                         const std::function<Element(Rng&, Arity)>& leaf);

// Bar simplex at the given level over smooth and nodal surface leaves.
NestedGraph randomSurfaceSimplex(Rng& rng, int level, Arity a, int maxVertices);
// Same, but every top vertex composes to a smooth surface or is an eta-tower
// over the nodal annulus, so the grouped contraction applies.
NestedGraph randomGroupableSimplex(Rng& rng, int level, Arity a, int maxVertices);
// Simplex over a free properad with one generator per small arity.
NestedGraph randomFreeSimplex(Rng& rng, const FreeProperad& P, int level, Arity a,
                              int maxVertices);

// One generator per arity with 0 <= in <= maxIn, 0 <= out <= maxOut, not both
// zero; generator names are g<in>_<out>.
FreeProperad fullAlphabet(int maxIn, int maxOut);

struct ClosureReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

// Random composites of members stay members, and compositions with no
// external boundary are rejected.
ClosureReport checkClosure(ProperadName name, unsigned seed, int count);

}  // namespace properad
