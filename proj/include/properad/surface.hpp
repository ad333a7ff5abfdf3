#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "properad/ioda_graph.hpp"

namespace properad {

using Rational = boost::rational<long long>;

std::string rationalToString(const Rational& r);
Rational rationalFromString(const std::string& s);

// Combinatorial type of a nodal/spotted surface with ordered parametrized
// boundary circles.  Components are listed explicitly; nodes are an unordered
// multiset of component pairs; marks carry exact rational weights in [0,1].
// The unitFlag marks the exceptional modulus-zero (1,1) annulus.
struct SurfaceComponent {
    int genus = 0;
    bool operator==(const SurfaceComponent&) const = default;
};

struct SurfaceNode {
    int a = 0;
    int b = 0;  // a == b is a self-node
    bool operator==(const SurfaceNode&) const = default;
};

struct SurfaceMark {
    int component = 0;
    Rational weight{0};
    bool operator==(const SurfaceMark&) const = default;
};

struct SurfaceType {
    std::vector<SurfaceComponent> components;
    std::vector<SurfaceNode> nodes;
    std::vector<int> inputs;   // input circle i lies on component inputs[i]
    std::vector<int> outputs;
    std::vector<SurfaceMark> marks;
    bool unitFlag = false;
    bool operator==(const SurfaceType&) const = default;
};

SurfaceType unitAnnulus();
// Smooth connected surface of the given genus and arity.
SurfaceType smoothSurface(int genus, int nIn, int nOut);
// Two-disk one-node annulus with the given boundary directions, e.g.
// nodalAnnulus(0, 2) is the all-output nodal annulus.
SurfaceType nodalAnnulus(int nIn, int nOut);

Arity arity(const SurfaceType& s);
std::vector<std::string> validate(const SurfaceType& s, bool requireIo = true);
void requireValid(const SurfaceType& s, bool requireIo = true);

int boundaryCount(const SurfaceType& s, int component);
int nodeHalfCount(const SurfaceType& s, int component);
int markCount(const SurfaceType& s, int component);

// chi = sum over components of 2 - 2g - (#boundary circles + #node halves)
int eulerCharacteristic(const SurfaceType& s);
int componentEuler(const SurfaceType& s, int component);
// total genus + first Betti number of the node graph (surface connected)
int arithmeticGenus(const SurfaceType& s);

std::string canonicalSurfaceKey(const SurfaceType& s);
SurfaceType canonicalSurface(const SurfaceType& s);

enum class GluePolicy { Raw, Stabilize };

struct GlueResult {
    SurfaceType surface;
    bool allUnit = false;                     // composition collapsed to the unit annulus
    std::vector<std::vector<int>> componentOf;  // [v][c] -> raw glued component
    std::vector<std::vector<int>> nodeOf;       // [v][n] -> raw glued node
};

// Glue surfaces along an ioda-graph; the q-th item of g's local order at v
// corresponds to the q-th boundary circle of surfaces[v].  Unit annuli are
// spliced out first.  Provenance refers to the surface before stabilization.
GlueResult glue(const IodaGraph& g, const std::vector<SurfaceType>& surfaces,
                GluePolicy policy = GluePolicy::Raw, bool enforceIo = true);

// Iteratively removes closed genus-0 components with fewer than three special
// points (node halves + marks): one node -> smoothed, two nodes -> fused,
// node + mark -> mark transferred across the node.
SurfaceType stabilize(const SurfaceType& s);
// Same fixed point reached with a seeded choice of removal order.
SurfaceType stabilizeShuffled(const SurfaceType& s, unsigned seed);
bool isStable(const SurfaceType& s);

// Drops weight-0 marks; stabilizes afterwards when requested.
SurfaceType normalizeSpots(const SurfaceType& s, bool stabilizeAfter = false);

enum class ProperadName {
    M, DPlusM, Mbar, Mhat,
    Munst, MbarUnst, MhatUnst, DPlusMunst,
    Mnop,
    DPlusBlackM, DPlusBlackMunst, MhatBlackUnst,
    ScriptM, ScriptMnop,
    DutchM, DutchMbar, DutchMunst, DutchMbarUnst,
};

extern const std::vector<ProperadName> kAllProperadNames;
std::string properadNameToString(ProperadName n);
std::optional<ProperadName> properadNameFromString(const std::string& s);

// Whether composing members of the family requires stabilization.
GluePolicy policyFor(ProperadName n);

struct Membership {
    bool member = false;
    std::string reason;  // first failed clause when not a member
};
Membership membership(const SurfaceType& s, ProperadName name);

// Step function of the thresholds 0 < a_1 < ... < a_k < 1, applied to each
// weight: 0 below a_1, (a_r + a_{r+1})/2 between a_r and a_{r+1}, 1 above a_k,
// endpoints 0 -> 0 and 1 -> 1.  A weight equal to a threshold is an error.
std::vector<Rational> rhoApply(const std::vector<Rational>& weights,
                               const std::vector<Rational>& thresholds);

}  // namespace properad
