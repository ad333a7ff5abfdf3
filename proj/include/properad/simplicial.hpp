#pragma once

#include <functional>
#include <stdexcept>

#include "properad/properad.hpp"

namespace properad {

// Truncated simplicial object in functional form, so corrupted variants can be
// built for negative controls.  Carriers are nested graphs; the level is
// derived from the value.
struct TruncatedSimplicialObject {
    int N = 0;
    std::function<int(const NestedGraph&)> level;
    std::function<NestedGraph(const NestedGraph&, int)> face;
    std::function<NestedGraph(const NestedGraph&, int)> degeneracy;
    std::function<std::string(const NestedGraph&)> key;
};

TruncatedSimplicialObject barObject(const Properad& P, int N);

struct IdentityFailure {
    std::string identity;
    std::string witness;
};

struct SuiteReport {
    int checked = 0;
    std::vector<IdentityFailure> failures;
    bool passed() const { return failures.empty(); }
};

// All five identity families on every sample where both sides are defined
// within the truncation.
SuiteReport checkSimplicialIdentities(const TruncatedSimplicialObject& S,
                                      const std::vector<NestedGraph>& samples);

// x is degenerate iff s_i(d_i(x)) == x for some i.
bool isLatching(const TruncatedSimplicialObject& S, const NestedGraph& x);

// Extra degeneracy s_{-1}: level r -> r+1 for every 0 <= r <= N-1, with
// d_0 s_{-1} = id, d_{i+1} s_{-1} = s_{-1} d_i and s_{j+1} s_{-1} = s_{-1} s_j.
struct ContractionData {
    std::string name;
    std::function<NestedGraph(const NestedGraph&)> sMinus1;
};

// s_{-1} = eta: wrap the whole simplex in a corolla.
ContractionData etaContraction();

// s_{-1} grouping the top vertices by the node-cut piece of the composed
// surface each lands in; defined when every top vertex composes to a smooth
// surface or to the nodal annulus.
ContractionData groupedContraction();

SuiteReport checkContraction(const TruncatedSimplicialObject& S, const ContractionData& C,
                             const std::vector<NestedGraph>& samples);

// psi_i = s_0^i s_{-1} d_0^i, the simplicial homotopy induced by s_{-1}.
NestedGraph psi(const TruncatedSimplicialObject& S, const ContractionData& C,
                const NestedGraph& x, int i);
SuiteReport checkPsiSuite(const TruncatedSimplicialObject& S, const ContractionData& C,
                          const std::vector<NestedGraph>& samples);

// Vertex-wise surface refinement.  Vertices of refine(s) are the components
// of s followed by one all-output nodal annulus per node; edges run from the
// annuli into the components.
struct RefinementOracle {
    std::string name;
    std::function<NestedGraph(const SurfaceType&)> refine;
};

RefinementOracle nodeCutOracle();
NestedGraph nodeCutRefine(const SurfaceType& s);

// Raised when a refinement fails its contract on some composed surface; the
// witness is the canonical key of that surface.
struct CutError : std::runtime_error {
    CutError(const std::string& msg, std::string w)
        : std::runtime_error(msg + " [witness " + w + "]"), witness(std::move(w)) {}
    std::string witness;
};

// The cut simplicial map c and its homotopy phi~ to the identity, built from
// a refinement oracle over the raw surface gluing.
class CutMachine {
  public:
    explicit CutMachine(RefinementOracle oracle);
    NestedGraph cut(const NestedGraph& x) const;
    // phi~_j for 0 <= j <= level(x); d_0 phi~_0 = cut, d_{r+1} phi~_r = id.
    NestedGraph homotopy(const NestedGraph& x, int j) const;
    const RefinementOracle& oracle() const { return oracle_; }

  private:
    RefinementOracle oracle_;
};

CutMachine buildCutMap(RefinementOracle oracle);

// c commutes with every face and degeneracy.
SuiteReport checkCutSimplicial(const TruncatedSimplicialObject& S, const CutMachine& M,
                               const std::vector<NestedGraph>& samples);
// End conditions and coherences of phi~.
SuiteReport checkCutHomotopy(const TruncatedSimplicialObject& S, const CutMachine& M,
                             const std::vector<NestedGraph>& samples);
// psi_0 c = c psi_0^{ns}: grouped s_{-1} after the cut equals the cut of the
// eta-wrapped simplex.
SuiteReport checkCompatibility(const CutMachine& M, const std::vector<NestedGraph>& samples);

}  // namespace properad
