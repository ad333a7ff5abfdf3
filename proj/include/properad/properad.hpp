#pragma once

#include <memory>

#include "properad/nested.hpp"

namespace properad {

// G-algebra: a carrier with an evaluation of element-labeled graphs.
class Properad {
  public:
    virtual ~Properad() = default;
    virtual std::string name() const = 0;
    // evaluate a depth-1 nested graph whose leaves belong to the carrier
    virtual Element evaluate(const NestedGraph& depth1) const = 0;
    virtual bool contains(const Element& e) const = 0;
};

// Fully evaluate a nested value of any depth to a carrier element.
Element evaluateNested(const Properad& P, const NestedGraph& x);

// Evaluate the innermost graphs only (depth k -> k-1); the truncation face d_n.
NestedGraph innerEvaluate(const Properad& P, const NestedGraph& x);

struct PresentedProperad {
    std::vector<Label> alphabet;
};

class FreeProperad : public Properad {
  public:
    explicit FreeProperad(PresentedProperad pres);
    std::string name() const override { return "free"; }
    Element evaluate(const NestedGraph& depth1) const override;
    bool contains(const Element& e) const override;
    const std::vector<Label>& alphabet() const { return pres_.alphabet; }
    // generator as a carrier element (corolla labeling)
    Element etaLabel(const Label& l) const;

  private:
    PresentedProperad pres_;
};

class SurfaceProperad : public Properad {
  public:
    SurfaceProperad(std::string name, GluePolicy policy,
                    std::optional<ProperadName> family = std::nullopt);
    std::string name() const override { return name_; }
    Element evaluate(const NestedGraph& depth1) const override;
    bool contains(const Element& e) const override;
    GluePolicy policy() const { return policy_; }

  private:
    std::string name_;
    GluePolicy policy_;
    std::optional<ProperadName> family_;
};

SurfaceProperad surfaceProperadFor(ProperadName family);

// p composed with q along a nonempty pairing of p's outputs with q's inputs.
Element partialCompose(const Properad& P, const Element& p, const Element& q,
                       const std::vector<std::pair<int, int>>& pairing);

// Permutation action on the global leg orders; sigmaIn and sigmaOut map
// positions of the acted element to positions of the original.
Element actSigma(const Properad& P, const Element& p, const std::vector<int>& sigmaIn,
                 const std::vector<int>& sigmaOut);

// Bar complex: level n holds depth-(n+1) nested values over P; faces flatten
// (d_i, i < n) or evaluate innermost (d_n); degeneracies insert nesting.
struct BarComplex {
    const Properad* P = nullptr;
    int N = 0;
    int level(const NestedGraph& x) const { return x.depth - 1; }
    NestedGraph face(const NestedGraph& x, int i) const;
    NestedGraph degeneracy(const NestedGraph& x, int i) const;
};
BarComplex bar(const Properad& P, int N);

}  // namespace properad
