#pragma once

#include "properad/properad.hpp"

namespace properad {

// Map of properads on generators: the k-th generator of the source alphabet
// is sent to the image label (a generator of the target).
struct GeneratorMap {
    std::vector<Label> images;
};

enum class Verdict { Yes, No, Unknown };

// Pushout X <- Z -> Y of free properads along generator maps. The result is
// free on the quotient alphabet (X + Y) / (i(z) ~ j(z)); elements are
// represented by graphs over X + Y and compared via a normal form over class
// representatives.
class PushoutProperad : public Properad {
  public:
    PushoutProperad(FreeProperad X, FreeProperad Z, FreeProperad Y, GeneratorMap i,
                    GeneratorMap j);
    std::string name() const override { return "pushout"; }
    Element evaluate(const NestedGraph& depth1) const override;
    bool contains(const Element& e) const override;

    // representative generator of the class of a label from X or Y
    Label representative(const Label& l) const;
    // normal form: expand composite leaves, rename leaves to representatives,
    // canonicalize; budget caps the total vertex work (0 = unlimited)
    std::optional<Element> normalForm(const Element& e, long budget = 0) const;

    const std::vector<Label>& quotientAlphabet() const { return quotient_; }

  private:
    FreeProperad x_, z_, y_;
    std::vector<Label> combined_;   // X's alphabet then Y's
    std::vector<int> repOf_;        // index into combined_
    std::vector<Label> quotient_;   // one representative per class
};

PushoutProperad pushoutConstruct(const FreeProperad& X, const FreeProperad& Z,
                                 const FreeProperad& Y, const GeneratorMap& i,
                                 const GeneratorMap& j);

// Equality in the pushout. For free ingredients the normal form is a complete
// invariant, so the answer is decisive whenever the budget allows both normal
// forms to be computed; an exhausted budget yields Unknown, never a wrong
// verdict.
Verdict pushoutEqual(const PushoutProperad& P, const Element& a, const Element& b,
                     long budget = 0);

}  // namespace properad
