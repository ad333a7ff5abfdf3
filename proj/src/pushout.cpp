#include "properad/pushout.hpp"

#include <map>
#include <stdexcept>

namespace properad {

namespace {

int findLabel(const std::vector<Label>& labels, const Label& l) {
    for (size_t k = 0; k < labels.size(); ++k)
        if (labels[k].name == l.name && labels[k].ar == l.ar) return static_cast<int>(k);
    return -1;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PushoutProperad::PushoutProperad(FreeProperad X, FreeProperad Z, FreeProperad Y, GeneratorMap i,
                                 GeneratorMap j)
    : x_(std::move(X)), z_(std::move(Z)), y_(std::move(Y)) {
    combined_ = x_.alphabet();
    combined_.insert(combined_.end(), y_.alphabet().begin(), y_.alphabet().end());
    for (const auto& lx : x_.alphabet())
        for (const auto& ly : y_.alphabet())
            if (lx.name == ly.name)
                throw std::invalid_argument("pushout: alphabets share the name " + lx.name);
    size_t nz = z_.alphabet().size();
    if (i.images.size() != nz || j.images.size() != nz)
        throw std::invalid_argument("pushout: generator map size mismatch");
    UnionFind uf(static_cast<int>(combined_.size()));
    for (size_t k = 0; k < nz; ++k) {
        const Label& zl = z_.alphabet()[k];
        int xi = findLabel(x_.alphabet(), i.images[k]);
        int yi = findLabel(y_.alphabet(), j.images[k]);
        if (xi < 0 || yi < 0)
            throw std::invalid_argument("pushout: generator image not in target alphabet");
        if (!(i.images[k].ar == zl.ar) || !(j.images[k].ar == zl.ar))
            throw std::invalid_argument("pushout: generator map changes arity");
        uf.unite(xi, static_cast<int>(x_.alphabet().size()) + yi);
    }
    repOf_.resize(combined_.size());
    std::map<int, int> repIdx;
    for (size_t k = 0; k < combined_.size(); ++k) {
        int root = uf.find(static_cast<int>(k));
        auto it = repIdx.find(root);
        if (it == repIdx.end()) {
            // smallest name in the class is the representative
            int best = root;
            for (size_t m = 0; m < combined_.size(); ++m)
                if (uf.find(static_cast<int>(m)) == root && combined_[m].name < combined_[best].name)
                    best = static_cast<int>(m);
            it = repIdx.emplace(root, best).first;
        }
        repOf_[k] = it->second;
    }
    std::map<int, bool> seen;
    for (size_t k = 0; k < combined_.size(); ++k) {
        if (!seen.count(repOf_[k])) {
            seen[repOf_[k]] = true;
            quotient_.push_back(combined_[repOf_[k]]);
        }
    }
}

PushoutProperad pushoutConstruct(const FreeProperad& X, const FreeProperad& Z,
                                 const FreeProperad& Y, const GeneratorMap& i,
                                 const GeneratorMap& j) {
    return PushoutProperad(X, Z, Y, i, j);
}

Label PushoutProperad::representative(const Label& l) const {
    int k = findLabel(combined_, l);
    if (k < 0) throw std::invalid_argument("representative: unknown label " + l.name);
    return combined_[repOf_[k]];
}

bool PushoutProperad::contains(const Element& e) const {
    const auto* fe = std::get_if<FreeElement>(&e);
    if (fe == nullptr || !fe->graph || fe->graph->depth != 1) return false;
    for (const auto& v : fe->graph->values) {
        const auto* l = std::get_if<Label>(&v.leaf);
        if (l == nullptr || findLabel(combined_, *l) < 0) return false;
    }
    return true;
}

std::optional<Element> PushoutProperad::normalForm(const Element& e, long budget) const {
    if (!contains(e)) throw std::invalid_argument("normalForm: not a pushout element");
    const NestedGraph& g = *std::get<FreeElement>(e).graph;
    if (budget > 0 && static_cast<long>(g.values.size()) > budget) return std::nullopt;
    NestedGraph renamed = g;
    for (auto& v : renamed.values) v.leaf = representative(std::get<Label>(v.leaf));
    return Element(makeFreeElement(canonicalNested(renamed)));
}

Element PushoutProperad::evaluate(const NestedGraph& x) const {
    if (x.depth != 1) throw std::invalid_argument("evaluate: expected a depth-1 value");
    requireValidNested(x);
    NestedGraph expanded;
    expanded.depth = 2;
    expanded.shape = x.shape;
    for (const auto& v : x.values) {
        if (!contains(v.leaf))
            throw std::invalid_argument("evaluate: leaf is not a pushout element");
        expanded.values.push_back(*std::get<FreeElement>(v.leaf).graph);
    }
    Element flat = makeFreeElement(canonicalNested(flattenAt(expanded, 0)));
    return *normalForm(flat, 0);
}

Verdict pushoutEqual(const PushoutProperad& P, const Element& a, const Element& b, long budget) {
    auto na = P.normalForm(a, budget);
    auto nb = P.normalForm(b, budget);
    if (!na || !nb) return Verdict::Unknown;
    return elementEqual(*na, *nb) ? Verdict::Yes : Verdict::No;
}

}  // namespace properad
