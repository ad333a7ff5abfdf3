#include "properad/nested.hpp"

#include <sstream>
#include <stdexcept>

namespace properad {

Arity elementArity(const Element& e) {
    return std::visit(
        [](const auto& v) -> Arity {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Label>) return v.ar;
            else if constexpr (std::is_same_v<T, FreeElement>) return nestedArity(*v.graph);
            else return arity(v);
        },
        e);
}

std::string elementKey(const Element& e) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Label>)
                return "L:" + std::to_string(v.ar.in) + "," + std::to_string(v.ar.out) + ":" + v.name;
            else if constexpr (std::is_same_v<T, FreeElement>)
                return "F:" + nestedKey(*v.graph);
            else
                return "S:" + canonicalSurfaceKey(v);
        },
        e);
}

bool elementEqual(const Element& a, const Element& b) { return elementKey(a) == elementKey(b); }

Arity nestedArity(const NestedGraph& x) {
    return x.depth == 0 ? elementArity(x.leaf) : arity(x.shape);
}

std::vector<std::string> validateNested(const NestedGraph& x) {
    std::vector<std::string> diags;
    if (x.depth == 0) return diags;
    auto d = validate(x.shape);
    diags.insert(diags.end(), d.begin(), d.end());
    if (static_cast<int>(x.values.size()) != x.shape.nVertices) {
        diags.push_back("one value per shape vertex required");
        return diags;
    }
    for (int v = 0; v < x.shape.nVertices; ++v) {
        if (x.values[v].depth != x.depth - 1)
            diags.push_back("non-uniform nesting depth at vertex " + std::to_string(v));
        if (!(nestedArity(x.values[v]) == vertexArity(x.shape, v)))
            diags.push_back("value arity mismatch at vertex " + std::to_string(v));
        auto dd = validateNested(x.values[v]);
        diags.insert(diags.end(), dd.begin(), dd.end());
    }
    return diags;
}

void requireValidNested(const NestedGraph& x) {
    auto d = validateNested(x);
    if (!d.empty()) throw std::invalid_argument("invalid nested graph: " + d.front());
}

NestedGraph eta(const NestedGraph& x) {
    NestedGraph y;
    y.depth = x.depth + 1;
    y.shape = corolla(nestedArity(x));
    y.values.push_back(x);
    return y;
}

NestedGraph etaElement(const Element& e) { return eta(NestedGraph::ofElement(e)); }

NestedGraph flattenAt(const NestedGraph& x, int i) {
    if (x.depth < 2) throw std::invalid_argument("flattenAt needs depth >= 2");
    if (i < 0 || i > x.depth - 2) throw std::invalid_argument("flattenAt: level out of range");
    if (i > 0) {
        NestedGraph y = x;
        y.depth = x.depth - 1;
        for (auto& v : y.values) v = flattenAt(v, i - 1);
        return y;
    }
    std::vector<IodaGraph> shapes;
    shapes.reserve(x.values.size());
    for (auto& v : x.values) shapes.push_back(v.shape);
    GraftResult gr = graft(x.shape, shapes);
    NestedGraph y;
    y.depth = x.depth - 1;
    y.shape = std::move(gr.graph);
    y.values.reserve(gr.origin.size());
    for (auto& [v, w] : gr.origin) y.values.push_back(x.values[v].values[w]);
    return y;
}

NestedGraph insertAt(const NestedGraph& x, int i) {
    if (x.depth < 1) throw std::invalid_argument("insertAt needs depth >= 1");
    if (i < 0 || i > x.depth - 1) throw std::invalid_argument("insertAt: level out of range");
    NestedGraph y = x;
    y.depth = x.depth + 1;
    for (auto& v : y.values) v = (i == 0) ? eta(v) : insertAt(v, i - 1);
    return y;
}

NestedGraph mapLeaves(const NestedGraph& x, const std::function<Element(const Element&)>& f) {
    NestedGraph y = x;
    if (y.depth == 0) {
        y.leaf = f(x.leaf);
        return y;
    }
    for (auto& v : y.values) v = mapLeaves(v, f);
    return y;
}

NestedGraph composeNested(const IodaGraph& g, const std::vector<NestedGraph>& values) {
    if (values.empty()) throw std::invalid_argument("composeNested: no values");
    int k = values.front().depth;
    if (k < 1) throw std::invalid_argument("composeNested needs depth >= 1 values");
    for (auto& v : values)
        if (v.depth != k) throw std::invalid_argument("composeNested: mixed depths");
    std::vector<IodaGraph> shapes;
    for (auto& v : values) shapes.push_back(v.shape);
    GraftResult gr = graft(g, shapes);
    NestedGraph y;
    y.depth = k;
    y.shape = std::move(gr.graph);
    for (auto& [v, w] : gr.origin) y.values.push_back(values[v].values[w]);
    return y;
}

NestedGraph canonicalNested(const NestedGraph& x) {
    if (x.depth == 0) {
        NestedGraph y = x;
        if (auto* f = std::get_if<FreeElement>(&y.leaf))
            y.leaf = FreeElement{std::make_shared<const NestedGraph>(canonicalNested(*f->graph))};
        else if (auto* s = std::get_if<SurfaceType>(&y.leaf))
            y.leaf = canonicalSurface(*s);
        return y;
    }
    CanonicalForm cf = canonicalize(x.shape);
    NestedGraph y;
    y.depth = x.depth;
    y.shape = std::move(cf.graph);
    y.values.resize(x.values.size());
    for (size_t v = 0; v < x.values.size(); ++v)
        y.values[cf.vertexPerm[v]] = canonicalNested(x.values[v]);
    return y;
}

namespace {

std::string serializeNested(const NestedGraph& x) {
    if (x.depth == 0) return elementKey(x.leaf);
    std::ostringstream os;
    os << "D" << x.depth << "{" << graphKey(x.shape) << "[";
    for (auto& v : x.values) os << serializeNested(v) << ";";
    os << "]}";
    return os.str();
}

}  // namespace

std::string nestedKey(const NestedGraph& x) { return serializeNested(canonicalNested(x)); }

bool nestedEqual(const NestedGraph& a, const NestedGraph& b) { return nestedKey(a) == nestedKey(b); }

FreeElement makeFreeElement(const NestedGraph& depth1) {
    if (depth1.depth != 1) throw std::invalid_argument("free elements are depth-1 nested graphs");
    return FreeElement{std::make_shared<const NestedGraph>(canonicalNested(depth1))};
}

MonadLawReport checkAssociativity(const NestedGraph& depth3) {
    if (depth3.depth != 3) return {false, "associativity check needs a depth-3 value"};
    NestedGraph lhs = flattenAt(flattenAt(depth3, 1), 0);  // mu . G mu
    NestedGraph rhs = flattenAt(flattenAt(depth3, 0), 0);  // mu . mu G
    if (!nestedEqual(lhs, rhs))
        return {false, "associativity failed on " + nestedKey(depth3)};
    return {};
}

MonadLawReport checkUnitLaws(const NestedGraph& depth1) {
    if (depth1.depth != 1) return {false, "unit law check needs a depth-1 value"};
    if (!nestedEqual(flattenAt(eta(depth1), 0), depth1))
        return {false, "left unit law failed on " + nestedKey(depth1)};
    if (!nestedEqual(flattenAt(insertAt(depth1, 0), 0), depth1))
        return {false, "right unit law failed on " + nestedKey(depth1)};
    return {};
}

}  // namespace properad
