#include "properad/dot.hpp"

#include <sstream>

namespace properad {

namespace {

std::string leafLabel(const Element& e) {
    Arity a = elementArity(e);
    std::string core;
    if (const auto* l = std::get_if<Label>(&e)) {
        core = l->name;
    } else if (std::get_if<FreeElement>(&e)) {
        core = "free";
    } else {
        const auto& s = std::get<SurfaceType>(e);
        int g = 0;
        for (const auto& c : s.components) g += c.genus;
        core = "g" + std::to_string(g) + " n" + std::to_string(s.nodes.size());
        if (s.unitFlag) core = "unit";
    }
    return core + " (" + std::to_string(a.in) + "," + std::to_string(a.out) + ")";
}

// First leaf node inside a value, used as the anchor of cluster edges.
std::string repNode(const std::string& path, const NestedGraph& x) {
    if (x.depth == 0) return path;
    return repNode(path + "_0", x.values[0]);
}

void emitValue(std::ostream& os, const std::string& path, const NestedGraph& x, int indent) {
    std::string pad(indent, ' ');
    if (x.depth == 0) {
        os << pad << path << " [label=\"" << leafLabel(x.leaf) << "\" shape=box];\n";
        return;
    }
    os << pad << "subgraph cluster_" << path << " {\n";
    os << pad << "  label=\"depth " << x.depth << "\";\n";
    for (size_t v = 0; v < x.values.size(); ++v)
        emitValue(os, path + "_" + std::to_string(v), x.values[v], indent + 2);
    for (size_t e = 0; e < x.shape.edges.size(); ++e) {
        const auto& ed = x.shape.edges[e];
        std::string sp = path + "_" + std::to_string(ed.src);
        std::string dp = path + "_" + std::to_string(ed.dst);
        os << pad << "  " << repNode(sp, x.values[ed.src]) << " -> "
           << repNode(dp, x.values[ed.dst]);
        std::string attrs;
        if (x.values[ed.src].depth > 0) attrs += " ltail=cluster_" + sp;
        if (x.values[ed.dst].depth > 0) attrs += " lhead=cluster_" + dp;
        if (!attrs.empty()) os << " [" << attrs << " ]";
        os << ";\n";
    }
    os << pad << "}\n";
}

}  // namespace

std::string toDot(const NestedGraph& x) {
    std::ostringstream os;
    os << "digraph properad {\n";
    os << "  compound=true;\n  rankdir=TB;\n";
    if (x.depth == 0) {
        emitValue(os, "r", x, 2);
    } else {
        for (size_t i = 0; i < x.shape.inputs.size(); ++i) {
            os << "  in" << i << " [label=\"in " << i << "\" shape=plaintext];\n";
            os << "  { rank=source; in" << i << "; }\n";
        }
        for (size_t o = 0; o < x.shape.outputs.size(); ++o) {
            os << "  out" << o << " [label=\"out " << o << "\" shape=plaintext];\n";
            os << "  { rank=sink; out" << o << "; }\n";
        }
        emitValue(os, "r", x, 2);
        for (size_t i = 0; i < x.shape.inputs.size(); ++i) {
            std::string vp = "r_" + std::to_string(x.shape.inputs[i]);
            os << "  in" << i << " -> " << repNode(vp, x.values[x.shape.inputs[i]]);
            if (x.values[x.shape.inputs[i]].depth > 0) os << " [lhead=cluster_" << vp << " ]";
            os << ";\n";
        }
        for (size_t o = 0; o < x.shape.outputs.size(); ++o) {
            std::string vp = "r_" + std::to_string(x.shape.outputs[o]);
            os << "  " << repNode(vp, x.values[x.shape.outputs[o]]) << " -> out" << o;
            if (x.values[x.shape.outputs[o]].depth > 0) os << " [ltail=cluster_" << vp << " ]";
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string toDot(const IodaGraph& g) {
    NestedGraph x;
    x.depth = 1;
    x.shape = g;
    for (int v = 0; v < g.nVertices; ++v) {
        Arity a = vertexArity(g, v);
        x.values.push_back(NestedGraph::ofElement(Label{a, "v" + std::to_string(v)}));
    }
    return toDot(x);
}

}  // namespace properad
