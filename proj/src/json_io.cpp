#include "properad/json_io.hpp"

namespace properad {

namespace {

Json portsToJson(const std::vector<Port>& ports) {
    Json arr = Json::array();
    for (const Port& p : ports)
        arr.push_back({{"kind", p.kind == Port::Edge ? "edge" : "leg"}, {"index", p.index}});
    return arr;
}

std::vector<Port> portsFromJson(const Json& j) {
    std::vector<Port> ports;
    for (const auto& p : j) {
        std::string kind = p.at("kind").get<std::string>();
        if (kind != "edge" && kind != "leg") throw std::invalid_argument("bad port kind " + kind);
        ports.push_back({kind == "edge" ? Port::Edge : Port::Leg, p.at("index").get<int>()});
    }
    return ports;
}

}  // namespace

Json graphToJson(const IodaGraph& g) {
    Json j;
    j["vertices"] = g.nVertices;
    Json edges = Json::array();
    for (size_t e = 0; e < g.edges.size(); ++e)
        edges.push_back(
            {{"id", static_cast<int>(e)}, {"src", g.edges[e].src}, {"dst", g.edges[e].dst}});
    j["edges"] = edges;
    Json in = Json::array(), out = Json::array();
    for (size_t i = 0; i < g.inputs.size(); ++i)
        in.push_back({{"id", static_cast<int>(i)}, {"vertex", g.inputs[i]}});
    for (size_t o = 0; o < g.outputs.size(); ++o)
        out.push_back({{"id", static_cast<int>(o)}, {"vertex", g.outputs[o]}});
    j["inputs"] = in;
    j["outputs"] = out;
    Json orders = Json::array();
    for (int v = 0; v < g.nVertices; ++v)
        orders.push_back({{"in", portsToJson(g.inOrder[v])}, {"out", portsToJson(g.outOrder[v])}});
    j["orders"] = orders;
    return j;
}

IodaGraph graphFromJson(const Json& j) {
    IodaGraph g;
    g.nVertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) g.edges.push_back({e.at("src"), e.at("dst")});
    for (const auto& i : j.at("inputs")) g.inputs.push_back(i.at("vertex").get<int>());
    for (const auto& o : j.at("outputs")) g.outputs.push_back(o.at("vertex").get<int>());
    for (const auto& ord : j.at("orders")) {
        g.inOrder.push_back(portsFromJson(ord.at("in")));
        g.outOrder.push_back(portsFromJson(ord.at("out")));
    }
    requireValid(g, false);
    return g;
}

Json surfaceToJson(const SurfaceType& s) {
    Json j;
    Json comps = Json::array();
    for (const auto& c : s.components) comps.push_back({{"genus", c.genus}});
    j["components"] = comps;
    Json nodes = Json::array();
    for (const auto& n : s.nodes) nodes.push_back({{"a", n.a}, {"b", n.b}});
    j["nodes"] = nodes;
    j["inputs"] = s.inputs;
    j["outputs"] = s.outputs;
    Json marks = Json::array();
    for (const auto& m : s.marks)
        marks.push_back({{"component", m.component}, {"weight", rationalToString(m.weight)}});
    j["marks"] = marks;
    j["unit"] = s.unitFlag;
    return j;
}

SurfaceType surfaceFromJson(const Json& j) {
    SurfaceType s;
    for (const auto& c : j.at("components")) s.components.push_back({c.at("genus").get<int>()});
    for (const auto& n : j.at("nodes")) s.nodes.push_back({n.at("a"), n.at("b")});
    s.inputs = j.at("inputs").get<std::vector<int>>();
    s.outputs = j.at("outputs").get<std::vector<int>>();
    for (const auto& m : j.at("marks"))
        s.marks.push_back(
            {m.at("component").get<int>(), rationalFromString(m.at("weight").get<std::string>())});
    s.unitFlag = j.at("unit").get<bool>();
    requireValid(s, false);
    return s;
}

Json elementToJson(const Element& e) {
    if (const auto* l = std::get_if<Label>(&e))
        return {{"type", "label"}, {"in", l->ar.in}, {"out", l->ar.out}, {"name", l->name}};
    if (const auto* f = std::get_if<FreeElement>(&e))
        return {{"type", "free"}, {"graph", nestedToJson(*f->graph)}};
    return {{"type", "surface"}, {"surface", surfaceToJson(std::get<SurfaceType>(e))}};
}

Element elementFromJson(const Json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "label")
        return Label{{j.at("in").get<int>(), j.at("out").get<int>()},
                     j.at("name").get<std::string>()};
    if (type == "free") return makeFreeElement(nestedFromJson(j.at("graph")));
    if (type == "surface") return surfaceFromJson(j.at("surface"));
    throw std::invalid_argument("bad element type " + type);
}

Json nestedToJson(const NestedGraph& x) {
    Json j;
    j["depth"] = x.depth;
    if (x.depth == 0) {
        j["element"] = elementToJson(x.leaf);
        return j;
    }
    j["shape"] = graphToJson(x.shape);
    Json values = Json::array();
    for (const auto& v : x.values) values.push_back(nestedToJson(v));
    j["values"] = values;
    return j;
}

NestedGraph nestedFromJson(const Json& j) {
    NestedGraph x;
    x.depth = j.at("depth").get<int>();
    if (x.depth == 0) {
        x.leaf = elementFromJson(j.at("element"));
        return x;
    }
    x.shape = graphFromJson(j.at("shape"));
    for (const auto& v : j.at("values")) x.values.push_back(nestedFromJson(v));
    requireValidNested(x);
    return x;
}

std::string toJsonString(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace properad
