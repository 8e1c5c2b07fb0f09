#include "spckit/io.hpp"

#include <sstream>

#include <json.hpp>

#include "spckit/errors.hpp"

namespace spckit {

using nlohmann::json;

std::string lattice_to_json(const FiniteLattice& l) {
    json j;
    j["schema_version"] = "1";
    j["count"] = l.size();
    json elements = json::array();
    for (int i = 0; i < l.size(); ++i) elements.push_back(l.label(i));
    j["elements"] = elements;
    json covers = json::array();
    for (auto [a, b] : l.covers()) covers.push_back({a, b});
    j["covers"] = covers;
    j["bottom"] = l.bottom();
    j["top"] = l.top();
    j["atoms"] = l.atoms();
    j["join_irreducibles"] = l.join_irreducibles();
    j["meet_irreducibles"] = l.meet_irreducibles();
    return j.dump(2) + "\n";
}

std::string complex_to_json(const SimplicialComplex& h) {
    json j;
    j["schema_version"] = "1";
    j["ground"] = h.labels();
    json facets = json::array();
    for (Mask f : h.facets()) facets.push_back(points_of(f));
    j["facets"] = facets;
    j["f_vector"] = h.f_vector();
    j["rank"] = h.rank();
    return j.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string lattice_to_dot(const FiniteLattice& l) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (int i = 0; i < l.size(); ++i)
        out << "  n" << i << " [label=\"" << dot_escape(l.label(i)) << "\"];\n";
    for (auto [a, b] : l.covers()) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string gain_graph_to_dot(const GainGraph& g) {
    std::ostringstream out;
    out << "graph gain {\n";
    for (int v = 1; v <= g.vertices(); ++v) out << "  v" << v << ";\n";
    for (int e = 1; e <= g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        out << "  v" << ed.u << " -- v" << ed.v << " [label=\""
            << dot_escape(g.group().label(ed.label)) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string gain_graph_to_edge_list(const GainGraph& g) {
    std::string out;
    for (int e = 1; e <= g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        out += std::to_string(ed.u) + " " + std::to_string(ed.v) + " " +
               g.group().label(ed.label) + "\n";
    }
    return out;
}

GainGraph gain_graph_from_edge_list(int vertices, const FiniteGroup& group,
                                    const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<GainGraph::Edge> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int u, v;
        std::string label;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v >> label))
            throw ArgumentOutOfRange("edge line must read \"u v label\": " + line);
        auto g = group.element_by_label(label);
        if (!g) throw ArgumentOutOfRange("unknown group element label: " + label);
        edges.push_back({u, v, *g});
    }
    return GainGraph(vertices, group, edges);
}

std::string matrix_to_csv(const BooleanMatrix& m) {
    std::string out;
    for (int i = 1; i <= m.rows(); ++i) {
        for (int v = 1; v <= m.cols(); ++v) {
            if (v > 1) out += ',';
            out += m.get(i, v) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

BooleanMatrix matrix_from_any_text(const std::string& text) {
    std::string plain;
    for (char c : text)
        if (c != ',' && c != ' ' && c != '\t') plain += c;
    return BooleanMatrix::from_text(plain);
}

}  // namespace spckit
