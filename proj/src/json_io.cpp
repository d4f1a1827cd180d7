#include "btlat/json_io.hpp"

#include <sstream>

#include "btlat/errors.hpp"

namespace btlat {

namespace {

json root_json(const RootVector& r) {
    json a = json::array();
    for (long long v : r.c) a.push_back(v);
    return a;
}

std::string facet_name(const FacetLabel& label) {
    std::string s;
    for (int a : label) {
        if (!s.empty()) s += ",";
        s += "a" + std::to_string(a);
    }
    return s;
}

json facet_names(const FacetLabel& label) {
    json a = json::array();
    for (int i : label) a.push_back("a" + std::to_string(i));
    return a;
}

json subset_json(const std::set<int>& I) {
    json a = json::array();
    for (int i : I) a.push_back(i);
    return a;
}

json functional_json(const AffineFunctional& f) {
    return json{{"linear", root_json(f.linear)}, {"constant", f.constant.str()}};
}

} // namespace

json coweight_json(const Coweight& theta) {
    json a = json::array();
    for (const auto& v : theta.x) a.push_back(v.str());
    return a;
}

Coweight parse_coweight(const std::string& csv, int rank) {
    Coweight theta;
    std::stringstream ss(csv);
    std::string field;
    while (std::getline(ss, field, ','))
        theta.x.push_back(Rat::parse(field));
    if (static_cast<int>(theta.x.size()) != rank)
        throw RankMismatch("expected " + std::to_string(rank) + " coordinates, got " +
                           std::to_string(theta.x.size()));
    return theta;
}

json rootsys_json(const RootSystem& rs) {
    json roots = json::array();
    for (const auto& r : rs.roots) roots.push_back(root_json(r));
    json j{{"schema", 1},
           {"rank", rs.rank},
           {"cartan", rs.cartan.a},
           {"num_roots", rs.num_roots()},
           {"num_positive", rs.num_positive()},
           {"dim_g", rs.dim_g()},
           {"roots", roots},
           {"highest_root", root_json(rs.highest_root)},
           {"c", rs.c},
           {"e", rs.e},
           {"d", rs.d}};
    return j;
}

json alcove_json(const RootSystem& rs) {
    json verts = json::array();
    for (const auto& v : alcove_vertices(rs)) verts.push_back(coweight_json(v));
    json walls = json::array();
    for (const auto& f : affine_simple_roots(rs)) walls.push_back(functional_json(f));
    json facets = json::array();
    const int n = rs.rank;
    // By size descending then lex: open alcove first, vertices last.
    std::vector<FacetLabel> subsets;
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
        FacetLabel s;
        for (int a = 0; a <= n; ++a)
            if (mask & (1u << a)) s.insert(a);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const FacetLabel& a, const FacetLabel& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    for (const auto& I : subsets) {
        Coweight bc = barycenter(rs, I);
        facets.push_back(json{{"label", facet_names(I)},
                              {"codim", n + 1 - static_cast<int>(I.size())},
                              {"barycenter", coweight_json(bc)},
                              {"denominator", denominator_pair(rs, bc).d}});
    }
    return json{{"schema", 1},
                {"rank", n},
                {"vertices", verts},
                {"walls", walls},
                {"facets", facets}};
}

json lattice_json(const RootSystem& rs, const ParahoricLattice& lat) {
    json rows = json::array();
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        rows.push_back(json{{"root", root_json(rs.roots[i])}, {"m", lat.m[i]}});
    return json{{"schema", 1}, {"cartan_shift", lat.cartan_shift}, {"lattice", rows}};
}

json lattice_json(const RootSystem& rs, const AffineParahoricLattice& lat) {
    json rows = json::array();
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        rows.push_back(json{{"root", root_json(rs.roots[i])}, {"m", lat.m[i]}});
    return json{{"schema", 1}, {"cartan_threshold", lat.cartan_threshold}, {"lattice", rows}};
}

json orbit_json(const OrbitPoset& poset) {
    json orbits = json::array();
    for (const auto& I : poset.elements) {
        json closure = json::array();
        for (const auto& J : poset.elements)
            if (I != J && OrbitPoset::in_closure(J, I)) closure.push_back(subset_json(J));
        orbits.push_back(json{{"subset", subset_json(I)},
                              {"codim", OrbitPoset::codim(I)},
                              {"closure", closure}});
    }
    return json{{"schema", 1}, {"rank", poset.rank}, {"orbits", orbits}};
}

json bundle_json(const RootSystem& rs, const MultidegreeBundle& bundle) {
    json rows = json::array();
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        rows.push_back(json{{"root", root_json(rs.roots[i])}, {"n", bundle.n[i]}});
    return json{{"schema", 1}, {"rank", rs.rank}, {"multidegrees", rows}};
}

json restrict_json(const RootSystem& rs, const CurveDatum& c) {
    ParahoricLattice direct = restrict_direct(rs, c);
    std::vector<long long> pullback = restrict_pullback(rs, c);
    json rows = json::array();
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        rows.push_back(json{{"root", root_json(rs.roots[i])},
                            {"direct", direct.m[i]},
                            {"pullback", pullback[i]}});
    json out{{"schema", 1},
             {"k", c.k},
             {"support", subset_json(c.support())},
             {"standard", c.is_standard()},
             {"restriction", rows}};
    if (c.is_standard()) {
        out["defect"] = saturation_defect(rs, c);
        out["theta"] = coweight_json(theta_of_curve(rs, c));
    }
    return out;
}

json building_json(const BuildingGraph& graph) {
    json nodes = json::array();
    for (const auto& node : graph.nodes)
        nodes.push_back(json{{"id", node.id},
                             {"type", facet_name(node.label)},
                             {"codim", node.codim},
                             {"alcove_count", node.alcove_count},
                             {"interior", node.interior}});
    json edges = json::array();
    for (const auto& [a, b] : graph.edges) edges.push_back(json::array({a, b}));
    return json{{"schema", 1}, {"nodes", nodes}, {"edges", edges}};
}

json covers_json(const RootSystem& rs, const Coweight& theta) {
    CyclicCoverDatum cover = local_cover(rs, theta);
    EquivariantLattice eq = equivariant_model(rs, cover, theta);
    ParabolicStructure ps = parabolic_weights(rs, theta);
    json rows = json::array();
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        rows.push_back(json{{"root", root_json(rs.roots[i])}, {"j", eq.j[i]}});
    json weights = json::array();
    auto mult = ps.multiplicities();
    for (std::size_t s = 0; s < ps.weights.size(); ++s)
        weights.push_back(json{{"weight", ps.weights[s].str()},
                               {"flag_dim", ps.flag_dims[s]},
                               {"multiplicity", mult[s]}});
    return json{{"schema", 1},
                {"theta", coweight_json(theta)},
                {"degree", cover.d},
                {"lambda", cover.lambda},
                {"equivariant", rows},
                {"parabolic", weights},
                {"roundtrip", roundtrip_check(rs, theta)}};
}

std::string orbit_dot(const OrbitPoset& poset) {
    auto name = [](const std::set<int>& I) {
        if (I.empty()) return std::string("G");
        std::string s = "Z";
        for (int i : I) s += "_" + std::to_string(i);
        return s;
    };
    std::ostringstream os;
    os << "digraph orbits {\n";
    for (const auto& I : poset.elements)
        os << "  " << name(I) << " [label=\"" << name(I) << "\", codim="
           << OrbitPoset::codim(I) << "];\n";
    // Hasse edges: I -> I + {alpha}, closure order going down.
    for (const auto& I : poset.elements)
        for (int a = 1; a <= poset.rank; ++a) {
            if (I.count(a)) continue;
            std::set<int> J = I;
            J.insert(a);
            os << "  " << name(I) << " -> " << name(J) << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::string building_dot(const BuildingGraph& graph) {
    static const char* shapes[] = {"doublecircle", "circle", "box", "diamond",
                                   "hexagon", "octagon", "triangle", "ellipse"};
    std::ostringstream os;
    os << "graph building {\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        const auto& node = graph.nodes[i];
        os << "  n" << i << " [label=\"" << node.id << "\", type=\""
           << facet_name(node.label) << "\", shape=" << shapes[node.codim % 8];
        if (!node.interior) os << ", style=dashed";
        os << "];\n";
    }
    for (const auto& [a, b] : graph.edges) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace btlat
