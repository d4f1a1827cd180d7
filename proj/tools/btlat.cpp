#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "btlat/errors.hpp"
#include "btlat/json_io.hpp"
#include "btlat/verify.hpp"

namespace {

using namespace btlat;

struct TypeChoice {
    std::string tag;
    std::string cartan_path;

    RootSystem build() const {
        if (!tag.empty()) return build_root_system(cartan_for_type(tag));
        std::ifstream in(cartan_path);
        if (!in) throw std::runtime_error("cannot open " + cartan_path);
        json j = json::parse(in);
        CartanMatrix cm;
        cm.a = (j.is_object() ? j.at("cartan") : j).get<std::vector<std::vector<long long>>>();
        cm.validate();
        return build_root_system(cm);
    }
};

void add_type_options(CLI::App* cmd, TypeChoice& tc) {
    cmd->fallthrough(); // app-level flags like --seed may follow the subcommand
    auto* t = cmd->add_option("--type", tc.tag, "type tag (A1..A7, B2..B4, C2..C4, D4, G2, F4)");
    auto* c = cmd->add_option("--cartan", tc.cartan_path, "path to a Cartan matrix JSON file");
    t->excludes(c);
    c->excludes(t);
    cmd->callback([&tc, cmd]() {
        if (tc.tag.empty() && tc.cartan_path.empty())
            throw CLI::RequiredError(cmd->get_name() + ": --type or --cartan");
    });
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::set<int> parse_index_set(const std::string& csv, int lo, int hi) {
    std::set<int> out;
    std::stringstream ss(csv);
    std::string field;
    while (std::getline(ss, field, ',')) {
        int v = std::stoi(field);
        if (v < lo || v > hi)
            throw std::out_of_range("index " + field + " outside [" + std::to_string(lo) +
                                    ", " + std::to_string(hi) + "]");
        out.insert(v);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact parahoric lattice and alcove combinatorics"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized suites")->capture_default_str();

    TypeChoice tc;

    auto* cmd_rootsys = app.add_subcommand("rootsys", "root system summary");
    bool rootsys_json_flag = false;
    add_type_options(cmd_rootsys, tc);
    cmd_rootsys->add_flag("--json", rootsys_json_flag, "machine-readable output");

    auto* cmd_alcove = app.add_subcommand("alcove", "fundamental alcove: vertices, walls, facets");
    add_type_options(cmd_alcove, tc);

    auto* cmd_parahoric = app.add_subcommand("parahoric", "parahoric lattice at a point");
    std::string theta_csv, std_csv;
    bool generators = false, parahoric_json_flag = false;
    add_type_options(cmd_parahoric, tc);
    auto* theta_opt = cmd_parahoric->add_option("--theta", theta_csv,
                                                "coweight coordinates, e.g. 1/3,1/3");
    auto* std_opt = cmd_parahoric->add_option("--std", std_csv,
                                              "standard parahoric for a simple-root subset");
    theta_opt->excludes(std_opt);
    std_opt->excludes(theta_opt);
    cmd_parahoric->add_flag("--generators", generators, "print the generators view");
    cmd_parahoric->add_flag("--json", parahoric_json_flag, "machine-readable output");

    auto* cmd_orbits = app.add_subcommand("orbits", "wonderful orbit poset");
    bool orbits_dot = false;
    add_type_options(cmd_orbits, tc);
    cmd_orbits->add_flag("--dot", orbits_dot, "DOT digraph output");

    auto* cmd_bundle = app.add_subcommand("bundle", "toric-chart multidegrees");
    add_type_options(cmd_bundle, tc);

    auto* cmd_restrict = app.add_subcommand("restrict", "restriction of the bundle to a curve");
    std::string k_csv;
    add_type_options(cmd_restrict, tc);
    cmd_restrict->add_option("--k", k_csv, "curve exponents, e.g. 1,1")->required();

    auto* cmd_building = app.add_subcommand("building", "facet graph of an alcove window");
    int radius = 1;
    bool building_dot_flag = false;
    add_type_options(cmd_building, tc);
    cmd_building->add_option("--radius", radius, "word-length radius")->capture_default_str();
    cmd_building->add_flag("--dot", building_dot_flag, "DOT graph output");

    auto* cmd_covers = app.add_subcommand("covers", "cyclic-cover model at a point");
    std::string covers_theta_csv;
    add_type_options(cmd_covers, tc);
    cmd_covers->add_option("--theta", covers_theta_csv, "coweight coordinates")->required();

    auto* cmd_verify = app.add_subcommand("verify", "invariant suites");
    bool verify_all = false;
    add_type_options(cmd_verify, tc);
    cmd_verify->add_flag("--all", verify_all, "run every suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_rootsys->parsed()) {
            RootSystem rs = tc.build();
            if (rootsys_json_flag) {
                emit(rootsys_json(rs));
            } else {
                std::cout << "rank " << rs.rank << ", " << rs.num_roots() << " roots, dim g = "
                          << rs.dim_g() << "\n";
                std::cout << "highest root " << rs.highest_root.str() << "\n";
                for (int a = 0; a < rs.rank; ++a)
                    std::cout << "alpha_" << a + 1 << ": c = " << rs.c[a] << ", e = " << rs.e[a]
                              << ", d = " << rs.d[a] << "\n";
            }
        } else if (cmd_alcove->parsed()) {
            RootSystem rs = tc.build();
            emit(alcove_json(rs));
        } else if (cmd_parahoric->parsed()) {
            RootSystem rs = tc.build();
            ParahoricLattice lat;
            if (!std_csv.empty()) {
                lat = std_parahoric(rs, parse_index_set(std_csv, 1, rs.rank));
            } else if (!theta_csv.empty()) {
                lat = parahoric_lattice(rs, parse_coweight(theta_csv, rs.rank));
            } else {
                std::cerr << "parahoric: --theta or --std required\n";
                return 1;
            }
            if (parahoric_json_flag) emit(lattice_json(rs, lat));
            if (generators || !parahoric_json_flag)
                for (const auto& line : generators_view(rs, lat)) std::cout << line << "\n";
        } else if (cmd_orbits->parsed()) {
            RootSystem rs = tc.build();
            OrbitPoset poset = orbit_poset(rs);
            if (orbits_dot)
                std::cout << orbit_dot(poset);
            else
                emit(orbit_json(poset));
        } else if (cmd_bundle->parsed()) {
            RootSystem rs = tc.build();
            emit(bundle_json(rs, bundle_multidegrees(rs)));
        } else if (cmd_restrict->parsed()) {
            RootSystem rs = tc.build();
            CurveDatum c;
            std::stringstream ss(k_csv);
            std::string field;
            while (std::getline(ss, field, ',')) c.k.push_back(std::stoll(field));
            if (static_cast<int>(c.k.size()) != rs.rank)
                throw RankMismatch("restrict: expected " + std::to_string(rs.rank) +
                                   " exponents");
            emit(restrict_json(rs, c));
        } else if (cmd_building->parsed()) {
            RootSystem rs = tc.build();
            if (radius < 0) throw std::out_of_range("building: radius must be >= 0");
            BuildingGraph graph = building_window(rs, radius);
            if (building_dot_flag)
                std::cout << building_dot(graph);
            else
                emit(building_json(graph));
        } else if (cmd_covers->parsed()) {
            RootSystem rs = tc.build();
            emit(covers_json(rs, parse_coweight(covers_theta_csv, rs.rank)));
        } else if (cmd_verify->parsed()) {
            if (tc.tag.empty()) {
                std::cerr << "verify: a --type tag is required\n";
                return 1;
            }
            (void)verify_all; // the full suite is the only mode
            auto results = run_all(tc.tag, seed);
            std::cout << render_report(tc.tag, seed, results);
            if (!all_ok(results)) return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
