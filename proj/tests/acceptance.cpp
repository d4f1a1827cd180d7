// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <string>
#include <vector>

#include "btlat/verify.hpp"

using namespace btlat;

namespace {

const std::vector<std::string> kTypes{"A1", "A2", "A3", "B2", "C3", "G2"};

struct Criterion {
    std::string title;
    bool ok = true;
    std::string witness;

    void absorb(const std::string& tag, const CheckResult& r) {
        if (!r.ok && ok) {
            ok = false;
            witness = tag + " " + r.name + ": " + r.detail;
        }
    }
};

} // namespace

int main() {
    std::vector<Criterion> crit(9);
    crit[0].title = "root-system kernel (|Phi|, |W|, d = e*c)";
    crit[1].title = "standard parahoric = facet barycenter lattice";
    crit[2].title = "floor formula = limit-membership oracle";
    crit[3].title = "facet constancy and rotation homogeneity";
    crit[4].title = "toric restriction: clamp law and saturation defect";
    crit[5].title = "alcove-chart lattices (j = std, eta = theta)";
    crit[6].title = "building window: walls, glueing, facet count";
    crit[7].title = "cyclic-cover roundtrip and parabolic weights";
    crit[8].title = "deterministic verify reports";

    for (const auto& tag : kTypes) {
        RootSystem rs = build_root_system(cartan_for_type(tag));
        Sampler rng(1);
        crit[0].absorb(tag, check_rootsys_counts(rs, tag));
        crit[0].absorb(tag, check_rootsys_invariants(rs));
        crit[1].absorb(tag, check_standard_parahoric(rs));
        crit[2].absorb(tag, check_parahoric_oracle(rs, rng));
        crit[3].absorb(tag, check_facet_constancy(rs, rng));
        crit[3].absorb(tag, check_homogeneity(rs, rng));
        crit[4].absorb(tag, check_theorem33(rs));
        crit[4].absorb(tag, check_bundle_oracle(rs));
        crit[5].absorb(tag, check_theorem41(rs));
        crit[7].absorb(tag, check_covers_roundtrip(rs, rng));
        crit[7].absorb(tag, check_parabolic_symmetry(rs, rng));

        auto once = run_all(tag, 0);
        auto twice = run_all(tag, 0);
        if (render_report(tag, 0, once) != render_report(tag, 0, twice))
            crit[8].absorb(tag, CheckResult{"determinism", false, "reports differ"});
        crit[8].absorb(tag, CheckResult{"suites", all_ok(once),
                                        all_ok(once) ? "" : render_report(tag, 0, once)});
    }

    for (const auto& tag : {"A1", "A2"}) {
        RootSystem rs = build_root_system(cartan_for_type(tag));
        crit[6].absorb(tag, check_building(rs, 3));
        crit[6].absorb(tag, check_glue(rs, 3));
    }

    bool all = true;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        std::printf("%s criterion-%zu: %s\n", crit[i].ok ? "PASS" : "FAIL", i + 1,
                    crit[i].title.c_str());
        if (!crit[i].ok) {
            std::printf("      %s\n", crit[i].witness.c_str());
            all = false;
        }
    }
    return all ? 0 : 1;
}
