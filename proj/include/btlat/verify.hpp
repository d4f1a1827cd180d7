#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "btlat/affine.hpp"
#include "btlat/covers.hpp"
#include "btlat/parahoric.hpp"
#include "btlat/wonderful.hpp"

namespace btlat {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail; // witness on failure, brief stats on success
};

/// Deterministic splitmix64 stream; identical across platforms.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next();
    /// Uniform in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi);

private:
    std::uint64_t s_;
};

/// Random point of the closed (or open) fundamental alcove: normalized
/// random barycentric weights on the vertices.
Coweight random_alcove_point(const RootSystem& rs, Sampler& rng, bool interior);

/// Second, independent enumeration of the roots: root strings through
/// simple roots (q = p - <r, alpha_i^vee>) instead of reflection closure.
std::vector<RootVector> roots_by_strings(const CartanMatrix& cartan);

/// Closed-form |W| for a type tag; 0 when the tag is unknown.
long long weyl_order_formula(const std::string& tag);

CheckResult check_rootsys_counts(const RootSystem& rs, const std::string& tag);
CheckResult check_rootsys_invariants(const RootSystem& rs);
CheckResult check_apartment_facets(const RootSystem& rs);
CheckResult check_apartment_reduction(const RootSystem& rs, Sampler& rng);
CheckResult check_parahoric_oracle(const RootSystem& rs, Sampler& rng);
CheckResult check_facet_constancy(const RootSystem& rs, Sampler& rng);
CheckResult check_homogeneity(const RootSystem& rs, Sampler& rng);
CheckResult check_standard_parahoric(const RootSystem& rs);
CheckResult check_parahoric_structure(const RootSystem& rs, Sampler& rng);
CheckResult check_orbit_poset(const RootSystem& rs);
CheckResult check_bundle_oracle(const RootSystem& rs);
CheckResult check_theorem33(const RootSystem& rs);
CheckResult check_nonstandard_restriction(const RootSystem& rs, Sampler& rng);
CheckResult check_theorem41(const RootSystem& rs);
CheckResult check_building(const RootSystem& rs, int radius);
CheckResult check_glue(const RootSystem& rs, int max_len);
CheckResult check_covers_roundtrip(const RootSystem& rs, Sampler& rng);
CheckResult check_parabolic_symmetry(const RootSystem& rs, Sampler& rng);

/// Every suite for one type, in a fixed order.
std::vector<CheckResult> run_all(const std::string& tag, std::uint64_t seed);

std::string render_report(const std::string& tag, std::uint64_t seed,
                          const std::vector<CheckResult>& results);
bool all_ok(const std::vector<CheckResult>& results);

} // namespace btlat
