#pragma once

#include <set>
#include <vector>

#include "btlat/parahoric.hpp"
#include "btlat/rootsys.hpp"

namespace btlat {

/// Orbit combinatorics of the wonderful compactification: orbits are
/// indexed by subsets I of the simple roots, with Z_I in the closure of
/// Z_J iff J is contained in I. Codimension of Z_I is |I|.
struct OrbitPoset {
    int rank = 0;
    std::vector<std::set<int>> elements; // all subsets, by size then lex (1-based indices)

    static int codim(const std::set<int>& I) { return static_cast<int>(I.size()); }
    static bool in_closure(const std::set<int>& I, const std::set<int>& J); // Z_I ⊆ cl(Z_J)
};

OrbitPoset orbit_poset(const RootSystem& rs);

/// Dominant 1-PS lambda = sum k_alpha omega_alpha^vee; standard when
/// every k_alpha is 0 or 1. Its support is the orbit it meets.
struct CurveDatum {
    std::vector<long long> k;

    bool is_dominant() const {
        for (long long v : k)
            if (v < 0) return false;
        return true;
    }
    bool is_standard() const {
        for (long long v : k)
            if (v != 0 && v != 1) return false;
        return is_dominant();
    }
    std::set<int> support() const {
        std::set<int> s;
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] != 0) s.insert(static_cast<int>(i) + 1);
        return s;
    }
};

/// theta_lambda = sum k_alpha theta_alpha / (rank+1).
Coweight theta_of_curve(const RootSystem& rs, const CurveDatum& c);

/// Divisor-exponent model of the Lie-algebra bundle on the dominant
/// toric chart: n[r][alpha] is the exponent of the divisor H_alpha in
/// the line summand for root r.
struct MultidegreeBundle {
    std::vector<std::vector<long long>> n; // parallel to RootSystem::roots
};

/// n_{r,alpha} = -floor(r_alpha / ((rank+1) d_alpha)).
MultidegreeBundle bundle_multidegrees(const RootSystem& rs);

/// Membership oracle: x^m X_r lies in the bundle's section lattice iff
/// (rank+1) d_alpha m_alpha + r_alpha >= 0 for every alpha (integrality
/// on the ramified cover y^{(rank+1) d_alpha} = x).
bool monomial_membership(const RootSystem& rs, const RootVector& r,
                         const std::vector<long long>& m);

/// Section-restriction lattice along the curve of c: the Ad-integrality
/// lattice parahoric_lattice(theta_of_curve(c)). Throws NotDominant.
ParahoricLattice restrict_direct(const RootSystem& rs, const CurveDatum& c);

/// Naive tensor pullback of the multidegree model along the curve:
/// e_r = sum_alpha k_alpha n_{r,alpha}. Throws NotDominant.
std::vector<long long> restrict_pullback(const RootSystem& rs, const CurveDatum& c);

/// Per-root gap restrict_pullback - restrict_direct; nonnegative, and
/// zero whenever the support is a single divisor. Throws NotStandard.
std::vector<long long> saturation_defect(const RootSystem& rs, const CurveDatum& c);

} // namespace btlat
