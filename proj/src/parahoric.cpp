#include "btlat/parahoric.hpp"

#include "btlat/errors.hpp"

namespace btlat {

ParahoricLattice parahoric_lattice(const RootSystem& rs, const Coweight& theta) {
    ParahoricLattice lat;
    lat.m.resize(rs.num_roots());
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        lat.m[i] = -pair(rs.roots[i], theta).floor();
    return lat;
}

bool limit_membership(const RootSystem& rs, const LoopMonomial& mono, const Rat& a,
                      const Coweight& theta) {
    if (a <= Rat(0))
        throw NonPositiveRotation("limit_membership: rotation coefficient must be positive");
    if (mono.cartan) return mono.b >= 0;
    if (!rs.contains(mono.r))
        throw std::out_of_range("limit_membership: not a root: " + mono.r.str());
    return a * Rat(mono.b) + pair(mono.r, theta) >= Rat(0);
}

AffineParahoricLattice eta_parahoric(const RootSystem& rs, const Rat& a,
                                     const Coweight& theta) {
    if (a <= Rat(0))
        throw NonPositiveRotation("eta_parahoric: rotation coefficient must be positive");
    AffineParahoricLattice lat;
    lat.m.resize(rs.num_roots());
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        lat.m[i] = ((-pair(rs.roots[i], theta)) / a).ceil();
    return lat;
}

ParahoricLattice std_parahoric(const RootSystem& rs, const std::set<int>& I) {
    ParahoricLattice lat;
    lat.m.assign(rs.num_roots(), 0);
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        const RootVector& r = rs.roots[i];
        if (r.is_positive()) continue;
        for (int s : I) {
            if (s < 1 || s > rs.rank)
                throw std::out_of_range("std_parahoric: bad simple-root index");
            if (r.c[s - 1] != 0) {
                lat.m[i] = 1;
                break;
            }
        }
    }
    return lat;
}

bool std_vs_facet_check(const RootSystem& rs, const std::set<int>& I) {
    FacetLabel label(I.begin(), I.end());
    label.insert(0);
    return std_parahoric(rs, I) == parahoric_lattice(rs, barycenter(rs, label));
}

std::vector<std::string> generators_view(const RootSystem& rs, const ParahoricLattice& lat) {
    std::vector<std::string> out;
    out.push_back("T(k[[z]])");
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        out.push_back("u_{" + rs.roots[i].str() + "}(z^" + std::to_string(lat.m[i]) +
                      " k[[z]])");
    return out;
}

} // namespace btlat
