#include "btlat/wonderful.hpp"

#include <algorithm>

#include "btlat/errors.hpp"

namespace btlat {

bool OrbitPoset::in_closure(const std::set<int>& I, const std::set<int>& J) {
    return std::includes(I.begin(), I.end(), J.begin(), J.end());
}

OrbitPoset orbit_poset(const RootSystem& rs) {
    OrbitPoset p;
    p.rank = rs.rank;
    for (unsigned mask = 0; mask < (1u << rs.rank); ++mask) {
        std::set<int> s;
        for (int i = 0; i < rs.rank; ++i)
            if (mask & (1u << i)) s.insert(i + 1);
        p.elements.push_back(std::move(s));
    }
    std::sort(p.elements.begin(), p.elements.end(),
              [](const std::set<int>& a, const std::set<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return p;
}

Coweight theta_of_curve(const RootSystem& rs, const CurveDatum& c) {
    if (static_cast<int>(c.k.size()) != rs.rank)
        throw RankMismatch("theta_of_curve: rank mismatch");
    Coweight theta;
    theta.x.resize(rs.rank);
    for (int i = 0; i < rs.rank; ++i)
        theta.x[i] = Rat(c.k[i], rs.c[i] * (rs.rank + 1));
    return theta;
}

MultidegreeBundle bundle_multidegrees(const RootSystem& rs) {
    MultidegreeBundle b;
    b.n.resize(rs.num_roots());
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        b.n[i].resize(rs.rank);
        for (int a = 0; a < rs.rank; ++a)
            b.n[i][a] = -Rat(rs.roots[i].c[a], (rs.rank + 1) * rs.d[a]).floor();
    }
    return b;
}

bool monomial_membership(const RootSystem& rs, const RootVector& r,
                         const std::vector<long long>& m) {
    if (static_cast<int>(m.size()) != rs.rank)
        throw RankMismatch("monomial_membership: rank mismatch");
    for (int a = 0; a < rs.rank; ++a)
        if ((rs.rank + 1) * rs.d[a] * m[a] + r.c[a] < 0) return false;
    return true;
}

ParahoricLattice restrict_direct(const RootSystem& rs, const CurveDatum& c) {
    if (!c.is_dominant()) throw NotDominant("restrict_direct: curve datum not dominant");
    return parahoric_lattice(rs, theta_of_curve(rs, c));
}

std::vector<long long> restrict_pullback(const RootSystem& rs, const CurveDatum& c) {
    if (!c.is_dominant()) throw NotDominant("restrict_pullback: curve datum not dominant");
    MultidegreeBundle b = bundle_multidegrees(rs);
    std::vector<long long> e(rs.num_roots(), 0);
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        for (int a = 0; a < rs.rank; ++a) e[i] += c.k[a] * b.n[i][a];
    return e;
}

std::vector<long long> saturation_defect(const RootSystem& rs, const CurveDatum& c) {
    if (!c.is_standard()) throw NotStandard("saturation_defect: curve datum not standard");
    auto pull = restrict_pullback(rs, c);
    auto direct = restrict_direct(rs, c);
    std::vector<long long> defect(rs.num_roots());
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        defect[i] = pull[i] - direct.m[i];
        if (defect[i] < 0)
            throw std::logic_error("saturation defect is negative at root " +
                                   rs.roots[i].str());
    }
    return defect;
}

} // namespace btlat
