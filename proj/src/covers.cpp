#include "btlat/covers.hpp"

#include <map>

#include "btlat/errors.hpp"

namespace btlat {

namespace {

Coweight lambda_as_coweight(const std::vector<long long>& lambda) {
    Coweight c;
    c.x.assign(lambda.begin(), lambda.end());
    return c;
}

long long mod_norm(long long v, long long d) {
    long long r = v % d;
    return r < 0 ? r + d : r;
}

} // namespace

CyclicCoverDatum local_cover(const RootSystem& rs, const Coweight& theta) {
    DenominatorPair dp = denominator_pair(rs, theta);
    return CyclicCoverDatum{dp.d, dp.lambda};
}

EquivariantLattice equivariant_model(const RootSystem& rs, const CyclicCoverDatum& cover,
                                     const Coweight& theta) {
    for (int i = 0; i < rs.rank; ++i)
        if (Rat(cover.lambda[i]) != Rat(cover.d) * theta.x[i])
            throw CoverMismatch("equivariant_model: cover.lambda != d * theta");
    Coweight lam = lambda_as_coweight(cover.lambda);
    EquivariantLattice eq;
    eq.j.resize(rs.num_roots());
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        Rat p = pair(rs.roots[i], lam);
        // lambda is integral, so the character exponent is an integer.
        eq.j[i] = mod_norm(p.num(), cover.d);
    }
    return eq;
}

ParahoricLattice invariant_direct_image(const RootSystem& rs, const CyclicCoverDatum& cover,
                                        const EquivariantLattice& eq) {
    if (eq.j.size() != rs.num_roots())
        throw CoverMismatch("invariant_direct_image: lattice size mismatch");
    Coweight lam = lambda_as_coweight(cover.lambda);
    ParahoricLattice lat;
    lat.m.resize(rs.num_roots());
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        long long num = eq.j[i] - pair(rs.roots[i], lam).num();
        if (num % cover.d != 0)
            throw NonIntegralExponent("invariant section exponent is not integral at root " +
                                      rs.roots[i].str());
        lat.m[i] = num / cover.d;
    }
    return lat;
}

ParabolicStructure parabolic_weights(const RootSystem& rs, const Coweight& theta) {
    facet_of(rs, theta); // throws OutsideAlcove when not in the closed alcove

    std::map<Rat, long long> mult;
    mult[Rat(0)] = rs.rank; // Cartan part
    for (const auto& r : rs.roots) mult[pair(r, theta).frac()] += 1;

    ParabolicStructure ps;
    ps.denominator = local_cover(rs, theta).d;
    long long remaining = rs.dim_g();
    for (const auto& [w, m] : mult) {
        ps.weights.push_back(w);
        ps.flag_dims.push_back(remaining);
        remaining -= m;
        // All weights are d_s / n with the cover degree as denominator.
        if (ps.denominator % w.den() != 0)
            throw std::logic_error("parabolic weight denominator does not divide cover degree");
    }
    return ps;
}

bool roundtrip_check(const RootSystem& rs, const Coweight& theta) {
    CyclicCoverDatum cover = local_cover(rs, theta);
    EquivariantLattice eq = equivariant_model(rs, cover, theta);
    if (!(invariant_direct_image(rs, cover, eq) == parahoric_lattice(rs, theta)))
        return false;

    // Weights reconstructed from the equivariant characters j_r / d.
    std::map<Rat, long long> mult;
    mult[Rat(0)] = rs.rank;
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        mult[Rat(eq.j[i], cover.d)] += 1;

    ParabolicStructure ps = parabolic_weights(rs, theta);
    if (mult.size() != ps.weights.size()) return false;
    auto expect_mult = ps.multiplicities();
    std::size_t s = 0;
    for (const auto& [w, m] : mult) {
        if (w != ps.weights[s] || m != expect_mult[s]) return false;
        ++s;
    }
    return true;
}

} // namespace btlat
