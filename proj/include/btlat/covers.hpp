#pragma once

#include <vector>

#include "btlat/apartment.hpp"
#include "btlat/parahoric.hpp"

namespace btlat {

/// Local cyclic-cover datum at one divisor: degree d with w^d = s and
/// the integral coweight lambda = d*theta.
struct CyclicCoverDatum {
    long long d = 1;
    std::vector<long long> lambda; // coords in the omega^vee basis
};

/// Equivariant monomial lattice on the cover: per root the minimal
/// normalized w-exponent j_r in [0, d) carrying the right character;
/// the Cartan part has exponent 0.
struct EquivariantLattice {
    std::vector<long long> j; // parallel to RootSystem::roots
};

/// Parabolic structure at the divisor: increasing weights d_s/n with the
/// dimensions of the flag steps F^1 ⊃ F^2 ⊃ ... (F^1 is all of g).
struct ParabolicStructure {
    std::vector<Rat> weights;          // strictly increasing, in [0, 1)
    std::vector<long long> flag_dims;  // decreasing, flag_dims[0] = dim g
    long long denominator = 1;         // n_j = cover degree

    std::vector<long long> multiplicities() const {
        std::vector<long long> m(flag_dims.size());
        for (std::size_t s = 0; s < flag_dims.size(); ++s)
            m[s] = flag_dims[s] - (s + 1 < flag_dims.size() ? flag_dims[s + 1] : 0);
        return m;
    }
};

/// Cover degree and lambda from the denominator pair of theta; for an
/// alcove vertex theta_alpha the degree is d_alpha.
CyclicCoverDatum local_cover(const RootSystem& rs, const Coweight& theta);

/// j_r = pair(r, lambda) mod d, normalized to [0, d). Throws
/// CoverMismatch if the cover does not belong to theta.
EquivariantLattice equivariant_model(const RootSystem& rs, const CyclicCoverDatum& cover,
                                     const Coweight& theta);

/// s-lattice of invariant sections: m_r = (j_r - pair(r, lambda))/d.
/// Throws NonIntegralExponent on an inconsistent equivariant model.
ParahoricLattice invariant_direct_image(const RootSystem& rs, const CyclicCoverDatum& cover,
                                        const EquivariantLattice& eq);

/// Weights = distinct fractional parts of (r, theta) over all roots,
/// together with 0 for the Cartan; flag dimensions by cumulative
/// multiplicity. Throws OutsideAlcove.
ParabolicStructure parabolic_weights(const RootSystem& rs, const Coweight& theta);

/// Full appendix equivalence at theta: the invariant direct image of
/// the equivariant model recovers the parahoric lattice, and the weights
/// reconstructed from the equivariant characters match
/// parabolic_weights.
bool roundtrip_check(const RootSystem& rs, const Coweight& theta);

} // namespace btlat
