#pragma once

#include <set>
#include <vector>

#include "btlat/apartment.hpp"
#include "btlat/rootsys.hpp"

namespace btlat {

/// Shift data of a parahoric Lie-algebra lattice in g(K): the root space
/// for roots[i] enters with z-exponent m[i]; the Cartan part with
/// cartan_shift (normally 0).
struct ParahoricLattice {
    std::vector<long long> m; // parallel to RootSystem::roots
    long long cartan_shift = 0;

    friend bool operator==(const ParahoricLattice&, const ParahoricLattice&) = default;
};

/// Same shift data for a rotation-twisted parahoric; the Cartan/rotation
/// part keeps the powers z^b with b >= cartan_threshold.
struct AffineParahoricLattice {
    std::vector<long long> m;
    long long cartan_threshold = 0;

    friend bool operator==(const AffineParahoricLattice&, const AffineParahoricLattice&) = default;
};

/// A single monomial generator: u_r(z^b) for a root r, or z^b on the
/// Cartan part when cartan is set.
struct LoopMonomial {
    bool cartan = false;
    RootVector r;
    long long b = 0;
};

/// m_r = -floor((r, theta)) for every root; theta need not lie in the
/// alcove.
ParahoricLattice parahoric_lattice(const RootSystem& rs, const Coweight& theta);

/// Limit oracle for eta = (a, theta), a > 0: a root monomial survives the
/// conjugation limit iff a*b + (r, theta) >= 0; a Cartan monomial iff
/// b >= 0. Throws NonPositiveRotation when a <= 0.
bool limit_membership(const RootSystem& rs, const LoopMonomial& mono, const Rat& a,
                      const Coweight& theta);

/// m_r = ceil(-(r, theta)/a); specializes to parahoric_lattice at a = 1.
AffineParahoricLattice eta_parahoric(const RootSystem& rs, const Rat& a,
                                     const Coweight& theta);

/// Standard parahoric ev^{-1}(Q_I) for I a subset of the simple roots
/// (1-based indices). m_r = 1 exactly on the negative roots whose
/// support meets I.
ParahoricLattice std_parahoric(const RootSystem& rs, const std::set<int>& I);

/// std_parahoric(I) == parahoric_lattice(barycenter(I + {alpha_0})).
bool std_vs_facet_check(const RootSystem& rs, const std::set<int>& I);

/// Textual generators view: T(k[[z]]) plus one line u_r(z^m k[[z]]) per
/// root in canonical order.
std::vector<std::string> generators_view(const RootSystem& rs, const ParahoricLattice& lat);

} // namespace btlat
