#pragma once

#include <set>
#include <vector>

#include "btlat/rootsys.hpp"

namespace btlat {

/// Affine functional theta -> pair(linear, theta) + constant.
struct AffineFunctional {
    RootVector linear;
    Rat constant;

    Rat eval(const Coweight& theta) const { return pair(linear, theta) + constant; }
    friend bool operator==(const AffineFunctional&, const AffineFunctional&) = default;
};

/// Nonempty subset of the affine simple roots; 0 stands for alpha_0,
/// i = 1..rank for alpha_i.
using FacetLabel = std::set<int>;

struct DenominatorPair {
    long long d = 1;
    std::vector<long long> lambda; // d*theta, integer coords in the omega^vee basis
};

/// Vertices of the fundamental alcove indexed by the affine simple
/// roots: entry 0 is the origin (for alpha_0), entry i is
/// theta_i = omega_i^vee / c_i.
std::vector<Coweight> alcove_vertices(const RootSystem& rs);

/// The rank+1 affine simple roots as functionals; index 0 is
/// alpha_0 = 1 - (highest root).
std::vector<AffineFunctional> affine_simple_roots(const RootSystem& rs);

/// Label of the facet containing theta: the affine simple roots that do
/// NOT vanish at theta. Throws OutsideAlcove if some functional is
/// negative.
FacetLabel facet_of(const RootSystem& rs, const Coweight& theta);

/// Barycenter theta_I of the facet Sigma_I (vertex of alpha_0 is the
/// origin). Throws EmptySubset.
Coweight barycenter(const RootSystem& rs, const FacetLabel& label);

/// Least d >= 1 with d*theta in the coroot lattice, and lambda = d*theta.
DenominatorPair denominator_pair(const RootSystem& rs, const Coweight& theta);

/// Affine transformation theta -> M*theta + q with q in the coroot
/// lattice (integer coordinates in the omega^vee basis).
struct AffineTransform {
    WeylMatrix linear;
    std::vector<long long> translation;

    Coweight apply(const Coweight& theta) const;
    friend bool operator==(const AffineTransform&, const AffineTransform&) = default;
    friend bool operator<(const AffineTransform& a, const AffineTransform& b) {
        if (a.linear != b.linear) return a.linear < b.linear;
        return a.translation < b.translation;
    }
};

AffineTransform affine_identity(int rank);
/// Generator s_beta: reflection across the wall on which the affine
/// simple functional beta vanishes (beta = 0 is the far wall).
AffineTransform affine_simple_generator(const RootSystem& rs, int beta);
AffineTransform compose(const AffineTransform& a, const AffineTransform& b);
AffineTransform inverse(const RootSystem& rs, const AffineTransform& a);
/// Word letters are applied right-to-left: word {l1,...,lk} means
/// s_{l1} ... s_{lk}. Throws InvalidWord on out-of-range letters.
AffineTransform transform_of_word(const RootSystem& rs, const std::vector<int>& word);

struct AlcoveReduction {
    Coweight point;        // representative in the closed alcove
    std::vector<int> word; // w with point = w(theta), first-applied last
};

/// Unique closed-alcove representative of theta under the affine Weyl
/// group W ⋉ Q^vee, with one transporting word.
AlcoveReduction reduce_to_alcove(const RootSystem& rs, const Coweight& theta);

} // namespace btlat
