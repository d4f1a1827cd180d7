#pragma once

#include <string>
#include <vector>

#include "btlat/apartment.hpp"
#include "btlat/parahoric.hpp"

namespace btlat {

/// Rational rotation-twisted 1-PS eta = (a, theta) with a > 0.
struct EtaDatum {
    Rat a;
    Coweight theta;
};

/// eta_lambda for a 0/1-weighting k on a nonempty subset I of the affine
/// simple roots: a = (sum k)/(rank+1), theta = sum k_alpha theta_alpha /
/// (rank+1), with the alpha_0 vertex at the origin. `ones` is the set of
/// alpha in I with k_alpha = 1; it must be nonempty.
EtaDatum eta_for_subset(const RootSystem& rs, const FacetLabel& I,
                        const std::set<int>& ones);

/// Lattice of the alcove-chart bundle along the curve of (I, k):
/// eta_parahoric at eta_for_subset.
AffineParahoricLattice j_lattice(const RootSystem& rs, const FacetLabel& I,
                                 const std::set<int>& ones);

/// An affine-Weyl chart: translated fundamental alcove with its rank+1
/// wall functionals.
struct ChartDatum {
    std::vector<int> word; // canonical: shortest, lexicographically least
    std::vector<AffineFunctional> walls; // index = base-alcove letter
};

/// Shortest lexicographically-least word with the same affine transform.
std::vector<int> canonicalize_word(const RootSystem& rs, const std::vector<int>& word);

ChartDatum chart(const RootSystem& rs, const std::vector<int>& word);

/// Pushforward of a functional along a transform: (g.f)(x) = f(g^{-1} x).
AffineFunctional translate_functional(const RootSystem& rs, const AffineTransform& g,
                                      const AffineFunctional& f);

/// True iff every wall shared by the two charts (same facet of the
/// alcove decomposition, detected by equality of barycenters) carries
/// the same parahoric label and ramification number when computed
/// through either chart.
bool glue_check(const RootSystem& rs, const std::vector<int>& u,
                const std::vector<int>& v);

struct BuildingNode {
    std::string id;       // "word:a-labels" of the canonical representative
    FacetLabel label;     // parahoric facet type
    int codim = 0;        // rank+1 - |label|
    std::vector<int> rep_word;
    int alcove_count = 0; // alcoves of the window containing this facet
    bool interior = true; // all neighboring alcoves lie in the window
};

struct BuildingGraph {
    std::vector<BuildingNode> nodes;              // deterministic order
    std::vector<std::pair<int, int>> edges;       // incidence, codim difference 1
};

/// Facet-incidence graph of the window of alcoves at word length <=
/// radius, facets identified by exact barycenter equality.
BuildingGraph building_window(const RootSystem& rs, int radius);

} // namespace btlat
