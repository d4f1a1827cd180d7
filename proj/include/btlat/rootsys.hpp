#pragma once

#include <string>
#include <vector>

#include "btlat/rational.hpp"

namespace btlat {

/// A root written in the simple-root basis. Every element of a root set
/// has uniform-sign coefficients.
struct RootVector {
    std::vector<long long> c;

    long long height() const {
        long long h = 0;
        for (long long v : c) h += v;
        return h;
    }
    bool is_positive() const { return height() > 0; }
    RootVector operator-() const {
        RootVector r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend bool operator==(const RootVector&, const RootVector&) = default;
    friend bool operator<(const RootVector& a, const RootVector& b) {
        return a.c < b.c;
    }
    std::string str() const; // "a1+2a2" style
};

/// A rational point of the apartment, in coordinates with respect to the
/// fundamental-coweight basis {omega_alpha^vee}.
struct Coweight {
    std::vector<Rat> x;

    bool is_zero() const {
        for (const auto& v : x)
            if (!v.is_zero()) return false;
        return true;
    }
    friend bool operator==(const Coweight&, const Coweight&) = default;
};

Coweight operator+(const Coweight& a, const Coweight& b);
Coweight operator-(const Coweight& a, const Coweight& b);
Coweight operator*(const Rat& s, const Coweight& a);

struct CartanMatrix {
    // a[i][j] = <alpha_j, alpha_i^vee>
    std::vector<std::vector<long long>> a;

    int rank() const { return static_cast<int>(a.size()); }

    /// Throws NotFiniteType unless the matrix is a Cartan matrix of
    /// finite irreducible type (diagonal 2, off-diagonal <= 0, zero
    /// pattern symmetric, symmetrization positive-definite, connected
    /// Dynkin graph).
    void validate() const;
};

/// Cartan matrix for a type tag: "A1".."A7", "B2".."B4", "C2".."C4",
/// "D4", "G2", "F4". Throws NotFiniteType for anything else.
CartanMatrix cartan_for_type(const std::string& tag);

struct RootSystem {
    CartanMatrix cartan;
    int rank = 0;
    // All roots, sorted by (height, lexicographic); negatives first.
    std::vector<RootVector> roots;
    // Coroot of roots[i], integer coordinates in the omega^vee basis.
    std::vector<std::vector<long long>> coroots;
    RootVector highest_root;
    std::vector<long long> c; // highest-root coefficients per simple root
    std::vector<long long> e; // torsion order of omega_alpha^vee in P^vee/Q^vee
    std::vector<long long> d; // d_alpha = e_alpha * c_alpha

    std::size_t num_roots() const { return roots.size(); }
    std::size_t num_positive() const { return roots.size() / 2; }
    long long dim_g() const { return rank + static_cast<long long>(roots.size()); }

    /// Index of r in roots; throws std::out_of_range if absent.
    std::size_t index_of(const RootVector& r) const;
    bool contains(const RootVector& r) const;

    /// Coordinates of the coroot of the highest root (omega^vee basis).
    const std::vector<long long>& highest_coroot() const;
};

RootSystem build_root_system(const CartanMatrix& cartan);

/// Additive order of omega_alpha^vee in P^vee / Q^vee, found by brute
/// force over multiples (k = 1 .. |P^vee/Q^vee|).
long long torsion_order(const RootSystem& rs, int alpha);

/// d_alpha = e_alpha * c_alpha.
long long ramification_index(const RootSystem& rs, int alpha);

/// Natural pairing (r, theta). In our bases this is coefficient
/// extraction: sum over alpha of r_alpha * theta^(alpha).
Rat pair(const RootVector& r, const Coweight& theta);

/// Integer matrix acting on coweight coordinates.
using WeylMatrix = std::vector<std::vector<long long>>;

Coweight apply(const WeylMatrix& w, const Coweight& theta);
WeylMatrix weyl_simple_reflection(const RootSystem& rs, int alpha);

/// Full Weyl group, BFS from simple reflections, ordered by word length
/// then lexicographically on entries.
std::vector<WeylMatrix> weyl_elements(const RootSystem& rs);

/// Solves sum_i x_i alpha_i^vee = v over the rationals (the Cartan
/// matrix is invertible). Used for coroot-lattice membership.
std::vector<Rat> coroot_coordinates(const RootSystem& rs, const Coweight& v);

} // namespace btlat
