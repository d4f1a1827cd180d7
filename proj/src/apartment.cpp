#include "btlat/apartment.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "btlat/errors.hpp"

namespace btlat {

std::vector<Coweight> alcove_vertices(const RootSystem& rs) {
    std::vector<Coweight> v(rs.rank + 1);
    v[0].x.assign(rs.rank, Rat(0));
    for (int i = 0; i < rs.rank; ++i) {
        v[i + 1].x.assign(rs.rank, Rat(0));
        v[i + 1].x[i] = Rat(1, rs.c[i]);
    }
    return v;
}

std::vector<AffineFunctional> affine_simple_roots(const RootSystem& rs) {
    std::vector<AffineFunctional> out(rs.rank + 1);
    out[0].linear = -rs.highest_root;
    out[0].constant = Rat(1);
    for (int i = 0; i < rs.rank; ++i) {
        RootVector a;
        a.c.assign(rs.rank, 0);
        a.c[i] = 1;
        out[i + 1] = AffineFunctional{a, Rat(0)};
    }
    return out;
}

FacetLabel facet_of(const RootSystem& rs, const Coweight& theta) {
    FacetLabel label;
    auto funcs = affine_simple_roots(rs);
    for (int i = 0; i <= rs.rank; ++i) {
        Rat v = funcs[i].eval(theta);
        if (v < Rat(0))
            throw OutsideAlcove("facet_of: functional a" + std::to_string(i) +
                                " is negative at the given point");
        if (!v.is_zero()) label.insert(i);
    }
    return label;
}

Coweight barycenter(const RootSystem& rs, const FacetLabel& label) {
    if (label.empty()) throw EmptySubset("barycenter: empty facet label");
    auto verts = alcove_vertices(rs);
    Coweight sum;
    sum.x.assign(rs.rank, Rat(0));
    for (int i : label) {
        if (i < 0 || i > rs.rank)
            throw std::out_of_range("barycenter: bad affine root index");
        sum = sum + verts[i];
    }
    return Rat(1, static_cast<long long>(label.size())) * sum;
}

DenominatorPair denominator_pair(const RootSystem& rs, const Coweight& theta) {
    auto x = coroot_coordinates(rs, theta);
    long long d = 1;
    for (const auto& xi : x) d = std::lcm(d, xi.den());
    DenominatorPair out;
    out.d = d;
    out.lambda.resize(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        Rat li = Rat(d) * theta.x[i];
        if (!li.is_integer()) throw std::logic_error("denominator_pair: non-integral lambda");
        out.lambda[i] = li.num();
    }
    return out;
}

Coweight AffineTransform::apply(const Coweight& theta) const {
    Coweight out = btlat::apply(linear, theta);
    for (std::size_t i = 0; i < out.x.size(); ++i) out.x[i] += Rat(translation[i]);
    return out;
}

AffineTransform affine_identity(int rank) {
    AffineTransform t;
    t.linear.assign(rank, std::vector<long long>(rank, 0));
    for (int i = 0; i < rank; ++i) t.linear[i][i] = 1;
    t.translation.assign(rank, 0);
    return t;
}

AffineTransform affine_simple_generator(const RootSystem& rs, int beta) {
    if (beta < 0 || beta > rs.rank)
        throw InvalidWord("letter out of range: " + std::to_string(beta));
    const int n = rs.rank;
    AffineTransform t = affine_identity(n);
    if (beta >= 1) {
        t.linear = weyl_simple_reflection(rs, beta - 1);
        return t;
    }
    // s_0: theta -> theta - (<hr,theta> - 1) hr^vee
    const auto& hr = rs.highest_root.c;
    const auto& hrv = rs.highest_coroot();
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) t.linear[j][k] -= hrv[j] * hr[k];
        t.translation[j] = hrv[j];
    }
    return t;
}

AffineTransform compose(const AffineTransform& a, const AffineTransform& b) {
    // (a*b)(x) = a(b(x))
    const std::size_t n = a.translation.size();
    AffineTransform t;
    t.linear.assign(n, std::vector<long long>(n, 0));
    t.translation.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                t.linear[i][j] += a.linear[i][k] * b.linear[k][j];
        t.translation[i] = a.translation[i];
        for (std::size_t k = 0; k < n; ++k)
            t.translation[i] += a.linear[i][k] * b.translation[k];
    }
    return t;
}

AffineTransform inverse(const RootSystem& rs, const AffineTransform& a) {
    const int n = rs.rank;
    // Rational Gaussian inverse; Weyl matrices are unimodular so the
    // result is integral.
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(a.linear[i][j]);
        m[i][n + i] = Rat(1);
    }
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { piv = i; break; }
        if (piv < 0) throw std::logic_error("singular affine transform");
        std::swap(m[piv], m[k]);
        Rat p = m[k][k];
        for (int j = 0; j < 2 * n; ++j) m[k][j] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            Rat f = m[i][k];
            for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    AffineTransform t = affine_identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!m[i][n + j].is_integer())
                throw std::logic_error("non-integral Weyl inverse");
            t.linear[i][j] = m[i][n + j].num();
        }
    // x = M^{-1} theta - M^{-1} q
    for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += t.linear[i][j] * a.translation[j];
        t.translation[i] = -s;
    }
    return t;
}

AffineTransform transform_of_word(const RootSystem& rs, const std::vector<int>& word) {
    AffineTransform t = affine_identity(rs.rank);
    for (int letter : word) t = compose(t, affine_simple_generator(rs, letter));
    return t;
}

AlcoveReduction reduce_to_alcove(const RootSystem& rs, const Coweight& theta) {
    constexpr int kStepBound = 1000000;
    AlcoveReduction out;
    out.point = theta;
    const auto& hr = rs.highest_root.c;
    Coweight hrv;
    hrv.x.resize(rs.rank);
    for (int i = 0; i < rs.rank; ++i) hrv.x[i] = Rat(rs.highest_coroot()[i]);

    for (int step = 0; step < kStepBound; ++step) {
        int violated = -1;
        for (int i = 0; i < rs.rank; ++i)
            if (out.point.x[i] < Rat(0)) { violated = i + 1; break; }
        if (violated < 0) {
            Rat h(0);
            for (int i = 0; i < rs.rank; ++i) h += Rat(hr[i]) * out.point.x[i];
            if (h > Rat(1)) violated = 0;
        }
        if (violated < 0) {
            std::reverse(out.word.begin(), out.word.end()); // first-applied last
            return out;
        }
        if (violated >= 1) {
            // s_i: theta - <alpha_i, theta> alpha_i^vee
            Rat t = out.point.x[violated - 1];
            for (int j = 0; j < rs.rank; ++j)
                out.point.x[j] -= t * Rat(rs.cartan.a[violated - 1][j]);
        } else {
            Rat h(0);
            for (int i = 0; i < rs.rank; ++i) h += Rat(hr[i]) * out.point.x[i];
            out.point = out.point - ((h - Rat(1)) * hrv);
        }
        out.word.push_back(violated);
    }
    throw std::logic_error("reduce_to_alcove: step bound exceeded");
}

} // namespace btlat
