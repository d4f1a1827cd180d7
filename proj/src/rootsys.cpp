#include "btlat/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "btlat/errors.hpp"

namespace btlat {

std::string RootVector::str() const {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        long long v = c[i];
        if (v == 0) continue;
        if (!out.empty() && v > 0) out += "+";
        if (v == -1)
            out += "-";
        else if (v != 1)
            out += std::to_string(v);
        out += "a" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

Coweight operator+(const Coweight& a, const Coweight& b) {
    if (a.x.size() != b.x.size()) throw RankMismatch("coweight rank mismatch");
    Coweight r = a;
    for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] += b.x[i];
    return r;
}

Coweight operator-(const Coweight& a, const Coweight& b) {
    if (a.x.size() != b.x.size()) throw RankMismatch("coweight rank mismatch");
    Coweight r = a;
    for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] -= b.x[i];
    return r;
}

Coweight operator*(const Rat& s, const Coweight& a) {
    Coweight r = a;
    for (auto& v : r.x) v *= s;
    return r;
}

namespace {

// Leading principal minors of the symmetrized matrix, exact.
bool symmetrization_positive_definite(const std::vector<std::vector<long long>>& a) {
    const int n = static_cast<int>(a.size());
    // Find positive weights w_i with w_i a_ij = w_j a_ji by graph walk.
    std::vector<Rat> w(n, Rat(0));
    std::vector<int> stack;
    w[0] = Rat(1);
    stack.push_back(0);
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (i == j || a[i][j] == 0) continue;
            Rat wj = w[i] * Rat(a[i][j], a[j][i]);
            if (w[j].is_zero()) {
                w[j] = wj;
                stack.push_back(j);
            } else if (w[j] != wj) {
                return false; // not symmetrizable
            }
        }
    }
    for (const auto& v : w)
        if (v <= Rat(0)) return false; // disconnected handled by caller

    std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[i][j] = w[i] * Rat(a[i][j]);

    // Gaussian elimination; all pivots must stay positive.
    for (int k = 0; k < n; ++k) {
        if (s[k][k] <= Rat(0)) return false;
        for (int i = k + 1; i < n; ++i) {
            Rat f = s[i][k] / s[k][k];
            for (int j = k; j < n; ++j) s[i][j] -= f * s[k][j];
        }
    }
    return true;
}

bool graph_connected(const std::vector<std::vector<long long>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (!seen[j] && a[i][j] != 0) {
                seen[j] = true;
                ++count;
                stack.push_back(j);
            }
        }
    }
    return count == n;
}

} // namespace

void CartanMatrix::validate() const {
    const int n = rank();
    if (n == 0) throw NotFiniteType("empty Cartan matrix");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n)
            throw NotFiniteType("Cartan matrix is not square");
        if (a[i][i] != 2) throw NotFiniteType("diagonal entry is not 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw NotFiniteType("positive off-diagonal entry");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw NotFiniteType("asymmetric zero pattern");
        }
    }
    if (!graph_connected(a))
        throw NotFiniteType("reducible Cartan matrix (Dynkin graph disconnected)");
    if (!symmetrization_positive_definite(a))
        throw NotFiniteType("symmetrization is not positive-definite");
}

CartanMatrix cartan_for_type(const std::string& tag) {
    if (tag.size() != 2) throw NotFiniteType("unknown type tag: " + tag);
    const char family = tag[0];
    const int n = tag[1] - '0';
    auto chain = [](int n) {
        CartanMatrix m;
        m.a.assign(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) {
            m.a[i][i] = 2;
            if (i + 1 < n) m.a[i][i + 1] = m.a[i + 1][i] = -1;
        }
        return m;
    };
    if (family == 'A' && n >= 1 && n <= 7) return chain(n);
    if (family == 'B' && n >= 2 && n <= 4) {
        CartanMatrix m = chain(n);
        m.a[n - 1][n - 2] = -2; // alpha_n short
        return m;
    }
    if (family == 'C' && n >= 2 && n <= 4) {
        CartanMatrix m = chain(n);
        m.a[n - 2][n - 1] = -2; // alpha_n long
        return m;
    }
    if (family == 'D' && n == 4) {
        CartanMatrix m = chain(4);
        m.a[2][3] = m.a[3][2] = 0;
        m.a[1][3] = m.a[3][1] = -1; // fork at node 2
        return m;
    }
    if (family == 'G' && n == 2) {
        CartanMatrix m;
        m.a = {{2, -3}, {-1, 2}}; // alpha_1 long; highest root 3a1+2a2
        return m;
    }
    if (family == 'F' && n == 4) {
        CartanMatrix m = chain(4);
        m.a[1][2] = -1;
        m.a[2][1] = -2;
        return m;
    }
    throw NotFiniteType("unknown type tag: " + tag);
}

std::size_t RootSystem::index_of(const RootVector& r) const {
    auto it = std::lower_bound(roots.begin(), roots.end(), r,
                               [](const RootVector& a, const RootVector& b) {
                                   return std::make_pair(a.height(), a.c) <
                                          std::make_pair(b.height(), b.c);
                               });
    if (it == roots.end() || !(*it == r))
        throw std::out_of_range("not a root: " + r.str());
    return static_cast<std::size_t>(it - roots.begin());
}

bool RootSystem::contains(const RootVector& r) const {
    auto it = std::lower_bound(roots.begin(), roots.end(), r,
                               [](const RootVector& a, const RootVector& b) {
                                   return std::make_pair(a.height(), a.c) <
                                          std::make_pair(b.height(), b.c);
                               });
    return it != roots.end() && *it == r;
}

const std::vector<long long>& RootSystem::highest_coroot() const {
    return coroots[index_of(highest_root)];
}

Rat pair(const RootVector& r, const Coweight& theta) {
    if (r.c.size() != theta.x.size()) throw RankMismatch("pair: rank mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < r.c.size(); ++i) acc += Rat(r.c[i]) * theta.x[i];
    return acc;
}

Coweight apply(const WeylMatrix& w, const Coweight& theta) {
    const std::size_t n = theta.x.size();
    Coweight out;
    out.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            out.x[i] += Rat(w[i][k]) * theta.x[k];
    return out;
}

WeylMatrix weyl_simple_reflection(const RootSystem& rs, int alpha) {
    const int n = rs.rank;
    WeylMatrix m(n, std::vector<long long>(n, 0));
    // (s_i theta)_j = theta_j - a[i][j] theta_i
    for (int j = 0; j < n; ++j) {
        m[j][j] = 1;
        m[j][alpha] -= rs.cartan.a[alpha][j];
    }
    return m;
}

namespace {

WeylMatrix matmul(const WeylMatrix& a, const WeylMatrix& b) {
    const std::size_t n = a.size();
    WeylMatrix c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

long long determinant(const std::vector<std::vector<long long>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
    Rat det(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (int i = k + 1; i < n; ++i) {
            Rat f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det.num() / det.den();
}

} // namespace

std::vector<Rat> coroot_coordinates(const RootSystem& rs, const Coweight& v) {
    // Solve A^T x = v.
    const int n = rs.rank;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(rs.cartan.a[j][i]);
        m[i][n] = v.x[i];
    }
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { piv = i; break; }
        if (piv < 0) throw std::logic_error("singular Cartan matrix");
        std::swap(m[piv], m[k]);
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            Rat f = m[i][k] / m[k][k];
            for (int j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

RootSystem build_root_system(const CartanMatrix& cartan) {
    cartan.validate();
    RootSystem rs;
    rs.cartan = cartan;
    rs.rank = cartan.rank();
    const int n = rs.rank;

    // Closure of the simple roots under simple reflections, tracking the
    // coroot of every root along the way.
    std::map<std::vector<long long>, std::vector<long long>> found; // root -> coroot
    std::vector<std::vector<long long>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> r(n, 0), rv(n);
        r[i] = 1;
        for (int j = 0; j < n; ++j) rv[j] = cartan.a[i][j];
        found[r] = rv;
        frontier.push_back(r);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& r : frontier) {
            const auto& rv = found[r];
            for (int i = 0; i < n; ++i) {
                long long p = 0; // <r, alpha_i^vee>
                for (int j = 0; j < n; ++j) p += r[j] * cartan.a[i][j];
                std::vector<long long> r2 = r;
                r2[i] -= p;
                if (found.count(r2)) continue;
                std::vector<long long> rv2 = rv;
                for (int j = 0; j < n; ++j) rv2[j] -= cartan.a[i][j] * rv[i];
                found[r2] = rv2;
                next.push_back(r2);
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::pair<RootVector, std::vector<long long>>> all;
    for (auto& [r, rv] : found) all.push_back({RootVector{r}, rv});
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.first.height(), a.first.c) <
               std::make_pair(b.first.height(), b.first.c);
    });
    for (auto& [r, rv] : all) {
        bool pos = true, neg = true;
        for (long long v : r.c) {
            if (v > 0) neg = false;
            if (v < 0) pos = false;
        }
        if (!pos && !neg)
            throw std::logic_error("mixed-sign root in closure: " + r.str());
        rs.roots.push_back(r);
        rs.coroots.push_back(rv);
    }
    rs.highest_root = rs.roots.back();
    for (const auto& r : rs.roots)
        for (int j = 0; j < n; ++j)
            if (r.c[j] > rs.highest_root.c[j])
                throw std::logic_error("highest root does not dominate");

    rs.c.assign(rs.highest_root.c.begin(), rs.highest_root.c.end());
    rs.e.resize(n);
    rs.d.resize(n);
    for (int i = 0; i < n; ++i) {
        rs.e[i] = torsion_order(rs, i);
        rs.d[i] = rs.e[i] * rs.c[i];
    }
    return rs;
}

long long torsion_order(const RootSystem& rs, int alpha) {
    if (alpha < 0 || alpha >= rs.rank) throw std::out_of_range("torsion_order: bad index");
    const long long bound = determinant(rs.cartan.a); // = |P^vee / Q^vee|
    Coweight omega;
    omega.x.assign(rs.rank, Rat(0));
    omega.x[alpha] = Rat(1);
    for (long long k = 1; k <= bound; ++k) {
        auto x = coroot_coordinates(rs, Coweight{[&] {
                                        std::vector<Rat> v(omega.x);
                                        for (auto& t : v) t *= Rat(k);
                                        return v;
                                    }()});
        bool integral = true;
        for (const auto& xi : x)
            if (!xi.is_integer()) { integral = false; break; }
        if (integral) return k;
    }
    throw std::logic_error("torsion order exceeds lattice index bound");
}

long long ramification_index(const RootSystem& rs, int alpha) {
    if (alpha < 0 || alpha >= rs.rank)
        throw std::out_of_range("ramification_index: bad index");
    return rs.e[alpha] * rs.c[alpha];
}

std::vector<WeylMatrix> weyl_elements(const RootSystem& rs) {
    const int n = rs.rank;
    WeylMatrix id(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    std::vector<WeylMatrix> gens;
    for (int i = 0; i < n; ++i) gens.push_back(weyl_simple_reflection(rs, i));

    std::set<WeylMatrix> seen{id};
    std::vector<WeylMatrix> out{id};
    std::vector<WeylMatrix> level{id};
    while (!level.empty()) {
        std::set<WeylMatrix> next;
        for (const auto& w : level)
            for (const auto& s : gens) {
                WeylMatrix ws = matmul(s, w);
                if (!seen.count(ws)) next.insert(ws);
            }
        level.assign(next.begin(), next.end()); // lexicographic within level
        for (const auto& w : level) {
            seen.insert(w);
            out.push_back(w);
        }
    }
    return out;
}

} // namespace btlat
