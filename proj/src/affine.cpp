#include "btlat/affine.hpp"

#include <algorithm>
#include <map>

#include "btlat/errors.hpp"

namespace btlat {

EtaDatum eta_for_subset(const RootSystem& rs, const FacetLabel& I,
                        const std::set<int>& ones) {
    if (I.empty()) throw EmptySubset("eta_for_subset: empty subset");
    if (ones.empty()) throw EmptySubset("eta_for_subset: all weights zero");
    for (int a : ones)
        if (!I.count(a)) throw std::out_of_range("eta_for_subset: weight outside subset");
    auto verts = alcove_vertices(rs);
    EtaDatum eta;
    eta.a = Rat(static_cast<long long>(ones.size()), rs.rank + 1);
    eta.theta.x.assign(rs.rank, Rat(0));
    for (int a : ones) eta.theta = eta.theta + verts[a];
    eta.theta = Rat(1, rs.rank + 1) * eta.theta;
    return eta;
}

AffineParahoricLattice j_lattice(const RootSystem& rs, const FacetLabel& I,
                                 const std::set<int>& ones) {
    EtaDatum eta = eta_for_subset(rs, I, ones);
    return eta_parahoric(rs, eta.a, eta.theta);
}

namespace {

std::string word_str(const std::vector<int>& w) {
    if (w.empty()) return "e";
    std::string s;
    for (int l : w) s += std::to_string(l);
    return s;
}

std::string label_str(const FacetLabel& label) {
    std::string s;
    for (int a : label) {
        if (!s.empty()) s += ",";
        s += "a" + std::to_string(a);
    }
    return s;
}

} // namespace

std::vector<int> canonicalize_word(const RootSystem& rs, const std::vector<int>& word) {
    AffineTransform target = transform_of_word(rs, word);
    std::map<AffineTransform, std::vector<int>> seen;
    AffineTransform id = affine_identity(rs.rank);
    seen[id] = {};
    if (target == id) return {};
    std::vector<std::pair<AffineTransform, std::vector<int>>> level{{id, {}}};
    for (std::size_t len = 1; len <= word.size(); ++len) {
        std::vector<std::pair<AffineTransform, std::vector<int>>> next;
        for (const auto& [g, w] : level) {
            for (int l = 0; l <= rs.rank; ++l) {
                AffineTransform g2 = compose(g, affine_simple_generator(rs, l));
                if (seen.count(g2)) continue;
                std::vector<int> w2 = w;
                w2.push_back(l);
                seen[g2] = w2;
                if (g2 == target) return w2;
                next.push_back({g2, w2});
            }
        }
        level = std::move(next);
    }
    throw std::logic_error("canonicalize_word: target not reached");
}

AffineFunctional translate_functional(const RootSystem& rs, const AffineTransform& g,
                                      const AffineFunctional& f) {
    AffineTransform gi = inverse(rs, g);
    AffineFunctional out;
    out.linear.c.assign(rs.rank, 0);
    for (int j = 0; j < rs.rank; ++j)
        for (int i = 0; i < rs.rank; ++i)
            out.linear.c[j] += f.linear.c[i] * gi.linear[i][j];
    out.constant = f.constant;
    for (int i = 0; i < rs.rank; ++i)
        out.constant += Rat(f.linear.c[i]) * Rat(gi.translation[i]);
    return out;
}

ChartDatum chart(const RootSystem& rs, const std::vector<int>& word) {
    for (int l : word)
        if (l < 0 || l > rs.rank)
            throw InvalidWord("chart: letter out of range: " + std::to_string(l));
    ChartDatum cd;
    cd.word = canonicalize_word(rs, word);
    AffineTransform g = transform_of_word(rs, cd.word);
    for (const auto& f : affine_simple_roots(rs))
        cd.walls.push_back(translate_functional(rs, g, f));
    return cd;
}

namespace {

// (facet label, ramification) of the wall of chart g obtained from the
// base-alcove letter beta, computed through this chart's own route.
struct WallData {
    Coweight barycenter;
    FacetLabel label;
    long long d = 1;
};

WallData wall_data(const RootSystem& rs, const AffineTransform& g, int beta) {
    FacetLabel base;
    for (int a = 0; a <= rs.rank; ++a)
        if (a != beta) base.insert(a);
    WallData wd;
    wd.barycenter = g.apply(barycenter(rs, base));
    auto red = reduce_to_alcove(rs, wd.barycenter);
    wd.label = facet_of(rs, red.point);
    wd.d = denominator_pair(rs, red.point).d;
    return wd;
}

bool same_hyperplane(const AffineFunctional& f, const AffineFunctional& g) {
    AffineFunctional neg{-g.linear, -g.constant};
    return f == g || f == neg;
}

} // namespace

bool glue_check(const RootSystem& rs, const std::vector<int>& u,
                const std::vector<int>& v) {
    ChartDatum cu = chart(rs, u);
    ChartDatum cv = chart(rs, v);
    AffineTransform gu = transform_of_word(rs, cu.word);
    AffineTransform gv = transform_of_word(rs, cv.word);
    for (int a = 0; a <= rs.rank; ++a) {
        for (int b = 0; b <= rs.rank; ++b) {
            if (!same_hyperplane(cu.walls[a], cv.walls[b])) continue;
            WallData wa = wall_data(rs, gu, a);
            WallData wb = wall_data(rs, gv, b);
            // Same hyperplane but different faces of it: no shared datum.
            if (!(wa.barycenter == wb.barycenter)) continue;
            if (wa.label != wb.label || wa.d != wb.d) return false;
        }
    }
    return true;
}

BuildingGraph building_window(const RootSystem& rs, int radius) {
    const int n = rs.rank;
    // Alcoves = affine Weyl elements with word length <= radius, BFS.
    std::map<AffineTransform, std::vector<int>> alcoves;
    AffineTransform id = affine_identity(n);
    alcoves[id] = {};
    std::vector<std::pair<AffineTransform, std::vector<int>>> level{{id, {}}};
    for (int len = 1; len <= radius; ++len) {
        std::vector<std::pair<AffineTransform, std::vector<int>>> next;
        for (const auto& [g, w] : level)
            for (int l = 0; l <= n; ++l) {
                AffineTransform g2 = compose(g, affine_simple_generator(rs, l));
                if (alcoves.count(g2)) continue;
                std::vector<int> w2 = w;
                w2.push_back(l);
                alcoves[g2] = w2;
                next.push_back({g2, w2});
            }
        level = std::move(next);
    }
    // Deterministic alcove order: by word (length, then lex).
    std::vector<std::pair<std::vector<int>, AffineTransform>> ordered;
    for (const auto& [g, w] : alcoves) ordered.push_back({w, g});
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });

    // Facet identification by exact barycenter coordinates.
    using Key = std::vector<std::pair<long long, long long>>;
    auto key_of = [](const Coweight& p) {
        Key k;
        for (const auto& r : p.x) k.push_back({r.num(), r.den()});
        return k;
    };
    BuildingGraph graph;
    std::map<Key, int> node_of;
    // (alcove index, base label) -> node index, for edges.
    std::map<std::pair<int, FacetLabel>, int> local_node;

    std::vector<FacetLabel> subsets;
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
        FacetLabel s;
        for (int a = 0; a <= n; ++a)
            if (mask & (1u << a)) s.insert(a);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const FacetLabel& a, const FacetLabel& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });

    for (std::size_t ai = 0; ai < ordered.size(); ++ai) {
        const auto& [w, g] = ordered[ai];
        for (const auto& I : subsets) {
            Coweight p = g.apply(barycenter(rs, I));
            Key k = key_of(p);
            auto it = node_of.find(k);
            int idx;
            if (it == node_of.end()) {
                idx = static_cast<int>(graph.nodes.size());
                node_of[k] = idx;
                BuildingNode node;
                node.rep_word = w;
                auto red = reduce_to_alcove(rs, p);
                node.label = facet_of(rs, red.point);
                node.codim = n + 1 - static_cast<int>(node.label.size());
                node.id = word_str(w) + ":" + label_str(I);
                node.alcove_count = 1;
                graph.nodes.push_back(std::move(node));
            } else {
                idx = it->second;
                ++graph.nodes[idx].alcove_count;
            }
            local_node[{static_cast<int>(ai), I}] = idx;
        }
    }

    // alcove_count counted every (alcove, subset) hit; for a facet each
    // incident alcove contributes exactly once, so the count is right.

    // Interior flag for codimension-1 facets: the reflected alcove must
    // be in the window.
    for (std::size_t ai = 0; ai < ordered.size(); ++ai) {
        const auto& g = ordered[ai].second;
        for (int beta = 0; beta <= n; ++beta) {
            FacetLabel I;
            for (int a = 0; a <= n; ++a)
                if (a != beta) I.insert(a);
            int idx = local_node[{static_cast<int>(ai), I}];
            AffineTransform nb = compose(g, affine_simple_generator(rs, beta));
            if (!alcoves.count(nb)) graph.nodes[idx].interior = false;
        }
    }

    // Incidence edges within each alcove: I subset J, |J| = |I| + 1.
    std::set<std::pair<int, int>> edges;
    for (std::size_t ai = 0; ai < ordered.size(); ++ai) {
        for (const auto& I : subsets) {
            if (I.size() == static_cast<std::size_t>(n + 1)) continue;
            int a_idx = local_node[{static_cast<int>(ai), I}];
            for (int extra = 0; extra <= n; ++extra) {
                if (I.count(extra)) continue;
                FacetLabel J = I;
                J.insert(extra);
                int b_idx = local_node[{static_cast<int>(ai), J}];
                edges.insert({std::min(a_idx, b_idx), std::max(a_idx, b_idx)});
            }
        }
    }
    graph.edges.assign(edges.begin(), edges.end());
    return graph;
}

} // namespace btlat
