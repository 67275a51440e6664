#include "quiverkit/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quiverkit {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

int FiniteQuiver::vertex_index(const std::string& label) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertex_labels[i] == label) return i;
    return -1;
}

int FiniteQuiver::edge_index(const std::string& label) const {
    for (int i = 0; i < num_edges(); ++i)
        if (edge_labels[i] == label) return i;
    return -1;
}

QuiverPtr make_quiver(std::vector<std::string> vertex_labels,
                      std::vector<std::string> edge_labels, std::vector<int> src,
                      std::vector<int> rng, std::vector<Rational> weight, bool strict) {
    const int nv = static_cast<int>(vertex_labels.size());
    const int ne = static_cast<int>(edge_labels.size());
    if (src.size() != static_cast<std::size_t>(ne) || rng.size() != static_cast<std::size_t>(ne) ||
        weight.size() != static_cast<std::size_t>(ne))
        fail("edge arrays must all have the same length");
    for (int e = 0; e < ne; ++e) {
        if (src[e] < 0 || src[e] >= nv) fail("edge source out of range: " + edge_labels[e]);
        if (rng[e] < 0 || rng[e] >= nv) fail("edge range out of range: " + edge_labels[e]);
    }
    if (std::set<std::string>(vertex_labels.begin(), vertex_labels.end()).size() !=
        static_cast<std::size_t>(nv))
        fail("vertex labels must be unique");
    if (std::set<std::string>(edge_labels.begin(), edge_labels.end()).size() !=
        static_cast<std::size_t>(ne))
        fail("edge labels must be unique");

    auto q = std::make_shared<FiniteQuiver>();
    q->vertex_labels = std::move(vertex_labels);
    q->edge_labels = std::move(edge_labels);
    q->src = std::move(src);
    q->rng = std::move(rng);
    q->weight = std::move(weight);
    q->strict = strict;
    return q;
}

QuiverReport validate_quiver(const FiniteQuiver& q) { return validate_quiver(q, q.strict); }

QuiverReport validate_quiver(const FiniteQuiver& q, bool strict) {
    QuiverReport report;
    for (int e = 0; e < q.num_edges(); ++e) {
        if (q.weight[e] <= 0)
            report.violations.push_back({"nonpositive_weight", e, -1,
                                         "edge " + q.edge_labels[e] + " has weight " +
                                             rational_to_string(q.weight[e])});
    }
    std::vector<bool> emits(q.num_vertices(), false);
    for (int e = 0; e < q.num_edges(); ++e) emits[q.src[e]] = true;
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (emits[v]) continue;
        report.fiberless_vertices.push_back(v);
        if (strict)
            report.violations.push_back({"fiberless_vertex", -1, v,
                                         "vertex " + q.vertex_labels[v] +
                                             " emits no edge (empty source fiber)"});
    }
    return report;
}

bool is_quiver_morphism(const FiniteQuiver& a, const FiniteQuiver& b, const QuiverMorphism& m) {
    if (m.vmap.size() != static_cast<std::size_t>(a.num_vertices())) return false;
    if (m.emap.size() != static_cast<std::size_t>(a.num_edges())) return false;
    for (int v : m.vmap)
        if (v < 0 || v >= b.num_vertices()) return false;
    for (int e : m.emap)
        if (e < 0 || e >= b.num_edges()) return false;
    for (int e = 0; e < a.num_edges(); ++e) {
        if (b.src[m.emap[e]] != m.vmap[a.src[e]]) return false;
        if (b.rng[m.emap[e]] != m.vmap[a.rng[e]]) return false;
    }
    return true;
}

bool is_quiver_isomorphism(const FiniteQuiver& a, const FiniteQuiver& b, const QuiverMorphism& m) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    if (!is_quiver_morphism(a, b, m)) return false;
    std::vector<bool> vhit(b.num_vertices(), false), ehit(b.num_edges(), false);
    for (int v : m.vmap) {
        if (vhit[v]) return false;
        vhit[v] = true;
    }
    for (int e : m.emap) {
        if (ehit[e]) return false;
        ehit[e] = true;
    }
    for (int e = 0; e < a.num_edges(); ++e)
        if (a.weight[e] != b.weight[m.emap[e]]) return false;
    return true;
}

QuiverMorphism invert_isomorphism(const QuiverMorphism& m) {
    QuiverMorphism inv;
    inv.vmap.assign(m.vmap.size(), -1);
    inv.emap.assign(m.emap.size(), -1);
    for (int v = 0; v < static_cast<int>(m.vmap.size()); ++v) inv.vmap[m.vmap[v]] = v;
    for (int e = 0; e < static_cast<int>(m.emap.size()); ++e) inv.emap[m.emap[e]] = e;
    inv.is_iso = m.is_iso;
    return inv;
}

namespace {

struct VertexSignature {
    int outdeg = 0;
    int indeg = 0;
    std::vector<Rational> outw;
    std::vector<Rational> inw;

    friend bool operator==(const VertexSignature&, const VertexSignature&) = default;
    friend bool operator<(const VertexSignature& a, const VertexSignature& b) {
        if (a.outdeg != b.outdeg) return a.outdeg < b.outdeg;
        if (a.indeg != b.indeg) return a.indeg < b.indeg;
        if (a.outw != b.outw) return a.outw < b.outw;
        return a.inw < b.inw;
    }
};

std::vector<VertexSignature> signatures(const FiniteQuiver& q) {
    std::vector<VertexSignature> sig(q.num_vertices());
    for (int e = 0; e < q.num_edges(); ++e) {
        auto& s = sig[q.src[e]];
        auto& r = sig[q.rng[e]];
        ++s.outdeg;
        s.outw.push_back(q.weight[e]);
        ++r.indeg;
        r.inw.push_back(q.weight[e]);
    }
    for (auto& s : sig) {
        std::sort(s.outw.begin(), s.outw.end());
        std::sort(s.inw.begin(), s.inw.end());
    }
    return sig;
}

// sorted weight list of edges a -> b, per ordered vertex pair
using PairWeights = std::map<std::pair<int, int>, std::vector<Rational>>;

PairWeights pair_weights(const FiniteQuiver& q) {
    PairWeights pw;
    for (int e = 0; e < q.num_edges(); ++e) pw[{q.src[e], q.rng[e]}].push_back(q.weight[e]);
    for (auto& [k, v] : pw) std::sort(v.begin(), v.end());
    return pw;
}

const std::vector<Rational>* lookup(const PairWeights& pw, int a, int b) {
    auto it = pw.find({a, b});
    return it == pw.end() ? nullptr : &it->second;
}

bool same_weights(const PairWeights& pa, const PairWeights& pb, int a1, int b1, int a2, int b2) {
    const auto* wa = lookup(pa, a1, b1);
    const auto* wb = lookup(pb, a2, b2);
    if (!wa && !wb) return true;
    if (!wa || !wb) return false;
    return *wa == *wb;
}

struct IsoSearch {
    const FiniteQuiver& a;
    const FiniteQuiver& b;
    std::vector<VertexSignature> siga, sigb;
    PairWeights pwa, pwb;
    std::vector<int> order;      // vertices of a, by (signature, index)
    std::vector<int> vmap;       // a-vertex -> b-vertex or -1
    std::vector<bool> used;      // b-vertex already taken
    std::vector<int> assigned;   // a-vertices assigned so far, in order

    bool consistent(int v, int w) const {
        if (!same_weights(pwa, pwb, v, v, w, w)) return false;
        for (int u : assigned) {
            if (!same_weights(pwa, pwb, v, u, w, vmap[u])) return false;
            if (!same_weights(pwa, pwb, u, v, vmap[u], w)) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int w = 0; w < b.num_vertices(); ++w) {
            if (used[w] || !(siga[v] == sigb[w]) || !consistent(v, w)) continue;
            vmap[v] = w;
            used[w] = true;
            assigned.push_back(v);
            if (extend(depth + 1)) return true;
            assigned.pop_back();
            used[w] = false;
            vmap[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<QuiverMorphism> quiver_isomorphic(const FiniteQuiver& a, const FiniteQuiver& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return std::nullopt;

    IsoSearch s{a, b, {}, {}, {}, {}, {}, {}, {}, {}};
    s.siga = signatures(a);
    s.sigb = signatures(b);
    {
        auto sa = s.siga, sb = s.sigb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (!(sa == sb)) return std::nullopt;
    }
    s.pwa = pair_weights(a);
    s.pwb = pair_weights(b);
    s.order.resize(a.num_vertices());
    std::iota(s.order.begin(), s.order.end(), 0);
    std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
        if (!(s.siga[x] == s.siga[y])) return s.siga[x] < s.siga[y];
        return x < y;
    });
    s.vmap.assign(a.num_vertices(), -1);
    s.used.assign(b.num_vertices(), false);
    if (!s.extend(0)) return std::nullopt;

    // The vertex bijection fixes the edge bijection class-by-class; pair
    // parallel edges by (weight, index) on both sides.
    QuiverMorphism m;
    m.vmap = s.vmap;
    m.emap.assign(a.num_edges(), -1);
    std::map<std::pair<int, int>, std::vector<int>> edges_b;
    for (int e = 0; e < b.num_edges(); ++e) edges_b[{b.src[e], b.rng[e]}].push_back(e);
    for (auto& [k, v] : edges_b)
        std::sort(v.begin(), v.end(), [&](int x, int y) {
            if (b.weight[x] != b.weight[y]) return b.weight[x] < b.weight[y];
            return x < y;
        });
    std::map<std::pair<int, int>, std::vector<int>> edges_a;
    for (int e = 0; e < a.num_edges(); ++e) edges_a[{a.src[e], a.rng[e]}].push_back(e);
    for (auto& [k, ea] : edges_a) {
        std::sort(ea.begin(), ea.end(), [&](int x, int y) {
            if (a.weight[x] != a.weight[y]) return a.weight[x] < a.weight[y];
            return x < y;
        });
        const auto& eb = edges_b.at({m.vmap[k.first], m.vmap[k.second]});
        for (std::size_t i = 0; i < ea.size(); ++i) m.emap[ea[i]] = eb[i];
    }
    m.is_iso = true;
    return m;
}

ComponentDecomposition connected_components(const FiniteQuiver& q) {
    const int nv = q.num_vertices();
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> rank(nv, 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return;
        if (rank[x] < rank[y]) std::swap(x, y);
        parent[y] = x;
        if (rank[x] == rank[y]) ++rank[x];
    };
    for (int e = 0; e < q.num_edges(); ++e) unite(q.src[e], q.rng[e]);

    ComponentDecomposition out;
    out.vertex_component.assign(nv, -1);
    for (int v = 0; v < nv; ++v) {
        int root = find(v);
        if (out.vertex_component[root] < 0) {
            out.vertex_component[root] = static_cast<int>(out.component_vertices.size());
            out.component_vertices.emplace_back();
        }
        out.vertex_component[v] = out.vertex_component[root];
        out.component_vertices[out.vertex_component[v]].push_back(v);
    }
    out.component_edges.resize(out.component_vertices.size());
    out.edge_component.assign(q.num_edges(), -1);
    for (int e = 0; e < q.num_edges(); ++e) {
        out.edge_component[e] = out.vertex_component[q.src[e]];
        out.component_edges[out.edge_component[e]].push_back(e);
    }

    for (std::size_t c = 0; c < out.component_vertices.size(); ++c) {
        const auto& vs = out.component_vertices[c];
        const auto& es = out.component_edges[c];
        std::vector<int> local(nv, -1);
        FiniteQuiver sub;
        sub.strict = q.strict;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            local[vs[i]] = static_cast<int>(i);
            sub.vertex_labels.push_back(q.vertex_labels[vs[i]]);
        }
        for (int e : es) {
            sub.edge_labels.push_back(q.edge_labels[e]);
            sub.src.push_back(local[q.src[e]]);
            sub.rng.push_back(local[q.rng[e]]);
            sub.weight.push_back(q.weight[e]);
        }
        out.components.push_back(std::move(sub));
    }
    return out;
}

QuiverPtr relabel_quiver(const FiniteQuiver& q, const std::vector<int>& vperm,
                         const std::vector<int>& eperm) {
    // vperm[old] = new; (vperm, eperm) is then an isomorphism q -> result.
    const int nv = q.num_vertices(), ne = q.num_edges();
    if (vperm.size() != static_cast<std::size_t>(nv) ||
        eperm.size() != static_cast<std::size_t>(ne))
        fail("relabeling permutations have wrong size");
    std::vector<std::string> vlab(nv), elab(ne);
    std::vector<int> src(ne), rng(ne);
    std::vector<Rational> w(ne);
    for (int v = 0; v < nv; ++v) vlab[vperm[v]] = q.vertex_labels[v];
    for (int e = 0; e < ne; ++e) {
        elab[eperm[e]] = q.edge_labels[e];
        src[eperm[e]] = vperm[q.src[e]];
        rng[eperm[e]] = vperm[q.rng[e]];
        w[eperm[e]] = q.weight[e];
    }
    return make_quiver(std::move(vlab), std::move(elab), std::move(src), std::move(rng),
                       std::move(w), q.strict);
}

}  // namespace quiverkit
