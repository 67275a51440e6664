#include "quiverkit/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace quiverkit {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
[[noreturn]] void internal(const std::string& msg) { throw std::logic_error(msg); }

std::string pair_label(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    fail(std::string(what) + " must live in the same group");
}

void require_same_quiver(const QuiverPtr& a, const QuiverPtr& b, const char* what) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    fail(std::string(what) + " refers to a different quiver");
}

}  // namespace

Cocycle identity_cocycle(QuiverPtr quiver, GroupPtr group) {
    Cocycle k;
    k.values.assign(quiver->num_edges(), group->identity);
    k.quiver = std::move(quiver);
    k.group = std::move(group);
    return k;
}

SkewProductResult skew_product(QuiverPtr q, GroupPtr g, const Cocycle& kappa) {
    require_same_quiver(kappa.quiver, q, "cocycle");
    require_same_group(kappa.group, g, "cocycle values and the acting group");
    if (kappa.values.size() != static_cast<std::size_t>(q->num_edges()))
        fail("cocycle must assign a group element to every edge");
    for (int v : kappa.values)
        if (v < 0 || v >= g->order) fail("cocycle value out of range");

    const int nv = q->num_vertices(), ne = q->num_edges(), go = g->order;
    std::vector<std::string> vlab, elab;
    std::vector<int> src, rng;
    std::vector<Rational> weight;
    vlab.reserve(static_cast<std::size_t>(nv) * go);
    for (int v = 0; v < nv; ++v)
        for (int t = 0; t < go; ++t) vlab.push_back(pair_label(q->vertex_labels[v], g->label(t)));
    for (int e = 0; e < ne; ++e)
        for (int t = 0; t < go; ++t) {
            elab.push_back(pair_label(q->edge_labels[e], g->label(t)));
            src.push_back(q->src[e] * go + t);
            rng.push_back(q->rng[e] * go + g->mul(kappa.values[e], t));
            weight.push_back(q->weight[e]);
        }

    SkewProductResult out;
    out.quiver = make_quiver(std::move(vlab), std::move(elab), std::move(src), std::move(rng),
                             std::move(weight), q->strict);
    out.action.group = g;
    out.action.quiver = out.quiver;
    out.action.vperm.assign(go, std::vector<int>(static_cast<std::size_t>(nv) * go));
    out.action.eperm.assign(go, std::vector<int>(static_cast<std::size_t>(ne) * go));
    for (int h = 0; h < go; ++h) {
        for (int v = 0; v < nv; ++v)
            for (int t = 0; t < go; ++t) out.action.vperm[h][v * go + t] = v * go + g->mul(t, h);
        for (int e = 0; e < ne; ++e)
            for (int t = 0; t < go; ++t) out.action.eperm[h][e * go + t] = e * go + g->mul(t, h);
    }
    return out;
}

CosetQuiverResult coset_quiver(const Subgroup& n, const ElementMap& phi) {
    const auto& g = *n.parent;
    if (phi.size() != static_cast<std::size_t>(g.order))
        fail("phi must be a total map on the group");
    for (int v : phi)
        if (v < 0 || v >= g.order) fail("phi value out of range");

    CosetQuiverResult out;
    out.cosets = coset_partition(n, CosetSide::right);

    std::vector<std::string> vlab, elab;
    for (const auto& coset : out.cosets.cosets) vlab.push_back("[" + g.label(coset.front()) + "]");
    std::vector<int> src(g.order), rng(g.order);
    std::vector<Rational> weight(g.order, Rational(1));
    for (int x = 0; x < g.order; ++x) {
        elab.push_back(g.label(x));
        src[x] = out.cosets.coset_of[x];
        rng[x] = out.cosets.coset_of[phi[x]];
    }
    out.quiver = make_quiver(std::move(vlab), std::move(elab), std::move(src), std::move(rng),
                             std::move(weight), true);
    return out;
}

CosetActionResult coset_action(const Subgroup& n, const ElementMap& phi, const Subgroup& h,
                               TranslationSide side) {
    require_same_group(n.parent, h.parent, "N and H");
    const auto& g = *n.parent;

    if (side == TranslationSide::right) {
        // Ng ∩ gH = {g} for all g
        for (int x = 0; x < g.order; ++x)
            for (int a : n.elements)
                for (int b : h.elements) {
                    if (g.mul(a, x) != g.mul(x, b)) continue;
                    if (a != g.identity || b != g.identity)
                        fail("coset action requires Ng ∩ gH = {g}; fails at g = " + g.label(x) +
                             " (n = " + g.label(a) + ", h = " + g.label(b) + ")");
                }
        for (int x = 0; x < g.order; ++x)
            for (int b : h.elements)
                if (phi[g.mul(x, b)] != g.mul(phi[x], b))
                    fail("phi is not H-equivariant: phi(gh) != phi(g)h at g = " + g.label(x) +
                         ", h = " + g.label(b));
    } else {
        for (int b : h.elements)
            for (int a : n.elements)
                if (!n.contains(g.mul(g.mul(b, a), g.inv(b))))
                    fail("left coset action requires H to normalize N; fails at h = " +
                         g.label(b) + ", n = " + g.label(a));
        for (int b : h.elements)
            if (b != g.identity && n.contains(b))
                fail("left coset action requires N ∩ H = {e}; fails at " + g.label(b));
        for (int x = 0; x < g.order; ++x)
            for (int b : h.elements)
                if (phi[g.mul(b, x)] != g.mul(b, phi[x]))
                    fail("phi is not left H-equivariant: phi(hg) != h phi(g) at g = " +
                         g.label(x) + ", h = " + g.label(b));
    }

    CosetActionResult out;
    out.base = coset_quiver(n, phi);
    out.acting = subgroup_as_group(h);

    const int ho = out.acting.group->order;
    const int nc = out.base.quiver->num_vertices();
    out.action.group = out.acting.group;
    out.action.quiver = out.base.quiver;
    out.action.vperm.assign(ho, std::vector<int>(nc));
    out.action.eperm.assign(ho, std::vector<int>(g.order));
    for (int t = 0; t < ho; ++t) {
        const int b = out.acting.to_parent[t];
        for (int x = 0; x < g.order; ++x)
            out.action.eperm[t][x] =
                side == TranslationSide::right ? g.mul(x, b) : g.mul(g.inv(b), x);
        for (int c = 0; c < nc; ++c) {
            int rep = out.base.cosets.cosets[c].front();
            int image = side == TranslationSide::right ? g.mul(rep, b) : g.mul(g.inv(b), rep);
            out.action.vperm[t][c] = out.base.cosets.coset_of[image];
        }
    }

    if (!validate_action(out.action).ok())
        internal("coset action failed validation despite verified preconditions");
    if (!is_free(out.action).vertex_free)
        internal("coset action is not vertex-free despite verified preconditions");
    return out;
}

DoubleCosetResult double_coset_quotient(const Subgroup& n, const ElementMap& phi,
                                        const Subgroup& h) {
    CosetActionResult action = coset_action(n, phi, h, TranslationSide::right);
    const auto& g = *n.parent;

    DoubleCosetResult out;
    out.generic = quotient_quiver(action.action);
    out.vertex_classes = double_cosets(n, h);
    out.edge_cosets = coset_partition(h, CosetSide::left);

    const int ne = static_cast<int>(out.edge_cosets.cosets.size());
    std::vector<std::string> vlab, elab;
    for (const auto& cls : out.vertex_classes.classes) vlab.push_back("[" + g.label(cls.front()) + "]");
    std::vector<int> src(ne), rng(ne);
    std::vector<Rational> weight(ne);
    for (int c = 0; c < ne; ++c) {
        int x = out.edge_cosets.cosets[c].front();
        elab.push_back("[" + g.label(x) + "]");
        src[c] = out.vertex_classes.class_of[x];
        rng[c] = out.vertex_classes.class_of[phi[x]];
        for (int y : out.edge_cosets.cosets[c]) {
            if (out.vertex_classes.class_of[y] != src[c] ||
                out.vertex_classes.class_of[phi[y]] != rng[c])
                internal("double coset maps not constant on an edge class");
        }
        // fiber count of the class over the minimal representative of its
        // source double coset
        int g0 = out.vertex_classes.classes[src[c]].front();
        long long count = 0;
        for (int a : n.elements)
            if (out.edge_cosets.coset_of[g.mul(a, g0)] == c) ++count;
        weight[c] = Rational(count);
    }
    out.quotient = make_quiver(std::move(vlab), std::move(elab), std::move(src), std::move(rng),
                               std::move(weight), true);

    // explicit morphism from the generic quotient
    QuiverMorphism m;
    m.vmap.resize(out.generic.quotient->num_vertices());
    m.emap.resize(out.generic.quotient->num_edges());
    {
        OrbitPartition parts = orbits(action.action);
        for (std::size_t i = 0; i < parts.vertex_orbits.size(); ++i) {
            int coset = parts.vertex_orbits[i].front();
            int element = action.base.cosets.cosets[coset].front();
            m.vmap[i] = out.vertex_classes.class_of[element];
        }
        for (std::size_t i = 0; i < parts.edge_orbits.size(); ++i)
            m.emap[i] = out.edge_cosets.coset_of[parts.edge_orbits[i].front()];
    }
    if (!is_quiver_isomorphism(*out.generic.quotient, *out.quotient, m))
        internal("double coset quiver disagrees with the generic quotient");
    m.is_iso = true;
    out.from_generic = std::move(m);
    return out;
}

RelationQuiverResult relation_quiver(const GroupHom& alpha, const GroupHom& beta) {
    require_same_group(alpha.domain, beta.domain, "alpha and beta domains");
    require_same_group(alpha.codomain, beta.codomain, "alpha and beta codomains");
    require_same_group(alpha.domain, alpha.codomain, "relation quiver endomorphism");
    const auto& g = *alpha.domain;

    RelationQuiverResult out;
    std::vector<std::string> elab;
    std::vector<int> src, rng;
    std::vector<bool> emits(g.order, false);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (alpha.map[x] == beta.map[y]) {
                out.pairs.emplace_back(x, y);
                elab.push_back(pair_label(g.label(x), g.label(y)));
                src.push_back(x);
                rng.push_back(y);
                emits[x] = true;
            }
    for (int x = 0; x < g.order; ++x)
        if (!emits[x]) out.empty_fiber_vertices.push_back(x);

    std::vector<Rational> weight(out.pairs.size(), Rational(1));
    out.quiver = make_quiver(g.labels, std::move(elab), std::move(src), std::move(rng),
                             std::move(weight), out.empty_fiber_vertices.empty());
    return out;
}

RelationActionResult relation_action(const GroupHom& alpha, const GroupHom& beta) {
    RelationActionResult out;
    out.base = relation_quiver(alpha, beta);
    out.equalizer = equalizer_subgroup(alpha, beta);
    out.acting = subgroup_as_group(out.equalizer);
    const auto& g = *alpha.domain;

    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < out.base.pairs.size(); ++i)
        index[out.base.pairs[i]] = static_cast<int>(i);

    const int ao = out.acting.group->order;
    out.action.group = out.acting.group;
    out.action.quiver = out.base.quiver;
    out.action.vperm.assign(ao, std::vector<int>(g.order));
    out.action.eperm.assign(ao, std::vector<int>(out.base.pairs.size()));
    for (int t = 0; t < ao; ++t) {
        const int a = out.acting.to_parent[t];
        for (int x = 0; x < g.order; ++x) out.action.vperm[t][x] = g.mul(x, a);
        for (std::size_t i = 0; i < out.base.pairs.size(); ++i) {
            auto [x, y] = out.base.pairs[i];
            auto it = index.find({g.mul(x, a), g.mul(y, a)});
            if (it == index.end())
                internal("diagonal translate of a relation edge left the relation set");
            out.action.eperm[t][i] = it->second;
        }
    }
    if (!validate_action(out.action).ok())
        internal("relation action failed validation");
    auto fr = is_free(out.action);
    if (!fr.vertex_free || !fr.edge_free) internal("relation action is not free");
    return out;
}

std::vector<BundleViolation> validate_bundle(const FiniteQuiver& base,
                                             const PrincipalBundleData& b) {
    std::vector<BundleViolation> out;
    auto add = [&](std::string kind, std::string detail) {
        out.push_back({std::move(kind), std::move(detail)});
    };
    if (!b.group) {
        add("shape", "bundle has no structure group");
        return out;
    }
    const auto& g = *b.group;
    const int np = b.total_size();
    if (static_cast<int>(b.action.size()) != g.order) {
        add("shape", "bundle action does not cover the group");
        return out;
    }
    for (int t = 0; t < g.order; ++t) {
        std::vector<bool> hit(np, false);
        if (static_cast<int>(b.action[t].size()) != np) {
            add("shape", "bundle action row has wrong size");
            return out;
        }
        for (int v : b.action[t]) {
            if (v < 0 || v >= np || hit[v]) {
                add("not_permutation", "action of " + g.label(t) + " is not a permutation of P");
                break;
            }
            hit[v] = true;
        }
    }
    if (!out.empty()) return out;
    for (int p = 0; p < np; ++p)
        if (b.action[g.identity][p] != p) {
            add("identity", "identity moves point " + b.total_labels[p]);
            break;
        }
    for (int s = 0; s < g.order; ++s)
        for (int t = 0; t < g.order; ++t) {
            int st = g.mul(s, t);
            for (int p = 0; p < np; ++p)
                if (b.action[st][p] != b.action[t][b.action[s][p]]) {
                    add("homomorphism", "bundle action violates p·(st) = (p·s)·t at " +
                                            g.label(s) + ", " + g.label(t));
                    s = t = g.order;
                    break;
                }
        }
    for (int t = 0; t < g.order; ++t) {
        if (t == g.identity) continue;
        for (int p = 0; p < np; ++p)
            if (b.action[t][p] == p)
                add("not_free",
                    "point " + b.total_labels[p] + " is fixed by " + g.label(t));
    }
    if (!out.empty()) return out;

    if (static_cast<int>(b.proj.size()) != np) {
        add("shape", "projection has wrong size");
        return out;
    }
    for (int v : b.proj)
        if (v < 0 || v >= base.num_vertices()) {
            add("shape", "projection value out of range");
            return out;
        }
    for (int t = 0; t < g.order; ++t)
        for (int p = 0; p < np; ++p)
            if (b.proj[b.action[t][p]] != b.proj[p]) {
                add("projection", "projection is not constant on the orbit of " +
                                      b.total_labels[p]);
                t = g.order;
                break;
            }
    if (!out.empty()) return out;
    {
        // orbits must biject with base vertices
        if (np != g.order * base.num_vertices())
            add("projection", "P does not have one free orbit per base vertex");
        std::vector<int> seen(base.num_vertices(), 0);
        std::vector<bool> visited(np, false);
        for (int p = 0; p < np; ++p) {
            if (visited[p]) continue;
            for (int t = 0; t < g.order; ++t) visited[b.action[t][p]] = true;
            ++seen[b.proj[p]];
        }
        for (int v = 0; v < base.num_vertices(); ++v)
            if (seen[v] != 1)
                add("projection", "base vertex " + base.vertex_labels[v] + " is covered by " +
                                      std::to_string(seen[v]) + " orbits (want exactly 1)");
    }
    if (!out.empty()) return out;

    std::map<std::pair<int, int>, std::pair<int, int>> theta;
    for (const auto& [from, to] : b.theta) {
        if (from.first < 0 || from.first >= base.num_edges() || from.second < 0 ||
            from.second >= np || to.first < 0 || to.first >= base.num_edges() || to.second < 0 ||
            to.second >= np) {
            add("theta", "theta entry out of range");
            return out;
        }
        if (!theta.emplace(from, to).second)
            add("theta", "theta defined twice at (" + base.edge_labels[from.first] + "," +
                             b.total_labels[from.second] + ")");
    }
    if (!out.empty()) return out;

    std::map<std::pair<int, int>, int> image_count;
    long long expected = 0;
    for (int e = 0; e < base.num_edges(); ++e)
        for (int p = 0; p < np; ++p) {
            if (b.proj[p] != base.src[e]) continue;
            ++expected;
            auto it = theta.find({e, p});
            if (it == theta.end()) {
                add("theta", "theta undefined at (" + base.edge_labels[e] + "," +
                                 b.total_labels[p] + ")");
                continue;
            }
            auto [e2, p2] = it->second;
            if (e2 != e)
                add("theta", "theta does not commute with the edge projection at (" +
                                 base.edge_labels[e] + "," + b.total_labels[p] + ")");
            if (b.proj[p2] != base.rng[e])
                add("theta", "theta image not in the range pullback at (" +
                                 base.edge_labels[e] + "," + b.total_labels[p] + ")");
            ++image_count[it->second];
        }
    if (static_cast<long long>(theta.size()) != expected)
        add("theta", "theta domain is not exactly the source pullback");
    for (const auto& [to, cnt] : image_count)
        if (cnt > 1) add("theta", "theta is not injective");
    if (!out.empty()) return out;

    for (const auto& [from, to] : b.theta)
        for (int t = 0; t < b.group->order; ++t) {
            auto it = theta.find({from.first, b.action[t][from.second]});
            if (it == theta.end() || it->second.first != to.first ||
                it->second.second != b.action[t][to.second]) {
                add("theta", "theta is not G-equivariant at (" + base.edge_labels[from.first] +
                                 "," + b.total_labels[from.second] + "), g = " +
                                 b.group->label(t));
                break;
            }
        }
    return out;
}

BundleQuiverResult bundle_quiver(QuiverPtr base, const PrincipalBundleData& b) {
    auto violations = validate_bundle(*base, b);
    if (!violations.empty())
        fail("invalid bundle data: " + violations.front().kind + ": " +
             violations.front().detail);

    const auto& g = *b.group;
    const int np = b.total_size();

    BundleQuiverResult out;
    std::map<std::pair<int, int>, std::pair<int, int>> theta(b.theta.begin(), b.theta.end());
    std::map<std::pair<int, int>, int> index;
    for (int e = 0; e < base->num_edges(); ++e)
        for (int p = 0; p < np; ++p)
            if (b.proj[p] == base->src[e]) {
                index[{e, p}] = static_cast<int>(out.pairs.size());
                out.pairs.emplace_back(e, p);
            }

    std::vector<std::string> elab;
    std::vector<int> src, rng;
    std::vector<Rational> weight;
    for (auto [e, p] : out.pairs) {
        elab.push_back(pair_label(base->edge_labels[e], b.total_labels[p]));
        src.push_back(p);
        rng.push_back(theta.at({e, p}).second);
        weight.push_back(base->weight[e]);
    }
    out.quiver = make_quiver(b.total_labels, std::move(elab), std::move(src), std::move(rng),
                             std::move(weight), base->strict);

    out.action.group = b.group;
    out.action.quiver = out.quiver;
    out.action.vperm = b.action;
    out.action.eperm.assign(g.order, std::vector<int>(out.pairs.size()));
    for (int t = 0; t < g.order; ++t)
        for (std::size_t i = 0; i < out.pairs.size(); ++i) {
            auto [e, p] = out.pairs[i];
            out.action.eperm[t][i] = index.at({e, b.action[t][p]});
        }

    out.projection.vmap = b.proj;
    out.projection.emap.reserve(out.pairs.size());
    for (auto [e, p] : out.pairs) out.projection.emap.push_back(e);

    if (!validate_action(out.action).ok())
        internal("bundle quiver action failed validation");
    if (!is_quiver_morphism(*out.quiver, *base, out.projection))
        internal("bundle projection is not a quiver morphism");
    return out;
}

PrincipalBundleData trivial_bundle(const FiniteQuiver& base, GroupPtr g, const Cocycle& kappa) {
    if (kappa.values.size() != static_cast<std::size_t>(base.num_edges()))
        fail("cocycle must assign a group element to every edge");
    PrincipalBundleData b;
    b.group = g;
    const int go = g->order;
    for (int v = 0; v < base.num_vertices(); ++v)
        for (int t = 0; t < go; ++t)
            b.total_labels.push_back(pair_label(base.vertex_labels[v], g->label(t)));
    b.action.assign(go, std::vector<int>(b.total_labels.size()));
    for (int h = 0; h < go; ++h)
        for (int v = 0; v < base.num_vertices(); ++v)
            for (int t = 0; t < go; ++t) b.action[h][v * go + t] = v * go + g->mul(t, h);
    b.proj.resize(b.total_labels.size());
    for (int v = 0; v < base.num_vertices(); ++v)
        for (int t = 0; t < go; ++t) b.proj[v * go + t] = v;
    for (int e = 0; e < base.num_edges(); ++e)
        for (int t = 0; t < go; ++t)
            b.theta.push_back({{e, base.src[e] * go + t},
                               {e, base.rng[e] * go + g->mul(kappa.values[e], t)}});
    return b;
}

ClassificationResult classify_action(const QuiverAction& act) {
    {
        auto report = validate_action(act);
        if (!report.ok()) fail("cannot classify an invalid action: " +
                               report.violations.front().detail);
    }
    if (!is_free(act).vertex_free)
        fail("action is not free on vertices; classification unavailable");

    ClassificationResult out;
    out.quotient = quotient_quiver(act);
    const auto& q = *act.quiver;

    out.bundle.group = act.group;
    out.bundle.total_labels = q.vertex_labels;
    out.bundle.action = act.vperm;
    out.bundle.proj = out.quotient.q0;
    // theta = iso_r ∘ iso_s⁻¹ with iso_s(e) = (q¹(e), src(e)),
    // iso_r(e) = (q¹(e), rng(e))
    for (int e = 0; e < q.num_edges(); ++e)
        out.bundle.theta.push_back(
            {{out.quotient.q1[e], q.src[e]}, {out.quotient.q1[e], q.rng[e]}});
    std::sort(out.bundle.theta.begin(), out.bundle.theta.end());

    out.rebuilt = bundle_quiver(out.quotient.quotient, out.bundle);

    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < out.rebuilt.pairs.size(); ++i)
        index[out.rebuilt.pairs[i]] = static_cast<int>(i);
    out.witness.vmap.resize(q.num_vertices());
    std::iota(out.witness.vmap.begin(), out.witness.vmap.end(), 0);
    out.witness.emap.reserve(q.num_edges());
    for (int e = 0; e < q.num_edges(); ++e)
        out.witness.emap.push_back(index.at({out.quotient.q1[e], q.src[e]}));

    if (!is_quiver_isomorphism(q, *out.rebuilt.quiver, out.witness))
        internal("classification witness is not an isomorphism");
    out.witness.is_iso = true;
    if (!morphism_equivariant(out.witness, act, out.rebuilt.action))
        internal("classification witness is not equivariant");
    out.witness.is_equivariant = true;
    return out;
}

SemidirectSkewReport semidirect_skew_check(GroupPtr n, GroupPtr h,
                                           const std::vector<std::vector<int>>& hact,
                                           const std::vector<int>& c) {
    if (static_cast<int>(c.size()) != n->order) fail("c must be a total map N -> H");
    for (int v : c)
        if (v < 0 || v >= h->order) fail("c value out of range");

    SemidirectSkewReport out;
    out.product = make_semidirect(n, h, hact);
    const auto& g = *out.product.group;

    // φ(nh) = c(n)·h, landing in the embedded copy of H
    ElementMap phi(g.order);
    for (int x = 0; x < g.order; ++x) {
        auto [nx, hx] = out.product.unpair(x);
        phi[x] = out.product.pair_index(n->identity, h->mul(c[nx], hx));
    }
    out.coset_side = coset_action(out.product.normal_part, phi, out.product.complement,
                                  TranslationSide::right);

    // single-vertex quiver with one loop per element of N, skewed by c over H
    CosetQuiverResult loops = coset_quiver(full_subgroup(n), right_mult_map(*n, n->identity));
    Cocycle kappa{loops.quiver, h, c};
    out.skew_side = skew_product(loops.quiver, h, kappa);

    const int ho = h->order;
    out.psi.vmap.resize(ho);
    out.psi.emap.resize(static_cast<std::size_t>(n->order) * ho);
    for (int t = 0; t < ho; ++t)
        out.psi.vmap[t] =
            out.coset_side.base.cosets.coset_of[out.product.pair_index(n->identity, t)];
    for (int x = 0; x < n->order; ++x)
        for (int t = 0; t < ho; ++t)
            out.psi.emap[x * ho + t] = out.product.pair_index(x, t);  // ψ¹(n,h) = nh

    const auto& skew_q = *out.skew_side.quiver;
    const auto& coset_q = *out.coset_side.base.quiver;
    out.intertwines = is_quiver_morphism(skew_q, coset_q, out.psi);
    out.weight_preserving = true;
    for (int e = 0; e < skew_q.num_edges(); ++e)
        if (skew_q.weight[e] != coset_q.weight[out.psi.emap[e]]) {
            out.weight_preserving = false;
            break;
        }
    out.psi.is_iso = is_quiver_isomorphism(skew_q, coset_q, out.psi);

    std::vector<int> gmap(ho);
    for (int t = 0; t < ho; ++t)
        gmap[t] = out.coset_side.acting.from_parent[out.product.pair_index(n->identity, t)];
    out.equivariant =
        morphism_equivariant(out.psi, out.skew_side.action, out.coset_side.action, gmap);
    out.psi.is_equivariant = out.equivariant;
    return out;
}

}  // namespace quiverkit
