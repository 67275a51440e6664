#include "quiverkit/action.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quiverkit {

namespace {

bool is_permutation(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> hit(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

std::vector<std::vector<int>> orbit_partition(const std::vector<std::vector<int>>& perms, int n) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> orbit{start};
        seen[start] = true;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& p : perms) {
                int y = p[orbit[i]];
                if (!seen[y]) {
                    seen[y] = true;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<int> orbit_index(const std::vector<std::vector<int>>& orbits, int n) {
    std::vector<int> of(n, -1);
    for (std::size_t i = 0; i < orbits.size(); ++i)
        for (int x : orbits[i]) of[x] = static_cast<int>(i);
    return of;
}

}  // namespace

ActionReport validate_action(const QuiverAction& act) {
    ActionReport report;
    auto add = [&](ActionViolation v) { report.violations.push_back(std::move(v)); };

    if (!act.group || !act.quiver) {
        add({"shape", -1, -1, -1, -1, "action is missing its group or quiver"});
        return report;
    }
    const auto& g = *act.group;
    const auto& q = *act.quiver;
    const int nv = q.num_vertices(), ne = q.num_edges();

    if (static_cast<int>(act.vperm.size()) != g.order ||
        static_cast<int>(act.eperm.size()) != g.order) {
        add({"shape", -1, -1, -1, -1, "permutation tables do not cover the group"});
        return report;
    }
    for (int t = 0; t < g.order; ++t) {
        if (!is_permutation(act.vperm[t], nv))
            add({"not_permutation", t, -1, -1, -1,
                 "vertex map of " + g.label(t) + " is not a permutation"});
        if (!is_permutation(act.eperm[t], ne))
            add({"not_permutation", t, -1, -1, -1,
                 "edge map of " + g.label(t) + " is not a permutation"});
    }
    if (!report.ok()) return report;

    for (int v = 0; v < nv; ++v)
        if (act.vperm[g.identity][v] != v) {
            add({"identity", g.identity, -1, v, -1, "identity moves vertex " + q.vertex_labels[v]});
            break;
        }
    for (int e = 0; e < ne; ++e)
        if (act.eperm[g.identity][e] != e) {
            add({"identity", g.identity, -1, -1, e, "identity moves edge " + q.edge_labels[e]});
            break;
        }

    // right-action law: x·(st) == (x·s)·t
    for (int s = 0; s < g.order && report.ok(); ++s)
        for (int t = 0; t < g.order && report.ok(); ++t) {
            int st = g.mul(s, t);
            for (int v = 0; v < nv; ++v)
                if (act.vperm[st][v] != act.vperm[t][act.vperm[s][v]]) {
                    add({"homomorphism", s, t, v, -1,
                         "vertex maps violate v·(" + g.label(s) + "·" + g.label(t) +
                             ") = (v·" + g.label(s) + ")·" + g.label(t)});
                    break;
                }
            for (int e = 0; e < ne; ++e)
                if (act.eperm[st][e] != act.eperm[t][act.eperm[s][e]]) {
                    add({"homomorphism", s, t, -1, e,
                         "edge maps violate e·(" + g.label(s) + "·" + g.label(t) +
                             ") = (e·" + g.label(s) + ")·" + g.label(t)});
                    break;
                }
        }

    for (int t = 0; t < g.order; ++t)
        for (int e = 0; e < ne; ++e) {
            int eg = act.eperm[t][e];
            if (q.src[eg] != act.vperm[t][q.src[e]])
                add({"src_equivariance", t, -1, -1, e,
                     "src(e·g) != src(e)·g for g = " + g.label(t) + ", e = " + q.edge_labels[e]});
            if (q.rng[eg] != act.vperm[t][q.rng[e]])
                add({"rng_equivariance", t, -1, -1, e,
                     "rng(e·g) != rng(e)·g for g = " + g.label(t) + ", e = " + q.edge_labels[e]});
            if (q.weight[eg] != q.weight[e])
                add({"weight_invariance", t, -1, -1, e,
                     "weight(e·g) != weight(e) for g = " + g.label(t) +
                         ", e = " + q.edge_labels[e]});
        }
    return report;
}

FreenessReport is_free(const QuiverAction& act) {
    FreenessReport out;
    const auto& g = *act.group;
    for (int t = 0; t < g.order && out.vertex_free; ++t) {
        if (t == g.identity) continue;
        for (int v = 0; v < act.quiver->num_vertices(); ++v)
            if (act.vperm[t][v] == v) {
                out.vertex_free = false;
                out.vertex_witness_g = t;
                out.vertex_witness = v;
                break;
            }
    }
    for (int t = 0; t < g.order && out.edge_free; ++t) {
        if (t == g.identity) continue;
        for (int e = 0; e < act.quiver->num_edges(); ++e)
            if (act.eperm[t][e] == e) {
                out.edge_free = false;
                out.edge_witness_g = t;
                out.edge_witness = e;
                break;
            }
    }
    return out;
}

OrbitPartition orbits(const QuiverAction& act) {
    OrbitPartition out;
    out.vertex_orbits = orbit_partition(act.vperm, act.quiver->num_vertices());
    out.edge_orbits = orbit_partition(act.eperm, act.quiver->num_edges());
    out.vertex_orbit_of = orbit_index(out.vertex_orbits, act.quiver->num_vertices());
    out.edge_orbit_of = orbit_index(out.edge_orbits, act.quiver->num_edges());
    return out;
}

QuotientResult quotient_quiver(const QuiverAction& act) {
    const auto& q = *act.quiver;
    OrbitPartition parts = orbits(act);

    QuotientResult out;
    out.q0 = parts.vertex_orbit_of;
    out.q1 = parts.edge_orbit_of;

    std::vector<std::string> vlab, elab;
    vlab.reserve(parts.vertex_orbits.size());
    for (const auto& orb : parts.vertex_orbits)
        vlab.push_back("orb(" + q.vertex_labels[orb.front()] + ")");

    std::vector<int> src, rng;
    std::vector<Rational> weight;
    for (const auto& orb : parts.edge_orbits) {
        int e0 = orb.front();
        elab.push_back("orb(" + q.edge_labels[e0] + ")");
        src.push_back(out.q0[q.src[e0]]);
        rng.push_back(out.q0[q.rng[e0]]);

        // class weight at each representative of the source orbit; all
        // representatives must agree for the quotient system to be defined
        const auto& srcorb = parts.vertex_orbits[out.q0[q.src[e0]]];
        Rational at_min;
        bool first = true;
        for (int v : srcorb) {
            Rational sum = 0;
            for (int e : orb)
                if (q.src[e] == v) sum += q.weight[e];
            if (first) {
                at_min = sum;
                first = false;
            } else if (sum != at_min) {
                throw std::logic_error(
                    "quotient weight of class " + elab.back() +
                    " depends on the representative; the action was not validated");
            }
        }
        weight.push_back(at_min);
    }
    out.quotient = make_quiver(std::move(vlab), std::move(elab), std::move(src), std::move(rng),
                               std::move(weight), q.strict);
    return out;
}

ComponentOrbits component_orbits(const QuiverAction& act) {
    ComponentOrbits out;
    out.decomposition = connected_components(*act.quiver);
    const int nc = out.decomposition.count();
    const auto& g = *act.group;

    out.comp_perm.assign(g.order, std::vector<int>(nc, -1));
    for (int t = 0; t < g.order; ++t)
        for (int c = 0; c < nc; ++c) {
            int v0 = out.decomposition.component_vertices[c].front();
            out.comp_perm[t][c] = out.decomposition.vertex_component[act.vperm[t][v0]];
        }
    out.orbits = orbit_partition(out.comp_perm, nc);
    out.orbit_of = orbit_index(out.orbits, nc);
    return out;
}

QuiverAction trivial_action(GroupPtr group, QuiverPtr quiver) {
    QuiverAction act;
    act.group = std::move(group);
    act.quiver = std::move(quiver);
    std::vector<int> vid(act.quiver->num_vertices()), eid(act.quiver->num_edges());
    std::iota(vid.begin(), vid.end(), 0);
    std::iota(eid.begin(), eid.end(), 0);
    act.vperm.assign(act.group->order, vid);
    act.eperm.assign(act.group->order, eid);
    return act;
}

QuiverAction complete_action(GroupPtr group, QuiverPtr quiver,
                             const std::vector<std::pair<int, std::vector<int>>>& vperms,
                             const std::vector<std::pair<int, std::vector<int>>>& eperms) {
    const auto& g = *group;
    const int nv = quiver->num_vertices(), ne = quiver->num_edges();

    QuiverAction act;
    act.group = group;
    act.quiver = quiver;
    act.vperm.assign(g.order, {});
    act.eperm.assign(g.order, {});
    std::vector<char> known(g.order, 0);

    auto put = [&](std::vector<std::vector<int>>& table, int t, std::vector<int> perm, int n,
                   bool was_known, const char* what) {
        if (!is_permutation(perm, n))
            throw std::invalid_argument(std::string(what) + " for element " + g.label(t) +
                                        " is not a permutation");
        if (was_known && table[t] != perm)
            throw std::invalid_argument(std::string(what) + " for element " + g.label(t) +
                                        " is inconsistent");
        table[t] = std::move(perm);
    };

    std::vector<int> vid(nv), eid(ne);
    std::iota(vid.begin(), vid.end(), 0);
    std::iota(eid.begin(), eid.end(), 0);
    act.vperm[g.identity] = vid;
    act.eperm[g.identity] = eid;
    known[g.identity] = 1;

    std::vector<char> vgiven(g.order, 0), egiven(g.order, 0);
    vgiven[g.identity] = egiven[g.identity] = 1;
    for (const auto& [t, p] : vperms) {
        put(act.vperm, t, p, nv, vgiven[t], "vertex permutation");
        vgiven[t] = 1;
    }
    for (const auto& [t, p] : eperms) {
        put(act.eperm, t, p, ne, egiven[t], "edge permutation");
        egiven[t] = 1;
    }
    for (int t = 0; t < g.order; ++t) {
        if (vgiven[t] != egiven[t])
            throw std::invalid_argument("element " + g.label(t) +
                                        " has only one of its two permutations given");
        known[t] = vgiven[t];
    }

    // close under products; perm(st) = perm(t) ∘ perm(s)
    auto compose = [](const std::vector<int>& s, const std::vector<int>& t) {
        std::vector<int> out(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) out[i] = t[s[i]];
        return out;
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (int s = 0; s < g.order; ++s) {
            if (!known[s]) continue;
            for (int t = 0; t < g.order; ++t) {
                if (!known[t]) continue;
                int st = g.mul(s, t);
                auto v = compose(act.vperm[s], act.vperm[t]);
                auto e = compose(act.eperm[s], act.eperm[t]);
                if (!known[st]) {
                    act.vperm[st] = std::move(v);
                    act.eperm[st] = std::move(e);
                    known[st] = 1;
                    progress = true;
                } else if (act.vperm[st] != v || act.eperm[st] != e) {
                    throw std::invalid_argument("permutations given for " + g.label(s) + " and " +
                                                g.label(t) + " disagree at their product " +
                                                g.label(st));
                }
            }
        }
    }
    for (int t = 0; t < g.order; ++t)
        if (!known[t])
            throw std::invalid_argument("given permutations do not determine element " +
                                        g.label(t) + "; not enough generators");
    return act;
}

bool morphism_equivariant(const QuiverMorphism& m, const QuiverAction& a, const QuiverAction& b,
                          const std::vector<int>& gmap) {
    if (a.group->order != b.group->order) return false;
    if (static_cast<int>(gmap.size()) != a.group->order) return false;
    for (int t = 0; t < a.group->order; ++t) {
        int u = gmap[t];
        if (u < 0 || u >= b.group->order) return false;
        for (int v = 0; v < a.quiver->num_vertices(); ++v)
            if (m.vmap[a.vperm[t][v]] != b.vperm[u][m.vmap[v]]) return false;
        for (int e = 0; e < a.quiver->num_edges(); ++e)
            if (m.emap[a.eperm[t][e]] != b.eperm[u][m.emap[e]]) return false;
    }
    return true;
}

bool morphism_equivariant(const QuiverMorphism& m, const QuiverAction& a, const QuiverAction& b) {
    std::vector<int> id(a.group->order);
    std::iota(id.begin(), id.end(), 0);
    return morphism_equivariant(m, a, b, id);
}

}  // namespace quiverkit
