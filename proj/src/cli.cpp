#include "quiverkit/cli.hpp"

#include "quiverkit/algebra.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace quiverkit {

namespace {

[[noreturn]] void reference_fail(const std::string& msg) { throw ReferenceError(msg); }

const WorkspaceSubgroup& find_subgroup(const Workspace& ws, const std::string& name) {
    auto it = ws.subgroups.find(name);
    if (it == ws.subgroups.end()) reference_fail("unknown subgroup \"" + name + "\"");
    return it->second;
}

const WorkspaceHom& find_hom(const Workspace& ws, const std::string& name) {
    auto it = ws.homs.find(name);
    if (it == ws.homs.end()) reference_fail("unknown hom \"" + name + "\"");
    return it->second;
}

ElementMap phi_from_json(const Json& spec, const FiniteGroup& g, const std::string& where) {
    if (!spec.is_object()) throw SchemaError(where + ": phi must be an object");
    if (spec.contains("right_mult"))
        return right_mult_map(g, resolve_element(g, spec.at("right_mult"), where));
    if (spec.contains("const"))
        return constant_map(g, resolve_element(g, spec.at("const"), where));
    if (spec.contains("map")) {
        const Json& arr = spec.at("map");
        if (!arr.is_array() || static_cast<int>(arr.size()) != g.order)
            throw SchemaError(where + ": phi map must list one image per group element");
        ElementMap out;
        for (const auto& ref : arr) out.push_back(resolve_element(g, ref, where));
        return out;
    }
    throw SchemaError(where + ": phi needs \"right_mult\", \"const\" or \"map\"");
}

// Results of running one construction request.
struct Built {
    std::string op;
    std::optional<SkewProductResult> skew;
    std::optional<CosetQuiverResult> coset;
    std::optional<CosetActionResult> coset_act;
    std::optional<DoubleCosetResult> dcoset;
    std::optional<RelationQuiverResult> relation;
    std::optional<RelationActionResult> relation_act;
    std::optional<BundleQuiverResult> bundle;
    std::optional<ClassificationResult> classification;
    std::optional<SemidirectSkewReport> semiskew;
};

struct BuildContext {
    const Workspace& ws;
    std::map<std::string, Built> cache;
    std::set<std::string> running;
};

const QuiverAction& resolve_action(BuildContext& ctx, const std::string& name);

Built run_construction(BuildContext& ctx, const std::string& name, const Json& spec) {
    const Workspace& ws = ctx.ws;
    const std::string where = "/constructions/" + name;
    Built out;
    out.op = spec.at("op").get<std::string>();

    auto find_quiver = [&](const char* key) -> QuiverPtr {
        const std::string qname = spec.at(key).get<std::string>();
        auto it = ws.quivers.find(qname);
        if (it == ws.quivers.end()) reference_fail(where + ": unknown quiver \"" + qname + "\"");
        return it->second.quiver;
    };
    auto find_group = [&](const char* key) -> GroupPtr {
        const std::string gname = spec.at(key).get<std::string>();
        auto it = ws.groups.find(gname);
        if (it == ws.groups.end()) reference_fail(where + ": unknown group \"" + gname + "\"");
        return it->second.group;
    };
    auto need_field = [&](const char* key) -> const Json& {
        if (!spec.contains(key))
            throw SchemaError(where + ": missing field \"" + key + "\"");
        return spec.at(key);
    };

    try {
        if (out.op == "skew") {
            need_field("quiver");
            need_field("group");
            auto q = find_quiver("quiver");
            auto g = find_group("group");
            Cocycle kappa;
            kappa.quiver = q;
            kappa.group = g;
            const Json& cspec = need_field("cocycle");
            if (cspec.is_array()) {
                if (static_cast<int>(cspec.size()) != q->num_edges())
                    throw SchemaError(where + ": cocycle must cover every edge");
                for (const auto& ref : cspec)
                    kappa.values.push_back(resolve_element(*g, ref, where));
            } else if (cspec.is_object()) {
                kappa.values.assign(q->num_edges(), g->identity);
                for (const auto& [eid, ref] : cspec.items()) {
                    int e = q->edge_index(eid);
                    if (e < 0) reference_fail(where + ": unknown edge \"" + eid + "\"");
                    kappa.values[e] = resolve_element(*g, ref, where);
                }
            } else {
                throw SchemaError(where + ": cocycle must be an array or an object");
            }
            out.skew = skew_product(q, g, kappa);
        } else if (out.op == "coset" || out.op == "coset_action" || out.op == "double_coset") {
            const auto& sub = find_subgroup(ws, need_field("subgroup").get<std::string>());
            ElementMap phi = phi_from_json(need_field("phi"), *sub.subgroup.parent, where);
            if (out.op == "coset") {
                out.coset = coset_quiver(sub.subgroup, phi);
            } else {
                const auto& acting = find_subgroup(ws, need_field("acting").get<std::string>());
                if (!(acting.subgroup.parent == sub.subgroup.parent ||
                      *acting.subgroup.parent == *sub.subgroup.parent))
                    throw SchemaError(where + ": \"subgroup\" and \"acting\" must share a group");
                if (out.op == "coset_action") {
                    TranslationSide side = TranslationSide::right;
                    if (spec.contains("side")) {
                        const std::string s = spec.at("side").get<std::string>();
                        if (s == "left") side = TranslationSide::left;
                        else if (s != "right")
                            throw SchemaError(where + ": side must be \"left\" or \"right\"");
                    }
                    out.coset_act = coset_action(sub.subgroup, phi, acting.subgroup, side);
                } else {
                    out.dcoset = double_coset_quotient(sub.subgroup, phi, acting.subgroup);
                }
            }
        } else if (out.op == "relation" || out.op == "relation_action") {
            const auto& alpha = find_hom(ws, need_field("alpha").get<std::string>());
            const auto& beta = find_hom(ws, need_field("beta").get<std::string>());
            if (out.op == "relation") out.relation = relation_quiver(alpha.hom, beta.hom);
            else out.relation_act = relation_action(alpha.hom, beta.hom);
        } else if (out.op == "bundle") {
            const std::string bname = need_field("bundle").get<std::string>();
            auto it = ws.bundles.find(bname);
            if (it == ws.bundles.end())
                reference_fail(where + ": unknown bundle \"" + bname + "\"");
            auto base = ws.quivers.at(it->second.base_name).quiver;
            out.bundle = bundle_quiver(base, it->second.bundle);
        } else if (out.op == "classify") {
            const auto& act = resolve_action(ctx, need_field("action").get<std::string>());
            out.classification = classify_action(act);
        } else if (out.op == "semidirect_skew") {
            auto n = find_group("n");
            auto h = find_group("h");
            auto hact = h_action_from_json(need_field("haction"), *n, *h, where + "/haction");
            const Json& cspec = need_field("c");
            std::vector<int> c(n->order, h->identity);
            if (cspec.is_array()) {
                if (static_cast<int>(cspec.size()) != n->order)
                    throw SchemaError(where + ": c must cover every element of N");
                for (int i = 0; i < n->order; ++i) c[i] = resolve_element(*h, cspec[i], where);
            } else if (cspec.is_object()) {
                for (const auto& [nlabel, ref] : cspec.items()) {
                    int ni = n->index_of_label(nlabel);
                    if (ni < 0)
                        reference_fail(where + ": no N element labelled \"" + nlabel + "\"");
                    c[ni] = resolve_element(*h, ref, where);
                }
            } else {
                throw SchemaError(where + ": c must be an array or an object");
            }
            out.semiskew = semidirect_skew_check(n, h, hact, c);
        } else {
            throw SchemaError(where + ": unknown op \"" + out.op + "\"");
        }
    } catch (const std::invalid_argument& e) {
        throw ValidationError(where + ": " + e.what());
    }
    return out;
}

const Built& built_for(BuildContext& ctx, const std::string& name) {
    auto hit = ctx.cache.find(name);
    if (hit != ctx.cache.end()) return hit->second;
    if (!ctx.running.insert(name).second)
        reference_fail("cyclic construction reference at \"" + name + "\"");
    auto it = ctx.ws.constructions.find(name);
    if (it == ctx.ws.constructions.end())
        reference_fail("unknown object or construction \"" + name + "\"");
    ctx.cache[name] = run_construction(ctx, name, it->second.spec);
    ctx.running.erase(name);
    return ctx.cache.at(name);
}

QuiverPtr resolve_quiver(BuildContext& ctx, const std::string& name) {
    if (auto it = ctx.ws.quivers.find(name); it != ctx.ws.quivers.end())
        return it->second.quiver;
    const Built& b = built_for(ctx, name);
    if (b.skew) return b.skew->quiver;
    if (b.coset) return b.coset->quiver;
    if (b.coset_act) return b.coset_act->base.quiver;
    if (b.dcoset) return b.dcoset->quotient;
    if (b.relation) return b.relation->quiver;
    if (b.relation_act) return b.relation_act->base.quiver;
    if (b.bundle) return b.bundle->quiver;
    reference_fail("\"" + name + "\" does not produce a quiver");
}

const QuiverAction& resolve_action(BuildContext& ctx, const std::string& name) {
    if (auto it = ctx.ws.actions.find(name); it != ctx.ws.actions.end())
        return it->second.action;
    const Built& b = built_for(ctx, name);
    if (b.skew) return b.skew->action;
    if (b.coset_act) return b.coset_act->action;
    if (b.relation_act) return b.relation_act->action;
    if (b.bundle) return b.bundle->action;
    reference_fail("\"" + name + "\" does not produce a group action");
}

Json ktheory_to_json(const KTheoryResult& kt) {
    Json torsion = Json::array();
    for (const auto& d : kt.k0_torsion) torsion.push_back(d.convert_to<long long>());
    Json j;
    j["k0"] = Json{{"rank", kt.k0_free_rank}, {"torsion", std::move(torsion)}};
    j["k1"] = Json{{"rank", kt.k1_free_rank}};
    return j;
}

Json presentation_to_json(const FiniteQuiver& q, const AlgebraPresentation& p) {
    Json j;
    j["projections"] = p.projections;
    j["isometries"] = p.isometries;
    Json reg = Json::array();
    for (int v : p.regular) reg.push_back(q.vertex_labels[v]);
    j["regular"] = std::move(reg);
    j["orthogonality"] = "p(v) p(w) = 0 for v != w";
    Json srcrel = Json::array();
    for (const auto& r : p.source_relations)
        srcrel.push_back(Json{{"isometry", p.isometries[r.edge]},
                              {"projection", p.projections[r.vertex]}});
    j["source_relations"] = std::move(srcrel);
    Json rngrel = Json::array();
    for (const auto& r : p.range_relations) {
        Json edges = Json::array();
        for (int e : r.edges) edges.push_back(p.isometries[e]);
        rngrel.push_back(Json{{"projection", p.projections[r.vertex]},
                              {"isometries", std::move(edges)}});
    }
    j["range_relations"] = std::move(rngrel);
    j["weight_notes"] = p.weight_notes;
    return j;
}

Json freeness_to_json(const QuiverAction& act) {
    auto fr = is_free(act);
    Json j;
    j["vertex_free"] = fr.vertex_free;
    j["edge_free"] = fr.edge_free;
    if (!fr.vertex_free) {
        j["vertex_witness"] = Json{{"g", act.group->label(fr.vertex_witness_g)},
                                   {"vertex", act.quiver->vertex_labels[fr.vertex_witness]}};
    }
    if (!fr.edge_free) {
        j["edge_witness"] = Json{{"g", act.group->label(fr.edge_witness_g)},
                                 {"edge", act.quiver->edge_labels[fr.edge_witness]}};
    }
    return j;
}

Json quotient_to_json(const QuotientResult& res, const FiniteQuiver& original) {
    Json j;
    j["quotient"] = quiver_to_json(*res.quotient);
    Json q0 = Json::object(), q1 = Json::object();
    for (int v = 0; v < original.num_vertices(); ++v)
        q0[original.vertex_labels[v]] = res.quotient->vertex_labels[res.q0[v]];
    for (int e = 0; e < original.num_edges(); ++e)
        q1[original.edge_labels[e]] = res.quotient->edge_labels[res.q1[e]];
    j["q0"] = std::move(q0);
    j["q1"] = std::move(q1);
    return j;
}

Json bundle_to_json(const PrincipalBundleData& b, const FiniteQuiver& base) {
    Json j;
    j["total"] = b.total_labels;
    Json proj = Json::object();
    for (std::size_t p = 0; p < b.proj.size(); ++p)
        proj[b.total_labels[p]] = base.vertex_labels[b.proj[p]];
    j["proj"] = std::move(proj);
    Json action = Json::object();
    for (int t = 0; t < b.group->order; ++t) action[b.group->label(t)] = b.action[t];
    j["action"] = std::move(action);
    Json theta = Json::array();
    for (const auto& [from, to] : b.theta)
        theta.push_back(Json::array(
            {Json::array({base.edge_labels[from.first], b.total_labels[from.second]}),
             Json::array({base.edge_labels[to.first], b.total_labels[to.second]})}));
    j["theta"] = std::move(theta);
    return j;
}

Json built_to_json(const std::string& name, const Built& b) {
    Json j;
    j["op"] = b.op;
    if (b.skew) {
        j["quiver"] = quiver_to_json(*b.skew->quiver);
        j["action"] = action_to_json(b.skew->action, "(group)", name);
    } else if (b.coset) {
        j["quiver"] = quiver_to_json(*b.coset->quiver);
    } else if (b.coset_act) {
        j["quiver"] = quiver_to_json(*b.coset_act->base.quiver);
        j["action"] = action_to_json(b.coset_act->action, "(acting subgroup)", name);
        j["freeness"] = freeness_to_json(b.coset_act->action);
    } else if (b.dcoset) {
        j["quotient"] = quiver_to_json(*b.dcoset->quotient);
        j["generic_quotient"] = quiver_to_json(*b.dcoset->generic.quotient);
        j["isomorphism"] =
            morphism_to_json(b.dcoset->from_generic, *b.dcoset->generic.quotient,
                             *b.dcoset->quotient);
        j["agrees_with_generic"] = true;
    } else if (b.relation) {
        j["quiver"] = quiver_to_json(*b.relation->quiver);
        Json empty = Json::array();
        for (int v : b.relation->empty_fiber_vertices)
            empty.push_back(b.relation->quiver->vertex_labels[v]);
        j["empty_fiber_vertices"] = std::move(empty);
    } else if (b.relation_act) {
        j["quiver"] = quiver_to_json(*b.relation_act->base.quiver);
        Json eq = Json::array();
        for (int x : b.relation_act->equalizer.elements)
            eq.push_back(b.relation_act->equalizer.parent->label(x));
        j["equalizer"] = std::move(eq);
        j["action"] = action_to_json(b.relation_act->action, "(equalizer)", name);
        j["freeness"] = freeness_to_json(b.relation_act->action);
    } else if (b.bundle) {
        j["quiver"] = quiver_to_json(*b.bundle->quiver);
        j["action"] = action_to_json(b.bundle->action, "(group)", name);
    } else if (b.classification) {
        const auto& c = *b.classification;
        j["base"] = quiver_to_json(*c.quotient.quotient);
        j["bundle"] = bundle_to_json(c.bundle, *c.quotient.quotient);
        j["rebuilt"] = quiver_to_json(*c.rebuilt.quiver);
        j["witness"] =
            morphism_to_json(c.witness, *c.rebuilt.action.quiver, *c.rebuilt.quiver);
        j["equivariant"] = c.witness.is_equivariant;
    } else if (b.semiskew) {
        const auto& r = *b.semiskew;
        j["group_order"] = r.product.group->order;
        j["coset_quiver"] = quiver_to_json(*r.coset_side.base.quiver);
        j["skew_quiver"] = quiver_to_json(*r.skew_side.quiver);
        j["psi"] = morphism_to_json(r.psi, *r.skew_side.quiver, *r.coset_side.base.quiver);
        j["verified"] = r.verified();
    }
    return j;
}

Json workspace_summary(const Workspace& ws) {
    Json j;
    j["schema"] = "quiverkit/1";
    auto names = [](const auto& map) {
        Json arr = Json::array();
        for (const auto& [k, v] : map) arr.push_back(k);
        return arr;
    };
    j["groups"] = names(ws.groups);
    j["subgroups"] = names(ws.subgroups);
    j["homs"] = names(ws.homs);
    j["quivers"] = names(ws.quivers);
    j["actions"] = names(ws.actions);
    j["bundles"] = names(ws.bundles);
    j["constructions"] = names(ws.constructions);
    return j;
}

}  // namespace

CommandResult run_command(const Workspace& ws, const std::string& command,
                          const std::vector<std::string>& names) {
    BuildContext ctx{ws, {}, {}};
    CommandResult out;
    auto single_name = [&]() -> const std::string& {
        if (names.size() != 1)
            throw SchemaError("command \"" + command + "\" needs exactly one --name");
        return names.front();
    };

    if (command == "build") {
        if (names.empty()) {
            out.report = workspace_summary(ws);
            out.human = "workspace ok";
            return out;
        }
        const std::string& name = single_name();
        if (ws.constructions.count(name)) {
            out.report = built_to_json(name, built_for(ctx, name));
            out.human = "built construction " + name;
        } else if (ws.quivers.count(name)) {
            out.report = quiver_to_json(*ws.quivers.at(name).quiver);
            out.human = "quiver " + name;
        } else if (ws.groups.count(name)) {
            const auto& g = *ws.groups.at(name).group;
            out.report = Json{{"order", g.order}, {"labels", g.labels}};
            out.human = "group " + name + " of order " + std::to_string(g.order);
        } else if (ws.actions.count(name)) {
            const auto& wa = ws.actions.at(name);
            out.report = action_to_json(wa.action, wa.group_name, wa.quiver_name);
            out.human = "action " + name;
        } else if (ws.subgroups.count(name)) {
            const auto& s = ws.subgroups.at(name);
            Json elems = Json::array();
            for (int x : s.subgroup.elements) elems.push_back(s.subgroup.parent->label(x));
            out.report = Json{{"group", s.group_name},
                              {"order", s.subgroup.order()},
                              {"elements", std::move(elems)},
                              {"normal", is_normal_subgroup(s.subgroup)}};
            out.human = "subgroup " + name;
        } else if (ws.bundles.count(name)) {
            const auto& wb = ws.bundles.at(name);
            out.report = bundle_to_json(wb.bundle, *ws.quivers.at(wb.base_name).quiver);
            out.human = "bundle " + name;
        } else if (ws.homs.count(name)) {
            const auto& wh = ws.homs.at(name);
            Json map = Json::array();
            for (int x : wh.hom.map) map.push_back(wh.hom.codomain->label(x));
            out.report = Json{{"domain", wh.domain_name},
                              {"codomain", wh.codomain_name},
                              {"map", std::move(map)}};
            out.human = "hom " + name;
        } else {
            reference_fail("unknown object \"" + name + "\"");
        }
        return out;
    }

    if (command == "verify-action") {
        const auto& act = resolve_action(ctx, single_name());
        auto report = validate_action(act);
        Json violations = Json::array();
        for (const auto& v : report.violations)
            violations.push_back(Json{{"kind", v.kind}, {"detail", v.detail}});
        out.report = Json{{"valid", report.ok()}, {"violations", std::move(violations)}};
        if (report.ok()) {
            out.report["freeness"] = freeness_to_json(act);
            auto parts = orbits(act);
            out.report["vertex_orbits"] = parts.vertex_orbits.size();
            out.report["edge_orbits"] = parts.edge_orbits.size();
            out.human = "action is valid";
        } else {
            out.human = "action is invalid: " + report.violations.front().detail;
            out.exit_code = 1;
        }
        return out;
    }

    if (command == "quotient") {
        const auto& act = resolve_action(ctx, single_name());
        auto res = quotient_quiver(act);
        out.report = quotient_to_json(res, *act.quiver);
        out.human = "quotient has " + std::to_string(res.quotient->num_vertices()) +
                    " vertices and " + std::to_string(res.quotient->num_edges()) + " edges";
        return out;
    }

    if (command == "skew" || command == "coset" || command == "relation") {
        const std::string& name = single_name();
        auto it = ws.constructions.find(name);
        if (it == ws.constructions.end())
            reference_fail("unknown construction \"" + name + "\"");
        const std::string op = it->second.spec.at("op").get<std::string>();
        if (op != command)
            throw SchemaError("construction \"" + name + "\" has op \"" + op +
                              "\", expected \"" + command + "\"");
        out.report = built_to_json(name, built_for(ctx, name));
        out.human = "built " + command + " construction " + name;
        return out;
    }

    if (command == "classify") {
        const std::string& name = single_name();
        const QuiverAction* act = nullptr;
        if (ws.constructions.count(name) &&
            ws.constructions.at(name).spec.at("op") == "classify") {
            out.report = built_to_json(name, built_for(ctx, name));
            out.human = "classified " + name;
            return out;
        }
        act = &resolve_action(ctx, name);
        ClassificationResult res;
        try {
            res = classify_action(*act);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
        Built b;
        b.op = "classify";
        b.classification = std::move(res);
        out.report = built_to_json(name, b);
        out.human = "classified action " + name;
        return out;
    }

    if (command == "roundtrip") {
        const auto& act = resolve_action(ctx, single_name());
        ClassificationResult res;
        try {
            res = classify_action(act);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
        bool ok = res.witness.is_iso && res.witness.is_equivariant;
        out.report = Json{{"isomorphic", ok}, {"equivariant", res.witness.is_equivariant}};
        out.human = ok ? "round-trip reproduced the quiver equivariantly"
                       : "round-trip failed";
        out.exit_code = ok ? 0 : 2;
        return out;
    }

    if (command == "iso") {
        if (names.size() != 2) throw SchemaError("iso needs exactly two --name arguments");
        auto a = resolve_quiver(ctx, names[0]);
        auto b = resolve_quiver(ctx, names[1]);
        auto m = quiver_isomorphic(*a, *b);
        if (m) {
            out.report = Json{{"isomorphic", true}, {"morphism", morphism_to_json(*m, *a, *b)}};
            out.human = "isomorphic";
        } else {
            out.report = Json{{"isomorphic", false}};
            out.human = "not isomorphic";
            out.exit_code = 2;
        }
        return out;
    }

    if (command == "components") {
        auto q = resolve_quiver(ctx, single_name());
        auto comps = connected_components(*q);
        out.report["components"] = comps.count();
        Json sizes = Json::array();
        for (const auto& c : comps.components)
            sizes.push_back(Json{{"vertices", c.num_vertices()}, {"edges", c.num_edges()}});
        out.report["component_sizes"] = std::move(sizes);
        Json vc = Json::object();
        for (int v = 0; v < q->num_vertices(); ++v)
            vc[q->vertex_labels[v]] = comps.vertex_component[v];
        out.report["vertex_component"] = std::move(vc);
        out.human = std::to_string(comps.count()) + " connected components";
        return out;
    }

    if (command == "ktheory") {
        auto q = resolve_quiver(ctx, single_name());
        out.report = ktheory_to_json(k_theory(*q));
        out.human = "k-theory computed";
        return out;
    }

    if (command == "presentation") {
        auto q = resolve_quiver(ctx, single_name());
        auto p = ck_presentation(*q);
        out.report = presentation_to_json(*q, p);
        out.human = presentation_text(p);
        return out;
    }

    if (command == "report") {
        if (!names.empty()) throw SchemaError("report takes no --name");
        Json j;
        j["schema"] = "quiverkit/1";
        Json groups = Json::object();
        for (const auto& [name, wg] : ws.groups)
            groups[name] = Json{{"order", wg.group->order}, {"valid", true}};
        j["groups"] = std::move(groups);
        Json subgroups = Json::object();
        for (const auto& [name, s] : ws.subgroups)
            subgroups[name] = Json{{"group", s.group_name},
                                   {"order", s.subgroup.order()},
                                   {"normal", is_normal_subgroup(s.subgroup)}};
        j["subgroups"] = std::move(subgroups);
        Json homs = Json::object();
        for (const auto& [name, h] : ws.homs)
            homs[name] = Json{{"domain", h.domain_name},
                              {"codomain", h.codomain_name},
                              {"kernel_order", kernel(h.hom).order()}};
        j["homs"] = std::move(homs);
        Json quivers = Json::object();
        for (const auto& [name, wq] : ws.quivers) {
            const auto& q = *wq.quiver;
            quivers[name] = Json{{"vertices", q.num_vertices()},
                                 {"edges", q.num_edges()},
                                 {"strict", q.strict},
                                 {"components", connected_components(q).count()},
                                 {"ktheory", ktheory_to_json(k_theory(q))}};
        }
        j["quivers"] = std::move(quivers);
        Json actions = Json::object();
        for (const auto& [name, wa] : ws.actions) {
            auto parts = orbits(wa.action);
            Json a = Json{{"group", wa.group_name},
                          {"quiver", wa.quiver_name},
                          {"valid", true},
                          {"vertex_orbits", parts.vertex_orbits.size()},
                          {"edge_orbits", parts.edge_orbits.size()}};
            a["freeness"] = freeness_to_json(wa.action);
            actions[name] = std::move(a);
        }
        j["actions"] = std::move(actions);
        Json bundles = Json::object();
        for (const auto& [name, wb] : ws.bundles)
            bundles[name] = Json{{"group", wb.group_name},
                                 {"base", wb.base_name},
                                 {"total", wb.bundle.total_size()},
                                 {"valid", true}};
        j["bundles"] = std::move(bundles);
        Json cons = Json::object();
        for (const auto& [name, wc] : ws.constructions)
            cons[name] = built_to_json(name, built_for(ctx, name));
        j["constructions"] = std::move(cons);
        out.report = std::move(j);
        out.human = "report complete";
        return out;
    }

    throw SchemaError("unknown command \"" + command + "\"");
}

}  // namespace quiverkit
