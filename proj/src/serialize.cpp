#include "quiverkit/serialize.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace quiverkit {

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& msg) {
    throw SchemaError(where + ": " + msg);
}

[[noreturn]] void reference_fail(const std::string& where, const std::string& msg) {
    throw ReferenceError(where + ": " + msg);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        schema_fail(where, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string need_string(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_string()) schema_fail(where, std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

int need_int(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_number_integer())
        schema_fail(where, std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

int resolve_element(const FiniteGroup& g, const Json& ref, const std::string& where) {
    if (ref.is_number_integer()) {
        int idx = ref.get<int>();
        if (idx < 0 || idx >= g.order)
            reference_fail(where, "element index " + std::to_string(idx) + " out of range");
        return idx;
    }
    if (ref.is_string()) {
        int idx = g.index_of_label(ref.get<std::string>());
        if (idx < 0)
            reference_fail(where, "no element labelled \"" + ref.get<std::string>() + "\"");
        return idx;
    }
    schema_fail(where, "element reference must be an index or a label");
}

namespace {

GroupPtr group_from_json(const Json& spec, const Workspace& ws, const std::string& where);

GroupPtr resolve_group_ref(const Json& ref, const Workspace& ws, const std::string& where,
                           std::string* name_out = nullptr) {
    if (ref.is_string()) {
        auto it = ws.groups.find(ref.get<std::string>());
        if (it == ws.groups.end())
            reference_fail(where, "unknown group \"" + ref.get<std::string>() + "\"");
        if (name_out) *name_out = ref.get<std::string>();
        return it->second.group;
    }
    if (ref.is_object()) return group_from_json(ref, ws, where);
    schema_fail(where, "group reference must be a name or an inline group object");
}

}  // namespace

std::vector<std::vector<int>> h_action_from_json(const Json& spec, const FiniteGroup& n,
                                                 const FiniteGroup& h,
                                                 const std::string& where) {
    if (spec.is_string()) {
        const auto s = spec.get<std::string>();
        if (s == "trivial") return trivial_h_action(n, h);
        if (s == "inversion") return inversion_h_action(n, h);
        schema_fail(where, "unknown action shorthand \"" + s + "\"");
    }
    if (!spec.is_object()) schema_fail(where, "action must be an object or a shorthand string");
    // images per H element, possibly only for generators; complete via the
    // Cayley table of H
    std::vector<std::vector<int>> act(h.order);
    for (const auto& [key, val] : spec.items()) {
        int t = h.index_of_label(key);
        if (t < 0) reference_fail(where, "no H element labelled \"" + key + "\"");
        if (!val.is_array() || static_cast<int>(val.size()) != n.order)
            schema_fail(where, "automorphism for \"" + key + "\" must list |N| images");
        std::vector<int> perm(n.order);
        for (int i = 0; i < n.order; ++i) perm[i] = resolve_element(n, val[i], where);
        act[t] = std::move(perm);
    }
    std::vector<int> id(n.order);
    std::iota(id.begin(), id.end(), 0);
    if (act[h.identity].empty()) act[h.identity] = id;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int s = 0; s < h.order; ++s) {
            if (act[s].empty()) continue;
            for (int t = 0; t < h.order; ++t) {
                if (act[t].empty()) continue;
                int st = h.mul(s, t);
                std::vector<int> comp(n.order);
                for (int i = 0; i < n.order; ++i) comp[i] = act[s][act[t][i]];
                if (act[st].empty()) {
                    act[st] = std::move(comp);
                    progress = true;
                } else if (act[st] != comp) {
                    schema_fail(where, "action automorphisms are inconsistent at " +
                                           h.labels[s] + "*" + h.labels[t]);
                }
            }
        }
    }
    for (int t = 0; t < h.order; ++t)
        if (act[t].empty())
            schema_fail(where, "action is not determined for H element " + h.labels[t]);
    return act;
}

namespace {

GroupPtr group_from_json(const Json& spec, const Workspace& ws, const std::string& where) {
    const std::string kind = need_string(spec, "kind", where);
    try {
        if (kind == "cyclic") return cyclic_group(need_int(spec, "n", where));
        if (kind == "dihedral") return dihedral_group(need_int(spec, "n", where));
        if (kind == "symmetric") return symmetric_group(need_int(spec, "n", where));
        if (kind == "quaternion8") return quaternion_group8();
        if (kind == "binary_octahedral") return binary_octahedral_group();
        if (kind == "semidirect") {
            auto n = resolve_group_ref(need(spec, "n", where), ws, where + "/n");
            auto h = resolve_group_ref(need(spec, "h", where), ws, where + "/h");
            auto act = h_action_from_json(need(spec, "action", where), *n, *h, where + "/action");
            return make_semidirect(n, h, act).group;
        }
        if (kind == "cayley") {
            const Json& table = need(spec, "table", where);
            if (!table.is_array() || table.empty())
                schema_fail(where, "cayley table must be a nonempty array of rows");
            const int order = static_cast<int>(table.size());
            std::vector<std::string> labels;
            if (spec.contains("labels")) {
                for (const auto& l : spec.at("labels")) labels.push_back(l.get<std::string>());
            } else {
                for (int i = 0; i < order; ++i) labels.push_back("g" + std::to_string(i));
            }
            if (static_cast<int>(labels.size()) != order)
                schema_fail(where, "labels must match the table size");
            std::vector<int> flat;
            flat.reserve(static_cast<std::size_t>(order) * order);
            for (const auto& row : table) {
                if (!row.is_array() || static_cast<int>(row.size()) != order)
                    schema_fail(where, "cayley table must be square");
                for (const auto& v : row) {
                    if (v.is_number_integer()) {
                        flat.push_back(v.get<int>());
                    } else if (v.is_string()) {
                        auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
                        if (it == labels.end())
                            reference_fail(where, "unknown label in cayley table");
                        flat.push_back(static_cast<int>(it - labels.begin()));
                    } else {
                        schema_fail(where, "cayley entries must be indices or labels");
                    }
                }
            }
            return make_group(std::move(flat), std::move(labels));
        }
    } catch (const std::invalid_argument& e) {
        throw ValidationError(where + ": " + e.what());
    }
    schema_fail(where, "unknown group kind \"" + kind + "\"");
}

}  // namespace

QuiverPtr quiver_from_json(const Json& j, bool default_strict, const std::string& where) {
    if (!j.is_object()) schema_fail(where, "quiver must be an object");
    const Json& vs = need(j, "vertices", where);
    const Json& es = need(j, "edges", where);
    if (!vs.is_array() || !es.is_array())
        schema_fail(where, "\"vertices\" and \"edges\" must be arrays");

    std::vector<std::string> vlab;
    for (const auto& v : vs) {
        if (!v.is_string()) schema_fail(where, "vertex labels must be strings");
        vlab.push_back(v.get<std::string>());
    }
    auto vertex_index = [&](const Json& ref, const std::string& ctx) -> int {
        if (ref.is_number_integer()) {
            int idx = ref.get<int>();
            if (idx < 0 || idx >= static_cast<int>(vlab.size()))
                reference_fail(ctx, "vertex index out of range");
            return idx;
        }
        if (ref.is_string()) {
            auto it = std::find(vlab.begin(), vlab.end(), ref.get<std::string>());
            if (it == vlab.end())
                reference_fail(ctx, "unknown vertex \"" + ref.get<std::string>() + "\"");
            return static_cast<int>(it - vlab.begin());
        }
        schema_fail(ctx, "vertex reference must be an index or a label");
    };

    std::vector<std::string> elab;
    std::vector<int> src, rng;
    std::vector<Rational> weight;
    int autoid = 0;
    for (const auto& e : es) {
        const std::string ctx = where + "/edges[" + std::to_string(autoid) + "]";
        if (!e.is_object()) schema_fail(ctx, "edge must be an object");
        elab.push_back(e.contains("id") ? e.at("id").get<std::string>()
                                        : "e" + std::to_string(autoid));
        src.push_back(vertex_index(need(e, "src", ctx), ctx));
        rng.push_back(vertex_index(need(e, "rng", ctx), ctx));
        if (e.contains("weight")) {
            const Json& w = e.at("weight");
            if (!w.is_string()) schema_fail(ctx, "weights are exact fraction strings");
            try {
                weight.push_back(parse_rational(w.get<std::string>()));
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ctx + ": " + ex.what());
            }
        } else {
            weight.emplace_back(1);
        }
        ++autoid;
    }
    bool strict = j.contains("strict") ? j.at("strict").get<bool>() : default_strict;

    QuiverPtr q;
    try {
        q = make_quiver(std::move(vlab), std::move(elab), std::move(src), std::move(rng),
                        std::move(weight), strict);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(where + ": " + e.what());
    }
    auto report = validate_quiver(*q);
    if (!report.ok())
        throw ValidationError(where + ": " + report.violations.front().detail);
    return q;
}

Json quiver_to_json(const FiniteQuiver& q) {
    Json j;
    j["vertices"] = q.vertex_labels;
    Json edges = Json::array();
    for (int e = 0; e < q.num_edges(); ++e) {
        Json je;
        je["id"] = q.edge_labels[e];
        je["src"] = q.vertex_labels[q.src[e]];
        je["rng"] = q.vertex_labels[q.rng[e]];
        je["weight"] = rational_to_string(q.weight[e]);
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    j["strict"] = q.strict;
    return j;
}

Json group_to_cayley_json(const FiniteGroup& g) {
    Json j;
    j["kind"] = "cayley";
    j["labels"] = g.labels;
    Json table = Json::array();
    for (int a = 0; a < g.order; ++a) {
        Json row = Json::array();
        for (int b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

Json action_to_json(const QuiverAction& act, const std::string& group_name,
                    const std::string& quiver_name) {
    Json j;
    j["group"] = group_name;
    j["quiver"] = quiver_name;
    Json vperm = Json::object(), eperm = Json::object();
    for (int t = 0; t < act.group->order; ++t) {
        vperm[act.group->label(t)] = act.vperm[t];
        eperm[act.group->label(t)] = act.eperm[t];
    }
    j["vertex_perm"] = std::move(vperm);
    j["edge_perm"] = std::move(eperm);
    return j;
}

Json morphism_to_json(const QuiverMorphism& m, const FiniteQuiver& from, const FiniteQuiver& to) {
    Json j;
    Json vmap = Json::object(), emap = Json::object();
    for (std::size_t v = 0; v < m.vmap.size(); ++v)
        vmap[from.vertex_labels[v]] = to.vertex_labels[m.vmap[v]];
    for (std::size_t e = 0; e < m.emap.size(); ++e)
        emap[from.edge_labels[e]] = to.edge_labels[m.emap[e]];
    j["vertex_map"] = std::move(vmap);
    j["edge_map"] = std::move(emap);
    j["is_iso"] = m.is_iso;
    if (m.is_equivariant) j["is_equivariant"] = true;
    return j;
}

namespace {

Subgroup subgroup_from_json(const Json& spec, const Workspace& ws, const std::string& where,
                            std::string* group_name) {
    GroupPtr g = resolve_group_ref(need(spec, "group", where), ws, where, group_name);
    try {
        if (spec.contains("elements")) {
            std::vector<int> elems;
            for (const auto& ref : spec.at("elements"))
                elems.push_back(resolve_element(*g, ref, where));
            return make_subgroup(g, std::move(elems));
        }
        if (spec.contains("generators")) {
            std::vector<int> gens;
            for (const auto& ref : spec.at("generators"))
                gens.push_back(resolve_element(*g, ref, where));
            return generated_subgroup(g, gens);
        }
    } catch (const std::invalid_argument& e) {
        throw ValidationError(where + ": " + e.what());
    }
    schema_fail(where, "subgroup needs \"elements\" or \"generators\"");
}

GroupHom hom_from_json(const Json& spec, const Workspace& ws, const std::string& where,
                       std::string* dom_name, std::string* cod_name) {
    GroupPtr dom = resolve_group_ref(need(spec, "domain", where), ws, where, dom_name);
    GroupPtr cod = resolve_group_ref(need(spec, "codomain", where), ws, where, cod_name);
    try {
        if (spec.contains("power")) {
            if (!(dom == cod || *dom == *cod))
                schema_fail(where, "\"power\" needs matching domain and codomain");
            return power_endomorphism(dom, spec.at("power").get<long long>());
        }
        const Json& map = need(spec, "map", where);
        if (!map.is_array() || static_cast<int>(map.size()) != dom->order)
            schema_fail(where, "hom map must list one codomain element per domain element");
        std::vector<int> images;
        for (const auto& ref : map) images.push_back(resolve_element(*cod, ref, where));
        return make_hom(dom, cod, std::move(images));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

std::vector<std::pair<int, std::vector<int>>> perm_table_from_json(const Json& spec,
                                                                   const FiniteGroup& g, int n,
                                                                   const std::string& where) {
    if (!spec.is_object()) schema_fail(where, "permutation table must be an object");
    std::vector<std::pair<int, std::vector<int>>> out;
    for (const auto& [key, val] : spec.items()) {
        int t = g.index_of_label(key);
        if (t < 0) reference_fail(where, "no group element labelled \"" + key + "\"");
        if (!val.is_array() || static_cast<int>(val.size()) != n)
            schema_fail(where, "permutation for \"" + key + "\" has wrong length");
        std::vector<int> perm;
        for (const auto& v : val) {
            if (!v.is_number_integer())
                schema_fail(where, "permutations are arrays of integer indices");
            perm.push_back(v.get<int>());
        }
        out.emplace_back(t, std::move(perm));
    }
    return out;
}

QuiverAction action_from_json(const Json& spec, const Workspace& ws, const std::string& where,
                              std::string* group_name, std::string* quiver_name) {
    const std::string gname = need_string(spec, "group", where);
    const std::string qname = need_string(spec, "quiver", where);
    auto git = ws.groups.find(gname);
    if (git == ws.groups.end()) reference_fail(where, "unknown group \"" + gname + "\"");
    auto qit = ws.quivers.find(qname);
    if (qit == ws.quivers.end()) reference_fail(where, "unknown quiver \"" + qname + "\"");
    if (group_name) *group_name = gname;
    if (quiver_name) *quiver_name = qname;

    GroupPtr g = git->second.group;
    QuiverPtr q = qit->second.quiver;
    auto vperms = perm_table_from_json(need(spec, "vertex_perm", where), *g, q->num_vertices(),
                                       where + "/vertex_perm");
    auto eperms = perm_table_from_json(need(spec, "edge_perm", where), *g, q->num_edges(),
                                       where + "/edge_perm");
    QuiverAction act;
    try {
        act = complete_action(g, q, vperms, eperms);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(where + ": " + e.what());
    }
    auto report = validate_action(act);
    if (!report.ok())
        throw ValidationError(where + ": invalid action: " + report.violations.front().detail);
    return act;
}

PrincipalBundleData bundle_from_json(const Json& spec, const Workspace& ws,
                                     const std::string& where, std::string* group_name,
                                     std::string* base_name) {
    const std::string gname = need_string(spec, "group", where);
    const std::string bname = need_string(spec, "base", where);
    auto git = ws.groups.find(gname);
    if (git == ws.groups.end()) reference_fail(where, "unknown group \"" + gname + "\"");
    auto qit = ws.quivers.find(bname);
    if (qit == ws.quivers.end()) reference_fail(where, "unknown quiver \"" + bname + "\"");
    if (group_name) *group_name = gname;
    if (base_name) *base_name = bname;

    GroupPtr g = git->second.group;
    QuiverPtr base = qit->second.quiver;

    PrincipalBundleData b;
    b.group = g;
    for (const auto& l : need(spec, "total", where)) {
        if (!l.is_string()) schema_fail(where, "total space labels must be strings");
        b.total_labels.push_back(l.get<std::string>());
    }
    const int np = b.total_size();
    auto point_index = [&](const Json& ref, const std::string& ctx) -> int {
        if (ref.is_number_integer()) {
            int idx = ref.get<int>();
            if (idx < 0 || idx >= np) reference_fail(ctx, "point index out of range");
            return idx;
        }
        if (ref.is_string()) {
            auto it = std::find(b.total_labels.begin(), b.total_labels.end(),
                                ref.get<std::string>());
            if (it == b.total_labels.end())
                reference_fail(ctx, "unknown point \"" + ref.get<std::string>() + "\"");
            return static_cast<int>(it - b.total_labels.begin());
        }
        schema_fail(ctx, "point reference must be an index or a label");
    };
    auto edge_index = [&](const Json& ref, const std::string& ctx) -> int {
        if (ref.is_number_integer()) {
            int idx = ref.get<int>();
            if (idx < 0 || idx >= base->num_edges())
                reference_fail(ctx, "edge index out of range");
            return idx;
        }
        if (ref.is_string()) {
            int idx = base->edge_index(ref.get<std::string>());
            if (idx < 0) reference_fail(ctx, "unknown edge \"" + ref.get<std::string>() + "\"");
            return idx;
        }
        schema_fail(ctx, "edge reference must be an index or a label");
    };

    {
        const Json& proj = need(spec, "proj", where);
        if (!proj.is_object()) schema_fail(where, "proj must map point labels to base vertices");
        b.proj.assign(np, -1);
        for (const auto& [key, val] : proj.items()) {
            Json keyref = key;
            int p = point_index(keyref, where + "/proj");
            int v;
            if (val.is_number_integer()) {
                v = val.get<int>();
                if (v < 0 || v >= base->num_vertices())
                    reference_fail(where + "/proj", "vertex index out of range");
            } else if (val.is_string()) {
                v = base->vertex_index(val.get<std::string>());
                if (v < 0)
                    reference_fail(where + "/proj",
                                   "unknown vertex \"" + val.get<std::string>() + "\"");
            } else {
                schema_fail(where + "/proj", "projection values are vertex references");
            }
            b.proj[p] = v;
        }
        for (int p = 0; p < np; ++p)
            if (b.proj[p] < 0)
                schema_fail(where + "/proj", "no projection for point " + b.total_labels[p]);
    }

    {
        auto given = perm_table_from_json(need(spec, "action", where), *g, np, where + "/action");
        // complete through a carrier quiver with no edges
        auto carrier = make_quiver(b.total_labels, {}, {}, {}, {}, false);
        std::vector<std::pair<int, std::vector<int>>> eperms;
        for (const auto& [t, perm] : given) eperms.emplace_back(t, std::vector<int>{});
        QuiverAction act;
        try {
            act = complete_action(g, carrier, given, eperms);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(where + "/action: " + e.what());
        }
        b.action = act.vperm;
    }

    const Json& theta = need(spec, "theta", where);
    if (!theta.is_array()) schema_fail(where, "theta must be an array of pair-of-pairs");
    for (const auto& entry : theta) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() ||
            entry[0].size() != 2 || !entry[1].is_array() || entry[1].size() != 2)
            schema_fail(where + "/theta", "each entry is [[edge,point],[edge,point]]");
        b.theta.push_back({{edge_index(entry[0][0], where + "/theta"),
                            point_index(entry[0][1], where + "/theta")},
                           {edge_index(entry[1][0], where + "/theta"),
                            point_index(entry[1][1], where + "/theta")}});
    }

    auto violations = validate_bundle(*base, b);
    if (!violations.empty())
        throw ValidationError(where + ": invalid bundle: " + violations.front().detail);
    return b;
}

const std::set<std::string>& known_ops() {
    static const std::set<std::string> ops{"skew",         "coset",    "coset_action",
                                           "double_coset", "relation", "relation_action",
                                           "bundle",       "classify", "semidirect_skew"};
    return ops;
}

}  // namespace

Workspace parse_document(const std::string& text, const std::string& filename,
                         bool default_strict) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte ? e.byte - 1 : 0);
        throw ParseError(filename + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": " + e.what());
    }
    if (!doc.is_object()) throw SchemaError(filename + ": document must be a JSON object");
    if (doc.contains("schema") && doc.at("schema") != "quiverkit/1")
        throw SchemaError(filename + ": unsupported schema (want \"quiverkit/1\")");

    static const std::set<std::string> sections{"schema",  "groups",  "subgroups",
                                                "homs",    "quivers", "actions",
                                                "bundles", "constructions"};
    for (const auto& [key, val] : doc.items())
        if (!sections.count(key))
            throw SchemaError(filename + ": unknown top-level section \"" + key + "\"");

    Workspace ws;
    ws.default_strict = default_strict;
    ws.source_file = filename;

    auto section = [&](const char* name) -> Json {
        if (!doc.contains(name)) return Json::object();
        const Json& s = doc.at(name);
        if (!s.is_object())
            throw SchemaError(filename + ": section \"" + name + "\" must be an object");
        return s;
    };

    const Json groups = section("groups");
    {
        // group specs may reference one another (e.g. semidirect parts), and
        // emitted documents are name-sorted, so resolve to a fixpoint
        std::vector<std::string> pending;
        for (const auto& [name, spec] : groups.items()) pending.push_back(name);
        bool progress = true;
        std::string last_error;
        while (!pending.empty() && progress) {
            progress = false;
            std::vector<std::string> still;
            for (const auto& name : pending) {
                const std::string where = "/groups/" + name;
                try {
                    ws.groups[name] =
                        {group_from_json(groups.at(name), ws, where), groups.at(name),
                         {filename, where}};
                    progress = true;
                } catch (const ReferenceError& e) {
                    last_error = e.what();
                    still.push_back(name);
                }
            }
            pending = std::move(still);
        }
        if (!pending.empty()) throw ReferenceError(last_error);
    }
    const Json subgroups = section("subgroups");
    for (const auto& [name, spec] : subgroups.items()) {
        const std::string where = "/subgroups/" + name;
        std::string gname;
        auto sub = subgroup_from_json(spec, ws, where, &gname);
        ws.subgroups[name] = {std::move(sub), gname, spec, {filename, where}};
    }
    const Json homs = section("homs");
    for (const auto& [name, spec] : homs.items()) {
        const std::string where = "/homs/" + name;
        std::string dom, cod;
        auto hom = hom_from_json(spec, ws, where, &dom, &cod);
        ws.homs[name] = {std::move(hom), dom, cod, spec, {filename, where}};
    }
    const Json quivers = section("quivers");
    for (const auto& [name, spec] : quivers.items()) {
        const std::string where = "/quivers/" + name;
        auto q = quiver_from_json(spec, default_strict, where);
        Json stored = spec;
        stored["strict"] = q->strict;  // emitted documents are mode-independent
        ws.quivers[name] = {std::move(q), std::move(stored), {filename, where}};
    }
    const Json actions = section("actions");
    for (const auto& [name, spec] : actions.items()) {
        const std::string where = "/actions/" + name;
        std::string gname, qname;
        auto act = action_from_json(spec, ws, where, &gname, &qname);
        ws.actions[name] = {std::move(act), gname, qname, spec, {filename, where}};
    }
    const Json bundles = section("bundles");
    for (const auto& [name, spec] : bundles.items()) {
        const std::string where = "/bundles/" + name;
        std::string gname, bname;
        auto b = bundle_from_json(spec, ws, where, &gname, &bname);
        ws.bundles[name] = {std::move(b), gname, bname, spec, {filename, where}};
    }
    const Json constructions = section("constructions");
    for (const auto& [name, spec] : constructions.items()) {
        const std::string where = "/constructions/" + name;
        if (!spec.is_object()) throw SchemaError(where + ": construction must be an object");
        const std::string op = need_string(spec, "op", where);
        if (!known_ops().count(op)) throw SchemaError(where + ": unknown op \"" + op + "\"");
        ws.constructions[name] = {spec, {filename, where}};
    }
    return ws;
}

Json emit_document(const Workspace& ws) {
    Json doc;
    doc["schema"] = "quiverkit/1";
    auto emit_section = [&](const char* name, const auto& map) {
        if (map.empty()) return;
        Json s = Json::object();
        for (const auto& [key, val] : map) s[key] = val.spec;
        doc[name] = std::move(s);
    };
    emit_section("groups", ws.groups);
    emit_section("subgroups", ws.subgroups);
    emit_section("homs", ws.homs);
    emit_section("quivers", ws.quivers);
    emit_section("actions", ws.actions);
    emit_section("bundles", ws.bundles);
    emit_section("constructions", ws.constructions);
    return doc;
}

}  // namespace quiverkit
