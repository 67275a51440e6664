#pragma once

#include "quiverkit/action.hpp"
#include "quiverkit/constructions.hpp"
#include "quiverkit/group.hpp"
#include "quiverkit/quiver.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace quiverkit {

using Json = nlohmann::ordered_json;

// Exit-code contract: 1 for any of the input errors below, 2 for property
// failures (reported via command results, not exceptions), 3 for internal
// consistency errors (std::logic_error).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};
struct ReferenceError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};

struct Provenance {
    std::string file;
    std::string path;  // JSON pointer, e.g. /groups/G
};

struct WorkspaceGroup {
    GroupPtr group;
    Json spec;
    Provenance where;
};
struct WorkspaceSubgroup {
    Subgroup subgroup;
    std::string group_name;
    Json spec;
    Provenance where;
};
struct WorkspaceHom {
    GroupHom hom;
    std::string domain_name, codomain_name;
    Json spec;
    Provenance where;
};
struct WorkspaceQuiver {
    QuiverPtr quiver;
    Json spec;
    Provenance where;
};
struct WorkspaceAction {
    QuiverAction action;
    std::string group_name, quiver_name;
    Json spec;
    Provenance where;
};
struct WorkspaceBundle {
    PrincipalBundleData bundle;
    std::string group_name, base_name;
    Json spec;
    Provenance where;
};
struct WorkspaceConstruction {
    Json spec;
    Provenance where;
};

// Named objects from one document; all cross-references resolved and every
// embedded object validated at parse time.
struct Workspace {
    std::map<std::string, WorkspaceGroup> groups;
    std::map<std::string, WorkspaceSubgroup> subgroups;
    std::map<std::string, WorkspaceHom> homs;
    std::map<std::string, WorkspaceQuiver> quivers;
    std::map<std::string, WorkspaceAction> actions;
    std::map<std::string, WorkspaceBundle> bundles;
    std::map<std::string, WorkspaceConstruction> constructions;
    bool default_strict = true;
    std::string source_file;
};

Workspace parse_document(const std::string& text, const std::string& filename = "<input>",
                         bool default_strict = true);
Json emit_document(const Workspace& ws);

// element reference: integer index or label string
int resolve_element(const FiniteGroup& g, const Json& ref, const std::string& where);

// H-action on N for semidirect data: an object of automorphism arrays keyed
// by H-element label (generators suffice), or "trivial" / "inversion".
std::vector<std::vector<int>> h_action_from_json(const Json& spec, const FiniteGroup& n,
                                                 const FiniteGroup& h,
                                                 const std::string& where);

Json quiver_to_json(const FiniteQuiver& q);
QuiverPtr quiver_from_json(const Json& j, bool default_strict, const std::string& where);
Json group_to_cayley_json(const FiniteGroup& g);
Json action_to_json(const QuiverAction& act, const std::string& group_name,
                    const std::string& quiver_name);
Json morphism_to_json(const QuiverMorphism& m, const FiniteQuiver& from, const FiniteQuiver& to);

}  // namespace quiverkit
