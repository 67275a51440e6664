#pragma once

#include "quiverkit/group.hpp"
#include "quiverkit/quiver.hpp"

namespace quiverkit {

// Right action of a finite group on a quiver, as permutation tables per group
// element: vperm[g][v] = v·g, eperm[g][e] = e·g. The right-action convention
// means vperm[gh] = vperm[h] ∘ vperm[g].
struct QuiverAction {
    GroupPtr group;
    QuiverPtr quiver;
    std::vector<std::vector<int>> vperm;
    std::vector<std::vector<int>> eperm;
};

struct ActionViolation {
    std::string kind;  // "shape" | "not_permutation" | "identity" | "homomorphism"
                       // | "src_equivariance" | "rng_equivariance" | "weight_invariance"
    int g = -1, h = -1, vertex = -1, edge = -1;
    std::string detail;
};

struct ActionReport {
    std::vector<ActionViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Diagnoses the permutation-representation laws, equivariance of src/rng and
// weight invariance (the finite form of measure invariance: weights constant
// along edge orbits), each with a witnessing (g, e) or (g, v).
ActionReport validate_action(const QuiverAction& act);

struct FreenessReport {
    bool vertex_free = true;
    bool edge_free = true;
    int vertex_witness_g = -1, vertex_witness = -1;  // fixed point when not free
    int edge_witness_g = -1, edge_witness = -1;
};

FreenessReport is_free(const QuiverAction& act);

struct OrbitPartition {
    std::vector<std::vector<int>> vertex_orbits;  // sorted members, ordered by minimum
    std::vector<std::vector<int>> edge_orbits;
    std::vector<int> vertex_orbit_of;
    std::vector<int> edge_orbit_of;
};

OrbitPartition orbits(const QuiverAction& act);

struct QuotientResult {
    QuiverPtr quotient;
    std::vector<int> q0;  // vertex -> orbit class
    std::vector<int> q1;  // edge -> orbit class
};

// Quotient on orbit sets. The class weight is computed at the minimal-index
// representative of the source orbit and re-verified at every other
// representative; a mismatch (impossible for validated actions) throws.
QuotientResult quotient_quiver(const QuiverAction& act);

struct ComponentOrbits {
    ComponentDecomposition decomposition;
    std::vector<std::vector<int>> comp_perm;  // [g][component]
    std::vector<std::vector<int>> orbits;     // ordered by minimal component
    std::vector<int> orbit_of;
    int orbit_count() const { return static_cast<int>(orbits.size()); }
};

ComponentOrbits component_orbits(const QuiverAction& act);

// Trivial action of any group on any quiver.
QuiverAction trivial_action(GroupPtr group, QuiverPtr quiver);

// Completes permutations given for a subset of elements (by closing under the
// Cayley table) and checks consistency; throws when the given elements do not
// generate the group or the data disagrees on some product.
QuiverAction complete_action(GroupPtr group, QuiverPtr quiver,
                             const std::vector<std::pair<int, std::vector<int>>>& vperms,
                             const std::vector<std::pair<int, std::vector<int>>>& eperms);

// m intertwines the two actions along the group correspondence gmap
// (element i of a.group acts as element gmap[i] of b.group):
// m ∘ (·g) = (·gmap[g]) ∘ m on vertices and edges.
bool morphism_equivariant(const QuiverMorphism& m, const QuiverAction& a, const QuiverAction& b,
                          const std::vector<int>& gmap);
bool morphism_equivariant(const QuiverMorphism& m, const QuiverAction& a, const QuiverAction& b);

}  // namespace quiverkit
