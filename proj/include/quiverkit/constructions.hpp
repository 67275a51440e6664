#pragma once

#include "quiverkit/action.hpp"
#include "quiverkit/group.hpp"
#include "quiverkit/quiver.hpp"

namespace quiverkit {

// Edge labelling by group elements; any total map qualifies.
struct Cocycle {
    QuiverPtr quiver;
    GroupPtr group;
    std::vector<int> values;  // group element per edge
};

Cocycle identity_cocycle(QuiverPtr quiver, GroupPtr group);

struct SkewProductResult {
    QuiverPtr quiver;      // vertices E0 × G, edges E1 × G
    QuiverAction action;   // canonical free right translation on the G slot
};

// Vertices (v,g) and edges (e,g) with s(e,g) = (s(e),g),
// r(e,g) = (r(e), κ(e)·g), weight(e,g) = weight(e).
SkewProductResult skew_product(QuiverPtr q, GroupPtr g, const Cocycle& kappa);

struct CosetQuiverResult {
    QuiverPtr quiver;                   // vertices N\G, edges G
    CosetPartition cosets;              // right cosets, vertex i = cosets.cosets[i]
};

// src(g) = Ng, rng(g) = Nφ(g), weight ≡ 1; φ is an arbitrary total self-map.
CosetQuiverResult coset_quiver(const Subgroup& n, const ElementMap& phi);

enum class TranslationSide { right, left };

struct CosetActionResult {
    CosetQuiverResult base;
    SubgroupAsGroup acting;   // H as an abstract group
    QuiverAction action;
};

// side == right: edges g·h, vertices Ng·h = Ngh; requires Ng ∩ gH = {g} for
// all g and φ(gh) = φ(g)h (both verified, witnesses reported on failure).
// side == left: the symmetric variant h·g encoded as the right action
// g·h := h⁻¹g; requires H ≤ normalizer(N), N ∩ H = {e} and φ(hg) = hφ(g).
CosetActionResult coset_action(const Subgroup& n, const ElementMap& phi, const Subgroup& h,
                               TranslationSide side = TranslationSide::right);

struct DoubleCosetResult {
    QuiverPtr quotient;               // vertices N\G/H, edges G/H, built directly
    DoubleCosetPartition vertex_classes;
    CosetPartition edge_cosets;       // left cosets gH
    QuotientResult generic;           // quotient of the coset quiver by the H-action
    QuiverMorphism from_generic;      // verified isomorphism generic → explicit
};

DoubleCosetResult double_coset_quotient(const Subgroup& n, const ElementMap& phi,
                                        const Subgroup& h);

struct RelationQuiverResult {
    QuiverPtr quiver;                        // vertices G, edges {(g,h) : α(g)=β(h)}
    std::vector<std::pair<int, int>> pairs;  // the (g,h) behind each edge index
    std::vector<int> empty_fiber_vertices;   // vertices with α(v) outside β(G)
};

// Strict when α(G) ⊆ β(G); otherwise built relaxed with the zero-fiber
// vertices recorded.
RelationQuiverResult relation_quiver(const GroupHom& alpha, const GroupHom& beta);

struct RelationActionResult {
    RelationQuiverResult base;
    Subgroup equalizer;       // A = {g : α(g) = β(g)}
    SubgroupAsGroup acting;
    QuiverAction action;      // diagonal right translation, free
};

RelationActionResult relation_action(const GroupHom& alpha, const GroupHom& beta);

// Free G-set P with projection to the base vertex set and a pullback
// isomorphism θ : s*(P) → r*(P) given as explicit (edge, point) pairs.
struct PrincipalBundleData {
    GroupPtr group;
    std::vector<std::string> total_labels;
    std::vector<std::vector<int>> action;  // [g][p] = p·g
    std::vector<int> proj;                 // p -> base vertex index
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> theta;

    int total_size() const { return static_cast<int>(total_labels.size()); }
};

struct BundleViolation {
    std::string kind;
    std::string detail;
};

// All bundle axioms with witnesses: free action, projection constant on
// orbits inducing a bijection P/G → base, θ a base-fixing G-equivariant
// bijection s*(P) → r*(P).
std::vector<BundleViolation> validate_bundle(const FiniteQuiver& base,
                                             const PrincipalBundleData& b);

struct BundleQuiverResult {
    QuiverPtr quiver;                           // vertices P, edges s*(P)
    std::vector<std::pair<int, int>> pairs;     // edge index -> (base edge, point)
    QuiverAction action;                        // (e,p)·g = (e, p·g), free
    QuiverMorphism projection;                  // onto the base quiver
};

// The quiver classified by (base, bundle): s̃ = π₂, r̃ = π₂∘θ,
// weight(e,p) = weight(e). Throws std::invalid_argument when the bundle data
// fails validation.
BundleQuiverResult bundle_quiver(QuiverPtr base, const PrincipalBundleData& b);

// P = F⁰ × G with (v,t)·g = (v, tg) and θ(e, (s(e),t)) = (e, (r(e), κ(e)·t)).
PrincipalBundleData trivial_bundle(const FiniteQuiver& base, GroupPtr g, const Cocycle& kappa);

struct ClassificationResult {
    QuotientResult quotient;      // the base F = Q/G
    PrincipalBundleData bundle;   // P = E⁰ with θ = iso_r ∘ iso_s⁻¹
    BundleQuiverResult rebuilt;   // bundle_quiver(F, bundle)
    QuiverMorphism witness;       // equivariant isomorphism original → rebuilt
};

// Requires a validated vertex-free action; throws otherwise.
ClassificationResult classify_action(const QuiverAction& act);

struct SemidirectSkewReport {
    SemidirectProduct product;        // G = N ⋊ H
    CosetActionResult coset_side;     // Q over N < G with φ(nh) = c(n)h and its H-action
    SkewProductResult skew_side;      // (single-vertex quiver on N) ×_c H
    QuiverMorphism psi;               // ψ = (ψ¹, ψ⁰): skew → coset, ψ¹(n,h) = nh
    bool intertwines = false;
    bool weight_preserving = false;
    bool equivariant = false;
    bool verified() const { return intertwines && weight_preserving && equivariant; }
};

// c : N → H (element map into H); hact is the H-action on N defining the
// semidirect product.
SemidirectSkewReport semidirect_skew_check(GroupPtr n, GroupPtr h,
                                           const std::vector<std::vector<int>>& hact,
                                           const std::vector<int>& c);

}  // namespace quiverkit
