#pragma once

#include "quiverkit/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace quiverkit {

// Finite weighted directed multigraph: vertex and edge sets with labels,
// source/range maps and a strictly positive rational weight per edge (the
// mass the source fiber system assigns to that edge). strict mode demands
// every vertex emit at least one edge; relaxed mode permits fiberless
// vertices and merely records them.
struct FiniteQuiver {
    std::vector<std::string> vertex_labels;
    std::vector<std::string> edge_labels;
    std::vector<int> src;
    std::vector<int> rng;
    std::vector<Rational> weight;
    bool strict = true;

    int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
    int num_edges() const { return static_cast<int>(edge_labels.size()); }
    int vertex_index(const std::string& label) const;  // -1 when absent
    int edge_index(const std::string& label) const;

    friend bool operator==(const FiniteQuiver&, const FiniteQuiver&) = default;
};

using QuiverPtr = std::shared_ptr<const FiniteQuiver>;

// Structural well-formedness (sizes, index ranges, label uniqueness) is
// enforced here with exceptions; the measure-system axioms are diagnosed by
// validate_quiver instead.
QuiverPtr make_quiver(std::vector<std::string> vertex_labels,
                      std::vector<std::string> edge_labels, std::vector<int> src,
                      std::vector<int> rng, std::vector<Rational> weight, bool strict = true);

struct QuiverViolation {
    std::string kind;  // "nonpositive_weight" | "fiberless_vertex"
    int edge = -1;
    int vertex = -1;
    std::string detail;
};

struct QuiverReport {
    std::vector<QuiverViolation> violations;
    std::vector<int> fiberless_vertices;  // recorded in relaxed mode too
    bool ok() const { return violations.empty(); }
};

QuiverReport validate_quiver(const FiniteQuiver& q);
QuiverReport validate_quiver(const FiniteQuiver& q, bool strict);

struct QuiverMorphism {
    std::vector<int> vmap;
    std::vector<int> emap;
    bool is_iso = false;
    bool is_equivariant = false;
};

// Intertwining check: rng∘emap = vmap∘rng and src∘emap = vmap∘src.
bool is_quiver_morphism(const FiniteQuiver& a, const FiniteQuiver& b, const QuiverMorphism& m);
// Additionally: both maps bijective and weights preserved pointwise.
bool is_quiver_isomorphism(const FiniteQuiver& a, const FiniteQuiver& b, const QuiverMorphism& m);
QuiverMorphism invert_isomorphism(const QuiverMorphism& m);

// Deterministic backtracking search. Vertices are keyed by
// (out-degree, in-degree, outgoing weight multiset, incoming weight multiset)
// signatures; candidates and ties are taken in ascending index order, so the
// returned morphism is reproducible. Edge images inside a parallel class are
// paired by (weight, index).
std::optional<QuiverMorphism> quiver_isomorphic(const FiniteQuiver& a, const FiniteQuiver& b);

struct ComponentDecomposition {
    std::vector<FiniteQuiver> components;            // induced sub-quivers
    std::vector<int> vertex_component;
    std::vector<int> edge_component;
    std::vector<std::vector<int>> component_vertices;  // global indices, ascending
    std::vector<std::vector<int>> component_edges;
    int count() const { return static_cast<int>(components.size()); }
};

// Components of the underlying undirected graph, ordered by minimal vertex
// index.
ComponentDecomposition connected_components(const FiniteQuiver& q);

// The quiver with vertices and edges renamed along permutations: vertex i of
// the result is vertex vperm[i] of q (and likewise for edges).
QuiverPtr relabel_quiver(const FiniteQuiver& q, const std::vector<int>& vperm,
                         const std::vector<int>& eperm);

}  // namespace quiverkit
