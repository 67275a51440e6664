#pragma once

#include "quiverkit/action.hpp"
#include "quiverkit/quiver.hpp"
#include "quiverkit/rational.hpp"

#include <string>
#include <vector>

namespace quiverkit {

struct AdjacencyMatrix {
    // counts[v][w] = number of edges with rng = v and src = w
    std::vector<std::vector<long long>> counts;
    // weighted[v][w] = total weight of those edges
    std::vector<std::vector<Rational>> weighted;
};

AdjacencyMatrix adjacency_matrix(const FiniteQuiver& q);

// Vertices receiving at least one edge; exactly the vertices that carry a
// range relation in the presentation.
std::vector<int> regular_vertices(const FiniteQuiver& q);

struct SourceRelation {
    int edge;    // s_e* s_e = p_{src(e)}
    int vertex;
};

struct RangeRelation {
    int vertex;              // p_v = sum over edges with rng = v of s_e s_e*
    std::vector<int> edges;  // ascending
};

struct AlgebraPresentation {
    std::vector<std::string> projections;  // one per vertex, "p(<label>)"
    std::vector<std::string> isometries;   // one per edge, "s(<label>)"
    std::vector<int> regular;
    std::vector<SourceRelation> source_relations;  // one per edge
    std::vector<RangeRelation> range_relations;    // one per regular vertex
    std::vector<std::string> weight_notes;         // rescaling notes for weights != 1
};

AlgebraPresentation ck_presentation(const FiniteQuiver& q);
std::string presentation_text(const AlgebraPresentation& p);

struct GeneratorAction {
    // per group element: where each projection / isometry generator goes
    std::vector<std::vector<int>> projection_perm;
    std::vector<std::vector<int>> isometry_perm;
    bool relations_preserved = false;
};

GeneratorAction induced_generator_action(const FiniteQuiver& q, const QuiverAction& act);

using IntMatrix = std::vector<std::vector<Int>>;

struct SmithResult {
    IntMatrix s;  // rows x rows, unimodular
    IntMatrix d;  // diagonal, nonnegative, divisibility chain
    IntMatrix t;  // cols x cols, unimodular
};

// Exact integer Smith normal form: s * m * t = d with |det s| = |det t| = 1.
SmithResult smith_normal_form(const IntMatrix& m);

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);
Int matrix_determinant(IntMatrix m);  // fraction-free elimination

struct KTheoryResult {
    long long k0_free_rank = 0;
    std::vector<Int> k0_torsion;  // invariant factors > 1, divisibility chain
    long long k1_free_rank = 0;

    friend bool operator==(const KTheoryResult&, const KTheoryResult&) = default;
};

// K-groups of the vertex-matrix map sending, for each regular v,
// δ_v ↦ δ_v − Σ_w counts[v][w] δ_w into the free abelian group on all
// vertices: K₀ its cokernel, K₁ its kernel.
KTheoryResult k_theory(const FiniteQuiver& q);

}  // namespace quiverkit
