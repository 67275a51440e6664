#include "quiverkit/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quiverkit {

AdjacencyMatrix adjacency_matrix(const FiniteQuiver& q) {
    const int nv = q.num_vertices();
    AdjacencyMatrix a;
    a.counts.assign(nv, std::vector<long long>(nv, 0));
    a.weighted.assign(nv, std::vector<Rational>(nv, Rational(0)));
    for (int e = 0; e < q.num_edges(); ++e) {
        a.counts[q.rng[e]][q.src[e]] += 1;
        a.weighted[q.rng[e]][q.src[e]] += q.weight[e];
    }
    return a;
}

std::vector<int> regular_vertices(const FiniteQuiver& q) {
    std::vector<bool> receives(q.num_vertices(), false);
    for (int e = 0; e < q.num_edges(); ++e) receives[q.rng[e]] = true;
    std::vector<int> out;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (receives[v]) out.push_back(v);
    return out;
}

AlgebraPresentation ck_presentation(const FiniteQuiver& q) {
    AlgebraPresentation p;
    for (const auto& l : q.vertex_labels) p.projections.push_back("p(" + l + ")");
    for (const auto& l : q.edge_labels) p.isometries.push_back("s(" + l + ")");
    p.regular = regular_vertices(q);
    for (int e = 0; e < q.num_edges(); ++e) p.source_relations.push_back({e, q.src[e]});
    for (int v : p.regular) {
        RangeRelation rel{v, {}};
        for (int e = 0; e < q.num_edges(); ++e)
            if (q.rng[e] == v) rel.edges.push_back(e);
        p.range_relations.push_back(std::move(rel));
    }
    for (int e = 0; e < q.num_edges(); ++e)
        if (q.weight[e] != 1)
            p.weight_notes.push_back("s(" + q.edge_labels[e] + "): weight " +
                                     rational_to_string(q.weight[e]) +
                                     "; rescale the generator by weight^(-1/2) to identify the"
                                     " weighted correspondence with the counting one");
    return p;
}

std::string presentation_text(const AlgebraPresentation& p) {
    std::string out;
    out += "projections:";
    for (const auto& s : p.projections) out += " " + s;
    out += "\nisometries:";
    for (const auto& s : p.isometries) out += " " + s;
    out += "\np(v) p(w) = 0 for v != w\n";
    for (const auto& r : p.source_relations)
        out += p.isometries[r.edge] + "* " + p.isometries[r.edge] + " = " +
               p.projections[r.vertex] + "\n";
    for (const auto& r : p.range_relations) {
        out += p.projections[r.vertex] + " =";
        bool first = true;
        for (int e : r.edges) {
            out += std::string(first ? " " : " + ") + p.isometries[e] + " " + p.isometries[e] + "*";
            first = false;
        }
        out += "\n";
    }
    for (const auto& n : p.weight_notes) out += "note: " + n + "\n";
    return out;
}

GeneratorAction induced_generator_action(const FiniteQuiver& q, const QuiverAction& act) {
    GeneratorAction out;
    out.projection_perm = act.vperm;
    out.isometry_perm = act.eperm;

    // the generator permutation must carry the relation set to itself
    AlgebraPresentation p = ck_presentation(q);
    std::set<int> regular(p.regular.begin(), p.regular.end());
    out.relations_preserved = true;
    for (int t = 0; t < act.group->order && out.relations_preserved; ++t) {
        for (const auto& r : p.source_relations)
            if (q.src[act.eperm[t][r.edge]] != act.vperm[t][r.vertex]) {
                out.relations_preserved = false;
                break;
            }
        for (const auto& r : p.range_relations) {
            int v2 = act.vperm[t][r.vertex];
            if (!regular.count(v2)) {
                out.relations_preserved = false;
                break;
            }
            std::set<int> image;
            for (int e : r.edges) image.insert(act.eperm[t][e]);
            std::set<int> target;
            for (int e = 0; e < q.num_edges(); ++e)
                if (q.rng[e] == v2) target.insert(e);
            if (image != target) {
                out.relations_preserved = false;
                break;
            }
        }
    }
    if (!out.relations_preserved)
        throw std::logic_error("generator action does not preserve the relation set; "
                               "the quiver action was not validated");
    return out;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

void swap_rows(IntMatrix& m, int a, int b) { std::swap(m[a], m[b]); }

void swap_cols(IntMatrix& m, int a, int b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

// row[a] += c * row[b]
void add_row(IntMatrix& m, int a, int b, const Int& c) {
    for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] += c * m[b][j];
}

// col[a] += c * col[b]
void add_col(IntMatrix& m, int a, int b, const Int& c) {
    for (auto& row : m) row[a] += c * row[b];
}

void negate_row(IntMatrix& m, int a) {
    for (auto& x : m[a]) x = -x;
}

IntMatrix identity_matrix(int n) {
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
    const int n = static_cast<int>(a.size());
    const int k = n ? static_cast<int>(a[0].size()) : 0;
    const int m = k ? static_cast<int>(b[0].size()) : (b.empty() ? 0 : static_cast<int>(b[0].size()));
    IntMatrix out(n, std::vector<Int>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int t = 0; t < k; ++t) out[i][j] += a[i][t] * b[t][j];
    return out;
}

Int matrix_determinant(IntMatrix m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    Int prev = 1;
    Int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

SmithResult smith_normal_form(const IntMatrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("smith_normal_form: ragged matrix");

    SmithResult out;
    out.d = m;
    out.s = identity_matrix(rows);
    out.t = identity_matrix(cols);
    IntMatrix& d = out.d;

    const int steps = std::min(rows, cols);
    for (int k = 0; k < steps; ++k) {
        // move a minimal-magnitude nonzero entry of the trailing block to (k,k)
        auto pick_pivot = [&]() {
            int bi = -1, bj = -1;
            for (int i = k; i < rows; ++i)
                for (int j = k; j < cols; ++j) {
                    if (d[i][j] == 0) continue;
                    if (bi < 0 || abs_int(d[i][j]) < abs_int(d[bi][bj])) {
                        bi = i;
                        bj = j;
                    }
                }
            return std::pair<int, int>{bi, bj};
        };
        auto [pi, pj] = pick_pivot();
        if (pi < 0) break;  // trailing block is zero
        if (pi != k) {
            swap_rows(d, k, pi);
            swap_rows(out.s, k, pi);
        }
        if (pj != k) {
            swap_cols(d, k, pj);
            swap_cols(out.t, k, pj);
        }

        for (;;) {
            bool clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (d[i][k] == 0) continue;
                Int quot = d[i][k] / d[k][k];
                add_row(d, i, k, -quot);
                add_row(out.s, i, k, -quot);
                if (d[i][k] != 0) {
                    // remainder became the smaller pivot
                    swap_rows(d, k, i);
                    swap_rows(out.s, k, i);
                    clean = false;
                }
            }
            for (int j = k + 1; j < cols; ++j) {
                if (d[k][j] == 0) continue;
                Int quot = d[k][j] / d[k][k];
                add_col(d, j, k, -quot);
                add_col(out.t, j, k, -quot);
                if (d[k][j] != 0) {
                    swap_cols(d, k, j);
                    swap_cols(out.t, k, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // enforce divisibility of the trailing block by the pivot
            bool divides = true;
            for (int i = k + 1; i < rows && divides; ++i)
                for (int j = k + 1; j < cols && divides; ++j)
                    if (d[i][j] % d[k][k] != 0) {
                        add_row(d, k, i, 1);
                        add_row(out.s, k, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }

        if (d[k][k] < 0) {
            negate_row(d, k);
            negate_row(out.s, k);
        }
    }
    return out;
}

KTheoryResult k_theory(const FiniteQuiver& q) {
    const int nv = q.num_vertices();
    const std::vector<int> reg = regular_vertices(q);
    AdjacencyMatrix adj = adjacency_matrix(q);

    // column per regular v: image of δ_v is δ_v − Σ_w counts[v][w] δ_w
    IntMatrix m(nv, std::vector<Int>(reg.size(), 0));
    for (std::size_t c = 0; c < reg.size(); ++c) {
        const int v = reg[c];
        for (int w = 0; w < nv; ++w) m[w][c] = (w == v ? 1 : 0) - Int(adj.counts[v][w]);
    }

    SmithResult snf = smith_normal_form(m);
    KTheoryResult out;
    long long rank = 0;
    const int steps = std::min<std::size_t>(nv, reg.size());
    for (int i = 0; i < steps; ++i) {
        const Int& di = snf.d[i][i];
        if (di == 0) continue;
        ++rank;
        if (di > 1) out.k0_torsion.push_back(di);
    }
    out.k0_free_rank = nv - rank;
    out.k1_free_rank = static_cast<long long>(reg.size()) - rank;
    return out;
}

}  // namespace quiverkit
