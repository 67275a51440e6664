#include "quiverkit/action.hpp"

#include "battery.hpp"
#include "doctest.h"

#include <numeric>
#include <random>

using namespace quiverkit;

namespace {

// two loops at one vertex, weights w0 and w1, swapped by the Z2 generator
QuiverAction z2_loop_swap(Rational w0, Rational w1) {
    auto q = make_quiver({"v"}, {"e0", "e1"}, {0, 0}, {0, 0}, {w0, w1}, true);
    QuiverAction act;
    act.group = cyclic_group(2);
    act.quiver = q;
    act.vperm = {{0}, {0}};
    act.eperm = {{0, 1}, {1, 0}};
    return act;
}

// orbit-constancy of weights, computed independently of validate_action's
// pairwise (g, e) walk
bool weights_constant_on_orbits(const QuiverAction& act) {
    auto parts = orbits(act);
    for (const auto& orb : parts.edge_orbits)
        for (int e : orb)
            if (act.quiver->weight[e] != act.quiver->weight[orb.front()]) return false;
    return true;
}

bool has_kind(const ActionReport& r, const std::string& kind) {
    for (const auto& v : r.violations)
        if (v.kind == kind) return true;
    return false;
}

}  // namespace

TEST_CASE("validate_action basics") {
    SUBCASE("trivial actions are valid") {
        std::mt19937 rng(31);
        auto q = battery::random_quiver(rng, 6, 10);
        for (auto g : {cyclic_group(1), cyclic_group(5), dihedral_group(3)})
            CHECK(validate_action(trivial_action(g, q)).ok());
    }
    SUBCASE("Z2 swapping equal-weight loops is valid") {
        CHECK(validate_action(z2_loop_swap(Rational(1), Rational(1))).ok());
    }
    SUBCASE("Z2 swapping loops of weights 1 and 2 violates measure invariance") {
        auto report = validate_action(z2_loop_swap(Rational(1), Rational(2)));
        CHECK(!report.ok());
        CHECK(has_kind(report, "weight_invariance"));
    }
    SUBCASE("broken equivariance is reported with a witness") {
        auto q = make_quiver({"v0", "v1"}, {"e0", "e1"}, {0, 1}, {1, 0},
                             {Rational(1), Rational(1)}, true);
        QuiverAction act;
        act.group = cyclic_group(2);
        act.quiver = q;
        act.vperm = {{0, 1}, {1, 0}};
        act.eperm = {{0, 1}, {0, 1}};  // should swap but does not
        auto report = validate_action(act);
        CHECK(!report.ok());
        CHECK((has_kind(report, "src_equivariance") || has_kind(report, "rng_equivariance")));
    }
    SUBCASE("non-permutation data is caught") {
        auto q = make_quiver({"v"}, {"e"}, {0}, {0}, {Rational(1)}, true);
        QuiverAction act;
        act.group = cyclic_group(3);
        act.quiver = q;
        act.vperm = {{0}, {0}, {0}};
        act.eperm = {{0}, {0}, {0}};
        act.vperm[1] = {1};  // out of range
        CHECK(has_kind(validate_action(act), "not_permutation"));
    }
}

TEST_CASE("measure-invariance verdict equals the orbit-constant-weight predicate") {
    std::mt19937 rng(37);
    auto groups = battery::groups_up_to_8();
    int agree_valid = 0, agree_broken = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto g = groups[trial % groups.size()];
        auto inst = battery::random_free_action(rng, g, 12, 24);

        if (trial % 2 == 1 && inst.quiver->num_edges() >= g->order && g->order > 1) {
            // perturb one edge weight inside a nontrivial orbit
            auto broken = *inst.quiver;
            broken.weight[0] += 1;
            inst.quiver = std::make_shared<FiniteQuiver>(std::move(broken));
            inst.action.quiver = inst.quiver;
        }

        auto report = validate_action(inst.action);
        bool measure_ok = true;
        for (const auto& v : report.violations)
            if (v.kind == "weight_invariance") measure_ok = false;
        CHECK(measure_ok == weights_constant_on_orbits(inst.action));
        (measure_ok ? agree_valid : agree_broken)++;
    }
    CHECK(agree_valid > 0);
    CHECK(agree_broken > 0);
}

TEST_CASE("freeness") {
    SUBCASE("trivial action of a nontrivial group is not free") {
        auto q = make_quiver({"v"}, {"e"}, {0}, {0}, {Rational(1)}, true);
        auto fr = is_free(trivial_action(cyclic_group(2), q));
        CHECK(!fr.vertex_free);
        CHECK(fr.vertex_witness_g > 0);
    }
    SUBCASE("vertex-free implies edge-free across the battery") {
        std::mt19937 rng(41);
        for (auto g : battery::groups_up_to_8())
            for (int trial = 0; trial < 8; ++trial) {
                auto inst = battery::random_free_action(rng, g, 12, 24);
                REQUIRE(validate_action(inst.action).ok());
                auto fr = is_free(inst.action);
                if (fr.vertex_free) CHECK(fr.edge_free);
            }
    }
    SUBCASE("coset translation actions are valid; non-free when K is proper") {
        std::mt19937 rng(43);
        auto g = dihedral_group(4);
        auto k = generated_subgroup(g, {g->index_of_label("a")});
        auto inst = battery::random_coset_translation_action(rng, g, k, 3);
        CHECK(validate_action(inst.action).ok());
        auto fr = is_free(inst.action);
        CHECK(!fr.vertex_free);
        CHECK(fr.edge_free);  // translates of distinct template copies never collide
    }
}

TEST_CASE("orbits") {
    std::mt19937 rng(47);
    SUBCASE("trivial action has singleton orbits") {
        auto q = battery::random_quiver(rng, 5, 8);
        auto parts = orbits(trivial_action(cyclic_group(3), q));
        CHECK(parts.vertex_orbits.size() == static_cast<std::size_t>(q->num_vertices()));
        CHECK(parts.edge_orbits.size() == static_cast<std::size_t>(q->num_edges()));
    }
    SUBCASE("free actions have orbits of size |G|") {
        for (auto g : battery::groups_up_to_8()) {
            auto inst = battery::random_free_action(rng, g, 12, 24);
            auto parts = orbits(inst.action);
            for (const auto& orb : parts.vertex_orbits)
                CHECK(orb.size() == static_cast<std::size_t>(g->order));
            for (const auto& orb : parts.edge_orbits)
                CHECK(orb.size() == static_cast<std::size_t>(g->order));
        }
    }
}

TEST_CASE("quotient quiver") {
    std::mt19937 rng(53);
    SUBCASE("trivial group quotient is isomorphic to the original") {
        auto q = battery::random_quiver(rng, 8, 14);
        auto res = quotient_quiver(trivial_action(cyclic_group(1), q));
        CHECK(quiver_isomorphic(*q, *res.quotient).has_value());
    }
    SUBCASE("projections intertwine source and range") {
        for (auto g : battery::groups_up_to_8()) {
            auto inst = battery::random_free_action(rng, g, 12, 24);
            auto res = quotient_quiver(inst.action);
            const auto& q = *inst.quiver;
            const auto& dot = *res.quotient;
            for (int e = 0; e < q.num_edges(); ++e) {
                CHECK(dot.src[res.q1[e]] == res.q0[q.src[e]]);
                CHECK(dot.rng[res.q1[e]] == res.q0[q.rng[e]]);
            }
            CHECK(validate_quiver(dot).ok());
        }
    }
    SUBCASE("total weight conservation for free actions") {
        for (auto g : battery::groups_up_to_8()) {
            auto inst = battery::random_free_action(rng, g, 12, 24);
            auto res = quotient_quiver(inst.action);
            Rational total = 0, qtotal = 0;
            for (const auto& w : inst.quiver->weight) total += w;
            for (const auto& w : res.quotient->weight) qtotal += w;
            CHECK(total == Rational(g->order) * qtotal);
        }
    }
    SUBCASE("class weights sum over the source fiber") {
        // both loops share the fixed vertex, so the class weight is a sum
        auto q = make_quiver({"v"}, {"e0", "e1"}, {0, 0}, {0, 0},
                             {Rational(3, 2), Rational(3, 2)}, true);
        QuiverAction act;
        act.group = cyclic_group(2);
        act.quiver = q;
        act.vperm = {{0}, {0}};
        act.eperm = {{0, 1}, {1, 0}};
        REQUIRE(validate_action(act).ok());
        auto res = quotient_quiver(act);
        CHECK(res.quotient->num_vertices() == 1);
        CHECK(res.quotient->num_edges() == 1);
        CHECK(res.quotient->weight[0] == Rational(3));
    }
    SUBCASE("functorial under relabeling and conjugation") {
        for (int trial = 0; trial < 10; ++trial) {
            auto g = battery::groups_up_to_8()[trial % battery::groups_up_to_8().size()];
            auto inst = battery::random_free_action(rng, g, 12, 24);
            std::vector<int> vp(inst.quiver->num_vertices()), ep(inst.quiver->num_edges());
            std::iota(vp.begin(), vp.end(), 0);
            std::iota(ep.begin(), ep.end(), 0);
            std::shuffle(vp.begin(), vp.end(), rng);
            std::shuffle(ep.begin(), ep.end(), rng);
            auto q2 = relabel_quiver(*inst.quiver, vp, ep);

            QuiverAction conj;
            conj.group = g;
            conj.quiver = q2;
            conj.vperm.assign(g->order, std::vector<int>(vp.size()));
            conj.eperm.assign(g->order, std::vector<int>(ep.size()));
            for (int t = 0; t < g->order; ++t) {
                for (std::size_t v = 0; v < vp.size(); ++v)
                    conj.vperm[t][vp[v]] = vp[inst.action.vperm[t][v]];
                for (std::size_t e = 0; e < ep.size(); ++e)
                    conj.eperm[t][ep[e]] = ep[inst.action.eperm[t][e]];
            }
            REQUIRE(validate_action(conj).ok());
            auto r1 = quotient_quiver(inst.action);
            auto r2 = quotient_quiver(conj);
            CHECK(quiver_isomorphic(*r1.quotient, *r2.quotient).has_value());
        }
    }
}

TEST_CASE("component orbits") {
    SUBCASE("connected quiver has one component and one orbit") {
        auto q = make_quiver({"v"}, {"e"}, {0}, {0}, {Rational(1)}, true);
        auto co = component_orbits(trivial_action(cyclic_group(4), q));
        CHECK(co.decomposition.count() == 1);
        CHECK(co.orbit_count() == 1);
    }
    SUBCASE("trivial action: orbit count equals component count") {
        std::mt19937 rng(59);
        auto q = battery::random_quiver(rng, 10, 12);
        auto co = component_orbits(trivial_action(cyclic_group(3), q));
        CHECK(co.orbit_count() == co.decomposition.count());
    }
}

TEST_CASE("complete_action fills in non-generator elements via the Cayley table") {
    auto q = make_quiver({"v0", "v1", "v2", "v3"}, {"e0", "e1", "e2", "e3"}, {0, 1, 2, 3},
                         {1, 2, 3, 0}, std::vector<Rational>(4, Rational(1)), true);
    auto z4 = cyclic_group(4);
    // give only the generator 1 -> rotation by one step
    std::vector<std::pair<int, std::vector<int>>> vp{{1, {1, 2, 3, 0}}};
    std::vector<std::pair<int, std::vector<int>>> ep{{1, {1, 2, 3, 0}}};
    auto act = complete_action(z4, q, vp, ep);
    CHECK(validate_action(act).ok());
    CHECK(act.vperm[2] == std::vector<int>{2, 3, 0, 1});
    CHECK(act.vperm[3] == std::vector<int>{3, 0, 1, 2});

    SUBCASE("insufficient generators are rejected") {
        std::vector<std::pair<int, std::vector<int>>> vonly{{2, {2, 3, 0, 1}}};
        CHECK_THROWS_AS(complete_action(z4, q, vonly, vonly), std::invalid_argument);
    }
    SUBCASE("inconsistent data is rejected") {
        std::vector<std::pair<int, std::vector<int>>> bad{{1, {1, 2, 3, 0}}, {2, {1, 2, 3, 0}}};
        CHECK_THROWS_AS(complete_action(z4, q, bad, bad), std::invalid_argument);
    }
}
