// Acceptance suite: one self-contained check per criterion, each printed as a
// single PASS/FAIL line with its runtime. Exits nonzero if any check fails.

#include "quiverkit/algebra.hpp"
#include "quiverkit/constructions.hpp"

#include "battery.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

using namespace quiverkit;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("[%s] criterion %d: %s (%.2fs/%.0fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), elapsed, budget_seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
}

struct Fx2O {
    GroupPtr g = binary_octahedral_group();
    Subgroup z2 = make_subgroup(g, {g->identity, g->index_of_label("-1")});
    Subgroup z3 = generated_subgroup(g, {g->index_of_label("(-1-i-j-k)/2")});
    int k = g->index_of_label("k");
    int omega = g->index_of_label("(-1-i-j-k)/2");
};

bool expect(bool cond, const std::string& msg, std::string& detail) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

}  // namespace

int main() {
    criterion(1, "binary octahedral fixtures", 1.0, [](std::string& detail) {
        Fx2O fx;
        bool ok = true;
        ok &= expect(fx.g->order == 48, "|2O| != 48", detail);
        ok &= expect(is_normal_subgroup(fx.z2), "{1,-1} not normal", detail);
        ok &= expect(fx.z3.order() == 3, "<(-1-i-j-k)/2> order != 3", detail);
        int common = 0;
        for (int x : fx.z2.elements)
            if (fx.z3.contains(x)) ++common;
        ok &= expect(common == 1, "Z2 ∩ Z3 != {1}", detail);
        return ok;
    });

    criterion(2, "component counts for the 2O coset quivers", 1.0, [](std::string& detail) {
        Fx2O fx;
        bool ok = true;
        auto qk = coset_quiver(fx.z2, right_mult_map(*fx.g, fx.k));
        ok &= expect(connected_components(*qk.quiver).count() == 12,
                     "Q(2O,Z2,k) component count != 12", detail);
        auto qo = coset_quiver(fx.z2, right_mult_map(*fx.g, fx.omega));
        ok &= expect(connected_components(*qo.quiver).count() == 8,
                     "Q(2O,Z2,omega) component count != 8", detail);
        auto act = coset_action(fx.z2, right_mult_map(*fx.g, fx.k), fx.z3,
                                TranslationSide::left);
        auto co = component_orbits(act.action);
        ok &= expect(co.orbit_count() == 4, "Z3 component orbits != 4", detail);
        return ok;
    });

    criterion(3, "classification round-trip on 200 random free actions", 60.0,
              [](std::string& detail) {
                  std::mt19937 rng(20260810);
                  auto groups = battery::groups_up_to_8();
                  int cases = 0, good = 0;
                  while (cases < 200) {
                      auto g = groups[cases % groups.size()];
                      auto inst = battery::random_free_action(rng, g, 12, 24);
                      ++cases;
                      if (!validate_action(inst.action).ok()) continue;
                      auto res = classify_action(inst.action);
                      bool ok = res.witness.is_iso && res.witness.is_equivariant &&
                                is_quiver_isomorphism(*inst.quiver, *res.rebuilt.quiver,
                                                      res.witness) &&
                                morphism_equivariant(res.witness, inst.action,
                                                     res.rebuilt.action);
                      if (ok) ++good;
                  }
                  detail = std::to_string(good) + "/" + std::to_string(cases) + " round-trips";
                  return good == cases && cases >= 200;
              });

    criterion(4, "skew-quotient recovery on 100 random cocycles", 30.0,
              [](std::string& detail) {
                  std::mt19937 rng(4177);
                  auto groups = battery::groups_up_to_8();
                  int cases = 0, good = 0;
                  while (cases < 100) {
                      auto g = groups[cases % groups.size()];
                      auto q = battery::random_quiver(rng, 12, 24);
                      auto sp = skew_product(q, g, battery::random_cocycle(rng, q, g));
                      ++cases;
                      auto res = quotient_quiver(sp.action);
                      if (quiver_isomorphic(*q, *res.quotient).has_value()) ++good;
                  }
                  detail = std::to_string(good) + "/" + std::to_string(cases) + " recovered";
                  return good == cases;
              });

    criterion(5, "semidirect/skew isomorphism (dihedral n=3..6 and direct product)", 5.0,
              [](std::string& detail) {
                  bool ok = true;
                  for (int n = 3; n <= 6 && ok; ++n) {
                      auto zn = cyclic_group(n), z2 = cyclic_group(2);
                      std::vector<int> c(n);
                      for (int i = 0; i < n; ++i) c[i] = i % 2;
                      auto rep = semidirect_skew_check(zn, z2, inversion_h_action(*zn, *z2), c);
                      ok &= expect(rep.verified(), "dihedral case n=" + std::to_string(n),
                                   detail);
                  }
                  auto q8 = quaternion_group8();
                  auto z3 = cyclic_group(3);
                  std::vector<int> c{0, 1, 2, 0, 1, 2, 0, 1};
                  auto rep = semidirect_skew_check(q8, z3, trivial_h_action(*q8, *z3), c);
                  ok &= expect(rep.verified(), "direct product case", detail);
                  return ok;
              });

    criterion(6, "double-coset quotient agrees with the generic quotient", 5.0,
              [](std::string& detail) {
                  bool ok = true;
                  {
                      auto d3 = dihedral_group(3);
                      auto n = generated_subgroup(d3, {d3->index_of_label("b")});
                      auto h = generated_subgroup(d3, {d3->index_of_label("a")});
                      std::vector<int> idmap(d3->order);
                      std::iota(idmap.begin(), idmap.end(), 0);
                      auto res = double_coset_quotient(n, idmap, h);
                      ok &= expect(res.quotient->num_vertices() == 1 &&
                                       res.quotient->num_edges() == 3,
                                   "D3 case shape", detail);
                      ok &= expect(is_quiver_isomorphism(*res.generic.quotient, *res.quotient,
                                                         res.from_generic),
                                   "D3 generic agreement", detail);
                  }
                  struct Case {
                      GroupPtr g;
                      std::vector<int> ngens, hgens;
                      int k;
                  };
                  std::vector<Case> cases;
                  {
                      auto d4 = dihedral_group(4);
                      cases.push_back({d4, {d4->index_of_label("b")},
                                       {d4->index_of_label("a")}, d4->identity});
                      auto z12 = cyclic_group(12);
                      cases.push_back({z12, {4}, {6}, 3});
                      cases.push_back({z12, {6}, {4}, 1});
                      cases.push_back({z12, {2}, {0}, 5});
                      auto q8 = quaternion_group8();
                      cases.push_back({q8, {q8->index_of_label("-1")}, {q8->identity},
                                       q8->index_of_label("j")});
                      auto d6 = dihedral_group(6);
                      cases.push_back({d6, {d6->index_of_label("b")},
                                       {d6->index_of_label("a")}, d6->identity});
                  }
                  for (const auto& c : cases) {
                      auto n = generated_subgroup(c.g, c.ngens);
                      auto h = generated_subgroup(c.g, c.hgens);
                      auto res = double_coset_quotient(n, right_mult_map(*c.g, c.k), h);
                      ok &= expect(is_quiver_isomorphism(*res.generic.quotient, *res.quotient,
                                                         res.from_generic),
                                   "fixture agreement", detail);
                  }
                  return ok;
              });

    criterion(7, "k-theory anchors (Cuntz and Toeplitz quivers)", 1.0,
              [](std::string& detail) {
                  bool ok = true;
                  for (int n = 2; n <= 5; ++n) {
                      auto g = cyclic_group(n);
                      auto q = coset_quiver(full_subgroup(g), right_mult_map(*g, g->identity));
                      auto kt = k_theory(*q.quiver);
                      bool torsion_ok = n == 2 ? kt.k0_torsion.empty()
                                               : (kt.k0_torsion.size() == 1 &&
                                                  kt.k0_torsion[0] == n - 1);
                      ok &= expect(kt.k0_free_rank == 0 && torsion_ok && kt.k1_free_rank == 0,
                                   "O_n anchor at n=" + std::to_string(n), detail);
                  }
                  auto z2 = cyclic_group(2);
                  auto toep = coset_quiver(trivial_subgroup(z2), constant_map(*z2, z2->identity));
                  auto kt = k_theory(*toep.quiver);
                  ok &= expect(kt.k0_free_rank == 1 && kt.k0_torsion.empty() &&
                                   kt.k1_free_rank == 0,
                               "Toeplitz anchor", detail);
                  return ok;
              });

    criterion(8, "relation-quiver counts and equalizer orders", 5.0, [](std::string& detail) {
        bool ok = true;
        for (int k = 1; k <= 12 && ok; ++k)
            for (int m = 1; m < 6 && ok; ++m)
                for (int n = m + 1; n <= 6 && ok; ++n) {
                    auto g = cyclic_group(k);
                    auto alpha = power_endomorphism(g, n), beta = power_endomorphism(g, m);
                    auto res = relation_quiver(alpha, beta);
                    // brute-force oracle: count pairs directly
                    long long pairs = 0;
                    for (int x = 0; x < k; ++x)
                        for (int y = 0; y < k; ++y)
                            if (alpha.map[x] == beta.map[y]) ++pairs;
                    long long in_image = 0;
                    {
                        std::vector<bool> im(k, false);
                        for (int y = 0; y < k; ++y) im[beta.map[y]] = true;
                        for (int x = 0; x < k; ++x)
                            if (im[alpha.map[x]]) ++in_image;
                    }
                    long long kerb = kernel(beta).order();
                    ok &= expect(res.quiver->num_edges() == pairs,
                                 "edge enumeration mismatch", detail);
                    ok &= expect(pairs == in_image * kerb, "fiber formula mismatch", detail);
                    ok &= expect(equalizer_subgroup(alpha, beta).order() ==
                                     std::gcd(n - m, k),
                                 "equalizer order mismatch", detail);
                }
        return ok;
    });

    criterion(9, "isomorphism search agrees with exhaustive enumeration", 30.0,
              [](std::string& detail) {
                  std::mt19937 rng(991);
                  int positives = 0, agreements = 0, cases = 0;
                  for (int trial = 0; trial < 80; ++trial) {
                      auto a = battery::random_quiver(rng, 4, 6);
                      QuiverPtr b;
                      if (trial % 2 == 0) {
                          std::vector<int> vp(a->num_vertices()), ep(a->num_edges());
                          std::iota(vp.begin(), vp.end(), 0);
                          std::iota(ep.begin(), ep.end(), 0);
                          std::shuffle(vp.begin(), vp.end(), rng);
                          std::shuffle(ep.begin(), ep.end(), rng);
                          b = relabel_quiver(*a, vp, ep);
                      } else {
                          b = battery::random_quiver(rng, 4, 6);
                      }
                      ++cases;
                      auto fast = quiver_isomorphic(*a, *b);
                      auto slow = oracles::brute_force_isomorphic(*a, *b);
                      bool agree = fast.has_value() == slow.has_value();
                      if (fast && !is_quiver_isomorphism(*a, *b, *fast)) agree = false;
                      if (agree) ++agreements;
                      if (fast) ++positives;
                  }
                  detail = std::to_string(agreements) + "/" + std::to_string(cases) +
                           " agree, " + std::to_string(positives) + " isomorphic";
                  return agreements == cases && positives > 10 && positives < cases;
              });

    criterion(10, "measure-invariance verdict and freeness implication on the battery", 10.0,
              [](std::string& detail) {
                  std::mt19937 rng(1013);
                  auto groups = battery::groups_up_to_8();
                  bool ok = true;
                  int valid_checked = 0, broken_checked = 0, free_checked = 0;
                  for (int trial = 0; trial < 120; ++trial) {
                      auto g = groups[trial % groups.size()];
                      QuiverAction act;
                      QuiverPtr quiver;
                      if (trial % 3 == 2 && g->order > 1) {
                          // non-free but valid: translation on cosets of a
                          // nontrivial subgroup
                          std::uniform_int_distribution<int> pick(1, g->order - 1);
                          auto k = generated_subgroup(g, {pick(rng)});
                          auto inst =
                              battery::random_coset_translation_action(rng, g, k, 3);
                          act = inst.action;
                          quiver = inst.quiver;
                      } else {
                          auto inst = battery::random_free_action(rng, g, 12, 24);
                          act = inst.action;
                          quiver = inst.quiver;
                      }
                      if (trial % 2 == 1 && quiver->num_edges() >= g->order && g->order > 1) {
                          auto broken = *quiver;
                          broken.weight[0] += 1;
                          quiver = std::make_shared<FiniteQuiver>(std::move(broken));
                          act.quiver = quiver;
                      }

                      // independent predicate: weights constant along orbits
                      auto parts = orbits(act);
                      bool constant = true;
                      for (const auto& orb : parts.edge_orbits)
                          for (int e : orb)
                              if (quiver->weight[e] != quiver->weight[orb.front()])
                                  constant = false;

                      auto report = validate_action(act);
                      bool measure_ok = true;
                      for (const auto& v : report.violations)
                          if (v.kind == "weight_invariance") measure_ok = false;
                      ok &= expect(measure_ok == constant, "verdict/predicate mismatch",
                                   detail);
                      (constant ? valid_checked : broken_checked)++;

                      if (report.ok()) {
                          auto fr = is_free(act);
                          if (fr.vertex_free) {
                              ++free_checked;
                              ok &= expect(fr.edge_free,
                                           "vertex-free action with a fixed edge", detail);
                          }
                      }
                  }
                  if (detail.empty())
                      detail = std::to_string(valid_checked) + " invariant / " +
                               std::to_string(broken_checked) + " broken / " +
                               std::to_string(free_checked) + " free";
                  return ok && valid_checked > 0 && broken_checked > 0 && free_checked > 0;
              });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
