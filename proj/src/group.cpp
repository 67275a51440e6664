#include "quiverkit/group.hpp"

#include "quiverkit/quaternion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace quiverkit {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

int FiniteGroup::index_of_label(const std::string& s) const {
    for (int i = 0; i < order; ++i)
        if (labels[i] == s) return i;
    return -1;
}

GroupPtr make_group(std::vector<int> cayley, std::vector<std::string> labels) {
    const auto n64 = static_cast<long long>(labels.size());
    if (n64 <= 0) fail("group must have at least one element");
    const int n = static_cast<int>(n64);
    if (static_cast<long long>(cayley.size()) != n64 * n64) fail("cayley table has wrong size");
    for (int v : cayley)
        if (v < 0 || v >= n) fail("cayley table entry out of range");

    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != n) fail("element labels must be unique");
    }

    auto at = [&](int a, int b) { return cayley[a * n + b]; };

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = at(e, g) == g && at(g, e) == g;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) fail("no identity element");

    std::vector<int> inverses(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            if (at(g, h) == identity && at(h, g) == identity) {
                inverses[g] = h;
                break;
            }
        }
        if (inverses[g] < 0) fail("element " + labels[g] + " has no inverse");
    }

    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (at(at(a, b), c) != at(a, at(b, c))) fail("cayley table not associative");
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 200000; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (at(at(a, b), c) != at(a, at(b, c))) fail("cayley table not associative");
        }
    }

    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->cayley = std::move(cayley);
    g->identity = identity;
    g->inverses = std::move(inverses);
    g->labels = std::move(labels);
    return g;
}

GroupPtr cyclic_group(int n) {
    if (n < 1) fail("cyclic(n) requires n >= 1");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    }
    return make_group(std::move(table), std::move(labels));
}

GroupPtr dihedral_group(int n) {
    if (n < 1) fail("dihedral(n) requires n >= 1");
    const int order = 2 * n;
    // indices 0..n-1: b^i; n..2n-1: a b^(i-n)
    auto idx = [&](bool refl, int i) { return (refl ? n : 0) + ((i % n) + n) % n; };
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    for (int x = 0; x < order; ++x) {
        bool rx = x >= n;
        int ix = rx ? x - n : x;
        for (int y = 0; y < order; ++y) {
            bool ry = y >= n;
            int iy = ry ? y - n : y;
            int z;
            if (!rx && !ry) z = idx(false, ix + iy);        // b^i b^j
            else if (!rx && ry) z = idx(true, iy - ix);     // b^i (a b^j) = a b^(j-i)
            else if (rx && !ry) z = idx(true, ix + iy);     // (a b^i) b^j
            else z = idx(false, iy - ix);                   // (a b^i)(a b^j) = b^(j-i)
            table[x * order + y] = z;
        }
    }
    std::vector<std::string> labels(order);
    for (int i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "e" : (i == 1 ? "b" : "b^" + std::to_string(i));
        labels[n + i] = i == 0 ? "a" : (i == 1 ? "ab" : "ab^" + std::to_string(i));
    }
    return make_group(std::move(table), std::move(labels));
}

GroupPtr symmetric_group(int n) {
    if (n < 1 || n > 6) fail("symmetric(n) supported for 1 <= n <= 6");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int order = static_cast<int>(perms.size());

    std::map<std::vector<int>, int> index;
    for (int i = 0; i < order; ++i) index[perms[i]] = i;

    std::vector<int> table(static_cast<std::size_t>(order) * order);
    std::vector<int> prod(n);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            for (int x = 0; x < n; ++x) prod[x] = perms[a][perms[b][x]];
            table[a * order + b] = index.at(prod);
        }

    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i) {
        std::string s;
        for (int x : perms[i]) s += static_cast<char>('0' + x);
        labels[i] = s;
    }
    return make_group(std::move(table), std::move(labels));
}

namespace {

GroupPtr group_from_quaternions(const std::vector<Quaternion>& elems) {
    const int n = static_cast<int>(elems.size());
    std::map<Quaternion, int> index;
    for (int i = 0; i < n; ++i) index[elems[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(elems[a] * elems[b]);
            if (it == index.end()) fail("quaternion element set not closed under product");
            table[a * n + b] = it->second;
        }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = quaternion_label(elems[i]);
    return make_group(std::move(table), std::move(labels));
}

std::vector<Quaternion> quaternion_units() {
    auto Q = [](long long w, long long x, long long y, long long z) {
        return Quaternion{QuadRational::of(w), QuadRational::of(x), QuadRational::of(y),
                          QuadRational::of(z)};
    };
    return {Q(1, 0, 0, 0), Q(-1, 0, 0, 0), Q(0, 1, 0, 0), Q(0, -1, 0, 0),
            Q(0, 0, 1, 0), Q(0, 0, -1, 0), Q(0, 0, 0, 1), Q(0, 0, 0, -1)};
}

}  // namespace

GroupPtr quaternion_group8() { return group_from_quaternions(quaternion_units()); }

GroupPtr binary_octahedral_group() {
    std::vector<Quaternion> elems = quaternion_units();
    // 16 elements (s0 + s1 i + s2 j + s3 k)/2
    for (int mask = 0; mask < 16; ++mask) {
        auto sgn = [&](int bit) { return (mask >> bit) & 1 ? -1 : 1; };
        elems.push_back({QuadRational::half(sgn(3)), QuadRational::half(sgn(2)),
                         QuadRational::half(sgn(1)), QuadRational::half(sgn(0))});
    }
    // 24 elements (s1 x + s2 y)/sqrt2 over basis pairs x < y
    const std::array<std::pair<int, int>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    for (auto [p, q] : pairs)
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
                std::array<QuadRational, 4> c{QuadRational::of(0), QuadRational::of(0),
                                              QuadRational::of(0), QuadRational::of(0)};
                c[p] = QuadRational::over_sqrt2(s1);
                c[q] = QuadRational::over_sqrt2(s2);
                elems.push_back({c[0], c[1], c[2], c[3]});
            }
    return group_from_quaternions(elems);
}

bool Subgroup::contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements) {
    if (!parent) fail("subgroup requires a parent group");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) fail("subgroup must be nonempty");
    for (int g : elements)
        if (g < 0 || g >= parent->order) fail("subgroup element out of range");

    Subgroup s{parent, std::move(elements)};
    if (!s.contains(parent->identity)) fail("subgroup does not contain the identity");
    for (int a : s.elements) {
        if (!s.contains(parent->inv(a))) fail("subgroup not closed under inverses");
        for (int b : s.elements)
            if (!s.contains(parent->mul(a, b))) fail("subgroup not closed under products");
    }
    if (parent->order % s.order() != 0)
        fail("subgroup order does not divide group order");  // unreachable for true subgroups
    return s;
}

Subgroup generated_subgroup(GroupPtr parent, const std::vector<int>& generators) {
    if (!parent) fail("subgroup requires a parent group");
    std::set<int> closure{parent->identity};
    std::vector<int> frontier{parent->identity};
    for (int g : generators) {
        if (g < 0 || g >= parent->order) fail("generator out of range");
        if (closure.insert(g).second) frontier.push_back(g);
    }
    std::vector<int> gens(closure.begin(), closure.end());
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int g : gens) {
            for (int y : {parent->mul(x, g), parent->mul(g, x)}) {
                if (closure.insert(y).second) frontier.push_back(y);
            }
        }
        gens.assign(closure.begin(), closure.end());
    }
    return make_subgroup(parent, {closure.begin(), closure.end()});
}

Subgroup trivial_subgroup(GroupPtr parent) { return make_subgroup(parent, {parent->identity}); }

Subgroup full_subgroup(GroupPtr parent) {
    std::vector<int> all(parent->order);
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(parent, std::move(all));
}

bool is_normal_subgroup(const Subgroup& sub) {
    const auto& g = *sub.parent;
    for (int x = 0; x < g.order; ++x)
        for (int n : sub.elements)
            if (!sub.contains(g.mul(g.mul(x, n), g.inv(x)))) return false;
    return true;
}

SubgroupAsGroup subgroup_as_group(const Subgroup& sub) {
    const auto& g = *sub.parent;
    const int m = sub.order();
    std::vector<int> from_parent(g.order, -1);
    for (int i = 0; i < m; ++i) from_parent[sub.elements[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) {
        labels[a] = g.label(sub.elements[a]);
        for (int b = 0; b < m; ++b)
            table[a * m + b] = from_parent[g.mul(sub.elements[a], sub.elements[b])];
    }
    return {make_group(std::move(table), std::move(labels)), sub.elements, std::move(from_parent)};
}

GroupHom make_hom(GroupPtr domain, GroupPtr codomain, std::vector<int> map) {
    if (!domain || !codomain) fail("hom requires domain and codomain");
    if (static_cast<int>(map.size()) != domain->order) fail("hom map has wrong size");
    for (int v : map)
        if (v < 0 || v >= codomain->order) fail("hom map value out of range");
    if (map[domain->identity] != codomain->identity) fail("hom does not preserve the identity");
    for (int a = 0; a < domain->order; ++a)
        for (int b = 0; b < domain->order; ++b)
            if (map[domain->mul(a, b)] != codomain->mul(map[a], map[b]))
                fail("map is not multiplicative");
    return {std::move(domain), std::move(codomain), std::move(map)};
}

GroupHom identity_hom(GroupPtr g) {
    std::vector<int> map(g->order);
    std::iota(map.begin(), map.end(), 0);
    return make_hom(g, g, std::move(map));
}

GroupHom power_endomorphism(GroupPtr g, long long m) {
    std::vector<int> map(g->order);
    for (int x = 0; x < g->order; ++x) {
        int acc = g->identity;
        long long e = m >= 0 ? m : -m;
        int base = m >= 0 ? x : g->inv(x);
        for (long long i = 0; i < e; ++i) acc = g->mul(acc, base);
        map[x] = acc;
    }
    return make_hom(g, g, std::move(map));
}

Subgroup kernel(const GroupHom& h) {
    std::vector<int> elems;
    for (int g = 0; g < h.domain->order; ++g)
        if (h.map[g] == h.codomain->identity) elems.push_back(g);
    return make_subgroup(h.domain, std::move(elems));
}

CosetPartition coset_partition(const Subgroup& sub, CosetSide side) {
    const auto& g = *sub.parent;
    CosetPartition out;
    out.coset_of.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
        if (out.coset_of[x] >= 0) continue;
        std::vector<int> coset;
        for (int n : sub.elements)
            coset.push_back(side == CosetSide::right ? g.mul(n, x) : g.mul(x, n));
        std::sort(coset.begin(), coset.end());
        int id = static_cast<int>(out.cosets.size());
        for (int y : coset) out.coset_of[y] = id;
        out.cosets.push_back(std::move(coset));
    }
    out.is_normal = is_normal_subgroup(sub);
    return out;
}

DoubleCosetPartition double_cosets(const Subgroup& n, const Subgroup& h) {
    if (n.parent != h.parent && !(*n.parent == *h.parent))
        fail("double cosets require subgroups of the same group");
    const auto& g = *n.parent;
    DoubleCosetPartition out;
    out.class_of.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
        if (out.class_of[x] >= 0) continue;
        std::set<int> cls;
        for (int a : n.elements)
            for (int b : h.elements) cls.insert(g.mul(g.mul(a, x), b));
        int id = static_cast<int>(out.classes.size());
        for (int y : cls) out.class_of[y] = id;
        out.classes.emplace_back(cls.begin(), cls.end());
    }
    return out;
}

Subgroup equalizer_subgroup(const GroupHom& alpha, const GroupHom& beta) {
    if (alpha.domain != beta.domain && !(*alpha.domain == *beta.domain))
        fail("equalizer requires endomorphisms of the same group");
    if (alpha.codomain != beta.codomain && !(*alpha.codomain == *beta.codomain))
        fail("equalizer requires endomorphisms of the same group");
    std::vector<int> elems;
    for (int g = 0; g < alpha.domain->order; ++g)
        if (alpha.map[g] == beta.map[g]) elems.push_back(g);
    // make_subgroup re-verifies closure under products and inverses.
    return make_subgroup(alpha.domain, std::move(elems));
}

ElementMap right_mult_map(const FiniteGroup& g, int k) {
    if (k < 0 || k >= g.order) fail("element out of range");
    ElementMap m(g.order);
    for (int x = 0; x < g.order; ++x) m[x] = g.mul(x, k);
    return m;
}

ElementMap constant_map(const FiniteGroup& g, int value) {
    if (value < 0 || value >= g.order) fail("element out of range");
    return ElementMap(g.order, value);
}

int SemidirectProduct::pair_index(int n, int h) const { return n * h_order_ + h; }
std::pair<int, int> SemidirectProduct::unpair(int g) const {
    return {g / h_order_, g % h_order_};
}

SemidirectProduct make_semidirect(GroupPtr n, GroupPtr h,
                                  const std::vector<std::vector<int>>& action) {
    if (!n || !h) fail("semidirect product requires two groups");
    if (static_cast<int>(action.size()) != h->order)
        fail("semidirect action must assign an automorphism to every element of H");

    for (int t = 0; t < h->order; ++t) {
        const auto& a = action[t];
        if (static_cast<int>(a.size()) != n->order) fail("automorphism has wrong size");
        std::vector<bool> hit(n->order, false);
        for (int v : a) {
            if (v < 0 || v >= n->order) fail("automorphism value out of range");
            hit[v] = true;
        }
        for (bool b : hit)
            if (!b) fail("semidirect action value is not a bijection of N");
        if (a[n->identity] != n->identity) fail("semidirect action value does not fix identity");
        for (int x = 0; x < n->order; ++x)
            for (int y = 0; y < n->order; ++y)
                if (a[n->mul(x, y)] != n->mul(a[x], a[y]))
                    fail("semidirect action value is not an automorphism of N");
    }
    for (int s = 0; s < h->order; ++s)
        for (int t = 0; t < h->order; ++t) {
            int st = h->mul(s, t);
            for (int x = 0; x < n->order; ++x)
                if (action[st][x] != action[s][action[t][x]])
                    fail("semidirect action is not a homomorphism H -> Aut(N)");
        }

    const int order = n->order * h->order;
    const int ho = h->order;
    auto pidx = [&](int a, int b) { return a * ho + b; };
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    std::vector<std::string> labels(order);
    for (int n1 = 0; n1 < n->order; ++n1)
        for (int h1 = 0; h1 < ho; ++h1) {
            labels[pidx(n1, h1)] = "(" + n->label(n1) + "," + h->label(h1) + ")";
            for (int n2 = 0; n2 < n->order; ++n2)
                for (int h2 = 0; h2 < ho; ++h2)
                    table[pidx(n1, h1) * order + pidx(n2, h2)] =
                        pidx(n->mul(n1, action[h1][n2]), h->mul(h1, h2));
        }

    SemidirectProduct out;
    out.group = make_group(std::move(table), std::move(labels));
    out.h_order_ = ho;

    std::vector<int> n_elems, h_elems;
    for (int x = 0; x < n->order; ++x) n_elems.push_back(pidx(x, h->identity));
    for (int y = 0; y < ho; ++y) h_elems.push_back(pidx(n->identity, y));
    out.normal_part = make_subgroup(out.group, std::move(n_elems));
    out.complement = make_subgroup(out.group, std::move(h_elems));
    return out;
}

std::vector<std::vector<int>> trivial_h_action(const FiniteGroup& n, const FiniteGroup& h) {
    std::vector<int> id(n.order);
    std::iota(id.begin(), id.end(), 0);
    return std::vector<std::vector<int>>(h.order, id);
}

std::vector<std::vector<int>> inversion_h_action(const FiniteGroup& n, const FiniteGroup& h) {
    // Intended for cyclic H as laid out by cyclic_group(): element t = gen^t,
    // which acts by inversion^t. make_semidirect re-verifies everything.
    std::vector<std::vector<int>> act(h.order);
    for (int t = 0; t < h.order; ++t) {
        bool invert = (t % 2) == 1;
        act[t].resize(n.order);
        for (int x = 0; x < n.order; ++x) act[t][x] = invert ? n.inv(x) : x;
    }
    return act;
}

}  // namespace quiverkit
