#pragma once

#include <memory>
#include <string>
#include <vector>

namespace quiverkit {

// Finite group as a full Cayley table. Immutable after construction; all
// operations on it are pure. Element "names" are indices into [0, order).
struct FiniteGroup {
    int order = 0;
    std::vector<int> cayley;  // row-major: cayley[a*order + b] = a*b
    int identity = 0;
    std::vector<int> inverses;
    std::vector<std::string> labels;

    int mul(int a, int b) const { return cayley[a * order + b]; }
    int inv(int a) const { return inverses[a]; }
    const std::string& label(int a) const { return labels[a]; }
    int index_of_label(const std::string& s) const;  // -1 when absent

    friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Validates identity, inverses and associativity (exhaustive up to order 256,
// random triples beyond). Throws std::invalid_argument on failure.
GroupPtr make_group(std::vector<int> cayley, std::vector<std::string> labels);

GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n);    // order 2n; a^2 = b^n = 1, aba = b^-1
GroupPtr symmetric_group(int n);   // n <= 6
GroupPtr quaternion_group8();
GroupPtr binary_octahedral_group();  // order 48, exact quaternion arithmetic

struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;  // sorted ascending

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const;
};

// Verifies closure, identity, inverses and Lagrange. Throws on failure.
Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements);
Subgroup generated_subgroup(GroupPtr parent, const std::vector<int>& generators);
Subgroup trivial_subgroup(GroupPtr parent);
Subgroup full_subgroup(GroupPtr parent);
bool is_normal_subgroup(const Subgroup& sub);

// The subgroup as an abstract group on indices 0..|H|-1 (elements in sorted
// parent order, labels inherited). to_parent[i] is the parent index of i.
struct SubgroupAsGroup {
    GroupPtr group;
    std::vector<int> to_parent;
    std::vector<int> from_parent;  // parent index -> local index, -1 outside
};
SubgroupAsGroup subgroup_as_group(const Subgroup& sub);

struct GroupHom {
    GroupPtr domain;
    GroupPtr codomain;
    std::vector<int> map;  // codomain element per domain element

    int operator()(int g) const { return map[g]; }
};

// Verifies hom laws (identity, multiplicativity). Throws on failure.
GroupHom make_hom(GroupPtr domain, GroupPtr codomain, std::vector<int> map);
GroupHom identity_hom(GroupPtr g);
// g -> g^m; validated, so only accepted where it actually is a homomorphism.
GroupHom power_endomorphism(GroupPtr g, long long m);

Subgroup kernel(const GroupHom& h);

enum class CosetSide { left, right };

struct CosetPartition {
    std::vector<std::vector<int>> cosets;  // each sorted; ordered by minimal element
    std::vector<int> coset_of;             // element -> coset index
    bool is_normal = false;
};
CosetPartition coset_partition(const Subgroup& sub, CosetSide side);

struct DoubleCosetPartition {
    std::vector<std::vector<int>> classes;  // N g H classes, ordered by minimal element
    std::vector<int> class_of;
};
DoubleCosetPartition double_cosets(const Subgroup& n, const Subgroup& h);

Subgroup equalizer_subgroup(const GroupHom& alpha, const GroupHom& beta);

// General (not necessarily multiplicative) self-maps G -> G, as used by coset
// quivers. Plain element arrays, kept distinct from GroupHom.
using ElementMap = std::vector<int>;
ElementMap right_mult_map(const FiniteGroup& g, int k);   // x -> x*k
ElementMap constant_map(const FiniteGroup& g, int value);

struct SemidirectProduct {
    GroupPtr group;          // pairs (n,h) indexed n*|H| + h
    Subgroup normal_part;    // embedded copy of N
    Subgroup complement;     // embedded copy of H
    int pair_index(int n, int h) const;
    std::pair<int, int> unpair(int g) const;

  private:
    friend SemidirectProduct make_semidirect(GroupPtr, GroupPtr,
                                             const std::vector<std::vector<int>>&);
    int h_order_ = 0;
};

// action[h] must be an automorphism of N for every h, and h -> action[h] a
// homomorphism H -> Aut(N); both are verified. Product rule:
// (n,h)(n',h') = (n * action[h](n'), h h').
SemidirectProduct make_semidirect(GroupPtr n, GroupPtr h,
                                  const std::vector<std::vector<int>>& action);

std::vector<std::vector<int>> trivial_h_action(const FiniteGroup& n, const FiniteGroup& h);
// h^j acts by inversion^j; requires |H| even to be a homomorphism unless N is
// elementary abelian of exponent 2.
std::vector<std::vector<int>> inversion_h_action(const FiniteGroup& n, const FiniteGroup& h);

}  // namespace quiverkit
