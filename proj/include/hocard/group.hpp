#pragma once

#include <string>
#include <vector>

#include "hocard/errors.hpp"

namespace hocard {

// Finite group as a closed multiplication table over element indices
// 0..order-1. Associativity, identity, inverses and the generating property
// of `generators` are all verified on construction; an invalid table is
// rejected with the violating triple in the message.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;       // row-major: table[a*order + b] = a*b
  int identity = 0;
  std::vector<int> inverse;     // element -> inverse
  std::vector<int> generators;  // greedy, deterministic, nonempty
  std::string name;             // display name, e.g. "sym(3)"
  std::string dsl;              // expression that rebuilds this group

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverse[a]; }
  int element_order(int a) const;
  bool is_abelian() const;
  bool is_trivial() const { return order == 1; }
};

// Validates `rows` as a group table and fills in the derived fields.
FiniteGroup group_from_table(const std::vector<std::vector<int>>& rows,
                             const std::string& name, const std::string& dsl);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n
FiniteGroup quaternion_group();     // Q8
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Subgroup of the symmetric group generated by permutations given in image
// notation; all of one common degree. Closure is computed by breadth-first
// products and elements are indexed in lexicographic order.
FiniteGroup permutation_group(const std::vector<std::vector<int>>& generator_images,
                              long long max_order = 512);

// Standalone subgroup on the given parent element indices (which must be
// closed under multiplication); elements are re-indexed in ascending order.
FiniteGroup subgroup(const FiniteGroup& g, std::vector<int> elements,
                     const std::string& name);

// Orbits of g |-> hgh^-1, each sorted, ordered by smallest member. The
// identity's class comes first.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

FiniteGroup centralizer(const FiniteGroup& g, int s);
FiniteGroup center(const FiniteGroup& g);

// Homomorphism as the full image map; source/target are the groups it was
// enumerated between.
struct GroupHom {
  std::vector<int> image;  // source element -> target element

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.image == b.image;
  }
  friend bool operator<(const GroupHom& a, const GroupHom& b) {
    return a.image < b.image;
  }
};

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                     const std::vector<int>& image);

// Complete duplicate-free list of homomorphisms source -> target, found by
// assigning generator images and extending along words, pruning assignments
// that violate element orders or already-determined products. Every result
// is re-verified against the full table. Throws ResourceError when
// |target|^#generators exceeds `budget`.
std::vector<GroupHom> enumerate_homomorphisms(const FiniteGroup& source,
                                              const FiniteGroup& target,
                                              long long budget = 10000000);

// Conjugacy class of homomorphisms under post-composition with inner
// automorphisms of the target, with its stabilizer subgroup (the centralizer
// of the image).
struct HomClass {
  GroupHom representative;  // lexicographically smallest in its orbit
  FiniteGroup stabilizer;
  long long orbit_size = 0;
};

std::vector<HomClass> hom_classes(const FiniteGroup& source,
                                  const FiniteGroup& target,
                                  long long budget = 10000000);

// Breadth-first expression of every element as parent * generator, usable to
// extend any generator assignment along words. expr[identity] = {-1, -1}.
struct WordExpressions {
  std::vector<int> parent;
  std::vector<int> generator;  // index into group.generators
  std::vector<int> bfs_order;  // identity first
};

WordExpressions word_expressions(const FiniteGroup& g);

}  // namespace hocard
