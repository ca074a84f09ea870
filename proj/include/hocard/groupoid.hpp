#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hocard/group.hpp"
#include "hocard/rational.hpp"

namespace hocard {

// Caps for the explicit constructions. Exceeding any of them raises a
// ResourceError; nothing is ever silently truncated.
struct Budgets {
  long long max_objects = 100000;
  long long max_morphisms = 2048;      // explicit groupoids carry an m*m table
  long long max_candidates = 10000000; // functor / cocycle enumeration nodes
  long long hom_budget = 10000000;     // group homomorphism assignments
};

const Budgets& default_budgets();

// Groupoid with one object per isomorphism class, each carrying its
// automorphism group. Components are kept in a canonical order (largest
// 1/|aut| first, ties by label) so every downstream report is deterministic.
struct SkeletalComponent {
  std::string label;
  FiniteGroup aut;
};

struct SkeletalGroupoid {
  std::vector<SkeletalComponent> components;

  static SkeletalGroupoid of_components(std::vector<SkeletalComponent> comps);

  bool is_empty() const { return components.empty(); }
  size_t size() const { return components.size(); }
};

// Homotopy cardinality: sum over components of 1/|aut|.
Rational cardinality(const SkeletalGroupoid& x);

SkeletalGroupoid b_groupoid(const FiniteGroup& g);  // one component, aut G
SkeletalGroupoid unit_groupoid();                   // pt
SkeletalGroupoid empty_groupoid();                  // 0
SkeletalGroupoid discrete_groupoid(int n);          // n points, trivial auts

// Disjoint union; labels are prefixed "l:"/"r:".
SkeletalGroupoid sum_groupoid(const SkeletalGroupoid& x, const SkeletalGroupoid& y);

// Pairwise components with direct-product automorphism groups; labels "(a,b)".
SkeletalGroupoid product_groupoid(const SkeletalGroupoid& x, const SkeletalGroupoid& y);

// The genuine functor groupoid Fun(X, Y): the product over base components
// of the disjoint union, over target components, of homomorphism classes
// with their stabilizers as automorphism groups.
SkeletalGroupoid functor_groupoid(const SkeletalGroupoid& x, const SkeletalGroupoid& y,
                                  const Budgets& budgets = default_budgets());

// Explicit groupoid: objects, invertible morphisms, and a full composition
// table. compose(f, g) is "g then f" and is defined iff src(f) == dst(g).
// Category laws and invertibility are checked on construction.
struct FullGroupoid {
  struct Morphism {
    int src = 0;
    int dst = 0;
  };

  std::vector<std::string> object_labels;  // unique
  std::vector<Morphism> morphisms;
  std::vector<int> identity_at;  // object -> morphism id
  std::vector<int> inverse_of;   // morphism -> morphism id
  std::vector<int> compose_table;  // [f * m + g] = f o g, -1 when undefined

  int num_objects() const { return static_cast<int>(object_labels.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }
  int compose(int f, int g) const {
    return compose_table[static_cast<size_t>(f) * morphisms.size() + g];
  }

  void validate() const;

  // Morphism ids with the given endpoints.
  std::vector<int> hom_set(int src, int dst) const;
  std::vector<int> endos_at(int obj) const;

  // Connected components as object lists (smallest object index first).
  std::vector<std::vector<int>> object_components() const;
};

// Builds the composition table from a callable `comp(f, g)` defined on
// composable pairs, then validates.
FullGroupoid make_full_groupoid(std::vector<std::string> object_labels,
                                std::vector<FullGroupoid::Morphism> morphisms,
                                std::vector<int> identity_at,
                                const std::function<int(int, int)>& comp,
                                const Budgets& budgets = default_budgets());

// One object per component of X with its automorphism group as endomorphisms.
FullGroupoid full_of_skeletal(const SkeletalGroupoid& x,
                              const Budgets& budgets = default_budgets());

// Explicit product; objects and morphisms are tuples. The empty product is
// the unit groupoid.
FullGroupoid full_product(const std::vector<FullGroupoid>& factors,
                          const Budgets& budgets = default_budgets());

// Structure-preserving bijection of an explicit groupoid onto itself.
struct GroupoidAutomorphism {
  std::vector<int> obj;
  std::vector<int> mor;

  friend bool operator==(const GroupoidAutomorphism& a, const GroupoidAutomorphism& b) {
    return a.obj == b.obj && a.mor == b.mor;
  }
};

GroupoidAutomorphism identity_automorphism(const FullGroupoid& f);
GroupoidAutomorphism compose_automorphisms(const GroupoidAutomorphism& outer,
                                           const GroupoidAutomorphism& inner);
GroupoidAutomorphism inverse_automorphism(const GroupoidAutomorphism& a);
bool is_automorphism(const FullGroupoid& f, const GroupoidAutomorphism& a);

// Dependent groupoid: a skeletal base with one explicit fiber per component
// and a strict left action of the component's automorphism group on it
// (action[g*h] == action[g] o action[h], action[e] == id), checked
// exhaustively on construction via validate().
struct DependentFiber {
  FullGroupoid fiber;
  std::vector<GroupoidAutomorphism> action;  // indexed by base group element
};

struct DependentGroupoid {
  SkeletalGroupoid base;
  std::vector<DependentFiber> fibers;  // parallel to base.components

  void validate() const;
};

// Constant family: fiber Y with the trivial action over every component.
DependentGroupoid constant_family(const SkeletalGroupoid& base,
                                  const SkeletalGroupoid& fiber,
                                  const Budgets& budgets = default_budgets());

// Loop family P_x = (x = x): per component the discrete groupoid on the
// group elements with the conjugation action g.h = g h g^-1.
DependentGroupoid loop_family(const SkeletalGroupoid& base);

// Variant self-action by left translation g.h = g h; also yields unit total
// cardinality.
DependentGroupoid translation_family(const SkeletalGroupoid& base);

// Discrete fibers of the given sizes with actions specified by object
// permutations for each generator of the corresponding base group.
DependentGroupoid discrete_family(
    const SkeletalGroupoid& base, const std::vector<int>& fiber_sizes,
    const std::vector<std::vector<std::vector<int>>>& generator_object_maps);

// Expands an action given on base-group generators to all elements along
// breadth-first words; the result still gets validated strictly.
std::vector<GroupoidAutomorphism> expand_generator_action(
    const FiniteGroup& g, const FullGroupoid& fiber,
    const std::vector<GroupoidAutomorphism>& generator_action);

// Dependent sum: total groupoid of the family. Objects are fiber objects;
// a morphism u -> v is a pair (g, m : g.u -> v) composing by the semidirect
// rule (h, n) o (g, m) = (h g, n o h.m).
FullGroupoid grothendieck_sum(const DependentGroupoid& p,
                              const Budgets& budgets = default_budgets());

// Dependent product: per component the homotopy fixed points -- objects are
// (u, eta) with eta_g : g.u -> u satisfying eta_{gh} = eta_g o g.eta_h and
// eta_e = id, morphisms the fiber morphisms commuting with the cocycles --
// multiplied over components.
FullGroupoid dependent_product(const DependentGroupoid& p,
                               const Budgets& budgets = default_budgets());

// Explicit functor groupoid Fun(a, b): objects are functors, morphisms are
// natural transformations, composition is componentwise.
struct FunctorData {
  std::vector<int> obj;
  std::vector<int> mor;

  friend bool operator==(const FunctorData& x, const FunctorData& y) {
    return x.obj == y.obj && x.mor == y.mor;
  }
  friend bool operator<(const FunctorData& x, const FunctorData& y) {
    if (x.obj != y.obj) return x.obj < y.obj;
    return x.mor < y.mor;
  }
};

struct NatTransData {
  int from = 0;  // functor index
  int to = 0;
  std::vector<int> components;  // object of a -> morphism of b
};

struct ExplicitFunctorGroupoid {
  FullGroupoid groupoid;
  std::vector<FunctorData> functors;       // = objects, sorted
  std::vector<NatTransData> transformations;  // = morphisms
};

ExplicitFunctorGroupoid explicit_functor_groupoid(
    const FullGroupoid& a, const FullGroupoid& b,
    const Budgets& budgets = default_budgets());

// Natural-transformation groupoid (P => Q) of two families over the same
// base: per component the functor groupoid Fun(P_x, Q_x) carrying the
// conjugation action g.phi = Q(g) o phi o P(g)^-1, then its homotopy fixed
// points, multiplied over components.
FullGroupoid nat_trans_groupoid(const DependentGroupoid& p,
                                const DependentGroupoid& q,
                                const Budgets& budgets = default_budgets());

// Isomorphism classes with the induced endomorphism group of one
// representative per class.
SkeletalGroupoid skeletalize(const FullGroupoid& f);

// Independent cardinality: sum over objects of 1/(class size * |aut|),
// computed without skeletalizing.
Rational oracle_cardinality(const FullGroupoid& f);

}  // namespace hocard
