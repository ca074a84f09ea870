#include "hocard/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hocard {

const Budgets& default_budgets() {
  static const Budgets budgets;
  return budgets;
}

SkeletalGroupoid SkeletalGroupoid::of_components(std::vector<SkeletalComponent> comps) {
  std::stable_sort(comps.begin(), comps.end(),
                   [](const SkeletalComponent& a, const SkeletalComponent& b) {
                     if (a.aut.order != b.aut.order) return a.aut.order < b.aut.order;
                     return a.label < b.label;
                   });
  for (size_t i = 1; i < comps.size(); ++i) {
    if (comps[i].label == comps[i - 1].label) {
      throw ValidationError("duplicate component label: " + comps[i].label);
    }
  }
  SkeletalGroupoid x;
  x.components = std::move(comps);
  return x;
}

Rational cardinality(const SkeletalGroupoid& x) {
  Rational total(0);
  for (const auto& c : x.components) total += Rational(1, c.aut.order);
  return total;
}

SkeletalGroupoid b_groupoid(const FiniteGroup& g) {
  return SkeletalGroupoid::of_components({{"B(" + g.name + ")", g}});
}

SkeletalGroupoid unit_groupoid() {
  return SkeletalGroupoid::of_components({{"pt", trivial_group()}});
}

SkeletalGroupoid empty_groupoid() { return SkeletalGroupoid{}; }

SkeletalGroupoid discrete_groupoid(int n) {
  if (n < 0) throw ValidationError("set(n) needs n >= 0");
  std::vector<SkeletalComponent> comps;
  for (int i = 0; i < n; ++i) {
    comps.push_back({"pt" + std::to_string(i), trivial_group()});
  }
  return SkeletalGroupoid::of_components(std::move(comps));
}

SkeletalGroupoid sum_groupoid(const SkeletalGroupoid& x, const SkeletalGroupoid& y) {
  std::vector<SkeletalComponent> comps;
  for (const auto& c : x.components) comps.push_back({"l:" + c.label, c.aut});
  for (const auto& c : y.components) comps.push_back({"r:" + c.label, c.aut});
  return SkeletalGroupoid::of_components(std::move(comps));
}

SkeletalGroupoid product_groupoid(const SkeletalGroupoid& x, const SkeletalGroupoid& y) {
  std::vector<SkeletalComponent> comps;
  for (const auto& cx : x.components) {
    for (const auto& cy : y.components) {
      comps.push_back({"(" + cx.label + "," + cy.label + ")",
                       direct_product(cx.aut, cy.aut)});
    }
  }
  return SkeletalGroupoid::of_components(std::move(comps));
}

SkeletalGroupoid functor_groupoid(const SkeletalGroupoid& x, const SkeletalGroupoid& y,
                                  const Budgets& budgets) {
  bool first = true;
  SkeletalGroupoid result = unit_groupoid();
  for (const auto& cx : x.components) {
    std::vector<SkeletalComponent> comps;
    for (const auto& cy : y.components) {
      auto classes = hom_classes(cx.aut, cy.aut, budgets.hom_budget);
      for (size_t k = 0; k < classes.size(); ++k) {
        comps.push_back({"[" + cx.label + "->" + cy.label + "#" + std::to_string(k) + "]",
                         classes[k].stabilizer});
      }
    }
    auto factor = SkeletalGroupoid::of_components(std::move(comps));
    result = first ? factor : product_groupoid(result, factor);
    first = false;
  }
  return result;
}

void FullGroupoid::validate() const {
  const int n = num_objects();
  const int m = num_morphisms();
  {
    std::set<std::string> labels(object_labels.begin(), object_labels.end());
    if (static_cast<int>(labels.size()) != n) {
      throw ValidationError("explicit groupoid has duplicate object labels");
    }
  }
  if (static_cast<int>(identity_at.size()) != n ||
      static_cast<int>(inverse_of.size()) != m ||
      compose_table.size() != static_cast<size_t>(m) * m) {
    throw ValidationError("explicit groupoid has inconsistent field sizes");
  }
  for (const auto& mor : morphisms) {
    if (mor.src < 0 || mor.src >= n || mor.dst < 0 || mor.dst >= n) {
      throw ValidationError("morphism endpoint out of range");
    }
  }
  for (int o = 0; o < n; ++o) {
    int id = identity_at[o];
    if (id < 0 || id >= m || morphisms[id].src != o || morphisms[id].dst != o) {
      throw ValidationError("object lacks its identity morphism");
    }
  }

  std::vector<std::vector<int>> by_src(n), by_dst(n);
  for (int i = 0; i < m; ++i) {
    by_src[morphisms[i].src].push_back(i);
    by_dst[morphisms[i].dst].push_back(i);
  }

  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      int c = compose(f, g);
      bool composable = morphisms[g].dst == morphisms[f].src;
      if (!composable) {
        if (c != -1) throw ValidationError("composition defined on non-composable pair");
        continue;
      }
      if (c < 0 || c >= m || morphisms[c].src != morphisms[g].src ||
          morphisms[c].dst != morphisms[f].dst) {
        throw ValidationError("composition violates source/target bookkeeping");
      }
    }
  }

  for (int f = 0; f < m; ++f) {
    if (compose(f, identity_at[morphisms[f].src]) != f ||
        compose(identity_at[morphisms[f].dst], f) != f) {
      throw ValidationError("identity morphism is not neutral");
    }
    int inv = inverse_of[f];
    if (inv < 0 || inv >= m || compose(inv, f) != identity_at[morphisms[f].src] ||
        compose(f, inv) != identity_at[morphisms[f].dst]) {
      throw ValidationError("morphism without a two-sided inverse");
    }
  }

  // Associativity over composable triples only.
  for (int g = 0; g < m; ++g) {
    for (int f : by_src[morphisms[g].dst]) {
      int fg = compose(f, g);
      for (int h : by_dst[morphisms[g].src]) {
        if (compose(fg, h) != compose(f, compose(g, h))) {
          throw ValidationError("composition is not associative");
        }
      }
    }
  }
}

std::vector<int> FullGroupoid::hom_set(int src, int dst) const {
  std::vector<int> out;
  for (int i = 0; i < num_morphisms(); ++i) {
    if (morphisms[i].src == src && morphisms[i].dst == dst) out.push_back(i);
  }
  return out;
}

std::vector<int> FullGroupoid::endos_at(int obj) const { return hom_set(obj, obj); }

std::vector<std::vector<int>> FullGroupoid::object_components() const {
  const int n = num_objects();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& mor : morphisms) {
    int a = find(mor.src);
    int b = find(mor.dst);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> buckets;
  for (int o = 0; o < n; ++o) buckets[find(o)].push_back(o);
  std::vector<std::vector<int>> out;
  for (auto& [rep, members] : buckets) out.push_back(std::move(members));
  return out;
}

FullGroupoid make_full_groupoid(std::vector<std::string> object_labels,
                                std::vector<FullGroupoid::Morphism> morphisms,
                                std::vector<int> identity_at,
                                const std::function<int(int, int)>& comp,
                                const Budgets& budgets) {
  if (static_cast<long long>(object_labels.size()) > budgets.max_objects) {
    throw ResourceError("explicit groupoid exceeds the object budget");
  }
  if (static_cast<long long>(morphisms.size()) > budgets.max_morphisms) {
    throw ResourceError("explicit groupoid exceeds the morphism budget (" +
                        std::to_string(morphisms.size()) + " > " +
                        std::to_string(budgets.max_morphisms) + ")");
  }
  FullGroupoid f;
  f.object_labels = std::move(object_labels);
  f.morphisms = std::move(morphisms);
  f.identity_at = std::move(identity_at);
  const int m = f.num_morphisms();
  f.compose_table.assign(static_cast<size_t>(m) * m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (f.morphisms[b].dst == f.morphisms[a].src) {
        f.compose_table[static_cast<size_t>(a) * m + b] = comp(a, b);
      }
    }
  }
  f.inverse_of.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b : f.hom_set(f.morphisms[a].dst, f.morphisms[a].src)) {
      if (f.compose(b, a) == f.identity_at[f.morphisms[a].src] &&
          f.compose(a, b) == f.identity_at[f.morphisms[a].dst]) {
        f.inverse_of[a] = b;
        break;
      }
    }
  }
  f.validate();
  return f;
}

namespace {

FullGroupoid discrete_full_groupoid(std::vector<std::string> labels,
                                    const Budgets& budgets) {
  std::vector<FullGroupoid::Morphism> mors;
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    mors.push_back({i, i});
    ids.push_back(i);
  }
  return make_full_groupoid(std::move(labels), std::move(mors), std::move(ids),
                            [](int a, int) { return a; }, budgets);
}

}  // namespace

FullGroupoid full_of_skeletal(const SkeletalGroupoid& x, const Budgets& budgets) {
  std::vector<std::string> labels;
  std::vector<FullGroupoid::Morphism> mors;
  std::vector<int> ids;
  std::vector<std::pair<int, int>> owner;  // morphism -> (component, group element)
  std::vector<int> offset;
  for (int c = 0; c < static_cast<int>(x.components.size()); ++c) {
    const FiniteGroup& g = x.components[c].aut;
    labels.push_back(x.components[c].label);
    offset.push_back(static_cast<int>(mors.size()));
    ids.push_back(static_cast<int>(mors.size()) + g.identity);
    for (int e = 0; e < g.order; ++e) {
      mors.push_back({c, c});
      owner.push_back({c, e});
    }
  }
  auto comp = [&x, owner, offset](int a, int b) {
    auto [c, ga] = owner[a];
    int gb = owner[b].second;
    return offset[c] + x.components[c].aut.mul(ga, gb);
  };
  return make_full_groupoid(std::move(labels), std::move(mors), std::move(ids), comp,
                            budgets);
}

FullGroupoid full_product(const std::vector<FullGroupoid>& factors,
                          const Budgets& budgets) {
  if (factors.empty()) return discrete_full_groupoid({"()"}, budgets);

  long long nobj = 1;
  long long nmor = 1;
  for (const auto& f : factors) {
    nobj *= f.num_objects();
    nmor *= f.num_morphisms();
    if (nobj > budgets.max_objects || nmor > budgets.max_morphisms) {
      throw ResourceError("explicit product exceeds budgets");
    }
  }
  if (nobj == 0) {
    return make_full_groupoid({}, {}, {}, [](int, int) { return -1; }, budgets);
  }

  const int k = static_cast<int>(factors.size());
  auto decode = [&](long long index, bool morphism) {
    std::vector<int> digits(k);
    for (int i = k - 1; i >= 0; --i) {
      int radix = morphism ? factors[i].num_morphisms() : factors[i].num_objects();
      digits[i] = static_cast<int>(index % radix);
      index /= radix;
    }
    return digits;
  };
  auto encode_obj = [&](const std::vector<int>& digits) {
    long long index = 0;
    for (int i = 0; i < k; ++i) index = index * factors[i].num_objects() + digits[i];
    return static_cast<int>(index);
  };
  auto encode_mor = [&](const std::vector<int>& digits) {
    long long index = 0;
    for (int i = 0; i < k; ++i) index = index * factors[i].num_morphisms() + digits[i];
    return static_cast<int>(index);
  };

  std::vector<std::string> labels(nobj);
  for (long long o = 0; o < nobj; ++o) {
    auto digits = decode(o, false);
    std::string label = "(";
    for (int i = 0; i < k; ++i) {
      if (i) label += ",";
      label += factors[i].object_labels[digits[i]];
    }
    labels[o] = label + ")";
  }

  std::vector<FullGroupoid::Morphism> mors(nmor);
  for (long long m = 0; m < nmor; ++m) {
    auto digits = decode(m, true);
    std::vector<int> src(k), dst(k);
    for (int i = 0; i < k; ++i) {
      src[i] = factors[i].morphisms[digits[i]].src;
      dst[i] = factors[i].morphisms[digits[i]].dst;
    }
    mors[m] = {encode_obj(src), encode_obj(dst)};
  }

  std::vector<int> ids(nobj);
  for (long long o = 0; o < nobj; ++o) {
    auto digits = decode(o, false);
    std::vector<int> idm(k);
    for (int i = 0; i < k; ++i) idm[i] = factors[i].identity_at[digits[i]];
    ids[o] = encode_mor(idm);
  }

  auto comp = [&factors, decode, encode_mor, k](int a, int b) {
    auto da = decode(a, true);
    auto db = decode(b, true);
    std::vector<int> dc(k);
    for (int i = 0; i < k; ++i) dc[i] = factors[i].compose(da[i], db[i]);
    return encode_mor(dc);
  };
  return make_full_groupoid(std::move(labels), std::move(mors), std::move(ids), comp,
                            budgets);
}

GroupoidAutomorphism identity_automorphism(const FullGroupoid& f) {
  GroupoidAutomorphism a;
  a.obj.resize(f.num_objects());
  a.mor.resize(f.num_morphisms());
  std::iota(a.obj.begin(), a.obj.end(), 0);
  std::iota(a.mor.begin(), a.mor.end(), 0);
  return a;
}

GroupoidAutomorphism compose_automorphisms(const GroupoidAutomorphism& outer,
                                           const GroupoidAutomorphism& inner) {
  GroupoidAutomorphism out;
  out.obj.resize(inner.obj.size());
  out.mor.resize(inner.mor.size());
  for (size_t i = 0; i < inner.obj.size(); ++i) out.obj[i] = outer.obj[inner.obj[i]];
  for (size_t i = 0; i < inner.mor.size(); ++i) out.mor[i] = outer.mor[inner.mor[i]];
  return out;
}

GroupoidAutomorphism inverse_automorphism(const GroupoidAutomorphism& a) {
  GroupoidAutomorphism out;
  out.obj.resize(a.obj.size());
  out.mor.resize(a.mor.size());
  for (size_t i = 0; i < a.obj.size(); ++i) out.obj[a.obj[i]] = static_cast<int>(i);
  for (size_t i = 0; i < a.mor.size(); ++i) out.mor[a.mor[i]] = static_cast<int>(i);
  return out;
}

bool is_automorphism(const FullGroupoid& f, const GroupoidAutomorphism& a) {
  const int n = f.num_objects();
  const int m = f.num_morphisms();
  if (static_cast<int>(a.obj.size()) != n || static_cast<int>(a.mor.size()) != m) {
    return false;
  }
  std::vector<char> seen_obj(n, 0), seen_mor(m, 0);
  for (int v : a.obj) {
    if (v < 0 || v >= n || seen_obj[v]) return false;
    seen_obj[v] = 1;
  }
  for (int v : a.mor) {
    if (v < 0 || v >= m || seen_mor[v]) return false;
    seen_mor[v] = 1;
  }
  for (int i = 0; i < m; ++i) {
    if (f.morphisms[a.mor[i]].src != a.obj[f.morphisms[i].src] ||
        f.morphisms[a.mor[i]].dst != a.obj[f.morphisms[i].dst]) {
      return false;
    }
  }
  for (int o = 0; o < n; ++o) {
    if (a.mor[f.identity_at[o]] != f.identity_at[a.obj[o]]) return false;
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      int c = f.compose(x, y);
      if (c < 0) continue;
      if (f.compose(a.mor[x], a.mor[y]) != a.mor[c]) return false;
    }
  }
  return true;
}

void DependentGroupoid::validate() const {
  if (fibers.size() != base.components.size()) {
    throw ValidationError("dependent groupoid fiber count mismatch");
  }
  for (size_t c = 0; c < fibers.size(); ++c) {
    const FiniteGroup& g = base.components[c].aut;
    const auto& fiber = fibers[c];
    if (static_cast<int>(fiber.action.size()) != g.order) {
      throw ValidationError("action must assign one automorphism per group element");
    }
    for (int e = 0; e < g.order; ++e) {
      if (!is_automorphism(fiber.fiber, fiber.action[e])) {
        throw ValidationError("action image is not a groupoid automorphism");
      }
    }
    if (!(fiber.action[g.identity] == identity_automorphism(fiber.fiber))) {
      throw ValidationError("action does not send the identity to the identity");
    }
    for (int x = 0; x < g.order; ++x) {
      for (int y = 0; y < g.order; ++y) {
        auto composed = compose_automorphisms(fiber.action[x], fiber.action[y]);
        if (!(composed == fiber.action[g.mul(x, y)])) {
          throw ValidationError("action is not a strict homomorphism");
        }
      }
    }
  }
}

DependentGroupoid constant_family(const SkeletalGroupoid& base,
                                  const SkeletalGroupoid& fiber,
                                  const Budgets& budgets) {
  FullGroupoid f = full_of_skeletal(fiber, budgets);
  DependentGroupoid p;
  p.base = base;
  for (size_t c = 0; c < base.components.size(); ++c) {
    DependentFiber df;
    df.fiber = f;
    df.action.assign(base.components[c].aut.order, identity_automorphism(f));
    p.fibers.push_back(std::move(df));
  }
  p.validate();
  return p;
}

namespace {

DependentGroupoid self_action_family(const SkeletalGroupoid& base,
                                     const std::function<int(const FiniteGroup&, int, int)>& act) {
  DependentGroupoid p;
  p.base = base;
  for (const auto& comp : base.components) {
    const FiniteGroup& g = comp.aut;
    std::vector<std::string> labels;
    for (int e = 0; e < g.order; ++e) labels.push_back("g" + std::to_string(e));
    DependentFiber df;
    df.fiber = discrete_full_groupoid(std::move(labels), default_budgets());
    for (int e = 0; e < g.order; ++e) {
      GroupoidAutomorphism a;
      a.obj.resize(g.order);
      for (int h = 0; h < g.order; ++h) a.obj[h] = act(g, e, h);
      a.mor = a.obj;
      df.action.push_back(std::move(a));
    }
    p.fibers.push_back(std::move(df));
  }
  p.validate();
  return p;
}

}  // namespace

DependentGroupoid loop_family(const SkeletalGroupoid& base) {
  return self_action_family(base, [](const FiniteGroup& g, int e, int h) {
    return g.mul(g.mul(e, h), g.inv(e));
  });
}

DependentGroupoid translation_family(const SkeletalGroupoid& base) {
  return self_action_family(
      base, [](const FiniteGroup& g, int e, int h) { return g.mul(e, h); });
}

std::vector<GroupoidAutomorphism> expand_generator_action(
    const FiniteGroup& g, const FullGroupoid& fiber,
    const std::vector<GroupoidAutomorphism>& generator_action) {
  if (generator_action.size() != g.generators.size()) {
    throw ValidationError("action must give one automorphism per generator");
  }
  WordExpressions w = word_expressions(g);
  std::vector<GroupoidAutomorphism> action(g.order, identity_automorphism(fiber));
  for (int e : w.bfs_order) {
    if (e == g.identity) continue;
    action[e] = compose_automorphisms(action[w.parent[e]],
                                      generator_action[w.generator[e]]);
  }
  return action;
}

DependentGroupoid discrete_family(
    const SkeletalGroupoid& base, const std::vector<int>& fiber_sizes,
    const std::vector<std::vector<std::vector<int>>>& generator_object_maps) {
  if (fiber_sizes.size() != base.components.size() ||
      generator_object_maps.size() != base.components.size()) {
    throw ValidationError("discrete family needs one fiber spec per base component");
  }
  DependentGroupoid p;
  p.base = base;
  for (size_t c = 0; c < base.components.size(); ++c) {
    const FiniteGroup& g = base.components[c].aut;
    if (fiber_sizes[c] < 0) throw ValidationError("negative fiber size");
    std::vector<std::string> labels;
    for (int i = 0; i < fiber_sizes[c]; ++i) labels.push_back("p" + std::to_string(i));
    DependentFiber df;
    df.fiber = discrete_full_groupoid(std::move(labels), default_budgets());

    std::vector<GroupoidAutomorphism> gen_action;
    std::vector<std::vector<int>> maps = generator_object_maps[c];
    if (maps.empty() && g.is_trivial()) {
      std::vector<int> id(fiber_sizes[c]);
      std::iota(id.begin(), id.end(), 0);
      maps.push_back(std::move(id));
    }
    if (maps.size() != g.generators.size()) {
      throw ValidationError("discrete family action needs one permutation per generator (" +
                            std::to_string(g.generators.size()) + " expected)");
    }
    for (const auto& perm : maps) {
      if (static_cast<int>(perm.size()) != fiber_sizes[c]) {
        throw ValidationError("action permutation degree does not match the fiber size");
      }
      GroupoidAutomorphism a;
      a.obj = perm;
      a.mor = perm;
      gen_action.push_back(std::move(a));
    }
    df.action = expand_generator_action(g, df.fiber, gen_action);
    p.fibers.push_back(std::move(df));
  }
  p.validate();
  return p;
}

FullGroupoid grothendieck_sum(const DependentGroupoid& p, const Budgets& budgets) {
  p.validate();
  std::vector<std::string> labels;
  std::vector<FullGroupoid::Morphism> mors;
  std::vector<int> ids;

  struct MorInfo {
    int comp;
    int g;
    int fiber_mor;
  };
  std::vector<MorInfo> info;
  std::vector<int> obj_offset, mor_offset;

  for (size_t c = 0; c < p.base.components.size(); ++c) {
    const FiniteGroup& g = p.base.components[c].aut;
    const FullGroupoid& fiber = p.fibers[c].fiber;
    const auto& action = p.fibers[c].action;
    obj_offset.push_back(static_cast<int>(labels.size()));
    mor_offset.push_back(static_cast<int>(mors.size()));
    for (int u = 0; u < fiber.num_objects(); ++u) {
      labels.push_back(p.base.components[c].label + "." + fiber.object_labels[u]);
    }
    for (int u = 0; u < fiber.num_objects(); ++u) {
      ids.push_back(mor_offset[c] + g.identity * fiber.num_morphisms() +
                    fiber.identity_at[u]);
    }
    // A morphism u -> v is (e, m) with m : e.u -> v, i.e. u = e^-1(src m).
    for (int e = 0; e < g.order; ++e) {
      const GroupoidAutomorphism inv_act = inverse_automorphism(action[e]);
      for (int m = 0; m < fiber.num_morphisms(); ++m) {
        int u = inv_act.obj[fiber.morphisms[m].src];
        int v = fiber.morphisms[m].dst;
        mors.push_back({obj_offset[c] + u, obj_offset[c] + v});
        info.push_back({static_cast<int>(c), e, m});
      }
    }
  }

  auto comp = [&p, info, mor_offset](int a, int b) {
    const MorInfo& ma = info[a];  // second leg (h, n)
    const MorInfo& mb = info[b];  // first leg (g, m)
    const FiniteGroup& g = p.base.components[ma.comp].aut;
    const FullGroupoid& fiber = p.fibers[ma.comp].fiber;
    const auto& action = p.fibers[ma.comp].action;
    int ge = g.mul(ma.g, mb.g);
    int fm = fiber.compose(ma.fiber_mor, action[ma.g].mor[mb.fiber_mor]);
    return mor_offset[ma.comp] + ge * fiber.num_morphisms() + fm;
  };
  return make_full_groupoid(std::move(labels), std::move(mors), std::move(ids), comp,
                            budgets);
}

namespace {

// Homotopy fixed points of one component: objects (u, eta) with
// eta_g : g.u -> u, eta_{gh} = eta_g o g.eta_h, eta_e = id; morphisms the
// fiber morphisms m : u -> u' with m o eta_g = eta'_g o g.m for all g.
FullGroupoid fixed_point_groupoid(const FiniteGroup& g, const FullGroupoid& fiber,
                                  const std::vector<GroupoidAutomorphism>& action,
                                  const Budgets& budgets) {
  WordExpressions words = word_expressions(g);
  struct Section {
    int u;
    std::vector<int> eta;  // group element -> fiber morphism id
  };
  std::vector<Section> sections;
  long long nodes = 0;

  for (int u = 0; u < fiber.num_objects(); ++u) {
    std::vector<std::vector<int>> candidates;
    for (int gen : g.generators) {
      candidates.push_back(fiber.hom_set(action[gen].obj[u], u));
    }
    std::vector<int> choice(candidates.size(), 0);
    std::vector<int> eta(g.order, -1);

    std::function<void(size_t)> assign = [&](size_t k) {
      if (++nodes > budgets.max_candidates) {
        throw ResourceError("cocycle enumeration exceeds the candidate budget");
      }
      if (k < candidates.size()) {
        for (int cand : candidates[k]) {
          choice[k] = cand;
          assign(k + 1);
        }
        return;
      }
      eta.assign(g.order, -1);
      eta[g.identity] = fiber.identity_at[u];
      for (int e : words.bfs_order) {
        if (e == g.identity) continue;
        int parent = words.parent[e];
        int gen_mor = choice[words.generator[e]];
        eta[e] = fiber.compose(eta[parent], action[parent].mor[gen_mor]);
      }
      // The word extension must reproduce the chosen generator values (it
      // cannot when a generator is the identity and the choice is not).
      for (size_t i = 0; i < g.generators.size(); ++i) {
        if (eta[g.generators[i]] != choice[i]) return;
      }
      for (int x = 0; x < g.order; ++x) {
        for (int y = 0; y < g.order; ++y) {
          if (eta[g.mul(x, y)] != fiber.compose(eta[x], action[x].mor[eta[y]])) {
            return;
          }
        }
      }
      sections.push_back({u, eta});
    };
    assign(0);
  }

  std::vector<std::string> labels;
  for (const auto& s : sections) {
    std::string sig;
    for (size_t k = 0; k < g.generators.size(); ++k) {
      if (k) sig += ",";
      sig += std::to_string(s.eta[g.generators[k]]);
    }
    labels.push_back(fiber.object_labels[s.u] + "{" + sig + "}");
  }

  struct SecMor {
    int from;
    int to;
    int m;  // underlying fiber morphism
  };
  std::vector<SecMor> mors_data;
  std::map<std::tuple<int, int, int>, int> mor_index;
  std::vector<FullGroupoid::Morphism> mors;
  std::vector<int> ids(sections.size(), -1);

  for (size_t i = 0; i < sections.size(); ++i) {
    for (size_t j = 0; j < sections.size(); ++j) {
      for (int m : fiber.hom_set(sections[i].u, sections[j].u)) {
        bool natural = true;
        for (int e = 0; e < g.order && natural; ++e) {
          natural = fiber.compose(m, sections[i].eta[e]) ==
                    fiber.compose(sections[j].eta[e], action[e].mor[m]);
        }
        if (!natural) continue;
        int id = static_cast<int>(mors_data.size());
        mors_data.push_back({static_cast<int>(i), static_cast<int>(j), m});
        mor_index[{static_cast<int>(i), static_cast<int>(j), m}] = id;
        mors.push_back({static_cast<int>(i), static_cast<int>(j)});
        if (i == j && m == fiber.identity_at[sections[i].u]) ids[i] = id;
        if (static_cast<long long>(mors_data.size()) > budgets.max_morphisms) {
          throw ResourceError("fixed-point groupoid exceeds the morphism budget");
        }
      }
    }
  }

  auto comp = [&fiber, mors_data, &mor_index](int a, int b) {
    const SecMor& fa = mors_data[a];
    const SecMor& fb = mors_data[b];
    int m = fiber.compose(fa.m, fb.m);
    auto it = mor_index.find({fb.from, fa.to, m});
    if (it == mor_index.end()) {
      throw ValidationError("fixed-point morphisms are not closed under composition");
    }
    return it->second;
  };
  return make_full_groupoid(std::move(labels), std::move(mors), std::move(ids), comp,
                            budgets);
}

}  // namespace

FullGroupoid dependent_product(const DependentGroupoid& p, const Budgets& budgets) {
  p.validate();
  std::vector<FullGroupoid> factors;
  for (size_t c = 0; c < p.base.components.size(); ++c) {
    factors.push_back(fixed_point_groupoid(p.base.components[c].aut, p.fibers[c].fiber,
                                           p.fibers[c].action, budgets));
  }
  return full_product(factors, budgets);
}

ExplicitFunctorGroupoid explicit_functor_groupoid(const FullGroupoid& a,
                                                  const FullGroupoid& b,
                                                  const Budgets& budgets) {
  const int na = a.num_objects();
  const int ma = a.num_morphisms();
  long long nodes = 0;

  std::vector<FunctorData> functors;
  std::vector<int> obj_map(na, -1);
  std::vector<int> mor_map(ma, -1);

  std::function<void(int)> assign_mor = [&](int m) {
    if (++nodes > budgets.max_candidates) {
      throw ResourceError("functor enumeration exceeds the candidate budget");
    }
    if (m == ma) {
      // The incremental checks below skip compositions whose composite has a
      // larger index than both factors; settle those here.
      for (int x = 0; x < ma; ++x) {
        for (int y = 0; y < ma; ++y) {
          int c = a.compose(x, y);
          if (c >= 0 && b.compose(mor_map[x], mor_map[y]) != mor_map[c]) return;
        }
      }
      functors.push_back({obj_map, mor_map});
      return;
    }
    std::vector<int> cands;
    bool is_identity = false;
    for (int o = 0; o < na; ++o) {
      if (a.identity_at[o] == m) {
        is_identity = true;
        cands.push_back(b.identity_at[obj_map[o]]);
        break;
      }
    }
    if (!is_identity) {
      cands = b.hom_set(obj_map[a.morphisms[m].src], obj_map[a.morphisms[m].dst]);
    }
    for (int cand : cands) {
      mor_map[m] = cand;
      bool ok = true;
      // Check every composition whose factors and composite are all assigned.
      for (int x = 0; x <= m && ok; ++x) {
        if (mor_map[x] < 0) continue;
        for (auto [f, g] : {std::pair{m, x}, std::pair{x, m}}) {
          int c = a.compose(f, g);
          if (c >= 0 && c <= m && mor_map[c] >= 0 &&
              b.compose(mor_map[f], mor_map[g]) != mor_map[c]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) assign_mor(m + 1);
    }
    mor_map[m] = -1;
  };

  std::function<void(int)> assign_obj = [&](int o) {
    if (++nodes > budgets.max_candidates) {
      throw ResourceError("functor enumeration exceeds the candidate budget");
    }
    if (o == na) {
      assign_mor(0);
      return;
    }
    for (int cand = 0; cand < b.num_objects(); ++cand) {
      obj_map[o] = cand;
      assign_obj(o + 1);
    }
    obj_map[o] = -1;
  };
  assign_obj(0);
  std::sort(functors.begin(), functors.end());

  std::vector<NatTransData> transformations;
  for (size_t i = 0; i < functors.size(); ++i) {
    for (size_t j = 0; j < functors.size(); ++j) {
      std::vector<int> comps(na, -1);
      std::function<void(int)> assign = [&](int o) {
        if (++nodes > budgets.max_candidates) {
          throw ResourceError("natural transformation enumeration exceeds the budget");
        }
        if (o == na) {
          transformations.push_back(
              {static_cast<int>(i), static_cast<int>(j), comps});
          if (static_cast<long long>(transformations.size()) > budgets.max_morphisms) {
            throw ResourceError("functor groupoid exceeds the morphism budget");
          }
          return;
        }
        for (int cand : b.hom_set(functors[i].obj[o], functors[j].obj[o])) {
          comps[o] = cand;
          bool ok = true;
          for (int m = 0; m < ma && ok; ++m) {
            int s = a.morphisms[m].src;
            int d = a.morphisms[m].dst;
            if (comps[s] < 0 || comps[d] < 0) continue;
            ok = b.compose(comps[d], functors[i].mor[m]) ==
                 b.compose(functors[j].mor[m], comps[s]);
          }
          if (ok) assign(o + 1);
        }
        comps[o] = -1;
      };
      assign(0);
    }
  }

  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> nt_index;
  std::vector<FullGroupoid::Morphism> mors;
  std::vector<int> ids(functors.size(), -1);
  for (size_t t = 0; t < transformations.size(); ++t) {
    const auto& nt = transformations[t];
    nt_index[{{nt.from, nt.to}, nt.components}] = static_cast<int>(t);
    mors.push_back({nt.from, nt.to});
    bool is_id = nt.from == nt.to;
    for (int o = 0; o < na && is_id; ++o) {
      is_id = nt.components[o] == b.identity_at[functors[nt.from].obj[o]];
    }
    if (is_id) ids[nt.from] = static_cast<int>(t);
  }

  std::vector<std::string> labels;
  for (size_t i = 0; i < functors.size(); ++i) labels.push_back("F" + std::to_string(i));

  auto comp = [&b, &transformations, &nt_index, na](int x, int y) {
    const NatTransData& tx = transformations[x];
    const NatTransData& ty = transformations[y];
    std::vector<int> comps(na);
    for (int o = 0; o < na; ++o) {
      comps[o] = b.compose(tx.components[o], ty.components[o]);
    }
    auto it = nt_index.find({{ty.from, tx.to}, comps});
    if (it == nt_index.end()) {
      throw ValidationError("natural transformations are not closed under composition");
    }
    return it->second;
  };

  ExplicitFunctorGroupoid out;
  out.functors = functors;
  out.transformations = transformations;
  out.groupoid = make_full_groupoid(std::move(labels), std::move(mors), std::move(ids),
                                    comp, budgets);
  return out;
}

namespace {

void require_same_base(const DependentGroupoid& p, const DependentGroupoid& q) {
  bool same = p.base.components.size() == q.base.components.size();
  for (size_t c = 0; same && c < p.base.components.size(); ++c) {
    same = p.base.components[c].label == q.base.components[c].label &&
           p.base.components[c].aut.table == q.base.components[c].aut.table;
  }
  if (!same) throw ValidationError("families must live over the same base");
}

}  // namespace

FullGroupoid nat_trans_groupoid(const DependentGroupoid& p, const DependentGroupoid& q,
                                const Budgets& budgets) {
  p.validate();
  q.validate();
  require_same_base(p, q);

  DependentGroupoid hom_family;
  hom_family.base = p.base;
  for (size_t c = 0; c < p.base.components.size(); ++c) {
    const FiniteGroup& g = p.base.components[c].aut;
    ExplicitFunctorGroupoid efg =
        explicit_functor_groupoid(p.fibers[c].fiber, q.fibers[c].fiber, budgets);

    std::map<FunctorData, int> functor_index;
    for (size_t i = 0; i < efg.functors.size(); ++i) {
      functor_index[efg.functors[i]] = static_cast<int>(i);
    }
    std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> nt_index;
    for (size_t t = 0; t < efg.transformations.size(); ++t) {
      const auto& nt = efg.transformations[t];
      nt_index[{{nt.from, nt.to}, nt.components}] = static_cast<int>(t);
    }

    DependentFiber df;
    df.fiber = efg.groupoid;
    for (int e = 0; e < g.order; ++e) {
      const GroupoidAutomorphism& qa = q.fibers[c].action[e];
      const GroupoidAutomorphism pa_inv =
          inverse_automorphism(p.fibers[c].action[e]);
      GroupoidAutomorphism a;

      auto transport_functor = [&](const FunctorData& f) {
        FunctorData out;
        out.obj.resize(f.obj.size());
        out.mor.resize(f.mor.size());
        for (size_t u = 0; u < f.obj.size(); ++u) {
          out.obj[u] = qa.obj[f.obj[pa_inv.obj[u]]];
        }
        for (size_t m = 0; m < f.mor.size(); ++m) {
          out.mor[m] = qa.mor[f.mor[pa_inv.mor[m]]];
        }
        return out;
      };

      for (const auto& f : efg.functors) {
        auto it = functor_index.find(transport_functor(f));
        if (it == functor_index.end()) {
          throw ValidationError("functor transport left the functor groupoid");
        }
        a.obj.push_back(it->second);
      }
      for (const auto& nt : efg.transformations) {
        std::vector<int> comps(nt.components.size());
        for (size_t u = 0; u < comps.size(); ++u) {
          comps[u] = qa.mor[nt.components[pa_inv.obj[u]]];
        }
        auto it = nt_index.find({{a.obj[nt.from], a.obj[nt.to]}, comps});
        if (it == nt_index.end()) {
          throw ValidationError("transformation transport left the functor groupoid");
        }
        a.mor.push_back(it->second);
      }
      df.action.push_back(std::move(a));
    }
    hom_family.fibers.push_back(std::move(df));
  }
  return dependent_product(hom_family, budgets);
}

SkeletalGroupoid skeletalize(const FullGroupoid& f) {
  std::vector<SkeletalComponent> comps;
  for (const auto& members : f.object_components()) {
    int rep = members.front();
    std::vector<int> endos = f.endos_at(rep);
    std::map<int, int> pos;
    for (size_t i = 0; i < endos.size(); ++i) pos[endos[i]] = static_cast<int>(i);
    const int k = static_cast<int>(endos.size());
    std::vector<std::vector<int>> rows(k, std::vector<int>(k));
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) {
        rows[x][y] = pos.at(f.compose(endos[x], endos[y]));
      }
    }
    comps.push_back({f.object_labels[rep],
                     group_from_table(rows, "aut(" + f.object_labels[rep] + ")", "")});
  }
  return SkeletalGroupoid::of_components(std::move(comps));
}

Rational oracle_cardinality(const FullGroupoid& f) {
  Rational total(0);
  for (const auto& members : f.object_components()) {
    long long cls = static_cast<long long>(members.size());
    for (int o : members) {
      long long aut = static_cast<long long>(f.endos_at(o).size());
      total += Rational(1, cls * aut);
    }
  }
  return total;
}

}  // namespace hocard
