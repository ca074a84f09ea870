#include "hocard/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hocard {

namespace {

constexpr long long kMaxTableOrder = 512;

std::string triple_message(const char* what, int a, int b, int c) {
  std::ostringstream os;
  os << what << " at (" << a << ", " << b << ", " << c << ")";
  return os.str();
}

// Right-multiplication closure of {identity} + seeds inside a validated table.
std::vector<int> closure(const std::vector<int>& table, int order, int identity,
                         const std::vector<int>& seeds) {
  std::vector<char> in(order, 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(identity);
  for (int s : seeds) add(s);
  for (size_t i = 0; i < members.size(); ++i) {
    for (int s : seeds) {
      add(table[members[i] * order + s]);
    }
  }
  return members;
}

std::vector<int> greedy_generators(const std::vector<int>& table, int order,
                                   int identity) {
  if (order == 1) return {identity};
  std::vector<int> gens;
  size_t reached = 1;
  while (reached < static_cast<size_t>(order)) {
    int best = -1;
    size_t best_size = reached;
    for (int x = 0; x < order; ++x) {
      std::vector<int> trial = gens;
      trial.push_back(x);
      size_t size = closure(table, order, identity, trial).size();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    reached = best_size;
  }
  return gens;
}

std::string table_dsl(const std::vector<int>& table, int order) {
  std::ostringstream os;
  os << "table(";
  for (int a = 0; a < order; ++a) {
    if (a) os << ",";
    os << "[";
    for (int b = 0; b < order; ++b) {
      if (b) os << ",";
      os << table[a * order + b];
    }
    os << "]";
  }
  os << ")";
  return os.str();
}

}  // namespace

int FiniteGroup::element_order(int a) const {
  int n = 1;
  int x = a;
  while (x != identity) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a) {
    for (int b = a + 1; b < order; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup group_from_table(const std::vector<std::vector<int>>& rows,
                             const std::string& name, const std::string& dsl) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw ValidationError("group table is empty");
  if (n > kMaxTableOrder) {
    throw ResourceError("group order " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxTableOrder));
  }
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n) {
      throw ValidationError("group table row " + std::to_string(a) +
                            " has the wrong length");
    }
    for (int b = 0; b < n; ++b) {
      int v = rows[a][b];
      if (v < 0 || v >= n) {
        throw ValidationError(triple_message("table entry out of range", a, b, v));
      }
      table[a * n + b] = v;
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = table[e * n + a] == a && table[a * n + e] == a;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ValidationError("group table has no identity element");

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]]) {
          throw ValidationError(triple_message("associativity fails", a, b, c));
        }
      }
    }
  }

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a * n + b] == identity && table[b * n + a] == identity) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] < 0) {
      throw ValidationError(triple_message("no inverse", a, identity, identity));
    }
  }

  FiniteGroup g;
  g.order = n;
  g.table = std::move(table);
  g.identity = identity;
  g.inverse = std::move(inverse);
  g.generators = greedy_generators(g.table, n, identity);
  g.name = name.empty() ? "table[" + std::to_string(n) + "]" : name;
  g.dsl = dsl.empty() ? table_dsl(g.table, n) : dsl;

  std::vector<int> reach = closure(g.table, n, identity, g.generators);
  if (static_cast<int>(reach.size()) != n) {
    throw ValidationError("generator computation failed to span the group");
  }
  return g;
}

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw ValidationError("cyclic(n) needs n >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  }
  std::string d = "cyclic(" + std::to_string(n) + ")";
  return group_from_table(rows, d, d);
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw ValidationError("sym(n) needs n >= 1");
  long long fact = 1;
  for (int i = 2; i <= n; ++i) {
    fact *= i;
    if (fact > kMaxTableOrder) {
      throw ResourceError("sym(" + std::to_string(n) + ") exceeds the order cap");
    }
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  std::vector<int> comp(n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      rows[a][b] = index[comp];
    }
  }
  std::string d = "sym(" + std::to_string(n) + ")";
  return group_from_table(rows, d, d);
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw ValidationError("dihedral(n) needs n >= 1");
  if (2LL * n > kMaxTableOrder) {
    throw ResourceError("dihedral(" + std::to_string(n) + ") exceeds the order cap");
  }
  // Element a + n*s encodes r^a f^s with f r f = r^-1.
  const int m = 2 * n;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int s1 = 0; s1 < 2; ++s1) {
    for (int a1 = 0; a1 < n; ++a1) {
      for (int s2 = 0; s2 < 2; ++s2) {
        for (int a2 = 0; a2 < n; ++a2) {
          int a = s1 == 0 ? (a1 + a2) % n : (a1 - a2 + n) % n;
          int s = s1 ^ s2;
          rows[a1 + n * s1][a2 + n * s2] = a + n * s;
        }
      }
    }
  }
  std::string d = "dihedral(" + std::to_string(n) + ")";
  return group_from_table(rows, d, d);
}

FiniteGroup quaternion_group() {
  // Elements: sign*{1,i,j,k}, index = s*4 + u with s in {0: +, 1: -}.
  auto unit_mul = [](int u, int v) -> std::pair<int, int> {
    if (u == 0) return {0, v};
    if (v == 0) return {0, u};
    if (u == v) return {1, 0};                       // i*i = j*j = k*k = -1
    static const int res[4][4] = {{0, 0, 0, 0},      // unused row for unit 1
                                  {0, 0, 3, 2},      // i*j = k, i*k = j (sign below)
                                  {0, 3, 0, 1},
                                  {0, 2, 1, 0}};
    // Cyclic products ij=k, jk=i, ki=j are positive; the reversals negative.
    bool positive = (u == 1 && v == 2) || (u == 2 && v == 3) || (u == 3 && v == 1);
    return {positive ? 0 : 1, res[u][v]};
  };
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      auto [s, u] = unit_mul(a % 4, b % 4);
      int sign = (a / 4) ^ (b / 4) ^ s;
      rows[a][b] = sign * 4 + u;
    }
  }
  FiniteGroup g = group_from_table(rows, "Q8", "");
  return g;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order * h.order;
  if (n > kMaxTableOrder) throw ResourceError("direct product exceeds the order cap");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a1 = 0; a1 < g.order; ++a1) {
    for (int b1 = 0; b1 < h.order; ++b1) {
      for (int a2 = 0; a2 < g.order; ++a2) {
        for (int b2 = 0; b2 < h.order; ++b2) {
          rows[a1 * h.order + b1][a2 * h.order + b2] =
              g.mul(a1, a2) * h.order + h.mul(b1, b2);
        }
      }
    }
  }
  std::string name = "product(" + g.name + "," + h.name + ")";
  std::string dsl;
  if (!g.dsl.empty() && !h.dsl.empty()) dsl = "product(" + g.dsl + "," + h.dsl + ")";
  return group_from_table(rows, name, dsl);
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& generator_images,
                              long long max_order) {
  if (generator_images.empty()) {
    throw ValidationError("perms(...) needs at least one generator");
  }
  const size_t degree = generator_images.front().size();
  for (const auto& img : generator_images) {
    if (img.size() != degree || degree == 0) {
      throw ValidationError("permutation generators must share a positive degree");
    }
    std::vector<char> seen(degree, 0);
    for (int v : img) {
      if (v < 0 || static_cast<size_t>(v) >= degree || seen[v]) {
        throw ValidationError("malformed permutation in image notation");
      }
      seen[v] = 1;
    }
  }

  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(degree);
    for (size_t i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };

  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<std::vector<int>> elements{identity};
  std::vector<std::vector<int>> frontier{identity};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (const auto& gen : generator_images) {
        auto q = compose(p, gen);
        if (elements.insert(q).second) {
          if (static_cast<long long>(elements.size()) > std::min(max_order, kMaxTableOrder)) {
            throw ResourceError("perms(...) closure exceeds the order cap");
          }
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<int>> sorted(elements.begin(), elements.end());
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);

  const int m = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) rows[a][b] = index[compose(sorted[a], sorted[b])];
  }

  std::ostringstream d;
  d << "perms(";
  for (size_t k = 0; k < generator_images.size(); ++k) {
    if (k) d << ",";
    d << "[";
    for (size_t i = 0; i < degree; ++i) {
      if (i) d << ",";
      d << generator_images[k][i];
    }
    d << "]";
  }
  d << ")";
  return group_from_table(rows, d.str(), d.str());
}

FiniteGroup subgroup(const FiniteGroup& g, std::vector<int> elements,
                     const std::string& name) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<int> pos(g.order, -1);
  for (size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  if (elements.empty() || pos[g.identity] < 0) {
    throw ValidationError("subgroup must contain the identity");
  }
  const int m = static_cast<int>(elements.size());
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      int c = g.mul(elements[a], elements[b]);
      if (pos[c] < 0) throw ValidationError("subgroup elements are not closed");
      rows[a][b] = pos[c];
    }
  }
  return group_from_table(rows, name, "");
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> visited(g.order, 0);
  std::vector<std::vector<int>> classes;
  auto orbit_of = [&](int a) {
    std::set<int> orbit;
    for (int h = 0; h < g.order; ++h) orbit.insert(g.mul(g.mul(h, a), g.inv(h)));
    return std::vector<int>(orbit.begin(), orbit.end());
  };
  classes.push_back(orbit_of(g.identity));
  visited[g.identity] = 1;
  for (int a = 0; a < g.order; ++a) {
    if (visited[a]) continue;
    auto orbit = orbit_of(a);
    for (int x : orbit) visited[x] = 1;
    classes.push_back(std::move(orbit));
  }
  return classes;
}

FiniteGroup centralizer(const FiniteGroup& g, int s) {
  if (s < 0 || s >= g.order) throw ValidationError("centralizer element out of range");
  std::vector<int> members;
  for (int h = 0; h < g.order; ++h) {
    if (g.mul(h, s) == g.mul(s, h)) members.push_back(h);
  }
  return subgroup(g, members, "C_" + g.name + "(" + std::to_string(s) + ")");
}

FiniteGroup center(const FiniteGroup& g) {
  std::vector<int> members;
  for (int h = 0; h < g.order; ++h) {
    bool central = true;
    for (int a = 0; a < g.order && central; ++a) {
      central = g.mul(h, a) == g.mul(a, h);
    }
    if (central) members.push_back(h);
  }
  return subgroup(g, members, "Z(" + g.name + ")");
}

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                     const std::vector<int>& image) {
  if (static_cast<int>(image.size()) != g.order) return false;
  if (image[g.identity] != h.identity) return false;
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      if (image[g.mul(a, b)] != h.mul(image[a], image[b])) return false;
    }
  }
  return true;
}

WordExpressions word_expressions(const FiniteGroup& g) {
  WordExpressions w;
  w.parent.assign(g.order, -1);
  w.generator.assign(g.order, -1);
  std::vector<char> seen(g.order, 0);
  seen[g.identity] = 1;
  w.bfs_order.push_back(g.identity);
  for (size_t i = 0; i < w.bfs_order.size(); ++i) {
    int cur = w.bfs_order[i];
    for (size_t k = 0; k < g.generators.size(); ++k) {
      int nxt = g.mul(cur, g.generators[k]);
      if (!seen[nxt]) {
        seen[nxt] = 1;
        w.parent[nxt] = cur;
        w.generator[nxt] = static_cast<int>(k);
        w.bfs_order.push_back(nxt);
      }
    }
  }
  return w;
}

namespace {

// Assign images to the already-known elements of the span generated by the
// currently fixed generator images, failing on the first inconsistent
// product. When every generator is assigned this saturation visits all of
// G x G, which is exactly the full homomorphism check.
bool saturate(const FiniteGroup& g, const FiniteGroup& h, std::vector<int>& img,
              std::vector<int>& span) {
  auto step = [&](int a, int b) {
    int c = g.mul(a, b);
    int want = h.mul(img[a], img[b]);
    if (img[c] < 0) {
      img[c] = want;
      span.push_back(c);
      return true;
    }
    return img[c] == want;
  };
  // Pair element k with every element at position <= k, in both orders; new
  // elements are appended and picked up as k advances, so all pairs of the
  // final span get checked.
  for (size_t k = 0; k < span.size(); ++k) {
    for (size_t j = 0; j <= k; ++j) {
      if (!step(span[k], span[j]) || !step(span[j], span[k])) return false;
    }
  }
  return true;
}

void search_homs(const FiniteGroup& g, const FiniteGroup& h, size_t gen_index,
                 const std::vector<int>& img, const std::vector<int>& span,
                 const std::vector<std::vector<int>>& candidates,
                 std::vector<GroupHom>& out) {
  if (gen_index == g.generators.size()) {
    out.push_back(GroupHom{img});
    return;
  }
  int gen = g.generators[gen_index];
  for (int cand : candidates[gen_index]) {
    std::vector<int> next_img = img;
    std::vector<int> next_span = span;
    if (next_img[gen] >= 0) {
      if (next_img[gen] != cand) continue;
    } else {
      next_img[gen] = cand;
      next_span.push_back(gen);
    }
    if (!saturate(g, h, next_img, next_span)) continue;
    search_homs(g, h, gen_index + 1, next_img, next_span, candidates, out);
  }
}

}  // namespace

std::vector<GroupHom> enumerate_homomorphisms(const FiniteGroup& source,
                                              const FiniteGroup& target,
                                              long long budget) {
  double assignments = 1.0;
  for (size_t i = 0; i < source.generators.size(); ++i) assignments *= target.order;
  if (assignments > static_cast<double>(budget)) {
    throw ResourceError("homomorphism enumeration budget exceeded: " +
                        std::to_string(target.order) + "^" +
                        std::to_string(source.generators.size()) + " candidates");
  }

  std::vector<std::vector<int>> candidates(source.generators.size());
  for (size_t k = 0; k < source.generators.size(); ++k) {
    int ord = source.element_order(source.generators[k]);
    for (int v = 0; v < target.order; ++v) {
      if (ord % target.element_order(v) == 0) candidates[k].push_back(v);
    }
  }

  std::vector<int> img(source.order, -1);
  img[source.identity] = target.identity;
  std::vector<int> span{source.identity};

  std::vector<GroupHom> out;
  search_homs(source, target, 0, img, span, candidates, out);

  for (const auto& hom : out) {
    if (!is_homomorphism(source, target, hom.image)) {
      throw ValidationError("homomorphism enumeration produced a non-homomorphism");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HomClass> hom_classes(const FiniteGroup& source,
                                  const FiniteGroup& target, long long budget) {
  std::vector<GroupHom> homs = enumerate_homomorphisms(source, target, budget);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < homs.size(); ++i) index[homs[i].image] = static_cast<int>(i);

  std::vector<char> visited(homs.size(), 0);
  std::vector<HomClass> classes;
  long long accounted = 0;
  for (size_t i = 0; i < homs.size(); ++i) {
    if (visited[i]) continue;
    std::set<int> orbit;
    for (int h = 0; h < target.order; ++h) {
      std::vector<int> conj(source.order);
      for (int a = 0; a < source.order; ++a) {
        conj[a] = target.mul(target.mul(h, homs[i].image[a]), target.inv(h));
      }
      orbit.insert(index.at(conj));
    }
    for (int k : orbit) visited[k] = 1;

    std::vector<int> stab_members;
    for (int h = 0; h < target.order; ++h) {
      bool fixes = true;
      for (int gen : source.generators) {
        int x = homs[i].image[gen];
        if (target.mul(h, x) != target.mul(x, h)) {
          fixes = false;
          break;
        }
      }
      if (fixes) stab_members.push_back(h);
    }
    HomClass cls;
    cls.representative = homs[i];
    cls.stabilizer = subgroup(target, stab_members, "stab");
    cls.orbit_size = static_cast<long long>(orbit.size());
    if (cls.orbit_size * cls.stabilizer.order != target.order) {
      throw ValidationError("orbit-stabilizer accounting failed in hom_classes");
    }
    accounted += cls.orbit_size;
    classes.push_back(std::move(cls));
  }
  if (accounted != static_cast<long long>(homs.size())) {
    throw ValidationError("hom_classes orbits do not partition the homomorphisms");
  }
  return classes;
}

}  // namespace hocard
