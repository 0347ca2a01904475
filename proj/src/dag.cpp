#include "lcaforge/dag.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcaforge/closure.hpp"

namespace lcaforge {

Dag Dag::from_parts(Universe u, std::vector<DagVertex> vertices,
                    std::vector<std::pair<VertexId, VertexId>> arcs) {
  Dag g;
  g.universe_ = std::move(u);
  g.vertices_ = std::move(vertices);
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("dag must have vertices");
  g.children_.assign(n, {});
  g.parents_.assign(n, {});
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
    throw std::invalid_argument("duplicate arc");
  for (auto [from, to] : arcs) {
    if (from < 0 || from >= n || to < 0 || to >= n || from == to)
      throw std::invalid_argument("arc endpoints out of range");
    g.children_[from].push_back(to);
    g.parents_[to].push_back(from);
    ++g.arc_count_;
  }

  // Topological order; rejects cycles.
  std::vector<int> indeg(n);
  for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(g.parents_[v].size());
  std::vector<VertexId> order;
  order.reserve(n);
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexId c : g.children_[order[i]])
      if (--indeg[c] == 0) order.push_back(c);
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("dag contains a directed cycle");

  // Leaves are exactly the taxa, bijectively.
  g.leaf_of_.assign(g.universe_.size(), -1);
  for (int v = 0; v < n; ++v) {
    bool leaf = g.children_[v].empty();
    const auto& taxon = g.vertices_[v].taxon;
    if (leaf != taxon.has_value())
      throw std::invalid_argument(leaf ? "unlabeled leaf" : "labeled non-leaf");
    if (taxon) {
      if (*taxon < 0 || *taxon >= g.universe_.size() || g.leaf_of_[*taxon] != -1)
        throw std::invalid_argument("leaf labels must cover X exactly once");
      g.leaf_of_[*taxon] = v;
    }
  }
  for (VertexId v : g.leaf_of_)
    if (v == -1) throw std::invalid_argument("missing leaf for a taxon");

  // Descendant sets bottom-up along reverse topological order.
  g.desc_.assign(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    g.desc_[v].set(v);
    for (VertexId c : g.children_[v]) g.desc_[v] |= g.desc_[c];
  }
  g.anc_.assign(n, Bitset(n));
  for (int v = 0; v < n; ++v)
    g.desc_[v].for_each([&](int d) { g.anc_[d].set(v); });
  return g;
}

std::vector<std::pair<VertexId, VertexId>> Dag::arcs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(arc_count_);
  for (int v = 0; v < vertex_count(); ++v)
    for (VertexId c : children_[v]) out.push_back({v, c});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> Dag::roots() const {
  std::vector<VertexId> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (parents_[v].empty()) out.push_back(v);
  return out;
}

std::vector<VertexId> Dag::lca_set(TaxonPair p) const {
  VertexId a = leaf_of_[p.lo];
  VertexId b = leaf_of_[p.hi];
  Bitset common = anc_[a] & anc_[b];
  std::vector<VertexId> mins;
  common.for_each([&](int v) {
    // v is minimal iff it dominates no other common ancestor.
    Bitset below = desc_[v] & common;
    below.reset(v);
    if (below.none()) mins.push_back(v);
  });
  return mins;
}

std::optional<VertexId> Dag::lca(TaxonPair p) const {
  auto s = lca_set(p);
  if (s.size() == 1) return s[0];
  return std::nullopt;
}

std::vector<std::optional<VertexId>> Dag::lca_table() const {
  std::vector<std::optional<VertexId>> out(universe_.pair_count());
  for (int idx = 0; idx < universe_.pair_count(); ++idx)
    out[idx] = lca(universe_.pair_at(idx));
  return out;
}

Relation induced_relation(const Dag& g) {
  Relation rel(g.universe());
  auto lcas = g.lca_table();
  int np = g.universe().pair_count();
  for (int p = 0; p < np; ++p) {
    if (!lcas[p]) continue;
    for (int q = 0; q < np; ++q) {
      if (!lcas[q]) continue;
      if (g.preceq(*lcas[p], *lcas[q])) rel.add(p, q);
    }
  }
  return rel;
}

namespace {

// Rebuilds g with two fresh parents added over every listed pair.
Dag extend_with_pairs(const Dag& g, const std::vector<TaxonPair>& pairs) {
  std::vector<DagVertex> verts;
  verts.reserve(g.vertex_count() + 2 * pairs.size());
  for (int v = 0; v < g.vertex_count(); ++v) verts.push_back(g.vertex(v));
  auto arcs = g.arcs();
  for (TaxonPair p : pairs) {
    if (p.singleton())
      throw std::invalid_argument("xy-extension requires two distinct leaves");
    VertexId x = g.leaf_of(p.lo);
    VertexId y = g.leaf_of(p.hi);
    for (int k = 0; k < 2; ++k) {
      VertexId fresh = static_cast<VertexId>(verts.size());
      verts.push_back(DagVertex{.taxon = std::nullopt,
                                .class_pairs = {},
                                .extension_pair = p,
                                .added_root = false});
      arcs.push_back({fresh, x});
      arcs.push_back({fresh, y});
    }
  }
  return Dag::from_parts(g.universe(), std::move(verts), std::move(arcs));
}

}  // namespace

Dag xy_extension(const Dag& g, TaxonPair p) { return extend_with_pairs(g, {p}); }

Dag fr_extension(const Dag& g, const Relation& r, const Relation& f) {
  Bitset todo = f.support_bits();
  todo.subtract(r.support_plus_bits());
  std::vector<TaxonPair> pairs;
  todo.for_each([&](int idx) { pairs.push_back(g.universe().pair_at(idx)); });
  if (pairs.empty()) return g;
  return extend_with_pairs(g, pairs);
}

Dag to_network(const Dag& g) {
  auto roots = g.roots();
  if (roots.size() <= 1) return g;
  std::vector<DagVertex> verts;
  verts.reserve(g.vertex_count() + 1);
  for (int v = 0; v < g.vertex_count(); ++v) verts.push_back(g.vertex(v));
  VertexId rho = static_cast<VertexId>(verts.size());
  verts.push_back(DagVertex{.taxon = std::nullopt,
                            .class_pairs = {},
                            .extension_pair = std::nullopt,
                            .added_root = true});
  auto arcs = g.arcs();
  for (VertexId r : roots) arcs.push_back({rho, r});
  return Dag::from_parts(g.universe(), std::move(verts), std::move(arcs));
}

bool is_phylogenetic(const Dag& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.children(v).size() == 1 && g.parents(v).size() <= 1) return false;
  return true;
}

bool is_two_lca_relevant(const Dag& g) {
  Bitset hit(g.vertex_count());
  for (int idx = 0; idx < g.universe().pair_count(); ++idx)
    if (auto v = g.lca(g.universe().pair_at(idx))) hit.set(*v);
  return hit.count() == g.vertex_count();
}

Dag saturated_witness(const Relation& r, const Relation& f, const Dag& canonical) {
  Relation tc = transitive_closure(r);
  ClosureResult cl = cl_f(r, f, ClosureOptions{.record_trace = false});
  if (find_y1_violation(cl.closure) || find_y2_violation(r, tc, cl.closure))
    throw std::invalid_argument("pair is not RF-realizable");
  Bitset supp_plus = r.support_plus_bits();
  std::vector<TaxonPair> pairs;
  for (int idx = 0; idx < r.pair_count(); ++idx)
    if (!supp_plus.test(idx)) pairs.push_back(r.universe().pair_at(idx));
  if (pairs.empty()) return canonical;
  return extend_with_pairs(canonical, pairs);
}

}  // namespace lcaforge
