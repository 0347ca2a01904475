#include "lcaforge/canonical.hpp"

#include <algorithm>
#include <cassert>

#include "lcaforge/closure.hpp"

namespace lcaforge {

namespace {

// Tarjan over the closure digraph restricted to its support. For a transitive
// reflexive closure the components are exactly the mutual-membership classes,
// but the pass does not rely on that.
struct Tarjan {
  const Relation& rel;
  const std::vector<int>& nodes;       // pair indices in the digraph
  std::vector<int> node_pos;           // pair index -> position in nodes, or -1
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0, comp_count = 0;

  explicit Tarjan(const Relation& r, const std::vector<int>& ns)
      : rel(r),
        nodes(ns),
        node_pos(r.pair_count(), -1),
        index(ns.size(), -1),
        low(ns.size(), 0),
        comp(ns.size(), -1),
        on_stack(ns.size(), false) {
    for (std::size_t i = 0; i < ns.size(); ++i) node_pos[ns[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < ns.size(); ++i)
      if (index[i] == -1) visit(static_cast<int>(i));
  }

  void visit(int v) {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    rel.uppers_of(nodes[v]).for_each([&](int q) {
      int w = node_pos[q];
      if (w < 0) return;
      if (index[w] == -1) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    });
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = comp_count;
        if (w == v) break;
      }
      ++comp_count;
    }
  }
};

}  // namespace

QuotientPoset quotient_poset(const Relation& closure) {
  QuotientPoset q;
  q.universe = closure.universe();
  std::vector<int> nodes = closure.support_bits().to_vector();
  Tarjan t(closure, nodes);

  std::vector<std::vector<int>> raw(t.comp_count);
  for (std::size_t i = 0; i < nodes.size(); ++i) raw[t.comp[i]].push_back(nodes[i]);
  for (auto& c : raw) std::sort(c.begin(), c.end());
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  q.classes = std::move(raw);

  q.class_of_pair.assign(closure.pair_count(), -1);
  for (int i = 0; i < q.class_count(); ++i)
    for (int p : q.classes[i]) q.class_of_pair[p] = i;

  q.leq.assign(q.class_count(), Bitset(q.class_count()));
  for (int i = 0; i < q.class_count(); ++i) {
    int rep_i = q.classes[i].front();
    for (int j = 0; j < q.class_count(); ++j)
      if (i == j || closure.contains(rep_i, q.classes[j].front())) q.leq[i].set(j);
  }
  return q;
}

std::vector<std::pair<int, int>> hasse_diagram(const QuotientPoset& q) {
  int n = q.class_count();
  // strict_up[i]: classes strictly above i; strict_down as transpose.
  std::vector<Bitset> strict_up(n, Bitset(n)), strict_down(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    q.leq[i].for_each([&](int j) {
      if (i != j) {
        strict_up[i].set(j);
        strict_down[j].set(i);
      }
    });
  std::vector<std::pair<int, int>> arcs;
  for (int a = 0; a < n; ++a) {
    strict_down[a].for_each([&](int b) {
      if ((strict_up[b] & strict_down[a]).any()) return;  // something between
      arcs.push_back({a, b});
    });
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

CanonicalDag canonical_dag(const Relation& r, const Relation& f) {
  ClosureResult cl = cl_f(r, f, ClosureOptions{.record_trace = false});
  if (auto w = find_y1_violation(cl.closure)) throw Y1Violation(*w);

  QuotientPoset poset = quotient_poset(cl.closure);
  const Universe& u = poset.universe;

  std::vector<DagVertex> verts(poset.class_count());
  for (int i = 0; i < poset.class_count(); ++i) {
    const auto& cls = poset.classes[i];
    TaxonPair first = u.pair_at(cls.front());
    if (first.singleton()) {
      // Under Y1 a class holding a singleton pair is that singleton alone.
      assert(cls.size() == 1);
      verts[i].taxon = first.lo;
    } else {
      verts[i].class_pairs = cls;
    }
  }

  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (auto [a, b] : hasse_diagram(poset)) arcs.push_back({a, b});

  Dag dag = Dag::from_parts(u, std::move(verts), std::move(arcs));
  std::vector<int> class_of_vertex(poset.class_count());
  for (int i = 0; i < poset.class_count(); ++i) class_of_vertex[i] = i;
  return CanonicalDag{std::move(dag), std::move(class_of_vertex), std::move(poset)};
}

}  // namespace lcaforge
