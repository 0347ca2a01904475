#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcaforge/bitset.hpp"
#include "lcaforge/relation.hpp"
#include "lcaforge/taxa.hpp"

namespace lcaforge {

using VertexId = int;

struct DagVertex {
  std::optional<int> taxon;                  // leaf label; exactly the leaves carry one
  std::vector<int> class_pairs;              // canonical-class payload (pair indices)
  std::optional<TaxonPair> extension_pair;   // set on vertices created by an xy-extension
  bool added_root = false;                   // synthetic root added when rooting
};

// Immutable DAG whose leaves are exactly the taxa of the universe, one per
// taxon. Construction validates acyclicity and the leaf labelling, then
// precomputes reachability so that v preceq u queries are O(1).
class Dag {
 public:
  // Throws std::invalid_argument on a cycle, a duplicate arc, an unlabeled
  // leaf, a labeled non-leaf, or a leaf set differing from X.
  static Dag from_parts(Universe u, std::vector<DagVertex> vertices,
                        std::vector<std::pair<VertexId, VertexId>> arcs);

  const Universe& universe() const { return universe_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const DagVertex& vertex(VertexId v) const { return vertices_[v]; }
  const std::vector<VertexId>& children(VertexId v) const { return children_[v]; }
  const std::vector<VertexId>& parents(VertexId v) const { return parents_[v]; }
  int arc_count() const { return arc_count_; }
  // Arcs sorted by (from, to).
  std::vector<std::pair<VertexId, VertexId>> arcs() const;

  VertexId leaf_of(int taxon) const { return leaf_of_[taxon]; }
  std::vector<VertexId> roots() const;

  // v preceq u: u is an ancestor of v (reflexive).
  bool preceq(VertexId v, VertexId u) const { return desc_[u].test(v); }
  const Bitset& descendants(VertexId v) const { return desc_[v]; }  // incl. v

  // All preceq-minimal common ancestors of the pair; {leaf} for a singleton.
  std::vector<VertexId> lca_set(TaxonPair p) const;
  // The unique LCA if well-defined, nullopt otherwise.
  std::optional<VertexId> lca(TaxonPair p) const;
  // lca() for every pair index at once.
  std::vector<std::optional<VertexId>> lca_table() const;

  bool operator==(const Dag& o) const {
    return universe_ == o.universe_ && children_ == o.children_ &&
           leaf_of_ == o.leaf_of_;
  }

 private:
  Dag() = default;

  Universe universe_;
  std::vector<DagVertex> vertices_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::vector<VertexId>> parents_;
  std::vector<Bitset> desc_;  // desc_[v]: vertices reachable from v, incl. v
  std::vector<Bitset> anc_;   // transpose of desc_
  std::vector<VertexId> leaf_of_;
  int arc_count_ = 0;
};

// All (ab,xy) whose LCAs are well-defined with lca(ab) preceq lca(xy).
Relation induced_relation(const Dag& g);

// Adds two fresh common parents of the two (distinct) leaves, making lca(p)
// ill-defined while preserving reachability and all other LCA sets.
// Throws std::invalid_argument for a singleton pair.
Dag xy_extension(const Dag& g, TaxonPair p);

// One xy-extension per pair in supp(f) \ supp_plus(r), ascending pair index.
Dag fr_extension(const Dag& g, const Relation& r, const Relation& f);

// Returns g unchanged if it has a single root; otherwise adds a fresh root
// above all roots.
Dag to_network(const Dag& g);

// No vertex with out-degree 1 and in-degree <= 1.
bool is_phylogenetic(const Dag& g);

// Every vertex is the well-defined LCA of some (possibly singleton) pair.
bool is_two_lca_relevant(const Dag& g);

// xy-extension of the canonical DAG for every pair outside supp_plus(r); the
// result G satisfies induced_relation(G) == cl_f(r,f) and RF-realizes (r,f).
// Throws std::invalid_argument if (r,f) is not RF-realizable.
Dag saturated_witness(const Relation& r, const Relation& f, const Dag& canonical);

}  // namespace lcaforge
