#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "lcaforge/dag.hpp"
#include "lcaforge/relation.hpp"

namespace lcaforge {

// The quotient of a reflexive-transitive closure by its symmetric part.
// Classes partition the closure's support; class i <= class j iff (p,q) is in
// the closure for representatives (equivalently all members).
struct QuotientPoset {
  Universe universe;
  std::vector<std::vector<int>> classes;  // pair indices, sorted; classes sorted by first member
  std::vector<int> class_of_pair;         // pair index -> class index, or -1
  std::vector<Bitset> leq;                // leq[i].test(j) iff class i <= class j

  int class_count() const { return static_cast<int>(classes.size()); }
};

QuotientPoset quotient_poset(const Relation& closure);

// Cover arcs of the poset, oriented from larger to smaller: (A,B) with B <= A,
// A != B and nothing strictly between. Sorted by (A,B).
std::vector<std::pair<int, int>> hasse_diagram(const QuotientPoset& q);

struct Y1Violation : std::runtime_error {
  explicit Y1Violation(Constraint w)
      : std::runtime_error("Y1 violated: closure relates a pair below a foreign singleton"),
        witness(w) {}
  Constraint witness;
};

// Canonical DAG: the Hasse diagram of the quotient poset of cl_f(r,f), with
// every singleton class {aa} relabeled as leaf a.
struct CanonicalDag {
  Dag dag;
  std::vector<int> class_of_vertex;  // vertex id -> class index
  QuotientPoset poset;
};

// Throws Y1Violation (with the offending constraint) when Y1 fails, since the
// leaf relabeling is only well-defined under Y1.
CanonicalDag canonical_dag(const Relation& r, const Relation& f);

}  // namespace lcaforge
