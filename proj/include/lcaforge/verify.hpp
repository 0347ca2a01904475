#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcaforge/dag.hpp"
#include "lcaforge/relation.hpp"

namespace lcaforge {

enum class Axiom : std::uint8_t { I0, I1, I2, WELLDEF, F, F_NPRECEQ, F_LCA };
const char* axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  Constraint constraint;
  std::string explanation;
};

struct Verdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

enum class ForbidFlavor : std::uint8_t { F, NPRECEQ, LCA };

// Definition-level checks, independent of the decision pipeline.
//
// verify_realizes: every pair in supp_plus(r) has a well-defined LCA; each
// (ab,cd) in r satisfies I1 (strictly below when (cd,ab) is not in tc(r)) or
// I2 (equal LCAs when it is).
Verdict verify_realizes(const Dag& g, const Relation& r);

// verify_strict: well-definedness over supp_plus(r) plus I0 (strictly below)
// for every element of r.
Verdict verify_strict(const Dag& g, const Relation& r);

// verify_rf: verify_realizes plus the forbidden-constraint axiom over all of
// f. Flavor F forbids strictly-below (when both LCAs are well-defined),
// NPRECEQ forbids below-or-equal, LCA additionally demands both LCAs exist.
Verdict verify_rf(const Dag& g, const Relation& r, const Relation& f,
                  ForbidFlavor flavor);

// Seed-deterministic random DAG on x: 1-3 internal layers, downward arcs with
// density 1/2, internal sinks repaired by an arc to a leaf. size_budget caps
// the internal vertex count.
Dag random_dag_sampler(const Universe& x, int size_budget, std::uint64_t seed);

}  // namespace lcaforge
