#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcaforge/relation.hpp"

namespace lcaforge {

enum class Rule : std::uint8_t { R1, R2, R3, R4 };
const char* rule_name(Rule r);

struct TraceEntry {
  Rule rule;
  Constraint added;
};

// Result of the rule fixpoint. `closure` contains r, is reflexive on
// support_plus, transitive, cross-consistent and f-csym; its support equals
// support_plus(r).
struct ClosureResult {
  Relation closure;
  Bitset support_plus;  // pair indices
  std::vector<TraceEntry> trace;  // additions beyond r, in application order
};

struct ClosureOptions {
  // When set, the worklist is drained in a seed-determined random order
  // instead of FIFO. The resulting closure set is identical either way; the
  // knob exists so tests can exercise rule-order confluence.
  std::optional<std::uint64_t> shuffle_seed{};
  bool record_trace = true;
};

ClosureResult cl_f(const Relation& r, const Relation& f,
                   const ClosureOptions& opts = {});
ClosureResult cl_empty(const Relation& r, const ClosureOptions& opts = {});

// Scans for a Y1 violation in a computed closure: some (ab,xx) with ab != xx.
std::optional<Constraint> find_y1_violation(const Relation& closure);
// Scans for a Y2 violation: some (ab,xy) in r with (xy,ab) not in tc(r) but
// (xy,ab) in the closure. Returns the offending element of r.
std::optional<Constraint> find_y2_violation(const Relation& r, const Relation& tc,
                                            const Relation& closure);

}  // namespace lcaforge
