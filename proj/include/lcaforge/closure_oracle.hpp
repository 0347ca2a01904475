#pragma once

#include <optional>

#include "lcaforge/relation.hpp"

namespace lcaforge {

// Brute-force reference for cl_F(R), independent of the worklist engine: no
// code is shared with cl_f and the rule properties are checked directly from
// their definitions.
//
// Enumerates every relation S on supp_plus(r) x supp_plus(r) that is
// supp_plus-reflexive, transitive, cross-consistent, f-csym and contains r
// (restricting the carrier to supp_plus is sound because the closure's
// support equals supp_plus(r)), and returns the intersection of all of them.
//
// Small instances go through exhaustive generate-and-test over all candidate
// subsets; larger ones enumerate exactly the closed supersets with a naive
// rescan fixpoint. Refuses (nullopt) when |supp_plus(r)| exceeds max_support;
// intended for small instances only, enumeration cost grows steeply.
std::optional<Relation> oracle_cl_f(const Relation& r, const Relation& f,
                                    int max_support);

}  // namespace lcaforge
