#pragma once

#include <optional>

#include "lcaforge/dag.hpp"
#include "lcaforge/relation.hpp"

namespace lcaforge {

enum class Mode : std::uint8_t { RF, STRICT_RF, RF_NPRECEQ, RF_LCA };
const char* mode_name(Mode m);

enum class FailedCondition : std::uint8_t {
  Y1,
  Y2,
  ASYMMETRY,
  F_CAP_CL,
  Y2_LCA,
  Y1_LCA,
};
const char* failed_condition_name(FailedCondition c);

struct FailureCert {
  FailedCondition failed_condition;
  Constraint witness;
};

struct Decision {
  bool realizable = false;
  Mode mode = Mode::RF;
  std::optional<Dag> witness_dag;
  std::optional<Dag> witness_network;
  std::optional<FailureCert> certificate;
};

// Y1: no (ab,xx) with ab != xx in cl_f(r,f). Returns the offending closure
// element, if any.
std::optional<Constraint> check_y1(const Relation& r, const Relation& f);
// Y2: no (ab,xy) in r whose reverse is outside tc(r) yet inside cl_f(r,f).
// Returns the offending element of r, if any.
std::optional<Constraint> check_y2(const Relation& r, const Relation& f);

// Decides [strict] RF-realizability. On success the witness DAG is the
// F|R-extension of the canonical DAG and the witness network its rooting;
// both are re-verified against the definitions before being returned. On
// failure the certificate carries the concrete violating constraint.
Decision decide_rf(const Relation& r, const Relation& f, bool strict);

// Realizable iff r is realizable and f does not meet cl_empty(r); witness is
// the F|R-extension of the canonical DAG of (r, empty).
Decision decide_npreceq(const Relation& r, const Relation& f);

// Reduces to decide_rf on r extended with (ab,ab) for every ab in supp(f);
// witnesses and certificate carry over unchanged.
Decision decide_lca(const Relation& r, const Relation& f);

}  // namespace lcaforge
