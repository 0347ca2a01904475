#include "lcaforge/decide.hpp"

#include <stdexcept>

#include "lcaforge/canonical.hpp"
#include "lcaforge/closure.hpp"
#include "lcaforge/verify.hpp"

namespace lcaforge {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::RF: return "rf";
    case Mode::STRICT_RF: return "strict";
    case Mode::RF_NPRECEQ: return "npreceq";
    case Mode::RF_LCA: return "lca";
  }
  return "?";
}

const char* failed_condition_name(FailedCondition c) {
  switch (c) {
    case FailedCondition::Y1: return "Y1";
    case FailedCondition::Y2: return "Y2";
    case FailedCondition::ASYMMETRY: return "ASYMMETRY";
    case FailedCondition::F_CAP_CL: return "F_CAP_CL";
    case FailedCondition::Y2_LCA: return "Y2_LCA";
    case FailedCondition::Y1_LCA: return "Y1_LCA";
  }
  return "?";
}

std::optional<Constraint> check_y1(const Relation& r, const Relation& f) {
  return find_y1_violation(cl_f(r, f, ClosureOptions{.record_trace = false}).closure);
}

std::optional<Constraint> check_y2(const Relation& r, const Relation& f) {
  Relation tc = transitive_closure(r);
  return find_y2_violation(
      r, tc, cl_f(r, f, ClosureOptions{.record_trace = false}).closure);
}

namespace {

Decision fail(Mode mode, FailedCondition cond, Constraint witness) {
  Decision d;
  d.realizable = false;
  d.mode = mode;
  d.certificate = FailureCert{cond, witness};
  return d;
}

// One (p,q) with both (p,q) and (q,p) in tc, ascending; includes reflexive
// elements, which violate asymmetry on their own.
std::optional<Constraint> find_asymmetry_violation(const Relation& tc) {
  const Universe& u = tc.universe();
  std::optional<Constraint> hit;
  tc.for_each([&](int p, int q) {
    if (!hit && tc.contains(q, p)) hit = Constraint{u.pair_at(p), u.pair_at(q)};
  });
  return hit;
}

void require_ok(const Verdict& v, const char* what) {
  if (!v.ok())
    throw std::logic_error(std::string("constructed witness failed verification (") +
                           what + ")");
}

}  // namespace

Decision decide_rf(const Relation& r, const Relation& f, bool strict) {
  Mode mode = strict ? Mode::STRICT_RF : Mode::RF;
  Relation tc = transitive_closure(r);
  ClosureResult cl = cl_f(r, f, ClosureOptions{.record_trace = false});
  if (auto w = find_y1_violation(cl.closure)) return fail(mode, FailedCondition::Y1, *w);
  if (auto w = find_y2_violation(r, tc, cl.closure))
    return fail(mode, FailedCondition::Y2, *w);
  if (strict) {
    if (auto w = find_asymmetry_violation(tc))
      return fail(mode, FailedCondition::ASYMMETRY, *w);
  }

  CanonicalDag canonical = canonical_dag(r, f);
  Dag g = fr_extension(canonical.dag, r, f);
  Dag n = to_network(g);
  require_ok(verify_rf(g, r, f, ForbidFlavor::F), "dag, axiom F");
  require_ok(verify_rf(n, r, f, ForbidFlavor::F), "network, axiom F");
  if (strict) {
    require_ok(verify_strict(g, r), "dag, axiom I0");
    require_ok(verify_strict(n, r), "network, axiom I0");
  }

  Decision d;
  d.realizable = true;
  d.mode = mode;
  d.witness_dag = std::move(g);
  d.witness_network = std::move(n);
  return d;
}

Decision decide_npreceq(const Relation& r, const Relation& f) {
  Relation empty_f(r.universe());
  Decision base = decide_rf(r, empty_f, false);
  if (!base.realizable)
    return fail(Mode::RF_NPRECEQ, base.certificate->failed_condition,
                base.certificate->witness);

  Relation blocked = intersect(f, cl_empty(r, ClosureOptions{.record_trace = false}).closure);
  if (!blocked.empty())
    return fail(Mode::RF_NPRECEQ, FailedCondition::F_CAP_CL, blocked.constraints().front());

  // base's witness DAG is the canonical DAG of (r, empty): with no forbidden
  // constraints the F|R-extension is the identity.
  Dag g = fr_extension(*base.witness_dag, r, f);
  Dag n = to_network(g);
  require_ok(verify_rf(g, r, f, ForbidFlavor::NPRECEQ), "dag, axiom F-npreceq");
  require_ok(verify_rf(n, r, f, ForbidFlavor::NPRECEQ), "network, axiom F-npreceq");

  Decision d;
  d.realizable = true;
  d.mode = Mode::RF_NPRECEQ;
  d.witness_dag = std::move(g);
  d.witness_network = std::move(n);
  return d;
}

Decision decide_lca(const Relation& r, const Relation& f) {
  Relation r_lca = r;
  f.support_bits().for_each([&](int p) { r_lca.add(p, p); });
  Decision d = decide_rf(r_lca, f, false);
  d.mode = Mode::RF_LCA;
  if (d.realizable) {
    require_ok(verify_rf(*d.witness_dag, r, f, ForbidFlavor::LCA), "dag, axiom F-lca");
    require_ok(verify_rf(*d.witness_network, r, f, ForbidFlavor::LCA),
               "network, axiom F-lca");
  }
  return d;
}

}  // namespace lcaforge
