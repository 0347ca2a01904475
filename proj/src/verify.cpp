#include "lcaforge/verify.hpp"

#include <random>
#include <stdexcept>

namespace lcaforge {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::I0: return "I0";
    case Axiom::I1: return "I1";
    case Axiom::I2: return "I2";
    case Axiom::WELLDEF: return "WELLDEF";
    case Axiom::F: return "F";
    case Axiom::F_NPRECEQ: return "F_NPRECEQ";
    case Axiom::F_LCA: return "F_LCA";
  }
  return "?";
}

namespace {

void check_universe(const Dag& g, const Relation& r) {
  if (!(g.universe() == r.universe()))
    throw std::invalid_argument("universe mismatch");
}

// Well-definedness over supp_plus(r); appends one WELLDEF violation per
// ill-defined pair, encoded as the reflexive constraint on that pair.
void check_welldef(const Relation& r,
                   const std::vector<std::optional<VertexId>>& lcas,
                   std::vector<Violation>& out) {
  const Universe& u = r.universe();
  r.support_plus_bits().for_each([&](int idx) {
    if (lcas[idx]) return;
    TaxonPair p = u.pair_at(idx);
    out.push_back(Violation{Axiom::WELLDEF, Constraint{p, p},
                            "lca(" + u.pair_name(p) + ") is not well-defined"});
  });
}

}  // namespace

Verdict verify_realizes(const Dag& g, const Relation& r) {
  check_universe(g, r);
  Verdict verdict;
  const Universe& u = r.universe();
  auto lcas = g.lca_table();
  check_welldef(r, lcas, verdict.violations);
  Relation tc = transitive_closure(r);
  r.for_each([&](int ab, int cd) {
    if (!lcas[ab] || !lcas[cd]) return;  // reported as WELLDEF already
    Constraint c{u.pair_at(ab), u.pair_at(cd)};
    bool below = g.preceq(*lcas[ab], *lcas[cd]);
    bool equal = *lcas[ab] == *lcas[cd];
    if (tc.contains(cd, ab)) {
      if (!equal)
        verdict.violations.push_back(
            Violation{Axiom::I2, c,
                      "lca(" + u.pair_name(c.lower) + ") must equal lca(" +
                          u.pair_name(c.upper) + ")"});
    } else if (!below || equal) {
      verdict.violations.push_back(
          Violation{Axiom::I1, c,
                    "lca(" + u.pair_name(c.lower) + ") must lie strictly below lca(" +
                        u.pair_name(c.upper) + ")"});
    }
  });
  return verdict;
}

Verdict verify_strict(const Dag& g, const Relation& r) {
  check_universe(g, r);
  Verdict verdict;
  const Universe& u = r.universe();
  auto lcas = g.lca_table();
  check_welldef(r, lcas, verdict.violations);
  r.for_each([&](int ab, int cd) {
    if (!lcas[ab] || !lcas[cd]) return;
    if (!g.preceq(*lcas[ab], *lcas[cd]) || *lcas[ab] == *lcas[cd]) {
      Constraint c{u.pair_at(ab), u.pair_at(cd)};
      verdict.violations.push_back(
          Violation{Axiom::I0, c,
                    "lca(" + u.pair_name(c.lower) + ") must lie strictly below lca(" +
                        u.pair_name(c.upper) + ")"});
    }
  });
  return verdict;
}

Verdict verify_rf(const Dag& g, const Relation& r, const Relation& f,
                  ForbidFlavor flavor) {
  check_universe(g, r);
  check_universe(g, f);
  Verdict verdict = verify_realizes(g, r);
  const Universe& u = f.universe();
  auto lcas = g.lca_table();
  f.for_each([&](int ab, int cd) {
    Constraint c{u.pair_at(ab), u.pair_at(cd)};
    if (!lcas[ab] || !lcas[cd]) {
      if (flavor == ForbidFlavor::LCA) {
        TaxonPair bad = !lcas[ab] ? c.lower : c.upper;
        verdict.violations.push_back(
            Violation{Axiom::F_LCA, c,
                      "lca(" + u.pair_name(bad) + ") must be well-defined"});
      }
      return;
    }
    bool below = g.preceq(*lcas[ab], *lcas[cd]);
    bool strictly = below && *lcas[ab] != *lcas[cd];
    switch (flavor) {
      case ForbidFlavor::F:
        if (strictly)
          verdict.violations.push_back(
              Violation{Axiom::F, c,
                        "forbidden: lca(" + u.pair_name(c.lower) +
                            ") lies strictly below lca(" + u.pair_name(c.upper) + ")"});
        break;
      case ForbidFlavor::NPRECEQ:
        if (below)
          verdict.violations.push_back(
              Violation{Axiom::F_NPRECEQ, c,
                        "forbidden: lca(" + u.pair_name(c.lower) +
                            ") lies below-or-equal lca(" + u.pair_name(c.upper) + ")"});
        break;
      case ForbidFlavor::LCA:
        if (strictly)
          verdict.violations.push_back(
              Violation{Axiom::F_LCA, c,
                        "forbidden: lca(" + u.pair_name(c.lower) +
                            ") lies strictly below lca(" + u.pair_name(c.upper) + ")"});
        break;
    }
  });
  return verdict;
}

Dag random_dag_sampler(const Universe& x, int size_budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

  int internals = size_budget <= 0 ? 0 : 1 + pick(size_budget);
  int layers = 1 + pick(3);

  std::vector<DagVertex> verts(x.size());
  std::vector<int> layer_of(x.size(), 0);
  for (int t = 0; t < x.size(); ++t) verts[t].taxon = t;
  for (int i = 0; i < internals; ++i) {
    verts.push_back(DagVertex{});
    layer_of.push_back(1 + pick(layers));
  }

  std::vector<std::pair<VertexId, VertexId>> arcs;
  int n = static_cast<int>(verts.size());
  for (int v = x.size(); v < n; ++v) {
    bool has_child = false;
    for (int w = 0; w < n; ++w) {
      if (layer_of[w] >= layer_of[v] || v == w) continue;
      if (rng() & 1) {
        arcs.push_back({v, w});
        has_child = true;
      }
    }
    if (!has_child) arcs.push_back({v, pick(x.size())});
  }
  return Dag::from_parts(x, std::move(verts), std::move(arcs));
}

}  // namespace lcaforge
