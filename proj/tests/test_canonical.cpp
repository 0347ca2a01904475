#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "lcaforge/canonical.hpp"
#include "lcaforge/closure.hpp"
#include "lcaforge/verify.hpp"
#include "support.hpp"

using namespace lcaforge;
using namespace testsupport;

namespace {

// Class of a pair given by its two-letter name, as a sorted list of pair names.
std::vector<std::string> class_members(const QuotientPoset& q, const Universe& u,
                                       const std::string& pair) {
  int cls = q.class_of_pair[u.pair_index(P(u, pair))];
  REQUIRE(cls >= 0);
  std::vector<std::string> out;
  for (int idx : q.classes[cls]) out.push_back(u.pair_name(u.pair_at(idx)));
  return out;
}

Relation preorder(const Universe& u,
                  std::initializer_list<std::pair<const char*, const char*>> cs) {
  Relation rel = R(u, cs);
  rel.support_plus_bits().for_each([&](int p) { rel.add(p, p); });
  return transitive_closure(rel);
}

}  // namespace

TEST_CASE("quotient poset") {
  Universe u = U("xyz");
  Relation r = R(u, {{"xy", "xz"}, {"yy", "yz"}});
  Relation f = R(u, {{"yz", "xz"}});
  SUBCASE("forbidden-direction symmetry merges xz and yz") {
    QuotientPoset q = quotient_poset(cl_f(r, f).closure);
    CHECK(q.class_count() == 5);
    CHECK(class_members(q, u, "xz") == std::vector<std::string>{"xz", "yz"});
    CHECK(q.class_of_pair[u.pair_index(P(u, "xz"))] ==
          q.class_of_pair[u.pair_index(P(u, "yz"))]);
  }
  SUBCASE("without F the classes stay distinct") {
    QuotientPoset q = quotient_poset(cl_empty(r).closure);
    CHECK(q.class_count() == 6);
    CHECK(q.class_of_pair[u.pair_index(P(u, "xz"))] !=
          q.class_of_pair[u.pair_index(P(u, "yz"))]);
  }
  SUBCASE("empty relation yields isolated singleton classes") {
    QuotientPoset q = quotient_poset(cl_empty(Relation(u)).closure);
    CHECK(q.class_count() == 3);
    for (const auto& cls : q.classes) CHECK(cls.size() == 1);
  }
  SUBCASE("leq is representative-independent") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto inst = random_instance(seed, 4, 6, 6);
      Relation cl = cl_f(inst.required, inst.forbidden).closure;
      QuotientPoset q = quotient_poset(cl);
      for (int i = 0; i < q.class_count(); ++i)
        for (int j = 0; j < q.class_count(); ++j)
          for (int p : q.classes[i])
            for (int qq : q.classes[j])
              CHECK(cl.contains(p, qq) == q.leq[i].test(j));
    }
  }
}

TEST_CASE("hasse diagram") {
  Universe u = U("abc");
  SUBCASE("chain drops the transitive arc") {
    QuotientPoset q = quotient_poset(preorder(u, {{"aa", "bb"}, {"bb", "cc"}}));
    REQUIRE(q.class_count() == 3);
    auto arcs = hasse_diagram(q);
    CHECK(arcs == std::vector<std::pair<int, int>>{{1, 0}, {2, 1}});
  }
  SUBCASE("antichain has no arcs") {
    QuotientPoset q = quotient_poset(cl_empty(Relation(u)).closure);
    CHECK(hasse_diagram(q).empty());
  }
  SUBCASE("transitive closure of the covers equals the strict order") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
      auto inst = random_instance(seed, 4, 6, 6);
      QuotientPoset q = quotient_poset(cl_f(inst.required, inst.forbidden).closure);
      auto arcs = hasse_diagram(q);
      int n = q.class_count();
      // reach[a][b]: b reachable from a through cover arcs
      std::vector<Bitset> reach(n, Bitset(n));
      for (auto [a, b] : arcs) reach[a].set(b);
      for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
          if (reach[a].test(k)) reach[a] |= reach[k];
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          CHECK(reach[a].test(b) == (a != b && q.leq[b].test(a)));
    }
  }
}

TEST_CASE("canonical dag of the merged-class instance") {
  // R = {(xy,ab),(ay,ay)}, F = {(ay,ab)}: ab and ay collapse into one class
  // forming the root; xy sits between the root and x,y.
  Universe u = U("abxy");
  Relation r = R(u, {{"xy", "ab"}, {"ay", "ay"}});
  Relation f = R(u, {{"ay", "ab"}});
  CanonicalDag cd = canonical_dag(r, f);
  CHECK(cd.dag.vertex_count() == 6);

  int top = -1, mid = -1;
  for (int v = 0; v < cd.dag.vertex_count(); ++v) {
    const auto& pairs = cd.dag.vertex(v).class_pairs;
    if (pairs.size() == 2) top = v;
    if (pairs.size() == 1) mid = v;
  }
  REQUIRE(top >= 0);
  REQUIRE(mid >= 0);
  CHECK(cd.dag.vertex(top).class_pairs ==
        std::vector<int>{u.pair_index(P(u, "ab")), u.pair_index(P(u, "ay"))});
  CHECK(cd.dag.vertex(mid).class_pairs == std::vector<int>{u.pair_index(P(u, "xy"))});
  CHECK(cd.dag.roots() == std::vector<VertexId>{top});
  auto arcs = cd.dag.arcs();
  std::vector<std::pair<VertexId, VertexId>> expect{
      {top, cd.dag.leaf_of(*u.find("a"))}, {top, cd.dag.leaf_of(*u.find("b"))},
      {top, mid},                          {mid, cd.dag.leaf_of(*u.find("x"))},
      {mid, cd.dag.leaf_of(*u.find("y"))}};
  std::sort(expect.begin(), expect.end());
  CHECK(arcs == expect);

  // leaf a lies below the class of ay
  CHECK(cd.dag.preceq(cd.dag.leaf_of(*u.find("a")), top));
  CHECK(verify_rf(cd.dag, r, f, ForbidFlavor::F).ok());
}

TEST_CASE("canonical dag golden instances") {
  SUBCASE("F that never fires keeps the F-free canonical dag") {
    Universe u = U("xyz");
    Relation r = R(u, {{"xy", "xz"}, {"xx", "yz"}});
    Relation f = R(u, {{"xz", "xy"}});
    CanonicalDag with_f = canonical_dag(r, f);
    CanonicalDag without = canonical_dag(r, Relation(u));
    CHECK(with_f.dag == without.dag);
    CHECK(verify_rf(with_f.dag, r, f, ForbidFlavor::F).ok());
  }
  SUBCASE("merged lca versus a forbidden strict drop") {
    Universe u = U("xyz");
    Relation r = R(u, {{"xy", "xz"}, {"yy", "yz"}});
    Relation f = R(u, {{"yz", "xz"}});
    CanonicalDag with_f = canonical_dag(r, f);
    CHECK(with_f.dag.lca(P(u, "xz")) == with_f.dag.lca(P(u, "yz")));
    CHECK(verify_rf(with_f.dag, r, f, ForbidFlavor::F).ok());

    CanonicalDag without = canonical_dag(r, Relation(u));
    Verdict v = verify_rf(without.dag, r, f, ForbidFlavor::F);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violations.front().axiom == Axiom::F);
    CHECK(v.violations.front().constraint == C(u, "yz", "xz"));
  }
  SUBCASE("forbidden pair outside supp_plus defeats the bare canonical dag") {
    Universe u = U("abxy");
    Relation r = R(u, {{"xy", "ab"}});
    Relation f = R(u, {{"xy", "ay"}});
    CanonicalDag cd = canonical_dag(r, f);
    CHECK(verify_rf(cd.dag, r, f.restricted_to(r.support_plus_bits()), ForbidFlavor::F)
              .ok());
    CHECK(verify_rf(cd.dag, r, Relation(u), ForbidFlavor::F).ok());
    CHECK_FALSE(verify_rf(cd.dag, r, f, ForbidFlavor::F).ok());
  }
}

TEST_CASE("canonical dag refuses Y1 violations") {
  Universe u = U("xy");
  Relation r = R(u, {{"xy", "xx"}});
  CHECK_THROWS_AS(canonical_dag(r, Relation(u)), Y1Violation);
  try {
    canonical_dag(r, Relation(u));
  } catch (const Y1Violation& e) {
    CHECK(e.witness == C(u, "xy", "xx"));
  }
}

TEST_CASE("canonical dag of the closure equals the canonical dag") {
  for (std::uint64_t seed = 300; seed < 360; ++seed) {
    auto inst = random_instance(seed, 4, 6, 6);
    try {
      CanonicalDag direct = canonical_dag(inst.required, inst.forbidden);
      Relation cl = cl_f(inst.required, inst.forbidden).closure;
      CanonicalDag via_closure = canonical_dag(cl, inst.forbidden);
      CHECK(direct.dag == via_closure.dag);
    } catch (const Y1Violation&) {
      // instances violating Y1 have no canonical dag
    }
  }
}

TEST_CASE("canonical dag lca identities and order equivalence") {
  for (std::uint64_t seed = 400; seed < 460; ++seed) {
    auto inst = random_instance(seed, 4, 6, 6);
    Relation cl = cl_f(inst.required, inst.forbidden).closure;
    try {
      CanonicalDag cd = canonical_dag(inst.required, inst.forbidden);
      const Universe& u = inst.universe;
      // every class is the lca of each of its member pairs
      for (int v = 0; v < cd.dag.vertex_count(); ++v) {
        if (auto t = cd.dag.vertex(v).taxon)
          CHECK(cd.dag.lca(TaxonPair{*t, *t}) == v);
        for (int idx : cd.dag.vertex(v).class_pairs)
          CHECK(cd.dag.lca(u.pair_at(idx)) == v);
      }
      // lca(p) preceq lca(q) iff (p,q) in the closure
      auto lcas = cd.dag.lca_table();
      Bitset plus = inst.required.support_plus_bits();
      plus.for_each([&](int p) {
        plus.for_each([&](int q) {
          REQUIRE(lcas[p].has_value());
          REQUIRE(lcas[q].has_value());
          CHECK(cd.dag.preceq(*lcas[p], *lcas[q]) == cl.contains(p, q));
        });
      });
      // shape guarantees
      CHECK(is_two_lca_relevant(cd.dag));
      CHECK(is_phylogenetic(cd.dag));
      CHECK(is_phylogenetic(fr_extension(cd.dag, inst.required, inst.forbidden)));
    } catch (const Y1Violation&) {
    }
  }
}
