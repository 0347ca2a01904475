#include "lcaforge/relation.hpp"

#include <stdexcept>

namespace lcaforge {

Bitset Relation::support_bits() const {
  Bitset s(pair_count());
  for (int p = 0; p < pair_count(); ++p) {
    if (rows_[p].any()) s.set(p);
    rows_[p].for_each([&](int q) { s.set(q); });
  }
  return s;
}

Bitset Relation::support_plus_bits() const {
  Bitset s = support_bits();
  for (int t = 0; t < universe_.size(); ++t)
    s.set(universe_.pair_index(TaxonPair{t, t}));
  return s;
}

std::vector<TaxonPair> Relation::support() const {
  std::vector<TaxonPair> out;
  support_bits().for_each([&](int p) { out.push_back(universe_.pair_at(p)); });
  return out;
}

std::vector<TaxonPair> Relation::support_plus() const {
  std::vector<TaxonPair> out;
  support_plus_bits().for_each([&](int p) { out.push_back(universe_.pair_at(p)); });
  return out;
}

std::vector<Constraint> Relation::constraints() const {
  std::vector<Constraint> out;
  out.reserve(size_);
  for_each([&](int p, int q) {
    out.push_back(Constraint{universe_.pair_at(p), universe_.pair_at(q)});
  });
  return out;
}

Relation Relation::restricted_to(const Bitset& pairs) const {
  Relation out(universe_);
  for_each([&](int p, int q) {
    if (pairs.test(p) && pairs.test(q)) out.add(p, q);
  });
  return out;
}

bool Relation::is_subset_of(const Relation& o) const {
  if (!(universe_ == o.universe_)) throw std::invalid_argument("universe mismatch");
  for (int p = 0; p < pair_count(); ++p)
    if (!rows_[p].is_subset_of(o.rows_[p])) return false;
  return true;
}

Relation transitive_closure(const Relation& rel) {
  // Warshall over the pair-index space: absorb row k into every row that
  // reaches k.
  Relation out = rel;
  int n = out.pair_count();
  for (int k = 0; k < n; ++k) {
    const Bitset row_k = out.uppers_of(k);
    for (int p = 0; p < n; ++p) {
      if (!out.contains(p, k) || p == k) continue;
      row_k.for_each_and_not(out.uppers_of(p), [&](int q) { out.add(p, q); });
    }
  }
  return out;
}

bool is_asymmetric(const Relation& rel) {
  bool ok = true;
  rel.for_each([&](int p, int q) {
    if (rel.contains(q, p)) ok = false;
  });
  return ok;
}

bool is_cross_consistent(const Relation& rel) {
  // For each upper xy, collect the taxa covered by some lower of xy. The rule
  // adds (ab,xy) whenever ab is in the support and both a,b are covered, so
  // the relation is closed iff all such (ab,xy) are already present.
  const Universe& u = rel.universe();
  Bitset supp = rel.support_bits();
  std::vector<Bitset> covered(rel.pair_count(), Bitset(u.size()));
  bool any_row = false;
  rel.for_each([&](int p, int q) {
    TaxonPair lo = u.pair_at(p);
    covered[q].set(lo.lo);
    covered[q].set(lo.hi);
    any_row = true;
  });
  if (!any_row) return true;
  bool ok = true;
  for (int xy = 0; xy < rel.pair_count() && ok; ++xy) {
    if (covered[xy].none()) continue;
    supp.for_each([&](int ab) {
      TaxonPair p = u.pair_at(ab);
      if (covered[xy].test(p.lo) && covered[xy].test(p.hi) && !rel.contains(ab, xy))
        ok = false;
    });
  }
  return ok;
}

bool is_f_csym(const Relation& rel, const Relation& f) {
  if (!(rel.universe() == f.universe()))
    throw std::invalid_argument("universe mismatch");
  bool ok = true;
  f.for_each([&](int p, int q) {
    if (rel.contains(p, q) && !rel.contains(q, p)) ok = false;
  });
  return ok;
}

Relation intersect(const Relation& a, const Relation& b) {
  if (!(a.universe() == b.universe()))
    throw std::invalid_argument("universe mismatch");
  Relation out(a.universe());
  a.for_each([&](int p, int q) {
    if (b.contains(p, q)) out.add(p, q);
  });
  return out;
}

}  // namespace lcaforge
