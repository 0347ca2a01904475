#pragma once

#include <vector>

#include "lcaforge/bitset.hpp"
#include "lcaforge/taxa.hpp"

namespace lcaforge {

// A binary relation on the pairs of a fixed universe, stored as one bitset of
// uppers per lower pair index. Membership and row scans are O(1) / word-wise.
class Relation {
 public:
  explicit Relation(Universe u)
      : universe_(std::move(u)),
        rows_(universe_.pair_count(), Bitset(universe_.pair_count())) {}

  const Universe& universe() const { return universe_; }
  int pair_count() const { return universe_.pair_count(); }

  // Returns true if the constraint was new.
  bool add(int lower, int upper) {
    if (rows_[lower].test(upper)) return false;
    rows_[lower].set(upper);
    ++size_;
    return true;
  }
  bool add(const Constraint& c) {
    return add(universe_.pair_index(c.lower), universe_.pair_index(c.upper));
  }

  bool contains(int lower, int upper) const { return rows_[lower].test(upper); }
  bool contains(const Constraint& c) const {
    return contains(universe_.pair_index(c.lower), universe_.pair_index(c.upper));
  }

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  const Bitset& uppers_of(int lower) const { return rows_[lower]; }

  // Pairs mentioned as lower or upper of some constraint.
  Bitset support_bits() const;
  // support_bits plus every singleton pair of the universe.
  Bitset support_plus_bits() const;
  std::vector<TaxonPair> support() const;
  std::vector<TaxonPair> support_plus() const;

  // Constraints sorted by (lower, upper) pair index.
  std::vector<Constraint> constraints() const;

  // Constraints whose lower and upper both lie in `pairs`.
  Relation restricted_to(const Bitset& pairs) const;

  bool is_subset_of(const Relation& o) const;
  bool operator==(const Relation& o) const {
    return universe_ == o.universe_ && rows_ == o.rows_;
  }

  // Calls f(lower, upper) for every constraint, ascending (lower, upper).
  template <class F>
  void for_each(F&& f) const {
    for (int p = 0; p < pair_count(); ++p)
      rows_[p].for_each([&](int q) { f(p, q); });
  }

 private:
  Universe universe_;
  std::vector<Bitset> rows_;
  int size_ = 0;
};

Relation transitive_closure(const Relation& rel);
bool is_asymmetric(const Relation& rel);
bool is_cross_consistent(const Relation& rel);
bool is_f_csym(const Relation& rel, const Relation& f);
Relation intersect(const Relation& a, const Relation& b);

}  // namespace lcaforge
