#include "lcaforge/closure.hpp"

#include <deque>
#include <random>
#include <stdexcept>

namespace lcaforge {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
  }
  return "?";
}

namespace {

// Worklist engine for the four inference rules. Every constraint enters the
// queue exactly once (when first added); processing a constraint derives all
// compositions it newly enables. The final set is order-independent, so the
// scheduler only affects the trace.
class ClosureEngine {
 public:
  ClosureEngine(const Relation& r, const Relation& f, const ClosureOptions& opts)
      : r_(r),
        f_(f),
        opts_(opts),
        universe_(r.universe()),
        pair_count_(r.pair_count()),
        result_(r.universe()),
        in_(pair_count_, Bitset(pair_count_)),
        covered_(pair_count_, Bitset(universe_.size())),
        supp_plus_(r.support_plus_bits()) {
    if (!(r.universe() == f.universe()))
      throw std::invalid_argument("universe mismatch");
    if (opts_.shuffle_seed) rng_.seed(*opts_.shuffle_seed);
  }

  ClosureResult run() {
    // Seed with r itself (no trace entries), then apply R1 once.
    r_.for_each([&](int p, int q) { insert(p, q, Rule::R1, /*trace=*/false); });
    supp_plus_.for_each([&](int p) { insert(p, p, Rule::R1, /*trace=*/true); });
    while (!pending_.empty()) {
      auto [p, q] = pop();
      process(p, q);
    }
    return ClosureResult{std::move(result_), std::move(supp_plus_),
                         std::move(trace_)};
  }

 private:
  void insert(int p, int q, Rule rule, bool trace) {
    if (!result_.add(p, q)) return;
    in_[q].set(p);
    if (trace && opts_.record_trace)
      trace_.push_back(
          TraceEntry{rule, Constraint{universe_.pair_at(p), universe_.pair_at(q)}});
    pending_.push_back({p, q});
  }

  std::pair<int, int> pop() {
    std::size_t i = 0;
    if (opts_.shuffle_seed) {
      i = std::uniform_int_distribution<std::size_t>(0, pending_.size() - 1)(rng_);
      std::swap(pending_[i], pending_.back());
      i = pending_.size() - 1;
    }
    std::pair<int, int> c = opts_.shuffle_seed ? pending_.back() : pending_.front();
    if (opts_.shuffle_seed)
      pending_.pop_back();
    else
      pending_.pop_front();
    return c;
  }

  void process(int p, int q) {
    // R2 forward: (p,q),(q,r) -> (p,r).
    result_.uppers_of(q).for_each_and_not(result_.uppers_of(p),
                                          [&](int r) { insert(p, r, Rule::R2, true); });
    // R2 backward: (o,p),(p,q) -> (o,q).
    in_[p].for_each_and_not(in_[q], [&](int o) { insert(o, q, Rule::R2, true); });
    // R3: taxa of p become covered for upper q; any support pair whose two
    // taxa are both covered for q gains the constraint to q.
    TaxonPair lp = universe_.pair_at(p);
    for (int t : {lp.lo, lp.hi}) {
      if (covered_[q].test(t)) continue;
      covered_[q].set(t);
      covered_[q].for_each([&](int other) {
        int ab = universe_.pair_index(TaxonPair::of(t, other));
        if (supp_plus_.test(ab)) insert(ab, q, Rule::R3, true);
      });
    }
    // R4: (p,q) in F makes the reverse constraint forced.
    if (f_.contains(p, q)) insert(q, p, Rule::R4, true);
  }

  const Relation& r_;
  const Relation& f_;
  ClosureOptions opts_;
  const Universe& universe_;
  int pair_count_;

  Relation result_;
  std::vector<Bitset> in_;       // transpose rows of result_
  std::vector<Bitset> covered_;  // covered_[xy]: taxa t with some (t.,xy) present
  Bitset supp_plus_;
  std::deque<std::pair<int, int>> pending_;
  std::vector<TraceEntry> trace_;
  std::mt19937_64 rng_;
};

}  // namespace

ClosureResult cl_f(const Relation& r, const Relation& f, const ClosureOptions& opts) {
  return ClosureEngine(r, f, opts).run();
}

ClosureResult cl_empty(const Relation& r, const ClosureOptions& opts) {
  return cl_f(r, Relation(r.universe()), opts);
}

std::optional<Constraint> find_y1_violation(const Relation& closure) {
  const Universe& u = closure.universe();
  std::optional<Constraint> hit;
  for (int p = 0; p < closure.pair_count() && !hit; ++p) {
    closure.uppers_of(p).for_each([&](int q) {
      if (hit) return;
      TaxonPair upper = u.pair_at(q);
      if (upper.singleton() && p != q)
        hit = Constraint{u.pair_at(p), upper};
    });
  }
  return hit;
}

std::optional<Constraint> find_y2_violation(const Relation& r, const Relation& tc,
                                            const Relation& closure) {
  const Universe& u = r.universe();
  std::optional<Constraint> hit;
  r.for_each([&](int p, int q) {
    if (hit) return;
    if (!tc.contains(q, p) && closure.contains(q, p))
      hit = Constraint{u.pair_at(p), u.pair_at(q)};
  });
  return hit;
}

}  // namespace lcaforge
