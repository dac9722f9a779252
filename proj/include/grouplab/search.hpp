#ifndef PSUMLAB_GROUPLAB_SEARCH_HPP
#define PSUMLAB_GROUPLAB_SEARCH_HPP

#include <cstdint>

#include "grouplab/niceset.hpp"

namespace grouplab {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  std::uint64_t max_nodes = 500'000'000;
};

/// Raised when a search that the conjectures say must succeed comes back
/// empty; surfaced loudly because it would be a counterexample.
struct NoOrderingFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

template <AbelianGroup G>
class OrderingSearch {
public:
  OrderingSearch(const NiceSet<G>& A, const SearchBudget& budget)
      : set_(A), budget_(budget) {}

  std::optional<Ordering<G>> run() {
    const std::size_t n = set_.elements.size();
    used_.assign(n, false);
    seq_.clear();
    sums_.clear();
    nodes_ = 0;
    if (!dfs(n)) return std::nullopt;
    auto w = Ordering<G>::of(set_.group, seq_);
    if (!verify_ordering(set_.group, w, set_.variant))
      throw std::logic_error("find_ordering: produced an invalid ordering");
    return w;
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  // Depth-first over positions, candidates in ascending element order, a
  // branch pruned the moment a partial sum repeats (or hits zero, alspach).
  bool dfs(std::size_t n) {
    if (seq_.size() == n) return true;
    const auto base = sums_.empty() ? set_.group.zero() : sums_.back();
    for (std::size_t t = 0; t < n; ++t) {
      if (used_[t]) continue;
      if (++nodes_ > budget_.max_nodes)
        throw BudgetExceeded("find_ordering: node budget exhausted");
      auto s = set_.group.add(base, set_.elements[t]);
      if (set_.variant == Variant::alspach && set_.group.is_zero(s)) continue;
      if (std::find(sums_.begin(), sums_.end(), s) != sums_.end()) continue;
      used_[t] = true;
      seq_.push_back(set_.elements[t]);
      sums_.push_back(s);
      if (dfs(n)) return true;
      used_[t] = false;
      seq_.pop_back();
      sums_.pop_back();
    }
    return false;
  }

  const NiceSet<G>& set_;
  SearchBudget budget_;
  std::vector<bool> used_;
  std::vector<typename G::Elem> seq_;
  std::vector<typename G::Elem> sums_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// A variant-valid ordering of A, or nullopt once the whole search tree is
/// exhausted.  Deterministic: candidates are tried in ascending element
/// order, so the result is the lexicographically first valid ordering.
template <AbelianGroup G>
std::optional<Ordering<G>> find_ordering(const NiceSet<G>& A,
                                         const SearchBudget& budget = {}) {
  detail::OrderingSearch<G> search(A, budget);
  return search.run();
}

/// The constructive step behind the cmpp variant: remove an element a (tried
/// in canonical order), order the remainder alspach-style, append a.  The
/// remainder is always nice because sum(A) = 0 forces sum(A \ {a}) = -a != 0.
template <AbelianGroup G>
Ordering<G> cmpp_reduce(const NiceSet<G>& A, const SearchBudget& budget = {}) {
  if (A.variant != Variant::cmpp)
    throw std::invalid_argument("cmpp_reduce: set must use the cmpp variant");
  for (const auto& a : A.elements) {
    std::vector<typename G::Elem> rest;
    for (const auto& e : A.elements)
      if (e != a) rest.push_back(e);
    auto nice = NiceSet<G>::make(A.group, Variant::alspach, std::move(rest));
    auto w = find_ordering(nice, budget);
    if (!w) continue;
    auto seq = w->sequence;
    seq.push_back(a);
    auto full = Ordering<G>::of(A.group, std::move(seq));
    if (!verify_ordering(A.group, full, Variant::cmpp))
      throw std::logic_error("cmpp_reduce: extension produced repeated sums");
    return full;
  }
  throw NoOrderingFound(
      "cmpp_reduce: no removal candidate yields an ordering; "
      "conjecture-relevant failure for " + A.group.describe());
}

}  // namespace grouplab

#endif
