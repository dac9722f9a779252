#ifndef PSUMLAB_GROUPLAB_NICESET_HPP
#define PSUMLAB_GROUPLAB_NICESET_HPP

#include <algorithm>
#include <optional>

#include "grouplab/group.hpp"

namespace grouplab {

// Which conjecture's set conditions and partial-sum requirements apply.
//   alspach: 0 not in A, sum(A) != 0; sums distinct and nonzero
//   gadms:   0 not in A;              sums distinct
//   cmpp:    0 not in A, sum(A) == 0, no pair {x,-x}; sums distinct
enum class Variant { alspach, gadms, cmpp };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& s);

template <AbelianGroup G>
struct NiceSet {
  G group;
  Variant variant;
  std::vector<typename G::Elem> elements;  // ascending, distinct

  static NiceSet make(G g, Variant v, std::vector<typename G::Elem> elems) {
    using Elem = typename G::Elem;
    if (elems.empty())
      throw std::invalid_argument("nice set: the empty set is rejected");
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
      throw std::invalid_argument("nice set: elements must be distinct");
    for (const Elem& e : elems) {
      if (!g.element_ok(e))
        throw std::invalid_argument("nice set: element outside " + g.describe());
      if (g.is_zero(e))
        throw std::invalid_argument("nice set: 0 is not allowed");
    }
    Elem total = g.zero();
    for (const Elem& e : elems) total = g.add(total, e);
    if (v == Variant::alspach && g.is_zero(total))
      throw std::invalid_argument(
          "nice set (alspach): the elements must not sum to 0");
    if (v == Variant::cmpp) {
      if (!g.is_zero(total))
        throw std::invalid_argument("nice set (cmpp): the elements must sum to 0");
      for (const Elem& e : elems)
        if (std::binary_search(elems.begin(), elems.end(), g.neg(e)))
          throw std::invalid_argument(
              "nice set (cmpp): contains a pair {x, -x}");
    }
    return NiceSet{std::move(g), v, std::move(elems)};
  }

  std::size_t size() const { return elements.size(); }

  typename G::Elem sum() const {
    auto total = group.zero();
    for (const auto& e : elements) total = group.add(total, e);
    return total;
  }
};

/// Delta(A): pairwise differences of distinct elements, deduplicated,
/// ascending.  Empty for singletons.
template <AbelianGroup G>
std::vector<typename G::Elem> delta_set(const NiceSet<G>& A) {
  std::vector<typename G::Elem> out;
  for (const auto& x : A.elements)
    for (const auto& y : A.elements)
      if (x != y) out.push_back(A.group.add(x, A.group.neg(y)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Upsilon(A) = A u Delta(A) u {sum A} for the alspach and cmpp variants,
/// A u Delta(A) for gadms: the set a transfer homomorphism's kernel must miss.
template <AbelianGroup G>
std::vector<typename G::Elem> upsilon(const NiceSet<G>& A) {
  std::vector<typename G::Elem> out = delta_set(A);
  out.insert(out.end(), A.elements.begin(), A.elements.end());
  if (A.variant != Variant::gadms) out.push_back(A.sum());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// An ordering of a set's elements together with its partial-sum trace.
template <AbelianGroup G>
struct Ordering {
  std::vector<typename G::Elem> sequence;
  std::vector<typename G::Elem> partial_sums;

  static Ordering of(const G& g, std::vector<typename G::Elem> seq) {
    Ordering w;
    auto s = g.zero();
    w.partial_sums.reserve(seq.size());
    for (const auto& e : seq) {
      s = g.add(s, e);
      w.partial_sums.push_back(s);
    }
    w.sequence = std::move(seq);
    return w;
  }
};

/// Partial sums pairwise distinct; additionally all nonzero for alspach.
template <AbelianGroup G>
bool verify_ordering(const G& g, const Ordering<G>& w, Variant v) {
  const auto& s = w.partial_sums;
  if (s.size() != w.sequence.size()) return false;
  // recompute rather than trust the trace
  auto acc = g.zero();
  for (std::size_t t = 0; t < s.size(); ++t) {
    acc = g.add(acc, w.sequence[t]);
    if (acc != s[t]) return false;
    if (v == Variant::alspach && g.is_zero(acc)) return false;
    for (std::size_t u = 0; u < t; ++u)
      if (s[u] == acc) return false;
  }
  return true;
}

}  // namespace grouplab

#endif
