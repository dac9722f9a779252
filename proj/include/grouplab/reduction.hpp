#ifndef PSUMLAB_GROUPLAB_REDUCTION_HPP
#define PSUMLAB_GROUPLAB_REDUCTION_HPP

#include <functional>
#include <map>

#include "grouplab/search.hpp"

namespace grouplab {

/// Lifts a valid ordering through a homomorphism phi whose kernel misses
/// Upsilon(A): the lift is the ordering of A inducing the same permutation,
/// and its partial sums are automatically distinct (and nonzero, alspach).
/// Both facts are re-verified rather than assumed.
template <AbelianGroup G1, AbelianGroup G2>
Ordering<G1> lift_ordering(
    const NiceSet<G1>& A, const Ordering<G2>& image_ordering, const G2& target,
    const std::function<typename G2::Elem(const typename G1::Elem&)>& phi) {
  for (const auto& z : upsilon(A))
    if (target.is_zero(phi(z)))
      throw std::invalid_argument(
          "lift_ordering: ker(phi) meets Upsilon(A); the transfer lemma "
          "does not apply");

  // phi is injective on A (differences lie in Upsilon), so fibers are unique
  std::map<typename G2::Elem, typename G1::Elem> fiber;
  for (const auto& a : A.elements) {
    if (!fiber.emplace(phi(a), a).second)
      throw std::logic_error("lift_ordering: phi not injective on A");
  }
  std::vector<typename G1::Elem> seq;
  seq.reserve(image_ordering.sequence.size());
  for (const auto& x : image_ordering.sequence) {
    auto it = fiber.find(x);
    if (it == fiber.end())
      throw std::invalid_argument(
          "lift_ordering: image ordering contains an element outside phi(A)");
    seq.push_back(it->second);
  }
  if (seq.size() != A.elements.size())
    throw std::invalid_argument("lift_ordering: image ordering misses elements");

  auto lifted = Ordering<G1>::of(A.group, std::move(seq));
  if (!verify_ordering(A.group, lifted, A.variant))
    throw std::logic_error(
        "lift_ordering: lifted ordering failed verification");
  return lifted;
}

/// Base-M embedding of a nice subset of Z^m into Z.
struct Embedding {
  Int M;                                // smallest admissible base
  Int bound;                            // the max_{z in Upsilon} max_j m*|z_j| bound
  std::vector<Int> image;               // phi(A), aligned with A.elements
  NiceSet<IntegerGroup> embedded;       // phi(A) as a nice set
};

/// phi(x_1..x_m) = sum x_i M^{i-1} with M = bound + 1, where bound is taken
/// over B = Upsilon(A).  Base-M uniqueness makes ker(phi) miss B; the
/// disjointness is still checked explicitly for every element of B.
Embedding embed_to_Z(const NiceSet<FreeGroup>& A);

/// Projection of a nice subset of Z onto Z_p for the smallest prime p
/// exceeding both max_{z in Upsilon(A)} |z| and |A|.
struct Projection {
  std::int64_t p = 0;
  NiceSet<CyclicGroup> projected;
};

Projection reduce_mod_prime(const NiceSet<IntegerGroup>& A);

/// Full constructive chain for a nice subset of Z^m: embed into Z, project
/// into Z_p, search there, then lift the ordering back level by level.
struct ReductionTrace {
  NiceSet<FreeGroup> source;
  Embedding embedding;
  Projection projection;
  Ordering<CyclicGroup> ordering_mod_p;
  Ordering<IntegerGroup> ordering_in_Z;
  Ordering<FreeGroup> ordering_in_source;
  std::uint64_t search_nodes = 0;
};

ReductionTrace order_in_free_group(const NiceSet<FreeGroup>& A,
                                   const SearchBudget& budget = {});

}  // namespace grouplab

#endif
