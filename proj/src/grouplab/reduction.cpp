#include "grouplab/reduction.hpp"

#include "nullstellensatz/primes.hpp"

namespace grouplab {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

Embedding embed_to_Z(const NiceSet<FreeGroup>& A) {
  const FreeGroup& g = A.group;
  const auto B = upsilon(A);

  Int bound = 0;
  for (const auto& z : B)
    for (const auto& comp : z) bound = std::max(bound, Int(g.rank * abs_int(comp)));

  Embedding emb;
  emb.bound = bound;
  emb.M = bound + 1;

  auto phi = [&](const FreeGroup::Elem& z) {
    Int v = 0;
    Int power = 1;
    for (const auto& comp : z) {
      v += comp * power;
      power *= emb.M;
    }
    return v;
  };

  // the base-M uniqueness argument guarantees this; check it anyway
  for (const auto& z : B)
    if (phi(z) == 0)
      throw std::logic_error(
          "embed_to_Z: kernel meets Upsilon(A) despite the base bound");

  for (const auto& a : A.elements) emb.image.push_back(phi(a));
  emb.embedded =
      NiceSet<IntegerGroup>::make(IntegerGroup{}, A.variant, emb.image);
  return emb;
}

Projection reduce_mod_prime(const NiceSet<IntegerGroup>& A) {
  Int bound = static_cast<std::int64_t>(A.size());
  for (const auto& z : upsilon(A)) bound = std::max(bound, abs_int(z));

  Int p = nullstellensatz::next_prime_above(bound);
  if (p > (Int(1) << 62))
    throw BudgetExceeded("reduce_mod_prime: required prime exceeds 2^62");
  CyclicGroup zp(static_cast<std::int64_t>(p));

  for (const auto& z : upsilon(A))
    if (z % p == 0)
      throw std::logic_error("reduce_mod_prime: kernel meets Upsilon(A)");

  std::vector<CyclicGroup::Elem> residues;
  for (const auto& a : A.elements) residues.push_back(zp.canonical(a));
  return Projection{zp.n,
                    NiceSet<CyclicGroup>::make(zp, A.variant, std::move(residues))};
}

ReductionTrace order_in_free_group(const NiceSet<FreeGroup>& A,
                                   const SearchBudget& budget) {
  Embedding emb = embed_to_Z(A);
  Projection proj = reduce_mod_prime(emb.embedded);

  detail::OrderingSearch<CyclicGroup> search(proj.projected, budget);
  auto w_p = search.run();
  if (!w_p)
    throw NoOrderingFound("order_in_free_group: no ordering in Z_" +
                          std::to_string(proj.p) +
                          "; conjecture-relevant failure");

  const CyclicGroup zp(proj.p);
  std::function<CyclicGroup::Elem(const Int&)> pi_p =
      [&zp](const Int& z) { return zp.canonical(z); };
  auto w_Z = lift_ordering(emb.embedded, *w_p, zp, pi_p);

  const Int M = emb.M;
  std::function<Int(const FreeGroup::Elem&)> phi = [&M](const FreeGroup::Elem& z) {
    Int v = 0, power = 1;
    for (const auto& comp : z) {
      v += comp * power;
      power *= M;
    }
    return v;
  };
  auto w_src = lift_ordering(A, w_Z, IntegerGroup{}, phi);

  return ReductionTrace{A,
                        std::move(emb),
                        std::move(proj),
                        std::move(*w_p),
                        std::move(w_Z),
                        std::move(w_src),
                        search.nodes()};
}

}  // namespace grouplab
