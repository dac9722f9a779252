#include "polycore/polynomial.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace polycore {

namespace {

void check_budget(std::size_t size, std::size_t budget, const char* where) {
  if (size > budget)
    throw TermBudgetExceeded(std::string(where) + ": live term count " +
                             std::to_string(size) + " exceeds the budget of " +
                             std::to_string(budget) +
                             " (workload too large for the configured guard)");
}

void append_or_accumulate(std::vector<Term>& out, Monomial m, Coeff c) {
  if (!out.empty() && out.back().mono == m) {
    out.back().coeff += c;
    if (out.back().coeff == 0) out.pop_back();
  } else if (c != 0) {
    out.push_back({m, std::move(c)});
  }
}

/// Merges two canonical term vectors, summing coefficients on equal keys.
std::vector<Term> merge_terms(std::vector<Term>&& a, std::vector<Term>&& b,
                              std::size_t budget, const char* where) {
  if (a.empty()) return std::move(b);
  if (b.empty()) return std::move(a);
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia].mono < b[ib].mono) {
      out.push_back(std::move(a[ia++]));
    } else if (b[ib].mono < a[ia].mono) {
      out.push_back(std::move(b[ib++]));
    } else {
      Coeff c = std::move(a[ia].coeff);
      c += b[ib].coeff;
      if (c != 0) out.push_back({a[ia].mono, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  for (; ia < a.size(); ++ia) out.push_back(std::move(a[ia]));
  for (; ib < b.size(); ++ib) out.push_back(std::move(b[ib]));
  check_budget(out.size(), budget, where);
  return out;
}

/// One block of the capped product: (terms of p in [lo,hi)) * q.  Streams the
/// q-shifted copies of the block through a small binary heap; each shifted
/// copy is sorted because adding a fixed exponent vector preserves the
/// lexicographic order, so the heap merge emits the block product in
/// canonical order with equal keys adjacent.
std::vector<Term> block_product(std::span<const Term> p, std::size_t lo,
                                std::size_t hi, std::span<const Term> q,
                                const CapProfile& caps, std::size_t budget) {
  struct Cursor {
    Monomial key;
    std::size_t pi;
    std::uint32_t qi;
  };
  const std::size_t m = q.size();
  std::vector<Cursor> heap;
  heap.reserve(m);

  auto cursor_less = [](const Cursor& a, const Cursor& b) {
    // max-heap on (key, qi) inverted -> pops ascending; qi breaks ties so the
    // comparator is a strict weak order (pop order of equal keys is irrelevant
    // to the accumulated sum).
    if (a.key != b.key) return b.key < a.key;
    return b.qi < a.qi;
  };

  // first admissible product of stream qi at or after position from
  auto advance = [&](std::uint32_t qi, std::size_t from) -> std::optional<Cursor> {
    const Monomial& shift = q[qi].mono;
    for (std::size_t pi = from; pi < hi; ++pi) {
      Monomial key = p[pi].mono.times(shift);
      if (caps.admits(key)) return Cursor{key, pi, qi};
    }
    return std::nullopt;
  };

  for (std::uint32_t qi = 0; qi < m; ++qi)
    if (auto c = advance(qi, lo)) heap.push_back(*c);
  std::make_heap(heap.begin(), heap.end(), cursor_less);

  std::vector<Term> out;
  out.reserve(std::min((hi - lo) * m, (hi - lo) + (hi - lo) / 2 + 64));
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), cursor_less);
    Cursor cur = heap.back();
    heap.pop_back();

    Coeff c = p[cur.pi].coeff * q[cur.qi].coeff;
    append_or_accumulate(out, cur.key, std::move(c));
    check_budget(out.size(), budget, "mul_capped");

    if (auto next = advance(cur.qi, cur.pi + 1)) {
      heap.push_back(*next);
      std::push_heap(heap.begin(), heap.end(), cursor_less);
    }
  }
  return out;
}

}  // namespace

std::size_t default_term_budget() {
  static const std::size_t budget = [] {
    std::size_t mem_kb = 0;
    std::ifstream f("/proc/meminfo");
    std::string key;
    while (f >> key) {
      if (key == "MemTotal:") {
        f >> mem_kb;
        break;
      }
      f.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    }
    if (mem_kb == 0) return std::size_t(64) << 20;  // fallback: 64M terms
    return (mem_kb * 1024 / 2) / sizeof(Term);
  }();
  return budget;
}

std::size_t ComputeOptions::term_budget() const {
  return max_terms == 0 ? default_term_budget() : max_terms;
}

int ComputeOptions::worker_count() const {
  if (threads > 0) return threads;
  return omp_get_max_threads();
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  for (const Term& t : terms)
    if (!t.mono.fits_in(nvars))
      throw std::invalid_argument(
          "from_terms: monomial uses a variable beyond nvars");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  for (Term& t : terms)
    append_or_accumulate(p.terms_, t.mono, std::move(t.coeff));
  return p;
}

Coeff Polynomial::coefficient_of(const Monomial& m) const {
  if (!m.fits_in(nvars_))
    throw std::invalid_argument(
        "coefficient_of: monomial length exceeds the polynomial's nvars");
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

Coeff Polynomial::coefficient_of(std::span<const unsigned> exps) const {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("coefficient_of: exponent list length " +
                                std::to_string(exps.size()) + " != nvars " +
                                std::to_string(nvars_));
  return coefficient_of(Monomial::from_exponents(exps));
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = terms_.front().mono.total_degree();
  for (const Term& t : terms_)
    if (t.mono.total_degree() != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (first)
      os << (t.coeff < 0 ? "-" : "");
    else
      os << (t.coeff < 0 ? " - " : " + ");
    first = false;
    const Coeff mag = abs(t.coeff);
    const bool has_vars = t.mono.total_degree() > 0;
    if (!has_vars) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    bool star = false;
    for (int r = 0; r < nvars_; ++r) {
      unsigned e = t.mono.exponent(r);
      if (e == 0) continue;
      if (star) os << "*";
      os << "x" << (r + 1);
      if (e > 1) os << "^" << e;
      star = true;
    }
  }
  return os.str();
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  if (p.nvars_ != q.nvars_)
    throw std::invalid_argument("add: variable-count mismatch (" +
                                std::to_string(p.nvars_) + " vs " +
                                std::to_string(q.nvars_) + ")");
  Polynomial out(p.nvars_);
  std::vector<Term> a = p.terms_, b = q.terms_;
  out.terms_ = merge_terms(std::move(a), std::move(b),
                           default_term_budget(), "add");
  return out;
}

Polynomial cut(const Polynomial& p, int var, unsigned cap) {
  if (var < 1 || var > p.nvars_)
    throw std::out_of_range("cut: variable index out of range");
  Polynomial out(p.nvars_);
  out.terms_.reserve(p.terms_.size());
  for (const Term& t : p.terms_)
    if (t.mono.exponent(var - 1) <= cap) out.terms_.push_back(t);
  return out;
}

Polynomial truncate(const Polynomial& p, const CapProfile& caps) {
  if (caps.nvars() != p.nvars_)
    throw std::invalid_argument("truncate: cap profile dimension mismatch");
  Polynomial out(p.nvars_);
  out.terms_.reserve(p.terms_.size());
  for (const Term& t : p.terms_)
    if (caps.admits(t.mono)) out.terms_.push_back(t);
  return out;
}

Polynomial mul_capped_serial(const Polynomial& p, const Polynomial& q,
                             const CapProfile& caps,
                             const ComputeOptions& opts) {
  if (p.nvars_ != q.nvars_ || caps.nvars() != p.nvars_)
    throw std::invalid_argument("mul_capped: dimension mismatch");
  const std::size_t budget = opts.term_budget();
  std::map<Monomial, Coeff> acc;
  for (const Term& tp : p.terms_) {
    for (const Term& tq : q.terms_) {
      Monomial m = tp.mono.times(tq.mono);
      if (!caps.admits(m)) continue;
      acc[m] += tp.coeff * tq.coeff;
      check_budget(acc.size(), budget, "mul_capped_serial");
    }
  }
  Polynomial out(p.nvars_);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, std::move(c)});
  return out;
}

Polynomial mul_capped(const Polynomial& p, const Polynomial& q,
                      const CapProfile& caps, const ComputeOptions& opts) {
  if (p.nvars_ != q.nvars_ || caps.nvars() != p.nvars_)
    throw std::invalid_argument("mul_capped: dimension mismatch");
  Polynomial out(p.nvars_);
  if (p.terms_.empty() || q.terms_.empty()) return out;

  // stream the larger operand against the smaller one
  const Polynomial& big = p.terms_.size() >= q.terms_.size() ? p : q;
  const Polynomial& small = p.terms_.size() >= q.terms_.size() ? q : p;
  const std::size_t budget = opts.term_budget();

  // With a wide small operand the heap degrades; split it and add the
  // partial products (addition commutes with the quotient projection).
  constexpr std::size_t kMaxMergeWidth = 24;
  if (small.terms_.size() > kMaxMergeWidth) {
    std::vector<Polynomial> parts;
    for (std::size_t lo = 0; lo < small.terms_.size(); lo += kMaxMergeWidth) {
      std::size_t hi = std::min(lo + kMaxMergeWidth, small.terms_.size());
      Polynomial piece(small.nvars_);
      piece.terms_.assign(small.terms_.begin() + static_cast<std::ptrdiff_t>(lo),
                          small.terms_.begin() + static_cast<std::ptrdiff_t>(hi));
      parts.push_back(mul_capped(big, piece, caps, opts));
    }
    while (parts.size() > 1) {
      std::vector<Polynomial> next;
      for (std::size_t t = 0; t + 1 < parts.size(); t += 2)
        next.push_back(add(parts[t], parts[t + 1]));
      if (parts.size() % 2) next.push_back(std::move(parts.back()));
      parts.swap(next);
    }
    return parts.front();
  }

  const std::size_t n = big.terms_.size();
  int workers = opts.worker_count();
  if (omp_in_parallel() || n * small.terms_.size() < (std::size_t(1) << 15))
    workers = 1;
  const std::size_t nchunks =
      std::max<std::size_t>(1, std::min<std::size_t>(workers, n));

  std::vector<std::vector<Term>> chunk_out(nchunks);
  std::exception_ptr error;
#pragma omp parallel for schedule(static) num_threads(static_cast<int>(nchunks))
  for (std::size_t c = 0; c < nchunks; ++c) {
    try {
      std::size_t lo = c * n / nchunks;
      std::size_t hi = (c + 1) * n / nchunks;
      chunk_out[c] =
          block_product(big.terms_, lo, hi, small.terms_, caps, budget);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  // fixed-order pairwise merge keeps the result schedule-independent
  std::vector<std::vector<Term>> layer = std::move(chunk_out);
  while (layer.size() > 1) {
    std::vector<std::vector<Term>> next;
    for (std::size_t t = 0; t + 1 < layer.size(); t += 2)
      next.push_back(merge_terms(std::move(layer[t]), std::move(layer[t + 1]),
                                 budget, "mul_capped"));
    if (layer.size() % 2) next.push_back(std::move(layer.back()));
    layer.swap(next);
  }
  out.terms_ = std::move(layer.front());
  return out;
}

Polynomial expand_product_naive(std::span<const Polynomial> factors,
                                const ComputeOptions& opts) {
  const std::size_t budget = opts.term_budget();
  if (factors.empty()) return Polynomial::constant(1, 1);
  const int nvars = factors.front().nvars();
  for (const Polynomial& f : factors)
    if (f.nvars() != nvars)
      throw std::invalid_argument("expand_product_naive: mixed variable counts");

  std::map<Monomial, Coeff> acc;
  acc[Monomial{}] = 1;
  for (const Polynomial& f : factors) {
    std::map<Monomial, Coeff> next;
    for (const auto& [m, c] : acc) {
      for (const Term& t : f.terms()) {
        next[m.times(t.mono)] += c * t.coeff;
        check_budget(next.size(), budget, "expand_product_naive");
      }
    }
    acc.swap(next);
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace polycore
