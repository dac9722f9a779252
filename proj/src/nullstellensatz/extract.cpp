#include "nullstellensatz/extract.hpp"

#include <omp.h>

#include <chrono>
#include <exception>

namespace nullstellensatz {

using polycore::Coeff;
using polycore::Monomial;
using polycore::Polynomial;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

CoefficientRecord finish(TargetSpec target, Coeff value, Method method,
                         double wall_ms, std::size_t peak,
                         const ExtractOptions& opts) {
  CoefficientRecord rec{std::move(target), std::move(value), method, wall_ms,
                        peak};
  if (opts.cache) opts.cache->store(rec);
  return rec;
}

CoefficientRecord extract_capped(const TargetSpec& target,
                                 const ExtractOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t peak = 0;
  Polynomial F =
      build_F_capped(target.k, cap_profile_for(target), opts.build.compute, &peak);
  Coeff value = F.coefficient_of(target.target_monomial());
  return finish(target, std::move(value), Method::capped_pipeline, ms_since(t0),
                peak, opts);
}

CoefficientRecord extract_naive(const TargetSpec& target,
                                const ExtractOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  Polynomial poly = [&] {
    switch (target.family) {
      case Family::A:
      case Family::C: {
        auto fs = F_factor_list(target.k, target.k);
        return expand_product_naive(fs, opts.build.compute);
      }
      case Family::E: return build_g(target.k, opts.build);
      case Family::D: return build_f(target.k + 1, opts.build);
    }
    throw InvalidTarget("extract: unknown family");
  }();
  Coeff value = poly.coefficient_of(target.target_monomial());
  return finish(target, std::move(value), Method::naive_oracle, ms_since(t0),
                poly.term_count(), opts);
}

CoefficientRecord extract_d_by_relation(const TargetSpec& target,
                                        const ExtractOptions& opts) {
  // d_{k+1,j+1} = (-1)^k e_{k,j}; only j >= 2 has a relation partner.
  if (target.j < 2)
    throw InvalidTarget(target.describe() +
                        ": the sign relation covers j >= 2 only");
  const auto t0 = std::chrono::steady_clock::now();
  TargetSpec e_target{Family::E, target.k, target.j - 1, std::nullopt};
  ExtractOptions sub = opts;
  sub.method.reset();
  CoefficientRecord e_rec = extract(e_target, sub);
  Coeff value = target.k % 2 == 0 ? e_rec.value : -e_rec.value;
  return finish(target, std::move(value), Method::relation, ms_since(t0),
                e_rec.peak_terms, opts);
}

}  // namespace

std::vector<CoefficientRecord> extract_row(int k, int j,
                                           const ExtractOptions& opts) {
  TargetSpec{Family::E, k, j, std::nullopt}.validate();
  std::vector<int> is;
  for (int i = 1; i <= k; ++i)
    if (i != j) is.push_back(i);

  std::vector<CoefficientRecord> rows(is.size());
  std::exception_ptr error;
  // the a-jobs share nothing: one capped pipeline per i
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t t = 0; t < is.size(); ++t) {
    try {
      rows[t] = extract(TargetSpec{Family::A, k, j, is[t]}, opts);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

CoefficientRecord extract(const TargetSpec& target, const ExtractOptions& opts) {
  target.validate();
  if (opts.cache) {
    if (auto hit = opts.cache->lookup(target)) return *hit;
  }

  if (opts.method) {
    switch (*opts.method) {
      case Method::capped_pipeline:
        if (target.family == Family::D)
          throw InvalidTarget(
              "extract: family d has no direct capped pipeline; use the "
              "relation or naive route");
        if (target.family == Family::E) break;  // the default path below
        return extract_capped(target, opts);
      case Method::naive_oracle: return extract_naive(target, opts);
      case Method::relation:
        if (target.family != Family::D)
          throw InvalidTarget("extract: only family d is defined by a relation");
        return extract_d_by_relation(target, opts);
    }
  }

  switch (target.family) {
    case Family::A:
    case Family::C: return extract_capped(target, opts);
    case Family::E: {
      const auto t0 = std::chrono::steady_clock::now();
      auto rows = extract_row(target.k, target.j, opts);
      Coeff sum = 0;
      std::size_t peak = 0;
      for (const auto& r : rows) {
        sum += r.value;
        peak = std::max(peak, r.peak_terms);
      }
      return finish(target, std::move(sum), Method::capped_pipeline,
                    ms_since(t0), peak, opts);
    }
    case Family::D:
      if (target.j >= 2) return extract_d_by_relation(target, opts);
      return extract_naive(target, opts);
  }
  throw InvalidTarget("extract: unknown family");
}

CoefficientTable build_table(int k, const ExtractOptions& opts) {
  CoefficientTable table;
  table.k = k;
  for (int j = 1; j <= k; ++j) {
    auto rows = extract_row(k, j, opts);
    Coeff sum = 0;
    std::size_t peak = 0;
    for (const auto& r : rows) {
      sum += r.value;
      peak = std::max(peak, r.peak_terms);
    }
    CoefficientRecord e{TargetSpec{Family::E, k, j, std::nullopt}, sum,
                        Method::capped_pipeline, 0.0, peak};
    if (opts.cache) opts.cache->store(e);
    for (auto& r : rows) table.a.push_back(std::move(r));
    table.e.push_back(std::move(e));
  }
  return table;
}

SignRelationReport sign_relation_check(int k, const ExtractOptions& opts) {
  SignRelationReport rep;
  rep.k = k;
  rep.sign = ((k - 1) / 2) % 2 == 0 ? 1 : -1;
  rep.all_hold = true;
  for (int j = 1; j <= k; ++j) {
    CoefficientRecord e = extract(TargetSpec{Family::E, k, j, std::nullopt}, opts);
    CoefficientRecord c = extract(TargetSpec{Family::C, k, j, std::nullopt}, opts);
    bool ok = e.value == rep.sign * c.value;
    rep.e_values.push_back(std::move(e.value));
    rep.c_values.push_back(std::move(c.value));
    rep.holds.push_back(ok);
    rep.all_hold = rep.all_hold && ok;
  }
  return rep;
}

}  // namespace nullstellensatz
