// psumlab: partial-sum conjecture laboratory.
//
// Subcommands: coeff, table, certify, order, sweep, consistency, cache.
// Structured reports go to stdout, diagnostics to stderr.  Exit codes:
//   0 success, 2 usage error, 3 budget/memory-guard exceeded,
//   4 conjecture-relevant failure (no ordering / no nonzero coefficient),
//   1 any other error.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "grouplab/consistency.hpp"
#include "grouplab/parse.hpp"
#include "grouplab/reduction.hpp"
#include "psumcli/cache.hpp"
#include "psumcli/report.hpp"

namespace nsz = nullstellensatz;
using grouplab::Variant;
using psumcli::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitConjecture = 4;

struct GlobalOptions {
  std::string cache_path;
  bool no_cache = false;
  int jobs = 0;
  std::size_t max_terms = 0;
  std::uint64_t search_budget = 500'000'000;
  std::string format = "json";

  std::unique_ptr<psumcli::FileCache> open_cache() const {
    if (no_cache) return nullptr;
    std::string path = cache_path;
    if (path.empty())
      if (const char* env = std::getenv("PSUMLAB_CACHE")) path = env;
    if (path.empty()) path = "psumlab-cache.jsonl";
    return std::make_unique<psumcli::FileCache>(path);
  }

  int workers() const {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("PSUMLAB_JOBS")) {
      int n = std::atoi(env);
      if (n > 0) return n;
    }
    return omp_get_max_threads();
  }

  nsz::ExtractOptions extract_options(nsz::RecordStore* cache) const {
    nsz::ExtractOptions opts;
    opts.build.compute.max_terms = max_terms;
    opts.build.compute.threads = workers();
    opts.cache = cache;
    return opts;
  }

  grouplab::SearchBudget budget() const { return {search_budget}; }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

class Timer {
public:
  double elapsed_ms() const { return ms_since(t0_); }

private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::vector<int> parse_j_list(const std::string& spec) {
  std::vector<int> out;
  if (spec.empty()) return out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw CLI::ValidationError("--j", "expected a comma-separated index list");
    out.push_back(std::stoi(part));
  }
  return out;
}

int emit_report(const GlobalOptions& g, const std::string& command, json params,
                json result, const Timer& timer, const std::string& text = "") {
  if (g.format == "text" && !text.empty()) {
    std::cout << text;
    return kExitOk;
  }
  psumcli::emit(psumcli::make_report(command, std::move(params),
                                     std::move(result), timer.elapsed_ms(),
                                     g.workers()),
                std::cout);
  return kExitOk;
}

int cmd_coeff(const GlobalOptions& g, int k, const std::string& family,
              int j, int i, const std::string& method) {
  Timer timer;
  nsz::TargetSpec target{nsz::family_from_name(family), k, j,
                         i > 0 ? std::optional<int>(i) : std::nullopt};
  auto cache = g.open_cache();
  auto opts = g.extract_options(cache.get());
  if (method == "capped") opts.method = nsz::Method::capped_pipeline;
  else if (method == "naive") opts.method = nsz::Method::naive_oracle;
  else if (method == "relation") opts.method = nsz::Method::relation;
  else if (method != "auto")
    throw CLI::ValidationError("--method", "expected auto, capped, naive or relation");

  nsz::CoefficientRecord rec = extract(target, opts);
  json params{{"k", k}, {"family", nsz::family_name(target.family)}, {"j", j}};
  if (target.i) params["i"] = *target.i;
  return emit_report(g, "coeff", std::move(params), psumcli::record_json(rec),
                     timer, rec.value.str() + "\n");
}

int cmd_table(const GlobalOptions& g, int k, const std::string& csv_path) {
  Timer timer;
  auto cache = g.open_cache();
  auto table = nsz::build_table(k, g.extract_options(cache.get()));
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path, std::ios::trunc);
    if (!csv) throw std::runtime_error("cannot open " + csv_path);
    psumcli::write_table_csv(table, csv);
  }
  return emit_report(g, "table", json{{"k", k}}, psumcli::table_json(table),
                     timer, psumcli::table_text(table));
}

int cmd_certify(const GlobalOptions& g, const std::string& conjecture, int k,
                const std::string& family, const std::string& j_spec,
                bool j_given) {
  Timer timer;
  if (j_given && parse_j_list(j_spec).empty())
    throw CLI::ValidationError("--j", "an explicitly empty j-range certifies nothing");
  const nsz::Conjecture conj = nsz::conjecture_from_name(conjecture);
  nsz::Family fam;
  if (!family.empty())
    fam = nsz::family_from_name(family);
  else
    fam = conj == nsz::Conjecture::alspach ? nsz::Family::C : nsz::Family::E;
  auto cache = g.open_cache();
  auto cert = nsz::certify(conj, k, fam, parse_j_list(j_spec),
                           g.extract_options(cache.get()));
  return emit_report(g, "certify",
                     json{{"conjecture", conjecture},
                          {"k", k},
                          {"family", nsz::family_name(fam)},
                          {"j", j_spec.empty() ? "all" : j_spec}},
                     psumcli::certificate_json(cert), timer,
                     "gcd = " + cert.gcd.str() + ", certified size " +
                         std::to_string(cert.certified_size) +
                         ", min admissible prime " +
                         cert.min_admissible_prime.str() + "\n");
}

int cmd_order(const GlobalOptions& g, const std::string& group_spec,
              const std::string& set_spec, const std::string& variant_name) {
  Timer timer;
  const Variant variant = grouplab::variant_from_name(variant_name);
  auto group = grouplab::parse_group(group_spec);
  json params{{"group", group_spec}, {"set", set_spec},
              {"variant", variant_name}};

  if (std::holds_alternative<grouplab::FreeGroup>(group)) {
    const auto& fg = std::get<grouplab::FreeGroup>(group);
    auto A = grouplab::NiceSet<grouplab::FreeGroup>::make(
        fg, variant, grouplab::parse_free_set(fg, set_spec));
    if (variant == Variant::cmpp) {
      auto w = grouplab::cmpp_reduce(A, g.budget());
      return emit_report(g, "order", std::move(params),
                         psumcli::ordering_json(fg, w), timer);
    }
    auto trace = grouplab::order_in_free_group(A, g.budget());
    return emit_report(g, "order", std::move(params),
                       psumcli::trace_json(trace), timer);
  }

  auto run = [&](auto group_value, auto elems) -> int {
    using G = decltype(group_value);
    auto A = grouplab::NiceSet<G>::make(group_value, variant, std::move(elems));
    if (variant == Variant::cmpp) {
      auto w = grouplab::cmpp_reduce(A, g.budget());
      return emit_report(g, "order", std::move(params),
                         psumcli::ordering_json(group_value, w), timer);
    }
    auto w = grouplab::find_ordering(A, g.budget());
    if (!w)
      throw grouplab::NoOrderingFound(
          "order: the search tree is exhausted and no valid ordering exists; "
          "this is a counterexample candidate -- please report it");
    return emit_report(g, "order", std::move(params),
                       psumcli::ordering_json(group_value, *w), timer);
  };

  if (std::holds_alternative<grouplab::CyclicGroup>(group)) {
    const auto& zn = std::get<grouplab::CyclicGroup>(group);
    return run(zn, grouplab::parse_cyclic_set(zn, set_spec));
  }
  return run(grouplab::IntegerGroup{},
             grouplab::parse_integer_set(set_spec));
}

int cmd_sweep(const GlobalOptions& g, const std::string& group_spec, int k,
              const std::string& variant_name) {
  Timer timer;
  auto group = grouplab::parse_group(group_spec);
  if (!std::holds_alternative<grouplab::CyclicGroup>(group))
    throw CLI::ValidationError("--group", "sweep requires a cyclic group Z<n>");
  const Variant variant = grouplab::variant_from_name(variant_name);
  auto rep = grouplab::sweep(std::get<grouplab::CyclicGroup>(group), k, variant,
                             g.budget(), g.workers());
  int code = emit_report(g, "sweep",
                         json{{"group", group_spec},
                              {"k", k},
                              {"variant", variant_name}},
                         psumcli::sweep_json(rep), timer);
  if (!rep.failures.empty()) {
    std::cerr << "sweep: " << rep.failures.size()
              << " counterexample(s) found -- conjecture-relevant failure\n";
    return kExitConjecture;
  }
  return code;
}

int cmd_consistency(const GlobalOptions& g, int k, std::int64_t p,
                    const std::string& variant_name) {
  Timer timer;
  const Variant variant = grouplab::variant_from_name(variant_name);
  auto cache = g.open_cache();
  auto opts = g.extract_options(cache.get());
  nsz::Certificate cert =
      variant == Variant::alspach
          ? nsz::certify(nsz::Conjecture::alspach, k, nsz::Family::C, {}, opts)
          : nsz::certify(nsz::Conjecture::gadms, k - 1, nsz::Family::E, {}, opts);
  auto rep = grouplab::nullstellensatz_consistency(k, p, variant, cert,
                                                   g.budget(), g.workers());
  json result = psumcli::consistency_json(rep);
  result["certificate"] = psumcli::certificate_json(cert);
  int code = emit_report(
      g, "consistency",
      json{{"k", k}, {"p", p}, {"variant", variant_name}}, std::move(result),
      timer);
  if (!rep.agree) {
    std::cerr << "consistency: certificate and sweep disagree\n";
    return kExitConjecture;
  }
  return code;
}

int cmd_cache(const GlobalOptions& g, const std::string& action,
              const std::string& file, std::size_t sample, unsigned seed,
              int max_k) {
  Timer timer;
  auto cache = g.open_cache();
  if (!cache) throw CLI::ValidationError("cache", "no cache path configured");
  json params{{"action", action}, {"path", cache->path().string()}};

  if (action == "list") {
    json records = json::array();
    for (const auto& rec : cache->records())
      records.push_back(psumcli::record_json(rec));
    return emit_report(g, "cache", std::move(params),
                       json{{"count", cache->size()},
                            {"records", std::move(records)}},
                       timer);
  }
  if (action == "clear") {
    const std::size_t n = cache->size();
    cache->clear();
    return emit_report(g, "cache", std::move(params),
                       json{{"removed", n}}, timer);
  }
  if (action == "export") {
    if (file.empty()) throw CLI::ValidationError("--file", "export needs a path");
    const std::size_t n = cache->export_to(file);
    return emit_report(g, "cache", std::move(params),
                       json{{"exported", n}, {"file", file}}, timer);
  }
  if (action == "import") {
    if (file.empty()) throw CLI::ValidationError("--file", "import needs a path");
    const std::size_t n = cache->import_from(file);
    return emit_report(g, "cache", std::move(params),
                       json{{"imported", n}, {"file", file}}, timer);
  }
  if (action == "verify") {
    // spot-check: recompute a deterministic random sample and compare
    auto all = cache->records();
    std::vector<nsz::CoefficientRecord> eligible;
    for (auto& rec : all)
      if (rec.target.k <= max_k) eligible.push_back(rec);
    std::mt19937 rng(seed);
    std::shuffle(eligible.begin(), eligible.end(), rng);
    if (sample < eligible.size()) eligible.resize(sample);
    json checked = json::array();
    bool ok = true;
    for (const auto& rec : eligible) {
      auto opts = g.extract_options(nullptr);  // force recomputation
      auto fresh = extract(rec.target, opts);
      const bool match = fresh.value == rec.value;
      ok = ok && match;
      checked.push_back(json{{"target", rec.target.describe()},
                             {"cached", rec.value.str()},
                             {"recomputed", fresh.value.str()},
                             {"match", match}});
    }
    int code = emit_report(g, "cache", std::move(params),
                           json{{"checked", std::move(checked)}, {"ok", ok}},
                           timer);
    if (!ok) {
      std::cerr << "cache verify: cached value differs from recomputation\n";
      return kExitError;
    }
    return code;
  }
  throw CLI::ValidationError(
      "--action", "expected list, clear, import, export or verify");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"psumlab: coefficient extraction and ordering search for "
               "partial-sum conjectures in abelian groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", psumcli::kToolVersion);

  GlobalOptions g;
  app.add_option("--cache", g.cache_path,
                 "coefficient cache path (default $PSUMLAB_CACHE or "
                 "./psumlab-cache.jsonl)");
  app.add_flag("--no-cache", g.no_cache, "disable the coefficient cache");
  app.add_option("--jobs", g.jobs,
                 "worker count (default $PSUMLAB_JOBS or all cores)");
  app.add_option("--max-terms", g.max_terms,
                 "memory guard: max live terms per polynomial container");
  app.add_option("--budget", g.search_budget,
                 "search budget: max backtracking nodes");
  app.add_option("--format", g.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  int k = 0, i = 0, j = 0, max_k = 8;
  std::int64_t p = 0;
  std::size_t sample = 5;
  unsigned seed = 0;
  std::string family, method = "auto", conjecture, j_spec, group_spec, set_spec;
  std::string variant_name = "alspach", csv_path, action, file;

  auto* coeff = app.add_subcommand("coeff", "extract one coefficient record");
  coeff->add_option("--k", k, "family level")->required();
  coeff->add_option("--family", family, "a, c, e or d")->required();
  coeff->add_option("--j", j, "column index")->required();
  coeff->add_option("--i", i, "row index (family a only)");
  coeff->add_option("--method", method, "auto, capped, naive or relation");

  auto* table = app.add_subcommand("table", "full a-matrix and e-column");
  table->add_option("--k", k, "family level")->required();
  table->add_option("--csv", csv_path, "also write a CSV export");

  auto* certify = app.add_subcommand("certify", "gcd certificate");
  certify->add_option("--conjecture", conjecture, "alspach or gadms")->required();
  certify->add_option("--k", k, "family level")->required();
  certify->add_option("--family", family, "c, e or d (default per conjecture)");
  certify->add_option("--j", j_spec, "comma-separated j list (default all)");

  auto* order = app.add_subcommand("order", "order one set");
  order->add_option("--group", group_spec, "Z, Z<n> or Z^<m>")->required();
  order->add_option("--set", set_spec,
                    "comma-separated values, or (v);(w) vectors for Z^m")
      ->required();
  order->add_option("--variant", variant_name, "alspach, gadms or cmpp");

  auto* sweep = app.add_subcommand("sweep", "exhaustive subset sweep");
  sweep->add_option("--group", group_spec, "cyclic group Z<n>")->required();
  sweep->add_option("--k", k, "subset size")->required();
  sweep->add_option("--variant", variant_name, "alspach, gadms or cmpp");

  auto* consistency = app.add_subcommand(
      "consistency", "certificate vs exhaustive sweep in Z_p");
  consistency->add_option("--k", k, "subset size")->required();
  consistency->add_option("--p", p, "prime modulus")->required();
  consistency->add_option("--variant", variant_name, "alspach or gadms");

  auto* cache_cmd = app.add_subcommand("cache", "cache maintenance");
  cache_cmd->add_option("--action", action,
                        "list, clear, import, export or verify")
      ->required();
  cache_cmd->add_option("--file", file, "import/export path");
  cache_cmd->add_option("--sample", sample, "verify: sample size");
  cache_cmd->add_option("--seed", seed, "verify: sample seed");
  cache_cmd->add_option("--max-k", max_k, "verify: recompute only k <= this");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (g.jobs > 0) omp_set_num_threads(g.jobs);

  try {
    if (coeff->parsed()) return cmd_coeff(g, k, family, j, i, method);
    if (table->parsed()) return cmd_table(g, k, csv_path);
    if (certify->parsed())
      return cmd_certify(g, conjecture, k, family, j_spec,
                         certify->count("--j") > 0);
    if (order->parsed()) return cmd_order(g, group_spec, set_spec, variant_name);
    if (sweep->parsed()) return cmd_sweep(g, group_spec, k, variant_name);
    if (consistency->parsed()) return cmd_consistency(g, k, p, variant_name);
    if (cache_cmd->parsed())
      return cmd_cache(g, action, file, sample, seed, max_k);
    std::cerr << "psumlab: no subcommand\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "psumlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const polycore::TermBudgetExceeded& e) {
    std::cerr << "psumlab: " << e.what() << "\n";
    return kExitBudget;
  } catch (const grouplab::BudgetExceeded& e) {
    std::cerr << "psumlab: " << e.what() << "\n";
    return kExitBudget;
  } catch (const grouplab::NoOrderingFound& e) {
    std::cerr << "psumlab: " << e.what() << "\n";
    return kExitConjecture;
  } catch (const nsz::NoNonzeroCoefficient& e) {
    std::cerr << "psumlab: " << e.what() << "\n";
    return kExitConjecture;
  } catch (const std::invalid_argument& e) {
    std::cerr << "psumlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "psumlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "psumlab: " << e.what() << "\n";
    return kExitError;
  }
}
