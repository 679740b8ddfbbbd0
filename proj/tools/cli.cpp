#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "output.hpp"
#include "runprob/crosscheck.hpp"
#include "runprob/distribution.hpp"
#include "runprob/methods.hpp"
#include "runprob/oracle.hpp"

namespace runprob::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
  std::string mode = "exact";
  std::string format = "plain";
  int digits = 10;
  bool no_timing = false;

  bool exact() const { return mode == "exact"; }
  Format output_format() const {
    if (format == "csv") return Format::Csv;
    if (format == "json") return Format::Json;
    return Format::Plain;
  }
};

// Exact mode keeps the typed value exactly; float mode rounds it once.
Rational parse_exact_p(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("malformed --p '" + text + "': " + e.what());
  }
}

double parse_float_p(const std::string& text) {
  const double p = parse_exact_p(text).to_double();
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("--p must lie in [0, 1], got '" + text + "'");
  return p;
}

TrialSpec exact_spec(std::uint64_t n, const std::string& p_text) {
  try {
    return TrialSpec(n, parse_exact_p(p_text));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::int64_t elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
}

void require_run_length(std::uint64_t r) {
  if (r == 0) throw UsageError("--r must be at least 1");
}

Method method_from_flag(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw UsageError("unknown method '" + name + "'");
  return *m;
}

OutputRecord evaluate_record(const GlobalOptions& g, std::uint64_t n, std::uint64_t r, const std::string& p_text,
                             Method method, unsigned brute_cap) {
  require_run_length(r);
  OutputRecord rec{n, r, p_text, std::string(method_name(method)), std::nullopt, "", 0};
  const auto start = std::chrono::steady_clock::now();
  if (g.exact()) {
    const TrialSpec spec = exact_spec(n, p_text);
    const Rational value = method == Method::BruteForce ? brute_force_y(spec, r, brute_cap)
                                                        : y_evaluate(RunQuery{spec, r, method});
    rec.elapsed_ns = elapsed_since(start);
    rec.value_exact = value.to_string();
    rec.value_decimal = value.to_decimal(g.digits);
  } else {
    const FloatTrialSpec spec(n, parse_float_p(p_text));
    const double value = method == Method::BruteForce ? brute_force_y(spec, r, brute_cap)
                                                      : y_evaluate(FloatRunQuery{spec, r, method});
    rec.elapsed_ns = elapsed_since(start);
    rec.value_decimal = format_double(value, g.digits);
  }
  if (g.no_timing) rec.elapsed_ns = 0;
  return rec;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto v = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const auto lo = std::stoull(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const auto hi = std::stoull(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    if (lo > hi) throw UsageError(flag + " " + text + " is an empty range");
    return {lo, hi};
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError(flag + " expects A..B, got '" + text + "'");
  }
}

// ---- subcommands ----

struct ProbArgs {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::string p;
  std::string method = "auto";
  unsigned brute_cap = kDefaultBruteForceCap;
};

int cmd_prob(const GlobalOptions& g, const ProbArgs& a, std::ostream& out) {
  const auto rec = evaluate_record(g, a.n, a.r, a.p, method_from_flag(a.method), a.brute_cap);
  write_records(out, {rec}, g.output_format(), false);
  return kSuccess;
}

struct CrosscheckArgs {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::string p;
  unsigned brute_cap = kDefaultBruteForceCap;
  double tolerance = 1e-9;
};

int cmd_crosscheck(const GlobalOptions& g, const CrosscheckArgs& a, std::ostream& out) {
  require_run_length(a.r);
  const CrosscheckOptions options{a.brute_cap, a.tolerance};
  std::vector<OutputRecord> records;
  bool agree = true;
  std::optional<double> max_discrepancy;
  bool fell_back = false;
  if (g.exact()) {
    const MethodReport report = crosscheck(RunQuery{exact_spec(a.n, a.p), a.r, Method::Auto}, options);
    agree = report.agree;
    for (const auto& [method, value] : report.values) {
      records.push_back({a.n, a.r, a.p, std::string(method_name(method)), value.to_string(),
                         value.to_decimal(g.digits), g.no_timing ? 0 : report.timings_ns.at(method)});
    }
  } else {
    const FloatMethodReport report =
        crosscheck(FloatRunQuery{FloatTrialSpec(a.n, parse_float_p(a.p)), a.r, Method::Auto}, options);
    agree = report.agree;
    max_discrepancy = report.max_discrepancy;
    fell_back = report.uspensky_fell_back;
    for (const auto& [method, value] : report.values) {
      records.push_back({a.n, a.r, a.p, std::string(method_name(method)), std::nullopt,
                         format_double(value, g.digits), g.no_timing ? 0 : report.timings_ns.at(method)});
    }
  }

  switch (g.output_format()) {
    case Format::Json: {
      std::ostringstream body;
      write_records(body, records, Format::Json, true);
      ordered_json j;
      j["n"] = a.n;
      j["r"] = a.r;
      j["p"] = a.p;
      j["mode"] = g.mode;
      j["records"] = ordered_json::parse(body.str());
      j["agree"] = agree;
      if (max_discrepancy) {
        j["max_discrepancy"] = *max_discrepancy;
        j["uspensky_fallback"] = fell_back;
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      write_records(out, records, Format::Csv, true);
      break;
    case Format::Plain:
      write_records(out, records, Format::Plain, true);
      out << "agree: " << (agree ? "true" : "false") << '\n';
      if (max_discrepancy) {
        out << "max_discrepancy: " << format_double(*max_discrepancy, 3) << '\n';
        if (fell_back) out << "uspensky: compensated error estimate too large, used recurrence\n";
      }
      break;
  }
  return agree ? kSuccess : kDisagreement;
}

struct TableArgs {
  std::string n_range;
  std::string r_range;
  std::string r_all;
  std::string p;
  std::string method = "auto";
  unsigned brute_cap = kDefaultBruteForceCap;
};

int cmd_table(const GlobalOptions& g, const TableArgs& a, std::ostream& out) {
  const auto [n_lo, n_hi] = parse_range(a.n_range, "--n-range");
  const bool all_r = a.r_all == "all" || a.r_range == "all";
  if (!all_r && a.r_range.empty()) throw UsageError("table needs --r-range C..D or --r all");
  if (!a.r_all.empty() && a.r_all != "all") throw UsageError("--r only accepts 'all'");
  std::uint64_t r_lo = 1;
  std::uint64_t r_hi = 0;
  if (!all_r) std::tie(r_lo, r_hi) = parse_range(a.r_range, "--r-range");
  if (r_lo == 0) throw UsageError("--r-range must start at 1 or above");
  const Method method = method_from_flag(a.method);

  std::vector<OutputRecord> records;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    const std::uint64_t hi = all_r ? n : r_hi;
    for (std::uint64_t r = r_lo; r <= hi; ++r) records.push_back(evaluate_record(g, n, r, a.p, method, a.brute_cap));
  }
  if (records.empty()) throw UsageError("table has no (n, r) pairs");
  write_records(out, records, g.output_format(), true);
  return kSuccess;
}

struct PmfArgs {
  std::uint64_t n = 0;
  std::string p;
  bool expectation = false;
  std::string quantile;
  int workers = 0;
};

int cmd_pmf(const GlobalOptions& g, const PmfArgs& a, std::ostream& out) {
  struct Row {
    std::string k;
    std::string exact;
    std::string decimal;
  };
  std::vector<Row> rows;
  std::optional<Row> mean;
  std::optional<std::uint64_t> q;

  if (g.exact()) {
    const RunDistribution dist = pmf_of_longest_run(exact_spec(a.n, a.p), a.workers);
    for (std::size_t k = 0; k < dist.pmf().size(); ++k) {
      rows.push_back({std::to_string(k), dist.pmf()[k].to_string(), dist.pmf()[k].to_decimal(g.digits)});
    }
    if (a.expectation) {
      const Rational e = expectation(dist);
      mean = Row{"expectation", e.to_string(), e.to_decimal(g.digits)};
    }
    if (!a.quantile.empty()) {
      const Rational alpha = parse_exact_p(a.quantile);
      if (alpha < Rational(0) || alpha > Rational(1)) throw UsageError("--quantile must lie in [0, 1]");
      q = quantile(dist, alpha);
    }
  } else {
    const FloatTrialSpec spec(a.n, parse_float_p(a.p));
    std::vector<double> tails(a.n + 2, 0.0);
    tails[0] = 1.0;
    for (std::uint64_t r = 1; r <= a.n; ++r) tails[r] = y_recurrence(spec, r);
    double weighted = 0.0;
    for (std::uint64_t k = 0; k <= a.n; ++k) {
      const double mass = tails[k] - tails[k + 1];
      weighted += static_cast<double>(k) * mass;
      rows.push_back({std::to_string(k), "", format_double(mass, g.digits)});
    }
    if (a.expectation) mean = Row{"expectation", "", format_double(weighted, g.digits)};
    if (!a.quantile.empty()) {
      const double alpha = parse_float_p(a.quantile);
      std::uint64_t k = 0;
      while (k < a.n && 1.0 - tails[k + 1] < alpha) ++k;
      q = k;
    }
  }

  switch (g.output_format()) {
    case Format::Json: {
      ordered_json j;
      j["n"] = a.n;
      j["p"] = a.p;
      j["mode"] = g.mode;
      ordered_json pmf = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json e;
        e["k"] = std::stoull(row.k);
        if (g.exact()) e["value_exact"] = row.exact;
        e["value_decimal"] = row.decimal;
        pmf.push_back(e);
      }
      j["pmf"] = pmf;
      if (mean) {
        ordered_json e;
        if (g.exact()) e["value_exact"] = mean->exact;
        e["value_decimal"] = mean->decimal;
        j["expectation"] = e;
      }
      if (q) j["quantile"] = {{"alpha", a.quantile}, {"k", *q}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "k,value_exact,value_decimal\n";
      for (const auto& row : rows) out << row.k << ',' << row.exact << ',' << row.decimal << '\n';
      if (mean) out << mean->k << ',' << mean->exact << ',' << mean->decimal << '\n';
      if (q) out << "quantile(" << a.quantile << ")," << *q << ',' << *q << '\n';
      break;
    case Format::Plain: {
      std::size_t w0 = std::string("expectation").size();
      std::size_t w1 = std::string("value_exact").size();
      for (const auto& row : rows) w1 = std::max(w1, row.exact.size());
      if (mean) w1 = std::max(w1, mean->exact.size());
      auto emit = [&](const Row& row) {
        out << row.k << std::string(w0 - std::min(w0, row.k.size()), ' ') << "  " << row.exact
            << std::string(w1 - std::min(w1, row.exact.size()), ' ') << "  " << row.decimal << '\n';
      };
      emit({"k", "value_exact", "value_decimal"});
      for (const auto& row : rows) emit(row);
      if (mean) emit(*mean);
      if (q) out << "quantile(" << a.quantile << "): " << *q << '\n';
      break;
    }
  }
  return kSuccess;
}

struct McArgs {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::string p;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 1U << 16;
  int workers = 0;
  std::uint64_t exact_limit = 100'000;
};

int cmd_mc(const GlobalOptions& g, const McArgs& a, std::ostream& out) {
  require_run_length(a.r);
  if (a.samples == 0) throw UsageError("--samples must be positive");
  if (a.chunk_size == 0) throw UsageError("--chunk-size must be positive");
  const FloatTrialSpec spec(a.n, parse_float_p(a.p));
  const McConfig cfg{a.samples, a.seed, a.chunk_size, a.workers};
  const McEstimate est = monte_carlo_y(spec, a.r, cfg);

  std::optional<Rational> exact;
  std::optional<double> deviation;
  if (a.n <= a.exact_limit) {
    exact = y_recurrence(exact_spec(a.n, a.p), a.r);
    const double diff = est.estimate - exact->to_double();
    if (est.std_error > 0.0) {
      deviation = diff / est.std_error;
    } else {
      deviation = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
  }

  const std::string estimate = format_double(est.estimate, g.digits);
  const std::string std_error = format_double(est.std_error, g.digits);
  switch (g.output_format()) {
    case Format::Json: {
      ordered_json j;
      j["n"] = a.n;
      j["r"] = a.r;
      j["p"] = a.p;
      j["samples"] = est.samples;
      j["seed"] = a.seed;
      j["chunk_size"] = a.chunk_size;
      j["hits"] = est.hits;
      j["estimate"] = est.estimate;
      j["std_error"] = est.std_error;
      if (exact) {
        j["value_exact"] = exact->to_string();
        j["value_decimal"] = exact->to_decimal(g.digits);
        j["deviation_se"] = *deviation;
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "n,r,p,samples,seed,chunk_size,hits,estimate,std_error,value_exact,value_decimal,deviation_se\n";
      out << a.n << ',' << a.r << ',' << a.p << ',' << est.samples << ',' << a.seed << ',' << a.chunk_size << ','
          << est.hits << ',' << estimate << ',' << std_error << ',' << (exact ? exact->to_string() : "") << ','
          << (exact ? exact->to_decimal(g.digits) : "") << ',' << (deviation ? format_double(*deviation, 4) : "")
          << '\n';
      break;
    case Format::Plain:
      out << "estimate:   " << estimate << "  (" << est.hits << " of " << est.samples << ")\n";
      out << "std_error:  " << std_error << '\n';
      if (exact) {
        out << "exact:      " << exact->to_decimal(g.digits) << '\n';
        out << "deviation:  " << format_double(*deviation, 4) << " std errors\n";
      }
      break;
  }
  return kSuccess;
}

struct BenchArgs {
  std::string n_list;
  std::string r_policy = "half";
  std::string p;
  int repeats = 5;
  unsigned brute_cap = kDefaultBruteForceCap;
  double tolerance = 1e-9;
};

std::uint64_t run_length_for(const std::string& policy, std::uint64_t n) {
  if (policy == "half") return std::max<std::uint64_t>(1, (n + 1) / 2);
  if (policy == "sqrt") {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return std::max<std::uint64_t>(1, r);
  }
  if (policy.rfind("fixed:", 0) == 0) {
    try {
      std::size_t used = 0;
      const auto r = std::stoull(policy.substr(6), &used);
      if (used == policy.size() - 6 && r >= 1) return r;
    } catch (const std::exception&) {
    }
  }
  throw UsageError("--r-policy must be half, sqrt or fixed:K (K >= 1), got '" + policy + "'");
}

std::vector<std::uint64_t> parse_n_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--n-list expects comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("--n-list is empty");
  return out;
}

int cmd_bench(const GlobalOptions& g, const BenchArgs& a, std::ostream& out) {
  if (a.repeats < 1) throw UsageError("--repeat must be at least 1");
  const auto ns = parse_n_list(a.n_list);
  struct Row {
    std::uint64_t n, r;
    std::string method;
    std::int64_t median_ns;
    bool agree;
  };
  std::vector<Row> rows;
  bool all_agree = true;

  for (const auto n : ns) {
    const std::uint64_t r = run_length_for(a.r_policy, n);
    std::vector<std::pair<Method, std::int64_t>> timings;
    std::vector<Rational> exact_values;
    std::vector<double> float_values;
    for (const Method m : methods_in_domain(n, r, a.brute_cap)) {
      std::vector<std::int64_t> samples;
      for (int rep = 0; rep < a.repeats; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        if (g.exact()) {
          const TrialSpec spec = exact_spec(n, a.p);
          Rational v = m == Method::BruteForce ? brute_force_y(spec, r, a.brute_cap) : y_evaluate(RunQuery{spec, r, m});
          samples.push_back(elapsed_since(start));
          if (rep == 0) exact_values.push_back(std::move(v));
        } else {
          const FloatTrialSpec spec(n, parse_float_p(a.p));
          const double v =
              m == Method::BruteForce ? brute_force_y(spec, r, a.brute_cap) : y_evaluate(FloatRunQuery{spec, r, m});
          samples.push_back(elapsed_since(start));
          if (rep == 0) float_values.push_back(v);
        }
      }
      std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
      timings.emplace_back(m, samples[samples.size() / 2]);
    }
    bool agree = true;
    if (g.exact()) {
      agree = std::all_of(exact_values.begin(), exact_values.end(),
                          [&](const Rational& v) { return v == exact_values.front(); });
    } else {
      for (const double v : float_values) agree = agree && relative_difference(v, float_values.front()) <= a.tolerance;
    }
    all_agree = all_agree && agree;
    for (const auto& [m, t] : timings) rows.push_back({n, r, std::string(method_name(m)), g.no_timing ? 0 : t, agree});
  }

  if (g.output_format() == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json j;
      j["n"] = row.n;
      j["r"] = row.r;
      j["p"] = a.p;
      j["method"] = row.method;
      j["median_ns"] = row.median_ns;
      j["repeats"] = a.repeats;
      j["agree"] = row.agree;
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "n,r,p,method,median_ns,repeats,agree\n";
    for (const auto& row : rows) {
      out << row.n << ',' << row.r << ',' << a.p << ',' << row.method << ',' << row.median_ns << ',' << a.repeats
          << ',' << (row.agree ? "true" : "false") << '\n';
    }
  }
  return all_agree ? kSuccess : kDisagreement;
}

template <typename T>
void add_common_query(CLI::App* sub, T& args) {
  sub->add_option("--n", args.n, "Number of trials")->required();
  sub->add_option("--r", args.r, "Run length threshold (>= 1)")->required();
  sub->add_option("--p", args.p, "Success probability: a/b, decimal, or integer")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact probabilities for the longest success run in Bernoulli trials", "runprob"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--mode", g.mode, "Arithmetic: exact rationals or 64-bit floats")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--digits", g.digits, "Significant digits for decimal output")->check(CLI::Range(1, 1000));
  app.add_flag("--no-timing", g.no_timing, "Report elapsed_ns as 0 for byte-stable output");

  ProbArgs prob;
  auto* prob_cmd = app.add_subcommand("prob", "Probability of a run of at least r successes");
  add_common_query(prob_cmd, prob);
  prob_cmd->add_option("--method", prob.method, "recurrence, uspensky, corollary, brute or auto")
      ->check(CLI::IsMember({"recurrence", "uspensky", "corollary", "brute", "auto"}));
  prob_cmd->add_option("--brute-cap", prob.brute_cap, "Largest n allowed for brute force");

  CrosscheckArgs cc;
  auto* cc_cmd = app.add_subcommand("crosscheck", "Evaluate every applicable method and compare");
  add_common_query(cc_cmd, cc);
  cc_cmd->add_option("--brute-cap", cc.brute_cap, "Largest n allowed for brute force");
  cc_cmd->add_option("--tolerance", cc.tolerance, "Relative tolerance in float mode");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Probabilities over a grid of (n, r)");
  table_cmd->add_option("--n-range", table.n_range, "A..B")->required();
  table_cmd->add_option("--r-range", table.r_range, "C..D");
  table_cmd->add_option("--r", table.r_all, "'all' for r = 1..n");
  table_cmd->add_option("--p", table.p, "Success probability")->required();
  table_cmd->add_option("--method", table.method, "Method used for every cell")
      ->check(CLI::IsMember({"recurrence", "uspensky", "corollary", "brute", "auto"}));
  table_cmd->add_option("--brute-cap", table.brute_cap, "Largest n allowed for brute force");

  PmfArgs pmf;
  auto* pmf_cmd = app.add_subcommand("pmf", "Distribution of the longest run");
  pmf_cmd->add_option("--n", pmf.n, "Number of trials")->required();
  pmf_cmd->add_option("--p", pmf.p, "Success probability")->required();
  pmf_cmd->add_flag("--expectation", pmf.expectation, "Append E[L_n]");
  pmf_cmd->add_option("--quantile", pmf.quantile, "Report the smallest k with P(L_n <= k) >= alpha");
  pmf_cmd->add_option("--workers", pmf.workers, "Threads for the per-k sweeps (0 = default)");

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate with a fixed seed");
  add_common_query(mc_cmd, mc);
  mc_cmd->add_option("--samples", mc.samples, "Number of simulated sequences");
  mc_cmd->add_option("--seed", mc.seed, "Generator seed");
  mc_cmd->add_option("--chunk-size", mc.chunk_size, "Samples per independent substream");
  mc_cmd->add_option("--workers", mc.workers, "Threads (0 = default); does not change the estimate");
  mc_cmd->add_option("--exact-limit", mc.exact_limit, "Largest n for which the exact value is also printed");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Median wall time per method");
  bench_cmd->add_option("--n-list", bench.n_list, "Comma-separated n values")->required();
  bench_cmd->add_option("--r-policy", bench.r_policy, "half, sqrt or fixed:K");
  bench_cmd->add_option("--p", bench.p, "Success probability")->required();
  bench_cmd->add_option("--repeat", bench.repeats, "Timed repetitions per method (median reported)");
  bench_cmd->add_option("--brute-cap", bench.brute_cap, "Largest n allowed for brute force");
  bench_cmd->add_option("--tolerance", bench.tolerance, "Relative tolerance in float mode");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv{"runprob"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*prob_cmd) return cmd_prob(g, prob, out);
    if (*cc_cmd) return cmd_crosscheck(g, cc, out);
    if (*table_cmd) return cmd_table(g, table, out);
    if (*pmf_cmd) return cmd_pmf(g, pmf, out);
    if (*mc_cmd) return cmd_mc(g, mc, out);
    if (*bench_cmd) return cmd_bench(g, bench, out);
  } catch (const MethodDomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const CapExceededError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace runprob::cli
